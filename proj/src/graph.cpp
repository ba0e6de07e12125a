#include "tdiff/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace tdiff {

int Graph::edgeCount() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (adj_(i, j) != 0.0) ++c;
    return c;
}

double Graph::maxWeight() const {
    double m = 0.0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j) m = std::max(m, adj_(i, j));
    return m;
}

bool Graph::connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n(); ++v) {
            if (adj_(u, v) != 0.0 && !seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
        }
    }
    return cnt == n();
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacencyLists() const {
    std::vector<std::vector<std::pair<int, double>>> lists(n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j)
            if (adj_(i, j) != 0.0) lists[i].emplace_back(j, adj_(i, j));
    return lists;
}

TargetSet::TargetSet(std::vector<int> members, int n) {
    if (members.empty()) throw std::invalid_argument("target set must be nonempty");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    mask_.assign(n, 0);
    for (int i : members) {
        if (i < 0 || i >= n) throw std::invalid_argument("target node id out of range");
        mask_[i] = 1;
    }
    members_ = std::move(members);
    for (int i = 0; i < n; ++i)
        if (!mask_[i]) complement_.push_back(i);
}

TargetSet TargetSet::load(std::istream& in, int n) {
    std::vector<int> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int id;
        if (ls >> id) ids.push_back(id);
    }
    return TargetSet(std::move(ids), n);
}

Graph loadEdgeList(std::istream& in, bool weighted) {
    struct Edge {
        int u, v;
        double w;
    };
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    int maxId = -1;

    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank / comment-only line
        if (!(ls >> v)) fail("expected two node ids");
        double w = 1.0;
        if (weighted) {
            if (!(ls >> w)) w = 1.0;
        } else {
            double dummy;
            if (ls >> dummy) fail("unexpected weight on unweighted edge list");
        }
        std::string trailing;
        if (ls >> trailing) fail("trailing tokens");
        if (u < 0 || v < 0) fail("negative node id");
        if (u == v) fail("self-loop");
        if (w < 0) fail("negative weight");
        if (w == 0) fail("zero weight");
        auto key = std::minmax({static_cast<int>(u), static_cast<int>(v)});
        if (!seen.insert(key).second) fail("duplicate edge");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
        maxId = std::max(maxId, static_cast<int>(std::max(u, v)));
    }

    Graph g(maxId + 1, weighted);
    for (const auto& e : edges) g.setEdge(e.u, e.v, e.w);
    return g;
}

std::vector<double> degreeVector(const Graph& g) {
    const SymMat& a = g.matrix();
    std::vector<double> d(g.n(), 0.0);
    for (int i = 0; i < g.n(); ++i) {
        double s = 0.0;
        for (int j = 0; j < g.n(); ++j) s += a(i, j);
        d[i] = s;
    }
    return d;
}

double normalizedCut(const Graph& g, const TargetSet& s) {
    const SymMat& a = g.matrix();
    auto d = degreeVector(g);
    double cut = 0.0, volS = 0.0, volC = 0.0;
    for (int i : s.members()) volS += d[i];
    for (int i : s.complement()) volC += d[i];
    if (volS <= 0.0 || volC <= 0.0)
        throw DegeneratePartition("normalized cut needs positive volume on both sides");
    for (int i : s.members())
        for (int j : s.complement()) cut += a(i, j);
    return cut * (1.0 / volS + 1.0 / volC);
}

Graph inducedSubgraphMatrix(const Graph& g, const TargetSet& s) {
    const auto& mem = s.members();
    Graph sub(static_cast<int>(mem.size()), g.weighted());
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            double w = g.weight(mem[i], mem[j]);
            if (w != 0.0) sub.setEdge(static_cast<int>(i), static_cast<int>(j), w);
        }
    return sub;
}

void matvec(const SymMat& m, const std::vector<double>& x, std::vector<double>& y) {
    const int n = m.n;
    y.resize(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double* row = &m.v[static_cast<std::size_t>(i) * n];
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

void matvec_serial(const SymMat& m, const std::vector<double>& x, std::vector<double>& y) {
    const int n = m.n;
    y.resize(n);
    for (int i = 0; i < n; ++i) {
        const double* row = &m.v[static_cast<std::size_t>(i) * n];
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

}  // namespace tdiff
