#include "tdiff/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tdiff/rng.hpp"

namespace tdiff {

Graph barabasiAlbert(int n, int attach, std::uint64_t seed) {
    if (attach < 1 || attach >= n)
        throw std::invalid_argument("barabasiAlbert needs 1 <= attach < n");
    std::mt19937_64 rng = makeStream(seed, 0xba);

    Graph g(n, false);
    std::vector<int> degree(n, 0);
    // repeated-node list for degree-proportional sampling
    std::vector<int> pool;

    const int core = attach + 1;
    for (int i = 0; i < core && i < n; ++i)
        for (int j = i + 1; j < core; ++j) {
            g.setEdge(i, j, 1.0);
            ++degree[i];
            ++degree[j];
            pool.push_back(i);
            pool.push_back(j);
        }

    for (int v = core; v < n; ++v) {
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < attach) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            int cand = pool[pick(rng)];
            if (std::find(targets.begin(), targets.end(), cand) == targets.end())
                targets.push_back(cand);
        }
        for (int t : targets) {
            g.setEdge(v, t, 1.0);
            ++degree[v];
            ++degree[t];
            pool.push_back(v);
            pool.push_back(t);
        }
    }
    return g;
}

Graph wattsStrogatz(int n, int k, double p, std::uint64_t seed) {
    if (k % 2 != 0 || k >= n || k < 2)
        throw std::invalid_argument("wattsStrogatz needs even k with 2 <= k < n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("rewire probability in [0,1]");

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::mt19937_64 rng = makeStream(seed, 0x35 + attempt);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> pick(0, n - 1);

        Graph g(n, false);
        for (int i = 0; i < n; ++i)
            for (int d = 1; d <= k / 2; ++d) g.setEdge(i, (i + d) % n, 1.0);

        for (int i = 0; i < n; ++i)
            for (int d = 1; d <= k / 2; ++d) {
                int j = (i + d) % n;
                if (u(rng) >= p) continue;
                // rewire (i,j) to (i,t); keep it if no admissible target exists
                int t = pick(rng);
                int guard = 0;
                while ((t == i || g.weight(i, t) != 0.0) && guard < 16 * n) {
                    t = pick(rng);
                    ++guard;
                }
                if (t == i || g.weight(i, t) != 0.0) continue;
                g.setEdge(i, j, 0.0);
                g.setEdge(i, t, 1.0);
            }

        if (g.connected()) return g;
    }
    throw std::runtime_error("wattsStrogatz: could not produce a connected graph in 10 tries");
}

TargetSet percentileTarget(const Graph& g, double percentile, std::uint64_t) {
    if (percentile < 0.0 || percentile > 100.0)
        throw std::invalid_argument("percentile in [0,100]");
    auto d = degreeVector(g);
    std::vector<double> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    int rank = static_cast<int>(std::ceil(percentile / 100.0 * g.n())) - 1;
    rank = std::clamp(rank, 0, g.n() - 1);
    double targetDeg = sorted[rank];

    int center = -1;
    for (int i = 0; i < g.n(); ++i)
        if (d[i] == targetDeg) {
            center = i;
            break;
        }

    std::vector<int> members{center};
    for (int j = 0; j < g.n(); ++j)
        if (g.weight(center, j) != 0.0) members.push_back(j);
    return TargetSet(std::move(members), g.n());
}

}  // namespace tdiff
