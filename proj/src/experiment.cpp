#include "tdiff/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "tdiff/rng.hpp"

namespace tdiff {

Config Config::parseFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config");
    return parse(in, path);
}

Config Config::parse(std::istream& in, const std::string& path) {
    Config cfg;
    cfg.path_ = path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            // only whitespace allowed on a key-less line
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        cfg.kv_[key] = val;
    }
    return cfg;
}

void Config::fail(const std::string& key, const std::string& what) const {
    throw ConfigError(path_ + ": key '" + key + "': " + what);
}

std::string Config::str(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) fail(key, "missing");
    return it->second;
}

std::string Config::str(const std::string& key, const std::string& dflt) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? dflt : it->second;
}

double Config::num(const std::string& key) const {
    std::string v = str(key);
    try {
        std::size_t pos;
        double d = std::stod(v, &pos);
        if (pos != v.size()) fail(key, "not a number: " + v);
        return d;
    } catch (const std::logic_error&) {
        fail(key, "not a number: " + v);
    }
}

double Config::num(const std::string& key, double dflt) const {
    return has(key) ? num(key) : dflt;
}

long long Config::integer(const std::string& key) const {
    std::string v = str(key);
    try {
        std::size_t pos;
        long long d = std::stoll(v, &pos);
        if (pos != v.size()) fail(key, "not an integer: " + v);
        return d;
    } catch (const std::logic_error&) {
        fail(key, "not an integer: " + v);
    }
}

long long Config::integer(const std::string& key, long long dflt) const {
    return has(key) ? integer(key) : dflt;
}

std::vector<std::string> Config::strList(const std::string& key) const {
    std::vector<std::string> out;
    std::string v = str(key);
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<double> Config::numList(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : strList(key)) {
        try {
            out.push_back(std::stod(s));
        } catch (const std::logic_error&) {
            fail(key, "not a number: " + s);
        }
    }
    return out;
}

Graph graphFromConfig(const Config& cfg) {
    std::uint64_t seed = static_cast<std::uint64_t>(cfg.integer("seed", 1));
    std::string gen = cfg.str("generator", "");
    if (gen == "ba")
        return barabasiAlbert(static_cast<int>(cfg.integer("n")),
                              static_cast<int>(cfg.integer("attach", 5)), seed);
    if (gen == "ws")
        return wattsStrogatz(static_cast<int>(cfg.integer("n")),
                             static_cast<int>(cfg.integer("ws_k", 10)),
                             cfg.num("ws_p", 0.2), seed);
    if (!gen.empty()) throw ConfigError("unknown generator: " + gen);
    std::string path = cfg.str("graph");
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open edge list");
    return loadEdgeList(in, cfg.integer("weighted", 0) != 0);
}

TargetSet targetFromConfig(const Config& cfg, const Graph& g) {
    if (cfg.has("target")) {
        std::string path = cfg.str("target");
        std::ifstream in(path);
        if (!in) throw ConfigError(path + ": cannot open target set");
        return TargetSet::load(in, g.n());
    }
    double pct = cfg.num("target_percentile", 90.0);
    return percentileTarget(g, pct, static_cast<std::uint64_t>(cfg.integer("seed", 1)));
}

namespace {

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double lambda1OfSubgraph(const Graph& g, const TargetSet& s, const PowerConfig& pc) {
    Graph sub = inducedSubgraphMatrix(g, s);
    if (sub.matrix().max_abs() == 0.0) return 0.0;
    return powerIterate(sub.matrix(), pc.k, pc.tol, pc.seed).value;
}

}  // namespace

ExperimentOutput runExperiment(const Config& cfg) {
    Graph g = graphFromConfig(cfg);
    TargetSet s = targetFromConfig(cfg, g);
    std::uint64_t seed = static_cast<std::uint64_t>(cfg.integer("seed", 1));

    PowerConfig pc;
    pc.k = static_cast<int>(cfg.integer("power_k", kDefaultPowerK));
    pc.tol = cfg.num("power_tol", kDefaultPowerTol);
    pc.seed = seed;

    ObjectiveWeights w;
    w.a1 = cfg.num("alpha1", 1.0 / 3.0);
    w.a2 = cfg.num("alpha2", 1.0 / 3.0);
    w.a3 = cfg.num("alpha3", 1.0 / 3.0);

    SISParams sis;
    sis.beta = cfg.num("beta", 0.06);
    sis.delta = cfg.num("delta", 0.24);
    sis.steps = static_cast<int>(cfg.integer("sis_steps", 30));
    sis.trials = static_cast<int>(cfg.integer("trials", 2000));
    sis.seed = seed;

    std::vector<double> gammas = cfg.has("gammas") ? cfg.numList("gammas")
                                                   : std::vector<double>{0.5};
    std::vector<std::string> methods =
        cfg.has("methods") ? cfg.strList("methods") : std::vector<std::string>{"grad"};
    std::vector<std::string> walks =
        cfg.has("walks") ? cfg.strList("walks") : std::vector<std::string>{};

    double lambda1 = powerIterate(g.matrix(), pc.k, pc.tol, pc.seed).value;
    SimulationResult simOrig = simulateSIS(g, s, sis);
    double lamSOrig = lambda1OfSubgraph(g, s, pc);

    ExperimentOutput out;
    for (double gamma : gammas) {
        double epsilon = gamma * lambda1;
        for (const std::string& method : methods) {
            auto t0 = std::chrono::steady_clock::now();
            Graph modified = g;
            double budget = 0.0;
            if (epsilon > 0.0) {
                if (method == "grad") {
                    AttackConfig ac;
                    ac.epsilon = epsilon;
                    ac.steps = static_cast<int>(cfg.integer("attack_steps", 500));
                    ac.schedule = makeStepSchedule(
                        cfg.str("schedule", "constant") == "inverse-sqrt"
                            ? ScheduleKind::InverseSqrt
                            : ScheduleKind::Constant,
                        cfg.num("eta", 0.1));
                    ac.weights = w;
                    ac.powerK = pc.k;
                    ac.powerTol = pc.tol;
                    ac.seed = seed;
                    AttackResult res = attack(g, s, ac);
                    budget = res.budgetUsed;
                    if (g.weighted())
                        modified = rescaleWeighted(g, res, cfg.integer("integer_weights", 0) != 0);
                    else
                        modified = roundUnweighted(g, res, epsilon, pc);
                } else if (method == "deg" || method == "gel") {
                    BaselineConfig bc;
                    bc.epsilon = epsilon;
                    bc.powerK = pc.k;
                    bc.powerTol = pc.tol;
                    bc.seed = seed;
                    if (cfg.has("weighted_step")) bc.weightedStep = cfg.num("weighted_step");
                    AttackResult res = baselineAttack(
                        g, s, method == "deg" ? BaselineKind::Deg : BaselineKind::Gel, bc);
                    budget = res.budgetUsed;
                    modified = res.gTilde;
                } else {
                    throw ConfigError("unknown method: " + method);
                }
            }

            SimulationResult simMod = simulateSIS(modified, s, sis);

            ExperimentRow row;
            row.gamma = gamma;
            row.method = method;
            row.fracS_orig = simOrig.fracS;
            row.fracS_mod = simMod.fracS;
            row.fracSPrime_orig = simOrig.fracSPrime;
            row.fracSPrime_mod = simMod.fracSPrime;
            row.stderrS_orig = simOrig.stderrS;
            row.stderrS_mod = simMod.stderrS;
            row.stderrSPrime_orig = simOrig.stderrSPrime;
            row.stderrSPrime_mod = simMod.stderrSPrime;
            row.lambda1S_orig = lamSOrig;
            row.lambda1S_mod = lambda1OfSubgraph(modified, s, pc);
            row.budgetUsed = budget;
            row.wallTime = elapsed(t0);
            out.rows.push_back(row);

            for (const std::string& dyn : walks) {
                auto emit = [&](const Graph& which, const std::string& tag) {
                    WalkResult wr;
                    if (dyn == "rwr") {
                        // Appendix-style RWR: start node drawn from S'
                        std::mt19937_64 rng = makeStream(seed, 0x77);
                        const auto& comp = s.complement();
                        if (comp.empty()) return;
                        std::uniform_int_distribution<std::size_t> pick(0, comp.size() - 1);
                        wr = randomWalkRestart(which, s, cfg.num("rwr_c", 0.05),
                                               comp[pick(rng)]);
                    } else if (dyn == "pagerank") {
                        wr = pageRank(which, s, cfg.num("pr_c", 0.1));
                    } else {
                        throw ConfigError("unknown walk dynamics: " + dyn);
                    }
                    out.walkRows.push_back({dyn, tag, gamma, wr.massS, wr.massSPrime});
                };
                emit(g, "original");
                emit(modified, "modified");
            }
        }
    }
    return out;
}

std::string experimentCsv(const std::vector<ExperimentRow>& rows, bool withWallTime) {
    std::string csv =
        "gamma,method,fracS_orig,fracS_mod,fracSPrime_orig,fracSPrime_mod,"
        "stderrS_orig,stderrS_mod,stderrSPrime_orig,stderrSPrime_mod,"
        "lambda1S_orig,lambda1S_mod,budgetUsed";
    if (withWallTime) csv += ",wallTime";
    csv += "\n";
    for (const auto& r : rows) {
        csv += fmt(r.gamma) + "," + r.method + "," + fmt(r.fracS_orig) + "," +
               fmt(r.fracS_mod) + "," + fmt(r.fracSPrime_orig) + "," + fmt(r.fracSPrime_mod) +
               "," + fmt(r.stderrS_orig) + "," + fmt(r.stderrS_mod) + "," +
               fmt(r.stderrSPrime_orig) + "," + fmt(r.stderrSPrime_mod) + "," +
               fmt(r.lambda1S_orig) + "," + fmt(r.lambda1S_mod) + "," + fmt(r.budgetUsed);
        if (withWallTime) csv += "," + fmt(r.wallTime);
        csv += "\n";
    }
    return csv;
}

std::string walkCsv(const std::vector<WalkRow>& rows) {
    std::string csv = "dynamics,graph,gamma,massS,massSPrime\n";
    for (const auto& r : rows)
        csv += r.dynamics + "," + r.which + "," + fmt(r.gamma) + "," + fmt(r.massS) + "," +
               fmt(r.massSPrime) + "\n";
    return csv;
}

}  // namespace tdiff
