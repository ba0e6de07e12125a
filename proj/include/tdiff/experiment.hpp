#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdiff/baselines.hpp"
#include "tdiff/diffusion.hpp"
#include "tdiff/discretize.hpp"
#include "tdiff/generators.hpp"
#include "tdiff/optimizer.hpp"

namespace tdiff {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key = value config; '#' starts a comment.
class Config {
  public:
    static Config parseFile(const std::string& path);
    static Config parse(std::istream& in, const std::string& path = "<stream>");

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    std::string str(const std::string& key) const;
    std::string str(const std::string& key, const std::string& dflt) const;
    double num(const std::string& key) const;
    double num(const std::string& key, double dflt) const;
    long long integer(const std::string& key) const;
    long long integer(const std::string& key, long long dflt) const;
    std::vector<double> numList(const std::string& key) const;
    std::vector<std::string> strList(const std::string& key) const;

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

  private:
    std::map<std::string, std::string> kv_;
    std::string path_;
    [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

struct ExperimentRow {
    double gamma;
    std::string method;
    double fracS_orig, fracS_mod;
    double fracSPrime_orig, fracSPrime_mod;
    double stderrS_orig, stderrS_mod;
    double stderrSPrime_orig, stderrSPrime_mod;
    double lambda1S_orig, lambda1S_mod;
    double budgetUsed;
    double wallTime;
};

struct WalkRow {
    std::string dynamics;  // rwr | pagerank
    std::string which;     // original | modified
    double gamma;
    double massS, massSPrime;
};

struct ExperimentOutput {
    std::vector<ExperimentRow> rows;
    std::vector<WalkRow> walkRows;
};

/// The full pipeline from the config: build/load graph and target set, then
/// for each gamma run the requested attack methods, discretize, and simulate
/// SIS on original and modified graphs with identical trial seeds.
ExperimentOutput runExperiment(const Config& cfg);

std::string experimentCsv(const std::vector<ExperimentRow>& rows, bool withWallTime = true);
std::string walkCsv(const std::vector<WalkRow>& rows);

/// Helpers shared by the CLI subcommands.
Graph graphFromConfig(const Config& cfg);
TargetSet targetFromConfig(const Config& cfg, const Graph& g);

}  // namespace tdiff
