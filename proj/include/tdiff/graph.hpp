#pragma once

#include <istream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdiff/dense.hpp"

namespace tdiff {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneratePartition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undirected graph, symmetric nonnegative weights, zero diagonal.
/// Immutable after construction; unweighted graphs store literal 1.0.
class Graph {
  public:
    Graph() = default;
    Graph(int n, bool weighted) : adj_(n), weighted_(weighted) {}
    Graph(SymMat m, bool weighted) : adj_(std::move(m)), weighted_(weighted) {}

    int n() const { return adj_.n; }
    bool weighted() const { return weighted_; }
    double weight(int i, int j) const { return adj_(i, j); }
    const SymMat& matrix() const { return adj_; }

    void setEdge(int i, int j, double w) {
        if (i == j) throw std::invalid_argument("self-loop");
        adj_.set_sym(i, j, w);
    }

    int edgeCount() const;
    double maxWeight() const;
    bool connected() const;

    // Neighbor lists (j, w) per node, built on demand for the simulators.
    std::vector<std::vector<std::pair<int, double>>> adjacencyLists() const;

  private:
    SymMat adj_;
    bool weighted_ = false;
};

/// Target node subset S; complement S' is everything else.
/// S must be nonempty; S = V is allowed (partition-based quantities then
/// fail with DegeneratePartition at the point of use).
class TargetSet {
  public:
    TargetSet(std::vector<int> members, int n);

    const std::vector<int>& members() const { return members_; }
    const std::vector<int>& complement() const { return complement_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int i) const { return mask_[i]; }
    const std::vector<char>& mask() const { return mask_; }

    static TargetSet load(std::istream& in, int n);

  private:
    std::vector<int> members_;
    std::vector<int> complement_;
    std::vector<char> mask_;
};

Graph loadEdgeList(std::istream& in, bool weighted);

std::vector<double> degreeVector(const Graph& g);

double normalizedCut(const Graph& g, const TargetSet& s);

/// Induced subgraph on S; index i of the result corresponds to s.members()[i]
/// (members are kept in sorted order).
Graph inducedSubgraphMatrix(const Graph& g, const TargetSet& s);

}  // namespace tdiff
