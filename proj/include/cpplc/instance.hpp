#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpplc {

using NodeId = int;
using EdgeId = int;

/// The depot is always node 1.
inline constexpr NodeId kDepot = 1;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge with a length and a positive demand to service.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double length = 0.0;
  double demand = 0.0;

  bool operator==(const Edge&) const = default;
};

/// A CPP-LC instance: an undirected multigraph over nodes 1..n, where every
/// edge must be serviced once by a vehicle of curb weight W that leaves the
/// depot carrying the total demand Q.
///
/// Edges are identified by their 1-based position in the edge list, never by
/// endpoint pair, so parallel edges are fine. Construction does not validate;
/// call validate() before handing an instance to the solvers.
class Instance {
 public:
  Instance() = default;
  Instance(int node_count, std::vector<Edge> edges, double curb_weight);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  double curb_weight() const { return curb_weight_; }
  double total_demand() const { return total_demand_; }

  /// 1-based edge lookup.
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id - 1)]; }
  std::span<const Edge> edges() const { return edges_; }

  bool operator==(const Instance& other) const {
    return node_count_ == other.node_count_ && edges_ == other.edges_ &&
           curb_weight_ == other.curb_weight_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  double curb_weight_ = 0.0;
  double total_demand_ = 0.0;
};

/// Every violated invariant, one message per violation. Empty means valid.
/// Messages start with a stable keyword: "self-loop", "node out of range",
/// "nonpositive demand", "negative length", "disconnected", "no edges",
/// "no nodes", "negative curb weight", "non-finite".
std::vector<std::string> validate(const Instance& instance);

/// Sum of all edge demands.
double total_demand(const Instance& instance);

}  // namespace cpplc
