#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asdn/rng.hpp"

namespace asdn {

using NodeIndex = std::size_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected connected graph. Every neighborhood N_k is sorted and
/// contains k itself.
class Topology {
 public:
  /// Builds from undirected pairs (0-based). Self-pairs and duplicates are
  /// accepted and ignored; self-loops are always added. Throws TopologyError
  /// on out-of-range indices or a disconnected graph.
  static Topology from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t size() const { return neighbors_.size(); }
  std::span<const NodeIndex> neighbors(NodeIndex k) const { return neighbors_.at(k); }
  /// |N_k|, self included.
  std::size_t degree(NodeIndex k) const { return neighbors_.at(k).size(); }
  bool linked(NodeIndex j, NodeIndex k) const;
  /// Position of j inside N_k, or npos.
  std::size_t slot(NodeIndex j, NodeIndex k) const;
  std::size_t self_slot(NodeIndex k) const { return slot(k, k); }

  /// Undirected pairs j < k.
  std::vector<Edge> edges() const;
  /// Σ_k (|N_k| − 1): directed links excluding self.
  std::size_t directed_link_count() const;

  bool operator==(const Topology&) const = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::vector<NodeIndex>> neighbors_;
};

/// Nodes uniform in the unit square, linked when within `radius`. Redraws
/// (deterministically from `seed`) until connected; throws TopologyError
/// after `max_attempts` failures.
Topology build_random_geometric(std::size_t node_count, double radius, Seed seed,
                                int max_attempts = 1000);

/// Column-stochastic weights c_{jk}, stored per node aligned with N_k.
class CombinationMatrix {
 public:
  CombinationMatrix() = default;
  CombinationMatrix(const Topology& topology, std::vector<std::vector<double>> columns);

  std::size_t size() const { return columns_.size(); }
  /// Weights node k gives its neighbors, in N_k order.
  std::span<const double> column(NodeIndex k) const { return columns_.at(k); }
  std::span<double> column(NodeIndex k) { return columns_.at(k); }
  /// c_{jk}; zero when j is not a neighbor of k.
  double weight(NodeIndex j, NodeIndex k) const;

 private:
  std::vector<std::vector<NodeIndex>> support_;
  std::vector<std::vector<double>> columns_;
};

CombinationMatrix uniform_weights(const Topology& topology);
CombinationMatrix metropolis_weights(const Topology& topology);
/// c_{kk} = 1, everything else zero.
CombinationMatrix self_weights(const Topology& topology);

/// Plain-text edge list: first line V, then one "j k" pair per line, 0-based.
/// Blank lines and lines starting with '#' are skipped on input.
void write_edge_list(std::ostream& out, const Topology& topology);
Topology read_edge_list(std::istream& in);
Topology load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Topology& topology);

}  // namespace asdn
