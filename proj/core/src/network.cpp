#include "asdn/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace asdn {

namespace {

bool is_connected(const std::vector<std::vector<NodeIndex>>& adj) {
  if (adj.empty()) return true;
  std::vector<bool> seen(adj.size(), false);
  std::queue<NodeIndex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeIndex k = frontier.front();
    frontier.pop();
    for (NodeIndex j : adj[k]) {
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == adj.size();
}

}  // namespace

Topology Topology::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  if (node_count == 0) throw TopologyError("topology needs at least one node");
  std::vector<std::vector<NodeIndex>> adj(node_count);
  for (NodeIndex k = 0; k < node_count; ++k) adj[k].push_back(k);
  for (const auto& [j, k] : edges) {
    if (j >= node_count || k >= node_count) {
      throw TopologyError("edge (" + std::to_string(j) + ", " + std::to_string(k) +
                          ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (j == k) continue;
    adj[j].push_back(k);
    adj[k].push_back(j);
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  if (!is_connected(adj)) throw TopologyError("graph is not connected");
  Topology t;
  t.neighbors_ = std::move(adj);
  return t;
}

bool Topology::linked(NodeIndex j, NodeIndex k) const { return slot(j, k) != npos; }

std::size_t Topology::slot(NodeIndex j, NodeIndex k) const {
  const auto& n = neighbors_.at(k);
  const auto it = std::lower_bound(n.begin(), n.end(), j);
  if (it == n.end() || *it != j) return npos;
  return static_cast<std::size_t>(it - n.begin());
}

std::vector<Edge> Topology::edges() const {
  std::vector<Edge> out;
  for (NodeIndex k = 0; k < size(); ++k) {
    for (NodeIndex j : neighbors_[k]) {
      if (k < j) out.emplace_back(k, j);
    }
  }
  return out;
}

std::size_t Topology::directed_link_count() const {
  std::size_t total = 0;
  for (const auto& n : neighbors_) total += n.size() - 1;
  return total;
}

Topology build_random_geometric(std::size_t node_count, double radius, Seed seed,
                                int max_attempts) {
  if (node_count == 0) throw TopologyError("topology needs at least one node");
  if (!(radius > 0.0)) throw TopologyError("radius must be positive");
  const double r2 = radius * radius;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(node_count), y(node_count);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Engine eng = make_engine({seed, static_cast<std::uint64_t>(attempt), kNetworkStream,
                              StreamRole::topology});
    for (std::size_t i = 0; i < node_count; ++i) {
      x[i] = unit(eng);
      y[i] = unit(eng);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < node_count; ++i) {
      for (std::size_t j = i + 1; j < node_count; ++j) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
      }
    }
    try {
      return Topology::from_edges(node_count, edges);
    } catch (const TopologyError&) {
      // disconnected draw, try again
    }
  }
  throw TopologyError("cannot produce connected graph with radius " + std::to_string(radius) +
                      " after " + std::to_string(max_attempts) + " draws");
}

CombinationMatrix::CombinationMatrix(const Topology& topology,
                                     std::vector<std::vector<double>> columns)
    : columns_(std::move(columns)) {
  if (columns_.size() != topology.size()) {
    throw std::invalid_argument("combination matrix: column count mismatch");
  }
  support_.resize(topology.size());
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    const auto n = topology.neighbors(k);
    if (columns_[k].size() != n.size()) {
      throw std::invalid_argument("combination matrix: column " + std::to_string(k) +
                                  " does not match neighborhood size");
    }
    support_[k].assign(n.begin(), n.end());
  }
}

double CombinationMatrix::weight(NodeIndex j, NodeIndex k) const {
  const auto& n = support_.at(k);
  const auto it = std::lower_bound(n.begin(), n.end(), j);
  if (it == n.end() || *it != j) return 0.0;
  return columns_[k][static_cast<std::size_t>(it - n.begin())];
}

CombinationMatrix uniform_weights(const Topology& topology) {
  std::vector<std::vector<double>> cols(topology.size());
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    const double w = 1.0 / static_cast<double>(topology.degree(k));
    cols[k].assign(topology.degree(k), w);
  }
  return CombinationMatrix(topology, std::move(cols));
}

CombinationMatrix metropolis_weights(const Topology& topology) {
  std::vector<std::vector<double>> cols(topology.size());
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    const auto n = topology.neighbors(k);
    cols[k].assign(n.size(), 0.0);
    double off = 0.0;
    std::size_t self = 0;
    for (std::size_t s = 0; s < n.size(); ++s) {
      if (n[s] == k) {
        self = s;
        continue;
      }
      const double w =
          1.0 / static_cast<double>(std::max(topology.degree(k), topology.degree(n[s])));
      cols[k][s] = w;
      off += w;
    }
    cols[k][self] = 1.0 - off;
  }
  return CombinationMatrix(topology, std::move(cols));
}

CombinationMatrix self_weights(const Topology& topology) {
  std::vector<std::vector<double>> cols(topology.size());
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    cols[k].assign(topology.degree(k), 0.0);
    cols[k][topology.self_slot(k)] = 1.0;
  }
  return CombinationMatrix(topology, std::move(cols));
}

void write_edge_list(std::ostream& out, const Topology& topology) {
  out << topology.size() << '\n';
  for (const auto& [j, k] : topology.edges()) out << j << ' ' << k << '\n';
}

Topology read_edge_list(std::istream& in) {
  std::string line;
  std::size_t node_count = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long v = 0;
      if (!(fields >> v) || v <= 0) {
        throw TopologyError("edge list line " + std::to_string(line_no) +
                            ": expected positive node count");
      }
      node_count = static_cast<std::size_t>(v);
      have_header = true;
      continue;
    }
    long long j = -1, k = -1;
    if (!(fields >> j >> k) || j < 0 || k < 0) {
      throw TopologyError("edge list line " + std::to_string(line_no) +
                          ": expected two non-negative node indices");
    }
    edges.emplace_back(static_cast<NodeIndex>(j), static_cast<NodeIndex>(k));
  }
  if (!have_header) throw TopologyError("edge list is empty");
  return Topology::from_edges(node_count, edges);
}

Topology load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Topology& topology) {
  std::ofstream out(path);
  if (!out) throw TopologyError("cannot write edge list '" + path + "'");
  write_edge_list(out, topology);
}

}  // namespace asdn
