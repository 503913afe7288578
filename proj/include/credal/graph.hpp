/**
 * Directed acyclic graphs over named nodes: ancestral relations and
 * d-separation.
 *
 * d-separation runs as a linear-time active-trail reachability over
 * (node, direction) states; the exhaustive path-blocking oracle lives in
 * the test suite and pins the semantics.
 */
#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

class Dag {
 public:
  Dag(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges)
      : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        if (nodes_[i] == nodes_[j]) throw DomainError("duplicate node '" + nodes_[i] + "'");

    parents_.resize(nodes_.size());
    children_.resize(nodes_.size());
    for (const auto& [from, to] : edges) {
      int a = index_of(from);
      int b = index_of(to);
      if (a < 0) throw DomainError("edge endpoint '" + from + "' is not a node");
      if (b < 0) throw DomainError("edge endpoint '" + to + "' is not a node");
      for (int c : children_[static_cast<std::size_t>(a)])
        if (c == b) throw DomainError("duplicate edge " + from + " -> " + to);
      children_[static_cast<std::size_t>(a)].push_back(b);
      parents_[static_cast<std::size_t>(b)].push_back(a);
      edges_.emplace_back(a, b);
    }
    check_acyclic();
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i] == name) return static_cast<int>(i);
    return -1;
  }

  const std::string& name_of(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }

  std::vector<std::string> parents(const std::string& node) const {
    return names_of(parents_[checked(node)]);
  }

  std::vector<std::string> children(const std::string& node) const {
    return names_of(children_[checked(node)]);
  }

  /// All nodes reachable from `node` along directed edges (excluding itself).
  std::vector<std::string> descendants(const std::string& node) const {
    std::vector<bool> seen(nodes_.size(), false);
    std::queue<int> frontier;
    frontier.push(static_cast<int>(checked(node)));
    std::vector<int> out;
    while (!frontier.empty()) {
      int n = frontier.front();
      frontier.pop();
      for (int c : children_[static_cast<std::size_t>(n)]) {
        if (seen[static_cast<std::size_t>(c)]) continue;
        seen[static_cast<std::size_t>(c)] = true;
        out.push_back(c);
        frontier.push(c);
      }
    }
    std::sort(out.begin(), out.end());
    return names_of(out);
  }

  /// nodes \ ({node} ∪ descendants(node) ∪ parents(node)), in node order.
  std::vector<std::string> nondescendants_nonparents(const std::string& node) const {
    auto ex = exclusion_mask(node, /*include_parents=*/true);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (!ex[i]) out.push_back(nodes_[i]);
    return out;
  }

  /// nodes \ ({node} ∪ descendants(node)): parents plus nondescendants-nonparents.
  std::vector<std::string> nondescendants(const std::string& node) const {
    auto ex = exclusion_mask(node, /*include_parents=*/false);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (!ex[i]) out.push_back(nodes_[i]);
    return out;
  }

  /**
   * d-separation of X and Y by Z: true iff no active trail connects a node
   * of X to a node of Y given Z. Chains and forks are blocked by
   * conditioning; a collider is blocked unless it or one of its descendants
   * is conditioned on. X, Y, Z must be disjoint; X and Y nonempty.
   */
  bool d_separated(const std::vector<std::string>& x_set, const std::vector<std::string>& y_set,
                   const std::vector<std::string>& z_set) const {
    if (x_set.empty() || y_set.empty()) throw DomainError("d_separated: X and Y must be nonempty");
    std::set<int> xs = index_set(x_set), ys = index_set(y_set), zs = index_set(z_set);
    for (int i : xs)
      if (ys.count(i) || zs.count(i)) throw DomainError("d_separated: sets must be disjoint");
    for (int i : ys)
      if (zs.count(i)) throw DomainError("d_separated: sets must be disjoint");

    // Ancestors of Z (including Z): these open colliders.
    std::vector<bool> anc_z(nodes_.size(), false);
    {
      std::queue<int> frontier;
      for (int z : zs) {
        anc_z[static_cast<std::size_t>(z)] = true;
        frontier.push(z);
      }
      while (!frontier.empty()) {
        int n = frontier.front();
        frontier.pop();
        for (int p : parents_[static_cast<std::size_t>(n)]) {
          if (anc_z[static_cast<std::size_t>(p)]) continue;
          anc_z[static_cast<std::size_t>(p)] = true;
          frontier.push(p);
        }
      }
    }

    // States: (node, 0 = trail arrives from a child, 1 = from a parent).
    std::vector<std::array<bool, 2>> visited(nodes_.size(), {false, false});
    std::queue<std::pair<int, int>> frontier;
    for (int x : xs) frontier.emplace(x, 0);

    while (!frontier.empty()) {
      auto [n, dir] = frontier.front();
      frontier.pop();
      if (visited[static_cast<std::size_t>(n)][static_cast<std::size_t>(dir)]) continue;
      visited[static_cast<std::size_t>(n)][static_cast<std::size_t>(dir)] = true;

      bool in_z = zs.count(n) > 0;
      if (!in_z && ys.count(n)) return false;

      if (dir == 0) {  // arrived from a child (moving up)
        if (!in_z) {
          for (int p : parents_[static_cast<std::size_t>(n)]) frontier.emplace(p, 0);
          for (int c : children_[static_cast<std::size_t>(n)]) frontier.emplace(c, 1);
        }
      } else {  // arrived from a parent (moving down)
        if (!in_z)
          for (int c : children_[static_cast<std::size_t>(n)]) frontier.emplace(c, 1);
        if (anc_z[static_cast<std::size_t>(n)])
          for (int p : parents_[static_cast<std::size_t>(n)]) frontier.emplace(p, 0);
      }
    }
    return true;
  }

 private:
  std::size_t checked(const std::string& node) const {
    int i = index_of(node);
    if (i < 0) throw DomainError("'" + node + "' is not a node");
    return static_cast<std::size_t>(i);
  }

  std::vector<std::string> names_of(const std::vector<int>& idxs) const {
    std::vector<std::string> out;
    out.reserve(idxs.size());
    for (int i : idxs) out.push_back(nodes_[static_cast<std::size_t>(i)]);
    return out;
  }

  std::set<int> index_set(const std::vector<std::string>& names) const {
    std::set<int> out;
    for (const auto& n : names) {
      int i = index_of(n);
      if (i < 0) throw DomainError("'" + n + "' is not a node");
      if (!out.insert(i).second) throw DomainError("duplicate node '" + n + "' in set");
    }
    return out;
  }

  std::vector<bool> exclusion_mask(const std::string& node, bool include_parents) const {
    std::size_t idx = checked(node);
    std::vector<bool> ex(nodes_.size(), false);
    ex[idx] = true;
    for (const auto& d : descendants(nodes_[idx])) ex[checked(d)] = true;
    if (include_parents)
      for (int p : parents_[idx]) ex[static_cast<std::size_t>(p)] = true;
    return ex;
  }

  void check_acyclic() const {
    std::vector<int> indeg(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      indeg[i] = static_cast<int>(parents_[i].size());
    std::queue<int> ready;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (indeg[i] == 0) ready.push(static_cast<int>(i));
    std::size_t done = 0;
    while (!ready.empty()) {
      int n = ready.front();
      ready.pop();
      ++done;
      for (int c : children_[static_cast<std::size_t>(n)])
        if (--indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
    }
    if (done != nodes_.size()) throw CycleError("graph contains a directed cycle");
  }

  std::vector<std::string> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> children_;
};

}  // namespace credal
