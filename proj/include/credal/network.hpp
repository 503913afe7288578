/**
 * Credal networks: a DAG whose nodes carry local credal sets of conditional
 * densities, one per parent configuration, given either as per-value
 * probability intervals or as an explicit vertex list.
 *
 * The strong extension is the convex hull of every joint that factorizes
 * over the DAG with each conditional selected from the local extreme
 * points. Selection enumeration is exact and capped; exceeding the cap is
 * an error carrying the exact count, never a silent truncation.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/density.hpp"
#include "credal/errors.hpp"
#include "credal/graph.hpp"
#include "credal/interval.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

/// Interval form of one local conditional: an interval per node value.
struct IntervalLocal {
  std::vector<Interval> bounds;
};

/// Explicit vertex form: each entry is a density over the node's values.
using VertexLocal = std::vector<std::vector<Rat>>;

using LocalSpec = std::variant<IntervalLocal, VertexLocal>;

/// The local credal set of one node: one spec per parent configuration,
/// indexed by the parent scope's configuration index.
struct LocalCredalSet {
  std::string node;
  std::vector<LocalSpec> per_config;
};

class CredalNetwork {
 public:
  CredalNetwork(Scope variables, Dag dag, std::vector<LocalCredalSet> locals)
      : vars_(std::move(variables)), dag_(std::move(dag)) {
    if (vars_.empty()) throw DomainError("network needs at least one variable");
    if (vars_.size() != dag_.node_count())
      throw DomainError("network: variable list and DAG nodes differ");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name() != dag_.nodes()[i])
        throw DomainError("network: variable order must match DAG node order");

    for (auto& l : locals) {
      if (scope_index(vars_, l.node) < 0)
        throw DomainError("local credal set for unknown node '" + l.node + "'");
      if (locals_.count(l.node)) throw DomainError("duplicate local credal set for '" + l.node + "'");
      locals_.emplace(l.node, std::move(l));
    }
    for (const auto& v : vars_) {
      auto it = locals_.find(v.name());
      if (it == locals_.end()) throw MissingCpt("node '" + v.name() + "' has no local credal set");
      validate_local(v, it->second);
    }
  }

  const Scope& variables() const { return vars_; }
  const Dag& dag() const { return dag_; }

  const Variable& variable(const std::string& name) const {
    int i = scope_index(vars_, name);
    if (i < 0) throw DomainError("'" + name + "' is not a network variable");
    return vars_[static_cast<std::size_t>(i)];
  }

  /// Parent variables of a node, in network variable order.
  Scope parent_scope(const std::string& node) const {
    return subscope(vars_, dag_.parents(node));
  }

  const LocalCredalSet& local(const std::string& node) const { return locals_.at(node); }

 private:
  void validate_local(const Variable& v, const LocalCredalSet& local) const {
    std::size_t nconfigs = config_count(parent_scope(v.name()));
    if (local.per_config.size() != nconfigs)
      throw DomainError("node '" + v.name() + "' needs " + std::to_string(nconfigs) +
                        " parent configurations, got " + std::to_string(local.per_config.size()));
    for (const auto& spec : local.per_config) {
      if (const auto* iv = std::get_if<IntervalLocal>(&spec)) {
        if (static_cast<int>(iv->bounds.size()) != v.cardinality())
          throw DomainError("node '" + v.name() + "': one interval per value required");
        Rat lo_sum(0), hi_sum(0);
        for (const auto& b : iv->bounds) {
          lo_sum += b.lo();
          hi_sum += b.hi();
        }
        if (lo_sum > 1 || hi_sum < 1)
          throw InfeasibleLocal("node '" + v.name() + "': interval system admits no density");
      } else {
        const auto& pts = std::get<VertexLocal>(spec);
        if (pts.empty()) throw DomainError("node '" + v.name() + "': empty local vertex list");
        for (const auto& p : pts) {
          if (static_cast<int>(p.size()) != v.cardinality())
            throw DomainError("node '" + v.name() + "': local vertex length mismatch");
          Rat sum(0);
          for (const auto& x : p) {
            if (x < 0) throw DomainError("node '" + v.name() + "': negative local vertex entry");
            sum += x;
          }
          if (sum != 1) throw DomainError("node '" + v.name() + "': local vertex does not sum to 1");
        }
      }
    }
  }

  Scope vars_;
  Dag dag_;
  std::map<std::string, LocalCredalSet> locals_;
};

/**
 * Extreme points of one local credal set: the stored list reduced for
 * vertex form, the box-constrained simplex enumerated for interval form.
 * Sorted and deduplicated either way.
 */
inline std::vector<std::vector<Rat>> local_vertices(const CredalNetwork& net,
                                                    const std::string& node,
                                                    std::size_t pa_config_index) {
  const auto& local = net.local(node);
  if (pa_config_index >= local.per_config.size())
    throw DomainError("parent configuration index out of range for '" + node + "'");
  const auto& spec = local.per_config[pa_config_index];
  if (const auto* iv = std::get_if<IntervalLocal>(&spec)) {
    int k = net.variable(node).cardinality();
    HRep h(k);
    for (int val = 0; val < k; ++val) {
      Vec up(static_cast<std::size_t>(k), Rat(0));
      up[static_cast<std::size_t>(val)] = 1;
      Vec down = up;
      for (auto& c : down) c = -c;
      h.add_le(std::move(up), iv->bounds[static_cast<std::size_t>(val)].hi());
      h.add_le(std::move(down), Rat(-iv->bounds[static_cast<std::size_t>(val)].lo()));
    }
    try {
      return enumerate_vertices(h);
    } catch (const Infeasible&) {
      throw InfeasibleLocal("node '" + node + "': interval system admits no density");
    }
  }
  return reduce_to_extreme(std::get<VertexLocal>(spec));
}

/**
 * A selection picks one local extreme point per (node, parent
 * configuration) slot. Slots run over nodes in network order, parent
 * configurations in index order.
 */
struct SelectionSpace {
  struct Slot {
    std::string node;
    std::size_t pa_config;
    std::vector<std::vector<Rat>> options;
  };
  std::vector<Slot> slots;

  BigInt total() const {
    BigInt t(1);
    for (const auto& s : slots) t *= BigInt(static_cast<unsigned long>(s.options.size()));
    return t;
  }
};

inline SelectionSpace selection_space(const CredalNetwork& net) {
  SelectionSpace space;
  for (const auto& v : net.variables()) {
    std::size_t nconfigs = config_count(net.parent_scope(v.name()));
    for (std::size_t c = 0; c < nconfigs; ++c)
      space.slots.push_back({v.name(), c, local_vertices(net, v.name(), c)});
  }
  return space;
}

/// Exact number of selections (products of local extreme-point choices).
inline BigInt selection_count(const CredalNetwork& net) { return selection_space(net).total(); }

using Selection = std::vector<std::size_t>;

/// The factorized joint for one selection: p(X) = prod_i p(X_i | pa(X_i)).
inline JointDensity product_density(const CredalNetwork& net, const SelectionSpace& space,
                                    const Selection& sel) {
  if (sel.size() != space.slots.size()) throw DomainError("selection length mismatch");
  const Scope& scope = net.variables();

  // Per node: its scope position, its parents' scope positions, and the
  // slot base index into the selection space.
  struct NodePlan {
    int pos;
    std::vector<int> parent_pos;
    Scope parent_scope;
    std::size_t slot_base;
  };
  std::vector<NodePlan> plans;
  std::size_t slot = 0;
  for (const auto& v : scope) {
    NodePlan plan;
    plan.pos = scope_index(scope, v.name());
    plan.parent_scope = net.parent_scope(v.name());
    for (const auto& p : plan.parent_scope) plan.parent_pos.push_back(scope_index(scope, p.name()));
    plan.slot_base = slot;
    slot += config_count(plan.parent_scope);
    plans.push_back(std::move(plan));
  }

  std::vector<Rat> table(config_count(scope), Rat(1));
  for (std::size_t i = 0; i < table.size(); ++i) {
    Config cfg = config_at(scope, i);
    for (const auto& plan : plans) {
      Config pa_cfg(plan.parent_scope.size());
      for (std::size_t k = 0; k < plan.parent_pos.size(); ++k)
        pa_cfg[k] = cfg[static_cast<std::size_t>(plan.parent_pos[k])];
      std::size_t slot_idx = plan.slot_base + config_index(plan.parent_scope, pa_cfg);
      const auto& chosen = space.slots[slot_idx].options[sel[slot_idx]];
      table[i] *= chosen[static_cast<std::size_t>(cfg[static_cast<std::size_t>(plan.pos)])];
      if (table[i] == 0) break;
    }
  }
  return JointDensity(scope, std::move(table));
}

inline JointDensity product_density(const CredalNetwork& net, const Selection& sel) {
  return product_density(net, selection_space(net), sel);
}

struct ExtensionOptions {
  bool reduce = true;
  std::uint64_t limit = 1'000'000;
};

/**
 * The strong extension: all product densities over selections of local
 * extreme points. Reduced (canonical) by default; with reduce = false the
 * raw selection-ordered list is returned, one density per selection.
 * Throws CombinationLimit with the exact count when the selection space
 * exceeds the limit.
 */
inline CredalSet strong_extension(const CredalNetwork& net, ExtensionOptions options = {}) {
  SelectionSpace space = selection_space(net);
  BigInt total = space.total();
  if (total > BigInt(options.limit))
    throw CombinationLimit(total.str(), options.limit);

  std::vector<JointDensity> vertices;
  vertices.reserve(static_cast<std::size_t>(total));
  Selection sel(space.slots.size(), 0);
  for (;;) {
    vertices.push_back(product_density(net, space, sel));
    std::size_t k = space.slots.size();
    while (k > 0) {
      --k;
      if (++sel[k] < space.slots[k].options.size()) break;
      sel[k] = 0;
      if (k == 0) {
        if (options.reduce) return CredalSet::canonical(net.variables(), std::move(vertices));
        return CredalSet::raw(net.variables(), std::move(vertices));
      }
    }
  }
}

/// Sub-credal-set of vertices satisfying `pred`, canonicalized.
inline CredalSet restrict_vertices(const CredalSet& k,
                                   const std::function<bool(const JointDensity&)>& pred) {
  std::vector<JointDensity> kept;
  for (const auto& v : k.vertices())
    if (pred(v)) kept.push_back(v);
  if (kept.empty()) throw EmptyRestriction("no vertex satisfies the predicate");
  return CredalSet::canonical(k.scope(), std::move(kept));
}

/// Convex hull of the set's vertices plus one more density, canonicalized.
inline CredalSet add_vertex(const CredalSet& k, const JointDensity& p) {
  std::vector<JointDensity> vertices = k.vertices();
  vertices.push_back(p.reordered(k.scope()));
  return CredalSet::canonical(k.scope(), std::move(vertices));
}

enum class Bound { Lower, Upper };

/**
 * Lower/upper conditional probability P(target | evidence) over the set.
 * Extrema of a ratio of linear functionals over a polytope are attained at
 * vertices, so the vertex scan is exact for the hull. Vertices giving the
 * evidence probability zero are skipped; if all do, throws ZeroEvidence.
 */
inline Rat query(const CredalSet& k, const Assignment& target, const Assignment& evidence,
                 Bound bound) {
  Assignment joint = target.merged_with(evidence);
  auto ev = resolve(k.scope(), evidence);
  auto both = resolve(k.scope(), joint);

  bool first = true;
  Rat best(0);
  for (const auto& v : k.vertices()) {
    Rat pe(0), pt(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.at(i) == 0) continue;
      Config c = config_at(k.scope(), i);
      if (matches(c, ev)) {
        pe += v.at(i);
        if (matches(c, both)) pt += v.at(i);
      }
    }
    if (pe == 0) continue;
    Rat ratio = pt / pe;
    if (first || (bound == Bound::Lower ? ratio < best : ratio > best)) {
      best = ratio;
      first = false;
    }
  }
  if (first) throw ZeroEvidence("event " + evidence.str() + " has upper probability zero");
  return best;
}

inline Rat query(const CredalNetwork& net, const Assignment& target, const Assignment& evidence,
                 Bound bound, ExtensionOptions options = {}) {
  // The raw vertex list gives the same extrema as the reduced hull.
  options.reduce = false;
  return query(strong_extension(net, options), target, evidence, bound);
}

}  // namespace credal
