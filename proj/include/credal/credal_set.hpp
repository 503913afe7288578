/**
 * Credal sets: finite vertex lists of joint densities over a shared scope,
 * with convex-hull semantics. Canonical form is hull-reduced (every listed
 * vertex is an extreme point) and sorted lexicographically by table entries,
 * so equal sets print identically across runs.
 *
 * Set comparison is hull equivalence (same_hull_as), never vertex-list
 * equality.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "credal/density.hpp"
#include "credal/errors.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

class CredalSet {
 public:
  /// Canonicalized set: vertices hull-reduced and sorted.
  static CredalSet canonical(Scope scope, std::vector<JointDensity> vertices) {
    check(scope, vertices);
    auto tables = reduce_to_extreme(to_tables(vertices));
    std::vector<JointDensity> out;
    out.reserve(tables.size());
    for (auto& t : tables) out.emplace_back(scope, std::move(t));
    return CredalSet(std::move(scope), std::move(out), true);
  }

  /// Vertex list kept exactly as given (raw strong extensions, oracles).
  static CredalSet raw(Scope scope, std::vector<JointDensity> vertices) {
    check(scope, vertices);
    return CredalSet(std::move(scope), std::move(vertices), false);
  }

  const Scope& scope() const { return scope_; }
  const std::vector<JointDensity>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_canonical() const { return canonical_; }

  CredalSet canonicalized() const {
    return canonical_ ? *this : canonical(scope_, vertices_);
  }

  std::vector<Vec> tables() const { return to_tables(vertices_); }

  /// min_p E_p[f] over the vertex list (correct for the hull: expectation
  /// is linear in p).
  Rat lower_expectation(const ConfigFn& f) const {
    bool first = true;
    Rat best(0);
    for (const auto& v : vertices_) {
      Rat e = v.expectation(f);
      if (first || e < best) {
        best = e;
        first = false;
      }
    }
    return best;
  }

  Rat upper_expectation(const ConfigFn& f) const {
    ConfigFn neg = [&f](const Config& c) { return Rat(-f(c)); };
    return Rat(-lower_expectation(neg));
  }

  Rat lower_prob(const Assignment& event) const {
    return lower_expectation(indicator(scope_, event));
  }

  Rat upper_prob(const Assignment& event) const {
    return upper_expectation(indicator(scope_, event));
  }

  /**
   * Bayes conditioning vertex by vertex: vertices giving the event zero
   * probability are dropped; the rest are renormalized on the event. The
   * result keeps the full scope (evidence variables fixed) and is
   * canonicalized. Throws ZeroEvidence when the event's upper probability
   * is zero.
   */
  CredalSet condition(const Assignment& evidence) const {
    std::vector<JointDensity> conditioned;
    conditioned.reserve(vertices_.size());
    for (const auto& v : vertices_) {
      if (auto c = v.conditional(evidence)) conditioned.push_back(std::move(*c));
    }
    if (conditioned.empty())
      throw ZeroEvidence("event " + evidence.str() + " has upper probability zero");
    return canonical(scope_, std::move(conditioned));
  }

  /// Marginal credal set onto the named variables, canonicalized.
  CredalSet marginalize(const std::vector<std::string>& keep) const {
    std::vector<JointDensity> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.marginal(keep));
    Scope out_scope = subscope(scope_, keep);
    return canonical(std::move(out_scope), std::move(out));
  }

  /**
   * Belief change with respect to Y: rewrite vertex `idx` as p(rest|Y)p(Y),
   * replace p(Y) by q, insert the modified density among the remaining
   * vertices, and take the canonical hull.
   */
  CredalSet belief_change(std::size_t idx, const std::vector<std::string>& y_vars,
                          const JointDensity& q) const {
    if (idx >= vertices_.size()) throw DomainError("belief_change: vertex index out of range");
    JointDensity changed = vertices_[idx].replace_marginal(y_vars, q);
    std::vector<JointDensity> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != idx) out.push_back(vertices_[i]);
    out.push_back(std::move(changed));
    return canonical(scope_, std::move(out));
  }

  /// Hull membership of a density over the same scope.
  bool contains(const JointDensity& p) const {
    return member_of_hull(p.reordered(scope_).table(), tables());
  }

  /// Hull equivalence (the equivalence reading of credal-set equality).
  bool same_hull_as(const CredalSet& other) const {
    if (scope_.size() != other.scope_.size()) return false;
    std::vector<Vec> theirs;
    theirs.reserve(other.size());
    for (const auto& v : other.vertices_) theirs.push_back(v.reordered(scope_).table());
    return same_hull(tables(), theirs);
  }

 private:
  CredalSet(Scope scope, std::vector<JointDensity> vertices, bool canonical)
      : scope_(std::move(scope)), vertices_(std::move(vertices)), canonical_(canonical) {}

  static void check(const Scope& scope, const std::vector<JointDensity>& vertices) {
    if (vertices.empty()) throw DomainError("credal set needs at least one vertex");
    for (const auto& v : vertices)
      if (!(v.scope() == scope)) throw DomainError("credal set vertices must share one scope");
  }

  static std::vector<Vec> to_tables(const std::vector<JointDensity>& vertices) {
    std::vector<Vec> tables;
    tables.reserve(vertices.size());
    for (const auto& v : vertices) tables.push_back(v.table());
    return tables;
  }

  Scope scope_;
  std::vector<JointDensity> vertices_;
  bool canonical_;
};

}  // namespace credal
