/**
 * Independent natural extension for two binary variables with interval
 * marginals: the largest joint credal set in which every marginal and
 * conditional probability of each variable stays inside its interval, with
 * the bounds attained. Built as a conditional-interval constraint polytope
 * over the four-entry joint table and enumerated exactly.
 *
 * Scope is frozen at two binary variables; anything larger fails loudly
 * (already the four-node chain's extension runs into millions of extreme
 * points, far past desk scale).
 */
#pragma once

#include <string>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/errors.hpp"
#include "credal/interval.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

struct TwoVarSpec {
  Interval x_interval;
  Interval y_interval;
};

/**
 * Constraint system over the table [p(x,y), p(x,yc), p(xc,y), p(xc,yc)]:
 * p(x), p(y), p(x|y), p(x|yc), p(y|x), p(y|xc) each inside its interval.
 * A conditional bound lo <= p(x|e) <= hi linearizes to
 * lo p(e) <= p(x,e) <= hi p(e), which holds vacuously when p(e) = 0.
 * Twelve inequality rows plus the implicit simplex rows.
 */
inline HRep conditional_interval_hrep(const TwoVarSpec& spec) {
  const Rat& lx = spec.x_interval.lo();
  const Rat& ux = spec.x_interval.hi();
  const Rat& ly = spec.y_interval.lo();
  const Rat& uy = spec.y_interval.hi();
  const Rat zero(0), one(1);

  HRep h(4);
  // p(x) = q0 + q1
  h.add_le({one, one, zero, zero}, ux);
  h.add_le({-one, -one, zero, zero}, Rat(-lx));
  // p(y) = q0 + q2
  h.add_le({one, zero, one, zero}, uy);
  h.add_le({-one, zero, -one, zero}, Rat(-ly));
  // lx (q0 + q2) <= q0 <= ux (q0 + q2)        p(x|y)
  h.add_le({lx - 1, zero, lx, zero}, zero);
  h.add_le({1 - ux, zero, -ux, zero}, zero);
  // lx (q1 + q3) <= q1 <= ux (q1 + q3)        p(x|yc)
  h.add_le({zero, lx - 1, zero, lx}, zero);
  h.add_le({zero, 1 - ux, zero, -ux}, zero);
  // ly (q0 + q1) <= q0 <= uy (q0 + q1)        p(y|x)
  h.add_le({ly - 1, ly, zero, zero}, zero);
  h.add_le({1 - uy, -uy, zero, zero}, zero);
  // ly (q2 + q3) <= q2 <= uy (q2 + q3)        p(y|xc)
  h.add_le({zero, zero, ly - 1, ly}, zero);
  h.add_le({zero, zero, 1 - uy, -uy}, zero);

  if (!is_feasible(h)) throw InfeasibleSpec("two-variable marginal specification is infeasible");
  return h;
}

/**
 * The independent natural extension of two binary variables with the given
 * marginal intervals, as a canonical credal set over scope [X, Y].
 */
inline CredalSet independent_natural_extension_2(const TwoVarSpec& spec,
                                                 const Variable& x = Variable("X", {"x", "xc"}),
                                                 const Variable& y = Variable("Y", {"y", "yc"})) {
  if (x.cardinality() != 2 || y.cardinality() != 2)
    throw UnsupportedScale("independent natural extension is frozen at two binary variables");
  Scope scope{x, y};
  std::vector<Vec> tables;
  try {
    tables = enumerate_vertices(conditional_interval_hrep(spec));
  } catch (const Infeasible&) {
    throw InfeasibleSpec("two-variable marginal specification is infeasible");
  }
  std::vector<JointDensity> vertices;
  vertices.reserve(tables.size());
  for (auto& t : tables) vertices.emplace_back(scope, std::move(t));
  return CredalSet::canonical(std::move(scope), std::move(vertices));
}

/**
 * General entry point guarding the frozen scale: accepts exactly two binary
 * variables with one marginal interval each, rejects anything else.
 */
inline CredalSet independent_natural_extension(const Scope& scope,
                                               const std::vector<Interval>& marginals) {
  if (scope.size() != 2 || marginals.size() != 2)
    throw UnsupportedScale("independent natural extension supports exactly two variables");
  if (scope[0].cardinality() != 2 || scope[1].cardinality() != 2)
    throw UnsupportedScale("independent natural extension supports binary variables only");
  return independent_natural_extension_2(TwoVarSpec{marginals[0], marginals[1]}, scope[0], scope[1]);
}

}  // namespace credal
