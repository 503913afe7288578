/**
 * Exact convex geometry over probability-table coordinates.
 *
 * Everything here works on vectors of Rat and is exact: a two-phase primal
 * simplex (Dantzig entering rule with smallest-index tie-break, switching
 * permanently to Bland's rule after a degeneracy stall, so runs are
 * deterministic and cannot cycle), hull membership and redundancy removal by
 * LP feasibility, and vertex enumeration by incremental halfspace
 * intersection: start from the probability simplex's unit masses, cut with
 * one halfspace at a time, add the crossing point of every in/out pair, and
 * prune non-extreme points after each cut.
 *
 * An HRep is a constraint system over a table's coordinates. The simplex
 * rows (coordinates >= 0, coordinate sum = 1) are part of every system
 * implicitly and must not be repeated among the explicit rows.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

using Vec = std::vector<Rat>;

enum class Rel { LE, EQ };

struct Row {
  Vec coef;
  Rel rel;
  Rat rhs;
};

class HRep {
 public:
  explicit HRep(int dimension) : dim_(dimension) {
    if (dimension < 1) throw DomainError("HRep dimension must be positive");
  }

  HRep& add_le(Vec coef, Rat rhs) { return add(std::move(coef), Rel::LE, std::move(rhs)); }
  HRep& add_eq(Vec coef, Rat rhs) { return add(std::move(coef), Rel::EQ, std::move(rhs)); }

  int dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  HRep& add(Vec coef, Rel rel, Rat rhs) {
    if (static_cast<int>(coef.size()) != dim_)
      throw DomainError("HRep row length does not match dimension");
    rows_.push_back(Row{std::move(coef), rel, std::move(rhs)});
    return *this;
  }

  int dim_ = 0;
  std::vector<Row> rows_;
};

enum class LpDir { Min, Max };

struct LpResult {
  Rat optimum;
  Vec witness;
};

inline constexpr int kDefaultDimensionCap = 16;

namespace lp {

/**
 * Exact primal simplex for: minimize c.y subject to the given rows, y >= 0.
 * Returns the optimum and an optimal basic solution, or nullopt when the
 * system is infeasible. Throws on an unbounded objective (callers here
 * always pass bounded feasible regions).
 */
inline std::optional<std::pair<Rat, Vec>> minimize(const Vec& objective,
                                                   const std::vector<Row>& rows) {
  const std::size_t nvars = objective.size();
  const std::size_t nrows = rows.size();

  // Standard form A y' = b, b >= 0, with one slack per LE row and
  // artificials wherever no slack can seed the basis.
  std::size_t nslack = 0;
  for (const auto& r : rows)
    if (r.rel == Rel::LE) ++nslack;

  const std::size_t ncols_real = nvars + nslack;
  std::vector<Vec> tab(nrows, Vec(ncols_real, Rat(0)));
  Vec b(nrows, Rat(0));
  std::vector<int> basis(nrows, -1);

  std::size_t slack_at = nvars;
  for (std::size_t i = 0; i < nrows; ++i) {
    const Row& r = rows[i];
    if (r.coef.size() != nvars) throw DomainError("LP row length mismatch");
    for (std::size_t j = 0; j < nvars; ++j) tab[i][j] = r.coef[j];
    b[i] = r.rhs;
    std::size_t slack_col = 0;
    bool has_slack = false;
    if (r.rel == Rel::LE) {
      slack_col = slack_at++;
      tab[i][slack_col] = 1;
      has_slack = true;
    }
    if (b[i] < 0) {
      for (auto& x : tab[i]) x = -x;
      b[i] = -b[i];
    }
    if (has_slack && tab[i][slack_col] == 1) basis[i] = static_cast<int>(slack_col);
  }

  // Attach artificial columns where needed.
  std::vector<int> artificial_cols;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (basis[i] >= 0) continue;
    for (auto& row : tab) row.push_back(Rat(0));
    std::size_t col = tab[0].size() - 1;
    tab[i][col] = 1;
    basis[i] = static_cast<int>(col);
    artificial_cols.push_back(static_cast<int>(col));
  }
  const std::size_t ncols = tab.empty() ? ncols_real : tab[0].size();
  auto is_artificial = [&](int col) {
    return col >= static_cast<int>(ncols_real);
  };

  // Objective row invariant: for every feasible y, cost(y) = objval + obj.y,
  // and obj is zero on basic columns.
  Vec obj(ncols, Rat(0));
  Rat objval(0);
  auto load_objective = [&](const Vec& costs) {
    obj.assign(ncols, Rat(0));
    for (std::size_t j = 0; j < costs.size(); ++j) obj[j] = costs[j];
    objval = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
      int jb = basis[i];
      if (jb < 0 || obj[static_cast<std::size_t>(jb)] == 0) continue;
      Rat f = obj[static_cast<std::size_t>(jb)];
      for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * tab[i][j];
      objval += f * b[i];
    }
  };

  auto pivot = [&](std::size_t prow, std::size_t pcol) {
    Rat p = tab[prow][pcol];
    for (std::size_t j = 0; j < ncols; ++j) tab[prow][j] /= p;
    b[prow] /= p;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == prow || tab[i][pcol] == 0) continue;
      Rat f = tab[i][pcol];
      for (std::size_t j = 0; j < ncols; ++j) tab[i][j] -= f * tab[prow][j];
      b[i] -= f * b[prow];
    }
    if (obj[pcol] != 0) {
      Rat f = obj[pcol];
      for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * tab[prow][j];
      objval += f * b[prow];
    }
    basis[prow] = static_cast<int>(pcol);
  };

  // Runs the simplex loop on the current objective. `allowed(col)` filters
  // entering candidates (used to freeze artificial columns in phase 2).
  auto iterate = [&](auto allowed) {
    bool bland = false;
    int stall = 0;
    const int stall_limit = static_cast<int>(nrows + ncols) + 8;
    for (;;) {
      int enter = -1;
      if (!bland) {
        Rat best(0);
        for (std::size_t j = 0; j < ncols; ++j) {
          if (!allowed(static_cast<int>(j)) || obj[j] >= 0) continue;
          if (enter < 0 || obj[j] < best) {
            best = obj[j];
            enter = static_cast<int>(j);
          }
        }
      } else {
        for (std::size_t j = 0; j < ncols; ++j) {
          if (allowed(static_cast<int>(j)) && obj[j] < 0) {
            enter = static_cast<int>(j);
            break;
          }
        }
      }
      if (enter < 0) return;

      int leave = -1;
      Rat best_ratio(0);
      for (std::size_t i = 0; i < nrows; ++i) {
        const Rat& a = tab[i][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        Rat ratio = b[i] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[static_cast<std::size_t>(leave)])) {
          best_ratio = ratio;
          leave = static_cast<int>(i);
        }
      }
      if (leave < 0) throw Error("Unbounded", "LP objective unbounded");

      Rat before = objval;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
      if (objval == before) {
        if (++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
    }
  };

  // Phase 1: minimize the artificial sum.
  if (!artificial_cols.empty()) {
    Vec phase1(ncols, Rat(0));
    for (int col : artificial_cols) phase1[static_cast<std::size_t>(col)] = 1;
    load_objective(phase1);
    iterate([](int) { return true; });
    if (objval != 0) return std::nullopt;

    // Drive remaining artificials out of the basis; rows that cannot pivot
    // are redundant and harmless (their artificial stays basic at zero, and
    // the column is frozen below).
    for (std::size_t i = 0; i < nrows; ++i) {
      if (!is_artificial(basis[i])) continue;
      for (std::size_t j = 0; j < ncols_real; ++j) {
        if (tab[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 on the real objective, artificial columns frozen.
  {
    Vec costs(ncols, Rat(0));
    for (std::size_t j = 0; j < nvars; ++j) costs[j] = objective[j];
    load_objective(costs);
    iterate([&](int col) { return !is_artificial(col); });
  }

  Vec point(nvars, Rat(0));
  for (std::size_t i = 0; i < nrows; ++i) {
    int jb = basis[i];
    if (jb >= 0 && jb < static_cast<int>(nvars)) point[static_cast<std::size_t>(jb)] = b[i];
  }
  return std::make_pair(objval, std::move(point));
}

inline std::vector<Row> with_simplex_rows(const HRep& h) {
  std::vector<Row> rows = h.rows();
  Vec ones(static_cast<std::size_t>(h.dim()), Rat(1));
  rows.push_back(Row{std::move(ones), Rel::EQ, Rat(1)});
  return rows;
}

}  // namespace lp

/**
 * Exact optimum of a linear objective over the HRep's feasible polytope,
 * with a vertex witness. Throws Infeasible when the system is empty;
 * unbounded objectives cannot occur (the simplex rows bound the region).
 */
inline LpResult lp_optimize(const Vec& objective, const HRep& h, LpDir direction) {
  if (static_cast<int>(objective.size()) != h.dim())
    throw DomainError("objective length does not match HRep dimension");
  Vec c = objective;
  if (direction == LpDir::Max)
    for (auto& x : c) x = -x;
  auto sol = lp::minimize(c, lp::with_simplex_rows(h));
  if (!sol) throw Infeasible("constraint system has no feasible probability table");
  Rat opt = direction == LpDir::Max ? Rat(-sol->first) : sol->first;
  return LpResult{std::move(opt), std::move(sol->second)};
}

inline bool is_feasible(const HRep& h) {
  Vec zero(static_cast<std::size_t>(h.dim()), Rat(0));
  return lp::minimize(zero, lp::with_simplex_rows(h)).has_value();
}

/**
 * True iff q is a convex combination of the given points (exact LP
 * feasibility on the combination weights).
 */
inline bool member_of_hull(const Vec& q, const std::vector<Vec>& points) {
  if (points.empty()) return false;
  const std::size_t d = q.size();
  for (const auto& p : points)
    if (p.size() != d) throw DomainError("hull membership: dimension mismatch");

  std::vector<Row> rows;
  rows.reserve(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    Vec coef(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) coef[j] = points[j][i];
    rows.push_back(Row{std::move(coef), Rel::EQ, q[i]});
  }
  rows.push_back(Row{Vec(points.size(), Rat(1)), Rel::EQ, Rat(1)});

  Vec zero(points.size(), Rat(0));
  return lp::minimize(zero, rows).has_value();
}

namespace detail {

inline std::vector<Vec> dedup_sorted(std::vector<Vec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace detail

/**
 * Minimal sublist with the same convex hull: exact duplicates removed, then
 * every point inside the hull of the others dropped. Output is sorted
 * lexicographically by coordinates.
 */
inline std::vector<Vec> reduce_to_extreme(const std::vector<Vec>& points) {
  if (points.empty()) throw DomainError("reduce_to_extreme on empty point list");
  std::vector<Vec> kept = detail::dedup_sorted(points);
  std::size_t i = 0;
  while (i < kept.size() && kept.size() > 1) {
    std::vector<Vec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (member_of_hull(kept[i], others)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

/// True iff the two point lists have the same convex hull.
inline bool same_hull(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) throw DomainError("same_hull on empty point list");
  for (const auto& p : a)
    if (!member_of_hull(p, b)) return false;
  for (const auto& q : b)
    if (!member_of_hull(q, a)) return false;
  return true;
}

namespace detail {

inline void cut_with_halfspace(std::vector<Vec>& pts, const Vec& coef, const Rat& rhs) {
  std::vector<Rat> vals(pts.size(), Rat(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat v(0);
    for (std::size_t j = 0; j < coef.size(); ++j) v += coef[j] * pts[i][j];
    vals[i] = v - rhs;
  }

  std::vector<Vec> next;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (vals[i] <= 0) next.push_back(pts[i]);

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (vals[i] >= 0) continue;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (vals[j] <= 0) continue;
      // Segment from strictly-inside i to strictly-outside j crosses the
      // hyperplane at t in (0,1).
      Rat t = vals[i] / (vals[i] - vals[j]);
      Vec q(pts[i].size());
      for (std::size_t k = 0; k < q.size(); ++k)
        q[k] = pts[i][k] + t * (pts[j][k] - pts[i][k]);
      next.push_back(std::move(q));
    }
  }

  pts = dedup_sorted(std::move(next));
  if (!pts.empty() && pts.size() > 1) pts = reduce_to_extreme(pts);
}

}  // namespace detail

/**
 * All extreme points of the HRep's feasible polytope, exact, deduplicated,
 * sorted lexicographically. Throws DimensionCap above the cap and
 * Infeasible when the system is empty.
 */
inline std::vector<Vec> enumerate_vertices(const HRep& h, int dimension_cap = kDefaultDimensionCap) {
  const int n = h.dim();
  if (n > dimension_cap)
    throw DimensionCap("dimension " + std::to_string(n) + " exceeds cap " +
                       std::to_string(dimension_cap));

  // Start from the probability simplex's vertices: the unit point masses.
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<std::size_t>(n), Rat(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }

  for (const Row& r : h.rows()) {
    bool zero_coef = std::all_of(r.coef.begin(), r.coef.end(), [](const Rat& c) { return c == 0; });
    if (zero_coef) {
      bool violated = (r.rel == Rel::LE) ? (r.rhs < 0) : (r.rhs != 0);
      if (violated) throw Infeasible("constraint system has no feasible probability table");
      continue;
    }
    detail::cut_with_halfspace(pts, r.coef, r.rhs);
    if (r.rel == Rel::EQ) {
      Vec neg = r.coef;
      for (auto& c : neg) c = -c;
      if (!pts.empty()) detail::cut_with_halfspace(pts, neg, Rat(-r.rhs));
    }
    if (pts.empty()) throw Infeasible("constraint system has no feasible probability table");
  }
  return detail::dedup_sorted(std::move(pts));
}

}  // namespace credal
