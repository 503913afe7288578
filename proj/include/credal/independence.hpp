/**
 * Deciders for independence concepts over credal sets: epistemic
 * irrelevance and independence (conditional hull equivalence), strong
 * independence (per-extreme-point stochastic factorization), the interval
 * product check on expectations, the contraction condition, per-node Markov
 * conditions over a network, and the belief-change probe behind the strong
 * Markov condition.
 *
 * Verdicts carry a re-checkable counterexample whenever they report a
 * failure: the conditioning configuration plus either a differing bound
 * pair or a witness vertex.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/density.hpp"
#include "credal/errors.hpp"
#include "credal/graph.hpp"
#include "credal/network.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"
#include "credal/variable.hpp"

namespace credal {

struct Counterexample {
  /// Conditioning configuration that exposes the failure.
  Assignment config;
  /// Event and bound kind ("lower"/"upper") whose values differ, when a
  /// differing bound pair exists.
  Assignment bound_event;
  std::string bound_kind;
  std::optional<std::pair<Rat, Rat>> bounds;
  /// Witness vertex table (hull mismatch or non-factorizing extreme point).
  std::optional<Vec> witness;
  std::string detail;
};

struct IndependenceVerdict {
  bool holds = true;
  /// True when no configuration was testable (all skipped or no statement).
  bool vacuous = false;
  /// Conditioning configurations skipped for zero upper probability.
  int skipped = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

namespace detail {

inline void require_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b,
                             const char* what) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) throw DomainError(std::string(what) + ": sets must be disjoint ('" + x + "')");
}

inline std::vector<std::string> scope_ordered_union(const Scope& scope,
                                                    std::vector<std::vector<std::string>> sets) {
  std::vector<std::string> out;
  for (const auto& v : scope) {
    for (const auto& s : sets)
      if (std::find(s.begin(), s.end(), v.name()) != s.end()) {
        out.push_back(v.name());
        break;
      }
  }
  std::size_t want = 0;
  for (const auto& s : sets) want += s.size();
  if (out.size() != want) throw DomainError("independence: variables missing from scope");
  return out;
}

/// First differing lower/upper bound over atomic events of the shared
/// scope, if any; used to report counterexamples concretely.
inline bool find_bound_gap(const CredalSet& a, const CredalSet& b, Counterexample& cx) {
  const Scope& scope = a.scope();
  for (std::size_t i = 0; i < config_count(scope); ++i) {
    Assignment event = assignment_of(scope, config_at(scope, i));
    Rat la = a.lower_prob(event), lb = b.lower_prob(event);
    if (la != lb) {
      cx.bound_event = event;
      cx.bound_kind = "lower";
      cx.bounds = std::make_pair(la, lb);
      return true;
    }
    Rat ua = a.upper_prob(event), ub = b.upper_prob(event);
    if (ua != ub) {
      cx.bound_event = event;
      cx.bound_kind = "upper";
      cx.bounds = std::make_pair(ua, ub);
      return true;
    }
  }
  return false;
}

inline void fill_hull_mismatch(const CredalSet& base, const CredalSet& conditioned,
                               Counterexample& cx) {
  if (find_bound_gap(base, conditioned, cx)) return;
  // Two hulls can share every event bound; fall back to a vertex of one
  // outside the other.
  auto base_tables = base.tables();
  auto cond_tables = conditioned.tables();
  for (const auto& t : cond_tables)
    if (!member_of_hull(t, base_tables)) {
      cx.witness = t;
      return;
    }
  for (const auto& t : base_tables)
    if (!member_of_hull(t, cond_tables)) {
      cx.witness = t;
      return;
    }
}

}  // namespace detail

/**
 * (Y EIR X | Z): Y is epistemically irrelevant to X given Z when the
 * conditional credal sets over X given z and given (y, z) have the same
 * convex hull for every testable configuration. Configurations whose
 * conditioning event has upper probability zero are skipped and counted.
 */
inline IndependenceVerdict epistemically_irrelevant(const CredalSet& k,
                                                    const std::vector<std::string>& y_set,
                                                    const std::vector<std::string>& x_set,
                                                    const std::vector<std::string>& z_set = {}) {
  if (x_set.empty() || y_set.empty())
    throw DomainError("epistemic irrelevance: X and Y must be nonempty");
  detail::require_disjoint(x_set, y_set, "epistemic irrelevance");
  detail::require_disjoint(x_set, z_set, "epistemic irrelevance");
  detail::require_disjoint(y_set, z_set, "epistemic irrelevance");

  Scope y_scope = subscope(k.scope(), y_set);
  Scope z_scope = subscope(k.scope(), z_set);

  IndependenceVerdict verdict;
  bool tested = false;
  for (std::size_t zi = 0; zi < config_count(z_scope); ++zi) {
    Assignment ev_z = assignment_of(z_scope, config_at(z_scope, zi));
    if (k.upper_prob(ev_z) == 0) {
      verdict.skipped += static_cast<int>(config_count(y_scope));
      continue;
    }
    CredalSet base = k.condition(ev_z).marginalize(x_set);
    for (std::size_t yi = 0; yi < config_count(y_scope); ++yi) {
      Assignment ev_yz = assignment_of(y_scope, config_at(y_scope, yi)).merged_with(ev_z);
      if (k.upper_prob(ev_yz) == 0) {
        ++verdict.skipped;
        continue;
      }
      CredalSet conditioned = k.condition(ev_yz).marginalize(x_set);
      tested = true;
      if (!base.same_hull_as(conditioned)) {
        verdict.holds = false;
        Counterexample cx;
        cx.config = ev_yz;
        cx.detail = "K(X|z) and K(X|y,z) differ at " + ev_yz.str();
        detail::fill_hull_mismatch(base, conditioned, cx);
        verdict.counterexample = std::move(cx);
        return verdict;
      }
    }
  }
  verdict.vacuous = !tested;
  if (verdict.vacuous) verdict.note = "vacuous: no configuration testable";
  return verdict;
}

/**
 * (X EIN Y | Z): epistemic independence, the symmetrization of epistemic
 * irrelevance. Checks (X EIR Y | Z) first, then (Y EIR X | Z).
 */
inline IndependenceVerdict epistemically_independent(const CredalSet& k,
                                                     const std::vector<std::string>& x_set,
                                                     const std::vector<std::string>& y_set,
                                                     const std::vector<std::string>& z_set = {}) {
  IndependenceVerdict first = epistemically_irrelevant(k, x_set, y_set, z_set);
  if (!first.holds) {
    first.note = "irrelevance of X to Y fails" + (first.note.empty() ? "" : "; " + first.note);
    return first;
  }
  IndependenceVerdict second = epistemically_irrelevant(k, y_set, x_set, z_set);
  if (!second.holds) {
    second.note = "irrelevance of Y to X fails" + (second.note.empty() ? "" : "; " + second.note);
    second.skipped += first.skipped;
    return second;
  }
  second.skipped += first.skipped;
  second.vacuous = first.vacuous && second.vacuous;
  return second;
}

/**
 * Strong independence of X and Y given Z: every extreme point of the
 * marginal of K onto X ∪ Y ∪ Z factorizes as p(x,y|z) = p(x|z) p(y|z) on
 * every z-configuration with positive probability. The stored marginal
 * images are deduplicated and only non-factorizing ones are tested for
 * extremality, which decides the same statement as reducing first.
 */
inline IndependenceVerdict strongly_independent(const CredalSet& k,
                                                const std::vector<std::string>& x_set,
                                                const std::vector<std::string>& y_set,
                                                const std::vector<std::string>& z_set = {}) {
  if (x_set.empty() || y_set.empty())
    throw DomainError("strong independence: X and Y must be nonempty");
  detail::require_disjoint(x_set, y_set, "strong independence");
  detail::require_disjoint(x_set, z_set, "strong independence");
  detail::require_disjoint(y_set, z_set, "strong independence");

  auto names = detail::scope_ordered_union(k.scope(), {x_set, y_set, z_set});
  Scope m_scope = subscope(k.scope(), names);
  Scope zs = subscope(m_scope, z_set);
  std::vector<int> z_pos, x_pos, y_pos;
  for (const auto& v : zs) z_pos.push_back(scope_index(m_scope, v.name()));
  for (const auto& v : m_scope) {
    if (std::find(x_set.begin(), x_set.end(), v.name()) != x_set.end())
      x_pos.push_back(scope_index(m_scope, v.name()));
    else if (std::find(y_set.begin(), y_set.end(), v.name()) != y_set.end())
      y_pos.push_back(scope_index(m_scope, v.name()));
  }

  std::vector<Vec> tables;
  for (const auto& v : k.vertices()) tables.push_back(v.marginal(names).table());
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());

  // Violating (z, x, y) configuration of a table, if any.
  auto violation = [&](const Vec& t) -> std::optional<Config> {
    std::size_t n = config_count(m_scope);
    for (std::size_t zi = 0; zi < config_count(zs); ++zi) {
      Config zc = config_at(zs, zi);
      Rat pz(0);
      std::vector<char> in_z(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        Config c = config_at(m_scope, i);
        bool ok = true;
        for (std::size_t j = 0; j < z_pos.size(); ++j)
          if (c[static_cast<std::size_t>(z_pos[j])] != zc[j]) {
            ok = false;
            break;
          }
        if (ok) {
          in_z[i] = 1;
          pz += t[i];
        }
      }
      if (pz == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!in_z[i]) continue;
        Config c = config_at(m_scope, i);
        // p(x,y,z) * p(z) vs p(x,z) * p(y,z)
        Rat pxz(0), pyz(0);
        for (std::size_t j = 0; j < n; ++j) {
          if (!in_z[j]) continue;
          Config cj = config_at(m_scope, j);
          bool same_x = true, same_y = true;
          for (int p : x_pos)
            if (cj[static_cast<std::size_t>(p)] != c[static_cast<std::size_t>(p)]) same_x = false;
          for (int p : y_pos)
            if (cj[static_cast<std::size_t>(p)] != c[static_cast<std::size_t>(p)]) same_y = false;
          if (same_x) pxz += t[j];
          if (same_y) pyz += t[j];
        }
        if (t[i] * pz != pxz * pyz) return config_at(m_scope, i);
      }
    }
    return std::nullopt;
  };

  IndependenceVerdict verdict;
  for (const auto& t : tables) {
    auto bad = violation(t);
    if (!bad) continue;
    std::vector<Vec> others;
    for (const auto& o : tables)
      if (o != t) others.push_back(o);
    if (!others.empty() && member_of_hull(t, others)) continue;  // not extreme
    verdict.holds = false;
    Counterexample cx;
    cx.config = assignment_of(m_scope, *bad);
    cx.witness = t;
    cx.detail = "extreme point fails stochastic factorization at " + cx.config.str();
    verdict.counterexample = std::move(cx);
    return verdict;
  }
  return verdict;
}

/// A function over a named subset of variables.
struct ScopedFn {
  std::vector<std::string> vars;
  std::function<Rat(const Config&)> fn;
};

namespace detail {

inline std::pair<Rat, Rat> conditional_expectation_range(const CredalSet& k, const ScopedFn& f,
                                                         const Assignment& given) {
  Scope f_scope = subscope(k.scope(), f.vars);
  std::vector<int> pos;
  for (const auto& v : f_scope) pos.push_back(scope_index(k.scope(), v.name()));
  auto ev = resolve(k.scope(), given);

  bool first = true;
  Rat lo(0), hi(0);
  for (const auto& v : k.vertices()) {
    Rat pe(0), acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.at(i) == 0) continue;
      Config c = config_at(k.scope(), i);
      if (!matches(c, ev)) continue;
      pe += v.at(i);
      Config sub(pos.size());
      for (std::size_t j = 0; j < pos.size(); ++j) sub[j] = c[static_cast<std::size_t>(pos[j])];
      acc += v.at(i) * f.fn(sub);
    }
    if (pe == 0) continue;
    Rat e = acc / pe;
    if (first) {
      lo = hi = e;
      first = false;
    } else {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  if (first) throw ZeroEvidence("event " + given.str() + " has upper probability zero");
  return {lo, hi};
}

inline std::pair<Rat, Rat> range_product(const std::pair<Rat, Rat>& a,
                                         const std::pair<Rat, Rat>& b) {
  Rat c1 = a.first * b.first, c2 = a.first * b.second;
  Rat c3 = a.second * b.first, c4 = a.second * b.second;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}

}  // namespace detail

/**
 * Interval-product check on expectations: for every z, the exact range of
 * E[f g | z] must equal the interval product of the ranges of E[f | z] and
 * E[g | z]. f and g must depend on disjoint variable sets, disjoint from Z.
 */
inline IndependenceVerdict kuznetsov_check(const CredalSet& k, const ScopedFn& f,
                                           const ScopedFn& g,
                                           const std::vector<std::string>& z_set = {}) {
  if (f.vars.empty() || g.vars.empty())
    throw DomainError("kuznetsov check: f and g need nonempty variable sets");
  detail::require_disjoint(f.vars, g.vars, "kuznetsov check");
  detail::require_disjoint(f.vars, z_set, "kuznetsov check");
  detail::require_disjoint(g.vars, z_set, "kuznetsov check");

  Scope fg_scope = subscope(k.scope(), detail::scope_ordered_union(k.scope(), {f.vars, g.vars}));
  std::vector<int> f_pos, g_pos;
  {
    Scope fs = subscope(k.scope(), f.vars), gs = subscope(k.scope(), g.vars);
    for (const auto& v : fs) f_pos.push_back(scope_index(fg_scope, v.name()));
    for (const auto& v : gs) g_pos.push_back(scope_index(fg_scope, v.name()));
  }
  ScopedFn product;
  for (const auto& v : fg_scope) product.vars.push_back(v.name());
  product.fn = [&f, &g, f_pos, g_pos](const Config& c) {
    Config cf(f_pos.size()), cg(g_pos.size());
    for (std::size_t i = 0; i < f_pos.size(); ++i) cf[i] = c[static_cast<std::size_t>(f_pos[i])];
    for (std::size_t i = 0; i < g_pos.size(); ++i) cg[i] = c[static_cast<std::size_t>(g_pos[i])];
    return Rat(f.fn(cf) * g.fn(cg));
  };

  Scope z_scope = subscope(k.scope(), z_set);
  IndependenceVerdict verdict;
  bool tested = false;
  for (std::size_t zi = 0; zi < config_count(z_scope); ++zi) {
    Assignment ev = assignment_of(z_scope, config_at(z_scope, zi));
    if (k.upper_prob(ev) == 0) {
      ++verdict.skipped;
      continue;
    }
    tested = true;
    auto rf = detail::conditional_expectation_range(k, f, ev);
    auto rg = detail::conditional_expectation_range(k, g, ev);
    auto rfg = detail::conditional_expectation_range(k, product, ev);
    auto expected = detail::range_product(rf, rg);
    if (rfg != expected) {
      verdict.holds = false;
      Counterexample cx;
      cx.config = ev;
      cx.bound_kind = "range";
      cx.bounds = rfg;
      cx.detail = "E[fg|z] range [" + credal::to_string(rfg.first) + ", " +
                  credal::to_string(rfg.second) + "] differs from interval product [" +
                  credal::to_string(expected.first) + ", " + credal::to_string(expected.second) + "]";
      verdict.counterexample = std::move(cx);
      return verdict;
    }
  }
  verdict.vacuous = !tested;
  if (verdict.vacuous) verdict.note = "vacuous: no configuration testable";
  return verdict;
}

/**
 * Contraction condition: if (Y EIR X | Z) and (Y EIR W | (X, Z)) then
 * (Y EIR (W, X) | Z). Vacuously true when the antecedent fails; the note
 * reports antecedent status either way.
 */
inline IndependenceVerdict contraction_holds(const CredalSet& k,
                                             const std::vector<std::string>& w_set,
                                             const std::vector<std::string>& x_set,
                                             const std::vector<std::string>& y_set,
                                             const std::vector<std::string>& z_set = {}) {
  detail::require_disjoint(w_set, x_set, "contraction");
  detail::require_disjoint(w_set, y_set, "contraction");
  detail::require_disjoint(w_set, z_set, "contraction");

  IndependenceVerdict a1 = epistemically_irrelevant(k, y_set, x_set, z_set);
  std::vector<std::string> xz = x_set;
  xz.insert(xz.end(), z_set.begin(), z_set.end());
  IndependenceVerdict a2 = epistemically_irrelevant(k, y_set, w_set, xz);

  if (!a1.holds || !a2.holds) {
    IndependenceVerdict verdict;
    verdict.vacuous = true;
    verdict.note = std::string("antecedent fails: ") +
                   (!a1.holds ? "(Y EIR X | Z) is false" : "(Y EIR W | X,Z) is false");
    return verdict;
  }

  std::vector<std::string> wx =
      detail::scope_ordered_union(k.scope(), {w_set, x_set});
  IndependenceVerdict conclusion = epistemically_irrelevant(k, y_set, wx, z_set);
  conclusion.note = "antecedent holds" + (conclusion.note.empty() ? "" : "; " + conclusion.note);
  return conclusion;
}

enum class MarkovNotion { Epistemic, Strong };

struct MarkovVerdict {
  std::string node;
  IndependenceVerdict verdict;
};

/**
 * Per-node Markov condition over the network's DAG: each variable
 * independent of its nondescendants non-parents given its parents, under
 * the chosen independence notion. Nodes with no nondescendants non-parents
 * hold vacuously.
 */
inline std::vector<MarkovVerdict> markov_condition(const CredalNetwork& net, const CredalSet& k,
                                                   MarkovNotion notion) {
  if (k.scope().size() != net.variables().size())
    throw DomainError("markov_condition: credal set scope must cover the network");
  std::vector<MarkovVerdict> out;
  for (const auto& v : net.variables()) {
    auto nd = net.dag().nondescendants_nonparents(v.name());
    auto pa = net.dag().parents(v.name());
    MarkovVerdict mv;
    mv.node = v.name();
    if (nd.empty()) {
      mv.verdict.vacuous = true;
      mv.verdict.note = "vacuous: no nondescendants non-parents";
    } else if (notion == MarkovNotion::Epistemic) {
      mv.verdict = epistemically_independent(k, {v.name()}, nd, pa);
    } else {
      mv.verdict = strongly_independent(k, {v.name()}, nd, pa);
    }
    out.push_back(std::move(mv));
  }
  return out;
}

inline bool all_hold(const std::vector<MarkovVerdict>& verdicts) {
  for (const auto& mv : verdicts)
    if (!mv.verdict.holds) return false;
  return true;
}

struct ProbeOptions {
  std::uint64_t budget = 32;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<JointDensity> probe_menu(const Scope& y_scope, const CredalSet& k,
                                            const std::vector<std::string>& y_names,
                                            bool exhaustive, const ProbeOptions& options) {
  std::vector<JointDensity> menu;
  auto push_unique = [&menu](JointDensity d) {
    for (const auto& m : menu)
      if (m == d) return;
    menu.push_back(std::move(d));
  };

  push_unique(JointDensity::uniform(y_scope));

  if (exhaustive) {
    // Products of per-variable densities with entries on the 1/4 grid.
    const std::vector<Rat> grid = {Rat(1) / 4, Rat(1) / 2, Rat(3) / 4};
    std::vector<std::size_t> pick(y_scope.size(), 0);
    for (;;) {
      std::vector<Rat> table(config_count(y_scope), Rat(1));
      for (std::size_t i = 0; i < table.size(); ++i) {
        Config c = config_at(y_scope, i);
        for (std::size_t v = 0; v < y_scope.size(); ++v) {
          const Rat& theta = grid[pick[v]];
          table[i] *= (c[v] == 0) ? theta : Rat(1) - theta;
        }
      }
      push_unique(JointDensity(y_scope, std::move(table)));
      std::size_t v = y_scope.size();
      bool done = true;
      while (v > 0) {
        --v;
        if (++pick[v] < grid.size()) {
          done = false;
          break;
        }
        pick[v] = 0;
      }
      if (done) break;
    }
  }

  // Everywhere-positive Y-marginals of the probed set's vertices.
  for (const auto& v : k.vertices()) {
    JointDensity m = v.marginal(y_names).reordered(y_scope);
    bool positive = std::all_of(m.table().begin(), m.table().end(),
                                [](const Rat& x) { return x > 0; });
    if (positive) push_unique(std::move(m));
  }

  if (!exhaustive) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> draw(1, 16);
    for (std::uint64_t r = 0; r < options.budget; ++r) {
      std::vector<Rat> weights(config_count(y_scope));
      Rat total(0);
      for (auto& w : weights) {
        w = Rat(draw(rng));
        total += w;
      }
      for (auto& w : weights) w /= total;
      push_unique(JointDensity(y_scope, std::move(weights)));
    }
  }
  return menu;
}

}  // namespace detail

/**
 * Search for a sequence of belief changes with respect to a node's
 * nondescendants that breaks that node's epistemic Markov statement.
 *
 * For each node with nondescendants non-parents, and each replacement
 * density q from a deterministic menu, the probe tests the endpoint of the
 * sweep that belief-changes every extreme point's marginal over
 * Y = nondescendants(X_i) (parents included) to q, then replays the sweep
 * one belief change at a time (budget-capped) re-testing the node's
 * epistemic independence statement after every step. Sweeping to an
 * everywhere-positive singleton marginal is exactly the construction that
 * exposes any extreme point whose conditional depends on the
 * nondescendants, so at tiny scale (all variables binary, at most two
 * nondescendants per node) the endpoint tests are exhaustive and a clean
 * pass is definitive. Above that scale a pass is reported as "no violation
 * found within budget", never as a proof.
 */
inline IndependenceVerdict strong_markov_probe(const CredalNetwork& net, const CredalSet& k,
                                               ProbeOptions options = {}) {
  if (k.scope().size() != net.variables().size())
    throw DomainError("strong_markov_probe: credal set scope must cover the network");

  bool exhaustive = true;
  for (const auto& v : net.variables()) {
    if (v.cardinality() != 2) exhaustive = false;
    if (net.dag().nondescendants(v.name()).size() > 2) exhaustive = false;
  }

  bool any_statement = false;
  CredalSet base = k.canonicalized();

  for (const auto& v : net.variables()) {
    auto nd_np = net.dag().nondescendants_nonparents(v.name());
    if (nd_np.empty()) continue;
    any_statement = true;
    auto pa = net.dag().parents(v.name());
    auto y_names = net.dag().nondescendants(v.name());
    Scope y_scope = subscope(base.scope(), y_names);

    auto menu = detail::probe_menu(y_scope, base, y_names, exhaustive, options);
    for (std::size_t qi = 0; qi < menu.size(); ++qi) {
      const JointDensity& q = menu[qi];
      auto describe = [&](const std::string& stage) {
        std::string s = "node " + v.name() + ", replacement #" + std::to_string(qi) + " q = [";
        for (std::size_t t = 0; t < q.size(); ++t)
          s += (t ? ", " : "") + credal::to_string(q.at(t));
        return s + "], " + stage;
      };

      // Endpoint state: every vertex mapped to Y-marginal q at once.
      bool mappable = true;
      std::vector<JointDensity> mapped;
      for (const auto& vert : base.vertices()) {
        try {
          mapped.push_back(vert.replace_marginal(y_names, q));
        } catch (const ZeroMarginal&) {
          mappable = false;
          break;
        }
      }
      if (!mappable) continue;

      CredalSet endpoint = CredalSet::canonical(base.scope(), std::move(mapped));
      IndependenceVerdict at_end = epistemically_independent(endpoint, {v.name()}, nd_np, pa);
      if (!at_end.holds) {
        at_end.note = describe("after sweeping every vertex to marginal q") +
                      (at_end.note.empty() ? "" : "; " + at_end.note);
        return at_end;
      }

      // Sequential sweep, one belief change at a time; the endpoint above
      // carries the decision, so the replay is budget-capped and run for
      // the first replacement only.
      if (qi > 0) continue;
      CredalSet current = base;
      std::size_t max_steps = std::min<std::size_t>(base.size() + 1,
                                                    options.budget ? options.budget : 32);
      for (std::size_t step = 0; step < max_steps; ++step) {
        std::size_t idx = current.size();
        for (std::size_t i = 0; i < current.size(); ++i) {
          if (!(current.vertices()[i].marginal(y_names).reordered(y_scope) == q)) {
            idx = i;
            break;
          }
        }
        if (idx == current.size()) break;
        try {
          current = current.belief_change(idx, y_names, q);
        } catch (const ZeroMarginal&) {
          break;
        }
        IndependenceVerdict mid = epistemically_independent(current, {v.name()}, nd_np, pa);
        if (!mid.holds) {
          mid.note = describe("after " + std::to_string(step + 1) + " belief change step(s)") +
                     (mid.note.empty() ? "" : "; " + mid.note);
          return mid;
        }
      }
    }
  }

  IndependenceVerdict verdict;
  verdict.vacuous = !any_statement;
  verdict.note = any_statement
                     ? (exhaustive ? "no violation; exhaustive at this scale"
                                   : "no violation found within budget")
                     : "vacuous: no node has nondescendants non-parents";
  return verdict;
}

}  // namespace credal
