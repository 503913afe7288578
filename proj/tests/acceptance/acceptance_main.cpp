/**
 * Acceptance suite: one pass/fail line per criterion. Every assertion is
 * exact (zero tolerance); random suites run on fixed seeds.
 */
#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/density.hpp"
#include "credal/graph.hpp"
#include "credal/independence.hpp"
#include "credal/model_format.hpp"
#include "credal/natext.hpp"
#include "credal/network.hpp"
#include "credal/polytope.hpp"
#include "credal/rational.hpp"
#include "support/test_support.hpp"

using namespace credal;
using testsupport::Rng;

namespace {

struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (first_failure.empty()) first_failure = what;
    }
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    return ok() ? std::to_string(checked) + " checks"
                : std::to_string(failed) + "/" + std::to_string(checked) +
                      " checks failed; first: " + first_failure;
  }
};

std::vector<Rat> rv(std::initializer_list<const char*> entries) {
  std::vector<Rat> v;
  for (const char* e : entries) v.push_back(parse_rat(e));
  return v;
}

std::string data_path(const std::string& name) {
  return std::string(CREDAL_DATA_DIR) + "/" + name;
}

struct ChainFixture {
  CredalNetwork net;
  CredalSet raw;
  CredalSet k_prime;
  CredalSet k_double;
  JointDensity p1, p2, pstar;
};

ChainFixture load_chain() {
  CredalNetwork net = parse_network_file(data_path("figure1.credal"));
  CredalSet raw = strong_extension(net, {.reduce = false});
  CredalSet k_prime = restrict_vertices(raw, testsupport::z_pair_restricted);
  JointDensity p1 = parse_density_file(data_path("table1_p1.density"), net.variables());
  JointDensity p2 = parse_density_file(data_path("table1_p2.density"), net.variables());
  JointDensity pstar = parse_density_file(data_path("table1_pstar.density"), net.variables());
  CredalSet k_double = add_vertex(k_prime, pstar);
  return ChainFixture{std::move(net),     std::move(raw), std::move(k_prime),
                      std::move(k_double), std::move(p1),  std::move(p2),
                      std::move(pstar)};
}

// --------------------------------------------------------------------------

Tally criterion1_example1_reproduction() {
  Tally t;
  ChainFixture f = load_chain();
  t.require(f.raw.size() == 128, "128 raw endpoint selections");
  t.require(f.k_prime.size() == 64, "K' has 64 vertices");
  t.require(query(f.k_double, Assignment{{"Z", "z"}}, Assignment{{"X", "x"}}, Bound::Lower) ==
                Rat(8501) / 22707,
            "lower P(z|x) = 8501/22707");
  t.require(query(f.k_double, Assignment{{"Z", "z"}}, Assignment{{"X", "x"}, {"W", "w"}},
                  Bound::Lower) == Rat(19) / 50,
            "lower P(z|x,w) = 19/50");
  return t;
}

Tally criterion2_table1_consistency() {
  Tally t;
  ChainFixture f = load_chain();

  // Each tabulated measure must equal one product density of an endpoint
  // selection, on all 16 entries.
  for (const auto* p : {&f.p1, &f.p2}) {
    bool found = false;
    for (const auto& v : f.raw.vertices()) found = found || v == *p;
    t.require(found, "tabulated measure equals an endpoint product density");
  }
  t.require(!member_of_hull(f.pstar.table(), f.k_prime.tables()),
            "p* lies outside the hull of K'");
  return t;
}

Tally criterion3_epistemic_markov_on_kdouble() {
  Tally t;
  ChainFixture f = load_chain();
  t.require(epistemically_independent(f.k_double, {"W"}, {"Y"}, {"X"}).holds,
            "(W EIN Y | X) holds");
  t.require(epistemically_independent(f.k_double, {"W", "X"}, {"Z"}, {"Y"}).holds,
            "((W,X) EIN Z | Y) holds");
  auto wz = epistemically_independent(f.k_double, {"W"}, {"Z"}, {"X"});
  t.require(!wz.holds, "(W EIN Z | X) fails");
  bool pair_ok = wz.counterexample && wz.counterexample->bounds &&
                 wz.counterexample->bounds->first == Rat(8501) / 22707 &&
                 wz.counterexample->bounds->second == Rat(19) / 50;
  t.require(pair_ok, "counterexample bound pair 8501/22707 vs 19/50");
  return t;
}

Tally criterion4_d_separation() {
  Tally t;
  ChainFixture f = load_chain();
  t.require(f.net.dag().d_separated({"W"}, {"Z"}, {"X"}), "chain: W indep Z given X");
  t.require(!f.net.dag().d_separated({"W"}, {"Z"}, {}), "chain: open path without conditioning");

  Dag collider({"A", "B", "C"}, {{"A", "C"}, {"B", "C"}});
  t.require(collider.d_separated({"A"}, {"B"}, {}), "collider blocks when unconditioned");
  t.require(!collider.d_separated({"A"}, {"B"}, {"C"}), "conditioning the collider opens it");

  Rng rng(1404);
  int instances = 0;
  while (instances < 200) {
    int n = 3 + static_cast<int>(rng() % 4);
    Dag g = testsupport::random_dag(rng, n, 45);
    std::vector<std::string> xs, ys, zs;
    for (int i = 0; i < n; ++i) {
      switch (rng() % 4) {
        case 0: xs.push_back(g.nodes()[static_cast<std::size_t>(i)]); break;
        case 1: ys.push_back(g.nodes()[static_cast<std::size_t>(i)]); break;
        case 2: zs.push_back(g.nodes()[static_cast<std::size_t>(i)]); break;
        default: break;
      }
    }
    if (xs.empty() || ys.empty()) continue;
    ++instances;
    t.require(g.d_separated(xs, ys, zs) == testsupport::d_separated_oracle(g, xs, ys, zs),
              "random verdict matches the path-enumeration oracle");
  }
  return t;
}

Tally criterion5_example2_reproduction() {
  Tally t;
  TwoVarSpec spec{Interval(Rat(2) / 5, Rat(1) / 2), Interval(Rat(2) / 5, Rat(1) / 2)};
  CredalSet ine = independent_natural_extension_2(spec);
  std::vector<Vec> expected_six = {
      rv({"4/25", "6/25", "6/25", "9/25"}), rv({"2/11", "3/11", "3/11", "3/11"}),
      rv({"1/5", "1/5", "3/10", "3/10"}),   rv({"1/5", "3/10", "1/5", "3/10"}),
      rv({"2/9", "2/9", "2/9", "1/3"}),     rv({"1/4", "1/4", "1/4", "1/4"})};
  t.require(ine.tables() == expected_six, "six listed natural-extension vertices");

  JointDensity q(Scope{ine.scope()[1]}, rv({"2/5", "3/5"}));
  std::vector<JointDensity> changed;
  for (const auto& v : ine.vertices()) changed.push_back(v.replace_marginal({"Y"}, q));
  CredalSet after = CredalSet::canonical(ine.scope(), std::move(changed));
  std::vector<Vec> expected_four = {
      rv({"4/25", "3/10", "6/25", "3/10"}), rv({"4/25", "6/25", "6/25", "9/25"}),
      rv({"1/5", "6/25", "1/5", "9/25"}),   rv({"1/5", "3/10", "1/5", "3/10"})};
  t.require(after.tables() == expected_four, "four listed belief-changed vertices");

  t.require(!epistemically_independent(after, {"X"}, {"Y"}).holds,
            "epistemic independence of X and Y fails after the change");

  // Pre-build brute-force oracle over the four listed vertices: the ratios
  // are {2/5, 2/5, 5/11, 8/23}, so the exact interval is [8/23, 5/11].
  Rat lo(2), hi(-1);
  for (const auto& v : after.vertices()) {
    Rat px = v.prob(Assignment{{"X", "x"}});
    Rat r = v.prob(Assignment{{"X", "x"}, {"Y", "y"}}) / px;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  t.require(lo == Rat(8) / 23 && hi == Rat(5) / 11, "oracle interval is [8/23, 5/11]");
  t.require(query(after, Assignment{{"Y", "y"}}, Assignment{{"X", "x"}}, Bound::Lower) == lo,
            "engine lower p(y|x) equals the oracle");
  t.require(query(after, Assignment{{"Y", "y"}}, Assignment{{"X", "x"}}, Bound::Upper) == hi,
            "engine upper p(y|x) equals the oracle");
  std::cout << "       note: p(y|x) in [" << to_string(lo) << ", " << to_string(hi)
            << "]; the source text prints [2/5, 4/7] for this range, a documented"
               " discrepancy (not asserted)\n";
  return t;
}

Tally criterion6_theorem2_suite() {
  Tally t;
  Rng rng(2601);
  int networks = 0;
  while (networks < 100) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4 binary nodes
    CredalNetwork net = testsupport::random_interval_network(rng, n, 45);
    if (selection_count(net) > BigInt(512)) continue;
    ++networks;
    CredalSet raw = strong_extension(net, {.reduce = false});

    // all disjoint role assignments with X, Y nonempty (X before Y to cut
    // the symmetric half)
    const auto& names = net.dag().nodes();
    std::size_t assignments = 1;
    for (int i = 0; i < n; ++i) assignments *= 4;
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<std::string> xs, ys, zs;
      std::size_t c = code;
      int first_x = -1, first_y = -1;
      for (int i = 0; i < n; ++i, c /= 4) {
        switch (c % 4) {
          case 0:
            xs.push_back(names[static_cast<std::size_t>(i)]);
            if (first_x < 0) first_x = i;
            break;
          case 1:
            ys.push_back(names[static_cast<std::size_t>(i)]);
            if (first_y < 0) first_y = i;
            break;
          case 2:
            zs.push_back(names[static_cast<std::size_t>(i)]);
            break;
          default:
            break;
        }
      }
      if (xs.empty() || ys.empty() || first_x > first_y) continue;
      if (!net.dag().d_separated(xs, ys, zs)) continue;
      t.require(strongly_independent(raw, xs, ys, zs).holds,
                "d-separation implies strong independence in the strong extension");
    }
  }
  return t;
}

Tally criterion7_theorem3_tiny_scale() {
  Tally t;
  Rng rng(2701);
  int networks = 0;
  while (networks < 50) {
    int n = 2 + static_cast<int>(rng() % 2);  // 2..3 binary nodes
    CredalNetwork net = testsupport::random_interval_network(rng, n, 50);
    bool has_statement = false;
    for (const auto& name : net.dag().nodes())
      has_statement = has_statement || !net.dag().nondescendants_nonparents(name).empty();
    if (!has_statement) continue;
    ++networks;

    CredalSet k = strong_extension(net);
    bool markov_holds = all_hold(markov_condition(net, k, MarkovNotion::Strong));
    auto probe = strong_markov_probe(net, k, {.budget = 8, .seed = 11});
    t.require(markov_holds, "strong extension satisfies the strong-notion Markov condition");
    t.require(probe.holds == markov_holds, "probe agrees on the strong extension");

    // augment with a random non-product vertex that breaks the condition
    CredalSet augmented = k;
    bool broke = false;
    for (int attempt = 0; attempt < 40 && !broke; ++attempt) {
      JointDensity extra(net.variables(),
                         testsupport::random_positive_density(rng, config_count(net.variables()), 19));
      if (member_of_hull(extra.table(), k.tables())) continue;
      CredalSet candidate = add_vertex(k, extra);
      if (!all_hold(markov_condition(net, candidate, MarkovNotion::Strong))) {
        augmented = candidate;
        broke = true;
      }
    }
    t.require(broke, "found an augmenting vertex that breaks the condition");
    if (!broke) continue;
    auto probe_aug = strong_markov_probe(net, augmented, {.budget = 8, .seed = 11});
    t.require(!probe_aug.holds, "probe finds a violating belief-change sequence");
  }
  return t;
}

Tally criterion8_point_network_queries() {
  Tally t;
  Rng rng(2801);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5 nodes
    CredalNetwork net = testsupport::random_point_network(rng, n, 3, 45);
    JointDensity joint = testsupport::bayes_joint_oracle(net);
    const Scope& scope = net.variables();

    // a random conditional query with nonempty target and evidence
    std::size_t ti = rng() % scope.size();
    Assignment target{{scope[ti].name(), scope[ti].values()[rng() % scope[ti].values().size()]}};
    Assignment evidence;
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (i == ti || rng() % 2) continue;
      evidence.bind(scope[i].name(), scope[i].values()[rng() % scope[i].values().size()]);
    }
    Rat expected = joint.prob(target.merged_with(evidence)) / joint.prob(evidence);
    t.require(query(net, target, evidence, Bound::Lower) == expected,
              "lower query equals the brute-force conditional");
    t.require(query(net, target, evidence, Bound::Upper) == expected,
              "upper query equals the brute-force conditional");
  }
  return t;
}

Tally criterion9_factorization() {
  Tally t;
  for (int n : {2, 3}) {
    Scope scope;
    std::vector<std::string> names;
    std::vector<LocalCredalSet> locals;
    for (int i = 0; i < n; ++i) {
      std::string name = "X" + std::to_string(i + 1);
      names.push_back(name);
      scope.push_back(Variable(name, {"a", "b"}));
      locals.push_back(LocalCredalSet{
          name,
          {IntervalLocal{{Interval(Rat(2) / 5, Rat(1) / 2), Interval(Rat(1) / 2, Rat(3) / 5)}}}});
    }
    CredalNetwork net(scope, Dag(names, {}), locals);

    BigInt expected(1);
    for (const auto& name : names)
      expected *= BigInt(static_cast<unsigned long>(local_vertices(net, name, 0).size()));
    CredalSet raw = strong_extension(net, {.reduce = false});
    t.require(BigInt(static_cast<unsigned long>(raw.size())) == expected,
              "raw vertex count equals the product of local counts");

    CredalSet reduced = strong_extension(net);
    for (const auto& v : reduced.vertices()) {
      for (const auto& name : names) {
        Rat pa = v.prob(Assignment{{name, "a"}});
        std::vector<Rat> marginal = {pa, Rat(1) - pa};
        auto options = local_vertices(net, name, 0);
        t.require(std::find(options.begin(), options.end(), marginal) != options.end(),
                  "hull vertex factorizes into local extreme points");
        // product structure: joint = product of marginals
        bool product = true;
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
          Config cfg = config_at(scope, idx);
          Rat expect(1);
          for (std::size_t j = 0; j < scope.size(); ++j)
            expect *= v.marginal({scope[j].name()}).table()[static_cast<std::size_t>(cfg[j])];
          product = product && v.at(idx) == expect;
        }
        t.require(product, "hull vertex is the product of its factors");
      }
    }
  }
  return t;
}

Tally criterion10_invariant_suites() {
  Tally t;
  Rng rng(3001);

  // conjugacy + hull insensitivity of bounds
  Scope two = testsupport::binary_scope({"A", "B"});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<JointDensity> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(JointDensity(two, testsupport::random_density(rng, 4)));
    CredalSet k = CredalSet::raw(two, vs);

    std::vector<Rat> fv;
    for (int i = 0; i < 4; ++i) fv.push_back(Rat(static_cast<int>(rng() % 13)) - 6);
    auto f = [&](const Config& c) { return fv[config_index(two, c)]; };
    auto neg = [&](const Config& c) { return Rat(-fv[config_index(two, c)]); };
    t.require(k.upper_expectation(f) == -k.lower_expectation(neg), "conjugacy");

    std::vector<Rat> mixed(4, Rat(0));
    for (std::size_t i = 0; i < 4; ++i)
      mixed[i] = vs[0].table()[i] / 2 + vs[1].table()[i] / 4 + vs[2].table()[i] / 4;
    auto grown = vs;
    grown.push_back(JointDensity(two, mixed));
    CredalSet k2 = CredalSet::raw(two, grown);
    t.require(k.lower_expectation(f) == k2.lower_expectation(f) &&
                  k.upper_expectation(f) == k2.upper_expectation(f),
              "hull insensitivity of expectation bounds");
  }

  // reduce_to_extreme idempotence
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> cloud;
    for (int i = 0; i < 6; ++i) cloud.push_back(testsupport::random_density(rng, 3 + trial % 2));
    auto reduced = reduce_to_extreme(cloud);
    t.require(reduce_to_extreme(reduced) == reduced, "reduce_to_extreme idempotence");
  }

  // same_hull equivalence laws on random triples
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> a;
    for (int i = 0; i < 4; ++i) a.push_back(testsupport::random_density(rng, 3));
    auto mix = [&](const Vec& u, const Vec& v, int wu) {
      Vec m(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        m[i] = (u[i] * wu + v[i] * (4 - wu)) / 4;
      return m;
    };
    std::vector<Vec> b = a;
    b.push_back(mix(a[0], a[1], 1 + static_cast<int>(rng() % 3)));
    std::vector<Vec> c = b;
    c.push_back(mix(a[1], a[2], 1 + static_cast<int>(rng() % 3)));
    std::shuffle(c.begin(), c.end(), rng);
    bool refl = same_hull(a, a);
    bool ab = same_hull(a, b), ba = same_hull(b, a);
    bool bc = same_hull(b, c), ac = same_hull(a, c);
    t.require(refl, "same_hull reflexive");
    t.require(ab && ba, "same_hull symmetric on hull-equal lists");
    t.require(bc && ac, "same_hull transitive across the chain");
  }

  // LP optimum vs enumeration extrema
  for (int trial = 0; trial < 200; ++trial) {
    HRep h(3 + trial % 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int r = 0; r < 3; ++r) {
      Vec c(static_cast<std::size_t>(h.dim()));
      for (auto& x : c) x = Rat(coeff(rng));
      h.add_le(std::move(c), Rat(coeff(rng)) / 3 + 1);
    }
    std::vector<Vec> verts;
    try {
      verts = enumerate_vertices(h);
    } catch (const Infeasible&) {
      continue;
    }
    Vec objective(static_cast<std::size_t>(h.dim()));
    for (auto& x : objective) x = Rat(coeff(rng));
    Rat lo = lp_optimize(objective, h, LpDir::Min).optimum;
    Rat hi = lp_optimize(objective, h, LpDir::Max).optimum;
    Rat scan_lo = lo, scan_hi = hi;
    bool first = true;
    for (const auto& v : verts) {
      Rat val(0);
      for (std::size_t i = 0; i < v.size(); ++i) val += objective[i] * v[i];
      if (first) {
        scan_lo = scan_hi = val;
        first = false;
      } else {
        scan_lo = std::min(scan_lo, val);
        scan_hi = std::max(scan_hi, val);
      }
    }
    t.require(lo == scan_lo && hi == scan_hi, "LP optimum equals enumeration extrema");
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Tally()> run;
  };
  std::vector<Criterion> criteria = {
      {"1. exact Example-1 reproduction (64-vertex restriction, p*, both lower bounds)",
       criterion1_example1_reproduction},
      {"2. Table-1 consistency (product identities, p* outside K')", criterion2_table1_consistency},
      {"3. epistemic Markov verdicts on K''", criterion3_epistemic_markov_on_kdouble},
      {"4. d-separation verdicts (chain, collider, 200 random oracles)", criterion4_d_separation},
      {"5. exact Example-2 reproduction (six and four vertices, lost independence)",
       criterion5_example2_reproduction},
      {"6. d-separation implies strong independence on 100 random networks",
       criterion6_theorem2_suite},
      {"7. probe vs strong-notion Markov on 50 tiny networks, plain and augmented",
       criterion7_theorem3_tiny_scale},
      {"8. point-network queries equal brute-force conditionals on 100 networks",
       criterion8_point_network_queries},
      {"9. unconnected-node extensions: counts and factorization", criterion9_factorization},
      {"10. invariant suites (conjugacy, hull insensitivity, idempotence, hull laws, LP vs enumeration)",
       criterion10_invariant_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Tally t = c.run();
    std::cout << (t.ok() ? "PASS " : "FAIL ") << c.name << " [" << t.summary() << "]\n";
    std::cout.flush();
    if (!t.ok()) ++failures;
  }
  return failures;
}
