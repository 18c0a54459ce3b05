#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace latbel;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

std::vector<std::string> names(const Lattice& l, std::vector<Element> xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(l.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Strictly increasing values ending in 1, assigned to `order`.
std::map<Element, double> increasing_pi(const std::vector<Element>& order, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) v.push_back(0.001 + 0.99 * u(rng));
  std::sort(v.begin(), v.end());
  v.push_back(1.0);
  std::map<Element, double> pi;
  for (std::size_t i = 0; i < order.size(); ++i) pi[order[i]] = v[i];
  return pi;
}

// Random linear extension of the join-irreducibles, so π is isotone.
std::map<Element, double> shuffled_pi(const Lattice& l, std::mt19937_64& rng) {
  std::vector<Element> rest = l.join_irreducibles(), order;
  while (!rest.empty()) {
    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (std::none_of(rest.begin(), rest.end(), [&](Element o) { return l.lt(o, rest[i]); }))
        minimal.push_back(i);
    const std::size_t pick = minimal[std::uniform_int_distribution<std::size_t>(0, minimal.size() - 1)(rng)];
    order.push_back(rest[pick]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return increasing_pi(order, rng);
}

// Autodual distributive lattices with their negations.
std::vector<std::pair<corpus::Named, std::vector<Negation>>> autodual_distributive() {
  std::vector<std::pair<corpus::Named, std::vector<Negation>>> out;
  for (auto& n : corpus::extended()) {
    if (n.lattice.size() < 2 || distributivity_violation(n.lattice)) continue;
    auto negs = find_negations(n.lattice, 200);
    if (!negs.empty()) out.emplace_back(n, std::move(negs));
  }
  return out;
}

}  // namespace

TEST(Necessity, ChainMassGivesNecessity) {
  const Lattice l = corpus::ladder8();
  SetFunction m(l);
  m[l.at("a")] = 0.5;
  m[l.top()] = 0.5;
  EXPECT_TRUE(check_necessity(zeta_transform(m)));

  SetFunction spread(l);
  spread[l.at("a")] = 0.3;
  spread[l.at("d")] = 0.3;
  spread[l.top()] = 0.4;
  const Check c = check_necessity(zeta_transform(spread));
  EXPECT_FALSE(c);
  EXPECT_EQ(c.witness.size(), 2u);

  EXPECT_FALSE(check_necessity(SetFunction(l)));
}

TEST(Necessity, ConjugateIsPossibility) {
  std::mt19937_64 rng(121);
  for (const auto& [named, negs] : autodual_distributive()) {
    const Lattice& l = named.lattice;
    const SetFunction nec = zeta_transform(corpus::random_chain_mass(l, rng));
    ASSERT_TRUE(check_necessity(nec)) << named.label;
    for (const Negation& n : negs)
      EXPECT_TRUE(check_possibility(conjugate(nec, n, ConjugateVariant::vee))) << named.label;
  }
  const Lattice b = boolean_lattice(2).lattice;
  SetFunction f(b);
  f[b.at("{1}")] = 0.5;
  f[b.top()] = 1.0;
  const Check c = check_possibility(f);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.witness, (std::vector<Element>{b.at("{1}"), b.at("{2}")}));
}

TEST(Necessity, ChainSupportIffNecessity) {
  std::mt19937_64 rng(122);
  auto all = corpus::extended();
  for (int i = 0; i < 80; ++i)
    all.push_back({"random" + std::to_string(i), corpus::random_closure_lattice(rng, 4, 1 + i % 7)});
  for (const auto& [label, l] : all) {
    if (l.size() < 2) continue;
    for (int t = 0; t < 6; ++t) {
      const SetFunction m = t % 2 ? corpus::random_chain_mass(l, rng) : corpus::random_mass(l, rng);
      EXPECT_EQ(check_necessity(zeta_transform(m)).holds, oracle::focal_chain(m, kTolerance)) << label;
    }
  }
}

TEST(Distributions, EvaluationMatchesIrreducibleExtremes) {
  std::mt19937_64 rng(123);
  for (const auto& [named, negs] : autodual_distributive()) {
    const Lattice& l = named.lattice;
    const auto pd = make_possibility_distribution(l, shuffled_pi(l, rng));
    const SetFunction poss = possibility_function(pd);
    EXPECT_TRUE(check_possibility(poss)) << named.label;
    for (Element x = 0; x < l.size(); ++x) {
      double want = 0;
      for (Element j : l.join_irreducibles())
        if (l.leq(j, x)) want = std::max(want, pd.pi.at(j));
      EXPECT_EQ(poss[x], want) << named.label;
    }
    std::map<Element, double> nu;
    for (Element m : l.meet_irreducibles()) nu[m] = 1.0 - pd.pi.at(negs.front().inverse[m]);
    const auto nd = make_necessity_distribution(l, nu);
    const SetFunction nec = necessity_function(nd);
    EXPECT_TRUE(check_necessity(nec)) << named.label;
    for (Element x = 0; x < l.size(); ++x) {
      double want = 1;
      for (Element m : l.meet_irreducibles())
        if (l.leq(x, m)) want = std::min(want, nd.nu.at(m));
      EXPECT_EQ(nec[x], want) << named.label;
    }
  }
}

TEST(Distributions, RestrictionRoundTrips) {
  std::mt19937_64 rng(124);
  for (const auto& [named, negs] : autodual_distributive()) {
    const Lattice& l = named.lattice;
    const SetFunction nec = zeta_transform(corpus::random_chain_mass(l, rng));
    const auto nd = necessity_distribution(nec);
    EXPECT_LE(max_abs_diff(necessity_function(nd), nec), 1e-12) << named.label;
    for (const Negation& n : negs) {
      const SetFunction poss = conjugate(nec, n, ConjugateVariant::vee);
      const auto pd = possibility_distribution(poss);
      EXPECT_LE(max_abs_diff(possibility_function(pd), poss), 1e-12) << named.label;
      for (Element j : l.join_irreducibles()) EXPECT_NEAR(pd.pi.at(j), 1.0 - nd.nu.at(n(j)), 1e-12);
    }
  }
}

TEST(Distributions, BoundaryValues) {
  const Lattice l = corpus::grid18().lattice;
  const auto pd = corpus::grid18_pi(l);
  EXPECT_EQ(eval_possibility(pd, l.bottom()), 0.0);
  EXPECT_EQ(eval_possibility(pd, l.top()), 1.0);
  std::map<Element, double> nu;
  for (Element m : l.meet_irreducibles()) nu[m] = 0.0;
  const auto nd = make_necessity_distribution(l, nu);
  EXPECT_EQ(eval_necessity(nd, l.top()), 1.0);
  EXPECT_EQ(eval_necessity(nd, l.bottom()), 0.0);
}

TEST(Distributions, Errors) {
  const Lattice l = corpus::grid18().lattice;
  std::map<Element, double> pi = corpus::grid18_pi(l).pi;

  auto missing = pi;
  missing.erase(l.at("{c}"));
  EXPECT_EQ(kind_of([&] { make_possibility_distribution(l, missing); }), ErrorKind::InvalidDistribution);
  auto outside = pi;
  outside[l.at("{c}")] = -0.2;
  EXPECT_EQ(kind_of([&] { make_possibility_distribution(l, outside); }), ErrorKind::InvalidDistribution);
  auto low = pi;
  low[l.at("{a,b}")] = 0.95;
  EXPECT_EQ(kind_of([&] { make_possibility_distribution(l, low); }), ErrorKind::InvalidDistribution);
  auto swapped = pi;
  std::swap(swapped[l.at("{a}")], swapped[l.at("{a,b}")]);
  EXPECT_EQ(kind_of([&] { make_possibility_distribution(l, swapped); }), ErrorKind::InvalidDistribution);
  EXPECT_EQ(kind_of([&] { reconstruct_chain(l, corpus::grid18_negation(l), PossibilityDistribution{l, swapped}); }),
            ErrorKind::InvalidDistribution);
  auto foreign = pi;
  foreign[l.at("{a,c}")] = 0.5;
  EXPECT_EQ(kind_of([&] { make_possibility_distribution(l, foreign); }), ErrorKind::InvalidDistribution);

  std::map<Element, double> nu;
  for (Element m : l.meet_irreducibles()) nu[m] = 0.5;
  EXPECT_EQ(kind_of([&] { make_necessity_distribution(l, nu); }), ErrorKind::InvalidDistribution);

  const Lattice m3 = m3_lattice();
  SetFunction f(m3);
  f[m3.top()] = 1.0;
  EXPECT_EQ(kind_of([&] { possibility_distribution(f); }), ErrorKind::NotDistributive);
  EXPECT_EQ(kind_of([&] { necessity_distribution(f); }), ErrorKind::NotDistributive);
}

TEST(Reconstruct, WorkedExample) {
  const Lattice l = corpus::grid18().lattice;
  const FocalChain fc = reconstruct_chain(l, corpus::grid18_negation(l), corpus::grid18_pi(l));

  const std::vector<std::string> sorted{"{c}", "{c,d}", "{c,e}", "{a}", "{c,d,e,f}", "{a,b}"};
  for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(l.name(fc.sorted[i]), sorted[i]);

  struct Row {
    std::size_t k;
    std::string x, nx;
    std::vector<std::string> eta;
    std::string iota, chain;
    double mass;
  };
  const std::vector<Row> rows{
      {6, "{a,b}", "{c,d,e,f}", {"{c}", "{c,d}", "{c,d,e,f}", "{c,e}"}, "{a}", "{a}", 0.1},
      {5, "{c,d,e,f}", "{a,b}", {"{a}", "{a,b}"}, "{c}", "{a,c}", 0.3},
      {4, "{a}", "{a,c,d,e,f}", {"{a}", "{c}", "{c,d}", "{c,d,e,f}", "{c,e}"}, "{a,b}", "{a,b,c}", 0.2},
      {3, "{c,e}", "{a,b,c,d}", {"{a}", "{a,b}", "{c}", "{c,d}"}, "{c,e}", "{a,b,c,e}", 0.2},
      {2, "{c,d}", "{a,b,c,e}", {"{a}", "{a,b}", "{c}", "{c,e}"}, "{c,d}", "{a,b,c,d,e}", 0.1},
      {1, "{c}", "{a,b,c,d,e}", {"{a}", "{a,b}", "{c}", "{c,d}", "{c,e}"}, "{c,d,e,f}", "{a,b,c,d,e,f}", 0.1},
  };
  ASSERT_EQ(fc.steps.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& s = fc.steps[i];
    EXPECT_EQ(s.k, rows[i].k);
    EXPECT_EQ(l.name(s.x), rows[i].x);
    EXPECT_EQ(l.name(s.negated), rows[i].nx);
    std::vector<std::string> eta = rows[i].eta;
    std::sort(eta.begin(), eta.end());
    EXPECT_EQ(names(l, s.eta_negated), eta) << "step " << s.k;
    EXPECT_EQ(l.name(s.iota), rows[i].iota);
    EXPECT_EQ(l.name(s.chain_element), rows[i].chain);
    EXPECT_NEAR(s.mass, rows[i].mass, 1e-12);
    EXPECT_EQ(fc.iota[i], s.iota);
    EXPECT_EQ(fc.chain[i], s.chain_element);
    EXPECT_NEAR(fc.mass[s.chain_element], rows[i].mass, 1e-12);
  }
  EXPECT_EQ(fc.chain.back(), l.top());
  EXPECT_EQ(fc.mass.focal_elements().size(), 6u);
}

TEST(Reconstruct, WorkedExampleMassesAreDifferences) {
  // Any π with the same order gives the same chain, with m(k-th element)
  // equal to the gap π(j_k) - π(j_{k-1}).
  std::mt19937_64 rng(125);
  const Lattice l = corpus::grid18().lattice;
  const Negation n = corpus::grid18_negation(l);
  const FocalChain base = reconstruct_chain(l, n, corpus::grid18_pi(l));
  for (int t = 0; t < 50; ++t) {
    const auto pi = increasing_pi(base.sorted, rng);
    const FocalChain fc = reconstruct_chain(l, n, make_possibility_distribution(l, pi));
    EXPECT_EQ(fc.chain, base.chain);
    EXPECT_EQ(fc.iota, base.iota);
    for (const auto& s : fc.steps) {
      const double below = s.k == 1 ? 0.0 : pi.at(base.sorted[s.k - 2]);
      EXPECT_NEAR(fc.mass[s.chain_element], pi.at(s.x) - below, 1e-15);
    }
  }
}

TEST(Reconstruct, BooleanNestedSets) {
  // With complementation, the chain adds the elements in decreasing π order.
  std::mt19937_64 rng(126);
  for (std::size_t k = 1; k <= 4; ++k) {
    const Lattice l = boolean_lattice(k).lattice;
    const auto mk = oracle::masks(l);
    unsigned full = 0;
    for (unsigned m : mk) full |= m;
    std::vector<Element> comp(l.size());
    for (Element x = 0; x < l.size(); ++x) comp[x] = oracle::by_mask(l, full & ~mk[x]);
    const Negation n = make_negation(l, comp);
    const auto pi = shuffled_pi(l, rng);
    const FocalChain fc = reconstruct_chain(l, n, make_possibility_distribution(l, pi));
    unsigned acc = 0;
    for (std::size_t i = 0; i < fc.chain.size(); ++i) {
      acc |= mk[fc.sorted[fc.sorted.size() - 1 - i]];
      EXPECT_EQ(mk[fc.chain[i]], acc);
    }
  }
}

TEST(Reconstruct, Errors) {
  const Lattice l = corpus::grid18().lattice;
  const Negation n = corpus::grid18_negation(l);
  auto pi = corpus::grid18_pi(l);

  auto tied = pi;
  tied.pi[l.at("{c,d}")] = 0.1;
  EXPECT_EQ(kind_of([&] { reconstruct_chain(l, n, tied); }), ErrorKind::TiesInDistribution);

  auto low = pi;
  low.pi[l.at("{a,b}")] = 0.95;
  EXPECT_EQ(kind_of([&] { reconstruct_chain(l, n, low); }), ErrorKind::TopValueNotOne);

  EXPECT_EQ(kind_of([&] { reconstruct_chain(l, invert(n), pi); }), ErrorKind::InvalidNegation);

  const Lattice other = corpus::grid18().lattice;
  EXPECT_EQ(kind_of([&] { reconstruct_chain(other, n, pi); }), ErrorKind::LatticeMismatch);

  const Lattice m3 = m3_lattice();
  const Negation n3 = find_negations(m3, 1).front();
  EXPECT_EQ(kind_of([&] { reconstruct_chain(m3, n3, PossibilityDistribution{m3, {}}); }),
            ErrorKind::NotDistributive);
}

TEST(Reconstruct, ReproducesDistributionAndIsUnique) {
  std::mt19937_64 rng(127);
  std::size_t checked = 0;
  for (const auto& [named, negs] : autodual_distributive()) {
    const Lattice& l = named.lattice;
    for (const Negation& n : negs)
      for (int t = 0; t < 3; ++t) {
        const auto pi = shuffled_pi(l, rng);
        const FocalChain fc = reconstruct_chain(l, n, make_possibility_distribution(l, pi));
        EXPECT_TRUE(fc.mass.validate()) << named.label;
        EXPECT_TRUE(fc.mass.is_nonnegative()) << named.label;
        EXPECT_TRUE(oracle::focal_chain(fc.mass.function(), 0.0)) << named.label;

        const SetFunction nec = fc.mass.belief();
        EXPECT_TRUE(check_necessity(nec)) << named.label;
        for (const auto& [j, p] : pi) EXPECT_NEAR(1.0 - nec[n(j)], p, 1e-12) << named.label;
        const SetFunction poss = conjugate(nec, n, ConjugateVariant::vee);
        for (const auto& [j, p] : pi) EXPECT_NEAR(poss[j], p, 1e-12) << named.label;

        const auto sol = oracle::chain_solutions(l, n, pi, 1e-12);
        EXPECT_FALSE(sol.underdetermined) << named.label;
        ASSERT_EQ(sol.masses.size(), 1u) << named.label;
        for (Element x = 0; x < l.size(); ++x) EXPECT_NEAR(sol.masses[0][x], fc.mass[x], 1e-12);
        ++checked;
      }
  }
  EXPECT_GT(checked, 30u);
}
