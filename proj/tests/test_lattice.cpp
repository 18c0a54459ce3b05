#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace latbel;

namespace {

std::vector<std::string> names(const Lattice& l, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(l.name(x));
  return out;
}

std::vector<corpus::Named> with_random(int count, std::uint64_t seed) {
  auto all = corpus::extended();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i)
    all.push_back({"random" + std::to_string(i), corpus::random_closure_lattice(rng, 4, 1 + i % 7)});
  return all;
}

}  // namespace

TEST(Lattice, AntichainHasNoUpperBound) {
  try {
    lattice_from_poset(corpus::antichain({"a", "b"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
    EXPECT_EQ(e.names(), (std::vector<std::string>{"a", "b", "no-upper-bound"}));
  }
}

TEST(Lattice, TwoMaximalUpperBoundsHaveNoLeastOne) {
  // a, b below both c and d, with bounds top and bot.
  const Poset p = build_poset({"bot", "a", "b", "c", "d", "top"},
                              {{"bot", "a"}, {"bot", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                               {"b", "d"}, {"c", "top"}, {"d", "top"}});
  try {
    lattice_from_poset(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
    EXPECT_EQ(e.names(), (std::vector<std::string>{"a", "b", "no-least-upper-bound"}));
  }
}

TEST(Lattice, MissingLowerBound) {
  const Poset p = build_poset({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}});
  try {
    lattice_from_poset(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.names(), (std::vector<std::string>{"a", "b", "no-lower-bound"}));
  }
}

TEST(Lattice, EmptyIsRejected) {
  try {
    lattice_from_poset(build_poset({}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyStructure);
  }
}

TEST(Lattice, BooleanIrreducibles) {
  const Lattice l = boolean_lattice(3).lattice;
  EXPECT_EQ(names(l, l.join_irreducibles()), (std::vector<std::string>{"{1}", "{2}", "{3}"}));
  EXPECT_EQ(names(l, l.meet_irreducibles()), (std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}"}));
  EXPECT_EQ(l.name(l.bottom()), "{}");
  EXPECT_EQ(l.name(l.top()), "{1,2,3}");
  EXPECT_EQ(l.poset().cover_pairs().size(), 12u);
}

TEST(Lattice, Ladder8Irreducibles) {
  const Lattice l = corpus::ladder8();
  EXPECT_EQ(names(l, l.join_irreducibles()), (std::vector<std::string>{"a", "b", "d", "e"}));
  EXPECT_EQ(names(l, l.meet_irreducibles()), (std::vector<std::string>{"a", "d", "e", "f"}));
}

TEST(Lattice, JoinsAndMeets) {
  const Lattice b = boolean_lattice(3).lattice;
  const Element one = b.at("{1}"), two = b.at("{2}");
  const std::vector<Element> single{one}, pair{one, two};
  EXPECT_EQ(join(b, single), one);
  EXPECT_EQ(b.name(join(b, pair)), "{1,2}");
  EXPECT_EQ(meet(b, pair), b.bottom());
  const std::vector<Element> empty;
  EXPECT_EQ(join_or_bottom(b, empty), b.bottom());
  EXPECT_EQ(meet_or_top(b, empty), b.top());
  EXPECT_THROW(join(b, empty), Error);
  const std::vector<Element> bad{one, 99};
  EXPECT_THROW(join(b, bad), Error);

  const Lattice m3 = m3_lattice();
  for (const char* x : {"a", "b", "c"})
    for (const char* y : {"a", "b", "c"})
      if (std::string(x) != y) {
        EXPECT_EQ(m3.join(m3.at(x), m3.at(y)), m3.top());
        EXPECT_EQ(m3.meet(m3.at(x), m3.at(y)), m3.bottom());
      }
}

TEST(Lattice, Heights) {
  const Lattice n5 = n5_lattice();
  EXPECT_EQ(n5.height(n5.at("top")), 3u);
  EXPECT_EQ(n5.height(n5.at("z")), 1u);
  EXPECT_EQ(n5.coheight(n5.at("z")), 1u);
  EXPECT_EQ(n5.coheight(n5.at("x")), 2u);
}

TEST(Lattice, Decompositions) {
  const Lattice b = boolean_lattice(3).lattice;
  EXPECT_TRUE(eta(b, b.bottom()).empty());
  EXPECT_EQ(names(b, eta(b, b.at("{1,2}"))), (std::vector<std::string>{"{1}", "{2}"}));
  EXPECT_EQ(names(b, eta_star(b, b.at("{1,2}"))), (std::vector<std::string>{"{1}", "{2}"}));
  EXPECT_EQ(names(b, mu_set(b, b.at("{1}"))), (std::vector<std::string>{"{1,2}", "{1,3}"}));
  EXPECT_EQ(names(b, mu_star(b, b.at("{1}"))), (std::vector<std::string>{"{1,2}", "{1,3}"}));
  EXPECT_TRUE(mu_set(b, b.top()).empty());

  const Lattice g = corpus::grid18().lattice;
  EXPECT_EQ(names(g, eta(g, g.at("{c,d,e,f}"))),
            (std::vector<std::string>{"{c}", "{c,d}", "{c,e}", "{c,d,e,f}"}));
  EXPECT_EQ(names(g, eta_star(g, g.at("{c,d,e,f}"))), (std::vector<std::string>{"{c,d,e,f}"}));
  EXPECT_EQ(names(g, eta_star(g, g.at("{a,b,c,d}"))), (std::vector<std::string>{"{a,b}", "{c,d}"}));
  EXPECT_EQ(names(g, eta_star(g, g.at("{c,d,e}"))), (std::vector<std::string>{"{c,d}", "{c,e}"}));
}

TEST(Lattice, IrredundantDecompositionNeedsLocalDistributivity) {
  const Lattice m3 = m3_lattice();
  EXPECT_THROW(eta_star(m3, m3.top()), Error);
  try {
    mu_star(n5_lattice(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DecompositionNotUnique);
  }
}

TEST(Lattice, EtaStarJoinsBackAndIsIrredundant) {
  for (const auto& [label, l] : with_random(40, 31)) {
    if (!l.is_lower_locally_distributive()) continue;
    for (Element x = 0; x < l.size(); ++x) {
      const auto s = eta_star(l, x);
      EXPECT_EQ(join_or_bottom(l, s), x) << label;
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto fewer = s;
        fewer.erase(fewer.begin() + static_cast<long>(i));
        EXPECT_NE(join_or_bottom(l, fewer), x) << label;
      }
    }
  }
}

TEST(Lattice, DownsetLatticeOfAntichainIsBoolean) {
  const auto d = downset_lattice(corpus::antichain({"p", "q"}));
  EXPECT_EQ(d.lattice.size(), 4u);
  EXPECT_TRUE(profile(d.lattice).is_distributive);
  EXPECT_TRUE(profile(d.lattice).is_complemented);
}

TEST(Lattice, Grid18HasEighteenDownsets) {
  const auto d = corpus::grid18();
  const Lattice& l = d.lattice;
  EXPECT_EQ(l.size(), 18u);
  // Join-irreducibles are the principal downsets, one per base element.
  ASSERT_EQ(l.join_irreducibles().size(), 6u);
  for (Element j : l.join_irreducibles()) {
    const Bits& s = d.downsets[j];
    bool principal = false;
    for (Element b = 0; b < d.base.size(); ++b) principal = principal || s == d.base.down_set(b);
    EXPECT_TRUE(principal) << l.name(j);
  }
  // Join is union and meet intersection.
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y) {
      EXPECT_EQ(d.downsets[l.join(x, y)], d.downsets[x] | d.downsets[y]);
      EXPECT_EQ(d.downsets[l.meet(x, y)], d.downsets[x] & d.downsets[y]);
    }
  EXPECT_EQ(l.name(d.element_of(d.downsets[5])), l.name(5));
}

TEST(Lattice, DownsetCap) {
  Limits lim;
  lim.max_downsets = 10;
  try {
    downset_lattice(corpus::antichain({"1", "2", "3", "4"}), lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimitExceeded);
  }
}

TEST(Lattice, BirkhoffRoundTrip) {
  for (const auto& [label, l] : with_random(60, 32)) {
    if (distributivity_violation(l)) continue;
    const Poset j = induced_subposet(l.poset(), l.join_irreducibles());
    const auto d = downset_lattice(j);
    ASSERT_EQ(d.lattice.size(), l.size()) << label;
    // x -> η(x), read as a downset of J(L), is an order isomorphism.
    std::vector<Element> phi(l.size());
    for (Element x = 0; x < l.size(); ++x) {
      Bits s(j.size());
      for (Element e : eta(l, x)) s.set(j.at(l.name(e)));
      phi[x] = d.element_of(s);
    }
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y)
        EXPECT_EQ(l.leq(x, y), d.lattice.leq(phi[x], phi[y])) << label;
  }
}

TEST(Lattice, JoinTableIsTheLeastUpperBound) {
  for (const auto& [label, l] : with_random(40, 33))
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) EXPECT_EQ(l.join(x, y), oracle::brute_join(l, x, y)) << label;
}

TEST(Lattice, JoinIsMeetOfTheDual) {
  for (const auto& [label, l] : with_random(30, 34)) {
    const Lattice d = dual(l);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        EXPECT_EQ(l.join(x, y), d.meet(x, y)) << label;
        EXPECT_EQ(l.meet(x, y), d.join(x, y)) << label;
      }
    EXPECT_EQ(l.bottom(), d.top());
  }
}

TEST(Lattice, Absorption) {
  for (const auto& [label, l] : with_random(30, 35))
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        EXPECT_EQ(l.join(x, l.meet(x, y)), x) << label;
        EXPECT_EQ(l.meet(x, l.join(x, y)), x) << label;
      }
}

TEST(Lattice, BoundsAndIrreducibleDefinitions) {
  for (const auto& [label, l] : with_random(30, 36))
    for (Element x = 0; x < l.size(); ++x) {
      EXPECT_TRUE(l.leq(l.bottom(), x));
      EXPECT_TRUE(l.leq(x, l.top()));
      EXPECT_EQ(l.is_join_irreducible(x), l.lower_covers(x).size() == 1) << label;
      EXPECT_EQ(l.is_meet_irreducible(x), l.upper_covers(x).size() == 1) << label;
    }
}

TEST(Lattice, EtaIsMonotone) {
  for (const auto& [label, l] : with_random(40, 37)) {
    const bool distributive = !distributivity_violation(l);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        const auto ex = eta(l, x), ey = eta(l, y);
        const bool sub = std::includes(ey.begin(), ey.end(), ex.begin(), ex.end());
        if (l.leq(x, y)) { EXPECT_TRUE(sub) << label; }
        if (distributive) { EXPECT_EQ(sub, l.leq(x, y)) << label; }
      }
    for (Element x = 0; x < l.size(); ++x) EXPECT_EQ(join_or_bottom(l, eta(l, x)), x) << label;
  }
}

TEST(Lattice, MaximalChains) {
  const auto c3 = maximal_chains(chain_lattice(2));
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].size(), 3u);
  EXPECT_EQ(maximal_chains(boolean_lattice(2).lattice).size(), 2u);
  const Lattice b3 = boolean_lattice(3).lattice;
  const auto chains = maximal_chains(b3);
  ASSERT_EQ(chains.size(), 6u);
  for (const auto& c : chains) EXPECT_EQ(c.size() - 1, b3.join_irreducibles().size());

  Limits lim;
  lim.max_chains = 5;
  EXPECT_THROW(maximal_chains(b3, lim), Error);
}

TEST(Lattice, MaximalChainCountMatchesSubsetSearch) {
  for (const auto& [label, l] : with_random(30, 38)) {
    if (l.size() > 14) continue;
    EXPECT_EQ(maximal_chains(l).size(), oracle::brute_maximal_chain_count(l)) << label;
  }
}

TEST(Lattice, LocallyDistributiveChainsHaveLengthJ) {
  for (const auto& [label, l] : with_random(40, 39)) {
    if (!l.is_lower_locally_distributive()) continue;
    for (const auto& c : maximal_chains(l)) EXPECT_EQ(c.size() - 1, l.join_irreducibles().size()) << label;
  }
}
