#include <doctest.h>

#include <random>

#include "normcov/errors.hpp"
#include "normcov/metacyclic.hpp"
#include "oracles.hpp"

using namespace normcov;

namespace {

MetacyclicShape S(int n, std::vector<int> parts) { return MetacyclicShape::from_parts(n, parts); }

// sigma on letters 2..n-1 laid out by the shape's parts, tau = (0 1).
std::vector<oracle::Images> generators(const MetacyclicShape &s) {
  const int n = s.degree();
  std::vector<int> parts{1, 1};
  for (int x : s.canonical_parts())
    parts.push_back(x);
  oracle::Images tau(static_cast<std::size_t>(n));
  std::iota(tau.begin(), tau.end(), 0);
  std::swap(tau[0], tau[1]);
  return {oracle::perm_of_parts(parts, n), tau};
}

bool brute_contained(const MetacyclicShape &s, const Component &h) {
  const auto gens = generators(s);
  if (const auto *p = std::get_if<Intransitive>(&h))
    return oracle::in_some_intransitive(gens, s.degree(), p->x);
  if (const auto *w = std::get_if<Imprimitive>(&h))
    return oracle::in_some_imprimitive(gens, w->b, w->m);
  return false;
}

oracle::Images relabel(const oracle::Images &g, const std::vector<int> &pi) {
  oracle::Images out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    out[static_cast<std::size_t>(pi[x])] = pi[static_cast<std::size_t>(g[x])];
  return out;
}

} // namespace

TEST_CASE("shape enumeration") {
  CHECK(enumerate_shapes(3).empty());
  const auto four = enumerate_shapes(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0].canonical_parts() == std::vector<int>{2});
  const auto five = enumerate_shapes(5);
  REQUIRE(five.size() == 1);
  CHECK(five[0].canonical_parts() == std::vector<int>{2, 1});
  const auto six = enumerate_shapes(6);
  REQUIRE(six.size() == 3);
  CHECK(six[0].canonical_parts() == std::vector<int>{4});
  CHECK(six[1].canonical_parts() == std::vector<int>{2, 2});
  CHECK(six[2].canonical_parts() == std::vector<int>{2, 1, 1});
  CHECK(S(8, {4, 2}).to_string() == "[1^2 | 4 2] in S_8");
  CHECK_THROWS_AS(S(7, {3, 1, 1}), domain_error);
  CHECK_THROWS_AS(S(7, {2, 2}), domain_error);
}

TEST_CASE("shape invariants") {
  for (int n = 4; n <= 22; ++n) {
    const auto all = enumerate_shapes(n);
    std::size_t with_even = 0;
    for (const auto &t : enumerate_partitions(n - 2)) {
      bool even = false;
      for (int x : t.parts())
        even = even || x % 2 == 0;
      with_even += even;
    }
    CHECK(all.size() == with_even);
    for (const auto &s : all) {
      const auto parts = s.canonical_parts();
      CHECK(std::accumulate(parts.begin(), parts.end(), 0) == n - 2);
      CHECK(s.split() >= 1);
      CHECK(s.sigma_type().multiplicity(1) >= 2);
      CHECK(type_order(s.sigma_type()) % 2 == 0);
      for (int i = 0; i + 1 < static_cast<int>(parts.size()); ++i)
        if (i + 1 < s.split() || i >= s.split())
          CHECK(parts[static_cast<std::size_t>(i)] >= parts[static_cast<std::size_t>(i + 1)]);
    }
  }
}

TEST_CASE("intransitive coverage examples") {
  const auto a = covered_by_intransitive(S(4, {2}), 2);
  CHECK(a.status == CoverageStatus::Covered);
  REQUIRE(std::holds_alternative<Cut>(a.witness));
  CHECK(std::get<Cut>(a.witness).to_string() == "[1^2 | 2]");
  CHECK(covered_by_intransitive(S(10, {4, 4}), 3).status == CoverageStatus::Impossible);
  CHECK(covered_by_intransitive(S(10, {4, 3, 1}), 3).status == CoverageStatus::Covered);
  CHECK_THROWS_AS(covered_by_intransitive(S(10, {4, 4}), 6), domain_error);
}

TEST_CASE("wreath and alternating coverage examples") {
  CHECK(covered_by_wreath(S(8, {4, 2}), 2, 4).status == CoverageStatus::Covered);
  CHECK(covered_by_wreath(S(12, {4, 3, 3}), 2, 6).status == CoverageStatus::NotEstablished);
  CHECK(covered_by_wreath(S(8, {6}), 2, 4).status == CoverageStatus::Covered);
  CHECK_THROWS_AS(covered_by_wreath(S(8, {6}), 3, 3), domain_error);
  for (int n : {4, 8, 11})
    for (const auto &s : enumerate_shapes(n))
      CHECK(covered_by_alternating(s).status == CoverageStatus::Impossible);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_contained(S(6, {4}), Intransitive{2}));
  CHECK(oracle_contained(S(6, {2, 2}), Imprimitive{2, 3}));
  CHECK_FALSE(oracle_contained(S(6, {4}), Alternating{}));
  CHECK_THROWS_AS(oracle_contained(S(14, {12}), Intransitive{2}), resource_error);
}

TEST_CASE("library oracle agrees with the test-side enumeration up to 10") {
  for (int n = 4; n <= 10; ++n) {
    const ComponentPool pool = standard_pool(n);
    for (const auto &s : enumerate_shapes(n))
      for (const Component &h : pool.members())
        if (!std::holds_alternative<Alternating>(h) && !std::holds_alternative<Affine>(h))
          REQUIRE_MESSAGE(oracle_contained(s, h) == brute_contained(s, h),
                          s.to_string() << " " << describe(h, n));
  }
}

TEST_CASE("intransitive verdicts are exact against the oracle up to 12") {
  for (int n = 4; n <= 12; ++n)
    for (const auto &s : enumerate_shapes(n))
      for (int x = 1; 2 * x <= n; ++x) {
        const auto v = covered_by_intransitive(s, x);
        REQUIRE(v.status != CoverageStatus::NotEstablished);
        REQUIRE((v.status == CoverageStatus::Covered) == oracle_contained(s, Intransitive{x}));
        if (v.status == CoverageStatus::Covered) {
          const Cut &c = std::get<Cut>(v.witness);
          CHECK(std::min(c.size(), n - c.size()) == x);
          CHECK(c.whole == s.sigma_type());
          CHECK(c.isolates(Partition::from_parts({1, 1})));
        }
      }
}

TEST_CASE("covered wreath verdicts are confirmed by the oracle up to 12") {
  for (int n = 4; n <= 12; ++n)
    for (const auto &s : enumerate_shapes(n))
      for (u64 b : divisors(static_cast<u64>(n))) {
        const int bb = static_cast<int>(b), m = n / bb;
        if (bb < 2 || m < 2)
          continue;
        const auto v = covered_by_wreath(s, bb, m);
        CHECK(v.status != CoverageStatus::Impossible);
        if (v.status == CoverageStatus::Covered)
          REQUIRE_MESSAGE(oracle_contained(s, Imprimitive{bb, m}), s.to_string());
      }
}

TEST_CASE("containment is invariant under relabelling the letters") {
  std::mt19937 rng(4242);
  for (int n = 5; n <= 9; ++n) {
    const ComponentPool pool = standard_pool(n);
    for (const auto &s : enumerate_shapes(n)) {
      std::vector<int> pi(static_cast<std::size_t>(n));
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      auto gens = generators(s);
      for (auto &g : gens)
        g = relabel(g, pi);
      for (const Component &h : pool.members()) {
        bool want;
        if (const auto *p = std::get_if<Intransitive>(&h))
          want = oracle::in_some_intransitive(gens, n, p->x);
        else if (const auto *w = std::get_if<Imprimitive>(&h))
          want = oracle::in_some_imprimitive(gens, w->b, w->m);
        else
          continue;
        CHECK(want == oracle_contained(s, h));
      }
    }
  }
}

TEST_CASE("special basic set examples") {
  const auto e8 = is_special_basic_set(build_named_set(NamedSet::DeltaE, 8));
  CHECK(e8.basic);
  CHECK(e8.special);
  const auto d10 = is_special_basic_set(build_named_set(NamedSet::Delta1, 10));
  CHECK(d10.basic);
  CHECK(d10.special);
  const auto alt = is_special_basic_set(BasicSet(9, {Alternating{}}));
  CHECK_FALSE(alt.basic);
  CHECK_FALSE(alt.special);
}

TEST_CASE("even construction replay covers every shape by the rules up to 30") {
  for (int n = 4; n <= 30; n += 2) {
    const ConstructionReplay r = replay_even_construction(n);
    CHECK_MESSAGE(r.ok(), "n = " << n);
    CHECK(r.steps.size() == enumerate_shapes(n).size());
    for (const ReplayStep &st : r.steps) {
      CHECK(st.verdict.status == CoverageStatus::Covered);
      CHECK(r.set.contains(st.component));
    }
  }
  CHECK(replay_even_construction(8).construction == NamedSet::PrimePower);
  CHECK(replay_even_construction(14).construction == NamedSet::TwoP);
  CHECK(replay_even_construction(12).construction == NamedSet::DeltaC);
  CHECK_THROWS_AS(replay_even_construction(9), domain_error);
}
