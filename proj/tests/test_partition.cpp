#include <doctest.h>

#include <random>

#include "normcov/errors.hpp"
#include "normcov/partition.hpp"
#include "oracles.hpp"

using namespace normcov;

namespace {

std::set<int> proper(const std::set<int> &sums, int n) {
  std::set<int> out;
  for (int s : sums)
    if (s > 0 && s < n)
      out.insert(s);
  return out;
}

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }

} // namespace

TEST_CASE("partition construction and equality") {
  const Partition t = P({5, 2, 1, 2, 1, 1});
  CHECK(t.degree() == 12);
  CHECK(t.multiplicity(1) == 3);
  CHECK(t.multiplicity(2) == 2);
  CHECK(t.multiplicity(5) == 1);
  CHECK(t.part_count() == 6);
  CHECK(t.largest_part() == 5);
  CHECK(t == P({1, 1, 1, 2, 2, 5}));
  CHECK(t.to_string() == "[1^3,2^2,5]");
  CHECK(t.multiplicities().size() == 12);
  CHECK_THROWS_AS(Partition(3, {1, 1}), domain_error);
  CHECK_THROWS_AS(Partition(3, {1, 0, 1}), domain_error);
  CHECK_THROWS_AS(Partition(0, {}), domain_error);
}

TEST_CASE("enumeration order and counts") {
  const auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == P({1}));

  const auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == P({4}));
  CHECK(four[1] == P({3, 1}));
  CHECK(four[2] == P({2, 2}));
  CHECK(four[3] == P({2, 1, 1}));
  CHECK(four[4] == P({1, 1, 1, 1}));

  CHECK(enumerate_partitions(10).size() == 42);
  CHECK_THROWS_AS(enumerate_partitions(0), domain_error);
}

TEST_CASE("partition count matches the pentagonal recurrence up to 60") {
  const auto p = oracle::partition_numbers(60);
  for (int n = 1; n <= 60; ++n) {
    unsigned long long count = 0;
    for_each_partition(n, [&](const Partition &) { ++count; });
    CHECK_MESSAGE(count == p[static_cast<std::size_t>(n)], "n = " << n);
  }
}

TEST_CASE("enumeration yields distinct partitions of n") {
  for (int n = 1; n <= 16; ++n) {
    const auto all = enumerate_partitions(n);
    std::set<Partition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto &t : all)
      CHECK(t.degree() == n);
  }
}

TEST_CASE("subset sums examples") {
  CHECK(subset_sums(P({2, 9})).values() == std::vector<int>{2, 9});
  CHECK(subset_sums(P({1, 4, 5})).values() == std::vector<int>{1, 4, 5, 6, 9});
  const SumSet s = subset_sums(P({1, 1, 1, 2, 2, 5}));
  CHECK(s.contains(7));
}

TEST_CASE("subset sums are complement closed for every type up to 30") {
  for (int n = 1; n <= 30; ++n)
    for_each_partition(n, [&](const Partition &t) {
      const SumSet s = subset_sums(t);
      for (int c = 1; c < n; ++c)
        REQUIRE(s.contains(c) == s.contains(n - c));
    });
}

TEST_CASE("subset sums agree with sub-multiset enumeration up to 9") {
  for (int n = 1; n <= 9; ++n)
    for (const auto &t : enumerate_partitions(n)) {
      const auto vals = subset_sums(t).values();
      const std::set<int> got(vals.begin(), vals.end());
      CHECK(got == proper(oracle::subset_sums(t.parts()), n));
    }
}

TEST_CASE("cut_isolating examples") {
  const Partition t = P({1, 1, 1, 2, 2, 5});
  const auto cut = cut_isolating(t, P({1, 5}), 7);
  REQUIRE(cut);
  CHECK(cut->left == P({1, 1, 5}));
  CHECK(cut->right == P({1, 2, 2}));
  CHECK(cut->to_string() == "[1^2,5 | 1,2^2]");

  // The cut [1^2,5 | 1,2^2] does not isolate [2,5], but [2,5 | 1^3,2] does.
  CHECK_FALSE(cut->isolates(P({2, 5})));
  const auto other = cut_isolating(t, P({2, 5}), 7);
  REQUIRE(other);
  CHECK(other->left == P({2, 5}));
  CHECK(other->right == P({1, 1, 1, 2}));

  const auto pair = cut_isolating(P({1, 1, 6}), P({1, 1}), 2);
  REQUIRE(pair);
  CHECK(pair->left == P({1, 1}));
  CHECK(pair->right == P({6}));

  CHECK_THROWS_AS(cut_isolating(t, P({3, 4}), 7), domain_error);
  CHECK_THROWS_AS(cut_isolating(t, P({1, 5}), 12), domain_error);
}

TEST_CASE("cut_isolating agrees with exhaustive enumeration up to 12") {
  for (int n = 2; n <= 12; ++n)
    for (const auto &t : enumerate_partitions(n)) {
      const auto parts = t.parts();
      const std::size_t k = parts.size();
      // every sub-multiset of t as an iso candidate, deduplicated
      std::set<Partition> isos;
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u)
            sub.push_back(parts[i]);
        isos.insert(Partition::from_parts(std::span<const int>(sub)));
      }
      for (const Partition &iso : isos) {
        const auto complement = iso.complement_in(t);
        const std::vector<int> rest = complement ? complement->parts() : std::vector<int>{};
        const std::set<int> rest_sums = oracle::subset_sums(rest);
        const int w = iso.degree();
        for (int c = 1; c < n; ++c) {
          const bool expect =
              complement && (rest_sums.count(c - w) || rest_sums.count(n - c - w));
          const auto cut = cut_isolating(t, iso, c);
          REQUIRE_MESSAGE(cut.has_value() == expect, t.to_string() << " " << iso.to_string()
                                                                   << " c=" << c);
          if (cut) {
            CHECK(cut->size() == c);
            CHECK(cut->whole == t);
            CHECK(cut->left.merged_with(cut->right) == t);
            CHECK(cut->isolates(iso));
          }
        }
      }
    }
}

TEST_CASE("type power and order examples") {
  CHECK(type_power(P({3, 6, 5}), 6) == P({1, 1, 1, 1, 1, 1, 1, 1, 1, 5}));
  CHECK(type_power(P({2, 9}), 9) == P({1, 1, 1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(type_power(P({4, 10}), 1) == P({4, 10}));
  CHECK(type_order(P({4, 10})) == 20);
  CHECK(type_order(Partition::identity(7)) == 1);
  CHECK(type_order(P({3, 6, 5})) == 30);
  CHECK_THROWS_AS(type_power(P({3}), 0), domain_error);
}

TEST_CASE("parity examples") {
  CHECK_FALSE(is_even_type(P({1, 4, 5})));
  CHECK(is_even_type(Partition::identity(6)));
  CHECK(is_even_type(P({1, 3, 5})));
  CHECK_FALSE(is_even_type(P({10})));
}

TEST_CASE("type power, order and parity match explicit permutations") {
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 12; ++n)
    for (const auto &t : enumerate_partitions(n)) {
      const auto img = oracle::perm_of_parts(t.parts(), n);
      CHECK(type_order(t) == oracle::order(img));
      CHECK(is_even_type(t) == oracle::is_even(img));
      for (int trial = 0; trial < 4; ++trial) {
        const unsigned long long e = std::uniform_int_distribution<unsigned long long>(1, 60)(rng);
        const auto pw = oracle::cycle_lengths(oracle::power(img, e));
        CHECK(type_power(t, e) == Partition::from_parts(std::span<const int>(pw)));
      }
    }
}

TEST_CASE("order of a power divides out the gcd") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    // random partition by repeated random parts
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      const int x = std::uniform_int_distribution<int>(1, left)(rng);
      parts.push_back(x);
      left -= x;
    }
    const Partition t = Partition::from_parts(std::span<const int>(parts));
    const u64 e = std::uniform_int_distribution<u64>(1, 1000)(rng);
    const u64 ord = type_order(t);
    CHECK(type_order(type_power(t, e)) == ord / std::gcd(ord, e));
  }
}
