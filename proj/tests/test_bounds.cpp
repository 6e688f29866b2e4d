#include <doctest.h>

#include <random>

#include "normcov/bounds.hpp"
#include "normcov/errors.hpp"
#include "normcov/number_theory.hpp"
#include "oracles.hpp"

using namespace normcov;

namespace {

std::vector<std::pair<long long, int>> trial_factor(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int a = 0;
      while (n % p == 0) {
        n /= p;
        ++a;
      }
      out.emplace_back(p, a);
    }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

// The four-case formula evaluated with exact integer arithmetic.
long long g_reference(long long n) {
  const auto f = trial_factor(n);
  const long long p1 = f[0].first;
  if (f.size() == 1)
    return n * (p1 - 1) / (2 * p1) + (f[0].second >= 2 ? 1 : 0);
  const long long p2 = f[1].first;
  const long long base = n * (p1 - 1) * (p2 - 1) / (2 * p1 * p2);
  const bool squarefree_pair = f.size() == 2 && f[0].second == 1 && f[1].second == 1;
  return base + (squarefree_pair ? 1 : 2);
}

long long h_reference(long long n) {
  const long long nu = static_cast<long long>(trial_factor(n).size());
  if (n % 2 == 0)
    return n / 3 + nu + static_cast<long long>(oracle::coprime_in_open(n, 3, n, 2, n));
  return n / 4 + nu + static_cast<long long>(oracle::coprime_in_open(n, 4, n, 2, n)) + 1;
}

} // namespace

TEST_CASE("number theory helpers") {
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(distinct_prime_count(30) == 3);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK(as_prime_power(9) == PrimePower{3, 2});
  CHECK_FALSE(as_prime_power(12).has_value());
  CHECK(gcd(12, 18) == 6);
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
  CHECK_FALSE(checked_pow(10, 20).has_value());
  CHECK(Rational(10, 3).floor() == 3);
  CHECK(Rational(10, 3).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational::parse("10/3") == Rational(10, 3));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 5000; ++n)
    CHECK(is_prime(n) == oracle::prime(n));
}

TEST_CASE("g examples") {
  CHECK(g_bound(8) == 3);
  CHECK(g_bound(10) == 3);
  CHECK(g_bound(12) == 4);
  CHECK(g_bound(14) == 4);
  CHECK(g_bound(9) == 4);
  CHECK(g_bound(18) == 5);
  for (u64 p : {5, 7, 11, 13})
    CHECK(g_bound(p) == (p - 1) / 2);
  CHECK_THROWS_AS(g_bound(3), domain_error);
}

TEST_CASE("g agrees with the reference evaluation and is at least 2") {
  for (long long n = 4; n <= 5000; ++n)
    REQUIRE(g_bound(static_cast<u64>(n)) == static_cast<u64>(g_reference(n)));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const u64 n = std::uniform_int_distribution<u64>(4, 1000000)(rng);
    CHECK(g_bound(n) >= 2);
  }
}

TEST_CASE("g is at least 2 on the whole range up to 10^6") {
  for (u64 n = 4; n <= 1000000; ++n)
    if (g_bound(n) < 2)
      FAIL("g(" << n << ") < 2");
}

TEST_CASE("phi examples") {
  CHECK(phi_interval(Rational(4), Rational(6), 12) == 1);
  CHECK(phi_interval(Rational(0), Rational(12), 12) == 4);
  CHECK(phi_interval(Rational(10, 3), Rational(5), 10) == 0);
  CHECK_THROWS_AS(phi_interval(Rational(6), Rational(4), 12), domain_error);
}

TEST_CASE("phi matches enumeration for the interval forms of h") {
  for (long long n = 1; n <= 500; ++n) {
    const u64 un = static_cast<u64>(n);
    CHECK(phi_interval(Rational(n, 3), Rational(n, 2), un) ==
          oracle::coprime_in_open(n, 3, n, 2, n));
    CHECK(phi_interval(Rational(n, 4), Rational(n, 2), un) ==
          oracle::coprime_in_open(n, 4, n, 2, n));
    CHECK(phi_interval(Rational(0), Rational(n), un) == oracle::coprime_in_open(0, 1, n, 1, n));
  }
}

TEST_CASE("h examples") {
  CHECK(h_bound(4) == 2);
  CHECK(h_bound(12) == 7);
  for (u64 p : {5, 7, 11, 13})
    CHECK(h_bound(p) == 2 + (p - 1) / 2);
  CHECK_THROWS_AS(h_bound(2), domain_error);
}

TEST_CASE("h agrees with the reference evaluation") {
  for (long long n = 4; n <= 2000; ++n)
    REQUIRE(h_bound(static_cast<u64>(n)) == static_cast<u64>(h_reference(n)));
}

TEST_CASE("g below h for even degrees") {
  for (const GHRow &r : compare_g_h(6, 200))
    if (r.n % 2 == 0) {
      CHECK(r.g < r.h);
      CHECK(r.sign < 0);
    }
}

TEST_CASE("a product of consecutive odd primes has h below g") {
  const PrimeProduct p = construct_h_below_g(11);
  CHECK(p.primes == std::vector<u64>{11, 13, 17, 19, 23, 29, 31});
  CHECK(p.row.n == 955049953ULL);
  CHECK(p.row.g == 400720262ULL);
  CHECK(p.row.h == 398429696ULL);
  CHECK(p.row.sign > 0);
  CHECK(p.row.g == g_bound(p.row.n));
  CHECK(p.row.h == h_bound(p.row.n));
  CHECK_THROWS_AS(construct_h_below_g(3), domain_error);
}

TEST_CASE("delta_E size relation examples") {
  const auto r8 = delta_E_size_relation(8);
  CHECK(r8.g == 3);
  CHECK(r8.delta_e == 3);
  CHECK(r8.equal);
  CHECK(r8.degree_class == EvenDegreeClass::PowerOfTwo);
  const auto r12 = delta_E_size_relation(12);
  CHECK(r12.delta_e == 4);
  CHECK(r12.equal);
  CHECK(r12.degree_class == EvenDegreeClass::FourTimesPrime);
  const auto r18 = delta_E_size_relation(18);
  CHECK(r18.g == 5);
  CHECK(r18.delta_e == 6);
  CHECK_FALSE(r18.equal);
  CHECK(r18.degree_class == EvenDegreeClass::Other);
  CHECK_THROWS_AS(delta_E_size_relation(9), domain_error);
}

TEST_CASE("delta_E equality holds exactly at powers of two and four times a prime") {
  for (u64 n = 4; n <= 10000; n += 2) {
    const auto r = delta_E_size_relation(n);
    CHECK(r.g <= r.delta_e);
    const bool pow2 = (n & (n - 1)) == 0;
    const bool four_q = n % 4 == 0 && oracle::prime(n / 4);
    REQUIRE_MESSAGE(r.equal == (pow2 || four_q), "n = " << n);
    CHECK(r.consistent);
  }
}
