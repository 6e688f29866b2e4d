#include "normcov/bounds.hpp"

#include "normcov/errors.hpp"

namespace normcov {

u64 g_bound(u64 n) {
  if (n < 4)
    throw domain_error("g(n) is defined for n >= 4");
  const auto f = factorize(n);
  const u64 p1 = f[0].prime;
  if (f.size() == 1) {
    const u64 base = n / p1 * (p1 - 1) / 2;
    return f[0].exponent == 1 ? base : base + 1;
  }
  const u64 p2 = f[1].prime;
  const u64 base = n / (p1 * p2) * ((p1 - 1) * (p2 - 1) / 2);
  const bool squarefree_pair = f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1;
  return squarefree_pair ? base + 1 : base + 2;
}

u64 phi_interval(const Rational &x, const Rational &y, u64 n) {
  if (n == 0 || x < Rational(0) || !(x < y) || Rational(static_cast<i64>(n)) < y)
    throw domain_error("phi_interval needs 0 <= x < y <= n");
  const i64 lo = x.floor() + 1; // smallest integer > x
  const i64 hi = y.ceil() - 1;  // largest integer < y
  if (hi < lo)
    return 0;
  i64 count = 0;
  for (const auto &[d, mu] : squarefree_divisors(n)) {
    const i64 dd = static_cast<i64>(d);
    count += mu * (hi / dd - (lo - 1) / dd);
  }
  return static_cast<u64>(count);
}

u64 h_bound(u64 n) {
  if (n < 4)
    throw domain_error("h(n) is defined for n >= 4");
  const i64 ni = static_cast<i64>(n);
  const u64 nu = distinct_prime_count(n);
  if (n % 2 == 0)
    return n / 3 + nu + phi_interval(Rational(ni, 3), Rational(ni, 2), n);
  return n / 4 + nu + phi_interval(Rational(ni, 4), Rational(ni, 2), n) + 1;
}

u64 delta_E_size(u64 n) { return (n + 7) / 4; }

GHRow evaluate_gh(u64 n) {
  const u64 g = g_bound(n), h = h_bound(n);
  return {n, g, h, g < h ? -1 : (g > h ? 1 : 0)};
}

std::vector<GHRow> compare_g_h(u64 from, u64 to) {
  if (from < 4 || to < from)
    throw domain_error("compare_g_h needs 4 <= from <= to");
  std::vector<GHRow> rows;
  for (u64 n = from; n <= to; ++n)
    rows.push_back(evaluate_gh(n));
  return rows;
}

namespace {

u64 next_prime(u64 p) {
  do
    ++p;
  while (!is_prime(p));
  return p;
}

} // namespace

PrimeProduct construct_h_below_g(u64 first_prime) {
  if (first_prime < 3 || !is_prime(first_prime))
    throw domain_error("the product starts at an odd prime");
  const u64 p1 = first_prime, p2 = next_prime(p1);
  // (1 - 1/p1)(1 - 1/p2) > 1/2  <=>  2(p1-1)(p2-1) > p1 p2
  if (!(2 * (p1 - 1) * (p2 - 1) > p1 * p2))
    throw domain_error("first two primes must satisfy (1-1/p1)(1-1/p2) > 1/2");
  PrimeProduct out;
  out.primes = {p1, p2};
  u64 n = p1 * p2;
  u64 p = p2;
  while (true) {
    p = next_prime(p);
    if (__builtin_mul_overflow(n, p, &n))
      throw domain_error("prime product overflowed before h(n) < g(n)");
    out.primes.push_back(p);
    out.row = evaluate_gh(n);
    if (out.row.h < out.row.g)
      return out;
  }
}

std::string to_string(EvenDegreeClass c) {
  switch (c) {
  case EvenDegreeClass::PowerOfTwo:
    return "power-of-two";
  case EvenDegreeClass::FourTimesPrime:
    return "four-times-prime";
  case EvenDegreeClass::Other:
    return "other";
  }
  return "";
}

DeltaERelation delta_E_size_relation(u64 n) {
  if (n < 4 || n % 2 != 0)
    throw domain_error("delta_E_size_relation needs an even n >= 4");
  DeltaERelation r{};
  r.n = n;
  r.g = g_bound(n);
  r.delta_e = delta_E_size(n);
  r.equal = r.g == r.delta_e;
  if ((n & (n - 1)) == 0)
    r.degree_class = EvenDegreeClass::PowerOfTwo;
  else if (n % 4 == 0 && is_prime(n / 4))
    r.degree_class = EvenDegreeClass::FourTimesPrime;
  else
    r.degree_class = EvenDegreeClass::Other;
  r.consistent = r.g <= r.delta_e && (r.equal == (r.degree_class != EvenDegreeClass::Other));
  return r;
}

} // namespace normcov
