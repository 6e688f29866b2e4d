#include "normcov/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "normcov/errors.hpp"

namespace normcov {

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  if (n < 2)
    return out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1)
    out.push_back({n, 1});
  return out;
}

unsigned distinct_prime_count(u64 n) {
  return static_cast<unsigned>(factorize(n).size());
}

bool is_prime(u64 n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (u64 p = 3; p * p <= n; p += 2)
    if (n % p == 0)
      return false;
  return true;
}

std::optional<PrimePower> as_prime_power(u64 q) {
  auto f = factorize(q);
  if (f.size() != 1)
    return std::nullopt;
  return f.front();
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_checked(u64 a, u64 b) {
  if (a == 0 || b == 0)
    return 0;
  u64 q = a / std::gcd(a, b);
  u64 r;
  if (__builtin_mul_overflow(q, b, &r))
    throw std::overflow_error("lcm exceeds 64 bits");
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto &[p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<u64, int>> squarefree_divisors(u64 n) {
  std::vector<std::pair<u64, int>> out{{1, 1}};
  for (const auto &pp : factorize(n)) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i)
      out.emplace_back(out[i].first * pp.prime, -out[i].second);
  }
  return out;
}

u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1)
      result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r))
      return std::nullopt;
  return r;
}

Rational::Rational(i64 num, i64 den) {
  if (den == 0)
    throw domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

i64 Rational::floor() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0)
    --q;
  return q;
}

i64 Rational::ceil() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0)
    ++q;
  return q;
}

std::strong_ordering Rational::operator<=>(const Rational &other) const {
  const __int128 lhs = static_cast<__int128>(num_) * other.den_;
  const __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string &text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const i64 v = std::stoll(text, &used);
      if (used != text.size())
        throw parse_error("bad rational: " + text);
      return Rational(v);
    }
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    const i64 num = std::stoll(a, &used);
    if (used != a.size())
      throw parse_error("bad rational: " + text);
    const i64 den = std::stoll(b, &used);
    if (used != b.size())
      throw parse_error("bad rational: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument &) {
    throw parse_error("bad rational: " + text);
  } catch (const std::out_of_range &) {
    throw parse_error("rational out of range: " + text);
  }
}

} // namespace normcov
