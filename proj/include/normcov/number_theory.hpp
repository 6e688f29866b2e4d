#ifndef NORMCOV_NUMBER_THEORY_HPP
#define NORMCOV_NUMBER_THEORY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace normcov {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower &) const = default;
};

// Factorization with primes in increasing order (trial division).
std::vector<PrimePower> factorize(u64 n);

// ν(n): number of distinct prime factors.
unsigned distinct_prime_count(u64 n);

bool is_prime(u64 n);

// Returns (p, f) with q = p^f, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(u64 q);

u64 gcd(u64 a, u64 b);

// Throws std::overflow_error when the result does not fit in 64 bits.
u64 lcm_checked(u64 a, u64 b);

// Sorted ascending.
std::vector<u64> divisors(u64 n);

// Squarefree divisors d of n paired with the Möbius value μ(d).
std::vector<std::pair<u64, int>> squarefree_divisors(u64 n);

u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

// Exact power, nullopt on overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

/// Non-negative rational number used for interval extremes such as n/3.
class Rational {
public:
  Rational(i64 num = 0, i64 den = 1);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  i64 floor() const;
  i64 ceil() const;

  std::strong_ordering operator<=>(const Rational &other) const;
  bool operator==(const Rational &other) const = default;

  std::string to_string() const;

  // Accepts "a", "a/b".
  static Rational parse(const std::string &text);

private:
  i64 num_;
  i64 den_;
};

} // namespace normcov

#endif
