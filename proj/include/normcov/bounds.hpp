#ifndef NORMCOV_BOUNDS_HPP
#define NORMCOV_BOUNDS_HPP

// Closed-form upper bounds for the normal covering number of S_n.

#include <optional>
#include <string>
#include <vector>

#include "normcov/number_theory.hpp"

namespace normcov {

/// Four-case bound from the factorization n = p_1^a_1 ... (p_1 < p_2 < ...):
///   (n/2)(1-1/p_1)                   nu = 1, a_1 = 1
///   (n/2)(1-1/p_1) + 1               nu = 1, a_1 >= 2
///   (n/2)(1-1/p_1)(1-1/p_2) + 1      nu = 2, (a_1, a_2) = (1, 1)
///   (n/2)(1-1/p_1)(1-1/p_2) + 2      otherwise
/// Defined for n >= 4.
u64 g_bound(u64 n);

/// Number of integers i with x < i < y and gcd(i, n) = 1, by Möbius
/// inclusion-exclusion over the squarefree divisors of n.
u64 phi_interval(const Rational &x, const Rational &y, u64 n);

/// floor(n/3) + nu(n) + phi((n/3, n/2); n) for even n,
/// floor(n/4) + nu(n) + phi((n/4, n/2); n) + 1 for odd n. Defined for n >= 4.
u64 h_bound(u64 n);

/// ceil((n + 4)/4): size of the even-degree family containing P_2 and A_n.
u64 delta_E_size(u64 n);

struct GHRow {
  u64 n;
  u64 g;
  u64 h;
  int sign; // sign of g - h
};

GHRow evaluate_gh(u64 n);
std::vector<GHRow> compare_g_h(u64 from, u64 to);

struct PrimeProduct {
  std::vector<u64> primes;
  GHRow row;
};

/// Multiplies consecutive odd primes starting at `first_prime` until
/// h(n) < g(n), using at least three factors. The first two primes must
/// satisfy (1 - 1/p_1)(1 - 1/p_2) > 1/2. Throws domain_error if the product
/// would overflow before the inequality appears.
PrimeProduct construct_h_below_g(u64 first_prime);

enum class EvenDegreeClass { PowerOfTwo, FourTimesPrime, Other };

std::string to_string(EvenDegreeClass c);

struct DeltaERelation {
  u64 n;
  u64 g;
  u64 delta_e;
  bool equal;
  EvenDegreeClass degree_class;
  // equal holds exactly for the power-of-two and 4q classes
  bool consistent;
};

DeltaERelation delta_E_size_relation(u64 n);

/// Metadata for the linear bounds kn <= r(S_n) <= gamma'(S_n) <= 2n/3.
struct LinearBoundFacts {
  std::string upper = "2n/3";
  double known_k = 0.025;
  u64 known_k_from = 792000;
  bool known_k_even_only = true;
  std::string note = "optimal k unknown; the cited constant is reported, never certified";
};

} // namespace normcov

#endif
