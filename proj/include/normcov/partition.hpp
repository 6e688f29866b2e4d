#ifndef NORMCOV_PARTITION_HPP
#define NORMCOV_PARTITION_HPP

// Integer partitions as cycle types of S_n, stored as multiplicity vectors.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normcov/number_theory.hpp"

namespace normcov {

/// A partition of n in multiplicity form [1^{m_1}, 2^{m_2}, ..., n^{m_n}].
///
/// The representation length is always the degree itself, so two partitions
/// compare equal exactly when they partition the same n with the same
/// multiplicities.
class Partition {
public:
  // mult[j-1] is the multiplicity of part size j; mult.size() must equal n.
  Partition(int n, std::vector<int> mult);

  static Partition from_parts(std::span<const int> parts);
  static Partition from_parts(std::initializer_list<int> parts);
  // (part, multiplicity) pairs in any order; duplicates accumulate.
  static Partition from_pairs(std::span<const std::pair<int, int>> pairs);
  static Partition identity(int n) { return Partition(n, unit(n, 1, n)); }
  static Partition cycle(int n) { return Partition(n, unit(n, n, 1)); }

  int degree() const { return n_; }
  int multiplicity(int part) const;
  // k: total number of parts.
  int part_count() const;
  int largest_part() const;

  std::span<const int> multiplicities() const { return mult_; }
  // Parts in descending order, with repetition.
  std::vector<int> parts() const;
  // (part, multiplicity) pairs, ascending part order, zero multiplicities omitted.
  std::vector<std::pair<int, int>> pairs() const;

  // Componentwise s_j <= m_j (degrees may differ).
  bool is_subpartition_of(const Partition &whole) const;
  // whole minus this; nullopt if not a proper subpartition.
  std::optional<Partition> complement_in(const Partition &whole) const;
  // Multiset union.
  Partition merged_with(const Partition &other) const;

  // Bracket notation, e.g. [1^3,2^2,5].
  std::string to_string() const;

  bool operator==(const Partition &) const = default;
  std::strong_ordering operator<=>(const Partition &other) const;

private:
  static std::vector<int> unit(int n, int part, int count) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(part - 1)] = count;
    return m;
  }

  int n_;
  std::vector<int> mult_;
};

/// Calls visit once per partition of n, largest parts first in
/// reverse-lexicographic order: [n], [n-1,1], [n-2,2], [n-2,1,1], ..., [1^n].
/// Equivalently, lexicographically decreasing on (m_n, m_{n-1}, ..., m_1).
void for_each_partition(int n, const std::function<void(const Partition &)> &visit);

/// Every partition of n exactly once, in for_each_partition order.
std::vector<Partition> enumerate_partitions(int n);

/// Achievable subpartition sums of a partition.
class SumSet {
public:
  SumSet(int n, std::vector<bool> reachable) : n_(n), reachable_(std::move(reachable)) {}

  int degree() const { return n_; }
  // True iff 0 < c < n and some subpartition sums to c.
  bool contains(int c) const;
  std::vector<int> values() const;

private:
  int n_;
  std::vector<bool> reachable_; // index 0..n, includes the trivial 0 and n
};

/// Bounded-knapsack reachability: entry s says some sub-multiset sums to s.
std::vector<bool> reachable_sums(const Partition &t);

SumSet subset_sums(const Partition &t);

/// A c-cut [left | right] of a partition.
struct Cut {
  Partition whole;
  Partition left;
  Partition right;

  int size() const { return left.degree(); }
  bool isolates(const Partition &iso) const {
    return iso.is_subpartition_of(left) || iso.is_subpartition_of(right);
  }
  std::string to_string() const;
};

/// Some c-cut of t isolating iso, chosen deterministically: iso is placed on
/// the left if possible, otherwise on the right, and the remainder of that
/// side is completed taking the smallest parts first.
std::optional<Cut> cut_isolating(const Partition &t, const Partition &iso, int c);

/// Sub-multiset of t summing to target, preferring small parts; mult form of
/// length t.degree().
std::optional<std::vector<int>> pick_subpartition(const Partition &t, int target);

/// Cycle type of sigma^e for sigma of type t.
Partition type_power(const Partition &t, u64 e);

/// lcm of the parts (element order). Throws std::overflow_error past 64 bits.
u64 type_order(const Partition &t);

/// Sign of the permutation: n - k even.
bool is_even_type(const Partition &t);

} // namespace normcov

template <> struct std::hash<normcov::Partition> {
  std::size_t operator()(const normcov::Partition &p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.degree());
    for (int m : p.multiplicities())
      h = h * 1000003u ^ static_cast<std::size_t>(m);
    return h;
  }
};

#endif
