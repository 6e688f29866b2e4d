#ifndef NORMCOV_PERMUTATION_HPP
#define NORMCOV_PERMUTATION_HPP

// Explicit permutations on {0, ..., n-1} and brute-force enumeration of
// invariant subsets and block systems. Used as ground truth at small degree.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "normcov/partition.hpp"

namespace normcov {

class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // Cycles laid out on consecutive letters starting at `first`, largest parts
  // first; letters below `first` are fixed.
  static Perm of_type(const Partition &t, int first = 0);
  static Perm transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return img_; }

  // (this * other)(x) = this(other(x)).
  Perm compose(const Perm &other) const;
  Perm inverse() const;
  Perm pow(u64 e) const;
  // g^-1 * this * g
  Perm conjugate_by(const Perm &g) const;

  Partition cycle_type() const;
  u64 order() const;
  bool is_even() const;

  bool operator==(const Perm &) const = default;

private:
  std::vector<int> img_;
};

// True iff every generator maps the set (given as membership flags) onto itself.
bool stabilizes_set(std::span<const Perm> gens, const std::vector<bool> &members);

// blocks[x] is the block index of letter x.
bool preserves_blocks(std::span<const Perm> gens, std::span<const int> block_of);

// Visits every size-k subset of {0..n-1}; stop early by returning false.
void for_each_subset(int n, int k, const std::function<bool(const std::vector<bool> &)> &visit);

// Visits every partition of {0..n-1} into m blocks of size b; stop early by
// returning false.
void for_each_block_system(int b, int m,
                           const std::function<bool(std::span<const int>)> &visit);

// Every element of AGL_1(p) as a permutation of Z_p.
std::vector<Perm> affine_group(int p);

} // namespace normcov

#endif
