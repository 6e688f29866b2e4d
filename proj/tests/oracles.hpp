#ifndef NORMCOV_TESTS_ORACLES_HPP
#define NORMCOV_TESTS_ORACLES_HPP

// Brute-force reference computations used to cross-check the library.
// Everything here works on explicit images and bitmasks, never on the
// library's combinatorial shortcuts.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<int>;

/// Partition numbers via Euler's pentagonal recurrence.
inline std::vector<unsigned long long> partition_numbers(int n) {
  std::vector<unsigned long long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    long long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i)
        break;
      const long long s = (k % 2) ? 1 : -1;
      acc += s * static_cast<long long>(p[static_cast<std::size_t>(i - g1)]);
      if (g2 <= i)
        acc += s * static_cast<long long>(p[static_cast<std::size_t>(i - g2)]);
    }
    p[static_cast<std::size_t>(i)] = static_cast<unsigned long long>(acc);
  }
  return p;
}

/// All sums of sub-multisets of parts, by enumerating every index subset.
inline std::set<int> subset_sums(const std::vector<int> &parts) {
  std::set<int> out;
  const std::size_t k = parts.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    int s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u)
        s += parts[i];
    out.insert(s);
  }
  return out;
}

/// A permutation of 0..n-1 whose cycles have the given lengths, laid out consecutively.
inline Images perm_of_parts(const std::vector<int> &parts, int n) {
  Images img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  int at = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i)
      img[static_cast<std::size_t>(at + i)] = at + (i + 1) % len;
    at += len;
  }
  return img;
}

inline std::vector<int> cycle_lengths(const Images &img) {
  std::vector<int> out;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s])
      continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(img[x])) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline Images power(const Images &img, unsigned long long e) {
  Images out(img.size());
  for (std::size_t x = 0; x < img.size(); ++x) {
    std::size_t y = x;
    for (unsigned long long i = 0; i < e; ++i)
      y = static_cast<std::size_t>(img[y]);
    out[x] = static_cast<int>(y);
  }
  return out;
}

inline unsigned long long order(const Images &img) {
  Images cur = img;
  Images id(img.size());
  std::iota(id.begin(), id.end(), 0);
  unsigned long long k = 1;
  while (cur != id) {
    for (std::size_t x = 0; x < cur.size(); ++x)
      cur[x] = img[static_cast<std::size_t>(cur[x])];
    ++k;
  }
  return k;
}

inline bool is_even(const Images &img) {
  int transpositions = 0;
  for (int len : cycle_lengths(img))
    transpositions += len - 1;
  return transpositions % 2 == 0;
}

inline bool stabilizes(const std::vector<Images> &gens, std::uint32_t subset) {
  for (const Images &g : gens)
    for (std::size_t x = 0; x < g.size(); ++x)
      if ((subset >> x & 1u) && !(subset >> g[x] & 1u))
        return false;
  return true;
}

/// Some subset of size x is stabilized by every generator.
inline bool in_some_intransitive(const std::vector<Images> &gens, int n, int x) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) == x && stabilizes(gens, mask))
      return true;
  return false;
}

/// Calls visit(block_of) for every partition of 0..n-1 into m blocks of size b,
/// stopping early when visit returns true.
template <class Visit> bool for_each_blocks(int b, int m, Visit &&visit) {
  const int n = b * m;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<int> fill(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto &self, int x, int opened) -> bool {
    if (x == n)
      return visit(block_of);
    for (int blk = 0; blk < std::min(opened + 1, m); ++blk) {
      if (fill[static_cast<std::size_t>(blk)] == b)
        continue;
      block_of[static_cast<std::size_t>(x)] = blk;
      ++fill[static_cast<std::size_t>(blk)];
      if (self(self, x + 1, std::max(opened, blk + 1)))
        return true;
      --fill[static_cast<std::size_t>(blk)];
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool preserves(const std::vector<Images> &gens, const std::vector<int> &block_of, int m) {
  for (const Images &g : gens) {
    std::vector<int> image_of(static_cast<std::size_t>(m), -1);
    for (std::size_t x = 0; x < g.size(); ++x) {
      int &dst = image_of[static_cast<std::size_t>(block_of[x])];
      const int to = block_of[static_cast<std::size_t>(g[x])];
      if (dst == -1)
        dst = to;
      else if (dst != to)
        return false;
    }
  }
  return true;
}

inline bool in_some_imprimitive(const std::vector<Images> &gens, int b, int m) {
  return for_each_blocks(b, m, [&](const std::vector<int> &blocks) {
    return preserves(gens, blocks, m);
  });
}

/// Cycle types of all maps x -> a x + c on Z/p.
inline std::set<std::vector<int>> affine_types(int p) {
  std::set<std::vector<int>> out;
  for (int a = 1; a < p; ++a)
    for (int c = 0; c < p; ++c) {
      Images img(static_cast<std::size_t>(p));
      for (int x = 0; x < p; ++x)
        img[static_cast<std::size_t>(x)] = (a * x + c) % p;
      out.insert(cycle_lengths(img));
    }
  return out;
}

/// Number of integers in (lo_num/lo_den, hi_num/hi_den) coprime to n, by enumeration.
inline unsigned long long coprime_in_open(long long lo_num, long long lo_den, long long hi_num,
                                          long long hi_den, long long n) {
  unsigned long long c = 0;
  for (long long i = 1; i <= n; ++i)
    if (i * lo_den > lo_num && i * hi_den < hi_num && std::gcd(i, n) == 1)
      ++c;
  return c;
}

inline bool prime(unsigned long long n) {
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace oracle

#endif
