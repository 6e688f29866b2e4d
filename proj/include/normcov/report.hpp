#ifndef NORMCOV_REPORT_HPP
#define NORMCOV_REPORT_HPP

#include <optional>
#include <string>

#include "normcov/bounds.hpp"
#include "normcov/search.hpp"

namespace normcov {

struct ReportOptions {
  // Exact search over the standard pool runs up to this degree.
  int search_max_degree = 40;
  SearchOptions search;
};

struct BoundReport {
  int n = 0;
  std::optional<u64> g;
  std::optional<u64> h;
  std::optional<u64> delta_e; // even n only
  std::optional<int> gamma;
  // "search" (minimum over the standard pool), "cited" (odd n with nu(n) <= 2,
  // where gamma = g), "constant" (n = 3) or empty when unknown.
  std::string gamma_source;
  bool pool_relative = false;
  u64 gamma_prime_upper = 0;
  int r_lo = 0;
  int r_hi = 0;
  // Why the interval is what it is: degree-3, odd-degree, gamma-equals-g,
  // gamma-plus-one or bounds-only.
  std::string r_reason;
  LinearBoundFacts linear;

  bool point() const { return r_lo == r_hi; }
};

BoundReport interval_report(int n, const ReportOptions &options = {});

struct RInterval {
  int lo;
  int hi;
  std::string reason;
  u64 gamma_prime_upper; // tightened when the interval collapses
};

/// The r(S_n) bracket for n >= 4 from gamma (when known), g(n) and the best
/// special-set size: a point for odd n or gamma = g, otherwise
/// [gamma, min(gamma + 1, upper)], and [2, upper] without gamma.
RInterval r_interval(int n, std::optional<int> gamma, u64 g, u64 gamma_prime_upper);

} // namespace normcov

#endif
