#include "normcov/report.hpp"

#include <algorithm>

#include "normcov/errors.hpp"

namespace normcov {

BoundReport interval_report(int n, const ReportOptions &options) {
  if (n < 3)
    throw domain_error("interval_report needs n >= 3");
  BoundReport rep;
  rep.n = n;
  if (n == 3) {
    // {A_3, P_1} is the unique minimal covering
    rep.gamma = 2;
    rep.gamma_source = "constant";
    rep.gamma_prime_upper = 2;
    rep.r_lo = rep.r_hi = 2;
    rep.r_reason = "degree-3";
    return rep;
  }
  const u64 un = static_cast<u64>(n);
  rep.g = g_bound(un);
  rep.h = h_bound(un);
  rep.gamma_prime_upper = std::min(*rep.g, *rep.h);
  if (n % 2 == 0) {
    rep.delta_e = delta_E_size(un);
    rep.gamma_prime_upper = std::min(rep.gamma_prime_upper, *rep.delta_e);
  }

  if (n <= options.search_max_degree) {
    const CoverCertificate cert = min_cover_search(standard_pool(n), {}, options.search);
    if (cert.optimal()) {
      rep.gamma = cert.size();
      rep.gamma_source = "search";
      rep.pool_relative = true;
    }
  }
  if (!rep.gamma && n % 2 == 1 && distinct_prime_count(un) <= 2) {
    rep.gamma = static_cast<int>(*rep.g);
    rep.gamma_source = "cited";
  }

  const RInterval r = r_interval(n, rep.gamma, *rep.g, rep.gamma_prime_upper);
  rep.r_lo = r.lo;
  rep.r_hi = r.hi;
  rep.r_reason = r.reason;
  rep.gamma_prime_upper = r.gamma_prime_upper;
  return rep;
}

RInterval r_interval(int n, std::optional<int> gamma, u64 g, u64 gamma_prime_upper) {
  const int upper = static_cast<int>(gamma_prime_upper);
  if (!gamma)
    return {2, upper, "bounds-only", gamma_prime_upper};
  const int v = *gamma;
  if (n % 2 == 1)
    return {v, v, "odd-degree", static_cast<u64>(v)};
  if (static_cast<u64>(v) == g)
    return {v, v, "gamma-equals-g", static_cast<u64>(v)};
  return {v, std::min(v + 1, upper), "gamma-plus-one", gamma_prime_upper};
}

} // namespace normcov
