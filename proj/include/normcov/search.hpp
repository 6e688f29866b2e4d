#ifndef NORMCOV_SEARCH_HPP
#define NORMCOV_SEARCH_HPP

// Exact minimum normal covers over a declared component pool.

#include <optional>
#include <string>
#include <vector>

#include "normcov/component.hpp"

namespace normcov {

struct SearchConstraints {
  std::vector<Component> force_in;
  std::vector<Component> force_out;
  std::optional<int> max_size; // defaults to g(n), or the pool size when smaller degrees need it
};

struct SearchOptions {
  unsigned jobs = 1;
  u64 node_limit = 2'000'000'000ULL;
  // Degrees with more than this many types are refused unless `force` is set.
  u64 max_types = 1'000'000;
  bool force = false;
};

enum class LevelOutcome { Refuted, Unresolved, Found };

std::string to_string(LevelOutcome outcome);
LevelOutcome parse_level_outcome(const std::string &text);

/// One iterative-deepening level: covers of at most `size` components.
struct LevelRecord {
  int size;
  LevelOutcome outcome;
  u64 nodes; // exhaustive node count for refuted levels, 0 otherwise
  // For unresolved levels: an over-approximate cover that needed a fact component.
  std::vector<Component> witness;
};

struct Claim {
  std::string id;
  std::string statement;
  bool certified;
  SearchConstraints constraints;
  std::vector<LevelRecord> levels;
};

struct CoverCertificate {
  int n = 0;
  std::string kind = "search"; // "search" or "certify"
  std::vector<Component> pool;
  SearchConstraints constraints;
  int size_cap = 0;
  bool feasible = false;
  std::vector<Component> chosen;
  // Each type mapped to the first chosen component containing it.
  std::vector<std::pair<Partition, std::size_t>> assignment;
  std::vector<LevelRecord> levels;
  std::vector<ExclusionTrace> exclusions;
  std::vector<Claim> claims;
  std::size_t unresolved = 0;

  int size() const { return static_cast<int>(chosen.size()); }
  // Every level below the found size refuted, nothing unresolved.
  bool optimal() const;
};

/// Iterative deepening over cover sizes from |force_in| up to the cap.
/// Fact components take part through an over-approximation (every type the
/// rule engine does not exclude); a level where only such a cover exists is
/// recorded as unresolved instead of refuted. Throws resource_error when the
/// node budget or the type cap is exceeded.
CoverCertificate min_cover_search(const ComponentPool &pool, const SearchConstraints &constraints,
                                  const SearchOptions &options = {});

/// Replays the degree 10 and 14 arguments: minimum over the standard pool
/// with the Feit facts, and the claim that no cover of that size contains P_2.
CoverCertificate certify_degree(int n, const SearchOptions &options = {});

struct CheckResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-validates a certificate with the membership deciders and trace
/// re-checks only; no search.
CheckResult check_certificate(const CoverCertificate &cert);

/// Canonical first-fit assignment of every type of S_n to `chosen`.
/// nullopt if some type is uncovered or a chosen component is a fact.
std::optional<std::vector<std::pair<Partition, std::size_t>>>
first_fit_assignment(int n, const std::vector<Component> &chosen);

/// Number of partitions of n by the pentagonal recurrence, saturating at u64 max.
u64 partition_count(int n);

} // namespace normcov

#endif
