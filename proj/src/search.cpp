#include "normcov/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "normcov/bounds.hpp"
#include "normcov/errors.hpp"

namespace normcov {

std::string to_string(LevelOutcome outcome) {
  switch (outcome) {
  case LevelOutcome::Refuted:
    return "refuted";
  case LevelOutcome::Unresolved:
    return "unresolved";
  case LevelOutcome::Found:
    return "found";
  }
  return "";
}

LevelOutcome parse_level_outcome(const std::string &text) {
  for (LevelOutcome o : {LevelOutcome::Refuted, LevelOutcome::Unresolved, LevelOutcome::Found})
    if (to_string(o) == text)
      return o;
  throw parse_error("unknown level outcome '" + text + "'");
}

bool CoverCertificate::optimal() const {
  if (!feasible || unresolved != 0 || levels.empty())
    return false;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i].outcome != LevelOutcome::Refuted)
      return false;
  return levels.back().outcome == LevelOutcome::Found;
}

u64 partition_count(int n) {
  if (n < 0)
    return 0;
  if (n > 400)
    return std::numeric_limits<u64>::max();
  std::vector<__int128> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    __int128 sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i)
        break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i)
        sum += sign * p[static_cast<std::size_t>(i - g2)];
    }
    p[static_cast<std::size_t>(i)] = sum;
  }
  return static_cast<u64>(p[static_cast<std::size_t>(n)]);
}

namespace {

using Bits = std::vector<u64>;

std::size_t popcount_and(const Bits &a, const Bits &b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t popcount(const Bits &a) {
  std::size_t c = 0;
  for (u64 w : a)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool any(const Bits &a) {
  return std::any_of(a.begin(), a.end(), [](u64 w) { return w != 0; });
}

void clear_covered(Bits &uncovered, const Bits &cover) {
  for (std::size_t i = 0; i < uncovered.size(); ++i)
    uncovered[i] &= ~cover[i];
}

struct Universe {
  int n;
  std::vector<Partition> types;
  std::size_t words;
  std::vector<Bits> cover;             // per pool member (facts over-approximated)
  std::vector<std::vector<int>> users; // per type, pool members covering it
  std::vector<ExclusionTrace> traces;
};

Universe build_universe(const ComponentPool &pool) {
  Universe u;
  u.n = pool.degree();
  u.types = enumerate_partitions(u.n);
  u.words = (u.types.size() + 63) / 64;
  const auto &members = pool.members();
  u.cover.assign(members.size(), Bits(u.words, 0));
  u.users.assign(u.types.size(), {});
  for (std::size_t t = 0; t < u.types.size(); ++t) {
    const Partition &type = u.types[t];
    const std::vector<bool> reach = reachable_sums(type);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Component &h = members[i];
      bool in = false;
      if (const auto *c = std::get_if<Intransitive>(&h)) {
        in = reach[static_cast<std::size_t>(c->x)];
      } else if (is_fact(h)) {
        auto trace = rule_exclusion(h, type);
        in = !trace.has_value();
        if (trace)
          u.traces.push_back(std::move(*trace));
      } else {
        in = contains_type(h, type);
      }
      if (in) {
        u.cover[i][t / 64] |= u64{1} << (t % 64);
        u.users[t].push_back(static_cast<int>(i));
      }
    }
  }
  return u;
}

class Solver {
public:
  Solver(const Universe &u, std::vector<bool> allowed, const SearchOptions &options,
         std::atomic<u64> &total_nodes)
      : u_(u), allowed_(std::move(allowed)), options_(options), total_nodes_(total_nodes) {}

  struct Result {
    bool found = false;
    std::vector<int> chosen;
    u64 nodes = 0;
  };

  // Covers of at most `slots` further components on top of `start`.
  Result solve(const std::vector<int> &start, int slots) {
    Bits uncovered(u_.words, 0);
    for (std::size_t t = 0; t < u_.types.size(); ++t)
      uncovered[t / 64] |= u64{1} << (t % 64);
    std::vector<bool> banned(allowed_.size(), false);
    for (std::size_t i = 0; i < allowed_.size(); ++i)
      banned[i] = !allowed_[i];
    for (int s : start) {
      clear_covered(uncovered, u_.cover[static_cast<std::size_t>(s)]);
      banned[static_cast<std::size_t>(s)] = true;
    }

    Result out;
    out.nodes = 1;
    bump(1);
    if (!any(uncovered)) {
      out.found = true;
      out.chosen = start;
      return out;
    }
    if (slots <= 0)
      return out;
    const std::vector<int> order = branch_order(uncovered, banned, slots);
    if (order.empty())
      return out;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{order.size()};
    std::vector<Result> branch(order.size());
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t b = next.fetch_add(1);
        if (b >= order.size() || b > best.load() || aborted.load())
          return;
        try {
        std::vector<bool> local_banned = banned;
        for (std::size_t j = 0; j < b; ++j)
          local_banned[static_cast<std::size_t>(order[j])] = true;
        local_banned[static_cast<std::size_t>(order[b])] = true;
        Bits local = uncovered;
        clear_covered(local, u_.cover[static_cast<std::size_t>(order[b])]);
        std::vector<int> chosen = start;
        chosen.push_back(order[b]);
        Result &r = branch[b];
        auto cancelled = [&] { return best.load(std::memory_order_relaxed) < b || aborted.load(); };
        r.found = dfs(local, slots - 1, local_banned, chosen, r.nodes, cancelled);
        if (r.found) {
          r.chosen = chosen;
          std::size_t cur = best.load();
          while (b < cur && !best.compare_exchange_weak(cur, b)) {
          }
        }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
          aborted = true;
          return;
        }
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options_.jobs,
                                                          static_cast<unsigned>(order.size())));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < jobs; ++i)
        pool.emplace_back(worker);
      for (auto &t : pool)
        t.join();
    }
    if (error)
      std::rethrow_exception(error);
    for (const Result &r : branch)
      out.nodes += r.nodes;
    if (best.load() < order.size()) {
      out.found = true;
      out.chosen = branch[best.load()].chosen;
    }
    return out;
  }

private:
  void bump(u64 k) {
    if (total_nodes_.fetch_add(k) + k > options_.node_limit)
      throw resource_error("search node budget of " + std::to_string(options_.node_limit) +
                           " exhausted");
  }

  // Candidates for the most constrained uncovered type, best first; empty
  // when some type has no candidate or the coverage bound prunes the node.
  std::vector<int> branch_order(const Bits &uncovered, const std::vector<bool> &banned,
                                int slots) const {
    std::size_t best_type = u_.types.size(), best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t w = 0; w < u_.words; ++w) {
      u64 bits = uncovered[w];
      while (bits) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t count = 0;
        for (int i : u_.users[t])
          count += banned[static_cast<std::size_t>(i)] ? 0 : 1;
        if (count < best_count) {
          best_count = count;
          best_type = t;
          if (count == 0)
            return {};
        }
      }
    }
    std::vector<std::pair<std::size_t, int>> gain;
    std::size_t max_gain = 0;
    for (std::size_t i = 0; i < banned.size(); ++i) {
      if (banned[i])
        continue;
      const std::size_t g = popcount_and(u_.cover[i], uncovered);
      max_gain = std::max(max_gain, g);
    }
    if (max_gain * static_cast<std::size_t>(slots) < popcount(uncovered))
      return {};
    for (int i : u_.users[best_type])
      if (!banned[static_cast<std::size_t>(i)])
        gain.emplace_back(popcount_and(u_.cover[static_cast<std::size_t>(i)], uncovered), i);
    std::stable_sort(gain.begin(), gain.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    std::vector<int> order;
    for (const auto &[g, i] : gain)
      order.push_back(i);
    return order;
  }

  bool dfs(const Bits &uncovered, int slots, std::vector<bool> &banned, std::vector<int> &chosen,
           u64 &nodes, const std::function<bool()> &cancelled) {
    ++nodes;
    bump(1);
    if (!any(uncovered))
      return true;
    if (slots <= 0 || cancelled())
      return false;
    const std::vector<int> order = branch_order(uncovered, banned, slots);
    bool found = false;
    std::size_t tried = 0;
    for (int c : order) {
      Bits next = uncovered;
      clear_covered(next, u_.cover[static_cast<std::size_t>(c)]);
      chosen.push_back(c);
      banned[static_cast<std::size_t>(c)] = true;
      ++tried;
      if (dfs(next, slots - 1, banned, chosen, nodes, cancelled)) {
        found = true;
        break;
      }
      chosen.pop_back();
    }
    for (std::size_t j = 0; j < tried; ++j)
      banned[static_cast<std::size_t>(order[j])] = false;
    return found;
  }

  const Universe &u_;
  std::vector<bool> allowed_;
  const SearchOptions &options_;
  std::atomic<u64> &total_nodes_;
};

std::size_t index_in(const ComponentPool &pool, const Component &c) {
  const auto &m = pool.members();
  return static_cast<std::size_t>(std::find(m.begin(), m.end(), c) - m.begin());
}

} // namespace

std::optional<std::vector<std::pair<Partition, std::size_t>>>
first_fit_assignment(int n, const std::vector<Component> &chosen) {
  for (const Component &c : chosen)
    if (is_fact(c))
      return std::nullopt;
  std::vector<std::pair<Partition, std::size_t>> out;
  bool ok = true;
  for_each_partition(n, [&](const Partition &t) {
    if (!ok)
      return;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (contains_type(chosen[i], t)) {
        out.emplace_back(t, i);
        return;
      }
    ok = false;
  });
  if (!ok)
    return std::nullopt;
  return out;
}

CoverCertificate min_cover_search(const ComponentPool &pool, const SearchConstraints &constraints,
                                  const SearchOptions &options) {
  const int n = pool.degree();
  if (pool.size() == 0)
    throw domain_error("search pool is empty");
  if (!options.force && partition_count(n) > options.max_types)
    throw resource_error("S_" + std::to_string(n) + " has more than " +
                         std::to_string(options.max_types) + " types; use --force to override");
  for (const Component &c : constraints.force_in)
    if (!pool.contains(c))
      throw domain_error("forced-in component " + to_token(c) + " is not in the pool");
  for (const Component &c : constraints.force_out)
    if (!pool.contains(c))
      throw domain_error("forced-out component " + to_token(c) + " is not in the pool");

  CoverCertificate cert;
  cert.n = n;
  cert.pool = pool.members();
  cert.constraints = constraints;
  std::sort(cert.constraints.force_in.begin(), cert.constraints.force_in.end());
  cert.constraints.force_in.erase(
      std::unique(cert.constraints.force_in.begin(), cert.constraints.force_in.end()),
      cert.constraints.force_in.end());
  std::sort(cert.constraints.force_out.begin(), cert.constraints.force_out.end());
  cert.constraints.force_out.erase(
      std::unique(cert.constraints.force_out.begin(), cert.constraints.force_out.end()),
      cert.constraints.force_out.end());
  if (constraints.max_size)
    cert.size_cap = *constraints.max_size;
  else
    cert.size_cap = n >= 4 ? static_cast<int>(g_bound(static_cast<u64>(n)))
                           : static_cast<int>(pool.size());
  if (cert.size_cap < 1)
    throw domain_error("size cap must be positive");

  const Universe u = build_universe(pool);
  cert.exclusions = u.traces;

  std::vector<int> start;
  for (const Component &c : cert.constraints.force_in)
    start.push_back(static_cast<int>(index_in(pool, c)));
  std::vector<bool> approx(pool.size(), true), real(pool.size(), true);
  for (const Component &c : cert.constraints.force_out)
    approx[index_in(pool, c)] = real[index_in(pool, c)] = false;
  bool forced_fact = false;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (is_fact(pool.members()[i])) {
      real[i] = false;
      if (std::find(start.begin(), start.end(), static_cast<int>(i)) != start.end())
        forced_fact = true;
    }
  for (int s : start)
    if (!approx[static_cast<std::size_t>(s)]) // forced both in and out
      return cert;

  const bool facts = pool.has_facts();
  std::atomic<u64> total{0};
  Solver real_solver(u, real, options, total), approx_solver(u, approx, options, total);
  const int base = std::max<int>(1, static_cast<int>(start.size()));
  for (int k = base; k <= cert.size_cap; ++k) {
    const int slots = k - static_cast<int>(start.size());
    if (!forced_fact) {
      const auto r = real_solver.solve(start, slots);
      if (r.found) {
        cert.levels.push_back({k, LevelOutcome::Found, 0, {}});
        cert.feasible = true;
        std::vector<int> idx = r.chosen;
        std::sort(idx.begin(), idx.end());
        for (int i : idx)
          cert.chosen.push_back(pool.members()[static_cast<std::size_t>(i)]);
        break;
      }
      if (!facts) {
        cert.levels.push_back({k, LevelOutcome::Refuted, r.nodes, {}});
        continue;
      }
    }
    const auto a = approx_solver.solve(start, slots);
    if (!a.found) {
      cert.levels.push_back({k, LevelOutcome::Refuted, a.nodes, {}});
      continue;
    }
    std::vector<int> idx = a.chosen;
    std::sort(idx.begin(), idx.end());
    LevelRecord rec{k, LevelOutcome::Unresolved, 0, {}};
    for (int i : idx)
      rec.witness.push_back(pool.members()[static_cast<std::size_t>(i)]);
    cert.levels.push_back(std::move(rec));
    ++cert.unresolved;
  }
  if (cert.feasible) {
    auto assignment = first_fit_assignment(n, cert.chosen);
    if (!assignment)
      throw std::logic_error("search returned a non-cover");
    cert.assignment = std::move(*assignment);
  }
  return cert;
}

CoverCertificate certify_degree(int n, const SearchOptions &options) {
  if (n != 10 && n != 14)
    throw domain_error("certify_degree supports n = 10 and n = 14 only");
  PoolOptions po;
  po.include_feit_facts = true;
  const ComponentPool pool = standard_pool(n, po);
  CoverCertificate cert = min_cover_search(pool, {}, options);
  cert.kind = "certify";
  const std::string sn = "S_" + std::to_string(n);

  Claim gamma;
  gamma.id = "gamma";
  gamma.statement = cert.feasible ? "gamma(" + sn + ")=" + std::to_string(cert.size())
                                  : "no cover of " + sn + " within the cap";
  gamma.certified = cert.optimal();
  gamma.levels = cert.levels;
  cert.claims.push_back(std::move(gamma));

  if (cert.feasible) {
    SearchConstraints with_p2;
    with_p2.force_in = {Intransitive{2}};
    with_p2.max_size = cert.size();
    const CoverCertificate p2 = min_cover_search(pool, with_p2, options);
    Claim claim;
    claim.id = "no-P2";
    claim.statement = "no cover of size " + std::to_string(cert.size()) + " contains P_2";
    claim.certified = !p2.feasible && p2.unresolved == 0;
    claim.constraints = p2.constraints;
    claim.levels = p2.levels;
    cert.unresolved += p2.unresolved;
    cert.claims.push_back(std::move(claim));
  }
  return cert;
}

CheckResult check_certificate(const CoverCertificate &cert) {
  CheckResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.problems.push_back(std::move(msg));
  };
  try {
    if (cert.n < 3)
      throw domain_error("degree below 3");
    const ComponentPool pool(cert.n, cert.pool);
    if (pool.members() != cert.pool)
      fail("pool is not in canonical order");
    for (const Component &c : cert.constraints.force_in)
      if (!pool.contains(c))
        fail("forced-in " + to_token(c) + " outside the pool");
    for (const Component &c : cert.constraints.force_out)
      if (!pool.contains(c))
        fail("forced-out " + to_token(c) + " outside the pool");

    std::set<Component> chosen_set;
    for (const Component &c : cert.chosen) {
      if (!pool.contains(c))
        fail("chosen " + to_token(c) + " outside the pool");
      if (!chosen_set.insert(c).second)
        fail("chosen " + to_token(c) + " repeated");
      if (std::find(cert.constraints.force_out.begin(), cert.constraints.force_out.end(), c) !=
          cert.constraints.force_out.end())
        fail("chosen " + to_token(c) + " is forced out");
    }
    if (cert.feasible) {
      for (const Component &c : cert.constraints.force_in)
        if (!chosen_set.count(c))
          fail("forced-in " + to_token(c) + " not chosen");
      if (cert.size() > cert.size_cap)
        fail("cover larger than the size cap");
      if (!std::is_sorted(cert.chosen.begin(), cert.chosen.end()))
        fail("chosen components are not in pool order");
    } else if (!cert.chosen.empty() || !cert.assignment.empty()) {
      fail("infeasible certificate carries a cover");
    }

    if (cert.feasible) {
      const std::vector<Partition> types = enumerate_partitions(cert.n);
      if (cert.assignment.size() != types.size())
        fail("assignment has " + std::to_string(cert.assignment.size()) + " entries, expected " +
             std::to_string(types.size()));
      std::set<Partition> seen;
      for (const auto &[t, idx] : cert.assignment) {
        const std::string ts = t.to_string();
        if (t.degree() != cert.n) {
          fail("type " + ts + " has the wrong degree");
          continue;
        }
        if (!seen.insert(t).second)
          fail("type " + ts + " assigned twice");
        if (idx >= cert.chosen.size()) {
          fail("type " + ts + " assigned to a missing component");
          continue;
        }
        const Component &h = cert.chosen[idx];
        if (is_fact(h)) {
          fail("type " + ts + " assigned to fact component " + to_token(h));
          continue;
        }
        if (!contains_type(h, t))
          fail("type " + ts + " does not belong to " + to_token(h));
        for (std::size_t j = 0; j < idx; ++j)
          if (!is_fact(cert.chosen[j]) && contains_type(cert.chosen[j], t)) {
            fail("type " + ts + " is not assigned first-fit");
            break;
          }
      }
      if (seen.size() != types.size() && cert.assignment.size() == types.size())
        fail("assignment misses some type");
    }

    std::size_t unresolved = 0;
    auto check_levels = [&](const std::vector<LevelRecord> &levels, bool expect_found,
                            int found_size, const std::string &where) {
      for (std::size_t i = 0; i < levels.size(); ++i) {
        const LevelRecord &l = levels[i];
        if (i > 0 && l.size != levels[i - 1].size + 1)
          fail(where + ": level sizes are not consecutive");
        if (l.outcome == LevelOutcome::Found && (i + 1 != levels.size() || !expect_found))
          fail(where + ": unexpected found level");
        if (l.outcome == LevelOutcome::Unresolved)
          ++unresolved;
      }
      if (expect_found &&
          (levels.empty() || levels.back().outcome != LevelOutcome::Found ||
           levels.back().size != found_size))
        fail(where + ": last level does not match the cover size");
    };
    check_levels(cert.levels, cert.feasible, cert.size(), "search");
    for (const Claim &c : cert.claims) {
      if (c.id == "gamma")
        continue; // mirrors the search levels
      check_levels(c.levels, false, 0, "claim " + c.id);
      if (c.certified) {
        for (const LevelRecord &l : c.levels)
          if (l.outcome != LevelOutcome::Refuted)
            fail("claim " + c.id + " is certified with an open level");
      }
    }
    if (unresolved != cert.unresolved)
      fail("unresolved count " + std::to_string(cert.unresolved) + " does not match " +
           std::to_string(unresolved) + " open levels");

    for (const ExclusionTrace &tr : cert.exclusions) {
      if (tr.type.degree() != cert.n)
        fail("exclusion trace for " + tr.type.to_string() + " has the wrong degree");
      else if (tr.component && !pool.contains(*tr.component))
        fail("exclusion trace names " + to_token(*tr.component) + " outside the pool");
      else if (!recheck_trace(tr))
        fail("exclusion trace for " + tr.type.to_string() + " does not re-check");
    }
  } catch (const std::exception &e) {
    fail(e.what());
  }
  return res;
}

} // namespace normcov
