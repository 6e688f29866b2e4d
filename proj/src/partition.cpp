#include "normcov/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

std::size_t at(int part) { return static_cast<std::size_t>(part - 1); }

} // namespace

Partition::Partition(int n, std::vector<int> mult) : n_(n), mult_(std::move(mult)) {
  if (n < 1)
    throw domain_error("partition degree must be positive");
  if (mult_.size() != static_cast<std::size_t>(n))
    throw domain_error("multiplicity vector length must equal the degree");
  long total = 0;
  for (int j = 1; j <= n; ++j) {
    const int m = mult_[at(j)];
    if (m < 0 || m > n)
      throw domain_error("multiplicity out of range 0..n");
    total += static_cast<long>(j) * m;
  }
  if (total != n)
    throw domain_error("multiplicities do not sum to the degree");
}

Partition Partition::from_parts(std::span<const int> parts) {
  int n = 0;
  for (int x : parts) {
    if (x < 1)
      throw domain_error("parts must be positive");
    n += x;
  }
  if (n < 1)
    throw domain_error("empty partition");
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (int x : parts)
    ++mult[at(x)];
  return Partition(n, std::move(mult));
}

Partition Partition::from_parts(std::initializer_list<int> parts) {
  return from_parts(std::span<const int>(parts.begin(), parts.size()));
}

Partition Partition::from_pairs(std::span<const std::pair<int, int>> pairs) {
  std::vector<int> parts;
  for (const auto &[part, count] : pairs) {
    if (part < 1 || count < 0)
      throw domain_error("invalid (part, multiplicity) pair");
    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
  }
  return from_parts(parts);
}

int Partition::multiplicity(int part) const {
  if (part < 1 || part > n_)
    return 0;
  return mult_[at(part)];
}

int Partition::part_count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

int Partition::largest_part() const {
  for (int j = n_; j >= 1; --j)
    if (mult_[at(j)] > 0)
      return j;
  return 0;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (int j = n_; j >= 1; --j)
    out.insert(out.end(), static_cast<std::size_t>(mult_[at(j)]), j);
  return out;
}

std::vector<std::pair<int, int>> Partition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= n_; ++j)
    if (mult_[at(j)] > 0)
      out.emplace_back(j, mult_[at(j)]);
  return out;
}

bool Partition::is_subpartition_of(const Partition &whole) const {
  for (int j = 1; j <= n_; ++j)
    if (mult_[at(j)] > whole.multiplicity(j))
      return false;
  return true;
}

std::optional<Partition> Partition::complement_in(const Partition &whole) const {
  if (!is_subpartition_of(whole) || n_ >= whole.degree())
    return std::nullopt;
  const int rest = whole.degree() - n_;
  std::vector<int> mult(static_cast<std::size_t>(rest), 0);
  for (int j = 1; j <= whole.degree(); ++j) {
    const int m = whole.multiplicity(j) - multiplicity(j);
    if (m > 0)
      mult[at(j)] = m;
  }
  return Partition(rest, std::move(mult));
}

Partition Partition::merged_with(const Partition &other) const {
  const int n = n_ + other.n_;
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j)
    mult[at(j)] = multiplicity(j) + other.multiplicity(j);
  return Partition(n, std::move(mult));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto &[part, count] : pairs()) {
    if (!first)
      os << ',';
    first = false;
    os << part;
    if (count > 1)
      os << '^' << count;
  }
  os << ']';
  return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition &other) const {
  if (auto c = n_ <=> other.n_; c != 0)
    return c;
  // Earlier in enumeration order (more weight on large parts) sorts first.
  for (int j = n_; j >= 1; --j) {
    const int a = mult_[at(j)], b = other.mult_[at(j)];
    if (a != b)
      return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void for_each_partition(int n, const std::function<void(const Partition &)> &visit) {
  if (n < 1)
    throw domain_error("enumerate_partitions requires n >= 1");
  // Descending parts, reverse-lexicographic successor.
  std::vector<int> parts{n};
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  while (true) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int x : parts)
      ++mult[at(x)];
    visit(Partition(n, mult));

    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty())
      return;
    const int v = parts.back() - 1;
    parts.back() = v;
    int rem = ones + 1;
    while (rem > 0) {
      const int take = std::min(v, rem);
      parts.push_back(take);
      rem -= take;
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition &p) { out.push_back(p); });
  return out;
}

bool SumSet::contains(int c) const {
  return c > 0 && c < n_ && reachable_[static_cast<std::size_t>(c)];
}

std::vector<int> SumSet::values() const {
  std::vector<int> out;
  for (int c = 1; c < n_; ++c)
    if (reachable_[static_cast<std::size_t>(c)])
      out.push_back(c);
  return out;
}

std::vector<bool> reachable_sums(const Partition &t) {
  const int n = t.degree();
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  std::vector<int> used(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    const int m = t.multiplicity(j);
    if (m == 0)
      continue;
    // Bounded knapsack: used[s] counts copies of j spent to first reach s.
    std::fill(used.begin(), used.end(), 0);
    for (int s = j; s <= n; ++s) {
      const auto su = static_cast<std::size_t>(s), prev = static_cast<std::size_t>(s - j);
      if (!reach[su] && reach[prev] && used[prev] < m) {
        reach[su] = true;
        used[su] = used[prev] + 1;
      }
    }
  }
  return reach;
}

SumSet subset_sums(const Partition &t) { return SumSet(t.degree(), reachable_sums(t)); }

std::string Cut::to_string() const {
  auto inner = [](const Partition &p) {
    const std::string s = p.to_string();
    return s.substr(1, s.size() - 2);
  };
  return "[" + inner(left) + " | " + inner(right) + "]";
}

std::optional<std::vector<int>> pick_subpartition(const Partition &t, int target) {
  const int n = t.degree();
  if (target < 0 || target > n)
    return std::nullopt;
  // suffix[j][s]: s is reachable using only parts >= j.
  std::vector<std::vector<bool>> suffix(static_cast<std::size_t>(n) + 2,
                                        std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  suffix[static_cast<std::size_t>(n) + 1][0] = true;
  for (int j = n; j >= 1; --j) {
    const auto &next = suffix[static_cast<std::size_t>(j) + 1];
    auto &cur = suffix[static_cast<std::size_t>(j)];
    const int m = t.multiplicity(j);
    for (int s = 0; s <= n; ++s) {
      if (!next[static_cast<std::size_t>(s)])
        continue;
      for (int k = 0; k <= m && s + k * j <= n; ++k)
        cur[static_cast<std::size_t>(s + k * j)] = true;
    }
  }
  if (!suffix[1][static_cast<std::size_t>(target)])
    return std::nullopt;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  int rem = target;
  for (int j = 1; j <= n && rem > 0; ++j) {
    const auto &next = suffix[static_cast<std::size_t>(j) + 1];
    for (int k = std::min(t.multiplicity(j), rem / j); k >= 0; --k) {
      if (next[static_cast<std::size_t>(rem - k * j)]) {
        pick[at(j)] = k;
        rem -= k * j;
        break;
      }
    }
  }
  return pick;
}

namespace {

std::optional<Cut> cut_with_iso_on_side(const Partition &t, const Partition &iso,
                                        const Partition &rest, int side_total, bool iso_left) {
  const int need = side_total - iso.degree();
  if (need < 0)
    return std::nullopt;
  std::vector<int> side_mult(static_cast<std::size_t>(t.degree()), 0);
  if (need > 0) {
    auto pick = pick_subpartition(rest, need);
    if (!pick)
      return std::nullopt;
    for (int j = 1; j <= rest.degree(); ++j)
      side_mult[at(j)] = (*pick)[at(j)];
  }
  for (int j = 1; j <= iso.degree(); ++j)
    side_mult[at(j)] += iso.multiplicity(j);
  side_mult.resize(static_cast<std::size_t>(side_total));
  Partition side(side_total, std::move(side_mult));
  Partition other = *side.complement_in(t);
  if (iso_left)
    return Cut{t, side, other};
  return Cut{t, other, side};
}

} // namespace

std::optional<Cut> cut_isolating(const Partition &t, const Partition &iso, int c) {
  const int n = t.degree();
  if (!iso.is_subpartition_of(t) || iso.degree() > n)
    throw domain_error("isolated partition " + iso.to_string() + " is not a subpartition of " +
                       t.to_string());
  if (c <= 0 || c >= n)
    throw domain_error("cut size must satisfy 0 < c < n");
  if (iso.degree() == n)
    return std::nullopt; // iso is all of t and cannot sit inside a proper side
  const Partition rest = *iso.complement_in(t);
  if (auto cut = cut_with_iso_on_side(t, iso, rest, c, true))
    return cut;
  return cut_with_iso_on_side(t, iso, rest, n - c, false);
}

Partition type_power(const Partition &t, u64 e) {
  if (e == 0)
    throw domain_error("exponent must be positive");
  const int n = t.degree();
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  for (const auto &[part, count] : t.pairs()) {
    const int g = static_cast<int>(gcd(static_cast<u64>(part), e));
    mult[at(part / g)] += g * count;
  }
  return Partition(n, std::move(mult));
}

u64 type_order(const Partition &t) {
  u64 order = 1;
  for (const auto &[part, count] : t.pairs())
    order = lcm_checked(order, static_cast<u64>(part));
  return order;
}

bool is_even_type(const Partition &t) { return (t.degree() - t.part_count()) % 2 == 0; }

} // namespace normcov
