#include "normcov/metacyclic.hpp"

#include <algorithm>
#include <sstream>

#include "normcov/errors.hpp"

namespace normcov {

MetacyclicShape::MetacyclicShape(int n, Partition rest) : n_(n), rest_(std::move(rest)) {
  if (n < 4)
    throw domain_error("special metacyclic subgroups need n >= 4");
  if (rest_.degree() != n - 2)
    throw domain_error("shape parts must sum to n - 2");
  bool has_even = false;
  for (const auto &[part, count] : rest_.pairs())
    has_even = has_even || part % 2 == 0;
  if (!has_even)
    throw domain_error("sigma must have even order");
}

MetacyclicShape MetacyclicShape::from_parts(int n, const std::vector<int> &parts) {
  return MetacyclicShape(n, Partition::from_parts(parts));
}

Partition MetacyclicShape::sigma_type() const {
  return rest_.merged_with(Partition::identity(2));
}

std::vector<int> MetacyclicShape::canonical_parts() const {
  std::vector<int> parts = rest_.parts();
  std::stable_partition(parts.begin(), parts.end(), [](int x) { return x % 2 == 0; });
  return parts;
}

int MetacyclicShape::split() const {
  int s = 0;
  for (const auto &[part, count] : rest_.pairs())
    if (part % 2 == 0)
      s += count;
  return s;
}

std::string MetacyclicShape::to_string() const {
  std::ostringstream os;
  os << "[1^2 |";
  for (int x : canonical_parts())
    os << ' ' << x;
  os << "] in S_" << n_;
  return os.str();
}

std::vector<MetacyclicShape> enumerate_shapes(int n) {
  std::vector<MetacyclicShape> out;
  if (n <= 3)
    return out;
  for_each_partition(n - 2, [&](const Partition &p) {
    for (const auto &[part, count] : p.pairs())
      if (part % 2 == 0) {
        out.emplace_back(n, p);
        return;
      }
  });
  return out;
}

std::string to_string(CoverageStatus status) {
  switch (status) {
  case CoverageStatus::Covered:
    return "covered";
  case CoverageStatus::NotEstablished:
    return "not-established";
  case CoverageStatus::Impossible:
    return "impossible";
  }
  return "";
}

CoverageVerdict covered_by_intransitive(const MetacyclicShape &s, int x) {
  const int n = s.degree();
  if (x < 1 || 2 * x > n)
    throw domain_error("intransitive parameter must satisfy 1 <= x <= n/2");
  // The pair sits on the side of size c; the rest of that side sums to c - 2.
  const std::vector<bool> reach = reachable_sums(s.rest());
  for (int c : {x, n - x}) {
    const int need = c - 2;
    if (need < 0 || !reach[static_cast<std::size_t>(need)])
      continue;
    auto cut = cut_isolating(s.sigma_type(), Partition::identity(2), c);
    if (cut)
      return {CoverageStatus::Covered, "pair-isolating-cut", *cut};
  }
  return {CoverageStatus::Impossible, "no-pair-isolating-cut", std::monostate{}};
}

CoverageVerdict covered_by_wreath(const MetacyclicShape &s, int b, int m) {
  if (b < 2 || m < 2 || b * m != s.degree())
    throw domain_error("wreath parameters need b, m >= 2 with b*m = n");
  if (b == 2) {
    if (s.all_parts_even())
      return {CoverageStatus::Covered, "all-parts-even", WreathWitness{b, m}};
    bool cycles_even = true;
    for (const auto &[part, count] : s.rest().pairs())
      cycles_even = cycles_even && (part == 1 || part % 2 == 0);
    if (cycles_even)
      return {CoverageStatus::Covered, "even-cycles-with-transposition", WreathWitness{b, m}};
  }
  return {CoverageStatus::NotEstablished, "sufficient-rules-silent", std::monostate{}};
}

CoverageVerdict covered_by_alternating(const MetacyclicShape &) {
  return {CoverageStatus::Impossible, "transposition-is-odd", std::monostate{}};
}

CoverageVerdict covered_by_component(const MetacyclicShape &s, const Component &h) {
  validate_component(h, s.degree());
  if (const auto *c = std::get_if<Intransitive>(&h))
    return covered_by_intransitive(s, c->x);
  if (const auto *c = std::get_if<Imprimitive>(&h))
    return covered_by_wreath(s, c->b, c->m);
  if (std::holds_alternative<Alternating>(h))
    return covered_by_alternating(s);
  // A primitive group containing a transposition is the whole symmetric group.
  return {CoverageStatus::Impossible, "primitive-without-transposition", std::monostate{}};
}

bool oracle_group_contained(std::span<const Perm> gens, const Component &h) {
  if (gens.empty())
    throw domain_error("oracle needs at least one generator");
  const int n = gens.front().degree();
  if (n > kOracleMaxDegree)
    throw resource_error("oracle enumeration is limited to n <= " +
                         std::to_string(kOracleMaxDegree));
  validate_component(h, n);
  if (const auto *c = std::get_if<Intransitive>(&h)) {
    bool found = false;
    for_each_subset(n, c->x, [&](const std::vector<bool> &set) {
      found = stabilizes_set(gens, set);
      return !found;
    });
    return found;
  }
  if (const auto *c = std::get_if<Imprimitive>(&h)) {
    bool found = false;
    for_each_block_system(c->b, c->m, [&](std::span<const int> blocks) {
      found = preserves_blocks(gens, blocks);
      return !found;
    });
    return found;
  }
  if (std::holds_alternative<Alternating>(h))
    return std::all_of(gens.begin(), gens.end(), [](const Perm &g) { return g.is_even(); });
  throw domain_error("oracle supports intransitive, imprimitive and alternating components");
}

bool oracle_contained(const MetacyclicShape &s, const Component &h) {
  const int n = s.degree();
  if (n > kOracleMaxDegree)
    throw resource_error("oracle enumeration is limited to n <= " +
                         std::to_string(kOracleMaxDegree));
  const std::vector<Perm> gens{Perm::of_type(s.rest(), 2), Perm::transposition(n, 0, 1)};
  return oracle_group_contained(gens, h);
}

SpecialVerdict is_special_basic_set(const BasicSet &delta, const SpecialOptions &options) {
  SpecialVerdict out;
  const int n = delta.degree();
  const BasicVerdict basic = verify_basic_set(delta);
  out.basic = basic.basic;
  out.uncovered_types = basic.uncovered;

  for (const MetacyclicShape &shape : enumerate_shapes(n)) {
    ++out.shapes_checked;
    bool covered = false;
    std::vector<const Component *> open;
    for (const Component &h : delta.components()) {
      const CoverageVerdict v = covered_by_component(shape, h);
      if (v.status == CoverageStatus::Covered) {
        covered = true;
        break;
      }
      if (v.status == CoverageStatus::NotEstablished)
        open.push_back(&h);
    }
    if (covered)
      continue;
    if (open.empty()) {
      out.uncovered_shapes.push_back(shape);
      continue;
    }
    if (!options.allow_oracle || n > kOracleMaxDegree) {
      out.unresolved_shapes.push_back(shape);
      continue;
    }
    for (const Component *h : open) {
      ++out.oracle_calls;
      if (oracle_contained(shape, *h)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      out.uncovered_shapes.push_back(shape);
  }
  out.special = out.basic && out.uncovered_shapes.empty() && out.unresolved_shapes.empty();
  return out;
}

namespace {

Component intransitive_for(int n, int c) { return Intransitive{std::min(c, n - c)}; }

} // namespace

ConstructionReplay replay_even_construction(int n) {
  if (n < 4 || n % 2 != 0)
    throw domain_error("the even-degree replay needs an even n >= 4");
  const auto f = factorize(static_cast<u64>(n));
  NamedSet name = NamedSet::DeltaC;
  if (f.size() == 1)
    name = NamedSet::PrimePower;
  else if (f.size() == 2 && f[1].exponent == 1 && f[0].exponent == 1)
    name = NamedSet::TwoP;
  ConstructionReplay out{name, build_named_set(name, n), {}, {}};
  const int p2 = f.size() >= 2 ? static_cast<int>(f[1].prime) : 0;

  for (const MetacyclicShape &shape : enumerate_shapes(n)) {
    const std::vector<int> parts = shape.canonical_parts();
    std::vector<int> evens, odds;
    for (int x : parts)
      (x % 2 == 0 ? evens : odds).push_back(x);
    Component pick = Imprimitive{2, n / 2};
    if (!odds.empty()) {
      if (name == NamedSet::DeltaC) {
        auto free = std::find_if(odds.rbegin(), odds.rend(), [&](int x) { return x % p2 != 0; });
        if (free != odds.rend()) {
          pick = intransitive_for(n, *free);
        } else {
          // every odd part is a multiple of p_2, so some even part is not
          auto xu = std::find_if(evens.begin(), evens.end(), [&](int x) { return x % p2 != 0; });
          if (xu == evens.end()) {
            out.failures.push_back(shape);
            continue;
          }
          pick = intransitive_for(n, *xu + odds.back());
        }
      } else {
        pick = intransitive_for(n, odds.back());
      }
    }
    CoverageVerdict verdict = covered_by_component(shape, pick);
    if (!out.set.contains(pick) || verdict.status != CoverageStatus::Covered)
      out.failures.push_back(shape);
    out.steps.push_back({shape, pick, std::move(verdict)});
  }
  return out;
}

} // namespace normcov
