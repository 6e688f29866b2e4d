#include "normcov/basic_set.hpp"

#include <algorithm>
#include <set>

#include "normcov/bounds.hpp"
#include "normcov/errors.hpp"

namespace normcov {

BasicSet::BasicSet(int n, std::vector<Component> components, bool claimed_basic,
                   bool claimed_special)
    : n_(n), components_(std::move(components)), claimed_basic_(claimed_basic),
      claimed_special_(claimed_special) {
  if (components_.empty())
    throw domain_error("a basic set needs at least one component");
  std::set<Component> seen;
  for (const Component &c : components_) {
    validate_component(c, n_);
    if (!seen.insert(c).second)
      throw domain_error("duplicate component " + to_token(c));
  }
}

bool BasicSet::contains(const Component &c) const {
  return std::find(components_.begin(), components_.end(), c) != components_.end();
}

bool BasicSet::is_alternating_only() const {
  return components_.size() == 1 && std::holds_alternative<Alternating>(components_.front());
}

std::string BasicSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i)
      out += ", ";
    out += describe(components_[i], n_);
  }
  return out + "}";
}

namespace {

// contains_type with the subset sums of t computed once by the caller.
bool member(const Component &h, const Partition &t, const std::vector<bool> &reach) {
  if (const auto *c = std::get_if<Intransitive>(&h))
    return reach[static_cast<std::size_t>(c->x)];
  if (std::holds_alternative<Alternating>(h))
    return is_even_type(t);
  return contains_type(h, t);
}

} // namespace

BasicVerdict verify_basic_set(const BasicSet &delta) {
  BasicVerdict out;
  out.nontrivial_intersection_ok = !delta.is_alternating_only();
  for_each_partition(delta.degree(), [&](const Partition &t) {
    ++out.types_checked;
    const std::vector<bool> reach = reachable_sums(t);
    for (const Component &h : delta.components())
      if (!is_fact(h) && member(h, t, reach))
        return;
    out.uncovered.push_back(t);
  });
  out.basic = out.uncovered.empty() && out.nontrivial_intersection_ok;
  return out;
}

std::string to_string(NamedSet name) {
  switch (name) {
  case NamedSet::DeltaC:
    return "deltaC";
  case NamedSet::Delta1:
    return "delta1";
  case NamedSet::Delta2:
    return "delta2";
  case NamedSet::DeltaE:
    return "deltaE";
  case NamedSet::Prime:
    return "prime";
  case NamedSet::PrimePower:
    return "primePower";
  case NamedSet::TwoP:
    return "twoP";
  }
  return "";
}

NamedSet parse_named_set(const std::string &text) {
  for (NamedSet name : all_named_sets())
    if (to_string(name) == text)
      return name;
  throw parse_error("unknown named set '" + text + "'");
}

std::vector<NamedSet> all_named_sets() {
  return {NamedSet::DeltaC, NamedSet::Delta1,     NamedSet::Delta2, NamedSet::DeltaE,
          NamedSet::Prime,  NamedSet::PrimePower, NamedSet::TwoP};
}

namespace {

void require(bool ok, NamedSet name, const std::string &hypothesis) {
  if (!ok)
    throw domain_error(to_string(name) + " requires " + hypothesis);
}

// P_x for 1 <= x <= floor(n/k), then P_x for n/k < x < n/2 coprime to n,
// then S_p wr S_{n/p} for each prime p | n.
std::vector<Component> maroti_family(int n, int k) {
  std::vector<Component> out;
  for (int x = 1; x < n - x; ++x)
    if (k * x <= n || gcd(static_cast<u64>(x), static_cast<u64>(n)) == 1)
      out.push_back(Intransitive{x});
  for (const PrimePower &pp : factorize(static_cast<u64>(n)))
    out.push_back(Imprimitive{static_cast<int>(pp.prime), n / static_cast<int>(pp.prime)});
  return out;
}

// S_2 wr S_{n/2} and P_x for odd x < n/2.
std::vector<Component> odd_intransitive_with_pairs(int n) {
  std::vector<Component> out{Imprimitive{2, n / 2}};
  for (int x = 1; 2 * x < n; x += 2)
    out.push_back(Intransitive{x});
  return out;
}

} // namespace

BasicSet build_named_set(NamedSet name, int n) {
  require(n >= 3, name, "n >= 3");
  const u64 un = static_cast<u64>(n);
  const auto f = factorize(un);
  std::vector<Component> comps;
  switch (name) {
  case NamedSet::DeltaC: {
    require(n >= 4 && ((f.size() == 2 && (f[0].exponent != 1 || f[1].exponent != 1)) ||
                       f.size() >= 3),
            name, "nu(n) = 2 with (a_1, a_2) != (1, 1), or nu(n) >= 3");
    const u64 p1 = f[0].prime, p2 = f[1].prime;
    for (int x = 1; 2 * x < n; ++x)
      if (gcd(static_cast<u64>(x), p1 * p2) == 1)
        comps.push_back(Intransitive{x});
    comps.push_back(Imprimitive{static_cast<int>(p1), n / static_cast<int>(p1)});
    comps.push_back(Imprimitive{static_cast<int>(p2), n / static_cast<int>(p2)});
    break;
  }
  case NamedSet::Delta1:
    require(n >= 6 && !is_prime(un), name, "n >= 6 not a prime");
    comps = maroti_family(n, 3);
    break;
  case NamedSet::Delta2:
    require(n % 2 == 1, name, "n odd");
    require(n >= 6 && !is_prime(un), name, "n >= 6 not a prime");
    comps = maroti_family(n, 4);
    comps.push_back(Alternating{});
    break;
  case NamedSet::DeltaE:
    require(n % 2 == 0 && n >= 4, name, "n even, n >= 4");
    for (int x = 2; 2 * x < n; x += 2)
      comps.push_back(Intransitive{x});
    comps.push_back(Imprimitive{n / 2, 2});
    comps.push_back(Alternating{});
    break;
  case NamedSet::Prime:
    require(is_prime(un), name, "n prime");
    if (n == 3) {
      comps = {Alternating{}, Intransitive{1}};
    } else {
      comps.push_back(Affine{n});
      for (int k = 2; 2 * k <= n - 1; ++k)
        comps.push_back(Intransitive{k});
    }
    break;
  case NamedSet::PrimePower:
    require(f.size() == 1 && f[0].prime == 2 && f[0].exponent >= 2, name,
            "n = 2^a with a >= 2");
    comps = odd_intransitive_with_pairs(n);
    break;
  case NamedSet::TwoP:
    require(n % 2 == 0 && n / 2 > 2 && is_prime(un / 2), name, "n = 2p with p an odd prime");
    comps = odd_intransitive_with_pairs(n);
    break;
  }
  const bool special = name != NamedSet::DeltaC;
  return BasicSet(n, std::move(comps), true, special);
}

int named_set_formula_size(NamedSet name, int n) {
  const u64 un = static_cast<u64>(n);
  const i64 ni = n;
  switch (name) {
  case NamedSet::DeltaC:
    return static_cast<int>(g_bound(un));
  case NamedSet::Delta1:
    return static_cast<int>(un / 3 + distinct_prime_count(un) +
                            phi_interval(Rational(ni, 3), Rational(ni, 2), un));
  case NamedSet::Delta2:
    return static_cast<int>(un / 4 + distinct_prime_count(un) +
                            phi_interval(Rational(ni, 4), Rational(ni, 2), un) + 1);
  case NamedSet::DeltaE:
    return static_cast<int>(delta_E_size(un));
  case NamedSet::Prime:
    return n == 3 ? 2 : (n - 1) / 2;
  case NamedSet::PrimePower:
    return n / 4 + 1;
  case NamedSet::TwoP:
    return (n / 2 + 1) / 2;
  }
  return 0;
}

std::vector<BasicSet> s8_listed_sets() {
  return {
      BasicSet(8, {Intransitive{2}, Alternating{}, Imprimitive{4, 2}}, true, true),
      BasicSet(8, {Intransitive{1}, Intransitive{3}, Imprimitive{4, 2}}, true, true),
      BasicSet(8, {Intransitive{1}, Alternating{}, Imprimitive{2, 4}}, true, true),
  };
}

} // namespace normcov
