#include "normcov/component.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

u64 sporadic_order(SporadicFact::Kind kind) {
  switch (kind) {
  case SporadicFact::Kind::PSL2_11:
    return 660;
  case SporadicFact::Kind::M11:
    return 7920;
  case SporadicFact::Kind::M23:
    return 10200960;
  }
  return 0;
}

int sporadic_degree(SporadicFact::Kind kind) {
  return kind == SporadicFact::Kind::M23 ? 23 : 11;
}

std::optional<u64> projective_degree(int d, u64 q) {
  // 1 + q + ... + q^{d-1}
  u64 sum = 0, term = 1;
  for (int i = 0; i < d; ++i) {
    if (__builtin_add_overflow(sum, term, &sum))
      return std::nullopt;
    if (i + 1 < d && __builtin_mul_overflow(term, q, &term))
      return std::nullopt;
  }
  return sum;
}

unsigned field_degree(u64 q) {
  auto pp = as_prime_power(q);
  return pp ? pp->exponent : 1;
}

// n!/2, nullopt past 64 bits.
std::optional<u64> half_factorial(int n) {
  u64 f = 1;
  for (int i = 3; i <= n; ++i)
    if (__builtin_mul_overflow(f, static_cast<u64>(i), &f))
      return std::nullopt;
  return f;
}

} // namespace

bool is_fact(const Component &c) {
  return std::holds_alternative<ProjectiveFact>(c) || std::holds_alternative<SporadicFact>(c);
}

void validate_component(const Component &c, int n) {
  auto fail = [&](const std::string &why) {
    throw domain_error("component " + to_token(c) + " invalid for degree " + std::to_string(n) + ": " + why);
  };
  std::visit(overloaded{
                 [&](const Intransitive &h) {
                   if (h.x < 1 || 2 * h.x > n)
                     fail("x must satisfy 1 <= x <= n/2");
                 },
                 [&](const Imprimitive &h) {
                   if (h.b < 2 || h.m < 2)
                     fail("block size and block count must be at least 2");
                   if (h.b * h.m != n)
                     fail("b*m must equal n");
                 },
                 [&](const Alternating &) {
                   if (n < 2)
                     fail("degree too small");
                 },
                 [&](const Affine &h) {
                   if (h.p != n || !is_prime(static_cast<u64>(h.p)))
                     fail("affine components need n = p prime");
                   if (h.p < 5)
                     fail("AGL_1(p) is the whole group for p < 5");
                 },
                 [&](const ProjectiveFact &h) {
                   if (h.d < 2 || !as_prime_power(h.q))
                     fail("need d >= 2 and q a prime power");
                   auto deg = projective_degree(h.d, h.q);
                   if (!deg || *deg != static_cast<u64>(n))
                     fail("(q^d-1)/(q-1) must equal n");
                   auto order = group_order(c);
                   auto half = half_factorial(n);
                   if (order && half && *order >= *half)
                     fail("family contains A_n");
                 },
                 [&](const SporadicFact &h) {
                   if (sporadic_degree(h.kind) != n)
                     fail("sporadic group of the wrong degree");
                 },
             },
             c);
}

std::string to_token(const Component &c) {
  return std::visit(
      overloaded{
          [](const Intransitive &h) { return "P" + std::to_string(h.x); },
          [](const Imprimitive &h) {
            return "S" + std::to_string(h.b) + "wrS" + std::to_string(h.m);
          },
          [](const Alternating &) { return std::string("A"); },
          [](const Affine &h) { return "AGL1(" + std::to_string(h.p) + ")"; },
          [](const ProjectiveFact &h) {
            return std::string(h.extension ? "PGammaL" : "PGL") + std::to_string(h.d) + "(" +
                   std::to_string(h.q) + ")";
          },
          [](const SporadicFact &h) {
            switch (h.kind) {
            case SporadicFact::Kind::PSL2_11:
              return std::string("PSL2(11)");
            case SporadicFact::Kind::M11:
              return std::string("M11");
            case SporadicFact::Kind::M23:
              return std::string("M23");
            }
            return std::string();
          },
      },
      c);
}

Component parse_component(const std::string &token) {
  std::string s;
  for (char ch : token)
    if (ch != '_' && ch != ' ')
      s += ch;
  static const std::regex intrans(R"(P(\d+))");
  static const std::regex wreath(R"(S(\d+)wrS(\d+))");
  static const std::regex alt(R"(A(n|\d+)?)");
  static const std::regex affine(R"(AGL1?\((\d+)\))");
  static const std::regex proj(R"((PGL|PGammaL)(\d+)\((\d+)\))");
  std::smatch mt;
  try {
    if (std::regex_match(s, mt, intrans))
      return Intransitive{std::stoi(mt[1])};
    if (std::regex_match(s, mt, wreath))
      return Imprimitive{std::stoi(mt[1]), std::stoi(mt[2])};
    if (std::regex_match(s, mt, alt))
      return Alternating{};
    if (std::regex_match(s, mt, affine))
      return Affine{std::stoi(mt[1])};
    if (std::regex_match(s, mt, proj))
      return ProjectiveFact{std::stoi(mt[2]), std::stoull(mt[3]), mt[1] == "PGammaL"};
  } catch (const std::out_of_range &) {
    throw parse_error("component parameter out of range: " + token);
  }
  if (s == "PSL2(11)")
    return SporadicFact{SporadicFact::Kind::PSL2_11};
  if (s == "M11")
    return SporadicFact{SporadicFact::Kind::M11};
  if (s == "M23")
    return SporadicFact{SporadicFact::Kind::M23};
  throw parse_error("unrecognized component: " + token);
}

std::string describe(const Component &c, int n) {
  return std::visit(
      overloaded{
          [](const Intransitive &h) { return "P_" + std::to_string(h.x); },
          [](const Imprimitive &h) {
            return "S_" + std::to_string(h.b) + " wr S_" + std::to_string(h.m);
          },
          [n](const Alternating &) { return "A_" + std::to_string(n); },
          [](const Affine &h) { return "AGL_1(" + std::to_string(h.p) + ")"; },
          [](const ProjectiveFact &h) {
            return std::string(h.extension ? "PGammaL_" : "PGL_") + std::to_string(h.d) + "(" +
                   std::to_string(h.q) + ")";
          },
          [](const SporadicFact &h) {
            switch (h.kind) {
            case SporadicFact::Kind::PSL2_11:
              return std::string("PSL_2(11)");
            case SporadicFact::Kind::M11:
              return std::string("M_11");
            case SporadicFact::Kind::M23:
              return std::string("M_23");
            }
            return std::string();
          },
      },
      c);
}

ComponentPool::ComponentPool(int n, std::vector<Component> members) : n_(n) {
  for (const auto &c : members)
    validate_component(c, n);
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw domain_error("duplicate component in pool");
  members_ = std::move(members);
}

bool ComponentPool::contains(const Component &c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

bool ComponentPool::has_facts() const {
  return std::any_of(members_.begin(), members_.end(), is_fact);
}

ComponentPool standard_pool(int n, const PoolOptions &options) {
  if (n < 3)
    throw domain_error("pools are defined for n >= 3");
  std::vector<Component> members;
  for (int x = 1; 2 * x < n; ++x)
    members.emplace_back(Intransitive{x});
  if (n % 2 == 0 && options.include_half_intransitive)
    members.emplace_back(Intransitive{n / 2});
  for (int b = 2; 2 * b <= n; ++b)
    if (n % b == 0)
      members.emplace_back(Imprimitive{b, n / b});
  members.emplace_back(Alternating{});
  if (options.include_affine && n >= 5 && is_prime(static_cast<u64>(n)))
    members.emplace_back(Affine{n});
  if (options.include_feit_facts)
    for (const auto &c : feit_candidates(n))
      if (is_fact(c))
        members.push_back(c);
  return ComponentPool(n, std::move(members));
}

namespace {

class BlockSolver {
public:
  BlockSolver(const Partition &t, int b) : b_(b), cnt_(static_cast<std::size_t>(t.degree()) + 1, 0) {
    for (const auto &[part, count] : t.pairs()) {
      cnt_[static_cast<std::size_t>(part)] = count;
      total_ += part * count;
    }
  }

  bool solve() {
    if (total_ == 0)
      return true;
    if (failed_.count(cnt_))
      return false;
    int largest = static_cast<int>(cnt_.size()) - 1;
    while (cnt_[static_cast<std::size_t>(largest)] == 0)
      --largest;
    take(largest);
    for (u64 du : divisors(static_cast<u64>(largest))) {
      const int d = static_cast<int>(du);
      if (largest / d > b_)
        continue;
      const int need = d * b_ - largest;
      if (need > total_)
        continue;
      groups_.push_back({{largest}, d});
      if (fill(need, d, largest))
        return true;
      groups_.pop_back();
    }
    put(largest);
    failed_.insert(cnt_);
    return false;
  }

  BlockAssignment result() const { return groups_; }

private:
  void take(int part) {
    --cnt_[static_cast<std::size_t>(part)];
    total_ -= part;
  }
  void put(int part) {
    ++cnt_[static_cast<std::size_t>(part)];
    total_ += part;
  }

  // Completes the open group with parts that are multiples of d, each at
  // most `cap`, in nonincreasing order.
  bool fill(int rem, int d, int cap) {
    if (rem == 0)
      return solve();
    for (int p = std::min(cap, rem) / d * d; p >= d; p -= d) {
      if (cnt_[static_cast<std::size_t>(p)] == 0)
        continue;
      take(p);
      groups_.back().parts.push_back(p);
      if (fill(rem - p, d, p))
        return true;
      groups_.back().parts.pop_back();
      put(p);
    }
    return false;
  }

  int b_;
  int total_ = 0;
  std::vector<int> cnt_;
  BlockAssignment groups_;
  std::set<std::vector<int>> failed_;
};

} // namespace

std::optional<BlockAssignment> block_assignment(const Partition &t, int b, int m) {
  if (b < 2 || m < 2 || b * m != t.degree())
    throw domain_error("block_assignment needs b, m >= 2 with b*m = n");
  const auto pairs = t.pairs();
  if (std::all_of(pairs.begin(), pairs.end(), [b](auto pr) { return pr.first % b == 0; })) {
    BlockAssignment direct;
    for (int part : t.parts())
      direct.push_back({{part}, part / b});
    return direct;
  }
  BlockSolver solver(t, b);
  if (!solver.solve())
    return std::nullopt;
  return solver.result();
}

bool contains_type(const Component &h, const Partition &t) {
  const int n = t.degree();
  validate_component(h, n);
  return std::visit(
      overloaded{
          [&](const Intransitive &c) { return subset_sums(t).contains(c.x); },
          [&](const Imprimitive &c) { return block_assignment(t, c.b, c.m).has_value(); },
          [&](const Alternating &) { return is_even_type(t); },
          [&](const Affine &c) {
            if (t == Partition::identity(n) || t == Partition::cycle(n))
              return true;
            // [1, d^{(p-1)/d}] for d | p-1, d > 1
            if (t.multiplicity(1) != 1)
              return false;
            const auto pairs = t.pairs();
            if (pairs.size() != 2)
              return false;
            const int d = pairs[1].first;
            return (c.p - 1) % d == 0;
          },
          [&](const ProjectiveFact &) -> bool {
            throw undecidable_error("membership in " + to_token(h) + " is undecidable by rules");
          },
          [&](const SporadicFact &) -> bool {
            throw undecidable_error("membership in " + to_token(h) + " is undecidable by rules");
          },
      },
      h);
}

std::string to_string(ExclusionRule rule) {
  switch (rule) {
  case ExclusionRule::JordanPower:
    return "JordanPower";
  case ExclusionRule::FeitClassification:
    return "FeitClassification";
  case ExclusionRule::NMinusOneCycle:
    return "NMinusOneCycle";
  case ExclusionRule::OrderDivisibility:
    return "OrderDivisibility";
  }
  return "";
}

ExclusionRule parse_exclusion_rule(const std::string &text) {
  for (auto r : {ExclusionRule::JordanPower, ExclusionRule::FeitClassification,
                 ExclusionRule::NMinusOneCycle, ExclusionRule::OrderDivisibility})
    if (to_string(r) == text)
      return r;
  throw parse_error("unknown exclusion rule: " + text);
}

namespace {

std::optional<int> single_cycle_length(const Partition &p) {
  const int n = p.degree();
  const auto pairs = p.pairs();
  if (pairs.size() != 2 || pairs[0].first != 1 || pairs[1].second != 1)
    return std::nullopt;
  const int m = pairs[1].first;
  if (m < 2 || m > n - 5)
    return std::nullopt;
  return m;
}

} // namespace

std::optional<ExclusionTrace> jordan_excluded(const Partition &t) {
  if (t.degree() < 7)
    return std::nullopt;
  for (u64 e : divisors(type_order(t))) {
    Partition power = type_power(t, e);
    if (auto m = single_cycle_length(power))
      return ExclusionTrace{t, ExclusionRule::JordanPower, std::nullopt,
                            JordanWitness{e, std::move(power), *m}};
  }
  return std::nullopt;
}

std::vector<Component> feit_candidates(int n) {
  if (n < 5)
    throw domain_error("feit_candidates requires n >= 5");
  std::vector<Component> out;
  for (u64 q = 2; q <= static_cast<u64>(n); ++q) {
    auto pp = as_prime_power(q);
    if (!pp)
      continue;
    for (int d = 2;; ++d) {
      auto deg = projective_degree(d, q);
      if (!deg || *deg > static_cast<u64>(n))
        break;
      if (*deg != static_cast<u64>(n))
        continue;
      Component fact = ProjectiveFact{d, q, pp->exponent > 1};
      auto order = group_order(fact);
      auto half = half_factorial(n);
      if (order && half && *order >= *half)
        continue; // the family already contains A_n
      out.push_back(fact);
    }
  }
  if (n == 11) {
    out.emplace_back(SporadicFact{SporadicFact::Kind::PSL2_11});
    out.emplace_back(SporadicFact{SporadicFact::Kind::M11});
  }
  if (n == 23)
    out.emplace_back(SporadicFact{SporadicFact::Kind::M23});
  if (is_prime(static_cast<u64>(n)))
    out.emplace_back(Affine{n});
  std::sort(out.begin(), out.end());
  return out;
}

bool nminus1_cycle_allowed(const ProjectiveFact &fact) {
  if (fact.d != 2)
    return false;
  if (is_prime(fact.q))
    return true;
  return fact.q == 4 && fact.extension;
}

std::optional<u64> group_order(const Component &fact) {
  if (const auto *s = std::get_if<SporadicFact>(&fact))
    return sporadic_order(s->kind);
  const auto *pf = std::get_if<ProjectiveFact>(&fact);
  if (!pf)
    throw domain_error("group_order is defined for fact components only");
  auto order = checked_pow(pf->q, static_cast<unsigned>(pf->d * (pf->d - 1) / 2));
  if (!order)
    return std::nullopt;
  u64 r = *order;
  for (int i = 2; i <= pf->d; ++i) {
    auto qi = checked_pow(pf->q, static_cast<unsigned>(i));
    if (!qi || __builtin_mul_overflow(r, *qi - 1, &r))
      return std::nullopt;
  }
  if (pf->extension && __builtin_mul_overflow(r, static_cast<u64>(field_degree(pf->q)), &r))
    return std::nullopt;
  return r;
}

u64 group_order_mod(const Component &fact, u64 modulus) {
  if (modulus == 0)
    throw domain_error("modulus must be positive");
  if (const auto *s = std::get_if<SporadicFact>(&fact))
    return sporadic_order(s->kind) % modulus;
  const auto *pf = std::get_if<ProjectiveFact>(&fact);
  if (!pf)
    throw domain_error("group_order is defined for fact components only");
  u64 r = powmod(pf->q, static_cast<u64>(pf->d * (pf->d - 1) / 2), modulus);
  for (int i = 2; i <= pf->d; ++i) {
    const u64 qi = powmod(pf->q, static_cast<u64>(i), modulus);
    r = mulmod(r, (qi + modulus - 1) % modulus, modulus);
  }
  if (pf->extension)
    r = mulmod(r, field_degree(pf->q) % modulus, modulus);
  return r;
}

bool order_divisibility_excludes(const Component &fact, const Partition &t) {
  validate_component(fact, t.degree());
  return group_order_mod(fact, type_order(t)) != 0;
}

std::optional<ExclusionTrace> rule_exclusion(const Component &fact, const Partition &t) {
  const int n = t.degree();
  validate_component(fact, n);
  if (auto trace = jordan_excluded(t)) {
    trace->component = fact;
    return trace;
  }
  if (const auto *pf = std::get_if<ProjectiveFact>(&fact)) {
    if (t == Partition::from_parts({1, n - 1}) && !nminus1_cycle_allowed(*pf))
      return ExclusionTrace{t, ExclusionRule::NMinusOneCycle, fact,
                            NMinusOneWitness{pf->d, pf->q, pf->extension}};
  }
  const u64 order = type_order(t);
  const u64 residue = group_order_mod(fact, order);
  if (residue != 0)
    return ExclusionTrace{t, ExclusionRule::OrderDivisibility, fact, OrderWitness{order, residue}};
  return std::nullopt;
}

bool recheck_trace(const ExclusionTrace &trace) {
  const Partition &t = trace.type;
  const int n = t.degree();
  try {
    if (trace.component)
      validate_component(*trace.component, n);
    switch (trace.rule) {
    case ExclusionRule::JordanPower: {
      const auto *w = std::get_if<JordanWitness>(&trace.witness);
      if (!w || w->exponent == 0)
        return false;
      if (!(type_power(t, w->exponent) == w->power))
        return false;
      auto m = single_cycle_length(w->power);
      return m && *m == w->cycle_length;
    }
    case ExclusionRule::FeitClassification: {
      const auto *w = std::get_if<FeitWitness>(&trace.witness);
      return w && t == Partition::cycle(n) && w->candidates == feit_candidates(n);
    }
    case ExclusionRule::NMinusOneCycle: {
      const auto *w = std::get_if<NMinusOneWitness>(&trace.witness);
      if (!w || !trace.component)
        return false;
      const auto *pf = std::get_if<ProjectiveFact>(&*trace.component);
      if (!pf || pf->d != w->d || pf->q != w->q || pf->extension != w->extension)
        return false;
      return t == Partition::from_parts({1, n - 1}) && !nminus1_cycle_allowed(*pf);
    }
    case ExclusionRule::OrderDivisibility: {
      const auto *w = std::get_if<OrderWitness>(&trace.witness);
      if (!w || !trace.component)
        return false;
      if (type_order(t) != w->element_order)
        return false;
      const u64 r = group_order_mod(*trace.component, w->element_order);
      return r != 0 && r == w->group_order_residue;
    }
    }
  } catch (const std::exception &) {
    return false;
  }
  return false;
}

} // namespace normcov
