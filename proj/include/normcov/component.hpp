#ifndef NORMCOV_COMPONENT_HPP
#define NORMCOV_COMPONENT_HPP

// Symbolic maximal-subgroup descriptors of S_n and the decision procedures
// "type T belongs to component H", plus the rule engine that excludes types
// from primitive fact-table entries.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "normcov/partition.hpp"

namespace normcov {

/// P_x: stabilizer of an x-subset, 1 <= x <= n/2.
struct Intransitive {
  int x;
  auto operator<=>(const Intransitive &) const = default;
};

/// S_b wr S_m: stabilizer of a system of m blocks of size b.
struct Imprimitive {
  int b;
  int m;
  auto operator<=>(const Imprimitive &) const = default;
};

/// A_n.
struct Alternating {
  auto operator<=>(const Alternating &) const = default;
};

/// AGL_1(p) on p points.
struct Affine {
  int p;
  auto operator<=>(const Affine &) const = default;
};

/// The family PGL_d(q) <= H <= PGammaL_d(q) acting on (q^d-1)/(q-1) points.
/// `extension` selects PGammaL_d(q) as the top of the family; it is only
/// meaningful when q is a proper prime power.
struct ProjectiveFact {
  int d;
  u64 q;
  bool extension;
  auto operator<=>(const ProjectiveFact &) const = default;
};

/// Doubly transitive groups with a full cycle outside the projective series.
struct SporadicFact {
  enum class Kind { PSL2_11, M11, M23 };
  Kind kind;
  auto operator<=>(const SporadicFact &) const = default;
};

using Component =
    std::variant<Intransitive, Imprimitive, Alternating, Affine, ProjectiveFact, SporadicFact>;

bool is_fact(const Component &c);

/// Throws domain_error unless c is a valid proper component of S_n.
void validate_component(const Component &c, int n);

/// Compact token, parseable by parse_component: P2, S2wrS5, A, AGL1(5),
/// PGL2(13), PGammaL2(9), PSL2(11), M11, M23.
std::string to_token(const Component &c);
Component parse_component(const std::string &token);

/// Human-readable name at degree n: P_2, S_2 wr S_5, A_10, AGL_1(5), ...
std::string describe(const Component &c, int n);

/// Sorted, duplicate-free set of components valid for one degree.
class ComponentPool {
public:
  ComponentPool(int n, std::vector<Component> members);

  int degree() const { return n_; }
  const std::vector<Component> &members() const { return members_; }
  bool contains(const Component &c) const;
  std::size_t size() const { return members_.size(); }
  bool has_facts() const;

private:
  int n_;
  std::vector<Component> members_;
};

struct PoolOptions {
  bool include_half_intransitive = false; // P_{n/2}, not maximal
  bool include_affine = true;             // AGL_1(p) when n = p is prime
  bool include_feit_facts = false;
};

/// P_x (x < n/2), every S_b wr S_m, A_n, and optionally the extras above.
ComponentPool standard_pool(int n, const PoolOptions &options = {});

/// One group of cycles permuted together by sigma on a cycle of `divisor` blocks.
struct BlockGroup {
  std::vector<int> parts;
  int divisor;
};

using BlockAssignment = std::vector<BlockGroup>;

/// Groups the parts of t so that every group G with divisor d has d dividing
/// each part of G, sum(G)/d = b, and the divisors total m. Such a grouping
/// exists iff a permutation of type t preserves some (b, m) block system.
std::optional<BlockAssignment> block_assignment(const Partition &t, int b, int m);

/// Exact membership for Intransitive, Imprimitive, Alternating and Affine.
/// Fact components throw undecidable_error.
bool contains_type(const Component &h, const Partition &t);

enum class ExclusionRule { JordanPower, FeitClassification, NMinusOneCycle, OrderDivisibility };

std::string to_string(ExclusionRule rule);
ExclusionRule parse_exclusion_rule(const std::string &text);

struct JordanWitness {
  u64 exponent;
  Partition power; // [1^{n-m}, m]
  int cycle_length; // m
};

struct FeitWitness {
  std::vector<Component> candidates;
};

struct NMinusOneWitness {
  int d;
  u64 q;
  bool extension;
};

struct OrderWitness {
  u64 element_order;
  u64 group_order_residue; // |G| mod element_order, nonzero
};

/// Record of why a type cannot lie in a (primitive) component.
struct ExclusionTrace {
  Partition type;
  ExclusionRule rule;
  std::optional<Component> component; // absent for rules about all primitive groups
  std::variant<JordanWitness, FeitWitness, NMinusOneWitness, OrderWitness> witness;
};

/// Exponent e with t^e of type [1^{n-m}, m], 2 <= m <= n-5, so that only
/// A_n among primitive proper subgroups can contain t. Smallest such e.
std::optional<ExclusionTrace> jordan_excluded(const Partition &t);

/// Primitive groups of degree n containing an n-cycle, other than A_n, S_n.
std::vector<Component> feit_candidates(int n);

/// Whether some group in the fact's family contains an (n-1)-cycle.
bool nminus1_cycle_allowed(const ProjectiveFact &fact);

/// |PGL_d(q)|, times the field degree for the PGammaL variant; nullopt on overflow.
std::optional<u64> group_order(const Component &fact);
u64 group_order_mod(const Component &fact, u64 modulus);

/// True iff the element order of t does not divide the order of the fact group.
bool order_divisibility_excludes(const Component &fact, const Partition &t);

/// First rule (Jordan, (n-1)-cycle, order) that excludes t from the fact
/// component, or nullopt when the rules are silent.
std::optional<ExclusionTrace> rule_exclusion(const Component &fact, const Partition &t);

/// Independent re-check of a trace's witness.
bool recheck_trace(const ExclusionTrace &trace);

} // namespace normcov

#endif
