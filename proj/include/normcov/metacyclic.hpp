#ifndef NORMCOV_METACYCLIC_HPP
#define NORMCOV_METACYCLIC_HPP

// Special metacyclic subgroups M = <sigma> x <tau> of S_n, tau = (i j) a
// transposition and sigma of even order fixing i and j.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "normcov/basic_set.hpp"
#include "normcov/component.hpp"
#include "normcov/partition.hpp"
#include "normcov/permutation.hpp"

namespace normcov {

/// Cycle data of sigma: the distinguished pair [1^2] plus the parts x_1..x_k
/// of the remaining n-2 letters.
class MetacyclicShape {
public:
  // rest partitions n-2 and must contain an even part.
  MetacyclicShape(int n, Partition rest);
  static MetacyclicShape from_parts(int n, const std::vector<int> &parts);

  int degree() const { return n_; }
  const Partition &rest() const { return rest_; }
  // [1^2, x_1, ..., x_k] as a partition of n.
  Partition sigma_type() const;
  // Even parts (descending) followed by odd parts (descending).
  std::vector<int> canonical_parts() const;
  // Number of even parts.
  int split() const;
  bool all_parts_even() const { return split() == rest_.part_count(); }

  std::string to_string() const;
  bool operator==(const MetacyclicShape &) const = default;

private:
  int n_;
  Partition rest_;
};

/// One shape per partition of n-2 with an even part, in enumeration order;
/// empty for n <= 3.
std::vector<MetacyclicShape> enumerate_shapes(int n);

enum class CoverageStatus { Covered, NotEstablished, Impossible };

std::string to_string(CoverageStatus status);

struct WreathWitness {
  int b;
  int m;
};

struct CoverageVerdict {
  CoverageStatus status;
  std::string rule;
  std::variant<std::monostate, Cut, WreathWitness> witness;
};

/// Exact: M lies in a conjugate of P_x iff a c-cut of sigma's type with
/// min(c, n-c) = x keeps the distinguished pair on one side.
CoverageVerdict covered_by_intransitive(const MetacyclicShape &s, int x);

/// Sufficient conditions only; "not-established" when they are silent.
CoverageVerdict covered_by_wreath(const MetacyclicShape &s, int b, int m);

/// Always impossible: tau is odd.
CoverageVerdict covered_by_alternating(const MetacyclicShape &s);

/// Rule dispatch for any component kind. Never consults the oracle.
CoverageVerdict covered_by_component(const MetacyclicShape &s, const Component &h);

inline constexpr int kOracleMaxDegree = 12;

/// Ground truth by enumeration, sigma on letters 3..n and tau = (1 2).
/// Throws resource_error past kOracleMaxDegree.
bool oracle_contained(const MetacyclicShape &s, const Component &h);

/// Same enumeration for arbitrary explicit generators (letters 0-based).
bool oracle_group_contained(std::span<const Perm> gens, const Component &h);

struct SpecialVerdict {
  bool basic = false;
  bool special = false;
  std::vector<Partition> uncovered_types;
  std::vector<MetacyclicShape> uncovered_shapes;
  // Shapes the rules could not settle and the oracle was not allowed or able to.
  std::vector<MetacyclicShape> unresolved_shapes;
  std::size_t shapes_checked = 0;
  std::size_t oracle_calls = 0;
};

struct SpecialOptions {
  bool allow_oracle = true;
};

SpecialVerdict is_special_basic_set(const BasicSet &delta, const SpecialOptions &options = {});

/// The component the even-degree upper-bound argument assigns to one shape.
struct ReplayStep {
  MetacyclicShape shape;
  Component component;
  CoverageVerdict verdict;
};

struct ConstructionReplay {
  NamedSet construction; // PrimePower, TwoP or DeltaC
  BasicSet set;
  std::vector<ReplayStep> steps;
  // Shapes whose designated component is missing from the set or not covered by the rules.
  std::vector<MetacyclicShape> failures;
  bool ok() const { return failures.empty(); }
};

/// For even n >= 4: picks the construction matching the factorization of n
/// and, case by case, the component that absorbs each shape; every
/// designated component must be in the set and cover the shape by the
/// sufficient rules alone.
ConstructionReplay replay_even_construction(int n);

} // namespace normcov

#endif
