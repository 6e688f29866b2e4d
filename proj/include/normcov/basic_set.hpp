#ifndef NORMCOV_BASIC_SET_HPP
#define NORMCOV_BASIC_SET_HPP

#include <string>
#include <vector>

#include "normcov/component.hpp"

namespace normcov {

/// A finite set of components of S_n, candidate generator of a normal covering.
class BasicSet {
public:
  BasicSet(int n, std::vector<Component> components, bool claimed_basic = false,
           bool claimed_special = false);

  int degree() const { return n_; }
  const std::vector<Component> &components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool claimed_basic() const { return claimed_basic_; }
  bool claimed_special() const { return claimed_special_; }
  bool contains(const Component &c) const;
  // {A_n} alone: its conjugates intersect in A_n rather than the identity.
  bool is_alternating_only() const;

  std::string to_string() const;

private:
  int n_;
  std::vector<Component> components_;
  bool claimed_basic_;
  bool claimed_special_;
};

struct BasicVerdict {
  bool basic = false;
  bool nontrivial_intersection_ok = true;
  std::vector<Partition> uncovered;
  std::size_t types_checked = 0;
};

/// Every partition of n must lie in some component. Fact components
/// contribute nothing since their membership is not decidable.
BasicVerdict verify_basic_set(const BasicSet &delta);

enum class NamedSet { DeltaC, Delta1, Delta2, DeltaE, Prime, PrimePower, TwoP };

std::string to_string(NamedSet name);
NamedSet parse_named_set(const std::string &text);
std::vector<NamedSet> all_named_sets();

/// Literal component lists of the named constructions. Throws domain_error
/// naming the hypothesis when the construction does not apply at n.
BasicSet build_named_set(NamedSet name, int n);

/// Size predicted for the named set from its closed formula.
int named_set_formula_size(NamedSet name, int n);

/// The three size-3 sets of S_8 discussed alongside the even-degree family,
/// in the order (deltaE, deltaC, alternating variant) as they are listed there.
std::vector<BasicSet> s8_listed_sets();

} // namespace normcov

#endif
