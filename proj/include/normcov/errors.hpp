#ifndef NORMCOV_ERRORS_HPP
#define NORMCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace normcov {

// Precondition or applicability violation on a mathematical input.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A resource cap (type count, node budget, oracle degree) would be exceeded.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Membership in a fact-table component cannot be decided by the rule set.
class undecidable_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (JSON, component tokens).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace normcov

#endif
