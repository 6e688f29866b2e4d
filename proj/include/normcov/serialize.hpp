#ifndef NORMCOV_SERIALIZE_HPP
#define NORMCOV_SERIALIZE_HPP

// Versioned JSON forms of every value the toolkit reads or writes.

#include <json.hpp>

#include "normcov/basic_set.hpp"
#include "normcov/bounds.hpp"
#include "normcov/component.hpp"
#include "normcov/metacyclic.hpp"
#include "normcov/report.hpp"
#include "normcov/search.hpp"

namespace normcov {

using Json = nlohmann::ordered_json;

inline constexpr const char *kToolkitVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// [[part, multiplicity], ...] in ascending part order.
Json to_json(const Partition &p);
Partition partition_from_json(const Json &j);

Json to_json(const Component &c);
Component component_from_json(const Json &j);
Json to_json(const std::vector<Component> &cs);
std::vector<Component> components_from_json(const Json &j);

Json to_json(const Cut &c);
Json to_json(const MetacyclicShape &s);
Json to_json(const CoverageVerdict &v);

Json to_json(const ExclusionTrace &t);
ExclusionTrace exclusion_trace_from_json(const Json &j);

Json to_json(const SearchConstraints &c);
SearchConstraints constraints_from_json(const Json &j);

Json to_json(const CoverCertificate &c);
CoverCertificate certificate_from_json(const Json &j);

Json to_json(const BasicVerdict &v);
Json to_json(const SpecialVerdict &v);
Json to_json(const BoundReport &r);
Json to_json(const GHRow &r);
Json to_json(const DeltaERelation &r);

} // namespace normcov

#endif
