#include "normcov/serialize.hpp"

#include "normcov/errors.hpp"

namespace normcov {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

Json parts_json(const std::vector<int> &parts) {
  Json a = Json::array();
  for (int x : parts)
    a.push_back(x);
  return a;
}

} // namespace

Json to_json(const Partition &p) {
  Json a = Json::array();
  for (const auto &[part, count] : p.pairs())
    a.push_back(Json::array({part, count}));
  return a;
}

Partition partition_from_json(const Json &j) {
  if (!j.is_array())
    throw parse_error("partition must be an array of [part, multiplicity] pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const Json &e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw parse_error("partition entries must be [part, multiplicity] pairs");
    const int part = e[0].get<int>(), count = e[1].get<int>();
    if (part < 1 || count < 1 || (!pairs.empty() && part <= pairs.back().first))
      throw parse_error("partition pairs must have ascending parts and positive multiplicities");
    pairs.emplace_back(part, count);
  }
  if (pairs.empty())
    throw parse_error("empty partition");
  return Partition::from_pairs(pairs);
}

Json to_json(const Component &c) {
  return std::visit(
      overloaded{
          [](const Intransitive &v) { return Json{{"kind", "intransitive"}, {"x", v.x}}; },
          [](const Imprimitive &v) {
            return Json{{"kind", "imprimitive"}, {"b", v.b}, {"m", v.m}};
          },
          [](const Alternating &) { return Json{{"kind", "alternating"}}; },
          [](const Affine &v) { return Json{{"kind", "affine"}, {"p", v.p}}; },
          [](const ProjectiveFact &v) {
            return Json{{"kind", "projective"}, {"d", v.d}, {"q", v.q}, {"ext", v.extension}};
          },
          [&](const SporadicFact &) { return Json{{"kind", "sporadic"}, {"name", to_token(c)}}; },
      },
      c);
}

Component component_from_json(const Json &j) {
  if (j.is_string())
    return parse_component(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("component must be an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "intransitive")
    return Intransitive{j.at("x").get<int>()};
  if (kind == "imprimitive")
    return Imprimitive{j.at("b").get<int>(), j.at("m").get<int>()};
  if (kind == "alternating")
    return Alternating{};
  if (kind == "affine")
    return Affine{j.at("p").get<int>()};
  if (kind == "projective")
    return ProjectiveFact{j.at("d").get<int>(), j.at("q").get<u64>(),
                          j.value("ext", false)};
  if (kind == "sporadic") {
    const Component c = parse_component(j.at("name").get<std::string>());
    if (!std::holds_alternative<SporadicFact>(c))
      throw parse_error("unknown sporadic component");
    return c;
  }
  throw parse_error("unknown component kind '" + kind + "'");
}

Json to_json(const std::vector<Component> &cs) {
  Json a = Json::array();
  for (const Component &c : cs)
    a.push_back(to_json(c));
  return a;
}

std::vector<Component> components_from_json(const Json &j) {
  if (!j.is_array())
    throw parse_error("component list must be an array");
  std::vector<Component> out;
  for (const Json &e : j)
    out.push_back(component_from_json(e));
  return out;
}

Json to_json(const Cut &c) {
  return Json{{"size", c.size()},
              {"whole", to_json(c.whole)},
              {"left", to_json(c.left)},
              {"right", to_json(c.right)}};
}

Json to_json(const MetacyclicShape &s) {
  return Json{{"n", s.degree()}, {"pair", Json::array({1, 2})},
              {"parts", parts_json(s.canonical_parts())}};
}

Json to_json(const CoverageVerdict &v) {
  Json w = std::visit(overloaded{
                          [](const std::monostate &) { return Json(nullptr); },
                          [](const Cut &c) { return Json{{"cut", to_json(c)}}; },
                          [](const WreathWitness &ww) { return Json{{"b", ww.b}, {"m", ww.m}}; },
                      },
                      v.witness);
  return Json{{"status", to_string(v.status)}, {"rule", v.rule}, {"witness", w}};
}

Json to_json(const ExclusionTrace &t) {
  Json j{{"type", to_json(t.type)}, {"rule", to_string(t.rule)}};
  j["component"] = t.component ? to_json(*t.component) : Json(nullptr);
  j["witness"] = std::visit(
      overloaded{
          [](const JordanWitness &w) {
            return Json{{"exponent", w.exponent},
                        {"power", to_json(w.power)},
                        {"cycle_length", w.cycle_length}};
          },
          [](const FeitWitness &w) { return Json{{"candidates", to_json(w.candidates)}}; },
          [](const NMinusOneWitness &w) {
            return Json{{"d", w.d}, {"q", w.q}, {"ext", w.extension}};
          },
          [](const OrderWitness &w) {
            return Json{{"element_order", w.element_order},
                        {"group_order_residue", w.group_order_residue}};
          },
      },
      t.witness);
  return j;
}

ExclusionTrace exclusion_trace_from_json(const Json &j) {
  ExclusionTrace t{partition_from_json(j.at("type")),
                   parse_exclusion_rule(j.at("rule").get<std::string>()),
                   std::nullopt,
                   OrderWitness{0, 0}};
  if (j.contains("component") && !j.at("component").is_null())
    t.component = component_from_json(j.at("component"));
  const Json &w = j.at("witness");
  switch (t.rule) {
  case ExclusionRule::JordanPower:
    t.witness = JordanWitness{w.at("exponent").get<u64>(), partition_from_json(w.at("power")),
                              w.at("cycle_length").get<int>()};
    break;
  case ExclusionRule::FeitClassification:
    t.witness = FeitWitness{components_from_json(w.at("candidates"))};
    break;
  case ExclusionRule::NMinusOneCycle:
    t.witness = NMinusOneWitness{w.at("d").get<int>(), w.at("q").get<u64>(),
                                 w.at("ext").get<bool>()};
    break;
  case ExclusionRule::OrderDivisibility:
    t.witness = OrderWitness{w.at("element_order").get<u64>(),
                             w.at("group_order_residue").get<u64>()};
    break;
  }
  return t;
}

Json to_json(const SearchConstraints &c) {
  return Json{{"force_in", to_json(c.force_in)},
              {"force_out", to_json(c.force_out)},
              {"max_size", c.max_size ? Json(*c.max_size) : Json(nullptr)}};
}

SearchConstraints constraints_from_json(const Json &j) {
  SearchConstraints c;
  c.force_in = components_from_json(j.at("force_in"));
  c.force_out = components_from_json(j.at("force_out"));
  if (j.contains("max_size") && !j.at("max_size").is_null())
    c.max_size = j.at("max_size").get<int>();
  return c;
}

namespace {

Json to_json(const LevelRecord &l) {
  Json j{{"size", l.size}, {"outcome", to_string(l.outcome)}, {"nodes", l.nodes}};
  if (!l.witness.empty())
    j["witness"] = to_json(l.witness);
  return j;
}

LevelRecord level_from_json(const Json &j) {
  LevelRecord l{j.at("size").get<int>(), parse_level_outcome(j.at("outcome").get<std::string>()),
                j.at("nodes").get<u64>(), {}};
  if (j.contains("witness"))
    l.witness = components_from_json(j.at("witness"));
  return l;
}

Json levels_json(const std::vector<LevelRecord> &levels) {
  Json a = Json::array();
  for (const LevelRecord &l : levels)
    a.push_back(to_json(l));
  return a;
}

std::vector<LevelRecord> levels_from_json(const Json &j) {
  std::vector<LevelRecord> out;
  for (const Json &e : j)
    out.push_back(level_from_json(e));
  return out;
}

} // namespace

Json to_json(const CoverCertificate &c) {
  Json j{{"schema", "normcov.certificate"},
         {"version", kSchemaVersion},
         {"toolkit", kToolkitVersion},
         {"kind", c.kind},
         {"n", c.n},
         {"pool", to_json(c.pool)},
         {"constraints", to_json(c.constraints)},
         {"size_cap", c.size_cap},
         {"feasible", c.feasible},
         {"size", c.feasible ? Json(c.size()) : Json(nullptr)},
         {"optimal", c.optimal()},
         {"chosen", to_json(c.chosen)}};
  Json assignment = Json::array();
  for (const auto &[t, idx] : c.assignment)
    assignment.push_back(Json{{"type", to_json(t)}, {"component", idx}});
  j["assignment"] = std::move(assignment);
  j["levels"] = levels_json(c.levels);
  Json claims = Json::array();
  for (const Claim &cl : c.claims)
    claims.push_back(Json{{"id", cl.id},
                          {"statement", cl.statement},
                          {"certified", cl.certified},
                          {"constraints", to_json(cl.constraints)},
                          {"levels", levels_json(cl.levels)}});
  j["claims"] = std::move(claims);
  Json ex = Json::array();
  for (const ExclusionTrace &t : c.exclusions)
    ex.push_back(to_json(t));
  j["exclusions"] = std::move(ex);
  j["unresolved"] = c.unresolved;
  return j;
}

CoverCertificate certificate_from_json(const Json &j) {
  try {
    if (j.value("schema", "") != "normcov.certificate")
      throw parse_error("not a certificate document");
    if (j.at("version").get<int>() != kSchemaVersion)
      throw parse_error("unsupported certificate schema version " +
                        std::to_string(j.at("version").get<int>()));
    CoverCertificate c;
    c.kind = j.at("kind").get<std::string>();
    c.n = j.at("n").get<int>();
    c.pool = components_from_json(j.at("pool"));
    c.constraints = constraints_from_json(j.at("constraints"));
    c.size_cap = j.at("size_cap").get<int>();
    c.feasible = j.at("feasible").get<bool>();
    c.chosen = components_from_json(j.at("chosen"));
    for (const Json &e : j.at("assignment"))
      c.assignment.emplace_back(partition_from_json(e.at("type")),
                                e.at("component").get<std::size_t>());
    c.levels = levels_from_json(j.at("levels"));
    for (const Json &e : j.at("claims"))
      c.claims.push_back(Claim{e.at("id").get<std::string>(), e.at("statement").get<std::string>(),
                               e.at("certified").get<bool>(),
                               constraints_from_json(e.at("constraints")),
                               levels_from_json(e.at("levels"))});
    for (const Json &e : j.at("exclusions"))
      c.exclusions.push_back(exclusion_trace_from_json(e));
    c.unresolved = j.at("unresolved").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("malformed certificate: ") + e.what());
  } catch (const domain_error &e) {
    throw parse_error(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const BasicVerdict &v) {
  Json un = Json::array();
  for (const Partition &t : v.uncovered)
    un.push_back(to_json(t));
  return Json{{"basic", v.basic},
              {"nontrivial_intersection_ok", v.nontrivial_intersection_ok},
              {"types_checked", v.types_checked},
              {"uncovered", std::move(un)}};
}

Json to_json(const SpecialVerdict &v) {
  Json types = Json::array(), shapes = Json::array(), open = Json::array();
  for (const Partition &t : v.uncovered_types)
    types.push_back(to_json(t));
  for (const MetacyclicShape &s : v.uncovered_shapes)
    shapes.push_back(to_json(s));
  for (const MetacyclicShape &s : v.unresolved_shapes)
    open.push_back(to_json(s));
  return Json{{"basic", v.basic},
              {"special", v.special},
              {"shapes_checked", v.shapes_checked},
              {"oracle_calls", v.oracle_calls},
              {"uncovered_types", std::move(types)},
              {"uncovered_shapes", std::move(shapes)},
              {"unresolved_shapes", std::move(open)}};
}

Json to_json(const BoundReport &r) {
  auto opt = [](const auto &o) { return o ? Json(*o) : Json(nullptr); };
  return Json{{"schema", "normcov.report"},
              {"version", kSchemaVersion},
              {"toolkit", kToolkitVersion},
              {"n", r.n},
              {"g", opt(r.g)},
              {"h", opt(r.h)},
              {"deltaE_size", opt(r.delta_e)},
              {"gamma", opt(r.gamma)},
              {"gamma_source", r.gamma_source},
              {"pool_relative", r.pool_relative},
              {"gamma_prime_upper", r.gamma_prime_upper},
              {"r_interval", Json::array({r.r_lo, r.r_hi})},
              {"r_reason", r.r_reason},
              {"linear",
               {{"upper", r.linear.upper},
                {"known_k", r.linear.known_k},
                {"known_k_from", r.linear.known_k_from},
                {"known_k_even_only", r.linear.known_k_even_only},
                {"note", r.linear.note}}}};
}

Json to_json(const GHRow &r) {
  return Json{{"n", r.n}, {"g", r.g}, {"h", r.h}, {"sign", r.sign}};
}

Json to_json(const DeltaERelation &r) {
  return Json{{"n", r.n},
              {"g", r.g},
              {"deltaE_size", r.delta_e},
              {"equal", r.equal},
              {"class", to_string(r.degree_class)},
              {"consistent", r.consistent}};
}

} // namespace normcov
