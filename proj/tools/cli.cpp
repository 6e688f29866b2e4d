#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "normcov/cache.hpp"
#include "normcov/errors.hpp"
#include "normcov/serialize.hpp"

namespace normcov::cli {

namespace {

struct Globals {
  std::string format = "human";
  std::string cache_dir;
  unsigned jobs = 1;
  bool force = false;
  u64 node_limit = SearchOptions{}.node_limit;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// JSON array, a file holding one, or comma-separated tokens.
std::vector<Component> parse_component_list(const std::string &text) {
  if (text.empty())
    return {};
  std::string body = text;
  if (body.front() != '[' && std::filesystem::is_regular_file(body))
    body = read_file(body);
  if (!body.empty() && body.front() == '[') {
    const Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded())
      throw parse_error("malformed JSON component list");
    return components_from_json(j);
  }
  std::vector<Component> out;
  for (const std::string &tok : split(body, ','))
    if (!tok.empty())
      out.push_back(parse_component(tok));
  return out;
}

ComponentPool parse_pool(const std::string &spec, int n) {
  if (spec.rfind("standard", 0) == 0) {
    PoolOptions po;
    const auto parts = split(spec, '+');
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i] == "facts")
        po.include_feit_facts = true;
      else if (parts[i] == "half")
        po.include_half_intransitive = true;
      else if (parts[i] == "noaffine")
        po.include_affine = false;
      else
        throw UsageError("unknown pool modifier '" + parts[i] + "'");
    }
    return standard_pool(n, po);
  }
  return ComponentPool(n, parse_component_list(spec));
}

std::string tokens(const std::vector<Component> &cs, const char *sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i)
      out += sep;
    out += to_token(cs[i]);
  }
  return out;
}

std::string describe_all(const std::vector<Component> &cs, int n) {
  std::string out = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i)
      out += ", ";
    out += describe(cs[i], n);
  }
  return out + "}";
}

std::string opt_text(const Json &j) { return j.is_null() ? "-" : j.dump(); }

void check_degree(int n) {
  if (n < 3)
    throw UsageError("degree must be at least 3");
}

SearchOptions search_options(const Globals &g) {
  SearchOptions o;
  o.jobs = std::max(1u, g.jobs);
  o.force = g.force;
  o.node_limit = g.node_limit;
  return o;
}

// Computes a JSON document, or takes it from the cache when one is configured.
Json cached(const Globals &g, const Json &key, const std::function<Json()> &compute) {
  if (g.cache_dir.empty())
    return compute();
  const ResultCache cache(g.cache_dir);
  if (auto hit = cache.load(key)) {
    Json j = Json::parse(*hit, nullptr, false);
    if (!j.is_discarded())
      return j;
  }
  Json j = compute();
  cache.store(key, j.dump());
  return j;
}

// ---- bounds ---------------------------------------------------------------

void render_bounds_header(const Globals &g, std::ostream &out) {
  if (g.format == "csv")
    out << "n,g,h,deltaE_size,gamma,gamma_source,gamma_prime_upper,r_lo,r_hi,r_reason\n";
}

void render_bounds_row(const Globals &g, const Json &r, std::ostream &out) {
  const auto &iv = r.at("r_interval");
  if (g.format == "json") {
    out << r.dump() << '\n';
  } else if (g.format == "csv") {
    auto c = [](const Json &j) { return j.is_null() ? std::string() : j.dump(); };
    out << r.at("n") << ',' << c(r.at("g")) << ',' << c(r.at("h")) << ','
        << c(r.at("deltaE_size")) << ',' << c(r.at("gamma")) << ','
        << r.at("gamma_source").get<std::string>() << ',' << r.at("gamma_prime_upper") << ','
        << iv[0] << ',' << iv[1] << ',' << r.at("r_reason").get<std::string>() << '\n';
  } else {
    out << "n=" << r.at("n") << "  g=" << opt_text(r.at("g")) << "  h=" << opt_text(r.at("h"))
        << "  |deltaE|=" << opt_text(r.at("deltaE_size"));
    if (r.at("gamma").is_null())
      out << "  gamma=?";
    else
      out << "  gamma=" << r.at("gamma") << " (" << r.at("gamma_source").get<std::string>()
          << ")";
    out << "  gamma'<=" << r.at("gamma_prime_upper");
    if (iv[0] == iv[1])
      out << "  r=" << iv[0];
    else
      out << "  r in [" << iv[0] << ',' << iv[1] << ']';
    out << "  (" << r.at("r_reason").get<std::string>() << ")\n";
  }
}

int cmd_bounds(const Globals &g, int from, int to, int search_max, std::ostream &out) {
  check_degree(from);
  if (to < from)
    throw UsageError("--to must not be smaller than --from");
  render_bounds_header(g, out);
  for (int n = from; n <= to; ++n) {
    const Json key{{"cmd", "bounds"}, {"n", n}, {"search_max", search_max},
                   {"node_limit", g.node_limit}};
    const Json r = cached(g, key, [&] {
      ReportOptions ro;
      ro.search_max_degree = search_max;
      ro.search = search_options(g);
      return to_json(interval_report(n, ro));
    });
    render_bounds_row(g, r, out);
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

BasicSet resolve_set(const std::string &spec, int n) {
  for (NamedSet name : all_named_sets())
    if (to_string(name) == spec)
      return build_named_set(name, n);
  return BasicSet(n, parse_component_list(spec));
}

int cmd_verify(const Globals &g, const std::string &spec, int n, bool basic_only, bool no_oracle,
               std::ostream &out) {
  check_degree(n);
  const BasicSet set = resolve_set(spec, n);
  Json doc{{"n", n}, {"set", to_json(set.components())}};
  bool ok;
  if (basic_only) {
    const BasicVerdict v = verify_basic_set(set);
    doc["basic"] = to_json(v);
    ok = v.basic;
  } else {
    SpecialOptions so;
    so.allow_oracle = !no_oracle;
    const SpecialVerdict v = is_special_basic_set(set, so);
    doc["basic"] = v.basic;
    doc["special"] = to_json(v);
    ok = v.basic && v.special;
  }

  if (g.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,set,basic,special,uncovered_types,uncovered_shapes,unresolved_shapes\n";
    const Json &s = basic_only ? doc["basic"] : doc["special"];
    out << n << ',' << tokens(set.components(), ";") << ','
        << (basic_only ? s.at("basic") : doc.at("basic")) << ','
        << (basic_only ? Json("") : s.at("special")).dump() << ','
        << (basic_only ? s.at("uncovered") : s.at("uncovered_types")).size() << ','
        << (basic_only ? 0 : s.at("uncovered_shapes").size()) << ','
        << (basic_only ? 0 : s.at("unresolved_shapes").size()) << '\n';
  } else {
    out << "set " << set.to_string() << " in S_" << n << '\n';
    if (set.is_alternating_only())
      out << "note: the conjugates of A_" << n << " intersect in A_" << n
          << ", not in the identity\n";
    std::vector<Partition> uncovered;
    if (basic_only) {
      const BasicVerdict v = verify_basic_set(set);
      uncovered = v.uncovered;
      out << "basic: " << (v.basic ? "yes" : "no") << " (" << v.types_checked << " types)\n";
    } else {
      SpecialOptions so;
      so.allow_oracle = !no_oracle;
      const SpecialVerdict v = is_special_basic_set(set, so);
      uncovered = v.uncovered_types;
      out << "basic: " << (v.basic ? "yes" : "no") << '\n';
      out << "special: " << (v.special ? "yes" : "no") << " (" << v.shapes_checked
          << " shapes, " << v.oracle_calls << " oracle calls)\n";
      for (const auto &s : v.uncovered_shapes)
        out << "uncovered shape " << s.to_string() << '\n';
      for (const auto &s : v.unresolved_shapes)
        out << "unresolved shape " << s.to_string() << '\n';
    }
    for (const auto &t : uncovered)
      out << "uncovered type " << t.to_string() << '\n';
  }
  return ok ? kOk : kPropertyFails;
}

// ---- search / certify / check ---------------------------------------------

int render_check(const Globals &g, const CoverCertificate &cert, std::ostream &out) {
  const CheckResult res = check_certificate(cert);
  if (g.format == "json") {
    out << Json{{"valid", res.ok}, {"n", cert.n}, {"problems", res.problems}}.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,valid,problems\n" << cert.n << ',' << (res.ok ? "true" : "false") << ','
        << res.problems.size() << '\n';
  } else if (res.ok) {
    out << "certificate valid: S_" << cert.n << ", "
        << (cert.feasible ? "cover of size " + std::to_string(cert.size())
                          : std::string("no cover within the cap"))
        << ", " << cert.assignment.size() << " assigned types, " << cert.exclusions.size()
        << " exclusion traces\n";
  } else {
    out << "certificate INVALID:\n";
    for (const auto &p : res.problems)
      out << "  " << p << '\n';
  }
  return res.ok ? kOk : kPropertyFails;
}

int cmd_check(const Globals &g, const std::string &path, std::ostream &out) {
  const Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded())
    throw parse_error("certificate file is not valid JSON");
  return render_check(g, certificate_from_json(j), out);
}

std::string constraint_text(const CoverCertificate &c) {
  std::string out;
  if (!c.constraints.force_in.empty())
    out += " with " + tokens(c.constraints.force_in) + " forced in";
  if (!c.constraints.force_out.empty())
    out += (out.empty() ? " with " : " and ") + tokens(c.constraints.force_out) + " forced out";
  return out;
}

void render_search(const Globals &g, const Json &j, std::ostream &out) {
  if (g.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  const CoverCertificate c = certificate_from_json(j);
  if (g.format == "csv") {
    out << "n,feasible,size,optimal,unresolved,size_cap,chosen\n"
        << c.n << ',' << (c.feasible ? "true" : "false") << ','
        << (c.feasible ? std::to_string(c.size()) : "") << ',' << (c.optimal() ? "true" : "false")
        << ',' << c.unresolved << ',' << c.size_cap << ',' << tokens(c.chosen, ";") << '\n';
    return;
  }
  out << "S_" << c.n;
  if (c.feasible)
    out << ": minimum cover size " << c.size() << constraint_text(c) << ' '
        << describe_all(c.chosen, c.n) << (c.optimal() ? " (optimal)" : " (not proven optimal)")
        << '\n';
  else
    out << ": no cover of size <= " << c.size_cap << constraint_text(c)
        << (c.unresolved ? " found by the rules; some levels unresolved" : " (infeasible)")
        << '\n';
  for (const LevelRecord &l : c.levels)
    out << "  size " << l.size << ": " << to_string(l.outcome)
        << (l.outcome == LevelOutcome::Refuted ? " after " + std::to_string(l.nodes) + " nodes"
                                               : std::string())
        << (l.witness.empty() ? std::string() : " via " + tokens(l.witness)) << '\n';
}

Json certificate_key(const std::string &cmd, const CoverCertificate &shape_of_request) {
  return Json{{"cmd", cmd},
              {"n", shape_of_request.n},
              {"pool", to_json(shape_of_request.pool)},
              {"constraints", to_json(shape_of_request.constraints)}};
}

int cmd_search(const Globals &g, int n, const std::string &pool_spec, const std::string &force_in,
               const std::string &force_out, int max_size, const std::string &out_path,
               std::ostream &out) {
  check_degree(n);
  const ComponentPool pool = parse_pool(pool_spec, n);
  SearchConstraints sc;
  sc.force_in = parse_component_list(force_in);
  sc.force_out = parse_component_list(force_out);
  if (max_size > 0)
    sc.max_size = max_size;
  else if (max_size < 0)
    throw UsageError("--max-size must be positive");
  CoverCertificate request;
  request.n = n;
  request.pool = pool.members();
  request.constraints = sc;
  Json key = certificate_key("search", request);
  key["node_limit"] = g.node_limit;
  const Json j = cached(g, key, [&] { return to_json(min_cover_search(pool, sc, search_options(g))); });
  if (!out_path.empty())
    write_file(out_path, j.dump(2) + "\n");
  render_search(g, j, out);
  return j.at("unresolved").get<std::size_t>() == 0 ? kOk : kPropertyFails;
}

int cmd_certify(const Globals &g, int n, const std::string &out_path, std::ostream &out) {
  const Json key{{"cmd", "certify"}, {"n", n}, {"node_limit", g.node_limit}};
  const Json j = cached(g, key, [&] { return to_json(certify_degree(n, search_options(g))); });
  if (!out_path.empty())
    write_file(out_path, j.dump(2) + "\n");
  const CoverCertificate c = certificate_from_json(j);
  bool all = c.unresolved == 0;
  for (const Claim &cl : c.claims)
    all = all && cl.certified;
  if (g.format == "json") {
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,gamma,claims_certified,unresolved\n"
        << n << ',' << (c.feasible ? std::to_string(c.size()) : "") << ','
        << (all ? "true" : "false") << ',' << c.unresolved << '\n';
  } else {
    if (all && c.feasible)
      out << "γ(S_" << n << ")=" << c.size() << "; no size-" << c.size()
          << " cover contains P_2\n";
    for (const Claim &cl : c.claims)
      out << "  " << (cl.certified ? "certified: " : "NOT certified: ") << cl.statement << '\n';
    out << "  unresolved steps: " << c.unresolved << '\n';
  }
  return all ? kOk : kPropertyFails;
}

// ---- shapes ---------------------------------------------------------------

int cmd_shapes(const Globals &g, int n, const std::string &spec, std::ostream &out) {
  check_degree(n);
  std::optional<BasicSet> set;
  if (!spec.empty())
    set = resolve_set(spec, n);
  const auto shapes = enumerate_shapes(n);
  Json rows = Json::array();
  bool all = true;
  for (const MetacyclicShape &s : shapes) {
    Json row{{"shape", to_json(s)}};
    if (set) {
      std::optional<Component> by;
      CoverageVerdict verdict{CoverageStatus::Impossible, "no-component", std::monostate{}};
      bool open = false;
      for (const Component &h : set->components()) {
        CoverageVerdict v = covered_by_component(s, h);
        if (v.status == CoverageStatus::Covered) {
          by = h;
          verdict = std::move(v);
          break;
        }
        open = open || v.status == CoverageStatus::NotEstablished;
      }
      std::string source = "rules";
      if (!by && open && n <= kOracleMaxDegree) {
        for (const Component &h : set->components())
          if (!is_fact(h) && !std::holds_alternative<Affine>(h) && oracle_contained(s, h)) {
            by = h;
            verdict = {CoverageStatus::Covered, "oracle", std::monostate{}};
            source = "oracle";
            break;
          }
      } else if (!by && open) {
        verdict = {CoverageStatus::NotEstablished, "sufficient-rules-silent", std::monostate{}};
      }
      all = all && by.has_value();
      row["component"] = by ? to_json(*by) : Json(nullptr);
      row["verdict"] = to_json(verdict);
      row["source"] = source;
    }
    rows.push_back(std::move(row));
  }

  if (g.format == "json") {
    out << Json{{"n", n}, {"count", shapes.size()}, {"shapes", rows}}.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,parts" << (set ? ",component,status,rule" : "") << '\n';
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      std::string parts;
      for (int x : shapes[i].canonical_parts())
        parts += (parts.empty() ? "" : " ") + std::to_string(x);
      out << n << ',' << parts;
      if (set) {
        const Json &r = rows[i];
        out << ',' << (r["component"].is_null() ? "" : to_token(component_from_json(r["component"])))
            << ',' << r["verdict"]["status"].get<std::string>() << ','
            << r["verdict"]["rule"].get<std::string>();
      }
      out << '\n';
    }
  } else {
    out << shapes.size() << " special metacyclic shapes in S_" << n << '\n';
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      out << shapes[i].to_string();
      if (set) {
        const Json &r = rows[i];
        if (r["component"].is_null())
          out << "  uncovered (" << r["verdict"]["rule"].get<std::string>() << ")";
        else
          out << "  covered by " << describe(component_from_json(r["component"]), n) << " ("
              << r["verdict"]["rule"].get<std::string>() << ')';
      }
      out << '\n';
    }
  }
  return all ? kOk : kPropertyFails;
}

// ---- compare-gh -------------------------------------------------------------

void render_gh(const Globals &g, const GHRow &r, std::ostream &out) {
  if (g.format == "json")
    out << to_json(r).dump() << '\n';
  else if (g.format == "csv")
    out << r.n << ',' << r.g << ',' << r.h << ',' << r.sign << '\n';
  else
    out << "n=" << r.n << "  g=" << r.g << "  h=" << r.h << "  "
        << (r.sign < 0 ? "g < h" : (r.sign > 0 ? "h < g" : "g = h")) << '\n';
}

int cmd_compare(const Globals &g, int from, int to, int product_from, std::ostream &out) {
  if (g.format == "csv")
    out << "n,g,h,sign\n";
  if (product_from > 0) {
    const PrimeProduct p = construct_h_below_g(static_cast<u64>(product_from));
    if (g.format == "human") {
      out << "product of " << p.primes.size() << " consecutive odd primes:";
      for (u64 q : p.primes)
        out << ' ' << q;
      out << '\n';
    }
    render_gh(g, p.row, out);
    return kOk;
  }
  if (from < 4 || to < from)
    throw UsageError("compare-gh needs 4 <= --from <= --to, or --product-from");
  for (const GHRow &r : compare_g_h(static_cast<u64>(from), static_cast<u64>(to)))
    render_gh(g, r, out);
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Normal-covering invariants of symmetric groups", "normcov"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Directory of cached results");
  app.add_option("--jobs", g.jobs, "Worker threads for the search")->check(CLI::Range(1u, 256u));
  app.add_flag("--force", g.force, "Search degrees beyond the type cap");
  app.add_option("--node-limit", g.node_limit, "Search node budget")->check(CLI::PositiveNumber);
  app.fallthrough();

  int from = 0, to = 0, n = 0, search_max = ReportOptions{}.search_max_degree;
  auto *bounds = app.add_subcommand("bounds", "g, h, |deltaE| and the r(S_n) bracket per degree");
  bounds->add_option("--from", from, "First degree");
  bounds->add_option("--to", to, "Last degree");
  bounds->add_option("-n", n, "Single degree");
  bounds->add_option("--search-max", search_max, "Largest degree searched exactly");

  std::string set_spec;
  bool basic_only = false, no_oracle = false;
  auto *verify = app.add_subcommand("verify", "Check a named or listed set as basic and special");
  verify->add_option("--set", set_spec, "Named set or component list")->required();
  verify->add_option("-n", n, "Degree")->required();
  verify->add_flag("--basic-only", basic_only, "Skip the metacyclic check");
  verify->add_flag("--no-oracle", no_oracle, "Never fall back to the enumeration oracle");

  std::string pool_spec = "standard", force_in, force_out, out_path, check_path;
  int max_size = 0;
  auto *search = app.add_subcommand("search", "Exact minimum cover with a certificate");
  search->add_option("-n", n, "Degree");
  search->add_option("--pool", pool_spec, "standard[+facts][+half][+noaffine] or a list")
      ->capture_default_str();
  search->add_option("--force-in", force_in, "Components every cover must contain");
  search->add_option("--force-out", force_out, "Components no cover may contain");
  search->add_option("--max-size", max_size, "Largest cover size tried (default g(n))");
  search->add_option("--out", out_path, "Write the certificate here");
  search->add_option("--check", check_path, "Re-validate an existing certificate instead");

  auto *certify = app.add_subcommand("certify", "Replay the degree 10 and 14 arguments");
  certify->add_option("-n", n, "Degree (10 or 14)");
  certify->add_option("--out", out_path, "Write the certificate here");
  certify->add_option("--check", check_path, "Re-validate an existing certificate instead");

  auto *shapes = app.add_subcommand("shapes", "Special metacyclic shapes and their coverage");
  shapes->add_option("-n", n, "Degree")->required();
  shapes->add_option("--set", set_spec, "Named set or component list to test against");

  int product_from = 0;
  auto *compare = app.add_subcommand("compare-gh", "Compare g(n) with h(n)");
  compare->add_option("--from", from, "First degree");
  compare->add_option("--to", to, "Last degree");
  compare->add_option("--product-from", product_from,
                      "Build an odd prime product from this prime until h < g");

  auto *check = app.add_subcommand("check-certificate", "Re-validate a certificate file");
  check->add_option("file", check_path, "Certificate JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bounds) {
      if (n > 0)
        from = to = n;
      if (from == 0)
        throw UsageError("bounds needs -n or --from/--to");
      if (to == 0)
        to = from;
      return cmd_bounds(g, from, to, search_max, out);
    }
    if (*verify)
      return cmd_verify(g, set_spec, n, basic_only, no_oracle, out);
    if (*search) {
      if (!check_path.empty())
        return cmd_check(g, check_path, out);
      if (n == 0)
        throw UsageError("search needs -n");
      return cmd_search(g, n, pool_spec, force_in, force_out, max_size, out_path, out);
    }
    if (*certify) {
      if (!check_path.empty())
        return cmd_check(g, check_path, out);
      if (n == 0)
        throw UsageError("certify needs -n");
      return cmd_certify(g, n, out_path, out);
    }
    if (*shapes)
      return cmd_shapes(g, n, set_spec, out);
    if (*compare)
      return cmd_compare(g, from, to, product_from, out);
    if (*check)
      return cmd_check(g, check_path, out);
  } catch (const resource_error &e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const parse_error &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const undecidable_error &e) {
    err << "undecidable: " << e.what() << '\n';
    return kPropertyFails;
  }
  return kUsage;
}

} // namespace normcov::cli
