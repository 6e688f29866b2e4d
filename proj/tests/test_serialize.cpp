#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "normcov/cache.hpp"
#include "normcov/errors.hpp"
#include "normcov/serialize.hpp"

using namespace normcov;

namespace {

std::filesystem::path fresh_dir(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("normcov_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

} // namespace

TEST_CASE("partition JSON") {
  const Partition t = Partition::from_parts({5, 2, 1, 2, 1, 1});
  CHECK(to_json(t).dump() == "[[1,3],[2,2],[5,1]]");
  CHECK(partition_from_json(to_json(t)) == t);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[[1,2],[1,1]]")), parse_error);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[[0,2]]")), parse_error);
}

TEST_CASE("component JSON") {
  CHECK(to_json(Component{Intransitive{3}}).dump() == R"({"kind":"intransitive","x":3})");
  CHECK(to_json(Component{Imprimitive{2, 5}}).dump() == R"({"kind":"imprimitive","b":2,"m":5})");
  CHECK(to_json(Component{Alternating{}}).dump() == R"({"kind":"alternating"})");
  CHECK(to_json(Component{Affine{11}}).dump() == R"({"kind":"affine","p":11})");
  CHECK(to_json(Component{ProjectiveFact{2, 9, true}}).dump() ==
        R"({"kind":"projective","d":2,"q":9,"ext":true})");
  const std::vector<Component> all{Intransitive{1}, Imprimitive{3, 4}, Alternating{},
                                   Affine{13}, ProjectiveFact{2, 13, false},
                                   SporadicFact{SporadicFact::Kind::M11}};
  CHECK(components_from_json(to_json(all)) == all);
  CHECK(component_from_json(Json("S2wrS6")) == Component{Imprimitive{2, 6}});
  CHECK_THROWS_AS(component_from_json(Json::parse(R"({"kind":"cyclic"})")), parse_error);
}

TEST_CASE("shape and verdict JSON") {
  const auto s = MetacyclicShape::from_parts(10, {4, 3, 1});
  CHECK(to_json(s).dump() == R"({"n":10,"pair":[1,2],"parts":[4,3,1]})");
  const auto v = covered_by_intransitive(s, 3);
  const Json j = to_json(v);
  CHECK(j["status"] == "covered");
  CHECK(j["witness"].contains("cut"));
  CHECK(to_json(covered_by_alternating(s))["witness"].is_null());
}

TEST_CASE("certificate round trip") {
  const auto cert = certify_degree(10);
  const Json j = to_json(cert);
  CHECK(j["schema"] == "normcov.certificate");
  CHECK(j["version"] == kSchemaVersion);
  const auto back = certificate_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(check_certificate(back).ok);

  Json wrong = j;
  wrong["version"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(certificate_from_json(wrong), parse_error);
  Json broken = j;
  broken.erase("assignment");
  CHECK_THROWS_AS(certificate_from_json(broken), parse_error);
}

TEST_CASE("every single-entry change of the assignment is rejected") {
  const auto cert = min_cover_search(standard_pool(7), {});
  const Json j = to_json(cert);
  const std::size_t entries = j["assignment"].size();
  for (std::size_t i = 0; i < entries; ++i) {
    for (std::size_t k = 0; k <= cert.chosen.size(); ++k) {
      if (j["assignment"][i]["component"] == k)
        continue;
      Json m = j;
      m["assignment"][i]["component"] = k;
      REQUIRE_FALSE(check_certificate(certificate_from_json(m)).ok);
    }
    Json other = j;
    other["assignment"][i]["type"] = j["assignment"][(i + 1) % entries]["type"];
    REQUIRE_FALSE(check_certificate(certificate_from_json(other)).ok);
  }
}

TEST_CASE("report JSON") {
  const Json r = to_json(interval_report(8));
  CHECK(r["schema"] == "normcov.report");
  CHECK(r["n"] == 8);
  CHECK(r["g"] == 3);
  CHECK(r["r_interval"] == Json::array({3, 3}));
  CHECK(r["linear"]["known_k"] == 0.025);
}

TEST_CASE("cache keys, hits and version isolation") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");

  const auto dir = fresh_dir("cache");
  const ResultCache cache(dir);
  const Json key{{"cmd", "search"}, {"n", 9}};
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, "payload");
  CHECK(cache.load(key) == std::optional<std::string>("payload"));
  CHECK(cache.entry_path(key).filename() == cache.fingerprint(key) + ".json");

  const ResultCache other(dir, "0.0.1");
  CHECK(other.fingerprint(key) != cache.fingerprint(key));
  CHECK_FALSE(other.load(key).has_value());

  // a stale entry written under the same name by another version is ignored
  {
    std::ofstream f(other.entry_path(key));
    f << Json{{"toolkit", "1.0.0"}, {"key", key}, {"payload", "x"}}.dump();
  }
  CHECK_FALSE(other.load(key).has_value());
  std::filesystem::remove_all(dir);
}
