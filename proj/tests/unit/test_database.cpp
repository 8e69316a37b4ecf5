#include "helpers.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

using namespace sextic;

namespace {

std::string bundled_text() {
  std::ifstream in(default_corpus_path());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Applies `edit` to the parsed bundled corpus and reparses it.
template <class F>
Corpus reparsed(F&& edit, bool strict = true) {
  auto j = nlohmann::ordered_json::parse(bundled_text());
  edit(j);
  return parse_corpus(j.dump(), strict);
}

nlohmann::ordered_json& record(nlohmann::ordered_json& j, int id) {
  for (auto& r : j["records"])
    if (r["id"] == id) return r;
  throw std::runtime_error("no record");
}

}  // namespace

TEST_SUITE("database") {

TEST_CASE("the bundled corpus loads strictly") {
  const Corpus& c = bundled_corpus();
  CHECK(c.records.size() == 39);
  CHECK(c.schema_version == 1);
  CHECK(c.checksum == "6a975dfbbf37fa58");
  CHECK(c.checksum == corpus_checksum(c));
  CHECK_THROWS(c.get(40));
}

TEST_CASE("every record has indices summing to 19 with one odd index") {
  for (const auto& r : bundled_corpus().records) {
    int sum = 0, odd = 0;
    for (int n : r.multiset()) {
      sum += n;
      odd += n % 2;
    }
    INFO("case ", r.id);
    CHECK(sum == 19);
    CHECK(odd == 1);
  }
}

TEST_CASE("E differs from F for exactly four records") {
  std::set<int> ids;
  for (const auto& r : bundled_corpus().records)
    if (r.flags().e_differs_from_f) ids.insert(r.id);
  CHECK(ids == std::set<int>{1, 16, 34, 36});
}

TEST_CASE("serialization round-trips") {
  const Corpus& c = bundled_corpus();
  Corpus again = parse_corpus(serialize_corpus(c));
  CHECK(again.checksum == c.checksum);
  CHECK(serialize_record(again.get(16)) == serialize_record(c.get(16)));
}

TEST_CASE("schema errors name the offending path") {
  try {
    reparsed([](auto& j) { record(j, 5).erase("name"); });
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("$.records[4]") != std::string::npos);
  }
  CHECK_THROWS_AS(reparsed([](auto& j) { j["schema_version"] = 2; }), SchemaError);
  CHECK_THROWS_AS(reparsed([](auto& j) { j.erase("records"); }), SchemaError);
  CHECK_THROWS_AS(parse_corpus("{ not json"), SchemaError);
}

TEST_CASE("invariant violations") {
  // A changed record without a new checksum.
  auto rename = [](auto& j) { record(j, 7)["notes"].push_back("edited"); };
  CHECK_THROWS_AS(reparsed(rename), CorpusInvariantError);
  CHECK_NOTHROW(reparsed(rename, false));
  CHECK_THROWS_AS(reparsed([](auto& j) { record(j, 8)["id"] = 7; }, false), CorpusInvariantError);
  CHECK_THROWS_AS(reparsed([](auto& j) { j["checksum"] = "0000000000000000"; }), CorpusInvariantError);
}

TEST_CASE("cross checks pass for every record") {
  for (const auto& r : bundled_corpus().records) {
    CrossCheck c = cross_check_record(r);
    std::string why;
    for (const auto& f : c.failures) why += f + "; ";
    INFO("case ", r.id, ": ", why);
    CHECK(c.ok);
  }
}

TEST_CASE("the printed coefficient 50 in case 34 does not match") {
  CurveRecord r = bundled_corpus().get(34);
  REQUIRE(r.printed_implicit.has_value());
  auto& f = r.printed_implicit->f;
  auto at = f.find("58");
  REQUIRE(at != std::string::npos);
  f.replace(at, 2, "50");
  CrossCheck c = cross_check_record(r);
  CHECK_FALSE(c.ok);
}

TEST_CASE("stated symmetries hold and a perturbed one does not") {
  for (int id : {3, 28, 29, 37}) {
    INFO("case ", id);
    CHECK(symmetry_holds(bundled_corpus().get(id)));
  }
  const auto& r = bundled_corpus().get(29);
  SymmetrySpec s = *r.symmetry;
  s.map[1][1] = 1;
  CHECK_FALSE(symmetry_holds(r, s));
  CHECK_THROWS_AS(symmetry_holds(bundled_corpus().get(2)), std::invalid_argument);
}

TEST_CASE("case 16 alternative with the wrong embedding sign is inequivalent") {
  CurveRecord r = bundled_corpus().get(16);
  REQUIRE(r.alt.has_value());
  REQUIRE(r.alt->f_embedding.size() == 1);
  r.alt->f_embedding[0].second = "-(" + r.alt->f_embedding[0].second + ")";
  CHECK_FALSE(cross_check_record(r).ok);
}

}
