#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "strsets/lemma_suite.hpp"

using namespace strsets;

TEST_CASE("run_property") {
  Bounds small;
  small.max_len = 5;
  small.code_len = 11;
  CHECK(run_property("4.7", small).pass);
  CHECK(run_property("8.2", small).pass);
  CHECK(run_property("9.14", small).pass);
  CHECK_THROWS_AS(run_property("99.99", small), UnknownProperty);
}

TEST_CASE("negative control reports its minimal counterexample") {
  const PropertyResult r = run_property("9.4-reflexive-misread", Bounds{});
  CHECK(!r.pass);
  CHECK(r.counterexample == "x=baaab u=a");
}

TEST_CASE("suites") {
  Bounds small;
  small.max_len = 4;
  small.code_len = 9;
  for (const char* name : {"core", "frames", "order", "canonical"})
    for (const PropertyResult& r : run_suite(name, small))
      CHECK_MESSAGE(r.pass, r.id, ": ", r.counterexample);
  CHECK_THROWS_AS(run_suite("bogus", small), UnknownProperty);
}

TEST_CASE("registry holds the required core of properties") {
  std::set<std::string> ids;
  for (const PropertyInfo& p : registered_properties()) ids.insert(p.id);
  for (const char* want :
       {"1.7",  "1.13", "2.1",  "4.5",  "4.7",  "4.23", "4.24", "5.5",
        "5.7",  "5.15", "5.18", "5.21", "5.22", "5.42", "5.58", "6.2",
        "6.5",  "6.6",  "6.7",  "6.8",  "6.9",  "8.1",  "8.2",  "8.3",
        "9.1",  "9.3",  "9.4",  "9.5",  "9.6",  "9.7",  "9.10", "9.14",
        "9.16", "9.22", "10.2", "10.4", "10.5", "10.7", "10.16", "11.4",
        "12.1"})
    CHECK_MESSAGE(ids.count(want) == 1, "missing property ", want);
}

namespace {

// Every numbered proposition of sections 1-15 (section 16's claims are
// unnumbered). A proposition must be registered as a property or carried
// in the coverage manifest with a subsumption note.
std::set<std::string> all_proposition_ids() {
  const std::pair<int, int> ranges[] = {
      {1, 14}, {2, 4},  {3, 13}, {4, 24}, {5, 59}, {6, 9},  {7, 1}, {8, 3},
      {9, 30}, {10, 29}, {11, 5}, {12, 2}, {13, 2}, {14, 6}, {15, 6}};
  std::set<std::string> ids;
  for (std::size_t s = 0; s < std::size(ranges); ++s)
    for (int i = 1; i <= ranges[s].second; ++i)
      ids.insert(std::to_string(ranges[s].first) + "." + std::to_string(i));
  return ids;
}

}  // namespace

TEST_CASE("coverage manifest accounts for every numbered proposition") {
  const char* path = std::getenv("STRSETS_MANIFEST");
  REQUIRE_MESSAGE(path != nullptr, "STRSETS_MANIFEST not set");
  std::ifstream in(path);
  REQUIRE(in.good());

  std::map<std::string, std::string> manifest;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    REQUIRE_MESSAGE(tab != std::string::npos, "malformed line: ", line);
    manifest[line.substr(0, tab)] = line.substr(tab + 1);
  }

  std::set<std::string> registered;
  for (const PropertyInfo& p : registered_properties()) registered.insert(p.id);

  for (const std::string& id : all_proposition_ids()) {
    const bool in_registry = registered.count(id) > 0;
    const auto it = manifest.find(id);
    const bool in_manifest = it != manifest.end() && !it->second.empty();
    CHECK_MESSAGE(in_registry || in_manifest, "proposition ", id,
                  " neither registered nor in the manifest");
    CHECK_MESSAGE(!(in_registry && in_manifest), "proposition ", id,
                  " listed twice (registry and manifest)");
  }
  // and the manifest names no unknown propositions
  const auto known = all_proposition_ids();
  for (const auto& [id, note] : manifest)
    CHECK_MESSAGE(known.count(id) == 1, "manifest lists unknown id ", id);
}
