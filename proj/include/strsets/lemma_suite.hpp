#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strsets/binstr.hpp"

namespace strsets {

// Per-variable length caps for the bounded universally quantified checks.
// Exhaustive below the sampling threshold; above it, pairs/triples are
// subsampled with the fixed seed so runs stay reproducible.
struct Bounds {
  std::size_t max_len = 6;    // plain string variables
  std::size_t code_len = 12;  // set-code variables
  std::uint64_t seed = 0x5eed;
  std::size_t sample_cap = 4'000'000;  // max instances per property
};

struct PropertyInfo {
  std::string id;         // e.g. "4.7"
  std::string statement;  // the checked formula, in ASCII
  std::string suite;      // core | frames | order | canonical | controls
};

struct PropertyResult {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string counterexample;  // empty when pass
  double seconds = 0.0;
};

const std::vector<PropertyInfo>& registered_properties();

// Throws UnknownProperty for an unregistered id.
PropertyResult run_property(const std::string& id, const Bounds& bounds);

// name: core | frames | order | canonical | controls.
std::vector<PropertyResult> run_suite(const std::string& name,
                                      const Bounds& bounds);

}  // namespace strsets
