#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "strsets/binstr.hpp"

namespace strsets {

// A hereditarily finite set literal: a raw string atom or a finite set of
// terms. Nesting is finite and well-founded by construction.
class HFTerm {
 public:
  static HFTerm atom(BinStr value);
  static HFTerm set_of(std::vector<HFTerm> items);

  bool is_atom() const { return atom_.has_value(); }
  const BinStr& atom_value() const { return *atom_; }
  const std::vector<HFTerm>& items() const { return items_; }

 private:
  HFTerm() = default;
  std::optional<BinStr> atom_;
  std::vector<HFTerm> items_;
};

// Atoms encode as themselves; sets as the canonical code of their encoded
// items. Injective on pure set terms; extensional by construction (order
// and duplicates in a set literal do not matter).
BinStr hf_encode(const HFTerm& t);

// Grammar: set := '{' (item (',' item)*)? '}' ; item := set | 'r:' [ab]+ ;
// whitespace ignored. Throws Error on malformed input.
HFTerm parse_hf_literal(std::string_view text);

enum class Theory { AST, AST1_EXT, PS0p, PS0p_EXT };

Theory theory_from_name(std::string_view name);  // ast | ast1-ext | ps0 | ps0-ext
std::string theory_name(Theory t);

struct AxiomReport {
  Theory theory;
  std::size_t set_bound = 0;   // length cap for set-position variables
  std::size_t elem_bound = 0;  // length cap for element-position variables
  std::size_t universe_size = 0;
  bool pass = false;
  // First counterexample in enumeration order, when !pass.
  std::string axiom;
  std::vector<BinStr> witness;
  // One entry per axiom, in fixed order: "NAME: pass" or "NAME: fail".
  std::vector<std::string> lines;
};

// Model-checks the theory's axioms with 0 read as "aa", membership as the
// framed-member relation on canonical codes, and adjunction as the
// canonical adjoin. Set variables range over canonical codes of length <=
// set_bound, element variables over strings of length <= elem_bound.
// Throws BoundTooLarge above the documented cutoff (set_bound > 14).
AxiomReport verify_axioms(Theory theory, std::size_t set_bound,
                          std::size_t elem_bound = 3);

}  // namespace strsets
