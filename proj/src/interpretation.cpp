#include "strsets/interpretation.hpp"

#include <algorithm>
#include <set>

#include "strsets/canonical.hpp"
#include "strsets/enumerate.hpp"
#include "strsets/frames.hpp"

namespace strsets {

HFTerm HFTerm::atom(BinStr value) {
  HFTerm t;
  t.atom_ = std::move(value);
  return t;
}

HFTerm HFTerm::set_of(std::vector<HFTerm> items) {
  HFTerm t;
  t.items_ = std::move(items);
  return t;
}

BinStr hf_encode(const HFTerm& t) {
  if (t.is_atom()) return t.atom_value();
  std::set<BinStr> encoded;
  for (const HFTerm& item : t.items()) encoded.insert(hf_encode(item));
  return encode_canonical(encoded).code;
}

namespace {

struct HFParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error("hf literal: " + what + " at offset " + std::to_string(pos));
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  HFTerm item() {
    if (peek() == '{') return set();
    if (peek() == 'r') {
      ++pos;
      expect(':');
      std::size_t start = pos;
      while (pos < text.size() && (text[pos] == 'a' || text[pos] == 'b')) ++pos;
      if (pos == start) fail("empty atom after r:");
      return HFTerm::atom(BinStr(std::string(text.substr(start, pos - start))));
    }
    fail("expected '{' or 'r:'");
  }

  HFTerm set() {
    expect('{');
    std::vector<HFTerm> items;
    if (peek() != '}') {
      items.push_back(item());
      while (peek() == ',') {
        ++pos;
        items.push_back(item());
      }
    }
    expect('}');
    return HFTerm::set_of(std::move(items));
  }

  HFTerm parse() {
    HFTerm t = set();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return t;
  }
};

}  // namespace

HFTerm parse_hf_literal(std::string_view text) {
  return HFParser{text}.parse();
}

Theory theory_from_name(std::string_view name) {
  if (name == "ast") return Theory::AST;
  if (name == "ast1-ext") return Theory::AST1_EXT;
  if (name == "ps0") return Theory::PS0p;
  if (name == "ps0-ext") return Theory::PS0p_EXT;
  throw Error("unknown theory: " + std::string(name));
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::AST: return "ast";
    case Theory::AST1_EXT: return "ast1-ext";
    case Theory::PS0p: return "ps0";
    case Theory::PS0p_EXT: return "ps0-ext";
  }
  return "?";
}

namespace {

// Members that are themselves canonical codes; the equality of the
// extensional interpretations compares only these.
std::set<BinStr> canonical_members(const BinStr& x) {
  std::set<BinStr> out;
  auto p = try_parse(x);
  if (!p) return out;
  for (const auto& e : p->member_set())
    if (is_set_star(e)) out.insert(e);
  return out;
}

bool eq_star(const BinStr& u, const BinStr& v) {
  return canonical_members(u) == canonical_members(v);
}

struct Checker {
  AxiomReport report;
  std::vector<BinStr> universe;  // canonical codes, enumeration order
  std::vector<BinStr> elements;  // all strings up to elem_bound

  BinStr adj(const BinStr& x, const BinStr& y) { return adjoin(x, y).code; }

  // Runs one axiom over the given instance generator; gen must call
  // check(holds, witness...) for every instance and may stop early by
  // returning false from check.
  template <typename Body>
  void axiom(const std::string& name, Body body) {
    if (!report.pass) {
      report.lines.push_back(name + ": skipped");
      return;
    }
    std::vector<BinStr> witness;
    const bool ok = body(witness);
    report.lines.push_back(name + (ok ? ": pass" : ": fail"));
    if (!ok) {
      report.pass = false;
      report.axiom = name;
      report.witness = std::move(witness);
    }
  }
};

std::set<BinStr> with(std::set<BinStr> s, const BinStr& y) {
  s.insert(y);
  return s;
}

}  // namespace

AxiomReport verify_axioms(Theory theory, std::size_t set_bound,
                          std::size_t elem_bound) {
  if (set_bound > 14 || elem_bound > 12)
    throw BoundTooLarge("verify_axioms enumeration bound too large");

  Checker c;
  c.report.theory = theory;
  c.report.set_bound = set_bound;
  c.report.elem_bound = elem_bound;
  c.report.pass = true;

  for_each_string(set_bound, [&](const BinStr& x) {
    if (is_set_star(x)) c.universe.push_back(x);
  });
  c.elements = all_strings(elem_bound);
  c.report.universe_size = c.universe.size();

  const BinStr zero("aa");
  const auto& U = c.universe;
  const auto& E = c.elements;

  const bool ext_equality =
      theory == Theory::PS0p_EXT || theory == Theory::AST1_EXT;
  auto eq = [&](const BinStr& u, const BinStr& v) {
    return ext_equality ? eq_star(u, v) : u == v;
  };

  switch (theory) {
    case Theory::AST:
    case Theory::AST1_EXT:
      c.axiom("NULL", [&](std::vector<BinStr>& w) {
        for (const BinStr& y : E)
          if (is_member(y, zero)) {
            w = {y};
            return false;
          }
        return true;
      });
      if (theory == Theory::AST) {
        c.axiom("ADJ", [&](std::vector<BinStr>& w) {
          for (const BinStr& x : U)
            for (const BinStr& y : E) {
              const BinStr z = c.adj(x, y);
              if (members(z) != with(members(x), y)) {
                w = {x, y, z};
                return false;
              }
            }
          return true;
        });
      } else {
        c.axiom("ADJ1", [&](std::vector<BinStr>& w) {
          for (const BinStr& x : U)
            for (const BinStr& y : E) {
              const BinStr z = c.adj(x, y);
              if (!is_member(y, z)) {
                w = {x, y, z};
                return false;
              }
              for (const BinStr& m : members(x))
                if (!is_member(m, z)) {
                  w = {x, y, z, m};
                  return false;
                }
              for (const BinStr& m : members(z))
                if (!is_member(m, x) && !eq_star(m, y)) {
                  w = {x, y, z, m};
                  return false;
                }
            }
          return true;
        });
        c.axiom("EXT", [&](std::vector<BinStr>& w) {
          for (const BinStr& x : U)
            for (const BinStr& y : U)
              if (eq_star(x, y) && !eq_star(x, y)) {
                w = {x, y};
                return false;
              }
          return true;
        });
      }
      break;

    case Theory::PS0p:
    case Theory::PS0p_EXT:
      c.axiom("S1", [&](std::vector<BinStr>& w) {
        for (const BinStr& x : E)
          if (c.adj(zero, x) == zero) {
            w = {x};
            return false;
          }
        return true;
      });
      c.axiom("S2", [&](std::vector<BinStr>& w) {
        for (const BinStr& x : U)
          for (const BinStr& y : E) {
            const BinStr z1 = c.adj(x, y), z2 = c.adj(z1, y);
            if (!eq(z1, z2)) {
              w = {x, y, z1, z2};
              return false;
            }
          }
        return true;
      });
      c.axiom("S3", [&](std::vector<BinStr>& w) {
        for (const BinStr& x : U)
          for (const BinStr& y : E)
            for (const BinStr& z : E) {
              const BinStr z2 = c.adj(c.adj(x, y), z);
              const BinStr z4 = c.adj(c.adj(x, z), y);
              if (!eq(z2, z4)) {
                w = {x, y, z, z2, z4};
                return false;
              }
            }
        return true;
      });
      c.axiom("S4", [&](std::vector<BinStr>& w) {
        for (const BinStr& x : U)
          for (const BinStr& y : E)
            for (const BinStr& v : E) {
              const BinStr z = c.adj(x, y);
              if (c.adj(z, v) != z) continue;
              const bool holds =
                  c.adj(x, v) == x || (ext_equality ? eq_star(v, y) : v == y);
              if (!holds) {
                w = {x, y, v};
                return false;
              }
            }
        return true;
      });
      c.axiom("S5", [&](std::vector<BinStr>& w) {
        for (const BinStr& x : U)
          for (const BinStr& y : E)
            if (!is_set_star(c.adj(x, y))) {
              w = {x, y};
              return false;
            }
        return true;
      });
      c.axiom("S6", [&](std::vector<BinStr>& w) {
        // Functionality, checked against the independent canonical route.
        for (const BinStr& x : U)
          for (const BinStr& y : E) {
            const BinStr z1 = c.adj(x, y);
            const BinStr z2 = encode_canonical(with(members(x), y)).code;
            if (!eq(z1, z2)) {
              w = {x, y, z1, z2};
              return false;
            }
          }
        return true;
      });
      if (theory == Theory::PS0p_EXT) {
        c.axiom("EXT", [&](std::vector<BinStr>& w) {
          for (const BinStr& x : U)
            for (const BinStr& y : U) {
              bool premise = true;
              for (const BinStr& z : U)
                if (is_member(z, x) != is_member(z, y)) {
                  premise = false;
                  break;
                }
              // Unbounded tail of the premise: membership agreement on all
              // canonical codes is exactly agreement of canonical members.
              premise = premise && eq_star(x, y);
              if (premise && !eq_star(x, y)) {
                w = {x, y};
                return false;
              }
            }
          return true;
        });
      }
      break;
  }

  return c.report;
}

}  // namespace strsets
