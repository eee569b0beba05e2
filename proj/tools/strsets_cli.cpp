#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strsets/canonical.hpp"
#include "strsets/frames.hpp"
#include "strsets/interpretation.hpp"
#include "strsets/lemma_suite.hpp"
#include "strsets/ordering.hpp"

namespace {

using namespace strsets;

BinStr arg_str(const std::string& s) {
  auto v = BinStr::try_make(s);
  if (!v) {
    std::cerr << "error: arguments must be nonempty words over {a,b}: \"" << s
              << "\"\n";
    std::exit(2);
  }
  return *v;
}

std::string kind_label(const ParsedCode& p, std::size_t i) {
  if (p.frames().size() == 1) return "First+Last";
  switch (p.frames()[i].kind) {
    case FrameKind::First: return "First";
    case FrameKind::Internal: return "Internal";
    case FrameKind::Last: return "Last";
  }
  return "?";
}

std::string class_label(const FrameClass& c) {
  switch (c.kind) {
    case FrameClassKind::First: return "First";
    case FrameClassKind::Bound: return "Bound";
    case FrameClassKind::Free: return c.free_plus ? "Free+" : "Free-";
  }
  return "?";
}

void print_frame_table(const ParsedCode& p) {
  if (p.is_empty()) {
    std::cout << "frames: (none)\n";
    return;
  }
  std::cout << "frames:\n";
  const auto classes = classify_frames(p);
  for (std::size_t i = 0; i < p.frames().size(); ++i) {
    const Frame& f = p.frames()[i];
    std::cout << f.opening.str().str() << '\t' << f.element.str() << '\t'
              << f.closing.str().str() << '\t' << kind_label(p, i) << '\t'
              << class_label(classes[i]) << '\n';
  }
}

void emit_code(const BinStr& code, bool explain) {
  std::cout << code.str() << '\n';
  if (explain) print_frame_table(parse(code));
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int cmd_check(const BinStr& x) {
  try {
    const ParsedCode p = parse(x);
    std::cout << "Set: yes\n";
    std::cout << "MinSet: " << yn(is_min_set(x)) << '\n';
    std::cout << "Lex+: " << yn(is_lex_plus(x)) << '\n';
    std::cout << "Special: " << yn(is_special(x)) << '\n';
    std::cout << "Set*: " << yn(is_set_star(x)) << '\n';
    print_frame_table(p);
    return 0;
  } catch (const NotASetCode& e) {
    std::cout << "Set: no (" << e.clause << ")\n";
    return 1;
  }
}

int cmd_order(const BinStr& u, const BinStr& v) {
  auto verdict = [](bool before, bool after) {
    return before ? "before" : (after ? "after" : "equal");
  };
  std::cout << "lex: " << verdict(lex_precedes(u, v), lex_precedes(v, u))
            << '\n';
  const auto tc = tally_class_compare(u, v);
  std::cout << "tally-class: "
            << (tc == TallyClassOrder::Below
                    ? "below"
                    : tc == TallyClassOrder::Above ? "above" : "equal")
            << '\n';
  std::cout << "combined: " << verdict(precedes(u, v), precedes(v, u)) << '\n';
  return 0;
}

int cmd_census(std::size_t max_len) {
  const CensusReport r = uniqueness_census(max_len);
  std::cout << "strings: " << r.strings << '\n';
  std::cout << "set-star: " << r.set_star << '\n';
  std::cout << "classes: " << r.classes << '\n';
  std::cout << "duplicates: " << r.duplicates.size() << '\n';
  for (const auto& [elems, codes] : r.duplicates) {
    std::cout << "duplicate:";
    for (const BinStr& c : codes) std::cout << ' ' << c.str();
    std::cout << '\n';
  }
  return r.duplicates.empty() ? 0 : 1;
}

int cmd_verify_axioms(const std::string& theory, std::size_t max_len,
                      std::size_t elem_len) {
  const AxiomReport r =
      verify_axioms(theory_from_name(theory), max_len, elem_len);
  for (const std::string& line : r.lines) std::cout << line << '\n';
  if (!r.pass) {
    std::cout << "counterexample:";
    for (const BinStr& w : r.witness) std::cout << ' ' << w.str();
    std::cout << '\n';
  }
  std::cout << theory_name(r.theory) << ": " << (r.pass ? "pass" : "fail")
            << " (universe " << r.universe_size << " sets, elements up to length "
            << r.elem_bound << ")\n";
  return r.pass ? 0 : 1;
}

int report_properties(const std::vector<PropertyResult>& results,
                      const std::string& label) {
  std::size_t passed = 0;
  for (const PropertyResult& r : results) {
    std::cout << r.id << " [" << r.statement << "]: "
              << (r.pass ? "pass" : "fail");
    if (!r.pass) std::cout << ' ' << r.counterexample;
    std::cout << '\n';
    std::fprintf(stderr, "%s: %.3fs\n", r.id.c_str(), r.seconds);
    if (r.pass) ++passed;
  }
  std::cout << label << ": " << passed << '/' << results.size() << " pass\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set codes over {a,b}: parse, order, canonicalize, verify"};
  app.require_subcommand(1);
  bool explain = false;
  app.add_flag("--explain", explain, "also print the frame table of results");

  std::string xs, ys, lit, theory = "ast", suite, property;
  std::vector<std::string> elems;
  std::size_t frame_index = 0, max_len = 12, elem_len = 3;
  bool canonical = false;
  Bounds bounds;

  auto* c_check = app.add_subcommand("check", "classify a code and print its frame table");
  c_check->add_option("code", xs)->required();

  auto* c_decode = app.add_subcommand("decode", "print the frame table of a set code");
  c_decode->add_option("code", xs)->required();

  auto* c_members = app.add_subcommand("members", "list the members of a set code");
  c_members->add_option("code", xs)->required();

  auto* c_canon = app.add_subcommand("canon", "canonical code of the given elements");
  c_canon->add_option("elements", elems);

  auto* c_hf = app.add_subcommand("hf-encode", "encode a nested set literal");
  c_hf->add_option("literal", lit)->required();

  auto* c_adjoin = app.add_subcommand("adjoin", "canonical adjunction");
  c_adjoin->add_option("code", xs)->required();
  c_adjoin->add_option("element", ys)->required();

  auto* c_subtract = app.add_subcommand("subtract", "remove an element's frame");
  c_subtract->add_option("code", xs)->required();
  c_subtract->add_option("element", ys)->required();
  c_subtract->add_flag("--canonical", canonical, "re-encode the result canonically");

  auto* c_remark = app.add_subcommand("remark", "bump the leading run of markers by one b");
  c_remark->add_option("code", xs)->required();

  auto* c_resolve = app.add_subcommand("resolve", "split at an internal frame");
  c_resolve->add_option("code", xs)->required();
  c_resolve->add_option("frame", frame_index)->required();

  auto* c_order = app.add_subcommand("order", "compare two strings");
  c_order->add_option("u", xs)->required();
  c_order->add_option("v", ys)->required();

  auto* c_census = app.add_subcommand("census", "uniqueness census of canonical codes");
  c_census->add_option("--max-len", max_len)->required();

  auto* c_axioms = app.add_subcommand("verify-axioms", "model-check a theory's axioms");
  c_axioms->add_option("--theory", theory, "ast | ast1-ext | ps0 | ps0-ext")->required();
  c_axioms->add_option("--max-len", max_len)->required();
  c_axioms->add_option("--elem-len", elem_len);

  auto* c_fuzz = app.add_subcommand("fuzz-lemmas", "run a property suite");
  c_fuzz->add_option("--suite", suite, "core | frames | order | canonical | controls");
  c_fuzz->add_option("--property", property, "run one property by id");
  c_fuzz->add_option("--max-len", bounds.max_len);
  c_fuzz->add_option("--code-len", bounds.code_len);
  c_fuzz->add_option("--seed", bounds.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_check) return cmd_check(arg_str(xs));
    if (*c_decode) {
      print_frame_table(parse(arg_str(xs)));
      return 0;
    }
    if (*c_members) {
      for (const Frame& f : parse(arg_str(xs)).frames())
        std::cout << f.element.str() << '\n';
      return 0;
    }
    if (*c_canon) {
      std::set<BinStr> s;
      for (const std::string& e : elems) s.insert(arg_str(e));
      emit_code(encode_canonical(s).code, explain);
      return 0;
    }
    if (*c_hf) {
      emit_code(hf_encode(parse_hf_literal(lit)), explain);
      return 0;
    }
    if (*c_adjoin) {
      emit_code(adjoin(arg_str(xs), arg_str(ys)).code, explain);
      return 0;
    }
    if (*c_subtract) {
      BinStr z = subtract(arg_str(xs), arg_str(ys));
      if (canonical) z = encode_canonical(members(z)).code;
      emit_code(z, explain);
      return 0;
    }
    if (*c_remark) {
      emit_code(remark(arg_str(xs)), explain);
      return 0;
    }
    if (*c_resolve) {
      const auto [left, right] = resolve(arg_str(xs), frame_index);
      std::cout << left.str() << '\n' << right.str() << '\n';
      return 0;
    }
    if (*c_order) return cmd_order(arg_str(xs), arg_str(ys));
    if (*c_census) return cmd_census(max_len);
    if (*c_axioms) return cmd_verify_axioms(theory, max_len, elem_len);
    if (*c_fuzz) {
      if (!property.empty())
        return report_properties({run_property(property, bounds)}, property);
      if (suite.empty()) {
        std::cerr << "error: fuzz-lemmas needs --suite or --property\n";
        return 2;
      }
      return report_properties(run_suite(suite, bounds), suite);
    }
  } catch (const NotASetCode& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
