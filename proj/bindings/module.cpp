#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strsets/canonical.hpp"
#include "strsets/frames.hpp"
#include "strsets/interpretation.hpp"
#include "strsets/lemma_suite.hpp"
#include "strsets/ordering.hpp"

namespace py = pybind11;
using namespace strsets;

namespace {

BinStr bs(const std::string& s) { return BinStr(s); }

std::set<std::string> to_py_set(const std::set<BinStr>& in) {
  std::set<std::string> out;
  for (const BinStr& b : in) out.insert(b.str());
  return out;
}

std::set<BinStr> from_py_set(const std::set<std::string>& in) {
  std::set<BinStr> out;
  for (const std::string& s : in) out.insert(BinStr(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_strsets, m) {
  m.doc() = "finite sets encoded as binary strings over {a,b}";

  py::register_exception<NotASetCode>(m, "NotASetCodeError", PyExc_ValueError);
  py::register_exception<Error>(m, "StrsetsError", PyExc_ValueError);

  m.def("is_set", [](const std::string& x) { return is_set(bs(x)); });
  m.def("is_min_set", [](const std::string& x) { return is_min_set(bs(x)); });
  m.def("is_lex_plus", [](const std::string& x) { return is_lex_plus(bs(x)); });
  m.def("is_special", [](const std::string& x) { return is_special(bs(x)); });
  m.def("is_set_star", [](const std::string& x) { return is_set_star(bs(x)); });

  m.def("members", [](const std::string& x) { return to_py_set(members(bs(x))); });
  m.def("is_member",
        [](const std::string& y, const std::string& x) { return is_member(bs(y), bs(x)); });
  m.def("set_equiv",
        [](const std::string& x, const std::string& y) { return set_equiv(bs(x), bs(y)); });

  m.def("frames", [](const std::string& x) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const Frame& f : parse(bs(x)).frames())
      out.emplace_back(f.opening.str().str(), f.element.str(),
                       f.closing.str().str());
    return out;
  });

  m.def("lex_precedes",
        [](const std::string& u, const std::string& v) { return lex_precedes(bs(u), bs(v)); });
  m.def("precedes",
        [](const std::string& u, const std::string& v) { return precedes(bs(u), bs(v)); });

  m.def("encode_canonical", [](const std::set<std::string>& elems) {
    return encode_canonical(from_py_set(elems)).code.str();
  });
  m.def("adjoin", [](const std::string& x, const std::string& y) {
    return adjoin(bs(x), bs(y)).code.str();
  });
  m.def("adjoin_simple", [](const std::string& x, const std::string& y) {
    return adjoin_simple(bs(x), bs(y)).str();
  });
  m.def("subtract", [](const std::string& x, const std::string& y) {
    return subtract(bs(x), bs(y)).str();
  });
  m.def("remark", [](const std::string& z) { return remark(bs(z)).str(); });
  m.def("resolve", [](const std::string& x, std::size_t i) {
    const auto [l, r] = resolve(bs(x), i);
    return std::make_pair(l.str(), r.str());
  });

  m.def("hf_encode",
        [](const std::string& lit) { return hf_encode(parse_hf_literal(lit)).str(); });

  m.def("census", [](std::size_t max_len) {
    const CensusReport r = uniqueness_census(max_len);
    py::dict d;
    d["strings"] = r.strings;
    d["set_star"] = r.set_star;
    d["classes"] = r.classes;
    d["duplicates"] = r.duplicates.size();
    return d;
  });

  m.def(
      "verify_axioms",
      [](const std::string& theory, std::size_t max_len, std::size_t elem_len) {
        const AxiomReport r =
            verify_axioms(theory_from_name(theory), max_len, elem_len);
        py::dict d;
        d["theory"] = theory_name(r.theory);
        d["pass"] = r.pass;
        d["universe"] = r.universe_size;
        d["lines"] = r.lines;
        return d;
      },
      py::arg("theory"), py::arg("max_len"), py::arg("elem_len") = 3);

  m.def(
      "run_suite",
      [](const std::string& name, std::size_t max_len, std::size_t code_len) {
        Bounds b;
        b.max_len = max_len;
        b.code_len = code_len;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const PropertyResult& r : run_suite(name, b))
          out.emplace_back(r.id, r.pass, r.counterexample);
        return out;
      },
      py::arg("name"), py::arg("max_len") = 5, py::arg("code_len") = 11);
}
