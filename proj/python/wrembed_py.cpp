#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wrembed/embed_g.hpp"
#include "wrembed/orders.hpp"
#include "wrembed/reductions.hpp"
#include "wrembed/wreath_l.hpp"

namespace py = pybind11;
using namespace wrembed;

// Arbitrary precision integers cross the boundary as Python ints.
namespace pybind11::detail {
  template <>
  struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
      if (!PyLong_Check(src.ptr())) {
        return false;
      }
      value = Int(py::str(src).cast<std::string>());
      return true;
    }

    static handle cast(Int const& v, return_value_policy, handle) {
      return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
  };
}  // namespace pybind11::detail

namespace {

  std::shared_ptr<GroupOracle const> make_group(std::string const& base) {
    if (base == "free-abelian") {
      return std::make_shared<FreeAbelianGroup>();
    }
    if (base == "insep:mock-odd-even") {
      return std::make_shared<InseparableGroup>(mock_pair("odd-even"));
    }
    if (base == "insep:mock-mod-three") {
      return std::make_shared<InseparableGroup>(mock_pair("mod-three"));
    }
    if (base == "insep:halting") {
      return std::make_shared<InseparableGroup>(halting_pair());
    }
    if (base == "re:mock") {
      return std::make_shared<RecursiveGroup>("mock", mock_re_set());
    }
    if (base == "re:halting") {
      return std::make_shared<RecursiveGroup>("halting", halting_pair().enum_n);
    }
    throw PreconditionError("unknown base '" + base + "'");
  }

  std::shared_ptr<OrderOracle const> make_order(std::string const& base) {
    if (base == "free-abelian") {
      return std::make_shared<LexOrder>();
    }
    if (base == "insep:mock-odd-even") {
      return std::make_shared<PairBasisOrder>(mock_pair("odd-even"));
    }
    if (base == "insep:mock-mod-three") {
      return std::make_shared<PairBasisOrder>(mock_pair("mod-three"));
    }
    throw PreconditionError("base '" + base + "' has no computable order");
  }

  GElement g(std::string const& text) {
    return g_from_word(parse_word(text, Alphabet::wreath_g()));
  }

  LElement l(std::string const& text) {
    return l_from_word(parse_word(text, Alphabet::wreath_l()));
  }

}  // namespace

PYBIND11_MODULE(wrembed, m) {
  m.doc() = "Word problem, membership and order deciders for a two-generated wreath embedding";

  // translators registered later are tried first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("normalize_word",
        [](std::string const& text, std::string const& alphabet) {
          Alphabet const a = alphabet == "G"   ? Alphabet::wreath_g()
                             : alphabet == "L" ? Alphabet::wreath_l()
                                               : Alphabet::base(alphabet.at(0));
          return print_word(parse_word(text, a));
        },
        py::arg("text"), py::arg("alphabet") = "G",
        "Canonical printed form of a word over G, L, or an indexed base letter.");

  py::class_<GElement>(m, "GElement")
      .def(py::init<>())
      .def(py::init([](std::string const& text) { return g(text); }), py::arg("word"))
      .def_static("f", &GElement::f, py::arg("power") = Int(1))
      .def_static("s", &GElement::s, py::arg("power") = Int(1))
      .def_property_readonly("delta", [](GElement const& a) { return a.delta(); })
      .def_property_readonly("factors",
                             [](GElement const& a) {
                               std::vector<std::pair<Int, Int>> out;
                               for (auto const& f : a.factors()) {
                                 out.emplace_back(f.shift, f.power);
                               }
                               return out;
                             })
      .def("__mul__", &g_mul)
      .def("inverse", &g_inv)
      .def("word", [](GElement const& a) { return print_word(g_to_word(a)); })
      .def("__eq__", [](GElement const& a, GElement const& b) { return a == b; })
      .def("__str__", &g_serialize)
      .def("__repr__", [](GElement const& a) { return "GElement(" + g_serialize(a) + ")"; });

  py::class_<LElement>(m, "LElement")
      .def(py::init<>())
      .def(py::init([](std::string const& text) { return l(text); }), py::arg("word"))
      .def_property_readonly("tail", [](LElement const& a) { return a.tail(); })
      .def_property_readonly("factors",
                             [](LElement const& a) {
                               std::vector<std::tuple<Index, Int, Int>> out;
                               for (auto const& f : a.factors()) {
                                 out.emplace_back(f.gen, f.shift, f.power);
                               }
                               return out;
                             })
      .def("__mul__", &l_mul)
      .def("inverse", &l_inv)
      .def("word", [](LElement const& a) { return print_word(l_to_word(a)); })
      .def("__eq__", [](LElement const& a, LElement const& b) { return a == b; })
      .def("__str__", &l_serialize)
      .def("__repr__", [](LElement const& a) { return "LElement(" + l_serialize(a) + ")"; });

  m.def("l_eval", [](LElement const& a, Int const& nu) { return print_word(l_eval(a, nu)); },
        py::arg("a"), py::arg("nu"));
  m.def("g_eval", &g_eval, py::arg("a"), py::arg("mu"));

  m.def("is_trivial",
        [](GElement const& a, std::string const& base) {
          return g_is_trivial(a, *make_group(base)) == Triviality::trivial;
        },
        py::arg("a"), py::arg("base") = "free-abelian");
  m.def("l_is_trivial",
        [](LElement const& a, std::string const& base) {
          return l_is_trivial(a, *make_group(base)) == Triviality::trivial;
        },
        py::arg("a"), py::arg("base") = "free-abelian");
  m.def("semi_trivial",
        [](GElement const& a, std::string const& base, std::uint64_t fuel) {
          SemiReport const r = g_semi_trivial(a, *make_group(base), fuel);
          return py::make_tuple(to_string(r.verdict), r.refuted, r.reason);
        },
        py::arg("a"), py::arg("base"), py::arg("fuel"),
        "(verdict, refuted, reason) from the fueled semi-decider.");
  m.def("min_support",
        [](GElement const& a, std::string const& base) { return g_min_support(a, *make_group(base)); },
        py::arg("a"), py::arg("base") = "free-abelian");

  m.def("phi_word", [](Index i) { return print_word(phi_word(i)); }, py::arg("i"));
  m.def("phi_encode",
        [](std::string const& u, char letter) { return phi_encode(parse_word(u, Alphabet::base(letter))); },
        py::arg("u"), py::arg("letter") = 'x');
  m.def("phi_decode",
        [](GElement const& a, std::string const& base) { return print_word(phi_decode(a, *make_group(base))); },
        py::arg("a"), py::arg("base") = "free-abelian");
  m.def("in_image",
        [](GElement const& a, std::string const& base) {
          return g_in_image(a, *make_group(base)) == Membership::member;
        },
        py::arg("a"), py::arg("base") = "free-abelian");
  m.def("in_n2", [](GElement const& a) { return g_in_N2(a) == Membership::member; }, py::arg("a"));

  m.def("compare",
        [](GElement const& a, GElement const& b, std::string const& base) {
          OrderTrace const t = g_compare(a, b, *make_order(base), *make_group(base));
          return py::make_tuple(to_string(t.result), t.clause);
        },
        py::arg("a"), py::arg("b"), py::arg("base") = "free-abelian",
        "(\"LT\" | \"EQ\" | \"GT\", clause) in the lifted order.");

  m.def("insep_decide",
        [](std::string const& w, std::string const& pair) {
          return insep_decide(parse_word(w, Alphabet::base('a')), mock_pair(pair)) == Triviality::trivial;
        },
        py::arg("word"), py::arg("pair") = "odd-even");
  m.def("prime", &prime, py::arg("i"));

  m.def("theorem1_demo",
        [](std::string const& pair, Index max_n) {
          std::ostringstream out;
          write_report(out, theorem1_demo(mock_pair(pair), max_n));
          return out.str();
        },
        py::arg("pair") = "odd-even", py::arg("max_n") = 10,
        "Separator report in the CLI's CSV layout.");
  m.def("theorem2_probe",
        [](Index n, std::uint64_t fuel) {
          ProbeResult const r = theorem2_probe(n, mock_re_set(), fuel);
          return py::make_tuple(to_string(r.report.verdict), r.report.refuted);
        },
        py::arg("n"), py::arg("fuel"), "Probe over the mock r.e. set of odd numbers.");
}
