#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "holomorphy/automorphisms.hpp"
#include "holomorphy/cayley.hpp"
#include "holomorphy/holomorph.hpp"
#include "holomorphy/numtheory.hpp"
#include "holomorphy/verify.hpp"

namespace py = pybind11;
using namespace holomorphy;

namespace {

std::vector<SuiteId> suites_from_names(
    const std::optional<std::vector<std::string>>& names) {
  if (!names) return default_suites();
  std::vector<SuiteId> out;
  for (const std::string& name : *names) {
    const auto id = suite_from_name(name);
    if (!id) throw std::invalid_argument("unknown suite '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "arithmetic and verified structure of Hol(C_n) for n = 2 p^e";

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<GeneratorError>(m, "GeneratorError",
                                         PyExc_ValueError);
  py::register_exception<NotAUnitError>(m, "NotAUnitError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_RuntimeError);

  py::class_<HolElem>(m, "Elem")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("a"), py::arg("b"))
      .def_readonly("a", &HolElem::a)
      .def_readonly("b", &HolElem::b)
      .def("__eq__",
           [](const HolElem& lhs, const HolElem& rhs) { return lhs == rhs; })
      .def("__hash__",
           [](const HolElem& e) {
             return py::hash(py::make_tuple(e.a, e.b));
           })
      .def("__repr__", [](const HolElem& e) {
        std::ostringstream os;
        os << "Elem(" << e.a << ", " << e.b << ")";
        return os.str();
      });

  py::class_<AutData>(m, "Aut")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("c"), py::arg("j"))
      .def_readonly("c", &AutData::c)
      .def_readonly("j", &AutData::j)
      .def("__eq__",
           [](const AutData& lhs, const AutData& rhs) { return lhs == rhs; })
      .def("__hash__",
           [](const AutData& a) {
             return py::hash(py::make_tuple(a.c, a.j));
           })
      .def("__repr__", [](const AutData& a) {
        std::ostringstream os;
        os << "Aut(" << a.c << ", " << a.j << ")";
        return os.str();
      });

  py::class_<HolContext>(m, "Context")
      .def_property_readonly("n", &HolContext::n)
      .def_property_readonly("p", &HolContext::p)
      .def_property_readonly("e", &HolContext::e)
      .def_property_readonly("phi", &HolContext::phi)
      .def_property_readonly("k", &HolContext::k)
      .def_property_readonly("group_order", &HolContext::group_order)
      .def("elem", &HolContext::elem, py::arg("a"), py::arg("b"))
      .def("identity", &HolContext::identity)
      .def("x", &HolContext::x)
      .def("y", &HolContext::y)
      .def("mul", &HolContext::mul, py::arg("g"), py::arg("h"))
      .def("inverse", &HolContext::inverse, py::arg("g"))
      .def("conjugate_by_y_power", &HolContext::conjugate_by_y_power,
           py::arg("a"), py::arg("b"))
      .def("power", &HolContext::power, py::arg("g"), py::arg("m"))
      .def("element_order", &HolContext::element_order, py::arg("g"))
      .def("center", &HolContext::center)
      .def("elements", &HolContext::elements)
      .def("format", &HolContext::format, py::arg("g"))
      .def("apply",
           [](const HolContext& ctx, const AutData& alpha, const HolElem& g) {
             return apply(ctx, alpha, g);
           },
           py::arg("alpha"), py::arg("g"))
      .def("compose",
           [](const HolContext& ctx, const AutData& alpha,
              const AutData& beta) { return compose(ctx, alpha, beta); },
           py::arg("alpha"), py::arg("beta"))
      .def("psi",
           [](const HolContext& ctx, const AutData& alpha) {
             return psi(ctx, alpha);
           },
           py::arg("alpha"))
      .def("psi_inverse",
           [](const HolContext& ctx, const HolElem& g) {
             return psi_inverse(ctx, g);
           },
           py::arg("g"))
      .def("validate_automorphism",
           [](const HolContext& ctx, const AutData& alpha) {
             const VerificationOutcome out = validate_automorphism(ctx, alpha);
             return py::make_tuple(out.ok, out.witness);
           },
           py::arg("alpha"))
      .def("inner_automorphism",
           [](const HolContext& ctx, const HolElem& g) {
             return inner_automorphism(ctx, g);
           },
           py::arg("g"))
      .def("automorphisms",
           [](const HolContext& ctx) { return enumerate_aut(ctx); })
      .def("__repr__", [](const HolContext& ctx) {
        std::ostringstream os;
        os << "Context(n=" << ctx.n() << ", k=" << ctx.k() << ")";
        return os.str();
      });

  m.def(
      "make_context",
      [](std::uint64_t n, std::optional<std::uint64_t> k) {
        return HolContext::make(n, k);
      },
      py::arg("n"), py::arg("k") = std::nullopt);

  py::class_<CayleyGroup>(m, "CayleyGroup")
      .def_property_readonly("size", &CayleyGroup::size)
      .def_property_readonly("identity", &CayleyGroup::identity)
      .def_property_readonly("generators", &CayleyGroup::generators)
      .def_property_readonly("labels", &CayleyGroup::labels)
      .def("mul", &CayleyGroup::mul, py::arg("i"), py::arg("j"))
      .def("inverse", &CayleyGroup::inverse, py::arg("i"))
      .def("element_order", &CayleyGroup::element_order, py::arg("i"))
      .def("to_json", [](const CayleyGroup& g) { return g.to_json().dump(); })
      .def_static("from_json", [](const std::string& text) {
        return CayleyGroup::from_json(nlohmann::json::parse(text));
      });

  m.def("holomorph_table", &build_holomorph_table, py::arg("ctx"));
  m.def("dihedral_table", &build_dihedral, py::arg("n"));
  m.def("general_holomorph_table", &build_general_holomorph, py::arg("n"));
  m.def("center_indices", &center_bruteforce, py::arg("g"));

  m.def(
      "bruteforce_automorphisms",
      [](const CayleyGroup& g, std::uint64_t expected_order,
         const std::vector<std::vector<std::int32_t>>& relators) {
        Presentation pres;
        pres.generator_count = g.generators().size();
        pres.relators = relators;
        pres.expected_order = expected_order;
        std::vector<std::vector<std::int32_t>> out;
        for (const GroupHom& hom :
             enumerate_automorphisms_bruteforce(g, pres)) {
          out.push_back(hom.mapping());
        }
        return out;
      },
      py::arg("g"), py::arg("expected_order"), py::arg("relators"),
      "All automorphisms of g as index mappings; relators are words over "
      "the designated generators (letter +i is generator i-1, -i its "
      "inverse).");

  m.def(
      "verify_report",
      [](std::uint64_t n, std::optional<std::vector<std::string>> suites,
         std::optional<std::uint64_t> k, std::uint64_t seed,
         std::uint64_t max_order) {
        VerifyOptions options;
        options.k = k;
        options.seed = seed;
        options.max_order = max_order;
        return run_suites(n, suites_from_names(suites), options)
            .to_json()
            .dump();
      },
      py::arg("n"), py::arg("suites") = std::nullopt,
      py::arg("k") = std::nullopt, py::arg("seed") = 0,
      py::arg("max_order") = 2000,
      "Run verification suites and return the JSON report as a string.");

  m.def("factorize", [](std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (const PrimePower& pp : factorize(m)) {
      out.emplace_back(pp.prime, pp.exponent);
    }
    return out;
  });
  m.def("totient", &totient, py::arg("m"));
  m.def("mod_pow", &mod_pow, py::arg("base"), py::arg("exp"), py::arg("m"));
  m.def("multiplicative_order", &multiplicative_order, py::arg("k"),
        py::arg("m"));
  m.def("least_primitive_root", &least_primitive_root, py::arg("m"));
  m.def("lemma23_holds", &lemma23_holds, py::arg("k"), py::arg("p"),
        py::arg("e"));
  m.def(
      "lemma24_check",
      [](std::uint64_t k, std::uint64_t n) {
        const Lemma24Result r = lemma24_check(k, n);
        return py::make_tuple(r.p_divides_km1, r.gcd_n_km1,
                              r.geom_sum_mod_n);
      },
      py::arg("k"), py::arg("n"));
}
