#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abc/error.hpp"
#include "abc/families.hpp"
#include "abc/power.hpp"
#include "abc/survey.hpp"
#include "abc/triple.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value.set_str(py::str(src).cast<std::string>(), 10);
    return true;
  }
  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using abc::Int;

py::list factor_list(const abc::Factorization& f) {
  py::list out;
  for (const auto& pp : f.entries()) out.append(py::make_tuple(pp.prime, pp.exponent));
  return out;
}

abc::FamilyId family_id(const std::string& name) {
  const auto id = abc::parse_family(name);
  if (!id) throw py::value_error("unknown family " + name);
  return *id;
}

py::dict certificate_dict(const abc::FamilyCertificate& c) {
  py::dict d;
  d["family"] = abc::family_name(c.family);
  d["params"] = c.params.to_string(c.family);
  d["k"] = c.k;
  d["base"] = c.base;
  d["exponent"] = c.exponent;
  d["c"] = c.c;
  d["side"] = c.side == abc::WitnessSide::CMinusOne ? "minus" : "plus";
  d["witness_m"] = c.witness_m;
  return d;
}

py::tuple unit(const abc::UnitTriple& t) { return py::make_tuple(Int(1), t.b(), t.c()); }

abc::DivisorSide side_of(const std::string& s) {
  if (s == "minus") return abc::DivisorSide::Minus;
  if (s == "plus") return abc::DivisorSide::Plus;
  throw py::value_error("side must be 'minus' or 'plus'");
}

}  // namespace

PYBIND11_MODULE(abctriples, m) {
  m.doc() = "abc triples (1, c - 1, c): verification, power classification, families and surveys";

  auto base = py::register_exception<abc::Error>(m, "AbcError", PyExc_RuntimeError);
  py::register_exception<abc::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<abc::HypothesisViolated>(m, "HypothesisViolated", base.ptr());
  py::register_exception<abc::NotAbc>(m, "NotAbc", base.ptr());
  py::register_exception<abc::ParseError>(m, "ParseError", base.ptr());

  m.def("factorize", [](const Int& n) { return factor_list(abc::factorize(n)); }, py::arg("n"),
        "[(p, e), ...] with p increasing");
  m.def("radical", [](const Int& n) { return abc::radical(n); }, py::arg("n"));
  m.def("cosocle", [](const Int& n) { return abc::cosocle(n); }, py::arg("n"));

  m.def(
      "verify",
      [](const Int& c) {
        const auto ev = abc::verify_unit(c);
        py::dict d;
        d["is_abc"] = ev.is_abc;
        d["rad_c"] = ev.rad_c;
        d["rad_c_minus_1"] = ev.rad_c_minus_1;
        d["cosocle_c"] = ev.cosocle_c;
        d["cosocle_c_minus_1"] = ev.cosocle_c_minus_1;
        return d;
      },
      py::arg("c"), "Evidence for (1, c - 1, c)");
  m.def("quality", [](const Int& a, const Int& b, const Int& c) { return abc::quality(abc::GeneralTriple(a, b, c)); },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "power_factorization",
      [](const Int& c, std::uint64_t k) {
        const auto prof = abc::power_factorization(c, k);
        py::dict d;
        for (const auto& [p, e] : prof.entries())
          d[py::cast(p)] = py::make_tuple(e.order, e.f, e.w);
        return d;
      },
      py::arg("c"), py::arg("k"), "{p: (ord_p(c), f_p, w_p)} for c^k - 1");
  m.def(
      "classify",
      [](const Int& c, std::uint64_t k) {
        const auto r = abc::classify_power(c, k);
        py::dict d;
        d["verdict"] = abc::to_string(r.verdict);
        d["condition"] = abc::to_string(r.condition);
        d["evidence"] = r.describe();
        return d;
      },
      py::arg("c"), py::arg("k"), "Whether (1, c^k - 1, c^k) is abc");

  m.def("families", [] {
    std::vector<std::string> out;
    for (auto id : abc::kAllFamilies) out.push_back(abc::family_name(id));
    return out;
  });
  m.def(
      "enumerate_family",
      [](const std::string& name, const Int& limit) {
        const auto certs = abc::enumerate_family(family_id(name), limit);
        py::list out;
        for (const auto& c : certs) out.append(certificate_dict(c));
        return out;
      },
      py::arg("family"), py::arg("limit"));
  m.def(
      "generate",
      [](const std::string& name, const Int& n, const Int& p, const Int& mod, std::uint64_t j, std::uint64_t k) {
        return certificate_dict(abc::generate(family_id(name), abc::FamilyParams{n, p, mod, j}, k));
      },
      py::arg("family"), py::arg("n") = 0, py::arg("p") = 0, py::arg("m") = 0, py::arg("j") = 0, py::arg("k") = 1);

  m.def("transfer_power", [](const Int& c, std::uint64_t k) { return unit(abc::transfer_power(c, k)); },
        py::arg("c"), py::arg("k"));
  m.def("transfer_cube", [](const Int& c) { return unit(abc::transfer_cube(c)); }, py::arg("c"));
  m.def("transfer_square", [](const Int& c) { return unit(abc::transfer_square(c)); }, py::arg("c"));

  m.def(
      "scan",
      [](std::uint64_t limit) {
        std::vector<abc::TripleRecord> recs;
        {
          py::gil_scoped_release release;
          recs = abc::scan_unit_triples(limit);
        }
        py::list out;
        for (const auto& r : recs) out.append(py::make_tuple(r.a, r.b, r.c, r.quality));
        return out;
      },
      py::arg("limit"), "[(a, b, c, quality)] for unit abc triples with c < limit");
  m.def(
      "least_divisor",
      [](const Int& c, const std::string& side) { return abc::least_divisor_search(c, side_of(side)); },
      py::arg("c"), py::arg("side") = "minus");
  m.def(
      "analyze",
      [](std::uint64_t limit) {
        std::string json;
        {
          py::gil_scoped_release release;
          json = abc::report_to_json(abc::analyze(abc::scan_unit_triples(limit), Int(limit)));
        }
        return py::module_::import("json").attr("loads")(json);
      },
      py::arg("limit"), "Survey report for the scanned triples below limit");
  m.def(
      "power_form_survey",
      [](const Int& limit, unsigned threads) {
        abc::PowerFormCounts r;
        {
          py::gil_scoped_release release;
          r = abc::power_form_survey(limit, threads);
        }
        py::dict d;
        d["minus"] = r.minus;
        d["plus"] = r.plus;
        d["both"] = r.both;
        d["all"] = r.all;
        d["plus_odd"] = r.plus_odd;
        return d;
      },
      py::arg("limit"), py::arg("threads") = 1);
}
