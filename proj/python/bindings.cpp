#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cubicfields/cubic.hpp"
#include "cubicfields/errors.hpp"
#include "cubicfields/expression.hpp"
#include "cubicfields/gaussian.hpp"
#include "cubicfields/identities.hpp"
#include "cubicfields/roots.hpp"
#include "cubicfields/sequences.hpp"

namespace py = pybind11;
namespace cf = cubicfields;

namespace {

// Real inputs arrive as expression text ("-3/2", "3*sqrt(2)") and outputs leave
// as fixed-point strings, so no precision is lost crossing into Python.

cf::Scalar real(const std::string& text, int digits) {
  return cf::parse_scalar(text, cf::PrecisionPolicy(digits).working_digits());
}

std::vector<std::string> fixed(const cf::ZeroTriple& zt, int digits) {
  return {zt[0].to_fixed(digits), zt[1].to_fixed(digits), zt[2].to_fixed(digits)};
}

py::int_ big(const mpz_class& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

cf::Cubic cubic_from(const std::vector<std::string>& coeffs, int digits) {
  if (coeffs.size() != 4) throw std::invalid_argument("expected four coefficients a3, a2, a1, a0");
  return cf::Cubic(real(coeffs[0], digits), real(coeffs[1], digits), real(coeffs[2], digits), real(coeffs[3], digits));
}

py::dict report(const cf::IdentityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["lhs"] = r.lhs.to_fixed(r.digits);
  d["rhs"] = r.rhs.to_fixed(r.digits);
  d["residual"] = r.residual.is_zero() ? std::string("0") : r.residual.to_sci(3);
  d["digits"] = r.digits;
  d["passed"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ramanujan cubic polynomials, Gaussian periods and cube-root identities";

  static py::exception<cf::Error> error(m, "CubicFieldsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cf::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(cf::to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("scp_zeros", [](const std::string& h, int digits) { return fixed(cf::scp_zeros(real(h, digits), cf::PrecisionPolicy(digits)), digits); },
        py::arg("h"), py::arg("digits") = 50, "Zeros of x^3 - h x^2 - (h+3) x - 1, descending.");
  m.def("rcp_zeros",
        [](const std::string& h, const std::string& s, int digits) {
          return fixed(cf::rcp_zeros({real(h, digits), real(s, digits)}, cf::PrecisionPolicy(digits)), digits);
        },
        py::arg("h"), py::arg("s"), py::arg("digits") = 50, "Zeros of x^3 + hs x^2 - (h+3) s^2 x + s^3, descending.");
  m.def("solve_cubic",
        [](const std::vector<std::string>& coeffs, int digits) {
          return fixed(cf::solve_cubic_trig(cubic_from(coeffs, digits), cf::PrecisionPolicy(digits)), digits);
        },
        py::arg("coeffs"), py::arg("digits") = 50, "Trigonometric zeros of a3 x^3 + a2 x^2 + a1 x + a0.");
  m.def("oracle_roots",
        [](const std::vector<std::string>& coeffs, int digits) {
          return fixed(cf::oracle_roots(cubic_from(coeffs, digits), cf::PrecisionPolicy(digits)), digits);
        },
        py::arg("coeffs"), py::arg("digits") = 50);
  m.def("is_rcp",
        [](const std::vector<std::string>& coeffs, int digits) {
          return cf::is_rcp(cubic_from(coeffs, digits).monic(), cf::PrecisionPolicy(digits));
        },
        py::arg("coeffs"), py::arg("digits") = 50);
  m.def("rcp_through",
        [](const std::string& alpha, const std::string& s, int digits) {
          return cf::rcp_through(real(alpha, digits), real(s, digits)).h.to_string(digits);
        },
        py::arg("alpha"), py::arg("s"), py::arg("digits") = 50, "h of the RCP with scale s having alpha as a zero.");

  m.def("cubic_cosets", &cf::cubic_cosets, py::arg("p"));
  m.def("gaussian_periods",
        [](std::uint64_t p, int digits) {
          const cf::PeriodSet ps = cf::gaussian_periods(p, cf::PrecisionPolicy(digits));
          py::dict d;
          d["p"] = ps.p;
          d["g"] = ps.g;
          d["cosets"] = ps.cosets;
          d["values"] = std::vector<std::string>{ps.values[0].to_fixed(digits), ps.values[1].to_fixed(digits),
                                                 ps.values[2].to_fixed(digits)};
          d["h"] = ps.h ? py::object(py::int_(*ps.h)) : py::object(py::none());
          d["L"] = ps.L ? py::object(py::int_(*ps.L)) : py::object(py::none());
          return d;
        },
        py::arg("p"), py::arg("digits") = 50);
  m.def("shanks_primes",
        [](std::uint64_t limit) {
          std::vector<std::pair<long, std::uint64_t>> out;
          for (const auto& sp : cf::shanks_primes(limit)) out.emplace_back(sp.h, sp.p);
          return out;
        },
        py::arg("limit"), "(h, p) pairs with p = h^2 + 3h + 9 prime, h >= -1, 3 not dividing h.");
  m.def("period_minimal_poly",
        [](long h) {
          const cf::Cubic g = cf::period_minimal_poly(h);
          std::vector<py::int_> out;
          for (const auto& c : g.coefficients()) out.push_back(big(c.exact().get_num()));
          return out;
        },
        py::arg("h"), "Integer coefficients, leading first.");
  m.def("period_differences",
        [](std::uint64_t p, int digits) {
          const cf::DeltaSet ds = cf::period_differences(p, cf::PrecisionPolicy(digits));
          py::dict d;
          d["h"] = ds.h;
          d["deltas"] = std::vector<std::string>{ds.deltas[0].to_fixed(digits), ds.deltas[1].to_fixed(digits),
                                                 ds.deltas[2].to_fixed(digits)};
          d["orientation"] = ds.orientation;
          d["closed_form_sign"] = ds.closed_form_sign;
          return d;
        },
        py::arg("p"), py::arg("digits") = 50);

  m.def("ramanujan_check",
        [](const std::string& h, const std::string& s, int digits) {
          return report(cf::ramanujan_cbrt_sum_check(real(h, digits), real(s, digits), digits));
        },
        py::arg("h"), py::arg("s"), py::arg("digits") = 50);
  m.def("extended_check",
        [](const std::string& alpha, const std::string& s, int digits) {
          return report(cf::extended_identity_check(real(alpha, digits), real(s, digits), digits));
        },
        py::arg("alpha"), py::arg("s"), py::arg("digits") = 50);
  m.def("gauss_check", [](long h, int digits) { return report(cf::gauss_period_cbrt_identity(h, digits)); },
        py::arg("h"), py::arg("digits") = 50);
  m.def("verify_named", [](const std::string& name, int digits) { return report(cf::verify_named(name, digits)); },
        py::arg("name"), py::arg("digits") = 50);
  m.def("verify",
        [](const std::string& lhs, const std::string& rhs, int digits) {
          return report(cf::verify_expression(cf::parse_expression(lhs), cf::parse_expression(rhs), digits));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("digits") = 50);
  m.def("catalog", [] {
    std::vector<std::string> names;
    for (const auto& e : cf::identity_catalog()) names.emplace_back(e.name);
    return names;
  });
  m.def("canonical", [](const std::string& text) { return cf::print_expression(cf::parse_expression(text)); },
        py::arg("text"), "Parse and reprint an expression in canonical form.");

  m.def("trace_power_sum", [](long h, unsigned long k, unsigned long n) { return big(cf::trace_power_sum(h, k, n)); },
        py::arg("h"), py::arg("k"), py::arg("n"));
  m.def("a198636",
        [](unsigned long count) {
          std::vector<py::int_> out;
          for (const auto& t : cf::recurrence_terms(cf::a198636_spec(), count)) out.push_back(big(t));
          return out;
        },
        py::arg("count"));
  m.def("path_walks", [](unsigned long n, unsigned long l) { return big(cf::path_walks(n, l)); }, py::arg("n"),
        py::arg("length"));
  m.def("jefferey_check",
        [](unsigned long n_max, int digits) { return cf::jefferey_check(n_max, cf::PrecisionPolicy(digits)); },
        py::arg("n_max"), py::arg("digits") = 60);
}
