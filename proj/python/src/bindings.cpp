#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "charp/cli.hpp"
#include "charp/diffops.hpp"
#include "charp/error.hpp"
#include "charp/jacobian.hpp"
#include "charp/orderloci.hpp"
#include "charp/parse.hpp"

namespace py = pybind11;
using namespace charp;

namespace {

// Python-side handle; keeps the shared ring alive.
struct PyRing {
  Ring ring;
};

PyRing make_ring(std::uint32_t p, std::vector<std::string> base, std::vector<std::string> vars,
                 const std::string& order) {
  auto tag = parse_order(order);
  if (!tag) throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + order + "'");
  return PyRing{RingContext::create(p, std::move(base), std::move(vars), *tag)};
}

Polynomial as_poly(const PyRing& r, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>(), r.ring);
  return obj.cast<Polynomial>();
}

std::vector<Polynomial> as_polys(const PyRing& r, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_poly_list(obj.cast<std::string>(), r.ring);
  std::vector<Polynomial> out;
  for (const auto& item : obj) out.push_back(as_poly(r, item));
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Exactly one of point / prime_gens must be given.
PrimeSpec prime_from(const PyRing& r, const std::optional<std::string>& point,
                     const py::object& prime_gens, bool assert_prime) {
  if (point.has_value() == !prime_gens.is_none())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of point or prime_gens");
  if (point) return RationalPoint{parse_point(*point, r.ring)};
  return PrimeGenerators{Ideal(r.ring, as_polys(r, prime_gens)), assert_prime};
}

py::object order_value(const OrderValue& v) {
  if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(v.value());
}

}  // namespace

PYBIND11_MODULE(_charp, m) {
  m.doc() = "Regularity, Hasse derivatives and order loci over F_p(v)";

  static py::exception<Error> charp_error(m, "CharpError");
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = py::handle(charp_error.ptr())(py::str(e.what()));
      exc.attr("kind") = error_name(e.code());
      exc.attr("input_error") = is_input_error(e.code());
      PyErr_SetObject(charp_error.ptr(), exc.ptr());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__hash__", [](const Polynomial& f) { return std::hash<std::string>{}(f.to_string()); })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, std::uint64_t e) { return pow(a, e); })
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree);

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("p"), py::arg("base") = std::vector<std::string>{},
           py::arg("vars") = std::vector<std::string>{}, py::arg("order") = "grevlex")
      .def_property_readonly("p", [](const PyRing& r) { return r.ring->modulus(); })
      .def_property_readonly("basis", [](const PyRing& r) {
        std::vector<std::string> names;
        for (const auto& b : r.ring->basis()) names.push_back(b.name);
        return names;
      })
      .def("poly", [](const PyRing& r, const std::string& s) { return parse_poly(s, r.ring); })
      .def("polys", [](const PyRing& r, const std::string& s) { return parse_poly_list(s, r.ring); })

      .def("hasse", [](const PyRing& r, py::object f, const std::string& beta) {
        return hasse(as_poly(r, f), parse_multi_index(beta, r.ring));
      })
      .def("taylor_hasse", [](const PyRing& r, py::object f, const std::string& beta) {
        return taylor_hasse(as_poly(r, f), parse_multi_index(beta, r.ring));
      })
      .def("partial", [](const PyRing& r, py::object f, const std::string& name) {
        return partial(as_poly(r, f), name);
      })
      .def("p_power_decompose", [](const PyRing& r, py::object f) {
        std::map<std::string, Polynomial> out;
        for (auto& [alpha, g] : p_power_decompose(as_poly(r, f)))
          out.emplace(format_multi_index(alpha, r.ring), g);
        return out;
      })

      .def("groebner", [](const PyRing& r, py::object gens, const std::string& order) {
        auto tag = parse_order(order);
        if (!tag) throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + order + "'");
        return buchberger(Ideal(r.ring, as_polys(r, gens)), *tag).polynomials();
      }, py::arg("gens"), py::arg("order") = "grevlex")
      .def("member", [](const PyRing& r, py::object f, py::object gens) {
        return member(as_poly(r, f), Ideal(r.ring, as_polys(r, gens)));
      })
      .def("ideal_equal", [](const PyRing& r, py::object a, py::object b) {
        return ideal_equal(Ideal(r.ring, as_polys(r, a)), Ideal(r.ring, as_polys(r, b)));
      })
      .def("dimension", [](const PyRing& r, py::object gens) {
        return dimension(Ideal(r.ring, as_polys(r, gens)));
      })

      .def("singular_locus", [](const PyRing& r, py::object gens, std::size_t height) {
        return singular_locus(as_polys(r, gens), height).ideal.generators();
      }, py::arg("gens"), py::arg("r"))
      .def("regularity_test", [](const PyRing& r, py::object gens, std::size_t height,
                                 std::optional<std::string> point, py::object prime_gens,
                                 bool assert_prime) {
        auto rep = regularity_test(as_polys(r, gens), prime_from(r, point, prime_gens, assert_prime),
                                   height);
        py::dict d;
        d["rank"] = rep.rank_mod_prime;
        d["r"] = rep.r;
        d["regular"] = rep.regular;
        if (rep.witness) {
          d["witness_rows"] = rep.witness->rows;
          d["witness_cols"] = rep.witness->cols;
        } else {
          d["witness_rows"] = py::none();
          d["witness_cols"] = py::none();
        }
        return d;
      }, py::arg("gens"), py::arg("r"), py::kw_only(), py::arg("point") = py::none(),
         py::arg("prime_gens") = py::none(), py::arg("assert_prime") = false)
      .def("refit", [](const PyRing& r, py::object params, std::optional<std::string> point,
                       py::object prime_gens, bool assert_prime) {
        auto fit = refit_p_basis(as_polys(r, params), prime_from(r, point, prime_gens, assert_prime));
        std::vector<std::string> removed, kept;
        for (const auto& b : fit.removed) removed.push_back(b.name);
        for (const auto& b : fit.kept) kept.push_back(b.name);
        py::dict d;
        d["removed"] = removed;
        d["kept"] = kept;
        d["localizer"] = fit.localizer;
        return d;
      }, py::arg("params"), py::kw_only(), py::arg("point") = py::none(),
         py::arg("prime_gens") = py::none(), py::arg("assert_prime") = false)

      .def("order_at", [](const PyRing& r, py::object f, std::optional<std::string> point,
                          py::object prime_gens, bool assert_prime) {
        return order_value(order_at(as_poly(r, f), prime_from(r, point, prime_gens, assert_prime)));
      }, py::arg("f"), py::kw_only(), py::arg("point") = py::none(),
         py::arg("prime_gens") = py::none(), py::arg("assert_prime") = false)
      .def("ideal_order_at", [](const PyRing& r, py::object gens, std::optional<std::string> point,
                                py::object prime_gens, bool assert_prime) {
        return order_value(ideal_order_at(Ideal(r.ring, as_polys(r, gens)),
                                          prime_from(r, point, prime_gens, assert_prime)));
      }, py::arg("gens"), py::kw_only(), py::arg("point") = py::none(),
         py::arg("prime_gens") = py::none(), py::arg("assert_prime") = false)
      .def("oracle_order_at_point", [](const PyRing& r, py::object f, const std::string& point) {
        return order_value(oracle_order_at_point(as_poly(r, f), parse_point(point, r.ring)));
      })
      .def("diff_saturate", [](const PyRing& r, py::object gens, std::uint64_t n) {
        return diff_saturate(Ideal(r.ring, as_polys(r, gens)), n).generators();
      })
      .def("order_locus", [](const PyRing& r, py::object gens, std::uint64_t n, bool reduce) {
        return order_locus(Ideal(r.ring, as_polys(r, gens)), n, reduce).generators();
      }, py::arg("gens"), py::arg("n"), py::arg("reduce") = false)
      .def("stratify", [](const PyRing& r, py::object gens, std::uint64_t n_max) {
        std::vector<std::vector<Polynomial>> levels;
        for (const auto& level : stratify(Ideal(r.ring, as_polys(r, gens)), n_max))
          levels.push_back(level.ideal.generators());
        return levels;
      });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one command line (without the program name); returns (exit_code, stdout, stderr).");
}
