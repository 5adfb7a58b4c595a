#include "holobound/bounds.hpp"
#include "holobound/chern.hpp"
#include "holobound/cli.hpp"
#include "holobound/error.hpp"
#include "holobound/group_table.hpp"
#include "holobound/hn_slopes.hpp"
#include "holobound/json_io.hpp"
#include "holobound/matrix_group.hpp"
#include "holobound/serre.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace holobound;

namespace {

// Module-lifetime Python objects below are heap-allocated and never freed.
// Numbers cross the boundary as Python int / fractions.Fraction, converted
// through their decimal text so nothing passes through a float.
Rational to_rational(const py::handle& x) {
  if (py::isinstance<py::float_>(x)) throw py::type_error("floats are not exact; pass int, str or Fraction");
  return parse_rational(py::str(x).cast<std::string>());
}

BigInt to_bigint(const py::handle& x) {
  if (!py::isinstance<py::int_>(x) && !py::isinstance<py::str>(x)) throw py::type_error("expected an integer");
  return parse_bigint(py::str(x).cast<std::string>());
}

py::object from_rational(const Rational& x) {
  static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_string(x));
}

py::object from_bigint(const BigInt& x) { return py::int_(py::str(to_string(x))); }

py::object from_json(const io::json& j) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

AmbientSpace ambient(const py::object& m, const py::object& beta, bool assume_beta_zero, int dim) {
  AmbientSpace amb;
  amb.dim = dim;
  amb.theta_top = to_bigint(m);
  amb.assume_beta_zero = assume_beta_zero;
  if (!beta.is_none()) {
    for (const auto& [k, v] : beta.cast<py::dict>()) amb.beta[to_bigint(k)] = to_rational(v);
  }
  amb.validate();
  return amb;
}

JordanMode jordan_mode(const std::string& mode, const py::object& a, const py::object& b,
                       const py::object& value, unsigned precision) {
  if (mode == "schur") return jordan::Schur{};
  if (mode == "weisfeiler") {
    if (a.is_none() || b.is_none()) throw py::value_error("weisfeiler mode needs a and b");
    return jordan::Weisfeiler{to_rational(a), to_rational(b), precision};
  }
  if (mode == "explicit") {
    if (value.is_none()) throw py::value_error("explicit mode needs value");
    return jordan::Explicit{to_bigint(value)};
  }
  throw py::value_error("mode must be schur, weisfeiler or explicit");
}

HNProfile profile(const py::iterable& factors) {
  HNProfile p;
  for (const auto& f : factors) {
    const auto pair = f.cast<py::tuple>();
    if (pair.size() != 2) throw py::value_error("factors are (rank, deg) pairs");
    p.factors.push_back({to_bigint(pair[0]), to_rational(pair[1])});
  }
  return p;
}

FieldPtr field(unsigned p, unsigned e) { return FiniteField::make(p, e); }

std::vector<FqMatrix> matrices(const FiniteField& f, const py::object& gens) {
  static const auto* dumps = new py::object(py::module_::import("json").attr("dumps"));
  return io::decode_matrices(f, io::json::parse((*dumps)(gens).cast<std::string>()));
}

std::optional<Rational> opt_rational(const py::object& x) {
  if (x.is_none()) return std::nullopt;
  return to_rational(x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact bounds for stable bundles and finite holonomy groups";

  // Leaked on purpose: Python objects must not be destroyed after finalization.
  static auto* error = new py::exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = *error;
      py::object instance = exc(e.code(), e.what());
      instance.attr("code") = e.code();
      instance.attr("kind") = e.kind() == ErrorKind::domain ? "domain" : "resource";
      PyErr_SetObject(error->ptr(), instance.ptr());
    }
  });

  py::class_<ChernData>(m, "ChernData")
      .def(py::init([](const py::object& rank, const py::object& deg, const py::object& c1sq,
                       const py::object& c2) {
             ChernData e{to_bigint(rank), to_rational(deg), to_rational(c1sq), to_rational(c2)};
             validate(e);
             return e;
           }),
           py::arg("rank") = 1, py::arg("deg") = 0, py::arg("c1sq") = 0, py::arg("c2") = 0)
      .def_property_readonly("rank", [](const ChernData& e) { return from_bigint(e.rank); })
      .def_property_readonly("deg", [](const ChernData& e) { return from_rational(e.deg); })
      .def_property_readonly("c1sq", [](const ChernData& e) { return from_rational(e.c1sq); })
      .def_property_readonly("c2", [](const ChernData& e) { return from_rational(e.c2); })
      .def_property_readonly("is_zero_object", &ChernData::is_zero_object)
      .def("__eq__", [](const ChernData& a, const ChernData& b) { return a == b; })
      .def("__repr__", [](const ChernData& e) {
        return "ChernData(" + to_string(e.rank) + ", " + to_string(e.deg) + ", " + to_string(e.c1sq) + ", " +
               to_string(e.c2) + ")";
      });

  m.def("slope", [](const ChernData& e) { return from_rational(slope(e)); });
  m.def("discriminant", [](const ChernData& e) { return from_rational(discriminant(e)); });
  m.def("secondary_slope", [](const ChernData& e) { return from_rational(secondary_slope(e)); });
  m.def("direct_sum", [](const ChernData& a, const ChernData& b, const py::object& cross) {
    return direct_sum(a, b, opt_rational(cross));
  }, py::arg("a"), py::arg("b"), py::arg("cross") = py::none());
  m.def("tensor", [](const ChernData& a, const ChernData& b, const py::object& cross) {
    return tensor(a, b, opt_rational(cross));
  }, py::arg("a"), py::arg("b"), py::arg("cross") = py::none());
  m.def("dual", &dual);
  m.def("sym_power", &sym_power, py::arg("e"), py::arg("n"));
  m.def("wedge_power", &wedge_power, py::arg("e"), py::arg("n"));
  m.def("sym_rank", [](const py::object& r, const py::object& n) {
    return from_bigint(sym_rank(to_bigint(r), to_bigint(n)));
  });

  m.def("jordan_constant", [](unsigned r, const std::string& mode, const py::object& a, const py::object& b,
                              const py::object& value, unsigned precision) {
    return from_bigint(jordan_constant(r, jordan_mode(mode, a, b, value, precision)));
  }, py::arg("r"), py::arg("mode") = "schur", py::arg("a") = py::none(), py::arg("b") = py::none(),
     py::arg("value") = py::none(), py::arg("precision") = 256);
  m.def("langer_index", [](const ChernData& e, const py::object& delta, const py::object& m_top,
                           const py::object& beta, bool assume_beta_zero, int dim) {
    const AmbientSpace amb = ambient(m_top, beta, assume_beta_zero, dim);
    Rational d;
    if (!delta.is_none()) {
      d = to_rational(delta);
    } else if (dim == 2) {
      d = discriminant(e);
    } else {
      throw py::value_error("delta is required when dim != 2");
    }
    return from_bigint(langer_index(e, amb, d));
  }, py::arg("e"), py::arg("delta") = py::none(), py::arg("m") = 1, py::arg("beta") = py::none(),
     py::arg("assume_beta_zero") = false, py::arg("dim") = 2);
  m.def("ell_bound", [](unsigned r, const py::object& c, const py::object& m_top, const py::object& beta,
                        bool assume_beta_zero, const std::string& mode, const py::object& value,
                        const std::string& variant) {
    const EllVariant v = variant == "normalized" ? EllVariant::normalized : EllVariant::as_printed;
    if (variant != "normalized" && variant != "as_printed") throw py::value_error("unknown variant");
    const EllBound b = ell_bound(r, to_rational(c), ambient(m_top, beta, assume_beta_zero, 2),
                                 jordan_mode(mode, py::none(), py::none(), value, 256), v);
    return from_bigint(b.value);
  }, py::arg("r"), py::arg("c"), py::arg("m") = 1, py::arg("beta") = py::none(),
     py::arg("assume_beta_zero") = false, py::arg("mode") = "schur", py::arg("value") = py::none(),
     py::arg("variant") = "as_printed");

  m.def("validate_profile", [](const py::iterable& f) {
    const ProfileValidity v = validate_profile(profile(f));
    return py::make_tuple(v.valid, v.first_violation ? py::object(py::int_(*v.first_violation)) : py::none());
  });
  m.def("mu_max", [](const py::iterable& f) { return from_rational(mu_max(profile(f))); });
  m.def("pushforward_bound_check", [](const py::object& w, const py::object& degree, const py::iterable& f,
                                      bool separable) {
    return pushforward_bound_check(to_rational(w), {to_bigint(degree), separable}, profile(f));
  }, py::arg("w_slope"), py::arg("degree"), py::arg("profile"), py::arg("separable") = true);
  m.def("etale_criterion", [](const py::iterable& f) { return std::string(to_string(etale_criterion(profile(f)))); });
  m.def("genuinely_ramified_criterion", [](const py::iterable& f) {
    return std::string(to_string(genuinely_ramified_criterion(profile(f))));
  });
  m.def("frobenius_degree_scale", [](const py::object& deg, const py::object& p, unsigned n) {
    return from_rational(frobenius_degree_scale(to_rational(deg), to_bigint(p), n));
  });

  m.def("h0_plane", [](const py::object& d) { return from_bigint(h0_plane(to_bigint(d))); });
  m.def("serre_plan", [](const py::object& m_degree, const py::object& floor) {
    return from_json(io::encode(plan({to_bigint(m_degree)}, to_bigint(floor))));
  }, py::arg("m_degree"), py::arg("floor") = 0);
  m.def("alpha_of_curve", [](const py::object& d, const py::object& floor) {
    return from_json(io::encode(alpha_of_curve(to_bigint(d), to_bigint(floor))));
  }, py::arg("curve_degree"), py::arg("floor") = 0);
  m.def("check_assumptions", [](const py::dict& p, const py::object& m_degree) {
    static const auto* dumps = new py::object(py::module_::import("json").attr("dumps"));
    const SerrePlan sp = io::decode_plan(io::json::parse((*dumps)(p).cast<std::string>()));
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& c : check_assumptions(sp, {to_bigint(m_degree)})) out.emplace_back(c.condition, c.holds);
    return out;
  });

  m.def("sl2_order", [](unsigned p, unsigned e) { return sl2_generate(field(p, e)).order(); },
        py::arg("p"), py::arg("e") = 1);
  m.def("burnside_irreducible", [](unsigned p, unsigned e, const py::object& gens) {
    const FieldPtr f = field(p, e);
    const auto ms = matrices(*f, gens);
    if (ms.empty()) throw py::value_error("at least one generator is required");
    const BurnsideResult b = burnside_irreducible(*f, ms.front().dim, ms);
    return py::dict(py::arg("span_dim") = b.span_dim, py::arg("full_dim") = b.full_dim,
                    py::arg("irreducible") = b.irreducible);
  }, py::arg("p"), py::arg("e"), py::arg("gens"));
  m.def("holonomy_order", [](unsigned p, unsigned e, const py::object& gens) {
    const FieldPtr f = field(p, e);
    FreeGroupRep rep{f, 0, matrices(*f, gens)};
    if (rep.images.empty()) throw py::value_error("at least one generator is required");
    rep.dim = rep.images.front().dim;
    return holonomy(rep).group.order();
  }, py::arg("p"), py::arg("e"), py::arg("gens"));
  m.def("jordan_verify", [](const std::string& name) {
    const FiniteGroupTable g = named_group(name);
    const unsigned r = natural_dimension(name);
    return from_json(io::encode(jordan_verify(g, r, jordan_constant(r, jordan::Schur{})), g));
  }, py::arg("group"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
