#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mobius/cohomology.hpp"
#include "mobius/errors.hpp"
#include "mobius/galois.hpp"
#include "mobius/incidence.hpp"
#include "mobius/io.hpp"
#include "mobius/selftest.hpp"

namespace py = pybind11;
using namespace mobius;
using io::Json;

namespace {

// Python sees posets and modules through these handles; everything else crosses as plain
// containers keyed by element name.
struct PyPoset {
  PosetPtr ptr;
};

struct PyModule {
  PosetModule module;
};

PyPoset poset_from_text(const std::string& text) { return {share(io::poset_from_json(Json::parse(text)))}; }

PyModule module_from_text(const std::string& text, const PyPoset* poset) {
  return {io::module_from_json(Json::parse(text), poset ? poset->ptr : nullptr)};
}

GrFunction function_from(const PyPoset& p, const std::map<std::string, long long>& values) {
  GrFunction f(p.ptr);
  for (const auto& [name, v] : values) f.set(p.ptr->index_of(name), Integer(std::to_string(v)));
  for (Element a = 0; a < p.ptr->size(); ++a)
    if (!values.contains(p.ptr->name(a))) throw ParseError("function has no value for '" + p.ptr->name(a) + "'");
  return f;
}

py::dict function_to(const GrFunction& f) {
  py::dict out;
  for (Element a = 0; a < f.poset().size(); ++a) out[py::str(f.poset().name(a))] = py::int_(py::str(f(a).get_str()));
  return out;
}

MonotoneMap map_from(const PyPoset& source, const PyPoset& target, const std::map<std::string, std::string>& values) {
  Json j;
  j["values"] = values;
  return io::map_from_json(j, source.ptr, target.ptr);
}

std::map<std::string, std::string> map_to(const MonotoneMap& f) {
  std::map<std::string, std::string> out;
  for (Element a = 0; a < f.source().size(); ++a) out[f.source().name(a)] = f.target().name(f(a));
  return out;
}

py::dict report_to(const CheckReport& r) {
  py::list items;
  for (const auto& item : r.items) {
    py::dict d;
    d["label"] = item.label;
    d["lhs"] = item.lhs;
    d["rhs"] = item.rhs;
    d["equal"] = item.equal;
    items.append(d);
  }
  py::dict out;
  out["passed"] = r.passed();
  out["items"] = items;
  return out;
}

py::dict cohomology_to(const CohomologyResult& r) {
  py::dict out;
  out["betti"] = r.betti;
  out["euler"] = py::int_(py::str(r.euler.get_str()));
  return out;
}

GaloisConnection connection_from(const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                                 const std::map<std::string, std::string>& g) {
  return {map_from(p, q, f), map_from(q, p, g)};
}

ElementSet names_to_set(const Poset& p, const std::vector<std::string>& names) {
  ElementSet z;
  for (const auto& n : names) z.push_back(p.index_of(n));
  std::sort(z.begin(), z.end());
  return z;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Möbius cohomology of poset modules";

  auto base = py::register_exception<Error>(m, "MobiusError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CycleError>(m, "CycleError", base.ptr());
  py::register_exception<FunctorialityError>(m, "FunctorialityError", base.ptr());
  py::register_exception<NotASpread>(m, "NotASpread", base.ptr());
  py::register_exception<NotMonotone>(m, "NotMonotone", base.ptr());
  py::register_exception<SizeCap>(m, "SizeCap", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyPoset>(m, "Poset")
      .def_static("from_json", &poset_from_text, py::arg("text"))
      .def("to_json", [](const PyPoset& p) { return io::poset_to_json(*p.ptr).dump(); })
      .def_property_readonly("elements", [](const PyPoset& p) { return p.ptr->names(); })
      .def_property_readonly("height", [](const PyPoset& p) { return p.ptr->height(); })
      .def("__len__", [](const PyPoset& p) { return p.ptr->size(); })
      .def("leq", [](const PyPoset& p, const std::string& a, const std::string& b) {
        return p.ptr->leq(p.ptr->index_of(a), p.ptr->index_of(b));
      })
      .def("covers", [](const PyPoset& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : p.ptr->covers()) out.emplace_back(p.ptr->name(a), p.ptr->name(b));
        return out;
      })
      .def("mobius", [](const PyPoset& p) {
        auto mu = mobius_recursive(p.ptr);
        py::dict out;
        for (Element a = 0; a < p.ptr->size(); ++a)
          for (Element b : from_mask(p.ptr->up_set(a)))
            out[py::make_tuple(p.ptr->name(a), p.ptr->name(b))] = py::int_(py::str(mu(a, b).get_str()));
        return out;
      })
      .def("__repr__", [](const PyPoset& p) { return "Poset(" + p.ptr->describe() + ")"; });

  py::class_<PyModule>(m, "Module")
      .def_static("from_json", &module_from_text, py::arg("text"), py::arg("poset") = nullptr)
      .def("to_json", [](const PyModule& x) { return io::module_to_json(x.module).dump(); })
      .def_property_readonly("poset", [](const PyModule& x) { return PyPoset{x.module.poset_ptr()}; })
      .def_property_readonly("field", [](const PyModule& x) { return x.module.field().name(); })
      .def_property_readonly("dims", [](const PyModule& x) {
        std::map<std::string, std::size_t> out;
        for (Element a = 0; a < x.module.poset().size(); ++a) out[x.module.poset().name(a)] = x.module.dim(a);
        return out;
      })
      .def("cohomology", [](const PyModule& x, const std::string& at) {
        return cohomology_to(mobius_cohomology(x.module.poset().index_of(at), x.module));
      }, py::arg("at"))
      .def("homology", [](const PyModule& x, const std::string& at) {
        return cohomology_to(mobius_homology(x.module.poset().index_of(at), x.module));
      }, py::arg("at"))
      .def("spread_cohomology", [](const PyModule& x, const std::vector<std::string>& spread) {
        return cohomology_to(cohomology(hom_complex(names_to_set(x.module.poset(), spread), x.module)));
      }, py::arg("spread"))
      .def("euler_check", [](const PyModule& x) {
        py::list out;
        for (const auto& item : euler_check(x.module)) {
          py::dict d;
          d["element"] = x.module.poset().name(item.element);
          d["inversion"] = py::int_(py::str(item.inversion.get_str()));
          d["euler"] = py::int_(py::str(item.euler.get_str()));
          d["ok"] = item.ok;
          out.append(d);
        }
        return out;
      })
      .def("resolution_exact", [](const PyModule& x) { return check_resolution_exact(x.module).ok; })
      .def("__repr__", [](const PyModule& x) {
        return "Module(" + x.module.poset().describe() + ", " + x.module.field().name() + ")";
      });

  m.def("upper_inversion", [](const PyPoset& p, const std::map<std::string, long long>& f) {
    return function_to(upper_inversion(function_from(p, f)));
  });
  m.def("lower_inversion", [](const PyPoset& p, const std::map<std::string, long long>& f) {
    return function_to(lower_inversion(function_from(p, f)));
  });

  m.def("enumerate_galois", [](const PyPoset& p, const PyPoset& q, std::size_t cap) {
    std::vector<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>> out;
    for (const auto& c : enumerate_connections(p.ptr, q.ptr, cap)) out.emplace_back(map_to(c.left()), map_to(c.right()));
    return out;
  }, py::arg("p"), py::arg("q"), py::arg("cap") = kEnumerationCap);

  m.def("is_galois_connection", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                                   const std::map<std::string, std::string>& g) {
    return verify_connection(map_from(p, q, f), map_from(q, p, g)).ok;
  });
  m.def("rota_classical", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                             const std::map<std::string, std::string>& g) {
    return report_to(rota_classical_check(connection_from(p, q, f, g)));
  });
  m.def("rota_inversion", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                             const std::map<std::string, std::string>& g, const std::map<std::string, long long>& n) {
    return report_to(rota_inversion_check(connection_from(p, q, f, g), function_from(q, n)));
  });
  m.def("rota_ext", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                       const std::map<std::string, std::string>& g, const PyModule& n, const std::string& at) {
    return report_to(rota_ext_check(connection_from(p, q, f, g), n.module, p.ptr->index_of(at)));
  });
  m.def("functor_equalities", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                                 const std::map<std::string, std::string>& g, const PyModule& n_on_q,
                                 const PyModule& m_on_p) {
    return report_to(check_functor_equalities(connection_from(p, q, f, g), n_on_q.module, m_on_p.module));
  });
  m.def("adjunctions", [](const PyPoset& p, const PyPoset& q, const std::map<std::string, std::string>& f,
                          const PyModule& m_on_p, const PyModule& n_on_q) {
    return report_to(adjunction_dim_check(map_from(p, q, f), m_on_p.module, n_on_q.module));
  });

  m.def("selftest", [](std::uint64_t seed, std::size_t trials, std::size_t jobs) {
    SelftestReport report;
    {
      py::gil_scoped_release release;
      report = run_selftest({seed, trials, jobs});
    }
    return selftest_to_json(report).dump();
  }, py::arg("seed") = 42, py::arg("trials") = 200, py::arg("jobs") = 1);
}
