#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotdiff/chain.hpp"
#include "knotdiff/group.hpp"
#include "knotdiff/invariants.hpp"
#include "knotdiff/json_io.hpp"
#include "knotdiff/moves.hpp"
#include "knotdiff/system.hpp"

namespace py = pybind11;
using namespace knotdiff;

namespace {

// (coeff, word, class) triples in canonical order
using PyTerms = std::vector<std::tuple<long long, std::string, std::string>>;

ChainElement chain_from_terms(int degree, const PyTerms& terms) {
  ChainElement c;
  c.degree = degree;
  for (const auto& [coeff, word, cls] : terms)
    c.terms.add({Word(word).letters(), cls}, Int(coeff));
  check_chain(c);
  return c;
}

PyTerms terms_out(const ChainElement& c) {
  PyTerms out;
  for (const auto& [wc, coeff] : c.terms.terms())
    out.emplace_back(coeff.convert_to<long long>(), wc.word, wc.cls);
  return out;
}

py::dict quotient_dict(const QuotientResult& q) {
  py::dict d;
  d["basis_size"] = q.rows;
  d["rank_span"] = q.rank_a;
  d["rank_boundaries"] = q.rank_b;
  d["rank_quotient"] = q.rank_quotient;
  py::list tf;
  for (const auto& t : q.torsion) tf.append(t.convert_to<long long>());
  d["torsion_factors"] = tf;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "regional-change calculus on knot diagrams";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(e.exit_code() == 3 ? PyExc_RuntimeError : PyExc_ValueError,
                      e.what());
    }
  });

  py::class_<Diagram>(m, "Diagram")
      .def(py::init([](const std::string& pd) { return parse_pd(pd); }),
           py::arg("pd"))
      .def_property_readonly("crossings", &Diagram::crossing_count)
      .def_property_readonly("doubles", &Diagram::singular_count)
      .def_property_readonly("components", &Diagram::components)
      .def_property_readonly("writhe", &Diagram::writhe)
      .def("resolved",
           [](const Diagram& d, const std::string& w) { return d.resolved(Word(w)); },
           py::arg("word"))
      .def("simplified", [](const Diagram& d) { return simplified(d); })
      .def("serialize", [](const Diagram& d) { return serialize_pd(d); })
      .def("__str__", [](const Diagram& d) { return serialize_pd(d); })
      .def("__repr__", [](const Diagram& d) {
        return "Diagram(\"" + serialize_pd(d) + "\")";
      });

  m.def("jones", [](const Diagram& d) { return jones(d).str(); });
  m.def("conway", [](const Diagram& d) { return conway(d).str(); });
  m.def("v2", [](const Diagram& d) { return v2(d).convert_to<long long>(); });
  m.def(
      "jones_series_coefficient",
      [](const Diagram& d, int n, int max_order) {
        return to_string(jones_series_coefficient(d, n, max_order));
      },
      py::arg("d"), py::arg("n"), py::arg("max_order") = kDefaultSeriesOrder);
  m.def("class_label",
        [](const Diagram& d) { return class_label(fingerprint(d)); });

  m.def(
      "alternating_sum",
      [](const Diagram& d, int cap) {
        auto s = alternating_sum(knot_system(d), cap);
        std::vector<std::pair<std::string, long long>> out;
        for (const auto& [cls, c] : s.terms())
          out.emplace_back(cls, c.convert_to<long long>());
        return out;
      },
      py::arg("d"), py::arg("cap") = kDefaultWordCap);
  m.def(
      "weighted_sum",
      [](const Diagram& d, int cap) {
        auto s = weighted_sum(knot_system(d), cap);
        PyTerms out;
        for (const auto& [wc, c] : s.terms())
          out.emplace_back(c.convert_to<long long>(), wc.word, wc.cls);
        return out;
      },
      py::arg("d"), py::arg("cap") = kDefaultWordCap);

  m.def(
      "vanishing_check",
      [](const Diagram& d, int order, const std::string& invariant, int cap) {
        std::function<Rat(const Diagram&)> inv;
        if (invariant == "v2") {
          if (order != 2)
            fail(ErrorKind::index_out_of_range, "v2 is an order-2 invariant");
          inv = [](const Diagram& k) { return Rat(v2(k)); };
        } else {
          inv = [order](const Diagram& k) {
            return jones_series_coefficient(
                k, order, std::max(order, kDefaultSeriesOrder));
          };
        }
        VanishingReport rep = vassiliev_vanishing_check(inv, d, order, cap);
        py::dict out;
        out["r"] = rep.r;
        out["order"] = rep.order;
        out["value"] = to_string(rep.value);
        out["status"] = rep.status == VanishStatus::pass   ? "pass"
                        : rep.status == VanishStatus::fail ? "fail"
                                                           : "info";
        return out;
      },
      py::arg("d"), py::arg("order"), py::arg("invariant") = "jones-series",
      py::arg("cap") = kDefaultWordCap);

  m.def(
      "boundary",
      [](int degree, const PyTerms& terms) {
        ChainElement out = boundary(chain_from_terms(degree, terms));
        return py::make_tuple(out.degree, terms_out(out));
      },
      py::arg("degree"), py::arg("terms"));
  m.def(
      "difference_rank",
      [](const std::vector<std::pair<int, PyTerms>>& gens_r,
         const std::vector<std::pair<int, PyTerms>>& gens_r1) {
        std::vector<ChainElement> a, b;
        for (const auto& [deg, t] : gens_r) a.push_back(chain_from_terms(deg, t));
        for (const auto& [deg, t] : gens_r1) b.push_back(chain_from_terms(deg, t));
        return quotient_dict(difference_rank(a, b));
      },
      py::arg("gens_r"), py::arg("gens_r1"));

  m.def(
      "group_alternating_sum",
      [](const std::string& group_json,
         const std::vector<std::pair<int, int>>& factors) {
        GroupProductSystem s{Group::from_json(group_json), factors};
        auto sum = alternating_sum(group_system(s));
        std::vector<std::pair<std::string, long long>> out;
        for (const auto& [cls, c] : sum.terms())
          out.emplace_back(cls, c.convert_to<long long>());
        return out;
      },
      py::arg("group_json"), py::arg("factors"));
}
