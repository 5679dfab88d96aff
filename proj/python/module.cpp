#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "composet/automata.hpp"
#include "composet/chebyshev.hpp"
#include "composet/cli.hpp"
#include "composet/genfun.hpp"
#include "composet/incidence.hpp"
#include "composet/ncseries.hpp"
#include "composet/poset.hpp"
#include "composet/report.hpp"
#include "composet/words.hpp"

namespace py = pybind11;
using namespace composet;

namespace {

py::int_ to_py(const Int& v) {
  PyObject* raw = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!raw) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(raw);
}

py::list to_py_list(const std::vector<Int>& values) {
  py::list out;
  for (const Int& v : values) out.append(to_py(v));
  return out;
}

Grading parse_grading(const std::string& text) {
  if (text == "length") return Grading::length;
  if (text == "norm") return Grading::norm;
  throw std::invalid_argument("grading must be 'length' or 'norm'");
}

TypeVector to_type(const std::vector<long long>& type) {
  TypeVector out;
  for (long long l : type) {
    if (l < 0) throw std::invalid_argument("type multiplicities must be >= 0");
    out.push_back(l);
  }
  return out;
}

/// A rational function bound to the variable name it was produced with.
struct BoundRational {
  RationalFn fn;
  std::string var;
};

BoundRational wrap(RationalFn fn, std::string var) {
  return BoundRational{std::move(fn), std::move(var)};
}

}  // namespace

PYBIND11_MODULE(_composet, m) {
  m.doc() =
      "Exact zeta and Mobius computations for subword, composition and "
      "generalized subword order";

  py::class_<Poset>(m, "Poset")
      .def(py::init([](const std::string& json_text) { return parse_poset(json_text); }),
           py::arg("json_text"))
      .def_property_readonly("size", &Poset::size)
      .def_property_readonly("rooted_forest", &Poset::rooted_forest)
      .def_property_readonly("element_names",
                             [](const Poset& p) {
                               std::vector<std::string> names;
                               for (Letter a : p.elements()) names.push_back(p.name(a));
                               return names;
                             })
      .def("__repr__", [](const Poset& p) {
        return "<Poset with " + std::to_string(p.size()) + " elements>";
      });

  py::class_<BoundRational>(m, "RationalFunction")
      .def("__str__", [](const BoundRational& r) { return r.fn.to_string(r.var); })
      .def("__repr__", [](const BoundRational& r) { return r.fn.to_string(r.var); })
      .def("taylor",
           [](const BoundRational& r, int degree) { return to_py_list(r.fn.taylor(degree)); },
           py::arg("degree"))
      .def("__eq__",
           [](const BoundRational& a, const BoundRational& b) { return a.fn == b.fn; });

  m.def("make_chain", &make_chain, py::arg("n"));
  m.def("make_antichain", &make_antichain, py::arg("q"));
  m.def("make_lambda", &make_lambda);

  m.def(
      "leq_words",
      [](const std::string& u, const std::string& w, const Poset& p) {
        return leq_words(parse_word(u, p), parse_word(w, p), p);
      },
      py::arg("u"), py::arg("w"), py::arg("poset"));

  m.def(
      "mobius",
      [](const std::string& u, const std::string& w, const Poset& p,
         const std::string& method) {
        Word wu = parse_word(u, p), ww = parse_word(w, p);
        if (method == "normal") return to_py(mobius_normal(wu, ww, p));
        if (method == "oracle") {
          IntervalCache cache(p);
          return to_py(cache.mobius(wu, ww));
        }
        throw std::invalid_argument("method must be 'normal' or 'oracle'");
      },
      py::arg("u"), py::arg("w"), py::arg("poset"), py::arg("method") = "oracle");

  m.def(
      "interval",
      [](const std::string& u, const std::string& w, const Poset& p) {
        IntervalCache cache(p);
        std::vector<std::string> out;
        for (const Word& v : cache.interval(parse_word(u, p), parse_word(w, p)))
          out.push_back(format_word(v, p));
        return out;
      },
      py::arg("u"), py::arg("w"), py::arg("poset"));

  m.def(
      "zeta_power",
      [](const std::string& u, const std::string& w, int mexp, const Poset& p) {
        IntervalCache cache(p);
        return to_py(cache.zeta_power(parse_word(u, p), parse_word(w, p), mexp));
      },
      py::arg("u"), py::arg("w"), py::arg("m"), py::arg("poset"));

  m.def(
      "embeddings",
      [](const std::string& u, const std::string& w, const Poset& p, bool normal) {
        Word wu = parse_word(u, p), ww = parse_word(w, p);
        std::vector<Embedding> found =
            normal ? normal_embeddings(wu, ww, p) : all_embeddings(wu, ww, p);
        py::list out;
        for (const Embedding& e : found) {
          if (p.rooted_forest())
            out.append(py::make_tuple(format_embedding(e, p), defect(e, p)));
          else
            out.append(py::make_tuple(format_embedding(e, p), py::none()));
        }
        return out;
      },
      py::arg("u"), py::arg("w"), py::arg("poset"), py::arg("normal") = false);

  m.def(
      "series",
      [](const std::string& kind, const std::string& u, const Poset& p,
         const std::string& grading, int bound) {
        Grading g = parse_grading(grading);
        Word wu = parse_word(u, p);
        NCSeries s = kind == "Z" ? series_Z(wu, p, g, bound)
                     : kind == "M"
                         ? series_M(wu, p, g, bound)
                         : throw std::invalid_argument("kind must be 'Z' or 'M'");
        py::list out;
        for (const auto& [word, coeff] : s.terms())
          out.append(py::make_tuple(format_word(word, p), to_py(coeff)));
        return out;
      },
      py::arg("kind"), py::arg("u"), py::arg("poset"),
      py::arg("grading") = "length", py::arg("bound") = 6);

  m.def(
      "automaton_dump",
      [](const std::string& kind, int n) {
        return (kind == "Z" ? build_Z_automaton(n) : build_M_automaton(n)).dump();
      },
      py::arg("kind"), py::arg("n"));

  m.def(
      "automaton_accept",
      [](const std::string& kind, int n, int bound) {
        Automaton a = kind == "Z" ? build_Z_automaton(n) : build_M_automaton(n);
        PairSeries s = accept_series(a, bound);
        const Poset chain = make_chain(n);
        py::list out;
        for (const auto& [pair, coeff] : s.terms())
          out.append(py::make_tuple(format_word(pair.first, chain),
                                    format_word(pair.second, chain), to_py(coeff)));
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("bound"));

  m.def(
      "z_norm",
      [](const std::vector<long long>& type, int n) {
        return wrap(Z_norm(to_type(type), n), "x");
      },
      py::arg("type"), py::arg("n"));
  m.def(
      "m_norm",
      [](const std::vector<long long>& type, int n) {
        return wrap(M_norm(to_type(type), n), "x");
      },
      py::arg("type"), py::arg("n"));
  m.def(
      "z_len",
      [](const std::vector<long long>& type, int n) {
        return wrap(Z_len(to_type(type), n), "t");
      },
      py::arg("type"), py::arg("n"));
  m.def(
      "m_len",
      [](const std::vector<long long>& type, int n) {
        return wrap(M_len(to_type(type), n), "t");
      },
      py::arg("type"), py::arg("n"));
  m.def(
      "z_p_norm",
      [](const std::vector<long long>& type) { return wrap(Z_P_norm(to_type(type)), "x"); },
      py::arg("type"));
  m.def(
      "m_p_norm",
      [](const std::vector<long long>& type) { return wrap(M_P_norm(to_type(type)), "x"); },
      py::arg("type"));
  m.def(
      "z_len_general",
      [](const Poset& p, const std::vector<long long>& type) {
        std::vector<int64_t> by_element(type.begin(), type.end());
        by_element.resize(p.size(), 0);
        return wrap(Z_len_general(p, by_element), "t");
      },
      py::arg("poset"), py::arg("type"));
  m.def(
      "m_len_general",
      [](const Poset& p, const std::vector<long long>& type) {
        std::vector<int64_t> by_element(type.begin(), type.end());
        by_element.resize(p.size(), 0);
        return wrap(M_len_general(p, by_element), "t");
      },
      py::arg("poset"), py::arg("type"));
  m.def(
      "zeta_power_genfun",
      [](const std::vector<long long>& type, int n, int mexp, const std::string& grading) {
        Grading g = parse_grading(grading);
        return wrap(zeta_power_genfun(to_type(type), n, mexp, g),
                    g == Grading::norm ? "x" : "t");
      },
      py::arg("type"), py::arg("n"), py::arg("m"), py::arg("grading") = "norm");
  m.def(
      "closed_am_bm",
      [](int mexp, const std::string& grading) {
        Grading g = parse_grading(grading);
        auto [a, b] = g == Grading::norm ? closed_am_bm_norm(mexp) : closed_am_bm_len(mexp);
        const std::string var = g == Grading::norm ? "x" : "t";
        return py::make_tuple(wrap(a, var), wrap(b, var));
      },
      py::arg("m"), py::arg("grading") = "norm");
  m.def(
      "taylor",
      [](const BoundRational& r, int degree) { return to_py_list(r.fn.taylor(degree)); },
      py::arg("fn"), py::arg("degree"));

  m.def("chebyshev_t",
        [](int n) { return to_py_list(chebyshev_T(n).coefficients()); },
        py::arg("n"));

  m.def(
      "check_lambda",
      [](int i, int j) {
        LambdaCheck check = check_lambda_conjecture(i, j);
        return py::make_tuple(to_py(check.mu), to_py(check.coefficient), check.agree);
      },
      py::arg("i"), py::arg("j"));

  m.def("verify_telescoping",
        [](int n, const std::string& grading, int bound) {
          TelescopingReport report = verify_telescoping(n, parse_grading(grading), bound);
          py::list checks;
          for (const IdentityCheck& identity : report.identities)
            checks.append(py::make_tuple(identity.name, identity.pass, identity.detail));
          return py::make_tuple(report.all_pass, checks);
        },
        py::arg("n") = 8, py::arg("grading") = "norm", py::arg("bound") = 8);

  m.def("discrepancy_report", []() { return discrepancy_report().to_string(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = composet::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
