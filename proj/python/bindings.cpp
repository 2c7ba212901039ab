#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtile/checker.hpp"
#include "qtile/identities.hpp"
#include "qtile/series_io.hpp"
#include "qtile/tilings.hpp"

namespace py = pybind11;
using namespace qtile;

namespace {

py::object to_py_int(const Integer& c) { return py::module_::import("builtins").attr("int")(to_decimal(c)); }

Integer from_py_int(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

py::object to_py_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py_json(const py::handle& h) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

RankKind kind_of(std::optional<std::size_t> k, std::optional<std::size_t> l, std::vector<std::size_t> x_seq,
                 std::vector<std::size_t> y_seq) {
  if (!x_seq.empty() || !y_seq.empty()) return make_xy(std::move(x_seq), std::move(y_seq));
  if (k || l) return make_kl(k.value_or(1), l.value_or(1));
  return ClassicRank{};
}

Oracle oracle_of(const std::string& name) {
  if (name == "closed") return Oracle::ClosedForm;
  if (name == "brute") return Oracle::BruteForce;
  throw py::value_error("oracle must be 'closed' or 'brute'");
}

py::list tiling_list(const Tiling& t) { return py::cast(t.positions()); }

}  // namespace

PYBIND11_MODULE(_qtile, m) {
  m.doc() = "Exact generating functions for tilings and q-series identity checks";

  py::register_exception<SeriesError>(m, "SeriesError", PyExc_ValueError);
  py::register_exception<TilingError>(m, "TilingError", PyExc_ValueError);
  py::register_exception<IdentityError>(m, "IdentityError", PyExc_ValueError);
  py::register_exception<CheckerError>(m, "CheckerError", PyExc_ValueError);

  py::class_<Series>(m, "Series")
      .def_static("zero", &Series::zero, py::arg("qmax"))
      .def_static("one", &Series::one, py::arg("qmax"))
      .def_static(
          "from_terms",
          [](std::size_t qmax, const py::iterable& terms) {
            std::vector<Term> out;
            for (const auto& t : terms) {
              auto tup = t.cast<py::tuple>();
              out.push_back({tup[0].cast<std::size_t>(), tup[1].cast<std::size_t>(), from_py_int(tup[2])});
            }
            return Series::from_terms(qmax, std::move(out));
          },
          py::arg("qmax"), py::arg("terms"), "Build from (q, z, coeff) tuples.")
      .def_static("from_json", [](const py::object& j) { return series_from_json(from_py_json(j)); })
      .def_property_readonly("qmax", &Series::qmax)
      .def("terms",
           [](const Series& s) {
             py::list out;
             for (const auto& t : s.terms()) out.append(py::make_tuple(t.q, t.z, to_py_int(t.c)));
             return out;
           })
      .def("coefficient", [](const Series& s, std::size_t q, std::size_t z) { return to_py_int(s.coefficient(q, z)); },
           py::arg("q"), py::arg("z") = 0)
      .def("substitute_z", &Series::substitute_z, py::arg("value"))
      .def("truncated", &Series::truncated, py::arg("qmax"))
      .def("is_triangular", &Series::is_triangular)
      .def("to_json", [](const Series& s) { return to_py_json(series_to_json(s)); })
      .def("to_csv", &series_to_csv)
      .def("__len__", &Series::size)
      .def("__bool__", [](const Series& s) { return !s.is_zero(); })
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("__add__", [](const Series& a, const Series& b) { return a + b; })
      .def("__sub__", [](const Series& a, const Series& b) { return a - b; })
      .def("__mul__", [](const Series& a, const Series& b) { return a * b; })
      .def("__neg__", [](const Series& a) { return -a; })
      .def("__str__", &series_to_human)
      .def("__repr__", [](const Series& s) { return "<Series qmax=" + std::to_string(s.qmax()) + " " + series_to_human(s) + ">"; });

  m.def("pochhammer_neg_zq", &pochhammer_neg_zq, py::arg("n"), py::arg("qmax"));
  m.def("q_pochhammer", &q_pochhammer, py::arg("n"), py::arg("qmax"));
  m.def("inv_q_pochhammer", &inv_q_pochhammer, py::arg("n"), py::arg("qmax"));

  m.def("tiling_product", &tiling_product, py::arg("qmax"));
  m.def("euler_sum", &euler_sum, py::arg("qmax"));
  m.def("sylvester_rhs", &sylvester_rhs, py::arg("qmax"));
  m.def("epnt_rhs", &epnt_rhs, py::arg("qmax"));
  m.def("heptagonal_rhs", &heptagonal_rhs, py::arg("form"), py::arg("qmax"));
  m.def("kl_rhs", [](std::size_t k, std::size_t l, std::size_t qmax) { return kl_rhs(k, l, qmax); }, py::arg("k"),
        py::arg("l"), py::arg("qmax"));
  m.def("kl_rank_gf", &kl_rank_gf, py::arg("k"), py::arg("l"), py::arg("m"), py::arg("qmax"));
  m.def(
      "kl_case_gf",
      [](std::size_t k, std::size_t l, std::size_t mm, int case_id, std::size_t offset, std::size_t qmax) {
        return kl_case_gf({k, l, mm, case_id, offset}, qmax);
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("case_id"), py::arg("offset"), py::arg("qmax"));
  m.def("remark_transform_identity", &remark_transform_identity, py::arg("x"), py::arg("y"), py::arg("qmax"));

  m.def("parse_tiling", [](const std::string& text) { return tiling_list(parse_tiling(text)); });
  m.def("weight", [](std::vector<std::size_t> positions) {
    const Monomial w = weight(Tiling(std::move(positions)));
    return py::make_tuple(w.z_degree, w.q_degree);
  });
  m.def("b_count", [](std::vector<std::size_t> positions, std::size_t mm) { return b_count(Tiling(std::move(positions)), mm); },
        py::arg("positions"), py::arg("m"));
  m.def(
      "rank",
      [](std::vector<std::size_t> positions, std::optional<std::size_t> k, std::optional<std::size_t> l,
         std::vector<std::size_t> x_seq, std::vector<std::size_t> y_seq) {
        return rank(Tiling(std::move(positions)), kind_of(k, l, std::move(x_seq), std::move(y_seq)));
      },
      py::arg("positions"), py::arg("k") = py::none(), py::arg("l") = py::none(),
      py::arg("x_seq") = std::vector<std::size_t>{}, py::arg("y_seq") = std::vector<std::size_t>{});
  m.def(
      "rank_case",
      [](std::vector<std::size_t> positions, std::size_t k, std::size_t l) {
        const RankCase c = rank_case(Tiling(std::move(positions)), k, l);
        return py::make_tuple(c.case_id, c.offset);
      },
      py::arg("positions"), py::arg("k") = 1, py::arg("l") = 1);
  m.def("enumerate_tilings", [](std::size_t qmax) {
    py::list out;
    for_each_tiling(qmax, [&](const Tiling& t) { out.append(tiling_list(t)); });
    return out;
  });
  m.def("brute_gf", [](std::size_t qmax) { return brute_gf(qmax); }, py::arg("qmax"));
  m.def(
      "rank_histogram",
      [](std::size_t qmax, std::optional<std::size_t> k, std::optional<std::size_t> l, std::vector<std::size_t> x_seq,
         std::vector<std::size_t> y_seq) { return rank_histogram(qmax, kind_of(k, l, std::move(x_seq), std::move(y_seq))); },
      py::arg("qmax"), py::arg("k") = py::none(), py::arg("l") = py::none(),
      py::arg("x_seq") = std::vector<std::size_t>{}, py::arg("y_seq") = std::vector<std::size_t>{});

  m.def("compare", [](const Series& a, const Series& b) { return to_py_json(report_to_json(compare(a, b))); });
  m.def(
      "verify",
      [](const std::string& tag, std::size_t qmax, const std::string& oracle, std::size_t k, std::size_t l, int form,
         std::size_t x, std::size_t y, std::vector<std::size_t> x_seq, std::vector<std::size_t> y_seq,
         std::size_t oracle_cap) {
        IdentityId id = IdentityId::of(tag_from_name(tag));
        id.k = k;
        id.l = l;
        id.form = id.tag == IdentityTag::Heptagonal && form == 0 ? 1 : form;
        id.x = x;
        id.y = y;
        id.x_seq = std::move(x_seq);
        id.y_seq = std::move(y_seq);
        return to_py_json(report_to_json(verify(id, qmax, oracle_of(oracle), CheckerConfig{oracle_cap})));
      },
      py::arg("identity"), py::arg("qmax"), py::arg("oracle") = "closed", py::arg("k") = 0, py::arg("l") = 0,
      py::arg("form") = 0, py::arg("x") = 0, py::arg("y") = 0, py::arg("x_seq") = std::vector<std::size_t>{},
      py::arg("y_seq") = std::vector<std::size_t>{}, py::arg("oracle_cap") = 60);
}
