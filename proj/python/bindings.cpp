// Python bindings: the A2 alcove model, KL polynomials, sweeps, generic
// balls and SVG pictures.

#include "bruhat/a2.hpp"
#include "bruhat/classify.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/render.hpp"
#include "bruhat/translations.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bruhat;
using a2::Elt;

namespace {

py::dict report_dict(const SweepReport& r) {
  py::list ce;
  for (const auto& c : r.counterexamples) ce.append(py::make_tuple(c.first, c.second, c.reason));
  py::dict d;
  d["sweep"] = r.sweep;
  d["group"] = r.group;
  d["max_len_x"] = r.max_len_x;
  d["max_len_xy"] = r.max_len_xy;
  d["intervals"] = r.intervals;
  d["pairs"] = r.pairs;
  d["isomorphic"] = r.isomorphic;
  d["counterexamples"] = ce;
  d["notes"] = r.notes;
  d["ok"] = r.ok();
  return d;
}

Elt as_elt(const py::object& o) {
  if (py::isinstance<py::str>(o)) return a2::parse_element(o.cast<std::string>());
  return o.cast<Elt>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bruhat intervals of affine Weyl groups";

  py::register_exception<a2::UndefinedPairError>(m, "UndefinedPairError", PyExc_ValueError);
  py::register_exception<OutOfBallError>(m, "OutOfBallError", PyExc_ValueError);
  py::register_exception<EmptyIntervalError>(m, "EmptyIntervalError", PyExc_ValueError);

  py::class_<Elt>(m, "Elt", "A2 alcove, identified with its center (u, v) in units of 1/6 of a fundamental weight")
      .def(py::init<Int, Int>(), py::arg("u"), py::arg("v"))
      .def(py::init([](const std::string& s) { return a2::parse_element(s); }), py::arg("text"))
      .def_readonly("u", &Elt::u)
      .def_readonly("v", &Elt::v)
      .def_property_readonly("length", [](Elt z) { return a2::length(z); })
      .def_property_readonly("word", [](Elt z) { return a2::word_string(z); })
      .def_property_readonly("name", [](Elt z) { return a2::describe(a2::normal_form(z)); })
      .def_property_readonly("dominant", [](Elt z) { return a2::is_dominant(z); })
      .def("__le__", [](Elt a, Elt b) { return a2::leq_geom(a, b); })
      .def("__ge__", [](Elt a, Elt b) { return a2::leq_geom(b, a); })
      .def("__eq__", [](Elt a, Elt b) { return a == b; })
      .def("__hash__", [](Elt a) { return PtHash{}(a); })
      .def("__repr__", [](Elt z) { return "Elt('" + a2::word_string(z) + "')"; });
  py::implicitly_convertible<py::str, Elt>();

  m.attr("identity") = a2::kId;
  m.def("theta", &a2::theta, py::arg("m"), py::arg("n"));
  m.def("theta_s", &a2::theta_s, py::arg("m"), py::arg("n"));
  m.def("s0theta", &a2::s0theta, py::arg("m"), py::arg("n"));
  m.def("s0theta_s", &a2::s0theta_s, py::arg("m"), py::arg("n"));
  m.def("x", &a2::x, py::arg("k"));
  m.def("ball", &a2::ball, py::arg("max_len"), "A2 elements of length <= max_len");

  m.def("lower_cardinality", [](const py::object& y) { return a2::lower_cardinality(as_elt(y)); }, py::arg("y"));
  m.def("interval", [](const py::object& x, const py::object& y) { return a2::interval_geom(as_elt(x), as_elt(y)); },
        py::arg("x"), py::arg("y"), "Elements of [x, y] from the geometric description");
  m.def("lc", [](const py::object& x, const py::object& y) { return a2::interval_poset(as_elt(x), as_elt(y)).lc(); },
        py::arg("x"), py::arg("y"), "Number of elements of each length in [x, y]");
  m.def("is_full", [](const py::object& x, const py::object& y) { return a2::is_full(as_elt(x), as_elt(y)); });
  m.def("is_thick", [](const py::object& x, const py::object& y) { return a2::is_thick(as_elt(x), as_elt(y)); });
  m.def("shape", [](const py::object& x, const py::object& y) {
    return std::string(a2::name(a2::interval_type(as_elt(x), as_elt(y)).shape));
  });
  m.def("dihedral_below", [](const py::object& u) { return a2::dihedral_below(as_elt(u)); }, py::arg("u"));

  m.def(
      "kl",
      [](const py::object& x, const py::object& y) {
        const Elt a = as_elt(x), b = as_elt(y);
        a2::KlResult r;
        try {
          r = a2::kl(a, b);
        } catch (const a2::UndefinedPairError&) {
          a2::KlOracle oracle(a2::length(b));
          r = a2::kl(a, b, &oracle);
        }
        return py::make_tuple(r.p.c, std::string(a2::name(r.source)));
      },
      py::arg("x"), py::arg("y"), "Coefficients of P_{x,y} and the rule that produced them");

  m.def(
      "translate_interval",
      [](const py::object& x, const py::object& y, Int a, Int b) {
        const auto r = a2::translate_interval(as_elt(x), as_elt(y), {a, b});
        py::dict d;
        d["image_inside"] = r.image_inside;
        d["bijection"] = r.is_bijection;
        d["poset_iso"] = r.is_poset_iso;
        d["card_source"] = r.card_source;
        d["card_target"] = r.card_target;
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"));
  m.def(
      "stabilization_n0",
      [](const py::object& x, const py::object& y, Int a, Int b, int n_max) {
        return a2::stabilization_find_n0(as_elt(x), as_elt(y), {a, b}, n_max);
      },
      py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"), py::arg("n_max") = 10);

  m.def("thick_census", [](int lx, int lxy, int jobs) { return report_dict(a2::thick_census(lx, lxy, jobs)); },
        py::arg("max_len_x"), py::arg("max_len_xy"), py::arg("jobs") = 0);
  m.def("lower_classification_sweep", [](int l, int jobs) { return report_dict(a2::lower_classification_sweep(l, jobs)); },
        py::arg("max_len"), py::arg("jobs") = 0);
  m.def(
      "conjecture_e_sweep",
      [](const std::string& g, int lx, int lxy, int jobs) {
        return report_dict(conjecture_e_sweep(GroupSpec::parse(g), lx, lxy, jobs));
      },
      py::arg("group"), py::arg("max_len_x"), py::arg("max_len_xy"), py::arg("jobs") = 0);

  py::class_<Ball>(m, "Ball", "Elements of length <= max_len of an affine Weyl group, with the Bruhat order")
      .def(py::init([](const std::string& g, int len) { return Ball(GroupSpec::parse(g), len); }), py::arg("group"),
           py::arg("max_len"))
      .def_property_readonly("group", [](const Ball& b) { return b.spec().name(); })
      .def("__len__", &Ball::size)
      .def("length", &Ball::length)
      .def("word", [](const Ball& b, int i) { return b.word_string(i); })
      .def("index", [](const Ball& b, const std::string& w) {
        const int i = b.index_of_word(parse_word(w, b.spec().generators()));
        if (i < 0) throw OutOfBallError("word outside the ball");
        return i;
      })
      .def("leq", &Ball::leq)
      .def("interval", &Ball::interval_elements)
      .def("lc", &Ball::lc_sequence);

  auto svg = m.def_submodule("svg", "SVG pictures of the A2 tiling");
  svg.def("star", [](const py::object& x) { return render::render_svg(render::star_scene(as_elt(x))); });
  svg.def("lower", [](const py::object& y) { return render::render_svg(render::lower_scene(as_elt(y))); });
  svg.def("interval", [](const py::object& x, const py::object& y) {
    return render::render_svg(render::interval_scene(as_elt(x), as_elt(y)));
  });
  svg.def("zones", [](Int r) { return render::render_svg(render::zones_scene(r)); }, py::arg("radius") = 36);
}
