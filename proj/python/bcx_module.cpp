#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcx/duality.hpp"
#include "bcx/hardy.hpp"
#include "bcx/json_io.hpp"
#include "bcx/linalg.hpp"
#include "bcx/suites.hpp"

namespace py = pybind11;
using namespace bcx;

namespace {

std::string hyp_repr(const Hyperbolic& h) {
  std::ostringstream s;
  s << "Hyperbolic(" << h.x1 << ", " << h.x2 << ")";
  return s.str();
}

std::string bc_repr(const Bicomplex& a) {
  std::ostringstream s;
  s << "Bicomplex(" << a.z1 << "*e1, " << a.z2 << "*e2)";
  return s.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bicomplex scalars and matrices, module duality, Hardy-space composition operators";

  py::register_exception<Error>(m, "BcxError");

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<double, double>(), py::arg("rel") = 1e-9, py::arg("abs") = 0.0)
      .def_readwrite("rel", &Tolerance::rel)
      .def_readwrite("abs", &Tolerance::abs);

  py::class_<Hyperbolic>(m, "Hyperbolic")
      .def(py::init<double, double>(), py::arg("x1"), py::arg("x2"))
      .def_readwrite("x1", &Hyperbolic::x1)
      .def_readwrite("x2", &Hyperbolic::x2)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(double() * py::self)
      .def("positive", &Hyperbolic::positive)
      .def("strictly_positive", &Hyperbolic::strictly_positive)
      .def("magnitude", &Hyperbolic::magnitude)
      .def("__repr__", &hyp_repr);

  m.def("hyp_leq", &hyp_leq, py::arg("a"), py::arg("b"));
  m.def("hyp_sqrt", &hyp_sqrt, py::arg("a"));

  py::class_<Bicomplex>(m, "Bicomplex")
      .def(py::init<Complex, Complex>(), py::arg("z1"), py::arg("z2"))
      .def(py::init<double>(), py::arg("r"))
      .def_readwrite("z1", &Bicomplex::z1)
      .def_readwrite("z2", &Bicomplex::z2)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(double() * py::self)
      .def(Complex() * py::self)
      .def(-py::self)
      .def("__repr__", &bc_repr);

  m.def("e1", &e1);
  m.def("e2", &e2);
  m.def("unit_j", &unit_j);
  m.def("from_cartesian", &from_cartesian, py::arg("z"), py::arg("w"));
  m.def("to_cartesian", &to_cartesian, py::arg("a"));
  m.def("conj1", &conj1);
  m.def("conj2", &conj2);
  m.def("conj3", &conj3);
  m.def("modulus_j", &modulus_j);
  m.def("modulus_i", &modulus_i);
  m.def("modulus_k", &modulus_k);
  m.def("euclid_norm", &euclid_norm);
  m.def("is_null_cone", &is_null_cone, py::arg("a"), py::arg("tol") = kNullConeTol);
  m.def("inverse", &inverse, py::arg("a"), py::arg("tol") = kNullConeTol);

  py::class_<BCVector>(m, "BCVector")
      .def(py::init<CVector, CVector>(), py::arg("v1"), py::arg("v2"))
      .def_readonly("v1", &BCVector::v1)
      .def_readonly("v2", &BCVector::v2)
      .def("dim", &BCVector::dim)
      .def(py::self + py::self)
      .def(py::self - py::self);

  py::class_<BCMatrix>(m, "BCMatrix")
      .def(py::init<CMatrix, CMatrix>(), py::arg("A1"), py::arg("A2"))
      .def_readonly("A1", &BCMatrix::A1)
      .def_readonly("A2", &BCMatrix::A2)
      .def_static("identity", &BCMatrix::identity, py::arg("n"))
      .def("rows", &BCMatrix::rows)
      .def("cols", &BCMatrix::cols)
      .def(py::self + py::self)
      .def(py::self - py::self);

  m.def("scale_vector", [](Bicomplex s, const BCVector& x) { return s * x; });
  m.def("scale_matrix", [](Bicomplex s, const BCMatrix& a) { return s * a; });
  m.def("from_cartesian_matrix", &from_cartesian_matrix, py::arg("B"), py::arg("C"));
  m.def("to_cartesian_matrix", &to_cartesian_matrix, py::arg("A"));
  m.def("inner_product", &inner_product, py::arg("x"), py::arg("y"));
  m.def("dnorm_vec", &dnorm_vec, py::arg("x"));
  m.def("euclid_vec", &euclid_vec, py::arg("x"));
  m.def("apply", &apply, py::arg("A"), py::arg("x"));
  m.def("matmul", &matmul, py::arg("A"), py::arg("B"));
  m.def("adjoint", &adjoint, py::arg("A"));
  m.def("spectral_norm", &spectral_norm, py::arg("m"));

  py::class_<OperatorNormReport>(m, "OperatorNormReport")
      .def_readonly("dnorm", &OperatorNormReport::dnorm)
      .def_readonly("euclid", &OperatorNormReport::euclid);

  m.def("op_dnorm", &op_dnorm, py::arg("A"));
  m.def("is_normal", &is_normal, py::arg("A"), py::arg("tol") = Tolerance{});
  m.def("cartesian_normal_check", &cartesian_normal_check, py::arg("B"), py::arg("C"),
        py::arg("tol") = Tolerance{});
  m.def("is_self_adjoint", &is_self_adjoint, py::arg("A"), py::arg("tol") = Tolerance{});
  m.def("is_unitary", &is_unitary, py::arg("A"), py::arg("tol") = Tolerance{});
  m.def("is_positive", &is_positive, py::arg("A"), py::arg("tol") = Tolerance{});
  m.def("is_zero_operator", &is_zero_operator, py::arg("A"), py::arg("tol") = Tolerance{});

  py::class_<Submodule>(m, "Submodule")
      .def_readonly("ambient", &Submodule::ambient)
      .def_readonly("basis1", &Submodule::basis1)
      .def_readonly("basis2", &Submodule::basis2)
      .def("rank1", &Submodule::rank1)
      .def("rank2", &Submodule::rank2);

  py::class_<Functional>(m, "Functional")
      .def(py::init<BCVector>(), py::arg("riesz"))
      .def_readonly("riesz", &Functional::riesz)
      .def("__call__", &Functional::operator());

  py::class_<DualityReport>(m, "DualityReport")
      .def_readonly("max_violation_a", &DualityReport::max_violation_a)
      .def_readonly("max_violation_b", &DualityReport::max_violation_b)
      .def_readonly("trials", &DualityReport::trials)
      .def_readonly("seed", &DualityReport::seed);

  m.def("submodule_from_generators", &submodule_from_generators, py::arg("ambient_dim"),
        py::arg("gens"), py::arg("tol") = Tolerance{1e-10, 0.0});
  m.def("project", &project, py::arg("x"), py::arg("M"));
  m.def("quotient_norm", &quotient_norm, py::arg("x"), py::arg("M"));
  m.def("annihilator", &annihilator, py::arg("M"));
  m.def("extend_functional", &extend_functional, py::arg("f"), py::arg("M"),
        py::arg("tol") = Tolerance{1e-8, 1e-12});
  m.def("check_dual_isometries", &check_dual_isometries, py::arg("M"), py::arg("trials"),
        py::arg("seed"));

  py::class_<PowerSeries>(m, "PowerSeries")
      .def(py::init<std::vector<Bicomplex>>(), py::arg("coeffs"))
      .def_readonly("coeffs", &PowerSeries::coeffs)
      .def("degree", &PowerSeries::degree)
      .def("coeff", &PowerSeries::coeff, py::arg("n"));

  py::class_<WeightSequence>(m, "WeightSequence")
      .def(py::init<std::vector<Hyperbolic>>(), py::arg("beta"))
      .def_readonly("beta", &WeightSequence::beta)
      .def("degree", &WeightSequence::degree)
      .def_static("ones", &WeightSequence::ones, py::arg("degree"));

  py::class_<SelfMap>(m, "SelfMap").def_readonly("series", &SelfMap::series);

  m.def("hardy_norm", py::overload_cast<const PowerSeries&>(&hardy_norm), py::arg("f"));
  m.def("hardy_norm", py::overload_cast<const PowerSeries&, const WeightSequence&>(&hardy_norm),
        py::arg("f"), py::arg("beta"));
  m.def("hardy_inner", py::overload_cast<const PowerSeries&, const PowerSeries&>(&hardy_inner),
        py::arg("f"), py::arg("g"));
  m.def("hardy_inner",
        py::overload_cast<const PowerSeries&, const PowerSeries&, const WeightSequence&>(
            &hardy_inner),
        py::arg("f"), py::arg("g"), py::arg("beta"));
  m.def("seq_embed", &seq_embed, py::arg("f"));
  m.def("seq_norm", py::overload_cast<const std::vector<Bicomplex>&>(&seq_norm), py::arg("a"));
  m.def("seq_norm",
        py::overload_cast<const std::vector<Bicomplex>&, const WeightSequence&>(&seq_norm),
        py::arg("a"), py::arg("beta"));
  m.def("evaluate", &evaluate, py::arg("f"), py::arg("Z"));
  m.def("compose", py::overload_cast<const PowerSeries&, const PowerSeries&, int>(&compose),
        py::arg("f"), py::arg("phi"), py::arg("N"));
  m.def("compose", py::overload_cast<const PowerSeries&, const SelfMap&, int>(&compose),
        py::arg("f"), py::arg("phi"), py::arg("N"));
  m.def("self_map_excess", &self_map_excess, py::arg("s"), py::arg("points") = 256,
        py::arg("radius") = 0.999);
  m.def("certify_self_map", &certify_self_map, py::arg("s"), py::arg("tol") = 1e-9,
        py::arg("points") = 256, py::arg("radius") = 0.999);
  m.def("mobius_series", &mobius_series, py::arg("a"), py::arg("N"));
  m.def("cayley", &cayley, py::arg("W"), py::arg("tol") = Tolerance{});
  m.def("cayley_inverse", &cayley_inverse, py::arg("Z"), py::arg("tol") = Tolerance{});
  m.def("composition_matrix", &composition_matrix, py::arg("phi"), py::arg("N"));
  m.def("littlewood_bound", &littlewood_bound, py::arg("phi"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_verify_json",
      [](std::uint64_t seed, int trials, int dim, int degree, double rel_tol, double abs_tol,
         const std::vector<std::string>& suites) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.dim = dim;
        cfg.degree = degree;
        cfg.tol = {rel_tol, abs_tol};
        cfg.suites = suites;
        return report_to_json(run_verify(cfg));
      },
      py::arg("seed") = 1, py::arg("trials") = 200, py::arg("dim") = 6, py::arg("degree") = 32,
      py::arg("rel_tol") = 1e-8, py::arg("abs_tol") = 0.0,
      py::arg("suites") = std::vector<std::string>{});
}
