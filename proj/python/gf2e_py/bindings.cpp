#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gf2e/matrix_io.hpp"
#include "gf2e/newton_john.hpp"
#include "gf2e/ple.hpp"
#include "gf2e/poly_mul.hpp"
#include "gf2e/random.hpp"
#include "gf2e/sliced_matrix.hpp"
#include "gf2e/tuning.hpp"

namespace py = pybind11;
using namespace gf2e;

namespace {

using ElementArray = py::array_t<std::uint16_t, py::array::c_style | py::array::forcecast>;

PackedMatrix from_array(int e, const ElementArray& arr, std::uint32_t modulus) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  PackedMatrix a(make_field(e, modulus), static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
  auto v = arr.unchecked<2>();
  for (py::ssize_t i = 0; i < v.shape(0); ++i)
    for (py::ssize_t j = 0; j < v.shape(1); ++j) a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), v(i, j));
  return a;
}

py::array_t<std::uint16_t> to_array(const PackedMatrix& a) {
  py::array_t<std::uint16_t> out({static_cast<py::ssize_t>(a.rows()), static_cast<py::ssize_t>(a.cols())});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      v(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = static_cast<std::uint16_t>(a.at(i, j));
  return out;
}

py::array_t<bool> bits_to_array(const BitMatrix& m) {
  py::array_t<bool> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m.get(i, j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gf2e, m) {
  m.doc() = "Dense matrices over GF(2^e), 2 <= e <= 10";

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<int, std::uint32_t>(), py::arg("degree"), py::arg("modulus"))
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("order", &Field::order)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv);

  py::class_<PackedMatrix>(m, "Matrix")
      .def(py::init([](int e, std::size_t rows, std::size_t cols, std::uint32_t modulus) {
             return PackedMatrix(make_field(e, modulus), rows, cols);
           }),
           py::arg("e"), py::arg("rows"), py::arg("cols"), py::arg("modulus") = 0)
      .def_static("from_numpy", &from_array, py::arg("e"), py::arg("array"), py::arg("modulus") = 0)
      .def_static(
          "random",
          [](int e, std::size_t rows, std::size_t cols, std::uint64_t seed) {
            Rng rng(seed);
            return PackedMatrix::random(default_field(e), rows, cols, rng);
          },
          py::arg("e"), py::arg("rows"), py::arg("cols"), py::arg("seed"))
      .def_static(
          "identity", [](int e, std::size_t n) { return PackedMatrix::identity(default_field(e), n); }, py::arg("e"),
          py::arg("n"))
      .def("to_numpy", &to_array)
      .def_property_readonly("e", &PackedMatrix::degree)
      .def_property_readonly("modulus", [](const PackedMatrix& a) { return a.field().modulus(); })
      .def_property_readonly("shape", [](const PackedMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def("__getitem__", [](const PackedMatrix& a, std::pair<std::size_t, std::size_t> ij) { return a.get(ij.first, ij.second); })
      .def("__setitem__",
           [](PackedMatrix& a, std::pair<std::size_t, std::size_t> ij, Element x) { a.set(ij.first, ij.second, x); })
      .def("__add__", [](const PackedMatrix& a, const PackedMatrix& b) { return add(a, b); })
      .def("__matmul__",
           [](const PackedMatrix& a, const PackedMatrix& b) { return multiply(a, b, MulBackend::kAuto, tuning().crossover); })
      .def("__eq__", [](const PackedMatrix& a, const PackedMatrix& b) { return a == b; })
      .def("copy", [](const PackedMatrix& a) { return a; });

  m.def(
      "multiply",
      [](const PackedMatrix& a, const PackedMatrix& b, const std::string& backend, std::size_t crossover) {
        return multiply(a, b, parse_backend(backend), crossover ? crossover : tuning().crossover);
      },
      py::arg("a"), py::arg("b"), py::arg("backend") = "auto", py::arg("crossover") = 0,
      "Product with backend cubic, nj, strassen, karatsuba or auto.");

  m.def(
      "echelonize",
      [](const PackedMatrix& a, bool full, std::size_t crossover) {
        PackedMatrix w = a;
        const std::size_t r = echelonize(w, full, crossover ? crossover : tuning().crossover);
        return py::make_tuple(w, r);
      },
      py::arg("a"), py::arg("full") = true, py::arg("crossover") = 0, "Returns (echelon form, rank).");

  m.def(
      "ple",
      [](const PackedMatrix& a, std::size_t crossover) {
        PackedMatrix w = a;
        const PleFactors f = ple(w, crossover ? crossover : tuning().crossover);
        auto [l, e] = unpack_ple(w, f);
        return py::make_tuple(f.p.entries(), l, e, f.q.entries(), f.rank);
      },
      py::arg("a"), py::arg("crossover") = 0,
      "Returns (p, L, E, q, rank) with A = P L E; p and q are LAPACK-style swap vectors.");

  m.def(
      "trsm_upper_left",
      [](const PackedMatrix& u, const PackedMatrix& b) {
        PackedMatrix x = b;
        trsm_upper_left(u, x);
        return x;
      },
      py::arg("u"), py::arg("b"), "X with U X = B.");
  m.def(
      "trsm_lower_left",
      [](const PackedMatrix& l, const PackedMatrix& b, bool unit) {
        PackedMatrix x = b;
        if (unit) {
          trsm_lower_left_unit(l, x);
        } else {
          trsm_lower_left(l, x);
        }
        return x;
      },
      py::arg("l"), py::arg("b"), py::arg("unit_diagonal") = false, "X with L X = B.");

  m.def(
      "slice",
      [](const PackedMatrix& a) {
        const SlicedMatrix s = slice(a);
        py::list out;
        for (const auto& bits : s.slices()) out.append(bits_to_array(bits));
        return out;
      },
      py::arg("a"), "The e GF(2) coefficient matrices, lowest degree first.");

  m.def("count_products", &count_products, py::arg("e"), "GF(2) products per Karatsuba multiplication.");
  m.def("serialize", [](const PackedMatrix& a) { return serialize(a); }, py::arg("a"));
  m.def("parse", [](const std::string& text) { return parse_matrix(text).matrix; }, py::arg("text"));
}
