#include "zernike/bases.hpp"
#include "zernike/exact.hpp"
#include "zernike/grid.hpp"
#include "zernike/interbasis.hpp"
#include "zernike/spectrum.hpp"
#include "zernike/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace zernike;

namespace {

Basis parse_basis(const std::string& text) {
  if (text == "I" || text == "i" || text == "1") return Basis::I;
  if (text == "II" || text == "ii" || text == "2") return Basis::II;
  throw std::invalid_argument("basis must be 'I' or 'II'");
}

std::string basis_name(Basis b) { return b == Basis::I ? "I" : "II"; }

py::dict entry_to_dict(const ExactComplex& e) {
  const BigRational& rad = e.magnitude().radicand();
  py::dict d;
  d["phase_k"] = e.phase().k();
  d["sign"] = e.magnitude().sign();
  d["radicand_num"] = numerator(rad).str();
  d["radicand_den"] = denominator(rad).str();
  std::complex<double> v = e.to_complex();
  d["re"] = v.real();
  d["im"] = v.imag();
  return d;
}

py::dict report_to_dict(const SuiteReport& r) {
  py::list checks;
  for (const CheckResult& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["exact"] = c.exact;
    d["error"] = c.error;
    checks.append(std::move(d));
  }
  py::dict d;
  d["suite"] = r.suite;
  d["n_max"] = r.n_max;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["exact"] = r.exact;
  d["worst_error"] = r.worst_error;
  d["checks"] = std::move(checks);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two orthonormal bases of the Zernike system and their exact interbasis matrices";

  m.def(
      "psi_I", [](int n, int mm, double x, double y) { return psi_I(IndexI{n, mm}, DiskPoint{x, y}); },
      py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"),
      "First-kind disk basis function at Cartesian (x, y).");
  m.def(
      "psi_II",
      [](int n1, int n2, double x, double y) { return psi_II(IndexII{n1, n2}, DiskPoint{x, y}); },
      py::arg("n1"), py::arg("n2"), py::arg("x"), py::arg("y"),
      "Second-kind disk basis function at Cartesian (x, y).");
  m.def(
      "upsilon_I",
      [](int n, int mm, double theta, double phi) { return upsilon_I(IndexI{n, mm}, AnglesI{theta, phi}); },
      py::arg("n"), py::arg("m"), py::arg("theta"), py::arg("phi"),
      "First-kind half-sphere function at polar angles (theta, phi).");
  m.def(
      "upsilon_II",
      [](int n1, int n2, double theta_p, double phi_p) {
        return upsilon_II(IndexII{n1, n2}, AnglesII{theta_p, phi_p});
      },
      py::arg("n1"), py::arg("n2"), py::arg("theta_p"), py::arg("phi_p"),
      "Second-kind half-sphere function at rotated polar angles (theta', phi').");

  m.def(
      "enumerate_rung",
      [](int n) {
        auto [idx_I, idx_II] = enumerate_rung(n);
        std::vector<std::pair<int, int>> a, b;
        for (IndexI i : idx_I) a.emplace_back(i.n, i.m);
        for (IndexII i : idx_II) b.emplace_back(i.n1, i.n2);
        return std::make_pair(std::move(a), std::move(b));
      },
      py::arg("n"), "Index lists ((n, m)..., (n1, n2)...) spanning rung n in each basis.");

  m.def(
      "zernike_eigenvalue", [](int n) { return n * (n + 2); }, py::arg("n"),
      "Eigenvalue E_n = n(n+2) of rung n.");

  m.def(
      "w_matrix",
      [](int n) {
        InterbasisMatrix w = w_matrix(n);
        std::vector<std::vector<std::complex<double>>> out(n + 1);
        for (int row = 0; row <= n; ++row) {
          out[row].resize(n + 1);
          for (int col = 0; col <= n; ++col) out[row][col] = w.at(row, col).to_complex();
        }
        return out;
      },
      py::arg("n"),
      "Interbasis matrix W(n) as complex doubles; rows n1 = n..0, cols m = n, n-2, ..., -n.");

  m.def(
      "w_matrix_exact",
      [](int n) {
        InterbasisMatrix w = w_matrix(n);
        py::list rows;
        for (int row = 0; row <= n; ++row) {
          py::list cells;
          for (int col = 0; col <= n; ++col) cells.append(entry_to_dict(w.at(row, col)));
          rows.append(std::move(cells));
        }
        return rows;
      },
      py::arg("n"),
      "W(n) entries as exact radicals: i^phase_k * sign * sqrt(radicand_num/radicand_den).");

  py::class_<WavefrontSpectrum>(m, "Spectrum",
                                "Coefficients over one basis through rung max_rung; keys are\n"
                                "(n, m) for basis I, (n1, n2) for basis II.")
      .def(py::init([](const std::string& basis, int max_rung,
                       std::map<std::pair<int, int>, std::complex<double>> coeffs) {
             WavefrontSpectrum s{parse_basis(basis), max_rung, std::move(coeffs)};
             validate(s);
             return s;
           }),
           py::arg("basis"), py::arg("max_rung"),
           py::arg("coeffs") = std::map<std::pair<int, int>, std::complex<double>>{})
      .def_property(
          "basis", [](const WavefrontSpectrum& s) { return basis_name(s.basis); },
          [](WavefrontSpectrum& s, const std::string& b) { s.basis = parse_basis(b); })
      .def_readwrite("max_rung", &WavefrontSpectrum::max_rung)
      .def_readwrite("coeffs", &WavefrontSpectrum::coeffs)
      .def(
          "coeff", [](const WavefrontSpectrum& s, int a, int b) { return coeff(s, a, b); },
          py::arg("a"), py::arg("b"), "Coefficient at an index pair; zero when absent.")
      .def(
          "__call__",
          [](const WavefrontSpectrum& s, double x, double y) { return spectrum_eval(s, DiskPoint{x, y}); },
          py::arg("x"), py::arg("y"), "Evaluate the represented disk function.")
      .def("__repr__", [](const WavefrontSpectrum& s) {
        return "Spectrum(basis=" + basis_name(s.basis) + ", max_rung=" + std::to_string(s.max_rung) +
               ", " + std::to_string(s.coeffs.size()) + " coefficients)";
      });

  m.def(
      "convert",
      [](const WavefrontSpectrum& s, const std::string& target) { return convert(s, parse_basis(target)); },
      py::arg("spectrum"), py::arg("target"),
      "Change of basis preserving the represented disk function.");

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("spectrum", &FitReport::spectrum)
      .def_readonly("rms_residual", &FitReport::rms_residual)
      .def_readonly("max_residual", &FitReport::max_residual)
      .def_readonly("rank", &FitReport::rank)
      .def_readonly("basis_count", &FitReport::basis_count)
      .def("__repr__", [](const FitReport& r) {
        return "FitReport(rms_residual=" + std::to_string(r.rms_residual) + ", rank=" +
               std::to_string(r.rank) + "/" + std::to_string(r.basis_count) + ")";
      });

  m.def(
      "fit",
      [](const std::vector<std::tuple<double, double, std::complex<double>>>& samples,
         const std::string& basis, int n_max) {
        std::vector<Sample> s;
        s.reserve(samples.size());
        for (const auto& [x, y, v] : samples) s.push_back({x, y, v});
        return fit(s, parse_basis(basis), n_max);
      },
      py::arg("samples"), py::arg("basis"), py::arg("n_max"),
      "Least-squares projection of (x, y, value) samples onto one basis through rung n_max.");

  m.def(
      "eval_grid",
      [](const std::string& basis, std::pair<int, int> index, int nx, int ny, int threads) {
        GridSample g = eval_grid(parse_basis(basis), index, nx, ny, threads);
        py::list values, mask;
        for (int iy = 0; iy < g.ny; ++iy) {
          py::list vrow, mrow;
          for (int ix = 0; ix < g.nx; ++ix) {
            vrow.append(g.values[static_cast<std::size_t>(iy) * g.nx + ix]);
            mrow.append(g.mask[static_cast<std::size_t>(iy) * g.nx + ix] != 0);
          }
          values.append(std::move(vrow));
          mask.append(std::move(mrow));
        }
        py::dict d;
        d["nx"] = g.nx;
        d["ny"] = g.ny;
        d["values"] = std::move(values);
        d["mask"] = std::move(mask);
        return d;
      },
      py::arg("basis"), py::arg("index"), py::arg("nx") = 64, py::arg("ny") = 64,
      py::arg("threads") = 1,
      "Sample one basis function row-wise over [-1,1]^2; mask marks in-disk points.");

  m.def("suite_names", [] { return suite_names(); }, "Names of the verification suites.");
  m.def(
      "run_suite",
      [](const std::string& name, int n_max, int order, double tolerance, unsigned seed, int threads) {
        return report_to_dict(run_suite(name, {n_max, order, tolerance, seed, threads}));
      },
      py::arg("name"), py::arg("n_max") = -1, py::arg("order") = 0, py::arg("tolerance") = 0.0,
      py::arg("seed") = 0, py::arg("threads") = 1,
      "Run one verification suite; zero/negative arguments select per-suite defaults.");

  m.attr("__version__") = "1.0.0";
}
