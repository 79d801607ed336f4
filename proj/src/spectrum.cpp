#include "zernike/spectrum.hpp"

#include "zernike/interbasis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zernike {

namespace {

void check_index(Basis basis, int a, int b, int max_rung) {
  if (basis == Basis::I) {
    if (!is_valid(IndexI{a, b})) throw std::invalid_argument("spectrum: invalid (n, m) index");
    if (a > max_rung) throw std::invalid_argument("spectrum: index beyond max_rung");
  } else {
    if (!is_valid(IndexII{a, b})) throw std::invalid_argument("spectrum: invalid (n1, n2) index");
    if (a + b > max_rung) throw std::invalid_argument("spectrum: index beyond max_rung");
  }
}

// Disk-level transfer within one rung. The interbasis matrix acts on the
// lifted functions; the first-kind disk functions differ from their lifts by
// (-1)^{n_r}, so those signs ride along on the m side.
std::complex<double> transfer(const InterbasisMatrix& w, int row, int col) {
  IndexI idx{w.n, w.col_m(col)};
  double sign = idx.n_r() % 2 ? -1.0 : 1.0;
  return sign * w.at(row, col).to_complex();
}

std::vector<IndexI> rung_I(int n) { return enumerate_rung(n).first; }
std::vector<IndexII> rung_II(int n) { return enumerate_rung(n).second; }

}  // namespace

void validate(const WavefrontSpectrum& spec) {
  if (spec.max_rung < 0) throw std::invalid_argument("spectrum: negative max_rung");
  for (const auto& [key, value] : spec.coeffs) {
    check_index(spec.basis, key.first, key.second, spec.max_rung);
    if (spec.basis == Basis::II && std::abs(value.imag()) > kBasisIIImagTol)
      throw std::invalid_argument("spectrum: basis II coefficient has imaginary part");
  }
}

std::complex<double> coeff(const WavefrontSpectrum& spec, int a, int b) {
  auto it = spec.coeffs.find({a, b});
  return it == spec.coeffs.end() ? std::complex<double>(0.0) : it->second;
}

std::complex<double> spectrum_eval(const WavefrontSpectrum& spec, DiskPoint p) {
  std::complex<double> total = 0;
  for (const auto& [key, value] : spec.coeffs) {
    if (spec.basis == Basis::I)
      total += value * psi_I(IndexI{key.first, key.second}, p);
    else
      total += value * psi_II(IndexII{key.first, key.second}, p);
  }
  return total;
}

WavefrontSpectrum convert(const WavefrontSpectrum& spec, Basis target) {
  validate(spec);
  if (target == spec.basis) return spec;

  WavefrontSpectrum out;
  out.basis = target;
  out.max_rung = spec.max_rung;
  for (int n = 0; n <= spec.max_rung; ++n) {
    auto w = w_matrix(n);
    auto idx_I = rung_I(n);
    auto idx_II = rung_II(n);
    if (spec.basis == Basis::I) {
      // b_{n1} = sum_m conj(V_{n1,m}) a_m
      for (size_t r = 0; r < idx_II.size(); ++r) {
        std::complex<double> b = 0;
        for (size_t c = 0; c < idx_I.size(); ++c)
          b += std::conj(transfer(w, static_cast<int>(r), static_cast<int>(c))) *
               coeff(spec, idx_I[c].n, idx_I[c].m);
        if (b != 0.0) out.coeffs[{idx_II[r].n1, idx_II[r].n2}] = b;
      }
    } else {
      // a_m = sum_{n1} V_{n1,m} b_{n1}
      for (size_t c = 0; c < idx_I.size(); ++c) {
        std::complex<double> a = 0;
        for (size_t r = 0; r < idx_II.size(); ++r)
          a += transfer(w, static_cast<int>(r), static_cast<int>(c)) *
               coeff(spec, idx_II[r].n1, idx_II[r].n2);
        if (a != 0.0) out.coeffs[{idx_I[c].n, idx_I[c].m}] = a;
      }
    }
  }
  validate(out);
  return out;
}

FitReport fit(std::span<const Sample> samples, Basis basis, int n_max) {
  if (n_max < 0) throw std::invalid_argument("fit: negative n_max");
  std::vector<std::pair<int, int>> keys;
  for (int n = 0; n <= n_max; ++n) {
    if (basis == Basis::I)
      for (auto idx : rung_I(n)) keys.emplace_back(idx.n, idx.m);
    else
      for (auto idx : rung_II(n)) keys.emplace_back(idx.n1, idx.n2);
  }
  int cols = static_cast<int>(keys.size());
  int rows = static_cast<int>(samples.size());
  if (rows < cols) {
    std::ostringstream msg;
    msg << "fit: " << rows << " samples for " << cols << " basis functions";
    throw std::runtime_error(msg.str());
  }
  for (const auto& s : samples)
    if (s.x * s.x + s.y * s.y > 1.0 + 1e-12) throw std::invalid_argument("fit: sample outside disk");

  Eigen::MatrixXcd a(rows, cols);
  Eigen::VectorXcd v(rows);
  for (int i = 0; i < rows; ++i) {
    DiskPoint p{samples[i].x, samples[i].y};
    v(i) = samples[i].value;
    for (int j = 0; j < cols; ++j)
      a(i, j) = basis == Basis::I
                    ? psi_I(IndexI{keys[j].first, keys[j].second}, p)
                    : std::complex<double>(psi_II(IndexII{keys[j].first, keys[j].second}, p));
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  FitReport report;
  report.basis_count = cols;
  report.rank = static_cast<int>(qr.rank());
  if (report.rank < cols) {
    std::ostringstream msg;
    msg << "fit: rank-deficient design matrix, rank " << report.rank << " of " << cols;
    throw std::runtime_error(msg.str());
  }
  Eigen::VectorXcd c = qr.solve(v);
  Eigen::VectorXcd resid = a * c - v;
  report.rms_residual = std::sqrt(resid.squaredNorm() / rows);
  report.max_residual = resid.cwiseAbs().maxCoeff();

  report.spectrum.basis = basis;
  report.spectrum.max_rung = n_max;
  for (int j = 0; j < cols; ++j)
    if (c(j) != 0.0) report.spectrum.coeffs[keys[j]] = c(j);
  if (basis == Basis::II)
    for (auto& [key, value] : report.spectrum.coeffs)
      if (std::abs(value.imag()) <= kBasisIIImagTol) value = value.real();
  validate(report.spectrum);
  return report;
}

}  // namespace zernike
