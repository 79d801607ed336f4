#include "zernike/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zernike {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& expected_header) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected_header)
    throw std::invalid_argument("csv: expected header '" + expected_header + "'");
  std::vector<std::vector<std::string>> rows;
  size_t width = split_line(expected_header).size();
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split_line(line);
    if (cells.size() != width) throw std::invalid_argument("csv: ragged row");
    rows.push_back(std::move(cells));
  }
  return rows;
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("json: missing key '") + key + "'");
  return *it;
}

}  // namespace

json exact_to_json(const ExactComplex& value) {
  const auto& mag = value.magnitude();
  auto v = value.to_complex();
  return {{"phase_k", value.phase().k()},
          {"sign", mag.sign()},
          {"radicand_num", numerator(mag.radicand()).str()},
          {"radicand_den", denominator(mag.radicand()).str()},
          {"re", v.real()},
          {"im", v.imag()}};
}

ExactComplex exact_from_json(const json& j) {
  int phase_k = require(j, "phase_k").get<int>();
  int sign = require(j, "sign").get<int>();
  BigInt num(require(j, "radicand_num").get<std::string>());
  BigInt den(require(j, "radicand_den").get<std::string>());
  if (den == 0) throw std::invalid_argument("json: zero radicand denominator");
  return ExactComplex(QuarterPhase(phase_k), SignedSqrtRational(sign, BigRational(num, den)));
}

json tables_to_json(int n_max) {
  if (n_max < 0) throw std::invalid_argument("tables: negative n_max");
  json mats = json::array();
  for (int n = 0; n <= n_max; ++n) {
    auto w = w_matrix(n);
    json rows = json::array();
    for (int r = 0; r <= n; ++r) {
      json row = json::array();
      for (int c = 0; c <= n; ++c) row.push_back(exact_to_json(w.at(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back({{"n", n}, {"rows", std::move(rows)}});
  }
  return {{"n_max", n_max},
          {"layout", "rows: n1 = n..0; cols: m = n, n-2, ..., -n"},
          {"matrices", std::move(mats)}};
}

std::vector<InterbasisMatrix> tables_from_json(const json& j) {
  std::vector<InterbasisMatrix> out;
  for (const auto& mat : require(j, "matrices")) {
    InterbasisMatrix w;
    w.n = require(mat, "n").get<int>();
    const auto& rows = require(mat, "rows");
    if (rows.size() != static_cast<size_t>(w.n + 1))
      throw std::invalid_argument("tables json: wrong row count");
    for (const auto& row : rows) {
      if (row.size() != static_cast<size_t>(w.n + 1))
        throw std::invalid_argument("tables json: wrong column count");
      std::vector<ExactComplex> entries;
      for (const auto& cell : row) entries.push_back(exact_from_json(cell));
      w.entries.push_back(std::move(entries));
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string tables_to_csv(int n_max) {
  if (n_max < 0) throw std::invalid_argument("tables: negative n_max");
  std::string out = "n,n1,n2,m,phase_k,sign,radicand_num,radicand_den,re,im\n";
  for (int n = 0; n <= n_max; ++n) {
    auto w = w_matrix(n);
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) {
        const auto& e = w.at(r, c);
        auto v = e.to_complex();
        int n1 = w.row_n1(r);
        out += std::to_string(n) + ',' + std::to_string(n1) + ',' + std::to_string(n - n1) + ',' +
               std::to_string(w.col_m(c)) + ',' + std::to_string(e.phase().k()) + ',' +
               std::to_string(e.magnitude().sign()) + ',' +
               numerator(e.magnitude().radicand()).str() + ',' +
               denominator(e.magnitude().radicand()).str() + ',' + fmt_double(v.real()) + ',' +
               fmt_double(v.imag()) + '\n';
      }
  }
  return out;
}

std::vector<InterbasisMatrix> tables_from_csv(const std::string& text) {
  auto rows = parse_csv(text, "n,n1,n2,m,phase_k,sign,radicand_num,radicand_den,re,im");
  std::vector<InterbasisMatrix> out;
  for (const auto& cells : rows) {
    int n = std::stoi(cells[0]);
    while (out.size() <= static_cast<size_t>(n)) {
      InterbasisMatrix w;
      w.n = static_cast<int>(out.size());
      w.entries.assign(w.n + 1, std::vector<ExactComplex>(w.n + 1));
      out.push_back(std::move(w));
    }
    int n1 = std::stoi(cells[1]);
    int m = std::stoi(cells[3]);
    int r = n - n1;
    int c = (n - m) / 2;
    if (r < 0 || r > n || c < 0 || c > n || (n - m) % 2 != 0)
      throw std::invalid_argument("tables csv: index out of range");
    out[n].entries[r][c] =
        ExactComplex(QuarterPhase(std::stoi(cells[4])),
                     SignedSqrtRational(std::stoi(cells[5]),
                                        BigRational(BigInt(cells[6]), BigInt(cells[7]))));
  }
  return out;
}

json grid_to_json(const GridSample& grid) {
  json values = json::array();
  json mask = json::array();
  for (size_t i = 0; i < grid.values.size(); ++i) {
    values.push_back({grid.values[i].real(), grid.values[i].imag()});
    mask.push_back(grid.mask[i] != 0);
  }
  return {{"nx", grid.nx}, {"ny", grid.ny}, {"values", std::move(values)}, {"mask", std::move(mask)}};
}

GridSample grid_from_json(const json& j) {
  GridSample grid;
  grid.nx = require(j, "nx").get<int>();
  grid.ny = require(j, "ny").get<int>();
  const auto& values = require(j, "values");
  const auto& mask = require(j, "mask");
  size_t total = static_cast<size_t>(grid.nx) * grid.ny;
  if (values.size() != total || mask.size() != total)
    throw std::invalid_argument("grid json: size mismatch");
  for (size_t i = 0; i < total; ++i) {
    grid.values.emplace_back(values[i][0].get<double>(), values[i][1].get<double>());
    grid.mask.push_back(mask[i].get<bool>() ? 1 : 0);
  }
  return grid;
}

std::string grid_to_csv(const GridSample& grid) {
  std::string out = "x,y,re,im,in_disk\n";
  for (int iy = 0; iy < grid.ny; ++iy) {
    double y = -1.0 + 2.0 * iy / (grid.ny - 1);
    for (int ix = 0; ix < grid.nx; ++ix) {
      double x = -1.0 + 2.0 * ix / (grid.nx - 1);
      size_t at = static_cast<size_t>(iy) * grid.nx + ix;
      out += fmt_double(x) + ',' + fmt_double(y) + ',' + fmt_double(grid.values[at].real()) + ',' +
             fmt_double(grid.values[at].imag()) + ',' + (grid.mask[at] ? "1\n" : "0\n");
    }
  }
  return out;
}

GridSample grid_from_csv(const std::string& text) {
  auto rows = parse_csv(text, "x,y,re,im,in_disk");
  if (rows.empty()) throw std::invalid_argument("grid csv: no data rows");
  GridSample grid;
  size_t nx = 0;
  while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
  grid.nx = static_cast<int>(nx);
  if (nx == 0 || rows.size() % nx != 0) throw std::invalid_argument("grid csv: ragged grid");
  grid.ny = static_cast<int>(rows.size() / nx);
  for (const auto& cells : rows) {
    grid.values.emplace_back(std::stod(cells[2]), std::stod(cells[3]));
    grid.mask.push_back(cells[4] == "1" ? 1 : 0);
  }
  return grid;
}

json spectrum_to_json(const WavefrontSpectrum& spec) {
  json coeffs = json::array();
  for (const auto& [key, value] : spec.coeffs) {
    json entry;
    if (spec.basis == Basis::I) {
      entry["n"] = key.first;
      entry["m"] = key.second;
    } else {
      entry["n1"] = key.first;
      entry["n2"] = key.second;
    }
    entry["re"] = value.real();
    entry["im"] = value.imag();
    coeffs.push_back(std::move(entry));
  }
  return {{"basis", spec.basis == Basis::I ? "I" : "II"},
          {"max_rung", spec.max_rung},
          {"coeffs", std::move(coeffs)}};
}

WavefrontSpectrum spectrum_from_json(const json& j) {
  WavefrontSpectrum spec;
  std::string basis = require(j, "basis").get<std::string>();
  if (basis == "I")
    spec.basis = Basis::I;
  else if (basis == "II")
    spec.basis = Basis::II;
  else
    throw std::invalid_argument("spectrum json: basis must be \"I\" or \"II\"");
  spec.max_rung = require(j, "max_rung").get<int>();
  for (const auto& entry : require(j, "coeffs")) {
    int a = spec.basis == Basis::I ? require(entry, "n").get<int>()
                                   : require(entry, "n1").get<int>();
    int b = spec.basis == Basis::I ? require(entry, "m").get<int>()
                                   : require(entry, "n2").get<int>();
    double re = require(entry, "re").get<double>();
    double im = entry.value("im", 0.0);
    if (spec.coeffs.count({a, b})) throw std::invalid_argument("spectrum json: duplicate index");
    spec.coeffs[{a, b}] = {re, im};
  }
  validate(spec);
  return spec;
}

json fit_report_to_json(const FitReport& report) {
  return {{"spectrum", spectrum_to_json(report.spectrum)},
          {"rms_residual", report.rms_residual},
          {"max_residual", report.max_residual},
          {"rank", report.rank},
          {"basis_count", report.basis_count}};
}

std::vector<Sample> samples_from_json(const json& j) {
  std::vector<Sample> out;
  for (const auto& entry : j)
    out.push_back({require(entry, "x").get<double>(), require(entry, "y").get<double>(),
                   {require(entry, "re").get<double>(), entry.value("im", 0.0)}});
  return out;
}

std::vector<Sample> samples_from_csv(const std::string& text) {
  auto rows = parse_csv(text, "x,y,re,im");
  std::vector<Sample> out;
  for (const auto& cells : rows)
    out.push_back({std::stod(cells[0]), std::stod(cells[1]),
                   {std::stod(cells[2]), std::stod(cells[3])}});
  return out;
}

}  // namespace zernike
