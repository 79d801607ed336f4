#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zernike {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool exact = false;  // held in exact arithmetic, error identically 0
  double error = 0;
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  double tolerance = 0;
  bool pass = false;
  bool exact = false;
  double worst_error = 0;
  std::vector<CheckResult> checks;
};

struct VerifyOptions {
  int n_max = -1;        // -1: per-suite default
  int order = 0;         // 0: per-suite default quadrature order
  double tolerance = 0;  // 0: per-suite default
  unsigned seed = 0;
  int threads = 1;
};

SuiteReport verify_orthonormality(VerifyOptions opt = {});  // default n_max 8, order 64, tol 1e-10
SuiteReport verify_unitarity(VerifyOptions opt = {});       // default n_max 12, exact
SuiteReport verify_eigenvalue(VerifyOptions opt = {});      // default n_max 12, exact
SuiteReport verify_overlap(VerifyOptions opt = {});         // default n_max 8, order 96, tol 1e-9
SuiteReport verify_fourier(VerifyOptions opt = {});         // default degree 10, tol 1e-11
SuiteReport verify_symmetry(VerifyOptions opt = {});        // default n_max 12; random-point reality

const std::vector<std::string>& suite_names();
SuiteReport run_suite(std::string_view name, VerifyOptions opt = {});

}  // namespace zernike
