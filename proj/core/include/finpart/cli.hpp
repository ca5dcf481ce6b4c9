#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finpart/cauchy_rh.hpp"
#include "finpart/ortho.hpp"

namespace finpart::cli {

enum class Command { gram, norms, rh_check, finite_part, cauchy_eval };
enum class MethodChoice { moments, quadrature, both };
enum class OutputFormat { json, csv };

/// Everything a run needs; validated inside run() before any computation.
struct RunConfig {
  Command command = Command::gram;
  FamilyKind family = FamilyKind::laguerre;
  Cplx alpha;
  std::optional<Cplx> beta;
  int n_max = 4;                       // gram, norms
  int n = 1;                           // rh-check
  double tol = default_tol;            // [1e-14, 1e-4]
  MethodChoice method = MethodChoice::both;
  OutputFormat output = OutputFormat::json;
  std::string out_path;                // empty: write to stdout
  std::vector<Cplx> poly{Cplx(1.0)};   // finite-part, cauchy-eval
  Cplx z;                              // cauchy-eval
};

/// Strict complex literal: `[-+]?float([+-]float i)?`, e.g. "0.5",
/// "-1.3+0.7i", "1e-2-3i". NaN/Inf rejected. Throws ParseError.
Cplx parse_complex(const std::string& s);

/// Comma-separated coefficient list, constant term first.
std::vector<Cplx> parse_poly(const std::string& s);

/// Executes the configured command and writes the report (atomically when
/// out_path is set). Returns the process exit status: 0 success, 2
/// validation failure, 3 numeric failure; on failure the report names the
/// failing operation.
int run(const RunConfig& config);

} // namespace finpart::cli
