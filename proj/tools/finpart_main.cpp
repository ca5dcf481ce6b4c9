#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "finpart/cli.hpp"
#include "finpart/errors.hpp"

namespace fc = finpart::cli;

namespace {

struct RawArgs {
  std::string family = "laguerre";
  std::string alpha;
  std::string beta;
  std::string method = "both";
  std::string output = "json";
  std::string out_path;
  std::string poly = "1";
  std::string z;
  int n_max = 4;
  int n = 1;
  double tol = 0.0; // 0: unset, fall back to FINPART_TOL or the default
};

void add_common(CLI::App* cmd, RawArgs& a, bool with_method) {
  cmd->add_option("--family", a.family, "laguerre or jacobi")
      ->check(CLI::IsMember({"laguerre", "jacobi"}))
      ->required();
  cmd->add_option("--alpha", a.alpha, "complex parameter, e.g. -1.3+0.7i")
      ->required();
  cmd->add_option("--beta", a.beta, "complex parameter (jacobi)");
  cmd->add_option("--tol", a.tol, "absolute tolerance in [1e-14, 1e-4]");
  if (with_method)
    cmd->add_option("--method", a.method, "moments, quadrature or both")
        ->check(CLI::IsMember({"moments", "quadrature", "both"}));
  cmd->add_option("--output", a.output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", a.out_path, "report path (default: stdout)");
}

fc::RunConfig build_config(fc::Command command, const RawArgs& a) {
  fc::RunConfig cfg;
  cfg.command = command;
  cfg.family = a.family == "jacobi" ? finpart::FamilyKind::jacobi
                                    : finpart::FamilyKind::laguerre;
  cfg.alpha = fc::parse_complex(a.alpha);
  if (!a.beta.empty()) cfg.beta = fc::parse_complex(a.beta);
  cfg.n_max = a.n_max;
  cfg.n = a.n;
  if (a.tol > 0.0) {
    cfg.tol = a.tol;
  } else if (const char* env = std::getenv("FINPART_TOL")) {
    cfg.tol = std::strtod(env, nullptr);
  }
  if (a.method == "moments") cfg.method = fc::MethodChoice::moments;
  else if (a.method == "quadrature") cfg.method = fc::MethodChoice::quadrature;
  else cfg.method = fc::MethodChoice::both;
  cfg.output = a.output == "csv" ? fc::OutputFormat::csv : fc::OutputFormat::json;
  cfg.out_path = a.out_path;
  cfg.poly = fc::parse_poly(a.poly);
  if (!a.z.empty()) cfg.z = fc::parse_complex(a.z);
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard finite-part integrals, general-parameter Laguerre/"
               "Jacobi orthogonality and Riemann-Hilbert verification"};
  app.require_subcommand(1);

  RawArgs a;
  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the family polynomials");
  add_common(gram, a, true);
  gram->add_option("--n-max", a.n_max, "largest degree (<= 16)");

  CLI::App* norms = app.add_subcommand("norms", "diagonal norms vs closed forms");
  add_common(norms, a, false);
  norms->add_option("--n-max", a.n_max, "largest degree (<= 16)");

  CLI::App* rh = app.add_subcommand("rh-check", "Riemann-Hilbert residual sweep");
  add_common(rh, a, false);
  rh->add_option("--n", a.n, "polynomial degree (>= 1)");

  CLI::App* fp = app.add_subcommand("finite-part", "finite-part integral of a polynomial density");
  add_common(fp, a, false);
  fp->add_option("--poly", a.poly, "coefficients c0,c1,... (complex)");

  CLI::App* ce = app.add_subcommand("cauchy-eval", "finite-part Cauchy transform at a point");
  add_common(ce, a, false);
  ce->add_option("--poly", a.poly, "coefficients c0,c1,... (complex)");
  ce->add_option("--z", a.z, "evaluation point off the cut")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  fc::Command command;
  if (gram->parsed()) command = fc::Command::gram;
  else if (norms->parsed()) command = fc::Command::norms;
  else if (rh->parsed()) command = fc::Command::rh_check;
  else if (fp->parsed()) command = fc::Command::finite_part;
  else command = fc::Command::cauchy_eval;

  try {
    return fc::run(build_config(command, a));
  } catch (const finpart::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
