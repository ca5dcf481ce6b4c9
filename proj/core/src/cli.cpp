#include "finpart/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "finpart/errors.hpp"
#include "finpart/special.hpp"

namespace finpart::cli {

namespace {

using nlohmann::json;

double parse_double_token(const char*& p, const char* end) {
  double sign = 1.0;
  const char* tok = p;
  if (p < end && (*p == '+' || *p == '-')) {
    if (*p == '-') sign = -1.0;
    ++p;
  }
  double v = 0.0;
  const auto res = std::from_chars(p, end, v);
  if (res.ec != std::errc() || res.ptr == p)
    throw ParseError(std::string("parse_complex: bad float near '") +
                     std::string(tok, end) + "'");
  p = res.ptr;
  if (!std::isfinite(v))
    throw ParseError(std::string("parse_complex: non-finite component '") +
                     std::string(tok, p) + "'");
  return sign * v;
}

json cnum(Cplx v, double err) {
  return json{{"re", v.real()}, {"im", v.imag()}, {"err", err}};
}

json cplx_echo(Cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

const char* family_name(FamilyKind k) {
  return k == FamilyKind::laguerre ? "laguerre" : "jacobi";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::gram: return "gram";
    case Command::norms: return "norms";
    case Command::rh_check: return "rh-check";
    case Command::finite_part: return "finite-part";
    case Command::cauchy_eval: return "cauchy-eval";
  }
  return "?";
}

const char* method_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::moments: return "moments";
    case MethodChoice::quadrature: return "quadrature";
    case MethodChoice::both: return "both";
  }
  return "?";
}

OrthoFamily make_family(const RunConfig& cfg) {
  if (cfg.family == FamilyKind::laguerre) return OrthoFamily::laguerre(cfg.alpha);
  if (!cfg.beta) throw ValidationError("jacobi family requires --beta");
  return OrthoFamily::jacobi(cfg.alpha, *cfg.beta);
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol >= 1e-14 && cfg.tol <= 1e-4))
    throw ValidationError("tol must lie in [1e-14, 1e-4]");
  if (cfg.n_max < 0 || cfg.n_max > 16)
    throw ValidationError("n-max must lie in [0, 16]");
  if (cfg.command == Command::rh_check && (cfg.n < 1 || cfg.n > 16))
    throw ValidationError("n must lie in [1, 16]");
  if (cfg.poly.empty()) throw ValidationError("polynomial must be nonempty");
  for (Cplx c : cfg.poly)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("polynomial coefficients must be finite");
  if (cfg.output == OutputFormat::csv) {
    if (cfg.command != Command::gram)
      throw ValidationError("csv output is defined for gram only");
    if (cfg.method == MethodChoice::both)
      throw ValidationError("csv output needs --method moments or quadrature");
  }
  try {
    (void)make_family(cfg);
  } catch (const PoleError& e) {
    throw ValidationError(std::string("family parameters invalid: ") + e.what());
  }
}

json config_echo(const RunConfig& cfg) {
  json j{{"command", command_name(cfg.command)},
         {"family", family_name(cfg.family)},
         {"alpha", cplx_echo(cfg.alpha)},
         {"tol", cfg.tol},
         {"method", method_name(cfg.method)}};
  if (cfg.beta) j["beta"] = cplx_echo(*cfg.beta);
  switch (cfg.command) {
    case Command::gram:
    case Command::norms: j["n_max"] = cfg.n_max; break;
    case Command::rh_check: j["n"] = cfg.n; break;
    case Command::finite_part: break;
    case Command::cauchy_eval: j["z"] = cplx_echo(cfg.z); break;
  }
  return j;
}

json gram_to_json(const GramMatrix& m) {
  json rows = json::array();
  double maxoff = 0.0, maxoff_err = 0.0;
  for (size_t i = 0; i < m.entries.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.entries.size(); ++j) {
      row.push_back(cnum(m.entries[i][j], m.err[i][j]));
      if (i != j && std::abs(m.entries[i][j]) >= maxoff) {
        maxoff = std::abs(m.entries[i][j]);
        maxoff_err = m.err[i][j];
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"entries", std::move(rows)},
              {"max_offdiag", json{{"value", maxoff}, {"err", maxoff_err}}}};
}

json run_gram(const RunConfig& cfg, std::string& op) {
  const OrthoFamily fam = make_family(cfg);
  json out;
  op = "ortho.gram";
  std::optional<GramMatrix> gm, gq;
  if (cfg.method != MethodChoice::quadrature)
    gm = gram(fam, cfg.n_max, GramBasis::orthogonal, BilinearMethod::moments,
              cfg.tol);
  if (cfg.method != MethodChoice::moments)
    gq = gram(fam, cfg.n_max, GramBasis::orthogonal, BilinearMethod::quadrature,
              cfg.tol);
  if (gm) out["moments"] = gram_to_json(*gm);
  if (gq) out["quadrature"] = gram_to_json(*gq);
  if (gm && gq) {
    double d = 0.0, e = 0.0;
    for (size_t i = 0; i < gm->entries.size(); ++i)
      for (size_t j = 0; j < gm->entries.size(); ++j)
        if (std::abs(gm->entries[i][j] - gq->entries[i][j]) >= d) {
          d = std::abs(gm->entries[i][j] - gq->entries[i][j]);
          e = gm->err[i][j] + gq->err[i][j];
        }
    out["agreement"] = json{{"max_abs_diff", d}, {"err", e}};
  }
  return out;
}

json run_norms(const RunConfig& cfg, std::string& op) {
  const OrthoFamily fam = make_family(cfg);
  op = "ortho.norm_formula";
  json rows = json::array();
  double fact = 1.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    if (n > 0) fact *= double(n);
    const Cplx formula = norm_formula(fam, n);
    op = "ortho.bilinear";
    const Polynomial pn = orthogonal_polynomial(fam, n, Normalization::rodrigues);
    const FinitePart measured = bilinear(fam, pn, pn, BilinearMethod::moments);
    json row{{"n", n},
             {"formula", cnum(formula, 1e-13 * std::abs(formula))},
             {"measured", cnum(measured.value, measured.err_estimate)},
             {"rel_dev", std::abs(measured.value - formula) /
                             std::max(std::abs(formula), 1e-300)}};
    if (cfg.family == FamilyKind::laguerre) {
      // constant-index variant n! Gamma(alpha+2), recorded for comparison:
      // it agrees with the measured diagonal only at n = 1
      const Cplx alt = fact * gamma(cfg.alpha + 2.0);
      row["alt_const_form"] = cnum(alt, 1e-13 * std::abs(alt));
      row["alt_rel_dev"] = std::abs(measured.value - alt) /
                           std::max(std::abs(alt), 1e-300);
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

json run_rh_check(const RunConfig& cfg, std::string& op) {
  const OrthoFamily fam = make_family(cfg);
  op = "cauchy_rh.assemble_rh";
  const RHSolution sol = assemble_rh(fam, cfg.n);
  json out;
  out["c_n"] = cnum(sol.c_n, 1e-13 * std::abs(sol.c_n));

  op = "cauchy_rh.jump_residual";
  const bool half = cfg.family == FamilyKind::laguerre;
  const std::vector<double> xs = half ? std::vector<double>{1.5, 3.0}
                                      : std::vector<double>{0.3, 0.7};
  json jump = json::array();
  for (double x : xs)
    jump.push_back(json{{"x", x},
                        {"residual", jump_residual(sol, x)},
                        {"err", 1e-10}});
  out["jump"] = std::move(jump);

  op = "cauchy_rh.ode_residual";
  const Cplx a = fam.alpha().value();
  if (half) {
    const std::vector<Cplx> zs{{-1.0, 0.0}, {-2.0, 0.5},  {2.0, 2.0},
                               {-0.5, -1.5}, {0.0, 3.0},  {-3.0, 0.0},
                               {1.0, -2.0},  {-1.5, 2.5}};
    out["ode"] = json{{"residual", ode_residual_halfline(fam.alpha(), zs)},
                      {"err", 1e-8}};
  } else {
    const std::vector<Cplx> zs{{-1.0, 0.0},  {2.0, 0.0},  {0.5, 2.0},
                               {-0.3, 0.8},  {1.5, -1.0}, {0.0, 3.0},
                               {-2.0, -2.0}, {0.5, -0.7}};
    out["ode"] = json{
        {"residual", ode_residual_unit(fam.alpha(), fam.beta(), zs)},
        {"err", 1e-8}};
  }

  op = "cauchy_rh.asymptotic_residual";
  out["asymptotic"] =
      json{{"violation", asymptotic_residual(sol)}, {"err", 1e-6}};

  op = "cauchy_rh.endpoint_exponent_probe";
  json eps = json::array();
  const int n_endpoints = half ? 1 : 2;
  for (int e = 0; e < n_endpoints; ++e) {
    const EndpointProbe p = endpoint_exponent_probe(sol, e);
    json pj{{"endpoint", e}, {"usable_points", p.usable_points}};
    if (p.slope_fitted) {
      pj["kind"] = "slope";
      pj["slope"] = p.slope;
      pj["err"] = p.slope_stderr;
      pj["expected"] = e == 0 ? a.real() : fam.beta().value().real();
    } else {
      pj["kind"] = "bounded";
      pj["bounded_within_10x"] = p.bounded_within;
    }
    eps.push_back(std::move(pj));
  }
  out["endpoints"] = std::move(eps);

  op = "cauchy_rh.second_row_normalization_check";
  out["second_row"] = json{{"residual", second_row_normalization_check(sol)},
                           {"err", 1e-11}};
  return out;
}

json run_finite_part(const RunConfig& cfg, std::string& op) {
  const Polynomial p{std::vector<Cplx>(cfg.poly)};
  FinitePart fp;
  if (cfg.family == FamilyKind::laguerre) {
    op = "hadamard.finite_part_halfline";
    fp = finite_part_halfline(p, ComplexParam(cfg.alpha, PoleSet::neg_ints),
                              std::nullopt, cfg.tol);
  } else {
    op = "hadamard.finite_part_unit";
    if (!cfg.beta) throw ValidationError("jacobi finite-part requires --beta");
    fp = finite_part_unit(p, ComplexParam(cfg.alpha, PoleSet::neg_ints),
                          ComplexParam(*cfg.beta, PoleSet::neg_ints),
                          std::nullopt, cfg.tol);
  }
  return json{{"value", cnum(fp.value, fp.err_estimate)},
              {"splits", fp.splits}};
}

json run_cauchy_eval(const RunConfig& cfg, std::string& op) {
  op = "cauchy_rh.cauchy_eval";
  const OrthoFamily fam = make_family(cfg);
  const CauchyValue v =
      cauchy_eval({fam, Polynomial{std::vector<Cplx>(cfg.poly)}}, cfg.z, cfg.tol);
  return json{{"value", cnum(v.value, v.err)}};
}

std::string to_csv(const json& report) {
  // flattened (i, j, re, im, err) rows of the single Gram matrix
  const json& g = report.contains("moments") ? report["moments"]
                                             : report["quadrature"];
  std::string out = "i,j,re,im,err\r\n";
  const json& rows = g["entries"];
  char buf[128];
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      const json& e = rows[i][j];
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g,%.17g\r\n", i, j,
                    e["re"].get<double>(), e["im"].get<double>(),
                    e["err"].get<double>());
      out += buf;
    }
  return out;
}

void write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot open output file: " + tmp.string());
    f << payload;
  }
  fs::rename(tmp, target);
}

void write_error(const RunConfig& cfg, const std::string& op,
                 const std::string& message) {
  json j{{"schema", 1},
         {"error", json{{"operation", op}, {"message", message}}}};
  const std::string payload = j.dump(2) + "\n";
  if (!cfg.out_path.empty()) {
    try {
      write_out(cfg.out_path, payload);
      return;
    } catch (...) {
      // fall through to stderr
    }
  }
  std::cerr << payload;
}

} // namespace

Cplx parse_complex(const std::string& s) {
  const char* p = s.data();
  const char* end = s.data() + s.size();
  if (p == end) throw ParseError("parse_complex: empty string");
  const double re = parse_double_token(p, end);
  if (p == end) return Cplx(re, 0.0);
  if (*p != '+' && *p != '-')
    throw ParseError(std::string("parse_complex: unexpected token '") +
                     std::string(p, end) + "'");
  const double im = parse_double_token(p, end);
  if (p == end || *p != 'i' || p + 1 != end)
    throw ParseError(std::string("parse_complex: expected trailing 'i' in '") +
                     s + "'");
  return Cplx(re, im);
}

std::vector<Cplx> parse_poly(const std::string& s) {
  std::vector<Cplx> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    const size_t a = tok.find_first_not_of(" \t");
    const size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("parse_poly: empty coefficient");
    out.push_back(parse_complex(tok.substr(a, b - a + 1)));
    start = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) throw ParseError("parse_poly: no coefficients");
  return out;
}

int run(const RunConfig& cfg) {
  try {
    validate(cfg);
  } catch (const std::exception& e) {
    write_error(cfg, "validate", e.what());
    return 2;
  }
  std::string op = "dispatch";
  try {
    json report{{"schema", 1}, {"config", config_echo(cfg)}};
    json body;
    switch (cfg.command) {
      case Command::gram: body = run_gram(cfg, op); break;
      case Command::norms: body = run_norms(cfg, op); break;
      case Command::rh_check: body = run_rh_check(cfg, op); break;
      case Command::finite_part: body = run_finite_part(cfg, op); break;
      case Command::cauchy_eval: body = run_cauchy_eval(cfg, op); break;
    }
    report.update(body);
    const std::string payload = cfg.output == OutputFormat::csv
                                    ? to_csv(report)
                                    : report.dump(2) + "\n";
    op = "write_report";
    write_out(cfg.out_path, payload);
    return 0;
  } catch (const std::exception& e) {
    write_error(cfg, op, e.what());
    return 3;
  }
}

} // namespace finpart::cli
