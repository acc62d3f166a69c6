#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "slicepoly/error.hpp"
#include "slicepoly/kernels.hpp"
#include "slicepoly/serialize.hpp"
#include "slicepoly/verify.hpp"

namespace slicepoly::cli {

namespace {

// "a,b,c,d" in basis order (1, i, j, k).
Quaternion parse_quaternion(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw Error(ErrorCode::Parse, "bad quaternion component '" + item + "'");
    }
    parts.push_back(v);
  }
  if (parts.size() != 4 || (!text.empty() && text.back() == ',')) {
    throw Error(ErrorCode::Parse, "a quaternion is four comma-separated numbers: " + text);
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

// Adding +0.0 folds -0.0 into 0.0.
nlohmann::ordered_json components_json(const Quaternion& q) {
  return {q.x0 + 0.0, q.x1 + 0.0, q.x2 + 0.0, q.x3 + 0.0};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

int kernel_eval(const std::string& kind, int order, const std::string& q_text,
                const std::string& r_text, bool alt, double tol, std::ostream& out) {
  const Quaternion q = parse_quaternion(q_text);
  const Quaternion r = parse_quaternion(r_text);
  KernelValue kv;
  if (kind == "fock") {
    kv = fock_kernel(order, q, r, tol);
  } else if (kind == "bergman") {
    kv = alt ? bergman_kernel_alt(order, q, r) : bergman_kernel(order, q, r);
  } else {
    kv = e_star(q, r, tol);
  }
  nlohmann::ordered_json doc;
  doc["value"] = components_json(kv.value);
  doc["terms_used"] = kv.terms_used;
  out << doc.dump() << '\n';
  return kExitOk;
}

int table(const std::string& kind, int order, const std::string& slice, int grid,
          const std::string& r_text, std::ostream& out) {
  const Quaternion r = parse_quaternion(r_text);
  const ImaginaryUnit unit = slice == "i"   ? ImaginaryUnit::i()
                             : slice == "j" ? ImaginaryUnit::j()
                                            : ImaginaryUnit::k();
  const bool fock = kind == "fock";
  const double half = fock ? 2.0 : 0.95;
  // Validate the kernel arguments before any row is written.
  if (fock) {
    (void)fock_kernel(order, Quaternion{}, r);
  } else {
    (void)bergman_kernel(order, Quaternion{}, r);
  }
  std::ostringstream body;
  body << "x,y,v0,v1,v2,v3\n";
  for (int a = 0; a < grid; ++a) {
    const double x = grid == 1 ? 0.0 : -half + 2.0 * half * a / (grid - 1);
    for (int b = 0; b < grid; ++b) {
      const double y = grid == 1 ? 0.0 : -half + 2.0 * half * b / (grid - 1);
      if (!fock && x * x + y * y > half * half) continue;
      const Quaternion q = embed(unit, x, y);
      const Quaternion v = fock ? fock_kernel(order, q, r).value : bergman_kernel(order, q, r).value;
      body << format_double(x) << ',' << format_double(y) << ',' << format_double(v.x0) << ','
           << format_double(v.x1) << ',' << format_double(v.x2) << ',' << format_double(v.x3)
           << '\n';
    }
  }
  out << body.str();
  return kExitOk;
}

int eval_function(const std::string& path, const std::string& q_text, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const PolySliceFunction f = parse_poly_json(text);
  const Quaternion v = f(parse_quaternion(q_text));
  nlohmann::ordered_json doc;
  doc["value"] = components_json(v);
  out << doc.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slice polyanalytic Fock and Bergman kernels: evaluation and verification", "slicepoly"};
  app.require_subcommand(1);

  std::string kind;
  int order = 1;
  std::string q_text, r_text = "0,0,0,0";
  bool alt = false;
  double tol = 1e-14;

  auto* kernel = app.add_subcommand("kernel", "Evaluate e_*, the Fock kernel or the Bergman kernel");
  kernel->add_option("--kind", kind, "fock | bergman | estar")
      ->required()
      ->check(CLI::IsMember({"fock", "bergman", "estar"}));
  kernel->add_option("--order", order, "Polyanalytic order N >= 1");
  kernel->add_option("--q", q_text, "First argument as a,b,c,d")->required();
  kernel->add_option("--r", r_text, "Second argument as a,b,c,d")->required();
  kernel->add_flag("--alt", alt, "Use the second closed form of the Bergman kernel");
  kernel->add_option("--tol", tol, "Series tolerance for e_*")->check(CLI::PositiveNumber);

  std::string suite_name = "all";
  VerifyOptions vopt;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("--suite", suite_name, "structure | fock | bergman | all")
      ->check(CLI::IsMember({"structure", "fock", "bergman", "all"}));
  verify->add_option("--seed", vopt.seed, "PRNG seed");
  verify->add_option("--samples", vopt.samples, "Random cases per check")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--nodes", vopt.nodes, "Quadrature size (0 = defaults)")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");

  std::string table_kind, slice = "i";
  int grid = 0;
  std::string table_r = "0,0,0,0";
  int table_order = 1;
  auto* tab = app.add_subcommand("table", "Emit kernel values on a slice grid as CSV");
  tab->add_option("--kind", table_kind, "fock | bergman")
      ->required()
      ->check(CLI::IsMember({"fock", "bergman"}));
  tab->add_option("--order", table_order, "Polyanalytic order N >= 1");
  tab->add_option("--slice", slice, "i | j | k")->check(CLI::IsMember({"i", "j", "k"}));
  tab->add_option("--grid", grid, "Grid points per axis")->required()->check(CLI::PositiveNumber);
  tab->add_option("--r", table_r, "Fixed kernel argument as a,b,c,d");

  std::string fn_path, eval_q;
  auto* ev = app.add_subcommand("eval", "Evaluate a function stored as JSON");
  ev->add_option("--function", fn_path, "Path to the JSON function")->required();
  ev->add_option("--q", eval_q, "Point as a,b,c,d")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*kernel) return kernel_eval(kind, order, q_text, r_text, alt, tol, out);
    if (*tab) return table(table_kind, table_order, slice, grid, table_r, out);
    if (*ev) return eval_function(fn_path, eval_q, out);
    VerifyReport report = run_verify(*parse_suite(suite_name), vopt);
    if (no_timing) report.elapsed_ms = 0;
    out << report.to_json().dump() << '\n';
    return report.ok() ? kExitOk : kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.is_domain_error() ? kExitDomain : kExitUsage;
  }
}

}  // namespace slicepoly::cli
