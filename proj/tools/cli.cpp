#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdirac/error.hpp"
#include "fracdirac/kernel.hpp"
#include "fracdirac/solution.hpp"
#include "fracdirac/spectral.hpp"
#include "suites.hpp"

namespace fracdirac::cli {

namespace {

constexpr int kDigits = 17;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(kDigits) << v;
  return os.str();
}

// "1", "e1", "e2", "e12", ...
std::string blade_name(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int j = 0; j < 32; ++j) {
    if (mask & (1u << j)) s += std::to_string(j + 1);
  }
  return s;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct KernelArgs {
  double alpha = 0.0;
  int n = 1;
  std::vector<double> r;
  double tau_re = 1.0;
  double tau_im = 0.0;
  std::string method = "auto";
  double tol = 1e-12;
  bool allow_m_zero = false;
};

struct SolutionArgs {
  double alpha = 0.0;
  double theta = 0.0;
  int n = 1;
  double t = 1.0;
  int grid_n = 256;
  std::optional<double> grid_l;
  std::string path = "spectral";
  std::string out;
  bool allow_m_zero = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
  std::string out;
};

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
  // The order must sit in an admissible band; the kernel itself only needs Re τ >= 0.
  validate_params(a.alpha, 0.0, a.allow_m_zero);
  const KernelMethod method = parse_kernel_method(a.method);
  KernelOptions opts;
  opts.tol = a.tol;
  const cplx tau{a.tau_re, a.tau_im};
  out << "r,re_K,im_K,method,est_error\n";
  for (double r : a.r) {
    const KernelValue v = kernel_evaluate(KernelQuery{a.alpha, a.n, r, tau}, method, opts);
    out << num(r) << ',' << num(v.value.real()) << ',' << num(v.value.imag()) << ','
        << to_string(v.method) << ',' << num(v.est_error) << '\n';
  }
  return kOk;
}

void write_field_csv(const MultivectorField& f, std::ostream& out) {
  const GridSpec& g = f.grid();
  for (int a = 0; a < g.n; ++a) out << (a ? "," : "") << 'x' << a + 1;
  for (std::uint32_t b = 0; b < f.blades(); ++b) {
    out << ",re_" << blade_name(b) << ",im_" << blade_name(b);
  }
  out << '\n';
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto x = g.position(p);
    for (int a = 0; a < g.n; ++a) out << (a ? "," : "") << num(x[a]);
    for (std::uint32_t b = 0; b < f.blades(); ++b) {
      out << ',' << num(f.coeff(p, b).real()) << ',' << num(f.coeff(p, b).imag());
    }
    out << '\n';
  }
}

void write_field_json(const MultivectorField& f, const SolutionArgs& a, const SkewSetup& s,
                      std::ostream& out) {
  const GridSpec& g = f.grid();
  nlohmann::json blades = nlohmann::json::array();
  for (std::uint32_t b = 0; b < f.blades(); ++b) blades.push_back(blade_name(b));
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto x = g.position(p);
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::uint32_t b = 0; b < f.blades(); ++b) {
      coeffs.push_back({f.coeff(p, b).real(), f.coeff(p, b).imag()});
    }
    points.push_back({{"x", std::vector<double>(x.begin(), x.begin() + g.n)}, {"coeffs", coeffs}});
  }
  const nlohmann::json doc{
      {"grid", {{"n", g.n}, {"N", g.points_per_axis}, {"L", g.half_width}}},
      {"setup", {{"alpha", s.alpha}, {"theta", s.theta}, {"m", s.m}}},
      {"t", a.t},
      {"path", a.path},
      {"blades", blades},
      {"points", points}};
  out << doc.dump(1) << '\n';
}

int cmd_solution(const SolutionArgs& a, std::ostream& out) {
  const SkewSetup s = validate_params(a.alpha, a.theta, a.allow_m_zero);
  const GridSpec g{a.n, a.grid_n, a.grid_l.value_or(suggested_half_width(a.alpha, std::max(a.t, 1e-3)))};
  g.validate();
  MultivectorField f(g);
  if (a.path == "spectral") {
    f = solution_field_spectral(s, g, a.t);
  } else if (a.path == "projected") {
    f = solution_field_projected(s, g, a.t);
  } else if (a.path == "hilbert") {
    f = solution_field_hilbert(s, g, a.t, HilbertPath::spectral);
  } else {
    throw Error(Errc::invalid_argument, "unknown path '" + a.path + "'");
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw Error(Errc::invalid_argument, "cannot open output file " + a.out);
    sink = &file;
  }
  if (ends_with(a.out, ".json")) {
    write_field_json(f, a, s, *sink);
  } else {
    write_field_csv(f, *sink);
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const VerificationReport rep = run_suite(a.suite, a.tol);
  const std::string text = to_json(rep);
  if (a.out.empty()) {
    out << text << '\n';
  } else {
    std::ofstream file(a.out);
    if (!file) throw Error(Errc::invalid_argument, "cannot open output file " + a.out);
    file << text << '\n';
  }
  return rep.passed() ? kOk : kVerificationFailed;
}

constexpr const char* kKernelHelp =
    "Evaluate the scalar kernel K_{alpha,n}(r, tau).\n"
    "CSV columns: r, re_K, im_K, method, est_error (absolute).";

constexpr const char* kSolutionHelp =
    "Dump Phi_alpha(x,t;theta) on the grid [-L,L)^n.\n"
    "CSV columns: x1..xn, then re_<blade>, im_<blade> for blades 1, e1, e2, e12, ...\n"
    "An --out path ending in .json writes a JSON document with a grid header.";

constexpr const char* kVerifyHelp =
    "Run verification suites and print a JSON report; exit 1 if any check fails.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernels and fundamental solutions for skewed fractional Dirac evolution"};
  app.name("fracdirac");
  app.require_subcommand(1);

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", kKernelHelp);
  kernel->add_option("--alpha", ka.alpha, "order alpha")->required();
  kernel->add_option("--n", ka.n, "spatial dimension")->check(CLI::Range(1, 64));
  kernel->add_option("--r", ka.r, "radii (comma separated or repeated)")->required()->delimiter(',');
  kernel->add_option("--tau-re", ka.tau_re, "Re tau (>= 0)");
  kernel->add_option("--tau-im", ka.tau_im, "Im tau");
  kernel->add_option("--method", ka.method, "wright | quadrature | mellin | auto")
      ->check(CLI::IsMember({"wright", "quadrature", "mellin", "auto"}));
  kernel->add_option("--tol", ka.tol, "target relative accuracy");
  kernel->add_flag("--allow-m-zero", ka.allow_m_zero, "accept 0 < alpha < 2 (band m = 0)");

  SolutionArgs sa;
  auto* solution = app.add_subcommand("solution", kSolutionHelp);
  solution->add_option("--alpha", sa.alpha, "order alpha")->required();
  solution->add_option("--theta", sa.theta, "skewness theta");
  solution->add_option("--n", sa.n, "spatial dimension (1..3)");
  solution->add_option("--t", sa.t, "time t >= 0");
  solution->add_option("--grid-N", sa.grid_n, "points per axis (even)");
  solution->add_option("--grid-L", sa.grid_l, "half width L (default 8 t^{1/alpha} + 4)");
  solution->add_option("--path", sa.path, "spectral | projected | hilbert")
      ->check(CLI::IsMember({"spectral", "projected", "hilbert"}));
  solution->add_option("--out", sa.out, "output file (.csv or .json); stdout CSV if omitted");
  solution->add_flag("--allow-m-zero", sa.allow_m_zero, "accept 0 < alpha < 2 (band m = 0)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", kVerifyHelp);
  verify->add_option("--suite", va.suite, "residual | semigroup | crosscheck | airy | all")
      ->check(CLI::IsMember({"residual", "semigroup", "crosscheck", "airy", "all"}));
  verify->add_option("--tol", va.tol, "override every check's tolerance");
  verify->add_option("--out", va.out, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  try {
    if (*kernel) return cmd_kernel(ka, out);
    if (*solution) return cmd_solution(sa, out);
    return cmd_verify(va, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == Errc::no_convergence ? kVerificationFailed : kInvalidArguments;
  }
}

}  // namespace fracdirac::cli
