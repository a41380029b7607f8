#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ucb/ellipticity.hpp"
#include "ucb/errors.hpp"
#include "ucb/julia.hpp"
#include "ucb/normalization.hpp"
#include "ucb/render.hpp"
#include "ucb/selfcheck.hpp"
#include "ucb/unicritical.hpp"

namespace ucb::cli {

namespace {

// Inputs typed with nine significant digits (e.g. s = 0.333333333) sit about
// 3e−10 from an exact threshold, so the command line is slightly looser than
// the library default.
constexpr double kCliThresholdTol = 1e-9;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

std::string cnum(cplx z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

// Real-valued multipliers print without an imaginary part.
std::string multiplier_text(cplx m) { return m.imag() == 0.0 ? num(m.real()) : cnum(m); }

struct ParameterFlags {
  int n = 2;
  double s = 0.0, psi = 0.0, re = 0.0, im = 0.0;
  CLI::Option* s_opt = nullptr;
  CLI::Option* re_opt = nullptr;

  void add(CLI::App* app) {
    app->add_option("--n", n, "Degree n >= 2")->required()->check(CLI::Range(2, 64));
    s_opt = app->add_option("--s", s, "Modulus |w| (polar input, with --psi)");
    auto* psi_opt = app->add_option("--psi", psi, "Argument of w in radians (polar input)");
    re_opt = app->add_option("--re", re, "Real part of w (cartesian input, with --im)");
    auto* im_opt = app->add_option("--im", im, "Imaginary part of w (cartesian input)");
    s_opt->needs(psi_opt);
    psi_opt->needs(s_opt);
    re_opt->needs(im_opt);
    im_opt->needs(re_opt);
    s_opt->excludes(re_opt);
    s_opt->excludes(im_opt);
    psi_opt->excludes(re_opt);
    psi_opt->excludes(im_opt);
  }

  cplx w() const {
    if (s_opt->count() > 0) return std::polar(s, psi);
    if (re_opt->count() > 0) return {re, im};
    throw PreconditionError("give the parameter as --s/--psi or --re/--im");
  }
};

int classify(const ParameterFlags& p, double tol, std::ostream& out) {
  const UnicriticalBlaschke b(p.n, p.w());
  const BlaschkeClass cls = classify_unicritical(b.degree(), b.critical_point(), tol);
  std::ostringstream lines;
  lines << "n=" << b.degree() << '\n'
        << "w=" << cnum(b.critical_point()) << '\n'
        << "class=" << to_string(cls.kind) << '\n'
        << "dw=" << cnum(cls.dw_point) << '\n'
        << "multiplier=" << multiplier_text(cls.multiplier) << '\n'
        << "s0=" << num(threshold_on_ray(b.degree(), b.psi())) << '\n'
        << "julia=" << to_string(julia_type(b, cls)) << '\n';
  if (cls.kind == Dynamics::Parabolic) {
    lines << "second_derivative_abs=" << num(std::abs(second_derivative(b, cls.dw_point))) << '\n'
          << "step=" << to_string(hyperbolic_step_kind(b, cls)) << '\n';
  }
  out << lines.str();
  return kOk;
}

int boundary(int n, int angles, const std::string& path, int workers, std::ostream& out) {
  const CurveTable table = boundary_curve(n, angles, Exec::parallel(workers));
  write_csv(table, path);
  double min_s0 = 1.0;
  for (const CurveRow& row : table.rows)
    if (!std::isnan(row.s0)) min_s0 = std::min(min_s0, row.s0);
  out << "rows=" << table.rows.size() << '\n' << "min_s0=" << num(min_s0) << '\n' << "out=" << path << '\n';
  return kOk;
}

int render_param(int n, int width, int height, const std::string& region, const std::string& path,
                 int workers, std::ostream& out) {
  const Region r = region == "sector" ? Region::Sector : Region::FullDisk;
  write_ppm(render_parameter_plane(n, width, height, r, Exec::parallel(workers)), path);
  out << "width=" << width << '\n' << "height=" << height << '\n'
      << "region=" << to_string(r) << '\n' << "out=" << path << '\n';
  return kOk;
}

struct JuliaFlags {
  std::uint64_t seed = 1;
  int count = kDefaultSampleCount;
  int transient = kDefaultTransient;
  int width = 512;
  std::string out_image;
  std::string out_csv;
};

int render_julia(const ParameterFlags& p, const JuliaFlags& f, std::ostream& out) {
  const UnicriticalBlaschke b(p.n, p.w());
  const BlaschkeClass cls = classify_unicritical(b.degree(), b.critical_point());
  const JuliaType type = julia_type(b, cls);
  const JuliaSample sample = backward_orbit(b, f.seed, f.transient, f.count);
  if (!f.out_image.empty()) write_ppm(render_julia_circle(b, sample, f.width), f.out_image);
  if (!f.out_csv.empty()) write_sample_csv(sample, f.out_csv);

  const std::vector<double> gaps = sample_gaps(sample);
  out << "class=" << to_string(cls.kind) << '\n'
      << "julia=" << to_string(type) << '\n'
      << "samples=" << sample.angles.size() << '\n'
      << "max_gap=" << num(*std::max_element(gaps.begin(), gaps.end())) << '\n';
  if (type == JuliaType::Cantor) {
    const CircleArc gap = fatou_gap(b, sample);
    out << "fatou_gap=" << num(gap.phi1) << ',' << num(gap.phi2) << '\n';
  }
  if (!f.out_image.empty()) out << "out_image=" << f.out_image << '\n';
  if (!f.out_csv.empty()) out << "out_csv=" << f.out_csv << '\n';
  return kOk;
}

FiniteBlaschke read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  FiniteBlaschke f;
  std::string key;
  int n = -1;
  bool have_theta = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    if (key == "theta") {
      if (!(ls >> f.theta)) throw PreconditionError("input file: bad theta line");
      have_theta = true;
    } else if (key == "n") {
      if (!(ls >> n) || n < 2) throw PreconditionError("input file: bad n line");
    } else if (key == "zero") {
      double re = 0.0, im = 0.0;
      if (!(ls >> re >> im)) throw PreconditionError("input file: bad zero line");
      f.zeros.emplace_back(re, im);
    } else {
      throw PreconditionError("input file: unknown key '" + key + "'");
    }
  }
  if (!have_theta || n < 0) throw PreconditionError("input file: theta and n are required");
  if (f.degree() != n) throw PreconditionError("input file: expected n zero lines");
  return f;
}

int normalize_cmd(const std::string& path, std::ostream& out) {
  const NormalizationResult r = normalize(read_spec_file(path));
  out << "w " << num(r.w.real()) << ' ' << num(r.w.imag()) << '\n' << "residual " << num(r.residual) << '\n';
  return kOk;
}

int selfcheck(const std::string& level, std::ostream& out) {
  const CheckLevel l = level == "full" ? CheckLevel::Full : CheckLevel::Quick;
  int failed = 0;
  run_selfcheck(l, [&](const CheckResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << r.module << '.' << r.name << " (" << secs << ") " << r.detail
        << std::endl;
    if (!r.passed) ++failed;
  });
  out << (failed == 0 ? "selfcheck=pass" : "selfcheck=fail") << '\n';
  return failed == 0 ? kOk : kNumeric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unicritical Blaschke products: classification, boundaries and renders", "blaschke"};
  app.require_subcommand(1, 1);

  ParameterFlags classify_p;
  double tol = kCliThresholdTol;
  auto* classify_cmd = app.add_subcommand("classify", "Classify B_w and report its Denjoy-Wolff data");
  classify_p.add(classify_cmd);
  classify_cmd->add_option("--tol", tol, "Parabolic tolerance on |s - s0|")->capture_default_str();

  int b_n = 2, b_angles = 1024, workers = 0;
  std::string b_out;
  auto* boundary_cmd = app.add_subcommand("boundary", "Tabulate s0(psi) on equally spaced rays as CSV");
  boundary_cmd->add_option("--n", b_n, "Degree n >= 2")->required()->check(CLI::Range(2, 64));
  boundary_cmd->add_option("--angles", b_angles, "Number of rays (>= 8)")->check(CLI::Range(8, 1 << 22))->capture_default_str();
  boundary_cmd->add_option("--out", b_out, "Output CSV path")->required();
  boundary_cmd->add_option("--workers", workers, "OpenMP threads (0 = default)");

  int r_n = 2, width = 512, height = 512;
  std::string region = "full", r_out;
  auto* param_cmd = app.add_subcommand("render-param", "Render the parameter plane as PPM");
  param_cmd->add_option("--n", r_n, "Degree n >= 2")->required()->check(CLI::Range(2, 64));
  param_cmd->add_option("--width", width, "Image width (>= 16)")->check(CLI::Range(16, 16384))->capture_default_str();
  param_cmd->add_option("--height", height, "Image height (>= 16)")->check(CLI::Range(16, 16384))->capture_default_str();
  param_cmd->add_option("--region", region, "sector or full")->check(CLI::IsMember({"sector", "full"}))->capture_default_str();
  param_cmd->add_option("--out", r_out, "Output PPM path")->required();
  param_cmd->add_option("--workers", workers, "OpenMP threads (0 = default)");

  ParameterFlags julia_p;
  JuliaFlags jf;
  auto* julia_cmd = app.add_subcommand("render-julia", "Sample the Julia set by inverse iteration");
  julia_p.add(julia_cmd);
  julia_cmd->add_option("--seed", jf.seed, "LCG seed")->capture_default_str();
  julia_cmd->add_option("--count", jf.count, "Kept sample points")->check(CLI::Range(1, 100'000'000))->capture_default_str();
  julia_cmd->add_option("--transient", jf.transient, "Discarded initial points")->check(CLI::Range(0, 1'000'000))->capture_default_str();
  julia_cmd->add_option("--width", jf.width, "Image width (>= 64)")->check(CLI::Range(64, 16384))->capture_default_str();
  julia_cmd->add_option("--out-image", jf.out_image, "Output PPM path");
  julia_cmd->add_option("--out-csv", jf.out_csv, "Output CSV of sample angles");

  std::string spec_path;
  auto* norm_cmd = app.add_subcommand("normalize", "Normalize a unicritical Blaschke product from a input file");
  norm_cmd->add_option("spec", spec_path, "File with lines 'theta <rad>', 'n <int>', 'zero <re> <im>'")->required();

  std::string level = "quick";
  auto* check_cmd = app.add_subcommand("selfcheck", "Run the built-in invariant suite");
  check_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  std::vector<std::string> argv_store{"blaschke"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return classify(classify_p, tol, out);
    if (boundary_cmd->parsed()) return boundary(b_n, b_angles, b_out, workers, out);
    if (param_cmd->parsed()) return render_param(r_n, width, height, region, r_out, workers, out);
    if (julia_cmd->parsed()) return render_julia(julia_p, jf, out);
    if (norm_cmd->parsed()) return normalize_cmd(spec_path, out);
    if (check_cmd->parsed()) return selfcheck(level, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace ucb::cli
