#include "ucb/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "ucb/ellipticity.hpp"
#include "ucb/errors.hpp"

namespace ucb {

RasterImage::RasterImage(int w, int h, Rgb fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw PreconditionError("RasterImage: dimensions must be positive");
  pixels.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
  for (std::size_t k = 0; k < pixels.size(); k += 3) {
    pixels[k] = fill.r;
    pixels[k + 1] = fill.g;
    pixels[k + 2] = fill.b;
  }
}

Rgb RasterImage::at(int i, int j) const {
  const std::size_t k = 3 * (static_cast<std::size_t>(j) * width + i);
  return {pixels[k], pixels[k + 1], pixels[k + 2]};
}

void RasterImage::set(int i, int j, Rgb c) {
  const std::size_t k = 3 * (static_cast<std::size_t>(j) * width + i);
  pixels[k] = c.r;
  pixels[k + 1] = c.g;
  pixels[k + 2] = c.b;
}

const char* to_string(Region r) { return r == Region::Sector ? "sector" : "full"; }

cplx pixel_to_parameter(int i, int j, int width, int height) {
  return {2.0 * (i + 0.5) / width - 1.0, 1.0 - 2.0 * (j + 0.5) / height};
}

int parameter_plane_ray_count(int n, int width, int height) {
  const int step = 2 * (n - 1);
  const int target = 4 * std::max(width, height);
  return ((target + step - 1) / step) * step;
}

namespace {

// Runs body(k) for k in [0, count) either serially or on an OpenMP team.
// Bodies write disjoint outputs, so the result does not depend on scheduling.
template <class Body>
void for_each_index(int count, const Exec& exec, Body&& body) {
  if (exec.kind == Exec::Kind::Serial) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  const int threads = exec.workers > 0 ? exec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (int k = 0; k < count; ++k) body(k);
}

std::uint8_t channel(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

Rgb elliptic_color(double multiplier) {
  const double m = std::clamp(multiplier, 0.0, 1.0);
  return {channel(200.0 * m), channel(200.0 * m), channel(128.0 + 127.0 * m)};
}

Rgb hyperbolic_color(double t) {
  const std::uint8_t v = channel(224.0 - 160.0 * std::clamp(t, 0.0, 1.0));
  return {v, v, v};
}

struct PlaneContext {
  int n;
  int width;
  int height;
  Region region;
  int rays;
  std::vector<double> s0;  // per ray, NaN when always elliptic
};

// Smallest and largest |w| over the closed pixel square.
std::pair<double, double> radial_span(const PlaneContext& ctx, int i, int j) {
  const double x0 = 2.0 * i / ctx.width - 1.0, x1 = 2.0 * (i + 1) / ctx.width - 1.0;
  const double y0 = 1.0 - 2.0 * (j + 1) / ctx.height, y1 = 1.0 - 2.0 * j / ctx.height;
  const double cx = std::clamp(0.0, x0, x1), cy = std::clamp(0.0, y0, y1);
  const double fx = std::max(std::abs(x0), std::abs(x1));
  const double fy = std::max(std::abs(y0), std::abs(y1));
  return {std::hypot(cx, cy), std::hypot(fx, fy)};
}

Rgb plane_pixel(const PlaneContext& ctx, int i, int j) {
  const cplx w = pixel_to_parameter(i, j, ctx.width, ctx.height);
  const double s = std::abs(w);
  if (s >= 1.0) return kBlack;
  if (ctx.region == Region::Sector && !in_sector(ctx.n, w)) return kBlack;

  const double psi = arg_2pi(w);
  const int k = static_cast<int>(std::lround(psi * ctx.rays / kTwoPi)) % ctx.rays;
  const double s0 = ctx.s0[static_cast<std::size_t>(k)];
  const bool always = std::isnan(s0);

  if (!always) {
    const auto [r_min, r_max] = radial_span(ctx, i, j);
    if (r_min <= s0 && s0 <= r_max) return kBlack;
  }
  if (always || s < s0) {
    const UnicriticalBlaschke b(ctx.n, w);
    double m = 1.0;
    try {
      if (const auto p = interior_fixed_point(b)) m = std::abs(derivative(b, *p));
    } catch (const NumericError&) {
    }
    return elliptic_color(m);
  }
  return hyperbolic_color((s - s0) / (1.0 - s0));
}

void paint_square(RasterImage& img, int ci, int cj, int half, Rgb c) {
  for (int j = cj - half; j <= cj + half; ++j)
    for (int i = ci - half; i <= ci + half; ++i)
      if (i >= 0 && j >= 0 && i < img.width && j < img.height) img.set(i, j, c);
}

// Pixel containing the point z of [−1, 1]².
std::pair<int, int> parameter_to_pixel(cplx z, int width, int height) {
  const int i = static_cast<int>(std::floor((z.real() + 1.0) * 0.5 * width));
  const int j = static_cast<int>(std::floor((1.0 - z.imag()) * 0.5 * height));
  return {std::clamp(i, 0, width - 1), std::clamp(j, 0, height - 1)};
}

}  // namespace

RasterImage render_parameter_plane(int n, int width, int height, Region region,
                                   Exec exec) {
  if (n < 2) throw PreconditionError("render_parameter_plane: n must be >= 2");
  if (width < 16 || height < 16)
    throw PreconditionError("render_parameter_plane: width and height must be >= 16");

  PlaneContext ctx{n, width, height, region, parameter_plane_ray_count(n, width, height), {}};
  ctx.s0.resize(static_cast<std::size_t>(ctx.rays));
  // s₀ is invariant under ψ ↦ ψ + 2π/(n−1); solve one sector and copy.
  const int per_sector = ctx.rays / (n - 1);
  for_each_index(per_sector, exec, [&](int k) {
    ctx.s0[static_cast<std::size_t>(k)] = threshold_on_ray(n, kTwoPi * k / ctx.rays);
  });
  for (int k = per_sector; k < ctx.rays; ++k)
    ctx.s0[static_cast<std::size_t>(k)] = ctx.s0[static_cast<std::size_t>(k % per_sector)];

  RasterImage img(width, height);
  for_each_index(height, exec, [&](int j) {
    for (int i = 0; i < width; ++i) img.set(i, j, plane_pixel(ctx, i, j));
  });

  const cplx m = m_point(n);
  const int copies = region == Region::FullDisk ? n - 1 : 1;
  for (int r = 0; r < copies; ++r) {
    const auto [ci, cj] = parameter_to_pixel(m * unit(r * sector_angle(n)), width, height);
    paint_square(img, ci, cj, 2, kRed);
  }
  return img;
}

CurveTable boundary_curve(int n, int angles, Exec exec) {
  if (n < 2) throw PreconditionError("boundary_curve: n must be >= 2");
  if (angles < 8) throw PreconditionError("boundary_curve: angles must be >= 8");
  CurveTable table{n, std::vector<CurveRow>(static_cast<std::size_t>(angles))};
  for_each_index(angles, exec, [&](int k) {
    const double psi = kTwoPi * k / angles;
    table.rows[static_cast<std::size_t>(k)] = {psi, threshold_on_ray(n, psi)};
  });
  return table;
}

double julia_circle_radius(int width) { return 0.45 * width; }

RasterImage render_julia_circle(const UnicriticalBlaschke& b, const JuliaSample& sample,
                                int width) {
  if (width < 64) throw PreconditionError("render_julia_circle: width must be >= 64");
  RasterImage img(width, width, kWhite);
  const double c = 0.5 * width;
  const double radius = julia_circle_radius(width);

  for (int j = 0; j < width; ++j)
    for (int i = 0; i < width; ++i) {
      const double d = std::hypot(i + 0.5 - c, j + 0.5 - c);
      if (std::abs(d - radius) <= 1.5) img.set(i, j, kLightGray);
    }

  auto plot = [&](double x, double y, Rgb color) {
    const int i = static_cast<int>(std::floor(c + x));
    const int j = static_cast<int>(std::floor(c - y));
    if (i >= 0 && j >= 0 && i < width && j < width) img.set(i, j, color);
  };
  // Each sample is a short radial stroke across the annulus.
  for (double phi : sample.angles)
    for (double r = radius - 1.0; r <= radius + 1.0; r += 1.0)
      plot(r * std::cos(phi), r * std::sin(phi), kBlack);

  const cplx dw = classify_unicritical(b.degree(), b.critical_point()).dw_point;
  const int ci = static_cast<int>(std::floor(c + radius * dw.real()));
  const int cj = static_cast<int>(std::floor(c - radius * dw.imag()));
  paint_square(img, ci, cj, 2, kRed);
  return img;
}

void write_ppm(std::ostream& out, const RasterImage& image) {
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

void write_ppm(const RasterImage& image, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_ppm(f, image);
  if (!f) throw IoError("write failed for " + path);
}

namespace {

std::string format17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const CurveTable& table) {
  out << "psi,s0\n";
  for (const CurveRow& row : table.rows) out << format17(row.psi) << ',' << format17(row.s0) << '\n';
}

void write_csv(const CurveTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_csv(f, table);
  if (!f) throw IoError("write failed for " + path);
}

CurveTable read_csv(std::istream& in, int n) {
  std::string line;
  if (!std::getline(in, line) || line != "psi,s0") throw IoError("read_csv: bad header");
  CurveTable table{n, {}};
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("read_csv: malformed row: " + line);
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    const double s0 = b == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(b);
    table.rows.push_back({std::stod(a), s0});
  }
  return table;
}

}  // namespace ucb
