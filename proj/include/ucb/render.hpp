#pragma once

// Parameter-plane rasters, s₀(ψ) boundary tables and dynamical-plane circle
// renders. Every kernel has a serial reference path and an OpenMP path that
// produce identical bytes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucb/julia.hpp"
#include "ucb/unicritical.hpp"

namespace ucb {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kRed{255, 0, 0};
inline constexpr Rgb kLightGray{211, 211, 211};

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB, top row first

  RasterImage() = default;
  RasterImage(int w, int h, Rgb fill = kBlack);

  Rgb at(int i, int j) const;
  void set(int i, int j, Rgb c);
};

/// Always-elliptic rays carry NaN in the s0 column.
struct CurveRow {
  double psi;
  double s0;
};

struct CurveTable {
  int n = 0;
  std::vector<CurveRow> rows;
};

enum class Region { Sector, FullDisk };

const char* to_string(Region r);

/// Serial runs the reference loops; Parallel uses OpenMP with `workers`
/// threads (0 = runtime default).
struct Exec {
  enum class Kind { Serial, Parallel };
  Kind kind = Kind::Parallel;
  int workers = 0;

  static Exec serial() { return {Kind::Serial, 1}; }
  static Exec parallel(int workers = 0) { return {Kind::Parallel, workers}; }
};

/// Centre of pixel (i, j) in the square [−1, 1]², y upward.
cplx pixel_to_parameter(int i, int j, int width, int height);

/// Number of rays used by render_parameter_plane: a multiple of 2(n − 1), so
/// the grid is invariant under the rotation symmetry and contains every
/// m-point and always-elliptic direction.
int parameter_plane_ray_count(int n, int width, int height);

/// Colors: outside the disk (or the sector) black; elliptic pixels blue from
/// (0,0,128) at multiplier 0 to (200,200,255) at multiplier 1; hyperbolic
/// pixels gray from 224 at the threshold to 64 at the rim; pixels whose radial
/// span contains s₀ black; m-points as 5×5 red squares.
RasterImage render_parameter_plane(int n, int width, int height, Region region,
                                   Exec exec = {});

/// ψ_k = 2πk/angles. Rays whose threshold lies beyond 1 − 1e−9 report that
/// bound.
CurveTable boundary_curve(int n, int angles, Exec exec = {});

/// Square raster: light-gray 3-pixel annulus for the unit circle, sampled
/// Julia angles in black, Denjoy–Wolff point as a red 5×5 square.
RasterImage render_julia_circle(const UnicriticalBlaschke& b, const JuliaSample& sample,
                                int width);

/// Radius in pixels of the unit circle in render_julia_circle.
double julia_circle_radius(int width);

void write_ppm(std::ostream& out, const RasterImage& image);
void write_ppm(const RasterImage& image, const std::string& path);
void write_csv(std::ostream& out, const CurveTable& table);
void write_csv(const CurveTable& table, const std::string& path);

/// Parses the format emitted by write_csv.
CurveTable read_csv(std::istream& in, int n);

}  // namespace ucb
