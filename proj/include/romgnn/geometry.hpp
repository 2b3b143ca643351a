#pragma once

#include "romgnn/common.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace romgnn {

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

// Closed CCW polygon outline plus the fixed centers of its cutout holes.
// Outlines are versioned constants: geometry generated for one id stays
// reproducible even if a new outline is added later.
struct OutlineTemplate {
  std::string id;
  std::vector<std::array<double, 2>> vertices;  // CCW, closed implicitly
  int clamp_edge = -1;                          // edge [v_i, v_{i+1}] carrying Dirichlet nodes
  int seat_edge = -1;                           // edge carrying the load surface
  std::vector<std::array<double, 2>> cutout_centers;
};

const OutlineTemplate& outline_template(const std::string& id);

struct GeometryParams {
  std::string outline_id = "seat-L-v1";
  std::vector<Circle> holes;  // cutouts first, interior holes after
  int n_cutouts = 0;
  double target_edge_length = 0.055;

  int n_interior_holes() const { return static_cast<int>(holes.size()) - n_cutouts; }
  std::vector<double> hole_radii() const;
  std::array<double, 2> interior_hole_center() const;
};

// Axis-aligned sampling box for one interior hole together with its radius range.
struct HoleSlot {
  double cx_min, cx_max;
  double cy_min, cy_max;
  double r_min, r_max;
};

// Sampling ranges for one family of geometries. Only the seat outline family
// is generated; other outlines are used as handwritten fixtures.
struct GeometryFamily {
  std::string outline_id = "seat-L-v1";
  std::array<double, 2> cutout_radius_range{0.04, 0.065};
  std::vector<HoleSlot> interior_slots;  // slot i hosts interior hole i
  int n_interior_holes = 1;
  double target_edge_length = 0.055;

  static GeometryFamily defaults();
};

// Validates the clearance invariants (holes strictly inside, pairwise
// disjoint, both with margin >= 2 * target_edge_length). Returns a
// human-readable reason on failure, empty string when valid.
std::string check_geometry(const GeometryParams& params);

// Rejection-samples a valid parameter set. Deterministic for a fixed seed.
// Throws RomError(RejectionExhausted) after 1000 failed attempts.
GeometryParams generate_geometry(std::uint64_t seed, const GeometryFamily& family);

// -- low-level polygon helpers shared with the mesher --

double polygon_signed_area(const std::vector<std::array<double, 2>>& poly);
bool point_in_polygon(double x, double y, const std::vector<std::array<double, 2>>& poly);
double distance_to_polygon_boundary(double x, double y, const std::vector<std::array<double, 2>>& poly);

}  // namespace romgnn
