#include "romgnn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace romgnn {

namespace {

// seat-L-v1: L-shaped profile, back column of height 1.0 on the left,
// seat pan to the right. Clamped along the base, loaded along the pan top.
OutlineTemplate make_seat_l_v1() {
  OutlineTemplate t;
  t.id = "seat-L-v1";
  t.vertices = {{0.00, 0.00}, {1.10, 0.00}, {1.10, 0.35},
                {0.35, 0.35}, {0.35, 1.00}, {0.00, 1.00}};
  t.clamp_edge = 0;  // (0,0) -> (1.10,0)
  t.seat_edge = 2;   // (1.10,0.35) -> (0.35,0.35)
  t.cutout_centers = {{0.175, 0.75}, {0.80, 0.175}};
  return t;
}

OutlineTemplate make_unit_square_v1() {
  OutlineTemplate t;
  t.id = "unit-square-v1";
  t.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  t.clamp_edge = 0;
  t.seat_edge = 2;
  return t;
}

double point_segment_distance(double x, double y, const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((x - a[0]) * dx + (y - a[1]) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double px = a[0] + t * dx;
  const double py = a[1] + t * dy;
  return std::hypot(x - px, y - py);
}

}  // namespace

const OutlineTemplate& outline_template(const std::string& id) {
  static const OutlineTemplate seat = make_seat_l_v1();
  static const OutlineTemplate square = make_unit_square_v1();
  if (id == seat.id) return seat;
  if (id == square.id) return square;
  throw RomError(ErrorCode::InvalidConfig, "unknown outline template '" + id + "'");
}

std::vector<double> GeometryParams::hole_radii() const {
  std::vector<double> radii;
  radii.reserve(holes.size());
  for (const auto& h : holes) radii.push_back(h.r);
  return radii;
}

std::array<double, 2> GeometryParams::interior_hole_center() const {
  if (n_interior_holes() < 1) {
    throw RomError(ErrorCode::InvalidConfig, "geometry has no interior hole");
  }
  const auto& h = holes[static_cast<std::size_t>(n_cutouts)];
  return {h.cx, h.cy};
}

GeometryFamily GeometryFamily::defaults() {
  GeometryFamily f;
  f.interior_slots = {
      {0.16, 0.19, 0.42, 0.50, 0.030, 0.050},  // back column, mid height
      {0.46, 0.54, 0.16, 0.19, 0.030, 0.045},  // pan, mid span
      {0.16, 0.19, 0.16, 0.19, 0.030, 0.045},  // junction pocket
  };
  return f;
}

double polygon_signed_area(const std::vector<std::array<double, 2>>& poly) {
  double a = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * a;
}

bool point_in_polygon(double x, double y, const std::vector<std::array<double, 2>>& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double xi = poly[i][0], yi = poly[i][1];
    const double xj = poly[j][0], yj = poly[j][1];
    const bool crosses = ((yi > y) != (yj > y)) &&
                         (x < (xj - xi) * (y - yi) / (yj - yi) + xi);
    if (crosses) inside = !inside;
  }
  return inside;
}

double distance_to_polygon_boundary(double x, double y,
                                    const std::vector<std::array<double, 2>>& poly) {
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    d = std::min(d, point_segment_distance(x, y, poly[i], poly[(i + 1) % n]));
  }
  return d;
}

std::string check_geometry(const GeometryParams& params) {
  const auto& outline = outline_template(params.outline_id);
  if (params.target_edge_length <= 0.0) return "target_edge_length must be positive";
  if (params.n_cutouts < 0 ||
      params.n_cutouts > static_cast<int>(params.holes.size())) {
    return "n_cutouts out of range";
  }
  const double clearance = 2.0 * params.target_edge_length;
  for (std::size_t i = 0; i < params.holes.size(); ++i) {
    const auto& h = params.holes[i];
    if (h.r <= 0.0) return "hole radius must be positive";
    if (!point_in_polygon(h.cx, h.cy, outline.vertices)) {
      return "hole center outside outline";
    }
    const double wall = distance_to_polygon_boundary(h.cx, h.cy, outline.vertices);
    if (wall - h.r < clearance) return "hole too close to outline";
    for (std::size_t j = i + 1; j < params.holes.size(); ++j) {
      const auto& g = params.holes[j];
      const double dist = std::hypot(h.cx - g.cx, h.cy - g.cy);
      if (dist - h.r - g.r < clearance) return "holes too close to each other";
    }
  }
  return {};
}

GeometryParams generate_geometry(std::uint64_t seed, const GeometryFamily& family) {
  const auto& outline = outline_template(family.outline_id);
  if (family.n_interior_holes < 1) {
    throw RomError(ErrorCode::InvalidConfig, "family requires at least one interior hole");
  }
  if (family.n_interior_holes > static_cast<int>(family.interior_slots.size())) {
    throw RomError(ErrorCode::InvalidConfig, "not enough interior hole slots");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GeometryParams params;
    params.outline_id = family.outline_id;
    params.target_edge_length = family.target_edge_length;
    params.n_cutouts = static_cast<int>(outline.cutout_centers.size());
    for (const auto& c : outline.cutout_centers) {
      params.holes.push_back(
          {c[0], c[1], draw(family.cutout_radius_range[0], family.cutout_radius_range[1])});
    }
    for (int i = 0; i < family.n_interior_holes; ++i) {
      const auto& slot = family.interior_slots[static_cast<std::size_t>(i)];
      params.holes.push_back({draw(slot.cx_min, slot.cx_max),
                              draw(slot.cy_min, slot.cy_max),
                              draw(slot.r_min, slot.r_max)});
    }
    if (check_geometry(params).empty()) return params;
  }
  throw RomError(ErrorCode::RejectionExhausted,
                 "no valid geometry after 1000 attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace romgnn
