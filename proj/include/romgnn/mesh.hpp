#pragma once

#include "romgnn/common.hpp"
#include "romgnn/geometry.hpp"

#include <string>
#include <vector>

namespace romgnn {

enum class NodeTag : std::uint8_t { Free = 0, Dirichlet = 1, LoadSurface = 2 };

// T3 triangle mesh. Triangles are stored CCW; tags mark the clamped base
// (Dirichlet) and the seating surface (load).
struct Mesh {
  static constexpr int dim = 2;

  Eigen::MatrixX2d coords;      // n x 2, meters
  Eigen::MatrixX3i triangles;   // e x 3, 0-based
  std::vector<NodeTag> node_tags;

  int n_nodes() const { return static_cast<int>(coords.rows()); }
  int n_elements() const { return static_cast<int>(triangles.rows()); }
  int n_dofs() const { return dim * n_nodes(); }

  double triangle_area(int e) const;
  std::vector<int> nodes_with_tag(NodeTag tag) const;

  // Throws MESHING_FAILED when an invariant is broken (degenerate triangle,
  // disconnected element graph, missing clamp/load nodes, bad indices).
  void validate(double target_edge_length) const;

  std::uint64_t content_hash() const;
};

// Symmetric node adjacency (no self-loops). Edge (i,j) present iff the two
// nodes share a triangle edge.
struct Adjacency {
  int n = 0;
  std::vector<std::pair<int, int>> edges;       // undirected, i < j, sorted
  std::vector<std::vector<int>> neighbors;      // sorted per node

  static Adjacency from_edges(int n_nodes, std::vector<std::pair<int, int>> edge_list);

  int degree(int i) const { return static_cast<int>(neighbors[static_cast<std::size_t>(i)].size()); }
  bool has_isolated_node() const;
  Eigen::MatrixXi dense() const;
};

Adjacency build_adjacency(const Mesh& mesh);

// Constrained-Delaunay-style mesher: boundary loops sampled at the target
// edge length, interior filled with a jittered hex lattice, Delaunay
// triangulated, then clipped to the domain. Deterministic for fixed params.
Mesh triangulate(const GeometryParams& params);

}  // namespace romgnn
