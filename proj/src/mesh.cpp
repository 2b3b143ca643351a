#include "romgnn/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace romgnn {

double Mesh::triangle_area(int e) const {
  const auto t = triangles.row(e);
  const double x0 = coords(t[0], 0), y0 = coords(t[0], 1);
  const double x1 = coords(t[1], 0), y1 = coords(t[1], 1);
  const double x2 = coords(t[2], 0), y2 = coords(t[2], 1);
  return 0.5 * ((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0));
}

std::vector<int> Mesh::nodes_with_tag(NodeTag tag) const {
  std::vector<int> out;
  for (int i = 0; i < n_nodes(); ++i) {
    if (node_tags[static_cast<std::size_t>(i)] == tag) out.push_back(i);
  }
  return out;
}

void Mesh::validate(double target_edge_length) const {
  const int n = n_nodes();
  if (n < 3 || n_elements() < 1) {
    throw RomError(ErrorCode::MeshingFailed, "mesh too small");
  }
  if (static_cast<int>(node_tags.size()) != n) {
    throw RomError(ErrorCode::MeshingFailed, "node_tags size mismatch");
  }
  const double min_area = 1e-12 * target_edge_length * target_edge_length;
  for (int e = 0; e < n_elements(); ++e) {
    for (int k = 0; k < 3; ++k) {
      const int v = triangles(e, k);
      if (v < 0 || v >= n) throw RomError(ErrorCode::MeshingFailed, "triangle index out of range");
    }
    if (triangle_area(e) <= min_area) {
      throw RomError(ErrorCode::MeshingFailed, "degenerate triangle " + std::to_string(e));
    }
  }

  // connectivity over shared triangle edges (union-find on nodes)
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (int e = 0; e < n_elements(); ++e) {
    const int a = find(triangles(e, 0));
    const int b = find(triangles(e, 1));
    const int c = find(triangles(e, 2));
    parent[static_cast<std::size_t>(b)] = a;
    parent[static_cast<std::size_t>(find(c))] = find(a);
  }
  const int root = find(0);
  for (int i = 1; i < n; ++i) {
    if (find(i) != root) throw RomError(ErrorCode::MeshingFailed, "mesh is disconnected");
  }

  bool has_clamp = false, has_load = false;
  for (const auto tag : node_tags) {
    has_clamp |= (tag == NodeTag::Dirichlet);
    has_load |= (tag == NodeTag::LoadSurface);
  }
  if (!has_clamp || !has_load) {
    throw RomError(ErrorCode::MeshingFailed, "mesh lacks clamp or load-surface nodes");
  }
}

std::uint64_t Mesh::content_hash() const {
  std::uint64_t h = fnv1a("mesh", 4);
  h = fnv1a(coords.data(), static_cast<std::size_t>(coords.size()) * sizeof(double), h);
  h = fnv1a(triangles.data(), static_cast<std::size_t>(triangles.size()) * sizeof(int), h);
  h = fnv1a(node_tags.data(), node_tags.size(), h);
  return h;
}

Adjacency Adjacency::from_edges(int n_nodes, std::vector<std::pair<int, int>> edge_list) {
  Adjacency adj;
  adj.n = n_nodes;
  for (auto& [a, b] : edge_list) {
    if (a == b) continue;  // no self-loops
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  adj.edges = std::move(edge_list);
  adj.neighbors.assign(static_cast<std::size_t>(n_nodes), {});
  for (const auto& [a, b] : adj.edges) {
    adj.neighbors[static_cast<std::size_t>(a)].push_back(b);
    adj.neighbors[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj.neighbors) std::sort(nb.begin(), nb.end());
  return adj;
}

bool Adjacency::has_isolated_node() const {
  for (const auto& nb : neighbors) {
    if (nb.empty()) return true;
  }
  return false;
}

Eigen::MatrixXi Adjacency::dense() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [i, j] : edges) {
    a(i, j) = 1;
    a(j, i) = 1;
  }
  return a;
}

Adjacency build_adjacency(const Mesh& mesh) {
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(static_cast<std::size_t>(mesh.n_elements()) * 3);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto t = mesh.triangles.row(e);
    edge_list.emplace_back(t[0], t[1]);
    edge_list.emplace_back(t[1], t[2]);
    edge_list.emplace_back(t[2], t[0]);
  }
  return Adjacency::from_edges(mesh.n_nodes(), std::move(edge_list));
}

}  // namespace romgnn
