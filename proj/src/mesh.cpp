#include "grf/mesh.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grf {

namespace {

Eigen::Vector3d face_normal(const Mesh& mesh,
                            const std::array<std::uint32_t, 3>& f) {
  const Eigen::Vector3d& a = mesh.vertices[f[0]];
  const Eigen::Vector3d& b = mesh.vertices[f[1]];
  const Eigen::Vector3d& c = mesh.vertices[f[2]];
  return (b - a).cross(c - a);
}

} // namespace

void Mesh::validate() const {
  if (vertices.empty()) throw std::invalid_argument("mesh has no vertices");
  if (faces.empty()) throw std::invalid_argument("mesh has no faces");
  for (const auto& f : faces) {
    for (auto idx : f)
      if (idx >= vertices.size())
        throw std::invalid_argument("face index out of range");
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      throw std::invalid_argument("degenerate face (repeated vertex)");
    if (face_normal(*this, f).norm() == 0.0)
      throw std::invalid_argument("degenerate face (zero area)");
  }
}

Mesh load_obj(std::istream& in) {
  Mesh mesh;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z))
        throw std::invalid_argument("obj line " + std::to_string(lineno) +
                                    ": bad vertex");
      mesh.vertices.emplace_back(x, y, z);
    } else if (kind == "f") {
      std::vector<std::uint32_t> corners;
      std::string tok;
      while (ls >> tok) {
        // "i", "i/t", "i/t/n", "i//n" all start with the vertex index.
        const long long idx = std::stoll(tok.substr(0, tok.find('/')));
        if (idx < 1)
          throw std::invalid_argument("obj line " + std::to_string(lineno) +
                                      ": face indices are 1-based");
        corners.push_back(static_cast<std::uint32_t>(idx - 1));
      }
      if (corners.size() < 3)
        throw std::invalid_argument("obj line " + std::to_string(lineno) +
                                    ": face needs >= 3 corners");
      for (std::size_t i = 1; i + 1 < corners.size(); ++i)
        mesh.faces.push_back({corners[0], corners[i], corners[i + 1]});
    }
    // every other directive is ignored
  }
  mesh.validate();
  return mesh;
}

Mesh load_obj_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh: " + path);
  return load_obj(in);
}

Mesh generate_torus(std::size_t major, std::size_t minor, double ring_radius,
                    double tube_radius) {
  if (major < 3 || minor < 3)
    throw std::invalid_argument("torus needs major, minor >= 3");
  if (!(ring_radius > tube_radius && tube_radius > 0.0))
    throw std::invalid_argument("torus needs R > r > 0");

  Mesh mesh;
  mesh.vertices.reserve(major * minor);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < major; ++i) {
    const double theta = two_pi * double(i) / double(major);
    for (std::size_t j = 0; j < minor; ++j) {
      const double phi = two_pi * double(j) / double(minor);
      const double ring = ring_radius + tube_radius * std::cos(phi);
      mesh.vertices.emplace_back(ring * std::cos(theta), ring * std::sin(theta),
                                 tube_radius * std::sin(phi));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>((i % major) * minor + (j % minor));
  };
  for (std::size_t i = 0; i < major; ++i) {
    for (std::size_t j = 0; j < minor; ++j) {
      // Outward-oriented quad split.
      mesh.faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      mesh.faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  mesh.validate();
  return mesh;
}

std::vector<Eigen::Vector3d> vertex_normals(const Mesh& mesh) {
  mesh.validate();
  std::vector<Eigen::Vector3d> sums(mesh.vertices.size(),
                                    Eigen::Vector3d::Zero());
  std::vector<std::size_t> counts(mesh.vertices.size(), 0);
  for (const auto& f : mesh.faces) {
    const Eigen::Vector3d n = face_normal(mesh, f).normalized();
    for (auto idx : f) {
      sums[idx] += n;
      ++counts[idx];
    }
  }
  std::vector<Eigen::Vector3d> normals(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    if (counts[v] == 0)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " belongs to no face");
    const Eigen::Vector3d mean = sums[v] / double(counts[v]);
    const double norm = mean.norm();
    if (norm == 0.0)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has cancelling face normals");
    normals[v] = mean / norm;
  }
  return normals;
}

Graph mesh_graph(const Mesh& mesh) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (const auto& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const NodeId a = f[k], b = f[(k + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  std::vector<Graph::EdgeTriple> triples;
  triples.reserve(edges.size());
  for (const auto& [a, b] : edges) triples.emplace_back(a, b, 1.0);
  return Graph::from_edges(mesh.vertices.size(), triples);
}

} // namespace grf
