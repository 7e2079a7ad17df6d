#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grf/graph.hpp"

namespace grf {

/// Triangle mesh: positions plus vertex-index triples. Faces must be
/// non-degenerate and reference valid vertices.
struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;

  void validate() const;
};

/// Minimal OBJ subset: `v x y z` and (1-indexed) `f i j k` lines, where a
/// face corner may carry `/texture/normal` suffixes. Everything else is
/// ignored. Faces with more than 3 corners are fan-triangulated.
Mesh load_obj(std::istream& in);
Mesh load_obj_file(const std::string& path);

/// Torus triangulated on a major x minor grid with outward-facing
/// orientation. major, minor >= 3; ring radii R > r > 0.
Mesh generate_torus(std::size_t major, std::size_t minor, double ring_radius = 2.0,
                    double tube_radius = 1.0);

/// Unit vertex normals: the normalized area-unweighted mean of the unit
/// normals of the faces around each vertex. Throws if a vertex belongs to
/// no face or its face normals cancel.
std::vector<Eigen::Vector3d> vertex_normals(const Mesh& mesh);

/// Unweighted graph of the mesh's edge connectivity.
Graph mesh_graph(const Mesh& mesh);

} // namespace grf
