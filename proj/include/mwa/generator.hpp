#pragma once

#include <cstdint>
#include <vector>

#include "mwa/annulus.hpp"
#include "mwa/polytope.hpp"

namespace mwa {

struct Pose {
  Vec translation;
  Rotation rotation;
  double scale = 1.0;
};

// Boundary sampler configuration. delta and band are in model units of the
// unit shape; world quantities scale with pose.scale.
struct GeneratorSpec {
  ConvexPolytope shape;
  Pose pose;
  double delta = 0.1;  // sampling density: every boundary point has a sample
                       // within Euclidean delta * scale (before noise)
  double band = 0.0;   // radial noise factor, uniform in [1-band, 1+band]
  std::uint64_t seed = 0;
};

// Exact bookkeeping of the emitted sample gauges, measured under the posed
// (rotated) distance function from the pose center, in world units.
struct GroundTruth {
  Vec center;
  Rotation rotation;
  double scale = 1.0;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double width = 0.0;
};

struct GeneratedInstance {
  PointCloud cloud;
  GroundTruth truth;
  std::vector<std::size_t> samples_per_facet;
};

// Samples the posed boundary facet by facet, displacing each sample radially
// by a uniform factor in [1-band, 1+band]. Refuses (FacetUnsampled) when
// delta exceeds the smallest facet extent, which would break the
// one-point-per-facet sampling condition. Deterministic under seed.
GeneratedInstance sample_boundary(const GeneratorSpec& spec);

// Picks delta so the sampler emits roughly `target` points.
double delta_for_target_count(const ConvexPolytope& shape, std::size_t target);

// Reference shapes used by tests, fixtures and the CLI.
namespace shapes {
ConvexPolytope square();      // vertices (+-1, +-1)
ConvexPolytope triangle_t();  // vertices (1,1), (-1,1), (0,-1); asymmetry 3
ConvexPolytope hexagon();     // regular, circumradius 1
ConvexPolytope cube();        // vertices (+-1, +-1, +-1)
ConvexPolytope tetrahedron();  // mildly irregular, origin interior
}  // namespace shapes

}  // namespace mwa
