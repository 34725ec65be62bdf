#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lpa/multivector.hpp"

namespace lpa {

// Relative coefficients induced by an observer generator. For a vector,
// v = (v0 + v1 g10 + v2 g20 + ...) g_obs and coefficients are [v0, v1, ...].
// For a G(1,3) trivector, T = (T0 I^-1 + T1 g23 + T2 g31 + T3 g12) g0 and
// coefficients are [T0, T1, T2, T3].
struct SplitResult {
  int observer = 0;
  std::vector<double> coefficients;
  Multivector even_element{Signature{}};
};

// The observer must be a unipotent generator.
SplitResult spacetime_split_vector(const Multivector& v, int observer = 0);
SplitResult spacetime_split_trivector(const Multivector& t, int observer = 0);
// even_element * g_obs
Multivector recompose(const SplitResult& split);

enum class PrimitiveKind { kPoint, kLine, kPlane, kCircle, kSphere, kOutOfView };

const char* to_string(PrimitiveKind kind);

// Something drawable in the relative space of a time slice. Lines and
// planes are stored as the point closest to the relative origin plus an
// orthonormal direction basis; circles and spheres as center plus radius.
struct Primitive {
  PrimitiveKind kind = PrimitiveKind::kOutOfView;
  std::string label;
  std::string style;
  std::vector<double> anchor;
  std::vector<std::vector<double>> directions;
  double radius = 0.0;
  // Extrinsic orientation (normal direction) of a sliced worldvolume, when drawn.
  std::optional<std::vector<double>> orientation;

  // Flat coordinate list written to CSV: point -> anchor; line -> anchor, direction;
  // plane -> anchor, unit normal; circle/sphere -> center, radius; out-of-view -> empty.
  std::vector<double> coordinates() const;
  double distance_to_origin() const;
};

struct RelativeViewScene {
  int dimension = 2;
  double slice_time = 1.0;
  std::vector<Primitive> primitives;

  // Throws PreconditionError when the primitive's coordinates do not match dimension.
  void add(Primitive primitive);
};

inline constexpr double kDefaultSliceTime = 1.0;

// Intersects the origin-incident subspace of a homogeneous grade-g element of
// G(1,n), n in {2,3}, with the affine slice p0 = slice_time. A grade-1 x is
// the hyperplane {p : p.x = 0}; higher grades are intersections of such
// hyperplanes. Elements whose subspace never reaches the slice come back as kOutOfView.
Primitive slice_primitive(const Multivector& x, double slice_time = kDefaultSliceTime,
                          std::string label = {}, std::string style = {});

Primitive light_circle(double slice_time, std::string label = "light-circle",
                       std::string style = "#d62728");
Primitive light_sphere(double slice_time, std::string label = "light-sphere",
                       std::string style = "#d62728");

// Intersection point of two lines in the 2D relative plane; nullopt when parallel.
std::optional<std::array<double, 2>> intersect_lines(const Primitive& a, const Primitive& b);

// Same kind and the same point set (anchors and direction projectors agree to tol).
bool same_point_set(const Primitive& a, const Primitive& b, double tol = 1e-10);

// k = m0 + m2 tangent to the light-circle with the orthogonal s = m1 in G(1,2).
RelativeViewScene lightcone_scene(double slice_time = kDefaultSliceTime);
// G(1,3): s, its rotation s' about g12, its lightlike translation s'' and the invariant line sk.
RelativeViewScene invariance_scene(double slice_time = kDefaultSliceTime,
                                   double rotation_angle = 1.0, double theta_alpha = 1.0,
                                   double theta_beta = 0.0);
// G(1,3): the planes sliced from g1, g2, g3 (relative basis planes g10, g20, g30).
RelativeViewScene basis_scene(double slice_time = kDefaultSliceTime);

// Fixed viewport [-4,4]^2, strokes in primitive order; 3D scenes use a fixed
// orthographic camera. Output is byte-deterministic for a given scene.
std::string scene_to_svg(const RelativeViewScene& scene);
// Header "kind,label,coords" then one row per primitive.
std::string scene_to_csv(const RelativeViewScene& scene);

}  // namespace lpa
