#include "lpa/relative_view.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lpa/errors.hpp"
#include "lpa/little_group.hpp"
#include "lpa/products.hpp"

namespace lpa {

namespace {

constexpr double kRankTolerance = 1e-12;

// First non-negligible component positive, for reproducible directions.
void canonical_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::fabs(x) > 1e-12) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

void clean_zeros(std::vector<double>& v) {
  for (double& x : v) {
    if (std::fabs(x) < 1e-15) x = 0.0;
  }
}

std::vector<double> cross(const std::vector<double>& a, const std::vector<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Multivector g(Signature sig, int i) { return Multivector::generator(sig, i); }

}  // namespace

// --- Spacetime splits ----------------------------------------------------------

SplitResult spacetime_split_vector(const Multivector& v, int observer) {
  const Signature sig = v.signature();
  if (observer < 0 || observer >= sig.dimension() || sig.square(observer) != 1) {
    throw PreconditionError("observer must be a unipotent generator");
  }
  if (!v.is_grade(1)) throw GradeError("spacetime_split_vector requires a grade-1 multivector");
  SplitResult split;
  split.observer = observer;
  split.even_element = v * g(sig, observer);
  split.coefficients.push_back(split.even_element.scalar_part());
  for (int j = 0; j < sig.dimension(); ++j) {
    if (j == observer) continue;
    const Blade bj{1U << j};
    const Blade bo{1U << observer};
    const int sign = blade_product_sign(sig, bj, bo);
    split.coefficients.push_back(split.even_element.coefficient(Blade{bj.mask | bo.mask}) * sign);
  }
  return split;
}

SplitResult spacetime_split_trivector(const Multivector& t, int observer) {
  const Signature sig = t.signature();
  if (sig != Signature{1, 3, 0} || observer != 0) {
    throw PreconditionError("trivector splits are defined for G(1,3) with observer g0");
  }
  if (!t.is_grade(3)) throw GradeError("spacetime_split_trivector requires a grade-3 multivector");
  SplitResult split;
  split.observer = observer;
  split.even_element = t * g(sig, 0);
  const Multivector& e = split.even_element;
  const Blade g23{0b1100}, g13{0b1010}, g12{0b0110};
  // I^-1 = -I
  split.coefficients = {-e.coefficient(Blade{0b1111}), e.coefficient(g23), -e.coefficient(g13),
                        e.coefficient(g12)};
  return split;
}

Multivector recompose(const SplitResult& split) {
  return split.even_element * g(split.even_element.signature(), split.observer);
}

// --- Primitives ------------------------------------------------------------------

const char* to_string(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::kPoint: return "point";
    case PrimitiveKind::kLine: return "line";
    case PrimitiveKind::kPlane: return "plane";
    case PrimitiveKind::kCircle: return "circle";
    case PrimitiveKind::kSphere: return "sphere";
    case PrimitiveKind::kOutOfView: return "out_of_view";
  }
  return "unknown";
}

std::vector<double> Primitive::coordinates() const {
  std::vector<double> out;
  switch (kind) {
    case PrimitiveKind::kPoint:
      out = anchor;
      break;
    case PrimitiveKind::kLine:
      out = anchor;
      out.insert(out.end(), directions[0].begin(), directions[0].end());
      break;
    case PrimitiveKind::kPlane: {
      out = anchor;
      std::vector<double> normal = cross(directions[0], directions[1]);
      canonical_sign(normal);
      out.insert(out.end(), normal.begin(), normal.end());
      break;
    }
    case PrimitiveKind::kCircle:
    case PrimitiveKind::kSphere:
      out = anchor;
      out.push_back(radius);
      break;
    case PrimitiveKind::kOutOfView:
      break;
  }
  return out;
}

double Primitive::distance_to_origin() const {
  double s = 0.0;
  for (double x : anchor) s += x * x;
  return std::sqrt(s);
}

void RelativeViewScene::add(Primitive primitive) {
  const bool sized = primitive.kind == PrimitiveKind::kOutOfView ||
                     primitive.anchor.size() == static_cast<std::size_t>(dimension);
  bool directions_ok = true;
  for (const auto& d : primitive.directions) {
    directions_ok = directions_ok && d.size() == static_cast<std::size_t>(dimension);
  }
  if (!sized || !directions_ok) {
    throw PreconditionError("primitive '" + primitive.label + "' does not live in " +
                            std::to_string(dimension) + "D relative space");
  }
  primitives.push_back(std::move(primitive));
}

Primitive slice_primitive(const Multivector& x, double slice_time, std::string label,
                          std::string style) {
  const Signature sig = x.signature();
  const int n = sig.dimension() - 1;
  if (sig.p != 1 || sig.r != 0 || (n != 2 && n != 3)) {
    throw PreconditionError("slice_primitive works in G(1,2) or G(1,3), got " + sig.to_string());
  }
  if (x.is_zero()) throw PreconditionError("cannot slice the zero multivector");
  const int grade = std::countr_zero(x.grade_mask());
  if (!x.is_grade(grade) || grade < 1 || grade > n + 1) {
    throw GradeError("slice_primitive requires a homogeneous element of grade 1..n+1");
  }

  Primitive prim;
  prim.label = std::move(label);
  prim.style = std::move(style);

  // Rows: coefficients of g_mu _| x over the grade-(g-1) blades; the point set is the kernel.
  std::vector<Multivector> columns;
  std::vector<std::uint32_t> row_masks;
  for (int mu = 0; mu <= n; ++mu) {
    columns.push_back(vector_contraction(g(sig, mu), x));
    for (const auto& [blade, value] : columns.back().terms()) {
      if (std::find(row_masks.begin(), row_masks.end(), blade.mask) == row_masks.end()) {
        row_masks.push_back(blade.mask);
      }
    }
  }
  std::sort(row_masks.begin(), row_masks.end());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(row_masks.size(), 1)), n + 1);
  for (int mu = 0; mu <= n; ++mu) {
    for (std::size_t r = 0; r < row_masks.size(); ++r) {
      m(static_cast<Eigen::Index>(r), mu) = columns[static_cast<std::size_t>(mu)].coefficient(Blade{row_masks[r]});
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankTolerance * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff;
  const int kernel_dim = n + 1 - rank;
  const Eigen::MatrixXd basis = svd.matrixV().rightCols(kernel_dim);

  if (kernel_dim == 0) return prim;  // only the origin: never on the slice
  const Eigen::VectorXd w = basis.row(0).transpose();
  const double w2 = w.squaredNorm();
  if (w2 <= kRankTolerance) return prim;  // subspace parallel to the slice

  const Eigen::VectorXd particular = basis * (w * (slice_time / w2));
  prim.anchor.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) prim.anchor[static_cast<std::size_t>(j)] = particular(j + 1);
  clean_zeros(prim.anchor);

  if (kernel_dim > 1) {
    // Directions: orthonormal basis of w^perp inside the kernel.
    Eigen::JacobiSVD<Eigen::MatrixXd> wsvd(w.transpose(), Eigen::ComputeFullV);
    const Eigen::MatrixXd perp = wsvd.matrixV().rightCols(kernel_dim - 1);
    const Eigen::MatrixXd dirs = basis * perp;
    for (int c = 0; c < kernel_dim - 1; ++c) {
      std::vector<double> d(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = dirs(j + 1, c);
      clean_zeros(d);
      canonical_sign(d);
      prim.directions.push_back(std::move(d));
    }
  }
  prim.kind = prim.directions.empty()       ? PrimitiveKind::kPoint
              : prim.directions.size() == 1 ? PrimitiveKind::kLine
                                            : PrimitiveKind::kPlane;
  if (grade == 1) {
    std::vector<double> normal(static_cast<std::size_t>(n));
    double norm = 0.0;
    for (int j = 0; j < n; ++j) {
      normal[static_cast<std::size_t>(j)] = x.coefficient(Blade{1U << (j + 1)});
      norm += normal[static_cast<std::size_t>(j)] * normal[static_cast<std::size_t>(j)];
    }
    if (norm > 0.0) {
      for (double& c : normal) c /= std::sqrt(norm);
      prim.orientation = std::move(normal);
    }
  }
  return prim;
}

Primitive light_circle(double slice_time, std::string label, std::string style) {
  Primitive p;
  p.kind = PrimitiveKind::kCircle;
  p.label = std::move(label);
  p.style = std::move(style);
  p.anchor = {0.0, 0.0};
  p.radius = std::fabs(slice_time);
  return p;
}

Primitive light_sphere(double slice_time, std::string label, std::string style) {
  Primitive p = light_circle(slice_time, std::move(label), std::move(style));
  p.kind = PrimitiveKind::kSphere;
  p.anchor = {0.0, 0.0, 0.0};
  return p;
}

std::optional<std::array<double, 2>> intersect_lines(const Primitive& a, const Primitive& b) {
  if (a.kind != PrimitiveKind::kLine || b.kind != PrimitiveKind::kLine || a.anchor.size() != 2 ||
      b.anchor.size() != 2) {
    throw PreconditionError("intersect_lines needs two lines in the relative plane");
  }
  const auto& da = a.directions[0];
  const auto& db = b.directions[0];
  const double det = da[0] * (-db[1]) - da[1] * (-db[0]);
  if (std::fabs(det) < 1e-14) return std::nullopt;
  const double rx = b.anchor[0] - a.anchor[0];
  const double ry = b.anchor[1] - a.anchor[1];
  const double s = (rx * (-db[1]) - ry * (-db[0])) / det;
  return std::array<double, 2>{a.anchor[0] + s * da[0], a.anchor[1] + s * da[1]};
}

bool same_point_set(const Primitive& a, const Primitive& b, double tol) {
  if (a.kind != b.kind || a.anchor.size() != b.anchor.size()) return false;
  if (a.kind == PrimitiveKind::kOutOfView) return true;
  for (std::size_t i = 0; i < a.anchor.size(); ++i) {
    if (std::fabs(a.anchor[i] - b.anchor[i]) > tol) return false;
  }
  if (a.kind == PrimitiveKind::kCircle || a.kind == PrimitiveKind::kSphere) {
    return std::fabs(a.radius - b.radius) <= tol;
  }
  if (a.directions.size() != b.directions.size()) return false;
  const std::size_t d = a.anchor.size();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      double pa = 0.0, pb = 0.0;
      for (const auto& v : a.directions) pa += v[r] * v[c];
      for (const auto& v : b.directions) pb += v[r] * v[c];
      if (std::fabs(pa - pb) > tol) return false;
    }
  }
  return true;
}

// --- Scenes ------------------------------------------------------------------------

RelativeViewScene lightcone_scene(double slice_time) {
  const Signature sig{1, 2, 0};
  RelativeViewScene scene;
  scene.dimension = 2;
  scene.slice_time = slice_time;
  const Multivector k = g(sig, 0) + g(sig, 2);
  const Multivector s = g(sig, 1);
  scene.add(light_circle(slice_time));
  scene.add(slice_primitive(k, slice_time, "k", "#7f7f7f"));
  scene.add(slice_primitive(s, slice_time, "s", "#1f77b4"));
  return scene;
}

RelativeViewScene invariance_scene(double slice_time, double rotation_angle, double theta_alpha,
                                   double theta_beta) {
  const Algebra sta = make_algebra(Signature{1, 3, 0});
  const Signature sig = sta.signature();
  const Multivector k = g(sig, 0) + g(sig, 3);
  const LittleAlgebra la = construct_little_algebra(sta, k);
  const Multivector s = g(sig, 1) + g(sig, 2) * 0.5;
  const Multivector s_rot = sandwich(rotation_rotor(la, 1, 2, rotation_angle), s);
  const Multivector s_trans =
      sandwich(translation_rotor(la, 2, complex_like(sig, theta_alpha, theta_beta)), s);

  RelativeViewScene scene;
  scene.dimension = 3;
  scene.slice_time = slice_time;
  scene.add(slice_primitive(s, slice_time, "s", "#9ecae1"));
  scene.add(slice_primitive(s_rot, slice_time, "s'", "#08519c"));
  scene.add(slice_primitive(s_trans, slice_time, "s''", "#e377c2"));
  scene.add(slice_primitive(outer(s, k), slice_time, "sk", "#000000"));
  return scene;
}

RelativeViewScene basis_scene(double slice_time) {
  const Signature sig{1, 3, 0};
  RelativeViewScene scene;
  scene.dimension = 3;
  scene.slice_time = slice_time;
  scene.add(slice_primitive(g(sig, 1), slice_time, "g10", "#d62728"));
  scene.add(slice_primitive(g(sig, 2), slice_time, "g20", "#2ca02c"));
  scene.add(slice_primitive(g(sig, 3), slice_time, "g30", "#1f77b4"));
  return scene;
}

}  // namespace lpa
