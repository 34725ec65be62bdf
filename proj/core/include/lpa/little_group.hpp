#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lpa/check_report.hpp"
#include "lpa/multivector.hpp"
#include "lpa/rotor.hpp"

namespace lpa {

// Default tolerance for identities evaluated on non-integer inputs.
inline constexpr double kIdentityTolerance = 1e-12;

// Where time and space live in a Minkowski signature G(1,n) or G(n,1).
struct MinkowskiLayout {
  int time_index = 0;
  std::vector<int> space_indices;
  int time_square = 1;   // +1 for mostly-minus parents
  int space_square = -1; // -1 for mostly-minus parents

  int spatial_dimension() const { return static_cast<int>(space_indices.size()); }
  bool mostly_minus() const { return time_square == 1; }
};

// Throws PreconditionError unless sig has r == 0 and exactly one generator of
// one sign. G(1,1) is read as mostly-minus.
MinkowskiLayout minkowski_layout(Signature sig);

// The rotation and boost generators of G(1,3):
//   rotations[l-1] = J_l = gamma_jk for cyclic (j,k,l), i.e. gamma23, gamma31, gamma12
//   boosts[j-1]    = K_j = gamma_j0
struct LorentzGenerators {
  std::array<Multivector, 3> rotations;
  std::array<Multivector, 3> boosts;
};

LorentzGenerators lorentz_generators(const Algebra& alg);

// All 15 generator pairs against the so(1,3) structure constants
// [J_j,J_k] = eps J_l, [J_j,K_k] = eps K_l, [K_j,K_k] = -eps J_l,
// plus their pseudoscalar-dual forms.
CheckReport verify_lorentz_commutation(const Algebra& alg, double tol = 0.0);

// A lightlike k together with an orthogonal completion of the frame and the
// embedding of the induced degenerate subalgebra W(k).
class LittleAlgebra {
 public:
  const Algebra& parent() const { return parent_; }
  const MinkowskiLayout& layout() const { return layout_; }
  const Multivector& k() const { return k_; }
  // [e0, e1, ..., e_{n-1}], e0 = k rescaled to unit time coefficient.
  const std::vector<Multivector>& frame() const { return frame_; }
  int n() const { return static_cast<int>(frame_.size()); }

  // G(0,n-1,1) for mostly-minus parents, G(n-1,0,1) for mostly-plus.
  Signature reference_signature() const;
  // Reference generator w maps to e_{w+1} for w < n-1 and to e0 for w == n-1,
  // matching the unipotent/anti-unipotent-then-nilpotent generator order.
  const Multivector& embedded_generator(int w) const;
  // Ordered product of embedded generators over the reference blade's indices.
  Multivector embedded_blade(Blade reference_blade) const;

  // e_i . e_i for i >= 1 (the parent's spatial square).
  int spatial_square() const { return layout_.space_square; }
  // Sign of det[k_hat, e1, e2] in the parent's spatial coordinates (n == 3 only).
  int orientation() const;

  // Largest deviation from e0.e0 = 0, e_i.e_j = space_square delta_ij, e0.e_i = 0.
  double inner_table_residual() const;

 private:
  friend LittleAlgebra construct_little_algebra(const Algebra&, const Multivector&);
  LittleAlgebra(Algebra parent, MinkowskiLayout layout) : parent_(std::move(parent)), layout_(std::move(layout)) {}

  Algebra parent_;
  MinkowskiLayout layout_;
  Multivector k_{Signature{}};
  std::vector<Multivector> frame_;
  std::vector<std::vector<double>> spatial_frame_;  // e1..e_{n-1} as spatial coordinate rows
  std::vector<double> direction_;                   // unit spatial direction of e0
};

// Frame completion: e0 = k / k_time; the spatial unit vectors come from
// Gram-Schmidt of the standard spatial generators against k's direction,
// skipping the generator most parallel to it (lowest index on ties).
// Throws PreconditionError for non-grade-1, zero, or non-lightlike k.
LittleAlgebra construct_little_algebra(const Algebra& parent, const Multivector& k);

struct GeneratorSet {
  std::vector<Multivector> rotations;             // e_i e_j, i < j
  std::vector<std::pair<int, int>> rotation_planes;  // (i, j) frame indices
  std::vector<Multivector> translations;          // N_i = e_i e0, i = 1..n-1
};

GeneratorSet little_generators(const LittleAlgebra& la);

CheckReport verify_commutation(const LittleAlgebra& la, double tol = kIdentityTolerance);

// Lambda = 1 - theta N_i / 2. theta may hold only scalar and pseudoscalar
// terms; direction is a frame index in 1..n-1.
Rotor translation_rotor(const LittleAlgebra& la, int direction, const Multivector& theta);

// exp(-alpha/2 e_i e_j).
Rotor rotation_rotor(const LittleAlgebra& la, int i, int j, double alpha);

// theta = alpha + beta I in the given algebra.
Multivector complex_like(Signature sig, double alpha, double beta);

// Components of a potential z = a + bI in G(1,3): a and b as coefficient
// arrays over gamma0..gamma3.
struct PotentialParts {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
};

PotentialParts split_potential(const Multivector& z);
Multivector make_potential(const std::array<double, 4>& a, const std::array<double, 4>& b);

Multivector transform_potential(const Rotor& rotor, const Multivector& z);

// a0 == a3 and b0 == b3 within 1e-12 (G(1,3) potentials).
bool gauge_check(const Multivector& z);

// Closed form of the N2 translation with theta = alpha + beta I applied to a
// gauge-satisfying potential:
//   (g0+g3)(a0 - alpha a2 - beta a1 + (b0 - alpha b2 - beta b1) I) + g1(a1 + b1 I) + g2(a2 + b2 I)
Multivector gauge_closed_form(const Multivector& z, double alpha, double beta);

// s k for orthogonal s, k; throws PreconditionError when |s.k| > 1e-12.
Multivector canonical_bivector(const Multivector& s, const Multivector& k);

// Predicted image of a vector s in span{e1..e_{n-1}} under translation_rotor(la, direction, theta).
Multivector translated_spatial_closed_form(const LittleAlgebra& la, int direction,
                                           const Multivector& theta, const Multivector& s);

// Lambda k Lambda^-1 = k, the closed form of Lambda s Lambda^-1 and
// (Lambda s Lambda^-1) ^ k = s ^ k. direction < 0 selects n-1.
CheckReport check_invariance(const LittleAlgebra& la, const Multivector& s,
                             const Multivector& theta, int direction = -1,
                             double tol = kIdentityTolerance);

struct RotationEffect {
  double k_residual = 0.0;         // |R k R~ - k|
  double orthogonality = 0.0;      // |(R s R~) . k|
  double bivector_change = 0.0;    // |(R s R~) ^ k - s ^ k|
};

// Rotation in the (e_i, e_j) plane by alpha applied to s.
RotationEffect rotation_effect(const LittleAlgebra& la, const Multivector& s, double alpha,
                               int i = 1, int j = 2);

// Products of all pairs of embedded W(k) blades expressed in the embedded blade basis.
class CayleyTable {
 public:
  int n() const { return n_; }
  std::size_t blade_count() const { return std::size_t{1} << n_; }
  // Coordinate of E_a E_b on E_c.
  double coefficient(Blade a, Blade b, Blade c) const {
    return coords_[(a.mask * blade_count() + b.mask) * blade_count() + c.mask];
  }
  // Largest parent-space residual of reconstructing a product from its coordinates.
  double closure_residual() const { return closure_residual_; }

 private:
  friend CayleyTable cayley_table(const LittleAlgebra&);
  int n_ = 0;
  std::vector<double> coords_;
  double closure_residual_ = 0.0;
};

CayleyTable cayley_table(const LittleAlgebra& la);

// Compares the Cayley table with the blade product table of reference_signature().
CheckReport isomorphism_check(const LittleAlgebra& la, double tol = kIdentityTolerance);
CheckReport isomorphism_check(const LittleAlgebra& la, const CayleyTable& table,
                              double tol = kIdentityTolerance);

}  // namespace lpa
