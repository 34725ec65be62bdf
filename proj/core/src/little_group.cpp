#include "lpa/little_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lpa/errors.hpp"
#include "lpa/products.hpp"

namespace lpa {

namespace {

constexpr double kOrthogonalityTolerance = 1e-12;

Multivector gen(Signature sig, int i) { return Multivector::generator(sig, i); }

int levi_civita(int j, int k, int l) {
  if (j == k || k == l || j == l) return 0;
  int inversions = (j > k) + (j > l) + (k > l);
  return (inversions % 2) ? -1 : 1;
}

void require_sta(const Algebra& alg, const char* op) {
  if (alg.signature() != Signature{1, 3, 0}) {
    throw PreconditionError(std::string(op) + " requires G(1,3), got " +
                            alg.signature().to_string());
  }
}

}  // namespace

MinkowskiLayout minkowski_layout(Signature sig) {
  if (!sig.valid() || sig.r != 0) {
    throw PreconditionError("not a Minkowski signature: " + sig.to_string());
  }
  MinkowskiLayout layout;
  if (sig.p == 1 && sig.q >= 1) {
    layout.time_index = 0;
    layout.time_square = 1;
    layout.space_square = -1;
    for (int i = 1; i <= sig.q; ++i) layout.space_indices.push_back(i);
  } else if (sig.q == 1 && sig.p >= 1) {
    layout.time_index = sig.p;
    layout.time_square = -1;
    layout.space_square = 1;
    for (int i = 0; i < sig.p; ++i) layout.space_indices.push_back(i);
  } else {
    throw PreconditionError("not a Minkowski signature: " + sig.to_string());
  }
  return layout;
}

// --- Lorentz generators ------------------------------------------------------

LorentzGenerators lorentz_generators(const Algebra& alg) {
  require_sta(alg, "lorentz_generators");
  const Signature sig = alg.signature();
  auto g = [&](int i) { return gen(sig, i); };
  return LorentzGenerators{
      {g(2) * g(3), g(3) * g(1), g(1) * g(2)},
      {g(1) * g(0), g(2) * g(0), g(3) * g(0)},
  };
}

CheckReport verify_lorentz_commutation(const Algebra& alg, double tol) {
  const LorentzGenerators lg = lorentz_generators(alg);
  const Signature sig = alg.signature();
  const Multivector I = pseudoscalar(sig);
  auto J = [&](int l) { return lg.rotations[static_cast<std::size_t>(l - 1)]; };
  auto K = [&](int l) { return lg.boosts[static_cast<std::size_t>(l - 1)]; };

  double rr = 0.0, rb = 0.0, bb = 0.0;
  int pairs = 0;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      Multivector expect_j(sig), expect_k(sig), expect_boost(sig);
      for (int l = 1; l <= 3; ++l) {
        const int e = levi_civita(j, k, l);
        if (e == 0) continue;
        expect_j += J(l) * static_cast<double>(e);
        expect_k += K(l) * static_cast<double>(e);
        expect_boost += J(l) * static_cast<double>(-e);
      }
      if (j < k) {
        rr = std::max(rr, max_abs_difference(commutator(J(j), J(k)), expect_j));
        bb = std::max(bb, max_abs_difference(commutator(K(j), K(k)), expect_boost));
        pairs += 2;
      }
      rb = std::max(rb, max_abs_difference(commutator(J(j), K(k)), expect_k));
      ++pairs;
    }
  }

  // Same relations written with basis bivectors and the pseudoscalar.
  auto g2 = [&](int a, int b) { return gen(sig, a) * gen(sig, b); };
  double sta_rr = 0.0, sta_rb = 0.0, sta_bb = 0.0;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        const int e = levi_civita(j, k, l);
        if (e == 0) continue;
        sta_rr = std::max(sta_rr, max_abs_difference(commutator(g2(j, k), g2(k, l)), g2(l, j)));
        sta_rb = std::max(sta_rb, max_abs_difference(commutator(g2(j, k), g2(k, 0)),
                                                     g2(k, l) * I * static_cast<double>(-e)));
        sta_bb = std::max(sta_bb, max_abs_difference(commutator(g2(j, 0), g2(k, 0)),
                                                     g2(l, 0) * I * static_cast<double>(e)));
      }
    }
  }

  CheckReport report(tol);
  report.add("pairs counted", "15 distinct generator pairs", pairs == 15 ? 0.0 : 1.0);
  report.add("rotation-rotation", "[J_j,J_k] = eps_jkl J_l", rr);
  report.add("rotation-boost", "[J_j,K_k] = eps_jkl K_l", rb);
  report.add("boost-boost", "[K_j,K_k] = -eps_jkl J_l", bb);
  report.add("sta rotation-rotation", "g_jk x g_kl = g_lj", sta_rr);
  report.add("sta rotation-boost", "g_jk x g_k0 = -eps_jkl g_kl I", sta_rb);
  report.add("sta boost-boost", "g_j0 x g_k0 = eps_jkl g_l0 I", sta_bb);
  return report;
}

// --- Little algebra ------------------------------------------------------------

Signature LittleAlgebra::reference_signature() const {
  const int n = this->n();
  return layout_.mostly_minus() ? Signature{0, n - 1, 1} : Signature{n - 1, 0, 1};
}

const Multivector& LittleAlgebra::embedded_generator(int w) const {
  if (w < 0 || w >= n()) throw PreconditionError("W(k) generator index out of range");
  return w == n() - 1 ? frame_[0] : frame_[static_cast<std::size_t>(w + 1)];
}

Multivector LittleAlgebra::embedded_blade(Blade reference_blade) const {
  Multivector out = Multivector::scalar(parent_.signature(), 1.0);
  for (int w : reference_blade.indices()) out = out * embedded_generator(w);
  return out;
}

int LittleAlgebra::orientation() const {
  if (n() != 3) throw PreconditionError("orientation is defined for G(1,3) frames only");
  const auto& u = direction_;
  const auto& a = spatial_frame_[0];
  const auto& b = spatial_frame_[1];
  const double det = u[0] * (a[1] * b[2] - a[2] * b[1]) - a[0] * (u[1] * b[2] - u[2] * b[1]) +
                     b[0] * (u[1] * a[2] - u[2] * a[1]);
  return det >= 0.0 ? 1 : -1;
}

double LittleAlgebra::inner_table_residual() const {
  double residual = 0.0;
  for (int a = 0; a < n(); ++a) {
    for (int b = 0; b < n(); ++b) {
      const double expected = (a == b && a != 0) ? layout_.space_square : 0.0;
      const double v = inner_vectors(frame_[static_cast<std::size_t>(a)],
                                     frame_[static_cast<std::size_t>(b)]);
      residual = std::max(residual, std::fabs(v - expected));
    }
  }
  return residual;
}

LittleAlgebra construct_little_algebra(const Algebra& parent, const Multivector& k) {
  MinkowskiLayout layout = minkowski_layout(parent.signature());
  const Signature sig = parent.signature();
  if (k.signature() != sig) {
    throw AlgebraMismatch("k belongs to " + k.signature().to_string() + ", parent is " +
                          sig.to_string());
  }
  if (!k.is_grade(1)) throw PreconditionError("k must be a grade-1 multivector");
  if (k.is_zero()) throw PreconditionError("k must be nonzero");
  const double kt = k.coefficient(Blade{1U << layout.time_index});
  if (kt == 0.0) throw PreconditionError("k is not lightlike (no time component)");

  Multivector e0(sig);
  for (const auto& [blade, value] : k.terms()) e0.set(blade, value / kt);
  const double norm = inner_vectors(e0, e0);
  if (!(std::fabs(norm) <= kOrthogonalityTolerance)) {
    throw PreconditionError("k is not lightlike: e0.e0 = " + std::to_string(norm));
  }

  const int n = layout.spatial_dimension();
  std::vector<double> u(static_cast<std::size_t>(n));
  double length2 = 0.0;
  for (int j = 0; j < n; ++j) {
    u[static_cast<std::size_t>(j)] =
        e0.coefficient(Blade{1U << layout.space_indices[static_cast<std::size_t>(j)]});
    length2 += u[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j)];
  }
  const double length = std::sqrt(length2);
  for (double& x : u) x /= length;

  int most_parallel = 0;
  for (int j = 1; j < n; ++j) {
    if (std::fabs(u[static_cast<std::size_t>(j)]) >
        std::fabs(u[static_cast<std::size_t>(most_parallel)])) {
      most_parallel = j;
    }
  }

  std::vector<std::vector<double>> basis{u};
  std::vector<std::vector<double>> spatial;
  for (int j = 0; j < n; ++j) {
    if (j == most_parallel) continue;
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    v[static_cast<std::size_t>(j)] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        double dot = 0.0;
        for (int m = 0; m < n; ++m) dot += v[static_cast<std::size_t>(m)] * b[static_cast<std::size_t>(m)];
        if (dot == 0.0) continue;
        for (int m = 0; m < n; ++m) v[static_cast<std::size_t>(m)] -= dot * b[static_cast<std::size_t>(m)];
      }
    }
    double vn = 0.0;
    for (double x : v) vn += x * x;
    vn = std::sqrt(vn);
    if (!(vn > 1e-8)) throw std::logic_error("Gram-Schmidt degeneracy in frame completion");
    for (double& x : v) x /= vn;
    basis.push_back(v);
    spatial.push_back(v);
  }

  LittleAlgebra la(parent, layout);
  la.k_ = k;
  la.direction_ = u;
  la.frame_.push_back(e0);
  for (const auto& v : spatial) {
    Multivector e(sig);
    for (int m = 0; m < n; ++m) {
      e.set(Blade{1U << la.layout_.space_indices[static_cast<std::size_t>(m)]},
            v[static_cast<std::size_t>(m)]);
    }
    la.frame_.push_back(std::move(e));
  }
  la.spatial_frame_ = std::move(spatial);
  return la;
}

GeneratorSet little_generators(const LittleAlgebra& la) {
  GeneratorSet set;
  const auto& f = la.frame();
  for (int i = 1; i < la.n(); ++i) {
    for (int j = i + 1; j < la.n(); ++j) {
      set.rotations.push_back(f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)]);
      set.rotation_planes.emplace_back(i, j);
    }
  }
  for (int i = 1; i < la.n(); ++i) {
    set.translations.push_back(f[static_cast<std::size_t>(i)] * f[0]);
  }
  return set;
}

CheckReport verify_commutation(const LittleAlgebra& la, double tol) {
  const GeneratorSet gs = little_generators(la);
  const Signature sig = la.parent().signature();
  const int g = la.spatial_square();
  const int n = la.n();
  auto N = [&](int i) -> const Multivector& { return gs.translations[static_cast<std::size_t>(i - 1)]; };
  // Rotation bivector e_a e_b for any ordered pair of spatial frame indices.
  auto R = [&](int a, int b) {
    if (a == b) return Multivector(sig);
    const int lo = std::min(a, b), hi = std::max(a, b);
    for (std::size_t r = 0; r < gs.rotation_planes.size(); ++r) {
      if (gs.rotation_planes[r] == std::make_pair(lo, hi)) {
        return a < b ? gs.rotations[r] : -gs.rotations[r];
      }
    }
    throw std::logic_error("missing rotation plane");
  };
  auto delta = [&](int a, int b) { return a == b ? static_cast<double>(g) : 0.0; };

  double translations_commute = 0.0, nilpotent = 0.0, unit_rotation = 0.0;
  for (int a = 1; a < n; ++a) {
    nilpotent = std::max(nilpotent, (N(a) * N(a)).max_abs());
    for (int b = a + 1; b < n; ++b) {
      translations_commute = std::max(translations_commute, commutator(N(a), N(b)).max_abs());
    }
  }
  for (const auto& rot : gs.rotations) {
    unit_rotation = std::max(unit_rotation,
                             max_abs_difference(rot * rot, Multivector::scalar(sig, -1.0)));
  }

  // (a^b) x (c^d) = (b.c) a^d - (b.d) a^c - (a.c) b^d + (a.d) b^c on the frame metric.
  double rotation_translation = 0.0, rotation_rotation = 0.0;
  for (const auto& [i, j] : gs.rotation_planes) {
    const Multivector& rij = R(i, j);
    for (int m = 1; m < n; ++m) {
      Multivector expected = N(i) * delta(j, m) - N(j) * delta(i, m);
      rotation_translation =
          std::max(rotation_translation, max_abs_difference(commutator(rij, N(m)), expected));
    }
    for (const auto& [k, l] : gs.rotation_planes) {
      Multivector expected = R(i, l) * delta(j, k) - R(i, k) * delta(j, l) -
                             R(j, l) * delta(i, k) + R(j, k) * delta(i, l);
      rotation_rotation = std::max(rotation_rotation,
                                   max_abs_difference(commutator(rij, R(k, l)), expected));
    }
  }

  CheckReport report(tol);
  report.add("pga inner table",
             g < 0 ? "e0.e0=0, ei.ej=-delta_ij, e0.ei=0" : "e0.e0=0, ei.ej=delta_ij, e0.ei=0",
             la.inner_table_residual());
  report.add("translations nilpotent", "N_i^2 = 0", nilpotent);
  report.add("rotations unit", "(e_i e_j)^2 = -1", unit_rotation);
  report.add("translations commute", "N_a x N_b = 0", translations_commute);
  report.add("rotation-translation", "(e_i e_j) x N_m = g_jm N_i - g_im N_j", rotation_translation);
  report.add("rotation-rotation", "so(n-1) structure constants", rotation_rotation);

  if (sig == Signature{1, 3, 0}) {
    const Multivector& J3 = gs.rotations[0];
    const Multivector I = pseudoscalar(sig);
    const Multivector one = Multivector::scalar(sig, 1.0);
    report.add("N1xN2", "N1 x N2 = 0", commutator(N(1), N(2)).max_abs());
    report.add("J3xN1", "J3 x N1 = N2", max_abs_difference(commutator(J3, N(1)), N(2)));
    report.add("J3xN2", "J3 x N2 = -N1", max_abs_difference(commutator(J3, N(2)), -N(1)));
    const Multivector c = commutator(J3, N(2));
    report.add("folded", "J3 x (N2(1+I)) = J3 x N2 + I(J3 x N2)",
               max_abs_difference(commutator(J3, N(2) * (one + I)), c + I * c));
  }
  return report;
}

// --- Rotors --------------------------------------------------------------------

Multivector complex_like(Signature sig, double alpha, double beta) {
  Multivector theta = Multivector::scalar(sig, alpha);
  theta += pseudoscalar(sig) * beta;
  return theta;
}

Rotor translation_rotor(const LittleAlgebra& la, int direction, const Multivector& theta) {
  const Signature sig = la.parent().signature();
  if (direction < 1 || direction >= la.n()) {
    throw PreconditionError("translation direction must lie in 1.." + std::to_string(la.n() - 1));
  }
  require_same_algebra(theta, la.k(), "translation_rotor");
  const Blade I_blade = la.parent().pseudoscalar_blade();
  bool has_pseudoscalar = false;
  for (const auto& [blade, value] : theta.terms()) {
    if (blade == I_blade) {
      has_pseudoscalar = true;
    } else if (blade.mask != 0) {
      throw PreconditionError("theta may only hold scalar and pseudoscalar terms");
    }
  }
  const Multivector& ei = la.frame()[static_cast<std::size_t>(direction)];
  const Multivector N = ei * la.frame()[0];
  if (has_pseudoscalar && !commutator(pseudoscalar(sig), N).is_zero()) {
    throw PreconditionError("pseudoscalar does not commute with N_" + std::to_string(direction));
  }
  Multivector lambda = Multivector::scalar(sig, 1.0) - (theta * N) * 0.5;
  if (!lambda.is_even()) {
    throw PreconditionError("a pseudoscalar angle does not give an even rotor in " +
                            sig.to_string());
  }
  try {
    return Rotor::from_multivector(std::move(lambda));
  } catch (const RotorNormError& e) {
    throw PreconditionError(std::string("translation rotor is not normalized in ") +
                            sig.to_string() + ": " + e.what());
  }
}

Rotor rotation_rotor(const LittleAlgebra& la, int i, int j, double alpha) {
  if (i < 1 || j < 1 || i >= la.n() || j >= la.n() || i == j) {
    throw PreconditionError("rotation plane needs two distinct spatial frame indices");
  }
  const auto& f = la.frame();
  return exp_bivector(outer(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]),
                      -0.5 * alpha);
}

// --- Potentials and gauge ----------------------------------------------------------

PotentialParts split_potential(const Multivector& z) {
  if (z.signature() != Signature{1, 3, 0}) {
    throw PreconditionError("potentials live in G(1,3), got " + z.signature().to_string());
  }
  if ((z.grade_mask() & ~0b1010U) != 0) {
    throw GradeError("a potential holds only vector and trivector parts");
  }
  PotentialParts parts;
  const Multivector a = grade_select(z, 1);
  // b = (bI) I^-1 with I^-1 = -I.
  const Multivector b = grade_select(grade_select(z, 3) * pseudoscalar(z.signature()) * -1.0, 1);
  for (int i = 0; i < 4; ++i) {
    parts.a[static_cast<std::size_t>(i)] = a.coefficient(Blade{1U << i});
    parts.b[static_cast<std::size_t>(i)] = b.coefficient(Blade{1U << i});
  }
  return parts;
}

Multivector make_potential(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  const Signature sig{1, 3, 0};
  Multivector av = Multivector::vector(sig, {a[0], a[1], a[2], a[3]});
  Multivector bv = Multivector::vector(sig, {b[0], b[1], b[2], b[3]});
  return av + right_mul_pseudoscalar(bv);
}

Multivector transform_potential(const Rotor& rotor, const Multivector& z) {
  if ((z.grade_mask() & ~0b1010U) != 0) {
    throw GradeError("a potential holds only vector and trivector parts");
  }
  return sandwich(rotor, z);
}

bool gauge_check(const Multivector& z) {
  const PotentialParts p = split_potential(z);
  return std::fabs(p.a[0] - p.a[3]) <= kIdentityTolerance &&
         std::fabs(p.b[0] - p.b[3]) <= kIdentityTolerance;
}

Multivector gauge_closed_form(const Multivector& z, double alpha, double beta) {
  const PotentialParts p = split_potential(z);
  const Signature sig{1, 3, 0};
  auto c = [&](double re, double im) { return complex_like(sig, re, im); };
  const double x = p.a[0] - alpha * p.a[2] - beta * p.a[1];
  const double y = p.b[0] - alpha * p.b[2] - beta * p.b[1];
  const Multivector k = gen(sig, 0) + gen(sig, 3);
  return k * c(x, y) + gen(sig, 1) * c(p.a[1], p.b[1]) + gen(sig, 2) * c(p.a[2], p.b[2]);
}

// --- Invariance ----------------------------------------------------------------

Multivector canonical_bivector(const Multivector& s, const Multivector& k) {
  require_same_algebra(s, k, "canonical_bivector");
  const double dot = inner_vectors(s, k);
  if (!(std::fabs(dot) <= kOrthogonalityTolerance)) {
    throw PreconditionError("canonical_bivector needs s.k = 0, got " + std::to_string(dot));
  }
  return s * k;
}

Multivector translated_spatial_closed_form(const LittleAlgebra& la, int direction,
                                           const Multivector& theta, const Multivector& s) {
  const Signature sig = la.parent().signature();
  const double alpha = theta.scalar_part();
  const double beta = theta.coefficient(la.parent().pseudoscalar_blade());
  const auto& f = la.frame();
  auto e = [&](int i) -> const Multivector& { return f[static_cast<std::size_t>(i)]; };
  if (beta == 0.0) {
    return s + e(0) * (alpha * inner_vectors(e(direction), s));
  }
  if (sig != Signature{1, 3, 0}) {
    throw PreconditionError("pseudoscalar angles have a closed form in G(1,3) only");
  }
  // Frame coefficients s = s1 e1 + s2 e2 (e_i . e_i = -1).
  const double s1 = -inner_vectors(e(1), s);
  const double s2 = -inner_vectors(e(2), s);
  const double sigma = la.orientation();
  const double shift = direction == 2 ? alpha * s2 + sigma * beta * s1
                                      : alpha * s1 - sigma * beta * s2;
  return s - e(0) * shift;
}

CheckReport check_invariance(const LittleAlgebra& la, const Multivector& s,
                             const Multivector& theta, int direction, double tol) {
  const int d = direction < 0 ? la.n() - 1 : direction;
  require_same_algebra(s, la.k(), "check_invariance");
  if (!s.is_grade(1)) throw PreconditionError("s must be grade 1");
  Multivector projected(la.parent().signature());
  for (int i = 1; i < la.n(); ++i) {
    const Multivector& ei = la.frame()[static_cast<std::size_t>(i)];
    projected += ei * (inner_vectors(ei, s) / la.spatial_square());
  }
  if (!(max_abs_difference(projected, s) <= kOrthogonalityTolerance * std::max(1.0, s.max_abs()))) {
    throw PreconditionError("s must lie in the span of e1..e_{n-1}");
  }

  const Rotor lambda = translation_rotor(la, d, theta);
  const Multivector s_prime = sandwich(lambda, s);
  const Multivector k_prime = sandwich(lambda, la.k());

  CheckReport report(tol);
  report.add("translation fixes k", "L k L^-1 = k", max_abs_difference(k_prime, la.k()));
  report.add("translated s", "L s L^-1 = s - (shift) e0",
             max_abs_difference(s_prime, translated_spatial_closed_form(la, d, theta, s)));
  report.add("s^k invariant", "(L s L^-1) ^ k = s ^ k",
             max_abs_difference(outer(s_prime, la.k()), outer(s, la.k())));
  return report;
}

RotationEffect rotation_effect(const LittleAlgebra& la, const Multivector& s, double alpha,
                               int i, int j) {
  const Rotor r = rotation_rotor(la, i, j, alpha);
  const Multivector rotated = sandwich(r, s);
  RotationEffect effect;
  effect.k_residual = max_abs_difference(sandwich(r, la.k()), la.k());
  effect.orthogonality = std::fabs(inner_vectors(rotated, la.k()));
  effect.bivector_change = max_abs_difference(outer(rotated, la.k()), outer(s, la.k()));
  return effect;
}

}  // namespace lpa
