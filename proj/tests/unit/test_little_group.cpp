#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpa/errors.hpp"
#include "lpa/little_group.hpp"
#include "lpa/products.hpp"
#include "lpa/sampling.hpp"
#include "lpa/text.hpp"
#include "oracle.hpp"

using namespace lpa;

namespace {

const Signature kSta{1, 3, 0};
const Signature kLightcone{1, 2, 0};

Multivector gen(Signature sig, int i) { return Multivector::generator(sig, i); }
Multivector g(int i) { return gen(kSta, i); }
Multivector gg(int i, int j) { return g(i) * g(j); }

LittleAlgebra sta_little() { return construct_little_algebra(make_algebra(kSta), g(0) + g(3)); }
LittleAlgebra lightcone_little() {
  return construct_little_algebra(make_algebra(kLightcone), gen(kLightcone, 0) + gen(kLightcone, 2));
}

}  // namespace

TEST_CASE("Lorentz generators") {
  const auto lg = lorentz_generators(make_algebra(kSta));
  CHECK(lg.rotations[0] == gg(2, 3));
  CHECK(lg.rotations[1] == gg(3, 1));
  CHECK(lg.rotations[2] == gg(1, 2));
  CHECK(lg.boosts[0] == gg(1, 0));
  CHECK_THROWS_AS(lorentz_generators(make_algebra(kLightcone)), PreconditionError);

  CHECK(commutator(gg(1, 2), gg(2, 3)) == gg(3, 1));
  CHECK(commutator(gg(1, 2), gg(1, 2)).is_zero());
  // The boost-boost commutator closes on rotations: g10 x g20 = -J3 = +g30 I.
  const Multivector i = pseudoscalar(kSta);
  CHECK(commutator(gg(1, 0), gg(2, 0)) == -gg(1, 2));
  CHECK(commutator(gg(1, 0), gg(2, 0)) == gg(3, 0) * i);

  const CheckReport report = verify_lorentz_commutation(make_algebra(kSta));
  CHECK(report.all_pass());
  CHECK(report.max_residual() == 0.0);
}

TEST_CASE("frame construction") {
  const LittleAlgebra la = sta_little();
  REQUIRE(la.n() == 3);
  CHECK(la.frame()[0] == g(0) + g(3));
  CHECK(la.frame()[1] == g(1));
  CHECK(la.frame()[2] == g(2));
  CHECK(la.reference_signature() == Signature{0, 2, 1});
  CHECK(la.inner_table_residual() == 0.0);
  CHECK(la.embedded_generator(2) == la.frame()[0]);
  CHECK(la.embedded_generator(0) == la.frame()[1]);

  const LittleAlgebra lc = lightcone_little();
  REQUIRE(lc.n() == 2);
  CHECK(lc.frame()[0] == gen(kLightcone, 0) + gen(kLightcone, 2));
  CHECK(lc.frame()[1] == gen(kLightcone, 1));

  // Scaling k rescales to unit time coefficient.
  const LittleAlgebra scaled = construct_little_algebra(make_algebra(kSta), 2.0 * (g(0) + g(3)));
  CHECK(scaled.frame()[0] == g(0) + g(3));

  const Algebra alg = make_algebra(kSta);
  CHECK_THROWS_AS(construct_little_algebra(alg, g(0)), PreconditionError);
  CHECK_THROWS_AS(construct_little_algebra(alg, g(1) + g(2)), PreconditionError);
  CHECK_THROWS_AS(construct_little_algebra(alg, Multivector(kSta)), PreconditionError);
  CHECK_THROWS_AS(construct_little_algebra(alg, gg(0, 3)), PreconditionError);
  CHECK_THROWS_AS(construct_little_algebra(alg, gen(kLightcone, 0)), AlgebraMismatch);
  CHECK_THROWS_AS(construct_little_algebra(make_algebra({0, 2, 1}), gen({0, 2, 1}, 2)),
                  PreconditionError);
}

TEST_CASE("random frames satisfy the projective inner table") {
  const Signature sig{1, 5, 0};
  const Algebra alg = make_algebra(sig);
  const auto sq = oracle::squares(1, 5, 0);
  Sampler sampler(11);
  for (int t = 0; t < 20; ++t) {
    const LittleAlgebra la = construct_little_algebra(alg, sampler.lightlike(alg));
    REQUIRE(la.n() == 5);
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        const auto fa = oracle::dense(la.frame()[static_cast<std::size_t>(a)]);
        const auto fb = oracle::dense(la.frame()[static_cast<std::size_t>(b)]);
        const auto sym = oracle::add(oracle::product(sq, fa, fb), oracle::product(sq, fb, fa));
        const double expect = (a == b && a > 0) ? -2.0 : 0.0;
        CHECK(std::fabs(sym[0] - expect) <= 1e-12);
      }
    }
  }
}

TEST_CASE("tie-break picks the lowest index") {
  const Algebra alg = make_algebra(kSta);
  const double c = 1.0 / std::sqrt(2.0);
  const LittleAlgebra la = construct_little_algebra(alg, g(0) + c * g(1) + c * g(2));
  // g1 and g2 are equally parallel; g1 is skipped, so g2 seeds the completion.
  CHECK(la.frame()[1].coefficient(Blade::from_indices({1})) != 0.0);
  CHECK(la.frame()[2] == g(3));
  CHECK(la.inner_table_residual() <= 1e-15);
}

TEST_CASE("little group generators") {
  const LittleAlgebra la = sta_little();
  const GeneratorSet gens = little_generators(la);
  REQUIRE(gens.translations.size() == 2);
  REQUIRE(gens.rotations.size() == 1);
  const Multivector n1 = gens.translations[0];
  const Multivector n2 = gens.translations[1];
  const Multivector j3 = gens.rotations[0];
  CHECK(n2 == gg(2, 0) + gg(2, 3));
  CHECK(n1 == gg(1, 0) - gg(3, 1));
  CHECK(j3 == gg(1, 2));
  CHECK(commutator(n1, n2).is_zero());
  CHECK(commutator(j3, n1) == n2);
  CHECK(commutator(j3, n2) == -n1);
  CHECK(n2 * pseudoscalar(kSta) == n1);

  const CheckReport report = verify_commutation(la, 0.0);
  CHECK(report.all_pass());
  CHECK(report.residual("folded") == 0.0);

  const LittleAlgebra lc = lightcone_little();
  const GeneratorSet lg = little_generators(lc);
  CHECK(lg.rotations.empty());
  CHECK(lg.translations.size() == 1);
  CHECK(verify_commutation(lc, 0.0).all_pass());
}

TEST_CASE("SE(n-1) structure constants against brute force") {
  const Signature sig{1, 5, 0};
  const Algebra alg = make_algebra(sig);
  const auto sq = oracle::squares(1, 5, 0);
  Sampler sampler(5);
  const LittleAlgebra la = construct_little_algebra(alg, sampler.lightlike(alg));
  CHECK(verify_commutation(la).all_pass());
  const auto gens = little_generators(la);
  auto comm = [&](const Multivector& a, const Multivector& b) {
    const auto da = oracle::dense(a), db = oracle::dense(b);
    return oracle::add(oracle::product(sq, da, db), oracle::product(sq, db, da), -1.0);
  };
  // 2 (e_i e_j) x N_m, dense: (ab - ba) = 2 (g_jm N_i - g_im N_j) with g = -delta.
  for (std::size_t r = 0; r < gens.rotations.size(); ++r) {
    const auto [i, j] = gens.rotation_planes[r];
    for (int m = 1; m < la.n(); ++m) {
      oracle::Dense expect(std::size_t{1} << 6, 0.0);
      if (j == m) expect = oracle::add(expect, oracle::dense(gens.translations[static_cast<std::size_t>(i - 1)]), -2.0);
      if (i == m) expect = oracle::add(expect, oracle::dense(gens.translations[static_cast<std::size_t>(j - 1)]), 2.0);
      CHECK(oracle::max_abs_difference(comm(gens.rotations[r], gens.translations[static_cast<std::size_t>(m - 1)]), expect) <= 1e-12);
    }
  }
}

TEST_CASE("translation rotors") {
  const LittleAlgebra la = sta_little();
  const Multivector n2 = little_generators(la).translations[1];
  CHECK(translation_rotor(la, 2, Multivector::scalar(kSta, 0.0)).value() ==
        Multivector::scalar(kSta, 1.0));
  const double alpha = 1.25;
  CHECK(translation_rotor(la, 2, Multivector::scalar(kSta, alpha)).value() ==
        Multivector::scalar(kSta, 1.0) - (alpha / 2) * n2);
  for (double a : {-3.0, 0.1, 7.5}) {
    for (double b : {-2.0, 0.0, 4.0}) {
      const Multivector th = complex_like(kSta, a, b);
      CHECK(((th * n2) * (th * n2)).is_zero());
      CHECK(translation_rotor(la, 2, th).norm_residual() == 0.0);
    }
  }
  CHECK_THROWS_AS(translation_rotor(la, 0, Multivector::scalar(kSta, 1.0)), PreconditionError);
  CHECK_THROWS_AS(translation_rotor(la, 3, Multivector::scalar(kSta, 1.0)), PreconditionError);
  CHECK_THROWS_AS(translation_rotor(la, 1, g(1)), PreconditionError);

  // G(1,2): I is odd, G(1,4): I fails to commute with N; neither yields a rotor.
  const LittleAlgebra lc = lightcone_little();
  CHECK_THROWS_AS(translation_rotor(lc, 1, complex_like(kLightcone, 1.0, 1.0)), PreconditionError);
  const Signature s14{1, 4, 0};
  const LittleAlgebra l4 = construct_little_algebra(make_algebra(s14), gen(s14, 0) + gen(s14, 4));
  CHECK_THROWS_AS(translation_rotor(l4, 1, complex_like(s14, 1.0, 1.0)), PreconditionError);
  CHECK_FALSE(supports_pseudoscalar_angle(s14));
  CHECK(supports_pseudoscalar_angle(kSta));
}

TEST_CASE("rotation rotors") {
  const LittleAlgebra la = sta_little();
  const double alpha = 0.9;
  const Rotor r = rotation_rotor(la, 1, 2, alpha);
  const Multivector expect =
      Multivector::scalar(kSta, std::cos(alpha / 2)) - std::sin(alpha / 2) * gg(1, 2);
  CHECK(max_abs_difference(r.value(), expect) <= 1e-15);
  CHECK_THROWS_AS(rotation_rotor(la, 0, 1, alpha), PreconditionError);
  CHECK_THROWS_AS(rotation_rotor(la, 2, 2, alpha), PreconditionError);
}

TEST_CASE("potentials and the gauge closed form") {
  const LittleAlgebra la = sta_little();
  const Multivector i = pseudoscalar(kSta);
  CHECK(gauge_check(g(0) + g(3)));
  CHECK_FALSE(gauge_check(g(0)));
  CHECK(gauge_check(g(0) + g(3) + (g(0) + g(3)) * i));

  const Multivector z = make_potential({1.0, 2.0, 3.0, 4.0}, {0.5, -1.0, 0.25, 2.0});
  const PotentialParts parts = split_potential(z);
  CHECK(parts.a == std::array<double, 4>{1.0, 2.0, 3.0, 4.0});
  CHECK(parts.b == std::array<double, 4>{0.5, -1.0, 0.25, 2.0});
  CHECK_THROWS_AS(split_potential(z + Multivector::scalar(kSta, 1.0)), GradeError);

  // b = 0, a0 = a3: (a0 - alpha a2 - beta a1)(g0+g3) + a1 g1 + a2 g2
  const double alpha = 0.5, beta = -1.5;
  const std::array<double, 4> a{2.0, 1.0, -3.0, 2.0};
  const Multivector za = make_potential(a, {});
  const Rotor lambda = translation_rotor(la, 2, complex_like(kSta, alpha, beta));
  const double c0 = a[0] - alpha * a[2] - beta * a[1];
  const Multivector expect = c0 * (g(0) + g(3)) + a[1] * g(1) + a[2] * g(2);
  CHECK(transform_potential(lambda, za) == expect);
  CHECK(gauge_closed_form(za, alpha, beta) == expect);

  const Multivector zb = make_potential({1.0, 0.5, 0.25, 1.0}, {});
  CHECK(transform_potential(translation_rotor(la, 2, Multivector::scalar(kSta, 1.0)), zb) ==
        parse_multivector("0.75*e0+0.5*e1+0.25*e2+0.75*e3", make_algebra(kSta)));

  CHECK(transform_potential(translation_rotor(la, 2, complex_like(kSta, 0.0, 0.0)), z) == z);

  Sampler sampler(3);
  for (int t = 0; t < 50; ++t) {
    const Multivector zz = sampler.potential(true);
    const double al = sampler.uniform(-2, 2), be = sampler.uniform(-2, 2);
    const Multivector moved = transform_potential(translation_rotor(la, 2, complex_like(kSta, al, be)), zz);
    CHECK(max_abs_difference(moved, gauge_closed_form(zz, al, be)) <= 1e-12);
  }
  CHECK_THROWS_AS(gauge_closed_form(gen(kLightcone, 0), 1.0, 0.0), PreconditionError);
}

TEST_CASE("canonical bivector") {
  const Multivector k = g(0) + g(3);
  CHECK(canonical_bivector(g(1), k) == gg(1, 0) + gg(1, 3));
  const Signature lc = kLightcone;
  const double s1 = 1.5, k0 = -2.0;
  const Multivector kk = k0 * (gen(lc, 0) + gen(lc, 2));
  CHECK(canonical_bivector(s1 * gen(lc, 1), kk) ==
        s1 * k0 * (gen(lc, 1) * gen(lc, 0) + gen(lc, 1) * gen(lc, 2)));
  CHECK_THROWS_AS(canonical_bivector(g(0), k), PreconditionError);
}

TEST_CASE("invariance under translations") {
  const LittleAlgebra lc = lightcone_little();
  const Signature sig = kLightcone;
  const double theta = 0.8;
  const Multivector s = gen(sig, 1);
  const Multivector moved = sandwich(translation_rotor(lc, 1, Multivector::scalar(sig, theta)), s);
  CHECK(moved == s - theta * lc.frame()[0]);
  CHECK(outer(moved, lc.k()) == canonical_bivector(s, lc.k()));
  CHECK(sandwich(translation_rotor(lc, 1, Multivector::scalar(sig, 0.0)), s) == s);
  CHECK(check_invariance(lc, s, Multivector::scalar(sig, theta), -1, 0.0).all_pass());

  const LittleAlgebra la = sta_little();
  // N1 with theta = alpha + beta I: s' = s - (alpha s1 - beta s2) e0.
  const Multivector s3 = 2.0 * g(1) - 0.5 * g(2);
  const Multivector th = complex_like(kSta, 0.75, 1.5);
  const Multivector m1 = sandwich(translation_rotor(la, 1, th), s3);
  CHECK(m1 == s3 - (0.75 * 2.0 - 1.5 * -0.5) * la.frame()[0]);
  const Multivector m2 = sandwich(translation_rotor(la, 2, th), s3);
  CHECK(m2 == s3 - (0.75 * -0.5 + 1.5 * 2.0) * la.frame()[0]);
  CHECK(check_invariance(la, s3, th, 1, 0.0).all_pass());

  CHECK_THROWS_AS(check_invariance(la, g(0), th, 1), PreconditionError);
  CHECK_THROWS_AS(check_invariance(la, gg(1, 2), th, 1), PreconditionError);
}

TEST_CASE("complex closed form with a left-handed frame") {
  // k = g0 - g3 completes to e1 = g1, e2 = g2 with det[k_hat, e1, e2] = -1.
  const LittleAlgebra la = construct_little_algebra(make_algebra(kSta), g(0) - g(3));
  REQUIRE(la.orientation() == -1);
  CHECK(sta_little().orientation() == 1);
  const Multivector s = 1.25 * g(1) + 0.5 * g(2);
  for (int d : {1, 2}) {
    const Multivector th = complex_like(kSta, -0.5, 2.0);
    const Multivector moved = sandwich(translation_rotor(la, d, th), s);
    CHECK(max_abs_difference(moved, translated_spatial_closed_form(la, d, th, s)) <= 1e-15);
    CHECK(check_invariance(la, s, th, d, 1e-15).all_pass());
  }
}

TEST_CASE("random invariance across dimensions") {
  for (int n = 2; n <= 6; ++n) {
    const Signature sig{1, n, 0};
    const Algebra alg = make_algebra(sig);
    Sampler sampler(100 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 20; ++t) {
      const LittleAlgebra la = construct_little_algebra(alg, sampler.lightlike(alg));
      const Multivector s = sampler.spatial_in_frame(la);
      const Multivector th = sampler.theta(sig, 2.0, supports_pseudoscalar_angle(sig));
      CAPTURE(n);
      CHECK(check_invariance(la, s, th, 1 + t % (n - 1)).all_pass());
    }
  }
}

TEST_CASE("rotations change s^k") {
  const LittleAlgebra la = sta_little();
  const Multivector s = g(1) + 0.5 * g(2);
  const RotationEffect e = rotation_effect(la, s, 1.0);
  CHECK(e.k_residual == 0.0);
  CHECK(e.orthogonality <= 1e-12);
  CHECK(e.bivector_change > 1e-3);
  CHECK(rotation_effect(la, s, 2 * std::numbers::pi).bivector_change <= 1e-12);
}

TEST_CASE("Cayley tables and the isomorphism") {
  const LittleAlgebra la = sta_little();
  const CayleyTable table = cayley_table(la);
  CHECK(table.n() == 3);
  CHECK(table.closure_residual() == 0.0);
  // E_{e1} E_{e2} = E_{e12}; e0 (reference index 2) squares to 0.
  CHECK(table.coefficient(Blade{1}, Blade{2}, Blade{3}) == 1.0);
  CHECK(table.coefficient(Blade{4}, Blade{4}, Blade{0}) == 0.0);
  CHECK(table.coefficient(Blade{1}, Blade{1}, Blade{0}) == -1.0);
  const CheckReport iso = isomorphism_check(la, table, 0.0);
  CHECK(iso.all_pass());
  CHECK(iso.entries().back().identity == "W(k) table = G(0,2,1) table");

  CHECK(isomorphism_check(lightcone_little(), 0.0).all_pass());
  CHECK(lightcone_little().reference_signature() == Signature{0, 1, 1});

  const Signature s15{1, 5, 0};
  const Algebra a15 = make_algebra(s15);
  Sampler sampler(9);
  const LittleAlgebra l5 = construct_little_algebra(a15, sampler.lightlike(a15));
  CHECK(l5.reference_signature() == Signature{0, 4, 1});
  CHECK(isomorphism_check(l5).all_pass());

  // Reference table entries match the permutation oracle.
  const auto sq = oracle::squares(0, 4, 1);
  const CayleyTable t5 = cayley_table(l5);
  for (std::uint32_t a = 0; a < 32; ++a) {
    for (std::uint32_t b = 0; b < 32; ++b) {
      const auto bp = oracle::blade_product(sq, a, b);
      if (bp.sign == 0) continue;
      CHECK(std::fabs(t5.coefficient(Blade{a}, Blade{b}, Blade{bp.mask}) - bp.sign) <= 1e-12);
    }
  }
}

TEST_CASE("mostly-plus parents") {
  const Signature sig{3, 1, 0};
  const Algebra alg = make_algebra(sig);
  const MinkowskiLayout layout = minkowski_layout(sig);
  CHECK(layout.time_index == 3);
  CHECK_FALSE(layout.mostly_minus());
  const LittleAlgebra la = construct_little_algebra(alg, gen(sig, 3) + gen(sig, 0));
  CHECK(la.reference_signature() == Signature{2, 0, 1});
  CHECK(isomorphism_check(la, 0.0).all_pass());
  Sampler sampler(4);
  for (int n = 2; n <= 6; ++n) {
    const Signature s{n, 1, 0};
    const Algebra a = make_algebra(s);
    const LittleAlgebra l = construct_little_algebra(a, sampler.lightlike(a));
    CAPTURE(n);
    CHECK(isomorphism_check(l).all_pass());
  }
  CHECK_THROWS_AS(minkowski_layout({2, 2, 0}), PreconditionError);
  CHECK_THROWS_AS(minkowski_layout({1, 3, 1}), PreconditionError);
}
