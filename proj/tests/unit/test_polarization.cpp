#include <doctest.h>

#include "generators.hpp"
#include "hodgekit/errors.hpp"
#include "hodgekit/polarization.hpp"

using namespace hodgekit;
using namespace hodgekit::testing;

namespace {

const GaussianRational I = GaussianRational::i();

PolarizationForm symplectic() { return {Parity::Antisymmetric, QiMatrix::from_rows({{0, 1}, {-1, 0}})}; }

Subspace line(std::initializer_list<GaussianRational> v) {
  return Subspace::span(QiMatrix::from_columns({QiVector(v)}, v.size()));
}

/// H^{1,0} = span{(1, τ)}, H^{0,1} its conjugate.
HodgeDecomposition tau_model(const GaussianRational& tau) {
  return {1, 2, {{{1, 0}, line({1, tau})}, {{0, 1}, line({1, tau.conj()})}}};
}

/// Unimodular integer matrix as a product of elementary moves.
QiMatrix random_unimodular(Rng& rng, std::size_t n) {
  QiMatrix g = QiMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    if (r == c) continue;
    QiMatrix e = QiMatrix::identity(n);
    e(r, c) = uniform_int(rng, -2, 2);
    g = g * e;
  }
  return g;
}

HodgeDecomposition transform(const HodgeDecomposition& d, const QiMatrix& m) {
  HodgeDecomposition out{d.weight, d.rank, {}};
  for (const auto& [key, block] : d.blocks) out.blocks.emplace(key, Subspace::span(m * block.basis()));
  return out;
}

}  // namespace

TEST_SUITE("polarization") {
  TEST_CASE("form construction enforces integrality, parity and nondegeneracy") {
    CHECK_NOTHROW(symplectic());
    CHECK_THROWS_AS(PolarizationForm(Parity::Symmetric, QiMatrix::from_rows({{0, 1}, {-1, 0}})), InvalidStructure);
    CHECK_THROWS_AS(PolarizationForm(Parity::Symmetric, QiMatrix::from_rows({{1, 1}, {1, 1}})), InvalidStructure);
    CHECK_THROWS_AS(PolarizationForm(Parity::Symmetric, QiMatrix::from_rows({{frac(1, 2)}})), InvalidStructure);
    CHECK_THROWS_AS(PolarizationForm(Parity::Symmetric, QiMatrix::from_rows({{I}})), InvalidStructure);
  }

  TEST_CASE("orthogonality examples") {
    const PolarizationForm q = symplectic();
    CHECK(q({1, I}, {1, -I}) == -2 * I);
    CHECK(q({1, I}, {1, I}) == 0);
    CHECK(check_orthogonality(elliptic_model(), q).ok);

    PolarizationForm unit(Parity::Symmetric, QiMatrix::from_rows({{1}}));
    CHECK(check_orthogonality(trivial_structure(), unit).ok);

    PolarizationForm id(Parity::Symmetric, QiMatrix::identity(2));
    HodgeDecomposition w2{2, 2, {{{2, 0}, line({1, I})}, {{0, 2}, line({1, -I})}}};
    CHECK(id({1, I}, {1, -I}) == 2);
    CHECK(id({1, I}, {1, I}) == 0);
    CHECK(check_orthogonality(w2, id).ok);
  }

  TEST_CASE("orthogonality failure names the offending pair") {
    PolarizationForm id(Parity::Symmetric, QiMatrix::identity(3));
    Subspace a = line({1, I, 0});
    HodgeDecomposition d{2, 3, {{{2, 0}, a}, {{1, 1}, line({1, 0, 1})}, {{0, 2}, conjugate(a)}}};
    REQUIRE(validate_decomposition(d).valid());
    OrthogonalityCheck check = check_orthogonality(d, id);
    CHECK_FALSE(check.ok);
    REQUIRE_FALSE(check.failures.empty());
  }

  TEST_CASE("positivity examples") {
    PositivityCheck good = check_positivity(elliptic_model(), symplectic());
    CHECK(good.ok);
    PositivityCheck bad = check_positivity(elliptic_model(), symplectic().negated());
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].block == Bidegree{1, 0});
    CHECK(Subspace::span(std::vector<QiVector>{bad.failures[0].witness}, 2) == line({1, I}));
    CHECK(bad.failures[0].value < 0);
    PolarizationForm unit(Parity::Symmetric, QiMatrix::from_rows({{1}}));
    CHECK(check_positivity(trivial_structure(), unit).ok);
  }

  TEST_CASE("check_polarization composes the two relations") {
    PolarizationForm unit(Parity::Symmetric, QiMatrix::from_rows({{1}}));
    CHECK(check_polarization(elliptic_model(), symplectic()).overall());
    HodgeRiemannReport bad = check_polarization(elliptic_model(), symplectic().negated());
    CHECK(bad.orthogonality_ok());
    CHECK_FALSE(bad.positivity_ok());
    CHECK_FALSE(bad.overall());
    CHECK(check_polarization(trivial_structure(), unit).overall());
    CHECK_THROWS_AS(check_polarization(trivial_structure(), symplectic()), DimensionMismatch);
  }

  TEST_CASE("weight-2 pair block under the identity form is orthogonal but negative") {
    // i^{2-0} Q(v, v̄) = -|v|² for v = (1, i).
    PolarizationForm id(Parity::Symmetric, QiMatrix::identity(2));
    HodgeDecomposition w2{2, 2, {{{2, 0}, line({1, I})}, {{0, 2}, line({1, -I})}}};
    HodgeRiemannReport report = check_polarization(w2, id);
    CHECK(report.orthogonality_ok());
    CHECK_FALSE(report.positivity_ok());
    CHECK(report.positivity.failures.at(0).value == -2);
  }

  TEST_CASE("parity and weight mismatch is a warning only") {
    PolarizationForm id(Parity::Symmetric, QiMatrix::identity(2));
    HodgeRiemannReport report = check_polarization(elliptic_model(), id);
    CHECK_FALSE(report.warnings.empty());
    CHECK(check_polarization(elliptic_model(), symplectic()).warnings.empty());
  }

  TEST_CASE("elliptic model is polarized iff Im tau > 0") {
    Rng rng(30);
    for (int trial = 0; trial < 60; ++trial) {
      Rational im = random_rational(rng, 5);
      if (im == 0) continue;
      GaussianRational tau{random_rational(rng, 5), im};
      HodgeRiemannReport report = check_polarization(tau_model(tau), symplectic());
      CHECK(report.orthogonality_ok());
      CHECK(report.overall() == (im > 0));
      // i·Q(v, v̄) = 2·Im τ for v = (1, τ).
      CHECK(I * symplectic()({1, tau}, {1, tau.conj()}) == GaussianRational(2 * im));
    }
  }

  TEST_CASE("negating the form flips positivity but not orthogonality") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      Rational im = random_rational(rng, 4);
      if (im == 0) continue;
      HodgeDecomposition d = tau_model({random_rational(rng, 4), im});
      HodgeRiemannReport a = check_polarization(d, symplectic());
      HodgeRiemannReport b = check_polarization(d, symplectic().negated());
      CHECK(a.orthogonality_ok() == b.orthogonality_ok());
      CHECK(a.positivity_ok() != b.positivity_ok());
    }
  }

  TEST_CASE("verdicts are invariant under integral changes of basis") {
    Rng rng(32);
    const PolarizationForm q4(Parity::Antisymmetric,
                              QiMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
    for (int trial = 0; trial < 30; ++trial) {
      // Two elliptic models with random τ, one possibly in the lower half plane.
      Rational im1 = random_rational(rng, 3), im2 = random_rational(rng, 3);
      if (im1 == 0 || im2 == 0) continue;
      GaussianRational t1{random_rational(rng, 3), im1}, t2{random_rational(rng, 3), im2};
      HodgeDecomposition d{1, 4, {{{1, 0}, Subspace::span(QiMatrix::from_columns({{1, 0, t1, 0}, {0, 1, 0, t2}}, 4))},
                                  {{0, 1}, Subspace::span(QiMatrix::from_columns({{1, 0, t1.conj(), 0}, {0, 1, 0, t2.conj()}}, 4))}}};
      REQUIRE(validate_decomposition(d).valid());
      HodgeRiemannReport before = check_polarization(d, q4);
      CHECK(before.overall() == (im1 > 0 && im2 > 0));
      QiMatrix g = random_unimodular(rng, 4);
      // Q'(u, v) = Q(g u, g v) polarizes g⁻¹·d exactly when Q polarizes d.
      PolarizationForm moved(Parity::Antisymmetric, g.transpose() * q4.gram() * g);
      HodgeRiemannReport after = check_polarization(transform(d, inverse(g)), moved);
      CHECK(after.orthogonality_ok() == before.orthogonality_ok());
      CHECK(after.positivity_ok() == before.positivity_ok());
    }
  }

  TEST_CASE("z2 grading examples") {
    auto [even1, odd1] = z2_grading(as_general(elliptic_model()));
    CHECK(even1.components.empty());
    CHECK(odd1 == as_general(elliptic_model()));

    HodgeDecomposition h11{2, 1, {{{1, 1}, Subspace::full(1)}}};
    GeneralHodgeStructure g = direct_sum(as_general(elliptic_model()), as_general(h11));
    auto [even, odd] = z2_grading(g);
    CHECK(even == as_general(h11));
    CHECK(odd == as_general(elliptic_model()));
    CHECK(direct_sum(even, odd) == g);

    auto [e0, o0] = z2_grading(GeneralHodgeStructure{});
    CHECK(e0.components.empty());
    CHECK(o0.components.empty());
  }
}
