#pragma once

// Periods of the Weierstrass family E(t2, t3): y² = 4x³ - t2·x + t3.
//
// Sign convention: the family is kept as written, so the classical invariants
// are g2 = t2 and g3 = -t3. Then Δ = t2³ - 27·t3² and j = 1728·t2³/Δ.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "hodgekit/exact_linalg.hpp"

namespace hodgekit {

using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kDefaultPrecision = 1e-12L;
inline constexpr int kDefaultSeriesTerms = 20;
inline constexpr int kAgmIterationCap = 64;
inline constexpr const char* kSignConvention = "y^2 = 4x^3 - t2*x + t3; g2 = t2, g3 = -t3";

struct WeierstrassCurve {
  Real t2 = 0;
  Real t3 = 0;
};

Real discriminant(const WeierstrassCurve& c);
/// Exact Δ for rational parameters.
Rational discriminant(const Rational& t2, const Rational& t3);
bool is_singular(const WeierstrassCurve& c);
/// Throws SingularCurve when Δ = 0.
Real j_algebraic(const WeierstrassCurve& c);

/// Roots of 4x³ - t2·x + t3. Three real roots come back as e1 > e2 > e3;
/// otherwise e1 is the real root and Im e2 > 0, e3 = conj(e2).
std::array<Complex, 3> cubic_roots(const WeierstrassCurve& c);

/// 2×2 integer matrix acting on the upper half plane by Möbius transformations.
struct SL2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static SL2Z identity() { return {}; }
  static SL2Z translation(std::int64_t n) { return {1, n, 0, 1}; }
  static SL2Z inversion() { return {0, -1, 1, 0}; }

  std::int64_t determinant() const noexcept { return a * d - b * c; }
  Complex apply(Complex tau) const;
  friend SL2Z operator*(const SL2Z& x, const SL2Z& y);
  friend bool operator==(const SL2Z&, const SL2Z&) = default;
};

struct PeriodLattice {
  Complex omega1;
  Complex omega2;
  std::array<std::string, 2> cycle_labels;
};

struct TauPoint {
  Complex tau;
  /// Accumulated transformation: tau = word · (original tau).
  SL2Z word;
};

/// Arithmetic-geometric mean with the optimal branch rule
/// |a' - b'| ≤ |a' + b'|. Throws NumericalFailure after kAgmIterationCap steps.
Complex agm(Complex a, Complex b);

/// Period lattice of dx/y, oriented so Im(omega2/omega1) > 0. Δ > 0 uses the
/// real AGM; Δ < 0 uses the complex AGM, cross-checked against quadrature
/// (NumericalFailure if the two lattices differ). Throws SingularCurve.
PeriodLattice periods(const WeierstrassCurve& c, Real precision = kDefaultPrecision);

/// The same lattice by adaptive Gauss-Legendre quadrature of dx/y along
/// root-to-root segments. Periods are determined up to sign.
PeriodLattice integrate_periods(const WeierstrassCurve& c, Real precision = kDefaultPrecision);

/// True when the two bases span the same lattice, up to `tolerance` on the
/// integer change-of-basis coefficients.
bool same_lattice(const PeriodLattice& x, const PeriodLattice& y, Real tolerance = 1e-6L);

/// omega2/omega1 with the identity word. Throws std::domain_error if Im ≤ 0.
TauPoint tau_of(const PeriodLattice& l);

/// Moves tau into {-1/2 < Re τ ≤ 1/2, |τ| ≥ 1, Re τ ≥ 0 when |τ| = 1}
/// (boundary tolerance 1e-11), accumulating the SL(2,Z) word.
/// Throws std::domain_error if Im ≤ 0.
TauPoint reduce_to_fundamental_domain(const TauPoint& t);

/// Eisenstein series E4, E6 truncated after `terms` q-powers.
Complex eisenstein_e4(Complex tau, int terms = kDefaultSeriesTerms);
Complex eisenstein_e6(Complex tau, int terms = kDefaultSeriesTerms);

/// 1728·E4³/(E4³ - E6²). The truncation error is O(|q|^{terms+1}); reduce first.
Complex j_of_tau(Complex tau, int terms = kDefaultSeriesTerms);

/// (g2, g3) = (60·G4(L), 140·G6(L)) from q-series in the reduced basis.
std::pair<Complex, Complex> lattice_invariants(const PeriodLattice& l, int terms = kDefaultSeriesTerms);

/// Scales both periods by `factor`.
PeriodLattice scale(const PeriodLattice& l, Complex factor);

/// The integration pairing of dx/y against the cycle basis (δ1, δ2).
struct BettiDeRhamRow {
  Complex delta1;
  Complex delta2;
};

BettiDeRhamRow betti_de_rham_row(const WeierstrassCurve& c, Real precision = kDefaultPrecision);

/// Periods against δ'_i = Σ_j m_ij δ_j.
BettiDeRhamRow change_cycle_basis(const BettiDeRhamRow& row, const SL2Z& m);

/// Full elliptic summary the CLI prints.
struct EllipticRecord {
  WeierstrassCurve curve;
  Real discriminant = 0;
  Real j_algebraic = 0;
  PeriodLattice lattice;
  TauPoint tau_reduced;
  Complex j_of_tau;
  Complex roundtrip_g2;
  Complex roundtrip_g3;
};

EllipticRecord analyze(const WeierstrassCurve& c, Real precision = kDefaultPrecision,
                       int terms = kDefaultSeriesTerms);

/// Decimal string with enough digits to round-trip a long double.
std::string format_real(Real x);

}  // namespace hodgekit
