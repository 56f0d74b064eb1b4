#include "hodgekit/elliptic_periods.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hodgekit/errors.hpp"

namespace hodgekit {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kBoundaryTolerance = 1e-11L;
constexpr int kReductionCap = 10000;

Complex polish(const WeierstrassCurve& c, Complex x) {
  for (int k = 0; k < 8; ++k) {
    Complex f = Real(4) * x * x * x - c.t2 * x + c.t3;
    Complex df = Real(12) * x * x - c.t2;
    if (std::abs(df) == 0) break;
    Complex next = x - f / df;
    if (next == x) break;
    x = next;
  }
  return x;
}

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    constexpr int n = 12;
    GaussRule r;
    for (int i = 1; i <= n; ++i) {
      Real x = std::cos(kPi * (i - 0.25L) / (n + 0.5L));
      Real dp = 0;
      for (int it = 0; it < 100; ++it) {
        Real p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          Real pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        Real dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-30L) break;
      }
      r.nodes.push_back(x);
      r.weights.push_back(2 / ((1 - x * x) * dp * dp));
    }
    return r;
  }();
  return rule;
}

Complex gauss(const std::function<Complex(Real)>& f, Real lo, Real hi) {
  const auto& rule = gauss_rule();
  Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
  Complex total = 0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) total += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return total * half;
}

Complex adaptive(const std::function<Complex(Real)>& f, Real lo, Real hi, Complex whole, Real tol, int depth) {
  Real mid = (lo + hi) / 2;
  Complex left = gauss(f, lo, mid);
  Complex right = gauss(f, mid, hi);
  if (std::abs(left + right - whole) <= tol || depth <= 0) return left + right;
  return adaptive(f, lo, mid, left, tol / 2, depth - 1) + adaptive(f, mid, hi, right, tol / 2, depth - 1);
}

// ∮ dx/y around the segment [ei, ej], up to sign. With
// x = ei + (ej - ei)(1 - cos φ)/2 the endpoint singularities cancel and the
// integral becomes i ∫_0^π dφ / sqrt(x(φ) - ek), the square root taken as
// sqrt(ei - ek)·sqrt(1 + s·r), which stays on the principal branch whenever
// ek does not lie between ei and ej.
Complex segment_period(Complex ei, Complex ej, Complex ek, Real precision) {
  const Complex base = std::sqrt(ei - ek);
  const Complex ratio = (ej - ei) / (ei - ek);
  auto integrand = [&](Real phi) -> Complex {
    Real s = (1 - std::cos(phi)) / 2;
    return Real(1) / (base * std::sqrt(Real(1) + s * ratio));
  };
  Complex whole = gauss(integrand, 0, kPi);
  Complex value = adaptive(integrand, 0, kPi, whole, precision * std::max(std::abs(whole), Real(1e-300L)), 40);
  return Complex(0, 1) * value;
}

// ek lies on the closed segment [ei, ej].
bool between(Complex ei, Complex ej, Complex ek) {
  Complex w = (ej - ek) / (ei - ek);
  return std::fabs(w.imag()) <= 1e-14L * std::abs(w) && w.real() <= 0;
}

PeriodLattice oriented(Complex w1, Complex w2, std::array<std::string, 2> labels) {
  if ((w2 / w1).imag() < 0) w2 = -w2;
  return {w1, w2, std::move(labels)};
}

}  // namespace

Real discriminant(const WeierstrassCurve& c) { return c.t2 * c.t2 * c.t2 - 27 * c.t3 * c.t3; }

Rational discriminant(const Rational& t2, const Rational& t3) { return t2 * t2 * t2 - 27 * t3 * t3; }

bool is_singular(const WeierstrassCurve& c) {
  Real scale = std::fabs(c.t2 * c.t2 * c.t2) + 27 * c.t3 * c.t3;
  return std::fabs(discriminant(c)) <= 64 * LDBL_EPSILON * scale;
}

Real j_algebraic(const WeierstrassCurve& c) {
  if (is_singular(c)) throw SingularCurve("singular curve: discriminant vanishes");
  return 1728 * c.t2 * c.t2 * c.t2 / discriminant(c);
}

std::array<Complex, 3> cubic_roots(const WeierstrassCurve& c) {
  if (is_singular(c)) throw SingularCurve("singular curve: repeated roots");
  // x³ + P x + Q = 0
  const Real P = -c.t2 / 4;
  const Real Q = c.t3 / 4;
  if (discriminant(c) > 0) {
    const Real m = 2 * std::sqrt(-P / 3);
    Real arg = 3 * Q / (P * m);  // = (3Q / 2P)·sqrt(-3/P)
    arg = std::clamp(arg, Real(-1), Real(1));
    const Real theta = std::acos(arg) / 3;
    std::array<Real, 3> r{};
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(k)] = polish(c, m * std::cos(theta - 2 * kPi * k / 3)).real();
    std::sort(r.begin(), r.end(), std::greater<>());
    return {Complex(r[0]), Complex(r[1]), Complex(r[2])};
  }
  const Real D = Q * Q / 4 + P * P * P / 27;
  const Real sd = std::sqrt(D);
  Real root = std::cbrt(-Q / 2 + sd) + std::cbrt(-Q / 2 - sd);
  root = polish(c, root).real();
  Real im = std::sqrt(std::max(Real(0), 3 * root * root + 4 * P)) / 2;
  Complex e2 = polish(c, Complex(-root / 2, im));
  if (e2.imag() < 0) e2 = std::conj(e2);
  return {Complex(root), e2, std::conj(e2)};
}

Complex SL2Z::apply(Complex tau) const {
  return (Real(a) * tau + Real(b)) / (Real(c) * tau + Real(d));
}

SL2Z operator*(const SL2Z& x, const SL2Z& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Complex agm(Complex a, Complex b) {
  const Real eps = 4 * LDBL_EPSILON;
  for (int k = 0; k < kAgmIterationCap; ++k) {
    if (std::abs(a - b) <= eps * std::abs(a)) return a;
    Complex next_a = (a + b) / Real(2);
    Complex next_b = std::sqrt(a * b);
    if (std::abs(next_a - next_b) > std::abs(next_a + next_b)) next_b = -next_b;
    if (next_a == a && next_b == b) return a;
    a = next_a;
    b = next_b;
  }
  throw NumericalFailure("AGM did not converge within " + std::to_string(kAgmIterationCap) + " iterations");
}

PeriodLattice periods(const WeierstrassCurve& c, Real precision) {
  const auto e = cubic_roots(c);
  if (discriminant(c) > 0) {
    const Real e1 = e[0].real(), e2 = e[1].real(), e3 = e[2].real();
    Complex w1 = kPi / agm(std::sqrt(e1 - e3), std::sqrt(e1 - e2));
    Complex w2 = Complex(0, 1) * kPi / agm(std::sqrt(e1 - e3), std::sqrt(e2 - e3));
    return oriented(w1, w2, {"cycle around [e3, e2] (real period)", "cycle around [e2, e1] (imaginary period)"});
  }
  const Complex a = std::sqrt(e[0] - e[2]);
  const Complex b = std::sqrt(e[0] - e[1]);
  const Complex cc = std::sqrt(e[1] - e[2]);
  Complex w1 = kPi / agm(a, b);
  Complex w2 = kPi / agm(cc, Complex(0, 1) * b);
  PeriodLattice lattice = oriented(w1, w2, {"cycle around [e1, e2]", "cycle around [e2, e3]"});
  if (!same_lattice(lattice, integrate_periods(c, precision)))
    throw NumericalFailure("complex AGM periods disagree with quadrature (branch selection)");
  return lattice;
}

PeriodLattice integrate_periods(const WeierstrassCurve& c, Real precision) {
  const auto e = cubic_roots(c);
  // Two root-to-root segments whose third root is not on them.
  std::vector<std::array<std::size_t, 3>> usable;
  for (auto [i, j, k] : {std::array<std::size_t, 3>{0, 1, 2}, {1, 2, 0}, {0, 2, 1}})
    if (!between(e[i], e[j], e[k])) usable.push_back({i, j, k});
  const auto& s = usable[0];
  const auto& t = usable[1];
  Complex p1 = segment_period(e[s[0]], e[s[1]], e[s[2]], precision);
  Complex p2 = segment_period(e[t[0]], e[t[1]], e[t[2]], precision);
  auto label = [](const std::array<std::size_t, 3>& u) {
    return "cycle around [e" + std::to_string(u[0] + 1) + ", e" + std::to_string(u[1] + 1) + "]";
  };
  return oriented(p1, p2, {label(s), label(t)});
}

bool same_lattice(const PeriodLattice& x, const PeriodLattice& y, Real tolerance) {
  // Express y's basis in x's basis over R and demand an integral, unimodular change.
  const Real m00 = x.omega1.real(), m01 = x.omega2.real(), m10 = x.omega1.imag(), m11 = x.omega2.imag();
  const Real det = m00 * m11 - m01 * m10;
  if (det == 0) return false;
  auto coords = [&](Complex v) {
    return std::array<Real, 2>{(m11 * v.real() - m01 * v.imag()) / det, (-m10 * v.real() + m00 * v.imag()) / det};
  };
  auto u = coords(y.omega1);
  auto v = coords(y.omega2);
  for (Real r : {u[0], u[1], v[0], v[1]})
    if (std::fabs(r - std::round(r)) > tolerance) return false;
  const Real change = std::round(u[0]) * std::round(v[1]) - std::round(u[1]) * std::round(v[0]);
  return std::fabs(change) == 1;
}

TauPoint tau_of(const PeriodLattice& l) {
  Complex tau = l.omega2 / l.omega1;
  if (!(tau.imag() > 0)) throw std::domain_error("omega2/omega1 must lie in the upper half plane");
  return {tau, SL2Z::identity()};
}

TauPoint reduce_to_fundamental_domain(const TauPoint& t) {
  if (!(t.tau.imag() > 0) || !std::isfinite(t.tau.real()) || !std::isfinite(t.tau.imag()))
    throw std::domain_error("tau must lie in the upper half plane");
  Complex tau = t.tau;
  SL2Z word = t.word;
  auto translate = [&](std::int64_t n) {
    tau -= Real(n);
    word = SL2Z::translation(-n) * word;
  };
  auto invert = [&] {
    tau = Real(-1) / tau;
    word = SL2Z::inversion() * word;
  };
  for (int k = 0; k < kReductionCap; ++k) {
    auto n = static_cast<std::int64_t>(std::llround(tau.real()));
    if (n != 0) translate(n);
    if (std::norm(tau) < 1 - kBoundaryTolerance) {
      invert();
      continue;
    }
    break;
  }
  if (tau.real() < -0.5L + kBoundaryTolerance) translate(-1);
  if (std::norm(tau) < 1 + kBoundaryTolerance && tau.real() < -kBoundaryTolerance) invert();
  return {tau, word};
}

namespace {

Real divisor_power_sum(int n, int power) {
  Real total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += std::pow(Real(d), power);
  return total;
}

Complex q_series(Complex tau, int terms, int power) {
  const Complex q = std::exp(Complex(0, 2 * kPi) * tau);
  Complex total = 0;
  Complex qn = 1;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    total += divisor_power_sum(n, power) * qn;
  }
  return total;
}

}  // namespace

Complex eisenstein_e4(Complex tau, int terms) { return Real(1) + Real(240) * q_series(tau, terms, 3); }

Complex eisenstein_e6(Complex tau, int terms) { return Real(1) - Real(504) * q_series(tau, terms, 5); }

Complex j_of_tau(Complex tau, int terms) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  Complex e4 = eisenstein_e4(tau, terms);
  Complex e6 = eisenstein_e6(tau, terms);
  Complex e4_cubed = e4 * e4 * e4;
  return Real(1728) * e4_cubed / (e4_cubed - e6 * e6);
}

std::pair<Complex, Complex> lattice_invariants(const PeriodLattice& l, int terms) {
  TauPoint reduced = reduce_to_fundamental_domain(tau_of(l));
  const SL2Z& w = reduced.word;
  // The same lattice in the reduced basis: omega1' = c·omega2 + d·omega1.
  const Complex omega1 = Real(w.c) * l.omega2 + Real(w.d) * l.omega1;
  const Complex omega1_sq = omega1 * omega1;
  const Real pi4 = kPi * kPi * kPi * kPi;
  const Real pi6 = pi4 * kPi * kPi;
  Complex g2 = (4 * pi4 / 3) * eisenstein_e4(reduced.tau, terms) / (omega1_sq * omega1_sq);
  Complex g3 = (8 * pi6 / 27) * eisenstein_e6(reduced.tau, terms) / (omega1_sq * omega1_sq * omega1_sq);
  return {g2, g3};
}

PeriodLattice scale(const PeriodLattice& l, Complex factor) {
  return {l.omega1 * factor, l.omega2 * factor, l.cycle_labels};
}

BettiDeRhamRow betti_de_rham_row(const WeierstrassCurve& c, Real precision) {
  PeriodLattice l = periods(c, precision);
  return {l.omega1, l.omega2};
}

BettiDeRhamRow change_cycle_basis(const BettiDeRhamRow& row, const SL2Z& m) {
  return {Real(m.a) * row.delta1 + Real(m.b) * row.delta2, Real(m.c) * row.delta1 + Real(m.d) * row.delta2};
}

EllipticRecord analyze(const WeierstrassCurve& c, Real precision, int terms) {
  EllipticRecord r;
  r.curve = c;
  r.discriminant = discriminant(c);
  r.j_algebraic = j_algebraic(c);
  r.lattice = periods(c, precision);
  r.tau_reduced = reduce_to_fundamental_domain(tau_of(r.lattice));
  r.j_of_tau = j_of_tau(r.tau_reduced.tau, terms);
  std::tie(r.roundtrip_g2, r.roundtrip_g3) = lattice_invariants(r.lattice, terms);
  return r;
}

std::string format_real(Real x) {
  char buf[64];
  if (x == 0) x = 0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.*Lg", LDBL_DECIMAL_DIG, x);
  return buf;
}

}  // namespace hodgekit
