// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "generators.hpp"
#include "hodgekit/elliptic_periods.hpp"
#include "hodgekit/errors.hpp"
#include "hodgekit/hodge_structure.hpp"
#include "hodgekit/nc_hodge.hpp"
#include "hodgekit/polarization.hpp"
#include "oracles.hpp"

using namespace hodgekit;
using namespace hodgekit::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

Real seconds_since(Clock::time_point start) {
  return std::chrono::duration<Real>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

HodgeDecomposition as_pure(const std::variant<HodgeDecomposition, GeneralHodgeStructure>& v) {
  if (!std::holds_alternative<HodgeDecomposition>(v)) throw InvalidStructure("expected a pure structure");
  return std::get<HodgeDecomposition>(v);
}

bool projector_algebra_holds(const HodgeRepresentation& r) {
  QiMatrix total(r.rank, r.rank);
  for (const auto& [key, c] : r.coefficients) {
    if (!(c * c == c)) return false;
    for (const auto& [other, d] : r.coefficients)
      if (!(other == key) && !(c * d).is_zero()) return false;
    auto partner = r.coefficients.find(key.conjugate());
    if (partner == r.coefficients.end() || !(c.conj() == partner->second)) return false;
    total += c;
  }
  return total == QiMatrix::identity(r.rank);
}

// 1. Six round trips on ≥ 500 random pure structures, exact, < 60 s.
Verdict round_trips() {
  Verdict v;
  Rng rng(1001);
  const auto start = Clock::now();
  const int count = 500;
  std::size_t max_rank = 0;
  for (int trial = 0; trial < count && v.pass; ++trial) {
    const int weight = uniform_int(rng, -3, 5);
    HodgeDecomposition d = random_decomposition(rng, weight, 8);
    max_rank = std::max(max_rank, d.rank);
    HodgeFiltration f = decomposition_to_filtration(d);
    HodgeRepresentation r = decomposition_to_representation(d);
    auto f_to_r = [](const HodgeFiltration& x) { return decomposition_to_representation(filtration_to_decomposition(x)); };
    auto r_to_f = [](const HodgeRepresentation& x) { return decomposition_to_filtration(as_pure(representation_to_decomposition(x))); };
    if (!(filtration_to_decomposition(f) == d)) v.fail(fmt("D->F->D differs at trial %d", trial));
    if (!(as_pure(representation_to_decomposition(r)) == d)) v.fail(fmt("D->R->D differs at trial %d", trial));
    if (!(decomposition_to_filtration(filtration_to_decomposition(f)) == f)) v.fail(fmt("F->D->F differs at trial %d", trial));
    if (!(r_to_f(f_to_r(f)) == f)) v.fail(fmt("F->R->F differs at trial %d", trial));
    if (!(decomposition_to_representation(as_pure(representation_to_decomposition(r))) == r))
      v.fail(fmt("R->D->R differs at trial %d", trial));
    if (!(f_to_r(r_to_f(r)) == r)) v.fail(fmt("R->F->R differs at trial %d", trial));
  }
  const Real elapsed = seconds_since(start);
  if (elapsed >= 60) v.fail(fmt("took %.1Lf s", elapsed));
  if (v.pass) v.detail = fmt("%d structures, max rank %zu, 6 round trips each, %.2Lf s", count, max_rank, elapsed);
  return v;
}

// 2. Projector algebra on every generated representation, exact.
Verdict projector_algebra() {
  Verdict v;
  Rng rng(1002);
  int checked = 0;
  for (int trial = 0; trial < 500 && v.pass; ++trial) {
    HodgeDecomposition d = random_decomposition(rng, uniform_int(rng, -3, 5), 8);
    if (!projector_algebra_holds(decomposition_to_representation(d))) v.fail(fmt("pure trial %d", trial));
    ++checked;
  }
  // Representations produced by the operations, including mixed sums.
  for (int trial = 0; trial < 100 && v.pass; ++trial) {
    HodgeRepresentation a = decomposition_to_representation(random_decomposition(rng, uniform_int(rng, -2, 3), 3));
    HodgeRepresentation b = decomposition_to_representation(random_decomposition(rng, uniform_int(rng, -2, 3), 3));
    for (const HodgeRepresentation& r : {direct_sum(a, b), tensor(a, b), dual(a), exterior_power(a, 2)}) {
      if (!projector_algebra_holds(r)) v.fail(fmt("operation trial %d", trial));
      ++checked;
    }
  }
  if (v.pass) v.detail = fmt("%d representations: C^2 = C, C_a C_b = 0, sum = I, conj(C_pq) = C_qp", checked);
  return v;
}

// 3. Elliptic model with H^{1,0} = span{(1, τ)} and Q = [[0,1],[-1,0]].
Verdict elliptic_polarization() {
  Verdict v;
  Rng rng(1003);
  const PolarizationForm q(Parity::Antisymmetric, QiMatrix::from_rows({{0, 1}, {-1, 0}}));
  const GaussianRational one = 1;
  int upper = 0, lower = 0;
  while ((upper < 100 || lower < 100) && v.pass) {
    Rational im(uniform_int(rng, -40, 40), uniform_int(rng, 1, 9));
    im.canonicalize();
    if (im == 0) continue;
    if ((im > 0 && upper == 100) || (im < 0 && lower == 100)) continue;
    Rational re(uniform_int(rng, -40, 40), uniform_int(rng, 1, 9));
    re.canonicalize();
    const GaussianRational tau{re, im};
    HodgeDecomposition d{1, 2, {{{1, 0}, Subspace::span(QiMatrix::from_columns({{one, tau}}, 2))},
                                {{0, 1}, Subspace::span(QiMatrix::from_columns({{one, tau.conj()}}, 2))}}};
    HodgeRiemannReport report = check_polarization(d, q);
    if (im > 0) {
      ++upper;
      if (!report.overall()) v.fail("fails for tau = " + to_string(re) + " + " + to_string(im) + "i");
    } else {
      ++lower;
      const bool witnessed = !report.positivity.failures.empty() && !report.positivity.failures[0].witness.empty() &&
                             report.positivity.failures[0].value <= 0;
      if (report.overall() || !witnessed) v.fail("no positivity witness for tau = " + to_string(re) + " + " + to_string(im) + "i");
    }
  }
  if (v.pass) v.detail = fmt("%d taus with Im > 0 pass, %d with Im < 0 fail with a witness", upper, lower);
  return v;
}

// 4. lattice_invariants(periods(c)) = (t2, -t3) and j(τ) = j_algebraic on a 10×10 grid.
Verdict period_round_trip() {
  Verdict v;
  const auto start = Clock::now();
  Real worst_g = 0, worst_j = 0;
  int curves = 0;
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      const Rational t2q = Rational(-5) + frac(10 * a, 9), t3q = Rational(-5) + frac(10 * b, 9);
      if (discriminant(t2q, t3q) == 0) continue;
      const WeierstrassCurve c{static_cast<Real>(-5) + static_cast<Real>(10 * a) / 9,
                               static_cast<Real>(-5) + static_cast<Real>(10 * b) / 9};
      try {
        EllipticRecord r = analyze(c);
        const Real g_err = std::hypot(std::abs(r.roundtrip_g2 - Complex(c.t2)), std::abs(r.roundtrip_g3 - Complex(-c.t3))) /
                           std::hypot(c.t2, c.t3);
        const Real j_err = std::abs(r.j_of_tau - Complex(r.j_algebraic)) / std::abs(r.j_algebraic);
        worst_g = std::max(worst_g, g_err);
        worst_j = std::max(worst_j, j_err);
        if (!(g_err < 1e-8L)) v.fail(fmt("(g2, g3) error %.3Le at (%.4Lf, %.4Lf)", g_err, c.t2, c.t3));
        if (!(j_err < 1e-9L)) v.fail(fmt("j error %.3Le at (%.4Lf, %.4Lf)", j_err, c.t2, c.t3));
      } catch (const Error& e) {
        v.fail(fmt("(%.4Lf, %.4Lf): %s", c.t2, c.t3, e.what()));
      }
      ++curves;
    }
  const Real elapsed = seconds_since(start);
  if (elapsed >= 30) v.fail(fmt("took %.1Lf s", elapsed));
  if (v.pass)
    v.detail = fmt("%d curves, max rel err (g2,g3) %.2Le, j %.2Le, %.2Lf s", curves, worst_g, worst_j, elapsed);
  return v;
}

// 5. CM points, cross-validated against the tanh-sinh oracle first.
Verdict cm_anchors() {
  Verdict v;
  const Real pi = std::acos(Real(-1));
  struct Anchor {
    WeierstrassCurve curve;
    Complex tau;
    Real j;
  };
  const Anchor anchors[] = {{{4, 0}, {0, 1}, 1728}, {{0, 1}, std::polar(Real(1), pi / 3), 0}};
  for (const auto& a : anchors) {
    auto [w1, w2] = oracle_periods(a.curve.t2, a.curve.t3);
    PeriodLattice oracle{w1, w2, {}};
    if ((std::conj(w1) * w2).imag() < 0) oracle = {w2, w1, {}};
    TauPoint oracle_tau = reduce_to_fundamental_domain(tau_of(oracle));
    if (std::abs(oracle_tau.tau - a.tau) >= 1e-10L) v.fail(fmt("oracle disagrees with the frozen tau at t2 = %.0Lf", a.curve.t2));

    EllipticRecord r = analyze(a.curve);
    if (!same_lattice(r.lattice, oracle, 1e-9L)) v.fail(fmt("lattice differs from the oracle at t2 = %.0Lf", a.curve.t2));
    const Real tau_err = std::abs(r.tau_reduced.tau - a.tau);
    if (tau_err >= 1e-10L) v.fail(fmt("tau error %.3Le at t2 = %.0Lf", tau_err, a.curve.t2));
    const Real j_err = a.j == 0 ? std::abs(r.j_of_tau) : std::abs(r.j_of_tau - a.j) / a.j;
    if (j_err >= 1e-9L) v.fail(fmt("j error %.3Le at t2 = %.0Lf", j_err, a.curve.t2));
  }
  if (v.pass) v.detail = "(4,0) -> tau = i, j = 1728; (0,1) -> tau = e^{i pi/3}, j = 0; oracle agrees";
  return v;
}

bool near_boundary_equivalent(Complex x, Complex y) {
  const Real tol = 1e-10L;
  if (std::abs(x - y) < tol) return true;
  // Vertical edges Re = ±1/2 and the unit arc are identified pairwise.
  if (std::abs(x - (y + Real(1))) < tol || std::abs(x - (y - Real(1))) < tol) return true;
  if (std::abs(std::abs(x) - 1) < tol && std::abs(x + std::conj(y)) < tol) return true;
  return false;
}

// 6. reduce(w·τ) = reduce(τ) and the word maps input to output.
Verdict sl2z_reduction() {
  Verdict v;
  std::vector<SL2Z> words;
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b)
      for (int c = -10; c <= 10; ++c)
        for (int d = -10; d <= 10; ++d)
          if (a * d - b * c == 1) words.push_back({a, b, c, d});
  Rng rng(1006);
  std::uniform_real_distribution<double> re(-3, 3), im(0.05, 3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  Real worst = 0;
  for (int trial = 0; trial < 1000 && v.pass; ++trial) {
    const Complex tau(re(rng), im(rng));
    const SL2Z& w = words[pick(rng)];
    const Complex moved = w.apply(tau);
    TauPoint a = reduce_to_fundamental_domain({tau, SL2Z::identity()});
    TauPoint b = reduce_to_fundamental_domain({moved, SL2Z::identity()});
    if (!near_boundary_equivalent(a.tau, b.tau)) v.fail(fmt("trial %d: reductions differ", trial));
    for (const auto& [input, out] : {std::pair{tau, a}, std::pair{moved, b}}) {
      if (out.word.determinant() != 1) v.fail(fmt("trial %d: word is not in SL(2,Z)", trial));
      const Real err = std::abs(out.word.apply(input) - out.tau) / std::max<Real>(1, std::abs(out.tau));
      worst = std::max(worst, err);
      if (err >= 1e-10L) v.fail(fmt("trial %d: word maps input off the output by %.3Le", trial, err));
    }
  }
  if (v.pass) v.detail = fmt("1000 trials over %zu words, max word residual %.2Le", words.size(), worst);
  return v;
}

// 7. nc-Hodge purity verdicts against brute-force torus weights, a, b ≤ 4.
Verdict nc_hodge_exhaustive() {
  Verdict v;
  int singles = 0, pairs = 0, pure_singletons = 0;
  std::vector<SL2Summand> all;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) all.push_back({a, b, 1});
  auto check = [&](const SL2Rep& rep) {
    std::map<Bidegree, std::size_t> brute;
    for (const auto& s : rep.summands)
      for (const auto& [key, m] : oracle_torus_weights(s.a, s.b, s.multiplicity)) brute[key] += m;
    CharacterMultiset chars = restrict_to_torus(rep);
    if (chars != brute) v.fail("character table differs for " + to_string(rep));
    if (total_multiplicity(chars) != rep.dimension()) v.fail("dimension not conserved for " + to_string(rep));
    NcHodgeReport report = nc_hodge_check(rep);
    if (report.is_nc_hodge != oracle_is_pure(brute)) v.fail("purity verdict differs for " + to_string(rep));
    return report.is_nc_hodge;
  };
  for (const auto& s : all) {
    ++singles;
    if (check(SL2Rep{{s}})) {
      ++pure_singletons;
      if (s.a != 0 || s.b != 0) v.fail("non-trivial pure singleton " + to_string(SL2Rep{{s}}));
    }
    for (unsigned m = 2; m <= 3; ++m) check(SL2Rep{{{s.a, s.b, m}}});
  }
  for (const auto& s : all)
    for (const auto& t : all) {
      check(SL2Rep{{s, t}});
      ++pairs;
    }
  if (pure_singletons != 1) v.fail(fmt("%d pure singletons", pure_singletons));
  if (v.pass)
    v.detail = fmt("%d singletons and %d pairs match brute force; only Sym(0)*conj(Sym(0)) is pure under the diagonal torus",
                   singles, pairs);
  return v;
}

// 8. Λ² of the elliptic model and Λ^k Hodge numbers on random instances.
Verdict exterior_powers() {
  Verdict v;
  HodgeDecomposition ext = exterior_power(elliptic_model(), 2);
  if (!(ext.rank == 1 && ext.weight == 2 && ext.blocks.size() == 1 && ext.blocks.contains({1, 1})))
    v.fail("Lambda^2 of the elliptic model is not pure (1,1) of rank 1");
  Rng rng(1008);
  int instances = 0;
  for (int trial = 0; trial < 200 && v.pass; ++trial) {
    HodgeDecomposition d = random_decomposition(rng, uniform_int(rng, -3, 5), 6);
    for (std::size_t k = 0; k <= 3; ++k) {
      HodgeDecomposition e = exterior_power(d, k);
      if (!validate_decomposition(e).valid()) v.fail(fmt("trial %d, k = %zu: invalid result", trial, k));
      if (hodge_numbers(e) != oracle_exterior_hodge_numbers(hodge_numbers(d), k))
        v.fail(fmt("trial %d, k = %zu: Hodge numbers differ", trial, k));
      ++instances;
    }
  }
  if (v.pass) v.detail = fmt("Lambda^2(elliptic) = H^{1,1}; %d random Lambda^k match the convolution", instances);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {1, "three-face round trips", round_trips},
      {2, "projector algebra", projector_algebra},
      {3, "Hodge-Riemann on the elliptic model", elliptic_polarization},
      {4, "period engine round trip", period_round_trip},
      {5, "CM anchor points", cm_anchors},
      {6, "SL(2,Z) reduction", sl2z_reduction},
      {7, "nc-Hodge checker", nc_hodge_exhaustive},
      {8, "exterior-power Dolbeault check", exterior_powers},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
