#pragma once

// Polarizations: integer bilinear forms on the standard lattice, checked
// against the Hodge-Riemann bilinear relations in exact arithmetic.
//
//   (i)  Q(H^{p,q}, H^{p',q'}) = 0 unless (p',q') = (q,p), and the pairing
//        H^{p,q} × H^{q,p} → C is nondegenerate;
//   (ii) v ↦ i^{p-q} Q(v, v̄) is positive definite on H^{p,q}.
//
// Q is extended to the complexification bilinearly; conjugation enters only
// through the explicit v̄.

#include <string>
#include <utility>
#include <vector>

#include "hodgekit/exact_linalg.hpp"
#include "hodgekit/hodge_structure.hpp"

namespace hodgekit {

enum class Parity { Symmetric, Antisymmetric };

std::string to_string(Parity parity);

class PolarizationForm {
 public:
  /// Throws InvalidStructure unless `gram` is a square integer matrix with
  /// gramᵀ = ±gram as declared and nonzero determinant.
  PolarizationForm(Parity parity, QiMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  Parity parity() const noexcept { return parity_; }
  const QiMatrix& gram() const noexcept { return gram_; }

  /// uᵀ · gram · v.
  GaussianRational operator()(const QiVector& u, const QiVector& v) const;
  /// Aᵀ · gram · B for column blocks A, B.
  QiMatrix pairing(const QiMatrix& a, const QiMatrix& b) const;

  PolarizationForm negated() const;

  friend bool operator==(const PolarizationForm&, const PolarizationForm&) = default;

 private:
  Parity parity_;
  QiMatrix gram_;
};

struct OrthogonalityFailure {
  Bidegree first;
  Bidegree second;
  std::string reason;
};

struct OrthogonalityCheck {
  bool ok = true;
  std::vector<OrthogonalityFailure> failures;
};

struct PositivityFailure {
  Bidegree block;
  std::string reason;
  /// Vector of H^{p,q} with i^{p-q} Q(w, w̄) ≤ 0; empty for structural failures.
  QiVector witness;
  /// i^{p-q} Q(w, w̄) at the witness.
  Rational value;
};

struct PositivityCheck {
  bool ok = true;
  std::vector<PositivityFailure> failures;
};

struct HodgeRiemannReport {
  OrthogonalityCheck orthogonality;
  PositivityCheck positivity;
  /// Non-fatal remarks, e.g. symmetric form on odd weight.
  std::vector<std::string> warnings;

  bool orthogonality_ok() const noexcept { return orthogonality.ok; }
  bool positivity_ok() const noexcept { return positivity.ok; }
  bool overall() const noexcept { return orthogonality.ok && positivity.ok; }
};

/// Relation (i). Throws DimensionMismatch when ranks differ, InvalidStructure
/// for an invalid decomposition.
OrthogonalityCheck check_orthogonality(const HodgeDecomposition& d, const PolarizationForm& q);

/// Relation (ii) on every block with p ≥ q, via Sylvester's criterion on the
/// Hermitian matrix H_ab = i^{p-q} Q(u_a, ū_b). A non-Hermitian H is reported
/// as a structural failure.
PositivityCheck check_positivity(const HodgeDecomposition& d, const PolarizationForm& q);

HodgeRiemannReport check_polarization(const HodgeDecomposition& d, const PolarizationForm& q);

/// Splits by weight parity: (even weights, odd weights).
std::pair<GeneralHodgeStructure, GeneralHodgeStructure> z2_grading(const GeneralHodgeStructure& g);

}  // namespace hodgekit
