#include "hodgekit/polarization.hpp"

#include "hodgekit/errors.hpp"

namespace hodgekit {

std::string to_string(Parity parity) { return parity == Parity::Symmetric ? "symmetric" : "antisymmetric"; }

PolarizationForm::PolarizationForm(Parity parity, QiMatrix gram) : parity_(parity), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidStructure("gram matrix is not square");
  for (const auto& x : gram_.entries()) {
    if (!x.is_real() || x.re().get_den() != 1) throw InvalidStructure("gram matrix entries must be integers");
  }
  QiMatrix expected = parity_ == Parity::Symmetric ? gram_ : GaussianRational(-1) * gram_;
  if (!(gram_.transpose() == expected))
    throw InvalidStructure("gram matrix is not " + to_string(parity_) + " as declared");
  if (determinant(gram_).is_zero()) throw InvalidStructure("gram matrix is degenerate");
}

GaussianRational PolarizationForm::operator()(const QiVector& u, const QiVector& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DimensionMismatch("vector length differs from form rank");
  GaussianRational total;
  for (std::size_t r = 0; r < rank(); ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t c = 0; c < rank(); ++c) {
      if (!gram_(r, c).is_zero() && !v[c].is_zero()) total += u[r] * gram_(r, c) * v[c];
    }
  }
  return total;
}

QiMatrix PolarizationForm::pairing(const QiMatrix& a, const QiMatrix& b) const {
  return a.transpose() * gram_ * b;
}

PolarizationForm PolarizationForm::negated() const { return PolarizationForm(parity_, GaussianRational(-1) * gram_); }

namespace {

void check_inputs(const HodgeDecomposition& d, const PolarizationForm& q) {
  if (d.rank != q.rank())
    throw DimensionMismatch("structure rank " + std::to_string(d.rank) + " differs from form rank " +
                            std::to_string(q.rank()));
  if (auto report = validate_decomposition(d); !report.valid())
    throw InvalidStructure("polarization check needs a valid decomposition (" + report.violations.front().code + ")");
}

}  // namespace

OrthogonalityCheck check_orthogonality(const HodgeDecomposition& d, const PolarizationForm& q) {
  check_inputs(d, q);
  OrthogonalityCheck out;
  for (const auto& [ka, a] : d.blocks) {
    for (const auto& [kb, b] : d.blocks) {
      if (kb < ka) continue;
      QiMatrix pairing = q.pairing(a.basis(), b.basis());
      if (kb == ka.conjugate()) {
        if (determinant(pairing).is_zero())
          out.failures.push_back({ka, kb, "pairing H^{" + to_string(ka) + "} x H^{" + to_string(kb) + "} is degenerate"});
      } else if (!pairing.is_zero()) {
        out.failures.push_back({ka, kb, "Q does not vanish on H^{" + to_string(ka) + "} x H^{" + to_string(kb) + "}"});
      }
    }
  }
  out.ok = out.failures.empty();
  return out;
}

PositivityCheck check_positivity(const HodgeDecomposition& d, const PolarizationForm& q) {
  check_inputs(d, q);
  PositivityCheck out;
  for (const auto& [key, block] : d.blocks) {
    if (key.p < key.q) continue;
    const QiMatrix& u = block.basis();
    const std::size_t m = block.dim();
    QiMatrix h = i_power(key.p - key.q) * q.pairing(u, u.conj());
    if (!(h.transpose().conj() == h)) {
      out.failures.push_back({key, "i^{p-q} Q(v, conj v) is not Hermitian on H^{" + to_string(key) + "}", {}, 0});
      continue;
    }
    // value(x) = xᵀ H x̄ = x† M x with M = Hᵀ; Sylvester on M.
    QiMatrix mform = h.transpose();
    for (std::size_t k = 1; k <= m; ++k) {
      QiMatrix leading = mform.row_range(0, k).column_range(0, k);
      GaussianRational minor = determinant(leading);
      if (sgn(minor.re()) > 0) continue;
      // x = (-A⁻¹ b, 1) makes x† M_k x = det M_k / det A ≤ 0.
      QiVector x(m);
      x[k - 1] = 1;
      if (k > 1) {
        QiMatrix a = mform.row_range(0, k - 1).column_range(0, k - 1);
        QiMatrix b = mform.row_range(0, k - 1).column_range(k - 1, 1);
        QiMatrix y = GaussianRational(-1) * (inverse(a) * b);
        for (std::size_t r = 0; r + 1 < k; ++r) x[r] = y(r, 0);
      }
      QiVector witness(d.rank);
      for (std::size_t r = 0; r < d.rank; ++r)
        for (std::size_t c = 0; c < m; ++c) witness[r] += u(r, c) * x[c];
      QiVector witness_bar(d.rank);
      for (std::size_t r = 0; r < d.rank; ++r) witness_bar[r] = witness[r].conj();
      GaussianRational value = i_power(key.p - key.q) * q(witness, witness_bar);
      out.failures.push_back({key,
                              "leading minor " + std::to_string(k) + " of the Hermitian form on H^{" + to_string(key) +
                                  "} is " + minor.re().get_str() + " <= 0",
                              std::move(witness), value.re()});
      break;
    }
  }
  out.ok = out.failures.empty();
  return out;
}

HodgeRiemannReport check_polarization(const HodgeDecomposition& d, const PolarizationForm& q) {
  HodgeRiemannReport report{check_orthogonality(d, q), check_positivity(d, q), {}};
  const bool odd = (d.weight % 2) != 0;
  if (odd && q.parity() == Parity::Symmetric)
    report.warnings.push_back("symmetric form on a structure of odd weight " + std::to_string(d.weight));
  if (!odd && q.parity() == Parity::Antisymmetric && d.rank > 0)
    report.warnings.push_back("antisymmetric form on a structure of even weight " + std::to_string(d.weight));
  return report;
}

std::pair<GeneralHodgeStructure, GeneralHodgeStructure> z2_grading(const GeneralHodgeStructure& g) {
  std::pair<GeneralHodgeStructure, GeneralHodgeStructure> out;
  for (const auto& [k, component] : g.components) {
    auto& side = (k % 2 == 0) ? out.first : out.second;
    side.components.emplace(k, component);
  }
  return out;
}

}  // namespace hodgekit
