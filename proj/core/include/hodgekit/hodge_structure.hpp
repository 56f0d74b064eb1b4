#pragma once

// Pure Hodge structures in three equivalent forms, with exact conversions:
//
//   decomposition    H_C = ⊕_{p+q=n} H^{p,q},  conj(H^{p,q}) = H^{q,p}
//   filtration       F^p = ⊕_{r≥p} H^{r,n-r}
//   representation   h(z) = Σ z^p z̄^q C_{pq}, the C_{pq} complementary projectors
//
// The lattice H_Z is the standard lattice Z^rank; all subspaces live in its
// complexification, computed over Q(i).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hodgekit/exact_linalg.hpp"

namespace hodgekit {

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const noexcept { return p + q; }
  Bidegree conjugate() const noexcept { return {q, p}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }

/// "p,q"
std::string to_string(Bidegree b);

using BlockMap = std::map<Bidegree, Subspace>;

struct HodgeDecomposition {
  int weight = 0;
  std::size_t rank = 0;
  /// Zero-dimensional blocks are never stored.
  BlockMap blocks;

  friend bool operator==(const HodgeDecomposition&, const HodgeDecomposition&) = default;
};

/// Decreasing chain F^{p_min} ⊇ ... ⊇ F^{p_max}; F^p is the full space for
/// p ≤ p_min and zero for p > p_max.
struct HodgeFiltration {
  int weight = 0;
  std::size_t rank = 0;
  int p_min = 0;
  std::vector<Subspace> steps;

  int p_max() const noexcept { return p_min + static_cast<int>(steps.size()) - 1; }
  /// F^p for any integer p, using the conventions above.
  Subspace step(int p) const;

  friend bool operator==(const HodgeFiltration&, const HodgeFiltration&) = default;
};

/// The Laurent polynomial h(z) = Σ z^p z̄^q C_{pq}. `weight` is empty for a
/// general (mixed-weight) structure.
struct HodgeRepresentation {
  std::optional<int> weight;
  std::size_t rank = 0;
  std::map<Bidegree, QiMatrix> coefficients;

  /// True when every key has the same total degree (vacuously for rank 0).
  bool has_constant_degree() const;

  friend bool operator==(const HodgeRepresentation&, const HodgeRepresentation&) = default;
};

/// Direct sum of pure structures of distinct weights. The ambient coordinates
/// are those of the components concatenated in increasing weight.
struct GeneralHodgeStructure {
  std::map<int, HodgeDecomposition> components;

  std::size_t rank() const;

  friend bool operator==(const GeneralHodgeStructure&, const GeneralHodgeStructure&) = default;
};

/// One violated invariant. `code` is stable and machine readable.
struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(const std::string& code) const;
};

ValidationReport validate_decomposition(const HodgeDecomposition& d);
ValidationReport validate_filtration(const HodgeFiltration& f);
ValidationReport validate_representation(const HodgeRepresentation& r);

/// Trims redundant leading full steps and trailing zero steps.
HodgeFiltration canonicalize(const HodgeFiltration& f);

/// Throws InvalidStructure if d is not valid.
HodgeFiltration decomposition_to_filtration(const HodgeDecomposition& d);

/// H^{p,q} = F^p ∩ conj(F^q). Throws NotOpposed naming the first index p
/// where F^p ⊕ conj(F^{n-p+1}) is not the full space, InvalidStructure for
/// other defects.
HodgeDecomposition filtration_to_decomposition(const HodgeFiltration& f);

/// C_{pq} is the projector onto H^{p,q} along the remaining blocks.
HodgeRepresentation decomposition_to_representation(const HodgeDecomposition& d);

/// Pure result when the keys share one total degree (or the weight is
/// declared); otherwise the weight-graded pieces. Throws InvalidStructure
/// listing every projector-algebra violation.
std::variant<HodgeDecomposition, GeneralHodgeStructure> representation_to_decomposition(const HodgeRepresentation& r);

/// Splits any valid representation by total degree. Each component is written
/// in the canonical (rational) basis of its weight space.
GeneralHodgeStructure representation_to_general(const HodgeRepresentation& r);
/// Block diagonal realization of g; weight is empty unless g has one component.
HodgeRepresentation general_to_representation(const GeneralHodgeStructure& g);

/// Pure components in increasing weight.
std::vector<std::pair<int, HodgeDecomposition>> weight_components(const GeneralHodgeStructure& g);
GeneralHodgeStructure as_general(const HodgeDecomposition& d);

// Linear-algebra constructions. Coordinates: direct sums concatenate, tensor
// products use the Kronecker index i·rank_b + j, duals use the dual basis, and
// Λ^k uses the k-subsets of the standard basis in lexicographic order.

/// Throws IncompatibleOperands when the weights differ.
HodgeDecomposition direct_sum(const HodgeDecomposition& a, const HodgeDecomposition& b);
HodgeDecomposition tensor(const HodgeDecomposition& a, const HodgeDecomposition& b);
HodgeDecomposition dual(const HodgeDecomposition& a);
HodgeDecomposition exterior_power(const HodgeDecomposition& a, std::size_t k);

HodgeFiltration direct_sum(const HodgeFiltration& a, const HodgeFiltration& b);
HodgeFiltration tensor(const HodgeFiltration& a, const HodgeFiltration& b);
HodgeFiltration dual(const HodgeFiltration& a);
HodgeFiltration exterior_power(const HodgeFiltration& a, std::size_t k);

/// Representations may be mixed; the sum of pure representations of different
/// weights is mixed.
HodgeRepresentation direct_sum(const HodgeRepresentation& a, const HodgeRepresentation& b);
HodgeRepresentation tensor(const HodgeRepresentation& a, const HodgeRepresentation& b);
HodgeRepresentation dual(const HodgeRepresentation& a);
HodgeRepresentation exterior_power(const HodgeRepresentation& a, std::size_t k);

/// Merges by weight; components of equal weight are direct-summed.
GeneralHodgeStructure direct_sum(const GeneralHodgeStructure& a, const GeneralHodgeStructure& b);

/// dim H^{p,q} for each stored block.
std::map<Bidegree, std::size_t> hodge_numbers(const HodgeDecomposition& d);

}  // namespace hodgekit
