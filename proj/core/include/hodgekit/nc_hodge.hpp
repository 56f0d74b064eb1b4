#pragma once

// Algebraic SL(2,C)-representations given by their irreducible summands
// Sym^a ⊗ conj(Sym^b), restricted to an embedded C*, and the test of whether
// that restriction is a pure Hodge structure.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodgekit/hodge_structure.hpp"

namespace hodgekit {

struct SL2Summand {
  unsigned a = 0;
  unsigned b = 0;
  unsigned multiplicity = 1;

  std::size_t dimension() const noexcept { return std::size_t{multiplicity} * (a + 1) * (b + 1); }
  friend bool operator==(const SL2Summand&, const SL2Summand&) = default;
};

struct SL2Rep {
  std::vector<SL2Summand> summands;

  std::size_t dimension() const noexcept;
  friend bool operator==(const SL2Rep&, const SL2Rep&) = default;
};

/// Throws SchemaError unless the summands are nonempty with positive
/// multiplicities.
void validate(const SL2Rep& rep);

/// Parses "Sym(a)*conj(Sym(b))xM" terms separated by commas.
/// Throws SchemaError naming the offending term.
SL2Rep parse_sl2_rep(std::string_view text);
std::string to_string(const SL2Rep& rep);

enum class TorusEmbedding {
  /// z ↦ diag(z, z⁻¹)
  Diagonal,
};

std::string to_string(TorusEmbedding e);
/// Throws SchemaError for unknown names.
TorusEmbedding parse_torus_embedding(std::string_view name);

/// Multiplicity of each character z^p z̄^q.
using CharacterMultiset = std::map<Bidegree, std::size_t>;

std::size_t total_multiplicity(const CharacterMultiset& c);

/// Torus weights: summand (a, b) contributes z^{a-2i} z̄^{b-2j} for
/// 0 ≤ i ≤ a, 0 ≤ j ≤ b, each with the summand's multiplicity.
CharacterMultiset restrict_to_torus(const SL2Rep& rep, TorusEmbedding embedding = TorusEmbedding::Diagonal);

struct PurityResult {
  bool pure = false;
  /// Set when pure and nonempty.
  std::optional<int> weight;
  /// Two characters with distinct total degree when impure.
  std::optional<std::pair<Bidegree, Bidegree>> witness;
};

PurityResult purity_check(const CharacterMultiset& characters);

struct NcHodgeReport {
  bool is_nc_hodge = false;
  std::optional<int> weight;
  CharacterMultiset characters;
  std::optional<std::pair<Bidegree, Bidegree>> witness;
  /// When pure: the induced decomposition on the torus weight vectors, in the
  /// order the summands and their weights are enumerated.
  std::optional<HodgeDecomposition> induced;
};

NcHodgeReport nc_hodge_check(const SL2Rep& rep, TorusEmbedding embedding = TorusEmbedding::Diagonal);

}  // namespace hodgekit
