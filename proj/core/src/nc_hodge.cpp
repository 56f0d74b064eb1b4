#include "hodgekit/nc_hodge.hpp"

#include <regex>

#include "hodgekit/errors.hpp"

namespace hodgekit {

std::size_t SL2Rep::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& s : summands) d += s.dimension();
  return d;
}

void validate(const SL2Rep& rep) {
  if (rep.summands.empty()) throw SchemaError("/summands", "representation has no summands");
  for (std::size_t k = 0; k < rep.summands.size(); ++k) {
    if (rep.summands[k].multiplicity == 0)
      throw SchemaError("/summands/" + std::to_string(k) + "/multiplicity", "multiplicity must be positive");
  }
}

SL2Rep parse_sl2_rep(std::string_view text) {
  static const std::regex term(R"(\s*Sym\(\s*(\d+)\s*\)\s*\*\s*conj\(\s*Sym\(\s*(\d+)\s*\)\s*\)\s*x\s*(\d+)\s*)");
  SL2Rep rep;
  std::size_t start = 0;
  std::size_t index = 0;
  const std::string s(text);
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(piece, m, term))
      throw SchemaError("term " + std::to_string(index), "expected Sym(a)*conj(Sym(b))xM, got '" + piece + "'");
    try {
      rep.summands.push_back({static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2])),
                              static_cast<unsigned>(std::stoul(m[3]))});
    } catch (const std::out_of_range&) {
      throw SchemaError("term " + std::to_string(index), "number out of range in '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
    ++index;
  }
  validate(rep);
  return rep;
}

std::string to_string(const SL2Rep& rep) {
  std::string out;
  for (const auto& s : rep.summands) {
    if (!out.empty()) out += ", ";
    out += "Sym(" + std::to_string(s.a) + ")*conj(Sym(" + std::to_string(s.b) + "))x" + std::to_string(s.multiplicity);
  }
  return out;
}

std::string to_string(TorusEmbedding) { return "diagonal"; }

TorusEmbedding parse_torus_embedding(std::string_view name) {
  if (name == "diagonal") return TorusEmbedding::Diagonal;
  throw SchemaError("embedding", "unknown torus embedding '" + std::string(name) + "'");
}

std::size_t total_multiplicity(const CharacterMultiset& c) {
  std::size_t n = 0;
  for (const auto& [key, mult] : c) n += mult;
  return n;
}

namespace {

// Weight vectors x^{a-i} y^i ⊗ conj(x^{b-j} y^j), enumerated i-major.
template <typename Visit>
void for_each_weight(const SL2Summand& s, Visit&& visit) {
  for (unsigned i = 0; i <= s.a; ++i)
    for (unsigned j = 0; j <= s.b; ++j)
      visit(Bidegree{static_cast<int>(s.a) - 2 * static_cast<int>(i), static_cast<int>(s.b) - 2 * static_cast<int>(j)});
}

}  // namespace

CharacterMultiset restrict_to_torus(const SL2Rep& rep, TorusEmbedding) {
  validate(rep);
  CharacterMultiset out;
  for (const auto& s : rep.summands) for_each_weight(s, [&](Bidegree w) { out[w] += s.multiplicity; });
  return out;
}

PurityResult purity_check(const CharacterMultiset& characters) {
  PurityResult out;
  std::optional<Bidegree> first;
  for (const auto& [key, mult] : characters) {
    if (mult == 0) continue;
    if (!first) {
      first = key;
    } else if (key.total() != first->total()) {
      out.witness = std::make_pair(*first, key);
      return out;
    }
  }
  out.pure = true;
  if (first) out.weight = first->total();
  return out;
}

NcHodgeReport nc_hodge_check(const SL2Rep& rep, TorusEmbedding embedding) {
  NcHodgeReport report;
  report.characters = restrict_to_torus(rep, embedding);
  PurityResult purity = purity_check(report.characters);
  report.is_nc_hodge = purity.pure;
  report.weight = purity.weight;
  report.witness = purity.witness;
  if (!purity.pure) return report;

  const std::size_t n = rep.dimension();
  std::map<Bidegree, std::vector<QiVector>> vectors;
  std::size_t index = 0;
  for (const auto& s : rep.summands) {
    for (unsigned copy = 0; copy < s.multiplicity; ++copy) {
      for_each_weight(s, [&](Bidegree w) {
        QiVector e(n);
        e[index++] = 1;
        vectors[w].push_back(std::move(e));
      });
    }
  }
  HodgeDecomposition d{purity.weight.value_or(0), n, {}};
  for (const auto& [key, vs] : vectors) d.blocks.emplace(key, Subspace::span(vs, n));
  if (validate_decomposition(d).valid()) report.induced = std::move(d);
  return report;
}

}  // namespace hodgekit
