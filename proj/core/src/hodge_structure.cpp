#include "hodgekit/hodge_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "block_algebra.hpp"
#include "hodgekit/errors.hpp"

namespace hodgekit {

std::string to_string(Bidegree b) { return std::to_string(b.p) + "," + std::to_string(b.q); }

Subspace HodgeFiltration::step(int p) const {
  if (p > p_max()) return Subspace::zero(rank);
  if (p < p_min) return Subspace::full(rank);
  return steps[static_cast<std::size_t>(p - p_min)];
}

bool HodgeRepresentation::has_constant_degree() const {
  if (coefficients.empty()) return true;
  const int k = coefficients.begin()->first.total();
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [k](const auto& kv) { return kv.first.total() == k; });
}

std::size_t GeneralHodgeStructure::rank() const {
  std::size_t r = 0;
  for (const auto& [k, d] : components) r += d.rank;
  return r;
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

namespace {

[[noreturn]] void throw_invalid(const std::string& what, const ValidationReport& report) {
  std::ostringstream os;
  os << what << ":";
  for (const auto& v : report.violations) os << " [" << v.code << "] " << v.message << ";";
  throw InvalidStructure(os.str());
}

}  // namespace

ValidationReport validate_decomposition(const HodgeDecomposition& d) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };
  bool shapes_ok = true;
  for (const auto& [key, block] : d.blocks) {
    if (block.ambient_dim() != d.rank) {
      add("rank_mismatch", "block " + to_string(key) + " lives in dimension " + std::to_string(block.ambient_dim()) +
                               ", expected " + std::to_string(d.rank));
      shapes_ok = false;
    }
    if (key.total() != d.weight)
      add("weight_mismatch", "block " + to_string(key) + " has p+q = " + std::to_string(key.total()) +
                                 ", expected weight " + std::to_string(d.weight));
    if (block.is_zero()) add("zero_block", "block " + to_string(key) + " is zero-dimensional and must be omitted");
  }
  if (!shapes_ok) return report;

  std::vector<Subspace> parts;
  for (const auto& [key, block] : d.blocks) parts.push_back(block);
  if (!direct_sum_spans(parts) && !(d.rank == 0 && parts.empty()))
    add("not_direct_sum", "blocks do not form a direct sum decomposition of Q(i)^" + std::to_string(d.rank));

  for (const auto& [key, block] : d.blocks) {
    if (key.p < key.q) continue;
    auto partner = d.blocks.find(key.conjugate());
    Subspace expected = conjugate(block);
    if (partner == d.blocks.end()) {
      add("conjugation_asymmetry", "block " + to_string(key.conjugate()) + " missing; conjugate of " + to_string(key) +
                                       " is nonzero");
    } else if (!(partner->second == expected)) {
      add("conjugation_asymmetry", "conj(H^{" + to_string(key) + "}) differs from H^{" + to_string(key.conjugate()) + "}");
    }
  }
  for (const auto& [key, block] : d.blocks) {
    if (key.p < key.q && d.blocks.find(key.conjugate()) == d.blocks.end())
      add("conjugation_asymmetry", "block " + to_string(key.conjugate()) + " missing; conjugate of " + to_string(key) +
                                       " is nonzero");
  }
  return report;
}

ValidationReport validate_filtration(const HodgeFiltration& f) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    if (f.steps[k].ambient_dim() != f.rank) {
      add("rank_mismatch", "step F^" + std::to_string(f.p_min + static_cast<int>(k)) + " has wrong ambient dimension");
      return report;
    }
  }
  if (f.rank == 0) return report;
  if (f.steps.empty()) {
    add("empty_filtration", "no steps given for a nonzero space");
    return report;
  }
  if (!f.steps.front().is_full())
    add("first_step_not_full", "F^" + std::to_string(f.p_min) + " must be the full space");
  for (std::size_t k = 0; k + 1 < f.steps.size(); ++k) {
    if (!f.steps[k].contains(f.steps[k + 1])) {
      int p = f.p_min + static_cast<int>(k);
      add("not_decreasing", "F^" + std::to_string(p) + " does not contain F^" + std::to_string(p + 1));
    }
  }
  if (!report.valid()) return report;
  for (int p = f.p_min; p <= f.p_max() + 1; ++p) {
    std::vector<Subspace> pair{f.step(p), conjugate(f.step(f.weight - p + 1))};
    if (!direct_sum_spans(pair)) {
      add("not_opposed", "F^" + std::to_string(p) + " and conj(F^" + std::to_string(f.weight - p + 1) +
                             ") are not complementary at index p = " + std::to_string(p));
    }
  }
  return report;
}

ValidationReport validate_representation(const HodgeRepresentation& r) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };
  for (const auto& [key, c] : r.coefficients) {
    if (c.rows() != r.rank || c.cols() != r.rank) {
      add("rank_mismatch", "coefficient " + to_string(key) + " is not " + std::to_string(r.rank) + "x" +
                               std::to_string(r.rank));
      return report;
    }
  }
  for (const auto& [key, c] : r.coefficients) {
    if (c.is_zero()) add("zero_coefficient", "coefficient " + to_string(key) + " is zero and must be omitted");
    if (r.weight && key.total() != *r.weight)
      add("weight_mismatch", "key " + to_string(key) + " has p+q = " + std::to_string(key.total()) +
                                 ", declared weight " + std::to_string(*r.weight));
    if (!(c * c == c)) add("not_idempotent", "C_{" + to_string(key) + "}^2 != C_{" + to_string(key) + "}");
  }
  for (auto a = r.coefficients.begin(); a != r.coefficients.end(); ++a) {
    for (auto b = std::next(a); b != r.coefficients.end(); ++b) {
      if (!(a->second * b->second).is_zero() || !(b->second * a->second).is_zero())
        add("not_orthogonal", "C_{" + to_string(a->first) + "} and C_{" + to_string(b->first) +
                                  "} do not annihilate each other");
    }
  }
  QiMatrix total(r.rank, r.rank);
  for (const auto& [key, c] : r.coefficients) total += c;
  if (!(total == QiMatrix::identity(r.rank))) add("incomplete", "coefficients do not sum to the identity");
  std::set<Bidegree> seen;
  for (const auto& [key, c] : r.coefficients) {
    if (seen.contains(key)) continue;
    seen.insert(key.conjugate());
    auto partner = r.coefficients.find(key.conjugate());
    QiMatrix expected = partner == r.coefficients.end() ? QiMatrix(r.rank, r.rank) : partner->second;
    if (!(c.conj() == expected))
      add("reality", "conj(C_{" + to_string(key) + "}) != C_{" + to_string(key.conjugate()) + "}");
  }
  return report;
}

HodgeFiltration canonicalize(const HodgeFiltration& f) {
  HodgeFiltration out = f;
  while (!out.steps.empty() && out.steps.back().is_zero()) out.steps.pop_back();
  while (out.steps.size() > 1 && out.steps[1].is_full()) {
    out.steps.erase(out.steps.begin());
    ++out.p_min;
  }
  if (out.steps.empty()) out.p_min = 0;
  return out;
}

HodgeFiltration decomposition_to_filtration(const HodgeDecomposition& d) {
  if (auto report = validate_decomposition(d); !report.valid()) throw_invalid("invalid decomposition", report);
  HodgeFiltration f{d.weight, d.rank, 0, {}};
  if (d.blocks.empty()) return f;
  const int p_min = d.blocks.begin()->first.p;
  const int p_max = d.blocks.rbegin()->first.p;
  f.p_min = p_min;
  // blocks are ordered by p, so accumulate from the top down.
  Subspace acc = Subspace::zero(d.rank);
  std::vector<Subspace> reversed;
  for (int p = p_max; p >= p_min; --p) {
    if (auto it = d.blocks.find({p, d.weight - p}); it != d.blocks.end()) acc = sum(acc, it->second);
    reversed.push_back(acc);
  }
  f.steps.assign(reversed.rbegin(), reversed.rend());
  return f;
}

HodgeDecomposition filtration_to_decomposition(const HodgeFiltration& f) {
  ValidationReport report = validate_filtration(f);
  if (!report.valid()) {
    // validate_filtration only tests opposedness once the chain itself is sound.
    if (report.has("not_opposed")) {
      for (int p = f.p_min; p <= f.p_max() + 1; ++p) {
        std::vector<Subspace> pair{f.step(p), conjugate(f.step(f.weight - p + 1))};
        if (!direct_sum_spans(pair))
          throw NotOpposed(p, "filtration is not opposed at index p = " + std::to_string(p) + ": F^" +
                                  std::to_string(p) + " + conj(F^" + std::to_string(f.weight - p + 1) +
                                  ") is not a direct sum");
      }
    }
    throw_invalid("invalid filtration", report);
  }
  HodgeDecomposition d{f.weight, f.rank, {}};
  for (int p = f.p_min; p <= f.p_max(); ++p) {
    const int q = f.weight - p;
    Subspace block = intersect(f.step(p), conjugate(f.step(q)));
    if (!block.is_zero()) d.blocks.emplace(Bidegree{p, q}, std::move(block));
  }
  if (auto check = validate_decomposition(d); !check.valid()) throw_invalid("filtration does not split", check);
  return d;
}

HodgeRepresentation decomposition_to_representation(const HodgeDecomposition& d) {
  if (auto report = validate_decomposition(d); !report.valid()) throw_invalid("invalid decomposition", report);
  return {d.weight, d.rank, detail::projectors(d.blocks, d.rank)};
}

std::variant<HodgeDecomposition, GeneralHodgeStructure> representation_to_decomposition(const HodgeRepresentation& r) {
  if (auto report = validate_representation(r); !report.valid()) throw_invalid("invalid representation", report);
  if (r.weight) return HodgeDecomposition{*r.weight, r.rank, detail::images(r.coefficients)};
  if (!r.coefficients.empty() && r.has_constant_degree())
    return HodgeDecomposition{r.coefficients.begin()->first.total(), r.rank, detail::images(r.coefficients)};
  return representation_to_general(r);
}

GeneralHodgeStructure representation_to_general(const HodgeRepresentation& r) {
  if (auto report = validate_representation(r); !report.valid()) throw_invalid("invalid representation", report);
  std::map<int, QiMatrix> weight_projectors;
  for (const auto& [key, c] : r.coefficients) {
    auto [it, inserted] = weight_projectors.try_emplace(key.total(), c);
    if (!inserted) it->second += c;
  }
  GeneralHodgeStructure g;
  for (const auto& [k, projector] : weight_projectors) {
    Subspace space = image(projector);
    HodgeDecomposition component{k, space.dim(), {}};
    for (const auto& [key, c] : r.coefficients) {
      if (key.total() != k) continue;
      component.blocks.emplace(key, Subspace::span(coordinates_in(space, image(c).basis())));
    }
    g.components.emplace(k, std::move(component));
  }
  return g;
}

HodgeRepresentation general_to_representation(const GeneralHodgeStructure& g) {
  const std::size_t n = g.rank();
  BlockMap blocks;
  std::size_t offset = 0;
  for (const auto& [k, component] : g.components) {
    if (auto report = validate_decomposition(component); !report.valid())
      throw_invalid("invalid weight-" + std::to_string(k) + " component", report);
    if (component.weight != k)
      throw InvalidStructure("component stored under weight " + std::to_string(k) + " has weight " +
                             std::to_string(component.weight));
    blocks.merge(detail::embed(component.blocks, offset, n));
    offset += component.rank;
  }
  HodgeRepresentation r{std::nullopt, n, detail::projectors(blocks, n)};
  if (g.components.size() == 1) r.weight = g.components.begin()->first;
  return r;
}

std::vector<std::pair<int, HodgeDecomposition>> weight_components(const GeneralHodgeStructure& g) {
  return {g.components.begin(), g.components.end()};
}

GeneralHodgeStructure as_general(const HodgeDecomposition& d) {
  GeneralHodgeStructure g;
  if (d.rank > 0) g.components.emplace(d.weight, d);
  return g;
}

std::map<Bidegree, std::size_t> hodge_numbers(const HodgeDecomposition& d) {
  std::map<Bidegree, std::size_t> numbers;
  for (const auto& [key, block] : d.blocks) numbers[key] = block.dim();
  return numbers;
}

}  // namespace hodgekit
