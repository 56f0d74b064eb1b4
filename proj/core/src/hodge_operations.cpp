#include <sstream>

#include "block_algebra.hpp"
#include "hodgekit/errors.hpp"
#include "hodgekit/hodge_structure.hpp"

namespace hodgekit {
namespace detail {

QiMatrix adapted_basis(const BlockMap& blocks, std::size_t rank, std::vector<Bidegree>* labels) {
  QiMatrix basis(rank, 0);
  if (labels) labels->clear();
  for (const auto& [key, block] : blocks) {
    basis = hstack(basis, block.basis());
    if (labels) labels->insert(labels->end(), block.dim(), key);
  }
  return basis;
}

ProjectorMap projectors(const BlockMap& blocks, std::size_t rank) {
  QiMatrix basis = adapted_basis(blocks, rank);
  QiMatrix basis_inv = inverse(basis);
  ProjectorMap out;
  std::size_t offset = 0;
  for (const auto& [key, block] : blocks) {
    out.emplace(key, block.basis() * basis_inv.row_range(offset, block.dim()));
    offset += block.dim();
  }
  return out;
}

BlockMap images(const ProjectorMap& coefficients) {
  BlockMap out;
  for (const auto& [key, c] : coefficients) {
    Subspace s = image(c);
    if (!s.is_zero()) out.emplace(key, std::move(s));
  }
  return out;
}

BlockMap embed(const BlockMap& blocks, std::size_t offset, std::size_t outer) {
  BlockMap out;
  for (const auto& [key, block] : blocks) {
    QiMatrix lifted(outer, block.dim());
    for (std::size_t r = 0; r < block.ambient_dim(); ++r)
      for (std::size_t c = 0; c < block.dim(); ++c) lifted(offset + r, c) = block.basis()(r, c);
    out.emplace(key, Subspace::span(lifted));
  }
  return out;
}

BlockMap direct_sum_blocks(const BlockMap& a, std::size_t rank_a, const BlockMap& b, std::size_t rank_b) {
  const std::size_t n = rank_a + rank_b;
  BlockMap out = embed(a, 0, n);
  for (auto& [key, block] : embed(b, rank_a, n)) {
    auto [it, inserted] = out.try_emplace(key, block);
    if (!inserted) it->second = sum(it->second, block);
  }
  return out;
}

BlockMap tensor_blocks(const BlockMap& a, std::size_t rank_a, const BlockMap& b, std::size_t rank_b) {
  std::map<Bidegree, QiMatrix> spanning;
  for (const auto& [ka, ba] : a) {
    for (const auto& [kb, bb] : b) {
      QiMatrix product = kronecker(ba.basis(), bb.basis());
      auto [it, inserted] = spanning.try_emplace(ka + kb, product);
      if (!inserted) it->second = hstack(it->second, product);
    }
  }
  BlockMap out;
  for (const auto& [key, vectors] : spanning) {
    Subspace s = Subspace::span(vectors);
    if (!s.is_zero()) out.emplace(key, std::move(s));
  }
  (void)rank_a;
  (void)rank_b;
  return out;
}

BlockMap dual_blocks(const BlockMap& blocks, std::size_t rank) {
  BlockMap out;
  for (const auto& [key, c] : projectors(blocks, rank)) out.emplace(Bidegree{-key.p, -key.q}, image(c.transpose()));
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t j = 0; j < k; ++j) current[j] = j;
  while (true) {
    out.push_back(current);
    std::size_t j = k;
    while (j > 0 && current[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) break;
    ++current[j - 1];
    for (std::size_t t = j; t < k; ++t) current[t] = current[t - 1] + 1;
  }
  return out;
}

BlockMap exterior_blocks(const BlockMap& blocks, std::size_t rank, std::size_t k) {
  std::vector<Bidegree> labels;
  QiMatrix basis = adapted_basis(blocks, rank, &labels);
  const auto coordinate_sets = k_subsets(rank, k);
  const std::size_t out_dim = coordinate_sets.size();

  // The wedge of basis columns S has Plücker coordinate det(basis[J, S]) on e_J.
  std::map<Bidegree, std::vector<QiVector>> spanning;
  for (const auto& columns : k_subsets(rank, k)) {
    Bidegree degree{0, 0};
    for (auto c : columns) degree = degree + labels[c];
    QiVector wedge(out_dim);
    for (std::size_t j = 0; j < out_dim; ++j) {
      QiMatrix minor(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) minor(r, c) = basis(coordinate_sets[j][r], columns[c]);
      wedge[j] = determinant(minor);
    }
    spanning[degree].push_back(std::move(wedge));
  }
  BlockMap out;
  for (const auto& [key, vectors] : spanning) out.emplace(key, Subspace::span(vectors, out_dim));
  return out;
}

}  // namespace detail

namespace {

void require_valid(const HodgeDecomposition& d, const char* what) {
  if (auto report = validate_decomposition(d); !report.valid()) {
    std::ostringstream os;
    os << what << ": invalid decomposition:";
    for (const auto& v : report.violations) os << " [" << v.code << "]";
    throw InvalidStructure(os.str());
  }
}

void require_valid(const HodgeRepresentation& r, const char* what) {
  if (auto report = validate_representation(r); !report.valid()) {
    std::ostringstream os;
    os << what << ": invalid representation:";
    for (const auto& v : report.violations) os << " [" << v.code << "]";
    throw InvalidStructure(os.str());
  }
}

}  // namespace

HodgeDecomposition direct_sum(const HodgeDecomposition& a, const HodgeDecomposition& b) {
  require_valid(a, "direct_sum");
  require_valid(b, "direct_sum");
  if (a.weight != b.weight && a.rank > 0 && b.rank > 0)
    throw IncompatibleOperands("direct_sum of pure structures needs equal weights (got " + std::to_string(a.weight) +
                               " and " + std::to_string(b.weight) + ")");
  const int weight = a.rank > 0 ? a.weight : b.weight;
  return {weight, a.rank + b.rank, detail::direct_sum_blocks(a.blocks, a.rank, b.blocks, b.rank)};
}

HodgeDecomposition tensor(const HodgeDecomposition& a, const HodgeDecomposition& b) {
  require_valid(a, "tensor");
  require_valid(b, "tensor");
  return {a.weight + b.weight, a.rank * b.rank, detail::tensor_blocks(a.blocks, a.rank, b.blocks, b.rank)};
}

HodgeDecomposition dual(const HodgeDecomposition& a) {
  require_valid(a, "dual");
  return {-a.weight, a.rank, detail::dual_blocks(a.blocks, a.rank)};
}

HodgeDecomposition exterior_power(const HodgeDecomposition& a, std::size_t k) {
  require_valid(a, "exterior_power");
  return {static_cast<int>(k) * a.weight, detail::binomial(a.rank, k), detail::exterior_blocks(a.blocks, a.rank, k)};
}

HodgeFiltration direct_sum(const HodgeFiltration& a, const HodgeFiltration& b) {
  return decomposition_to_filtration(direct_sum(filtration_to_decomposition(a), filtration_to_decomposition(b)));
}

HodgeFiltration tensor(const HodgeFiltration& a, const HodgeFiltration& b) {
  return decomposition_to_filtration(tensor(filtration_to_decomposition(a), filtration_to_decomposition(b)));
}

HodgeFiltration dual(const HodgeFiltration& a) {
  return decomposition_to_filtration(dual(filtration_to_decomposition(a)));
}

HodgeFiltration exterior_power(const HodgeFiltration& a, std::size_t k) {
  return decomposition_to_filtration(exterior_power(filtration_to_decomposition(a), k));
}

HodgeRepresentation direct_sum(const HodgeRepresentation& a, const HodgeRepresentation& b) {
  require_valid(a, "direct_sum");
  require_valid(b, "direct_sum");
  const std::size_t n = a.rank + b.rank;
  std::map<Bidegree, QiMatrix> out;
  for (const auto& [key, c] : a.coefficients) out.emplace(key, block_diagonal(c, QiMatrix(b.rank, b.rank)));
  for (const auto& [key, c] : b.coefficients) {
    QiMatrix lifted = block_diagonal(QiMatrix(a.rank, a.rank), c);
    auto [it, inserted] = out.try_emplace(key, lifted);
    if (!inserted) it->second += lifted;
  }
  std::optional<int> weight;
  if (a.rank == 0) weight = b.weight;
  else if (b.rank == 0) weight = a.weight;
  else if (a.weight && b.weight && *a.weight == *b.weight) weight = a.weight;
  return {weight, n, std::move(out)};
}

HodgeRepresentation tensor(const HodgeRepresentation& a, const HodgeRepresentation& b) {
  require_valid(a, "tensor");
  require_valid(b, "tensor");
  // h_a(z) ⊗ h_b(z) = Σ z^{p+p'} z̄^{q+q'} C_a ⊗ C_b.
  std::map<Bidegree, QiMatrix> out;
  for (const auto& [ka, ca] : a.coefficients) {
    for (const auto& [kb, cb] : b.coefficients) {
      QiMatrix product = kronecker(ca, cb);
      auto [it, inserted] = out.try_emplace(ka + kb, product);
      if (!inserted) it->second += product;
    }
  }
  std::optional<int> weight;
  if (a.weight && b.weight) weight = *a.weight + *b.weight;
  return {weight, a.rank * b.rank, std::move(out)};
}

HodgeRepresentation dual(const HodgeRepresentation& a) {
  require_valid(a, "dual");
  // h^∨(z) = h(z)^{-T} = Σ z^{-p} z̄^{-q} C_{pq}^T.
  std::map<Bidegree, QiMatrix> out;
  for (const auto& [key, c] : a.coefficients) out.emplace(Bidegree{-key.p, -key.q}, c.transpose());
  std::optional<int> weight;
  if (a.weight) weight = -*a.weight;
  return {weight, a.rank, std::move(out)};
}

HodgeRepresentation exterior_power(const HodgeRepresentation& a, std::size_t k) {
  require_valid(a, "exterior_power");
  const std::size_t n = detail::binomial(a.rank, k);
  BlockMap blocks = detail::exterior_blocks(detail::images(a.coefficients), a.rank, k);
  std::optional<int> weight;
  if (a.weight) weight = static_cast<int>(k) * *a.weight;
  return {weight, n, detail::projectors(blocks, n)};
}

GeneralHodgeStructure direct_sum(const GeneralHodgeStructure& a, const GeneralHodgeStructure& b) {
  GeneralHodgeStructure out = a;
  for (const auto& [k, component] : b.components) {
    auto [it, inserted] = out.components.try_emplace(k, component);
    if (!inserted) it->second = direct_sum(it->second, component);
  }
  return out;
}

}  // namespace hodgekit
