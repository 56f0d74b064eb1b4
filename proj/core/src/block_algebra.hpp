#pragma once

// Internal helpers shared by the conversions and the tensor-algebra
// operations: everything here works on a bare block map (a direct-sum
// decomposition of Q(i)^rank labelled by bidegree), independent of weight.

#include <cstddef>
#include <map>
#include <vector>

#include "hodgekit/exact_linalg.hpp"
#include "hodgekit/hodge_structure.hpp"

namespace hodgekit::detail {

using ProjectorMap = std::map<Bidegree, QiMatrix>;

/// Concatenation of the block bases in key order; `labels[c]` is the
/// bidegree of column c.
QiMatrix adapted_basis(const BlockMap& blocks, std::size_t rank, std::vector<Bidegree>* labels = nullptr);

/// Projector onto each block along the others. Blocks must direct-sum to Q(i)^rank.
ProjectorMap projectors(const BlockMap& blocks, std::size_t rank);

/// Images of the nonzero coefficients.
BlockMap images(const ProjectorMap& coefficients);

/// Places blocks of Q(i)^{inner} into coordinates [offset, offset + inner) of Q(i)^{outer}.
BlockMap embed(const BlockMap& blocks, std::size_t offset, std::size_t outer);

BlockMap direct_sum_blocks(const BlockMap& a, std::size_t rank_a, const BlockMap& b, std::size_t rank_b);
BlockMap tensor_blocks(const BlockMap& a, std::size_t rank_a, const BlockMap& b, std::size_t rank_b);
BlockMap dual_blocks(const BlockMap& blocks, std::size_t rank);
BlockMap exterior_blocks(const BlockMap& blocks, std::size_t rank, std::size_t k);

/// k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace hodgekit::detail
