#pragma once

#include <cstddef>
#include <cstdint>

// Resource caps. Defaults keep every operation exact and desk-scale; each can
// be overridden by an environment variable before first use, or by the
// setters (tests use those).
namespace icx::limits {

// ICX_MAX_GROUP_ORDER: largest permutation group order accepted (default 10^6).
std::uint64_t max_group_order();
void set_max_group_order(std::uint64_t v);

// ICX_MAX_FACES: largest face count of an incidence complex (default 50000).
std::size_t max_faces();
void set_max_faces(std::size_t v);

// ICX_MAX_PRODUCT_PAIRS: cap on |A|*|B| in explicit product-set computations.
std::uint64_t max_product_pairs();
void set_max_product_pairs(std::uint64_t v);

// ICX_MAX_EXHAUSTIVE_RANK: largest rank for which the intersection property
// is verified over all subset pairs; above it the check samples.
int max_exhaustive_rank();
void set_max_exhaustive_rank(int v);

} // namespace icx::limits
