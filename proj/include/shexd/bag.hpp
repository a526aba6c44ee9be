#pragma once

#include <cstddef>

#include "shexd/interval.hpp"

namespace shexd {

inline constexpr std::size_t kDefaultBagBound = 16;
// Hard ceiling regardless of the configured bound.
inline constexpr std::size_t kMaxBagBound = 63;

// Exact membership test bag in L(expr) by exhaustive search with
// memoization. Works for any expression, including ones whose unfolding
// duplicates triple-constraint ids. Throws BagTooLarge when the bag has
// more than `bound` elements.
bool brute_match(const ShapeExpr& expr, const ConsumerBag& bag, std::size_t bound = kDefaultBagBound);

}  // namespace shexd
