#pragma once

#include <utility>
#include <vector>

#include "polycomp/composite.hpp"

namespace polycomp {

using ElementPair = std::pair<CompositeElement, CompositeElement>;

/// gcd_composite(a, b) for every pair, in order. All pairs must share a ring.
/// The error of the lowest-index failing pair is rethrown after the loop.
std::vector<CompositeElement> gcd_batch_serial(const std::vector<ElementPair>& pairs);

/// Same contract, with the pairs split across OpenMP threads. threads <= 0
/// uses the OpenMP default.
std::vector<CompositeElement> gcd_batch_parallel(const std::vector<ElementPair>& pairs, int threads = 0);

}  // namespace polycomp
