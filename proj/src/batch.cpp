#include "polycomp/batch.hpp"

#include <exception>
#include <omp.h>

#include "polycomp/gcdengine.hpp"

namespace polycomp {

namespace {

std::vector<CompositeElement> placeholders(const std::vector<ElementPair>& pairs) {
  if (pairs.empty()) return {};
  return std::vector<CompositeElement>(pairs.size(), CompositeElement::zero(pairs.front().first.pair()));
}

}  // namespace

std::vector<CompositeElement> gcd_batch_serial(const std::vector<ElementPair>& pairs) {
  std::vector<CompositeElement> out = placeholders(pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = gcd_composite(pairs[i].first, pairs[i].second).g;
  return out;
}

std::vector<CompositeElement> gcd_batch_parallel(const std::vector<ElementPair>& pairs, int threads) {
  std::vector<CompositeElement> out = placeholders(pairs);
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  std::exception_ptr first_error;
  std::ptrdiff_t first_index = n;
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(team)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = gcd_composite(pairs[i].first, pairs[i].second).g;
    } catch (...) {
#pragma omp critical(polycomp_batch_error)
      if (i < first_index) {
        first_index = i;
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace polycomp
