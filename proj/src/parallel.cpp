#include "subword/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subword {

int max_threads()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

TreeSplit split_greedy_tree(const Instance& inst, Sign sign, std::size_t target)
{
  TreeSplit split;
  if (!inst.nonempty()) return split;
  for (std::size_t depth = 0;; ++depth) {
    TreeSplit attempt;
    GreedyEnumerator it(inst, sign);
    it.set_depth_limit(depth);
    while (it.next()) {
      if (it.depth() == depth)
        attempt.frontier.push_back({it.facet(), it.gamma()});
      else
        ++attempt.shallow_count;
    }
    split = std::move(attempt);
    if (split.frontier.empty() || split.frontier.size() >= target) return split;
    if (depth > static_cast<std::size_t>(inst.size())) return split;
  }
}

std::uint64_t count_facets_parallel(const Instance& inst, Sign sign, int threads)
{
  if (threads <= 0) threads = max_threads();
  if (threads == 1) return count_facets(inst, sign == Sign::kPositive ? Algorithm::kGreedyPositive
                                                                      : Algorithm::kGreedyNegative);
  auto split = split_greedy_tree(inst, sign, static_cast<std::size_t>(threads) * 8);
  const auto& frontier = split.frontier;
  const long n = static_cast<long>(frontier.size());
  std::uint64_t total = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total) num_threads(threads)
  for (long k = 0; k < n; ++k) {
    GreedyEnumerator it(inst, sign, frontier[k].facet, frontier[k].gamma);
    std::uint64_t local = 0;
    while (it.next()) ++local;
    total += local;
  }
  return split.shallow_count + total;
}

} // namespace subword
