#ifndef SUBWORD_PARALLEL_HPP
#define SUBWORD_PARALLEL_HPP

#include "subword/enumerate.hpp"

#include <cstdint>
#include <vector>

namespace subword {

/// Root of a greedy-tree subtree, enough to restart a traversal there.
struct SubtreeRoot
{
  Facet facet;
  int gamma;
};

struct TreeSplit
{
  std::uint64_t shallow_count = 0;      // nodes above the frontier
  std::vector<SubtreeRoot> frontier;
};

/// Expands the greedy tree breadth-wise until at least `target` subtree
/// roots sit on one level, or the tree runs out.
TreeSplit split_greedy_tree(const Instance& inst, Sign sign, std::size_t target);

/// Facet count with independent subtree traversals spread over OpenMP
/// threads; threads <= 0 uses the OpenMP default. Each traversal owns its
/// own state, so the result equals count_facets with the same sign.
std::uint64_t count_facets_parallel(const Instance& inst, Sign sign, int threads = 0);

int max_threads();

} // namespace subword

#endif
