#ifndef SUBWORD_ENUMERATE_HPP
#define SUBWORD_ENUMERATE_HPP

#include "subword/subword.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace subword {

enum class Algorithm { kInductive, kGreedyPositive, kGreedyNegative, kBfs };

std::string_view algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Facets by the right induction on the word: the last position is either
/// crossed (complex of Q minus its last letter and rho q_m) or a contact.
///
/// Pull-based; the pending-work stack never holds more than m + 1 items.
class InductiveEnumerator
{
public:
  explicit InductiveEnumerator(const Instance& inst);

  bool next();
  const std::vector<bool>& membership() const { return current_; }

private:
  struct Item
  {
    int length;          // prefix of the word still to decide
    Element rho;
    std::vector<bool> mask;
  };

  const Instance* inst_;
  std::vector<Item> pending_;
  std::vector<bool> current_;
};

/// Depth-first traversal of a greedy flip tree.
///
/// Only the live facet, its greedy index and the path back to the root are
/// kept. Children are flips bounded by the greedy index: for the negative
/// tree the positions j <= gamma whose root is negative, visited in
/// decreasing order; for the positive tree the flippable positions
/// i >= gamma with positive root, in increasing order. Backtracking re-flips
/// the partner position.
class GreedyEnumerator
{
public:
  GreedyEnumerator(const Instance& inst, Sign sign);
  /// Traverses the subtree below an arbitrary tree node.
  GreedyEnumerator(const Instance& inst, Sign sign, Facet start, int gamma);

  bool next();

  const Facet& facet() const { return facet_; }
  Sign sign() const { return sign_; }
  int gamma() const { return stack_.empty() ? 0 : stack_.back().gamma; }

  /// Flips between the current facet and the traversal root.
  std::size_t depth() const { return stack_.empty() ? 0 : stack_.size() - 1; }

  /// The increasing flip (i, j), i < j, joining the current facet to its
  /// parent. Only meaningful when depth() > 0.
  std::pair<int, int> arc() const;

  /// Nodes deeper than this are not expanded (their subtrees are skipped).
  void set_depth_limit(std::size_t limit) { depth_limit_ = limit; }

  std::uint64_t flip_count() const { return flips_; }
  std::size_t max_depth() const { return max_depth_; }

private:
  struct Frame
  {
    int removed;   // position flipped out of the parent (0 at the root)
    int added;     // its partner, now in this facet
    int gamma;
    int cursor;    // next candidate child position
  };

  int next_child(Frame& frame) const;
  int do_flip(int pos);

  const Instance* inst_;
  Sign sign_;
  Facet facet_;
  std::vector<Frame> stack_;
  bool started_ = false;
  std::uint64_t flips_ = 0;
  std::size_t max_depth_ = 0;
  std::size_t depth_limit_ = static_cast<std::size_t>(-1);
};

using FacetCallback = std::function<void(const std::vector<bool>& membership)>;

/// Streams every facet to the callback; returns the facet count.
std::uint64_t for_each_facet(const Instance& inst, Algorithm algo, const FacetCallback& sink);

/// Facets as 1-based ascending position lists, sorted lexicographically.
std::vector<std::vector<int>> sorted_facets(const Instance& inst, Algorithm algo);

std::uint64_t count_facets(const Instance& inst, Algorithm algo);

struct GreedyTree
{
  struct Arc
  {
    int parent;
    int child;
    int i;   // smaller flipped position
    int j;   // larger flipped position
  };

  Sign sign;
  std::vector<std::vector<int>> nodes;   // preorder, node 0 is the root
  std::vector<int> gamma;                // greedy index per node
  std::vector<Arc> arcs;
};

GreedyTree greedy_tree(const Instance& inst, Sign sign);

/// Flip graph with vertices in lexicographic order. Each edge is oriented
/// along its increasing flip: `from` holds i, `to` holds j, i < j.
///
/// Stores every facet; exponential space, meant for cross-checks and export.
struct FlipGraph
{
  struct Edge
  {
    int from;
    int to;
    int i;
    int j;
  };

  std::vector<std::vector<int>> vertices;
  std::vector<Edge> edges;
};

FlipGraph flip_graph(const Instance& inst);

/// Concatenated positions ("34789"), comma separated once positions exceed 9.
std::string facet_label(const std::vector<int>& positions);

void write_dot(std::ostream& os, const FlipGraph& graph);
void write_dot(std::ostream& os, const GreedyTree& tree);

inline constexpr int kDefaultEulerCap = 16;

/// Reduced Euler characteristic, from an exhaustive scan of all 2^m subsets.
/// Throws CapExceeded when m > cap.
long euler_characteristic(const Instance& inst, int cap = kDefaultEulerCap);

} // namespace subword

#endif
