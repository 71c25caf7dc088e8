#include "subword/enumerate.hpp"

#include "subword/error.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_map>

namespace subword {

std::string_view algorithm_name(Algorithm algo)
{
  switch (algo) {
  case Algorithm::kInductive: return "inductive";
  case Algorithm::kGreedyPositive: return "greedy-pos";
  case Algorithm::kGreedyNegative: return "greedy-neg";
  case Algorithm::kBfs: return "bfs";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
  for (auto a : {Algorithm::kInductive, Algorithm::kGreedyPositive, Algorithm::kGreedyNegative,
                 Algorithm::kBfs})
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

InductiveEnumerator::InductiveEnumerator(const Instance& inst) : inst_(&inst)
{
  if (inst.nonempty())
    pending_.push_back({inst.size(), inst.rho(), std::vector<bool>(inst.size(), false)});
}

bool InductiveEnumerator::next()
{
  const auto& sys = inst_->system();
  const std::span<const Generator> word(inst_->word());
  while (!pending_.empty()) {
    Item item = std::move(pending_.back());
    pending_.pop_back();
    if (item.length == 0) {
      current_ = std::move(item.mask);
      return true;
    }
    const int last = item.length - 1;
    const Generator q = word[last];
    // cases: rho not in the shorter word / q_m ascent of rho / both branches
    const bool fits_without_last = contains(sys, word.first(last), item.rho);
    const bool ascent = !item.rho.is_right_descent(q);
    if (fits_without_last) {
      Item with_last{last, item.rho, item.mask};
      with_last.mask[last] = true;
      if (!ascent) {
        Item crossed{last, std::move(item.rho), std::move(item.mask)};
        crossed.rho.multiply_right(sys, q);
        pending_.push_back(std::move(crossed));
      }
      pending_.push_back(std::move(with_last));
    } else {
      item.rho.multiply_right(sys, q);
      item.length = last;
      pending_.push_back(std::move(item));
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

GreedyEnumerator::GreedyEnumerator(const Instance& inst, Sign sign)
: inst_(&inst), sign_(sign)
{
  if (!inst.nonempty()) return;
  facet_ = greedy_facet(inst, sign);
  int gamma = sign == Sign::kNegative ? inst.size() : 1;
  stack_.reserve(inst.size() + 1);
  stack_.push_back({0, 0, gamma, gamma});
}

GreedyEnumerator::GreedyEnumerator(const Instance& inst, Sign sign, Facet start, int gamma)
: inst_(&inst), sign_(sign), facet_(std::move(start))
{
  stack_.reserve(inst.size() + 1);
  stack_.push_back({0, 0, gamma, gamma});
}

int GreedyEnumerator::next_child(Frame& frame) const
{
  const auto& sys = inst_->system();
  const int m = facet_.size();
  if (sign_ == Sign::kNegative) {
    for (int j = frame.cursor; j >= 1; --j) {
      // a negative root is always flippable, and its partner lies before j
      if (facet_.contains(j) && !sys.is_positive(facet_.root(j))) {
        frame.cursor = j - 1;
        return j;
      }
    }
    frame.cursor = 0;
  } else {
    for (int i = std::max(frame.cursor, 1); i <= m; ++i) {
      if (facet_.contains(i) && sys.is_positive(facet_.root(i)) &&
          inst_->in_inv_rho_inv(facet_.root(i))) {
        frame.cursor = i + 1;
        return i;
      }
    }
    frame.cursor = m + 1;
  }
  return 0;
}

int GreedyEnumerator::do_flip(int pos)
{
  ++flips_;
  return flip_in_place(*inst_, facet_, pos);
}

bool GreedyEnumerator::next()
{
  if (!started_) {
    started_ = true;
    return !stack_.empty();
  }
  while (!stack_.empty()) {
    int c = stack_.size() - 1 < depth_limit_ ? next_child(stack_.back()) : 0;
    if (c) {
      int partner = do_flip(c);
      int gamma = sign_ == Sign::kNegative ? c - 1 : c + 1;
      stack_.push_back({c, partner, gamma, gamma});
      max_depth_ = std::max(max_depth_, stack_.size() - 1);
      return true;
    }
    if (stack_.size() == 1) {
      stack_.clear();
      return false;
    }
    Frame done = stack_.back();
    stack_.pop_back();
    if (do_flip(done.added) != done.removed)
      throw InvariantViolation("greedy traversal failed to restore the parent facet");
  }
  return false;
}

std::pair<int, int> GreedyEnumerator::arc() const
{
  const auto& f = stack_.back();
  return {std::min(f.removed, f.added), std::max(f.removed, f.added)};
}

// ---------------------------------------------------------------------------

std::uint64_t for_each_facet(const Instance& inst, Algorithm algo, const FacetCallback& sink)
{
  std::uint64_t count = 0;
  switch (algo) {
  case Algorithm::kInductive: {
    InductiveEnumerator it(inst);
    while (it.next()) {
      sink(it.membership());
      ++count;
    }
    break;
  }
  case Algorithm::kGreedyPositive:
  case Algorithm::kGreedyNegative: {
    GreedyEnumerator it(inst, algo == Algorithm::kGreedyPositive ? Sign::kPositive : Sign::kNegative);
    while (it.next()) {
      sink(it.facet().membership());
      ++count;
    }
    break;
  }
  case Algorithm::kBfs: {
    auto graph = flip_graph(inst);
    std::vector<bool> mask(inst.size());
    for (const auto& v : graph.vertices) {
      std::fill(mask.begin(), mask.end(), false);
      for (int p : v) mask[p - 1] = true;
      sink(mask);
      ++count;
    }
    break;
  }
  }
  return count;
}

std::vector<std::vector<int>> sorted_facets(const Instance& inst, Algorithm algo)
{
  std::vector<std::vector<int>> out;
  for_each_facet(inst, algo, [&](const std::vector<bool>& mask) {
    std::vector<int> pos;
    for (std::size_t k = 0; k < mask.size(); ++k)
      if (mask[k]) pos.push_back(static_cast<int>(k) + 1);
    out.push_back(std::move(pos));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_facets(const Instance& inst, Algorithm algo)
{
  if (algo == Algorithm::kBfs) return flip_graph(inst).vertices.size();
  return for_each_facet(inst, algo, [](const std::vector<bool>&) {});
}

// ---------------------------------------------------------------------------

GreedyTree greedy_tree(const Instance& inst, Sign sign)
{
  GreedyTree tree{sign, {}, {}, {}};
  GreedyEnumerator it(inst, sign);
  std::vector<int> path; // node ids from the root to the current node
  while (it.next()) {
    int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(it.facet().positions());
    tree.gamma.push_back(it.gamma());
    path.resize(it.depth());
    if (!path.empty()) {
      auto [i, j] = it.arc();
      tree.arcs.push_back({path.back(), id, i, j});
    }
    path.push_back(id);
  }
  return tree;
}

FlipGraph flip_graph(const Instance& inst)
{
  FlipGraph graph;
  if (!inst.nonempty()) return graph;

  std::unordered_map<std::vector<bool>, int> seen;
  std::vector<Facet> facets;
  std::vector<FlipGraph::Edge> edges;
  facets.push_back(positive_greedy(inst));
  seen.emplace(facets.front().membership(), 0);
  for (std::size_t head = 0; head < facets.size(); ++head) {
    const Facet current = facets[head];
    for (int i = 1; i <= current.size(); ++i) {
      if (!current.contains(i) || !is_flippable(inst, current, i)) continue;
      auto [next, j] = flip(inst, current, i);
      auto [it, fresh] = seen.emplace(next.membership(), static_cast<int>(facets.size()));
      if (fresh) facets.push_back(std::move(next));
      if (i < j) edges.push_back({static_cast<int>(head), it->second, i, j});
    }
  }

  std::vector<int> order(facets.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::vector<std::vector<int>> pos(facets.size());
  for (std::size_t k = 0; k < facets.size(); ++k) pos[k] = facets[k].positions();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  std::vector<int> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);

  for (int k : order) graph.vertices.push_back(std::move(pos[k]));
  for (auto e : edges) graph.edges.push_back({rank[e.from], rank[e.to], e.i, e.j});
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return graph;
}

// ---------------------------------------------------------------------------

std::string facet_label(const std::vector<int>& positions)
{
  bool wide = std::any_of(positions.begin(), positions.end(), [](int p) { return p > 9; });
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (wide && k) out += ',';
    out += std::to_string(positions[k]);
  }
  return out;
}

void write_dot(std::ostream& os, const FlipGraph& graph)
{
  os << "digraph flip_graph {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << facet_label(graph.vertices[v]) << "\"];\n";
  for (const auto& e : graph.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.i << "," << e.j << ")\"];\n";
  os << "}\n";
}

void write_dot(std::ostream& os, const GreedyTree& tree)
{
  os << "digraph " << (tree.sign == Sign::kNegative ? "negative" : "positive")
     << "_greedy_tree {\n";
  for (std::size_t v = 0; v < tree.nodes.size(); ++v)
    os << "  n" << v << " [label=\"" << facet_label(tree.nodes[v]) << "\", gamma=" << tree.gamma[v]
       << "];\n";
  // negative arcs point toward the root, positive arcs away from it
  for (const auto& a : tree.arcs) {
    int from = tree.sign == Sign::kNegative ? a.child : a.parent;
    int to = tree.sign == Sign::kNegative ? a.parent : a.child;
    os << "  n" << from << " -> n" << to << " [label=\"(" << a.i << "," << a.j << ")\"];\n";
  }
  os << "}\n";
}

// ---------------------------------------------------------------------------

long euler_characteristic(const Instance& inst, int cap)
{
  const int m = inst.size();
  if (m > cap)
    throw CapExceeded("word length " + std::to_string(m) + " exceeds the face-scan cap " +
                      std::to_string(cap));
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<char> face(subsets, 0);
  bool any = false;
  for_each_facet(inst, Algorithm::kInductive, [&](const std::vector<bool>& mask) {
    std::size_t bits = 0;
    for (int k = 0; k < m; ++k)
      if (mask[k]) bits |= std::size_t{1} << k;
    face[bits] = 1;
    any = true;
  });
  if (!any) return 0;
  // close downward one coordinate at a time
  for (int b = 0; b < m; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < subsets; ++s)
      if ((s & bit) && face[s]) face[s ^ bit] = 1;
  }
  long chi = 0;
  for (std::size_t s = 0; s < subsets; ++s)
    if (face[s]) chi += (__builtin_popcountll(s) % 2 == 1) ? 1 : -1; // dim = |s| - 1
  return chi;
}

} // namespace subword
