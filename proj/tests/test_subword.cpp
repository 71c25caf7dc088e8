#include "oracle.hpp"

#include "subword/error.hpp"
#include "subword/typea.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace subword;

namespace {

std::shared_ptr<const CoxeterSystem> a3()
{
  static auto sys = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_type("A3"));
  return sys;
}

Instance running_example()
{
  return Instance(a3(), parse_word("s2 s3 s1 s3 s2 s1 s2 s3 s1", 3), parse_word("s2 s3 s2 s1", 3));
}

Facet facet_of(const Instance& inst, std::vector<int> pos) { return facet_from_positions(inst, pos); }

// sigma_X for X = positions in [lo, hi] outside the facet, multiplied in increasing order
Element sigma(const Instance& inst, const std::vector<int>& facet, int lo, int hi)
{
  Word w;
  for (int p = lo; p <= hi; ++p)
    if (!std::binary_search(facet.begin(), facet.end(), p)) w.push_back(inst.letter(p));
  return Element::from_word(inst.system(), w);
}

// root function straight from its definition
RootIndex root_oracle(const Instance& inst, const std::vector<int>& facet, int k)
{
  return sigma(inst, facet, 1, k - 1).apply(inst.letter(k));
}

bool negative_condition(const Instance& inst, const std::vector<int>& facet, int x)
{
  Word prefix(inst.word().begin(), inst.word().begin() + x);
  auto want = oracle::nu_first(inst.system(), prefix, sigma(inst, facet, 1, x));
  std::vector<int> have;
  for (int p : facet)
    if (p <= x) have.push_back(p);
  return have == want;
}

bool positive_condition(const Instance& inst, const std::vector<int>& facet, int x)
{
  const int m = inst.size();
  Word suffix(inst.word().begin() + (x - 1), inst.word().end());
  auto want = oracle::pi_first(inst.system(), suffix, sigma(inst, facet, x, m));
  std::vector<int> have;
  for (int p : facet)
    if (p >= x) have.push_back(p - x + 1);
  return have == want;
}

const std::vector<std::vector<int>> kRunningFacets{
  {1, 2, 3, 5, 6}, {1, 2, 3, 6, 7}, {1, 2, 3, 7, 9}, {1, 3, 4, 5, 6},
  {1, 3, 4, 6, 7}, {1, 3, 4, 7, 9}, {2, 3, 5, 6, 8}, {2, 3, 6, 7, 8},
  {2, 3, 7, 8, 9}, {3, 4, 5, 6, 8}, {3, 4, 6, 7, 8}, {3, 4, 7, 8, 9}};

} // namespace

TEST_CASE("running example facets by exhaustive search")
{
  auto inst = running_example();
  CHECK(inst.nonempty());
  CHECK(oracle::brute_force_facets(inst) == kRunningFacets);
  for (const auto& f : kRunningFacets) CHECK_NOTHROW(facet_of(inst, f));
  CHECK_THROWS_AS(facet_of(inst, {1, 2, 3, 4, 5}), NotAFacet);
  CHECK_THROWS_AS(facet_of(inst, {1, 2, 3}), NotAFacet);
}

TEST_CASE("running example greedy facets")
{
  auto inst = running_example();
  CHECK(positive_greedy(inst).positions() == std::vector<int>{1, 2, 3, 5, 6});
  CHECK(negative_greedy(inst).positions() == std::vector<int>{3, 4, 7, 8, 9});

  // drop the last letter, rho becomes rho s1
  Instance head(a3(), parse_word("s2 s3 s1 s3 s2 s1 s2 s3", 3), parse_word("s2 s3 s2", 3));
  CHECK(negative_greedy(head).positions() == std::vector<int>{3, 4, 6, 7, 8});

  // drop the first letter, rho becomes s2 rho
  Instance tail(a3(), parse_word("s3 s1 s3 s2 s1 s2 s3 s1", 3), parse_word("s3 s2 s1", 3));
  CHECK(positive_greedy(tail).positions() == std::vector<int>{1, 2, 4, 5, 7});
}

TEST_CASE("running example flips")
{
  auto inst = running_example();
  auto [f1, j1] = flip(inst, facet_of(inst, {1, 3, 4, 7, 9}), 1);
  CHECK(j1 == 8);
  CHECK(f1.positions() == std::vector<int>{3, 4, 7, 8, 9});

  auto nu = negative_greedy(inst);
  auto [f2, j2] = flip(inst, nu, 9);
  CHECK(j2 == 6);
  CHECK(f2.positions() == std::vector<int>{3, 4, 6, 7, 8});

  CHECK_THROWS_AS(flip(inst, nu, 5), NotFlippable);
}

TEST_CASE("running example greedy indices")
{
  auto inst = running_example();
  CHECK(negative_greedy_index(inst, facet_of(inst, {1, 3, 4, 7, 9})) == 7);
  CHECK(negative_greedy_index(inst, facet_of(inst, {3, 4, 7, 8, 9})) == 9);
  CHECK(positive_greedy_index(inst, facet_of(inst, {1, 2, 3, 5, 6})) == 1);
  CHECK(positive_greedy_index(inst, facet_of(inst, {1, 2, 3, 6, 7})) == 6);
  CHECK(positive_greedy_index(inst, facet_of(inst, {3, 4, 7, 8, 9})) == 7);
}

TEST_CASE("empty complexes")
{
  auto a2 = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_type("A2"));
  Instance inst(a2, Word{0}, Word{1});
  CHECK_FALSE(inst.nonempty());
  CHECK_FALSE(contains(*a2, Word{0}, Element::from_word(*a2, Word{1})));
  CHECK_THROWS_AS(positive_greedy(inst), EmptyComplex);
  CHECK_THROWS_AS(greedy_positions(*a2, Word{0}, inst.rho(), Sign::kNegative), EmptyComplex);

  Instance empty_word(a2, Word{}, Word{});
  CHECK(empty_word.nonempty());
  CHECK(positive_greedy(empty_word).positions().empty());
  CHECK(negative_greedy_index(empty_word, positive_greedy(empty_word)) == 0);
  CHECK(positive_greedy_index(empty_word, positive_greedy(empty_word)) == 1);
}

TEST_CASE("greedy facets agree with both recursive constructions")
{
  std::mt19937_64 rng(11);
  oracle::SystemCache cache;
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = oracle::random_instance(rng, cache, oracle::small_types(), 10);
    const auto& sys = inst.system();
    CAPTURE(format_word(inst.word()));
    auto pi = oracle::pi_first(sys, inst.word(), inst.rho());
    auto nu = oracle::nu_first(sys, inst.word(), inst.rho());
    CHECK(oracle::pi_second(sys, inst.word(), inst.rho()) == pi);
    CHECK(oracle::nu_second(sys, inst.word(), inst.rho()) == nu);
    CHECK(positive_greedy(inst).positions() == pi);
    CHECK(negative_greedy(inst).positions() == nu);
    for (auto sign : {Sign::kPositive, Sign::kNegative})
      CHECK(greedy_positions(sys, inst.word(), inst.rho(), sign, Sweep::kNonInversionsLate) ==
            greedy_positions(sys, inst.word(), inst.rho(), sign, Sweep::kInversionsEarly));
    auto facets = oracle::brute_force_facets(inst);
    CHECK(std::find(facets.begin(), facets.end(), pi) != facets.end());
    // first in lexicographic order, last when compared from the right
    CHECK(facets.front() == pi);
    std::vector<std::vector<int>> rev = facets;
    std::sort(rev.begin(), rev.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    CHECK(rev.back() == nu);
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("root function, flippability and flips against exhaustive search")
{
  std::mt19937_64 rng(23);
  oracle::SystemCache cache;
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = oracle::random_instance(rng, cache, oracle::small_types(), 9);
    CAPTURE(format_word(inst.word()));
    auto facets = oracle::brute_force_facets(inst);
    std::set<std::vector<int>> all(facets.begin(), facets.end());
    const int m = inst.size();
    for (const auto& pos : facets) {
      auto f = facet_of(inst, pos);
      for (int k = 1; k <= m; ++k) CHECK(f.root(k) == root_oracle(inst, pos, k));

      RootConfiguration config = root_configuration(inst, f);
      std::size_t flippable = 0;
      for (int i : pos) {
        // flippable iff exactly one other facet differs from I at i
        std::vector<std::vector<int>> neighbours;
        for (int j = 1; j <= m; ++j) {
          if (std::binary_search(pos.begin(), pos.end(), j)) continue;
          auto other = pos;
          other.erase(std::find(other.begin(), other.end(), i));
          other.insert(std::upper_bound(other.begin(), other.end(), j), j);
          if (all.count(other)) neighbours.push_back(other);
        }
        CHECK(neighbours.size() <= 1);
        CHECK(is_flippable(inst, f, i) == (neighbours.size() == 1));
        if (neighbours.size() != 1) continue;
        ++flippable;
        auto g = f;
        int j = flip_in_place(inst, g, i);
        CHECK(g.positions() == neighbours.front());
        CHECK(g == facet_of(inst, neighbours.front()));
        const auto& sys = inst.system();
        CHECK(sys.positive_part(f.root(i)) == sys.positive_part(g.root(j)));
        // roots strictly after min(i, j) up to max(i, j) are reflected, the rest kept
        for (int k = 1; k <= m; ++k) {
          bool inside = k > std::min(i, j) && k <= std::max(i, j);
          CHECK(g.root(k) == (inside ? sys.reflect(f.root(i), f.root(k)) : f.root(k)));
        }
        CHECK(flip_in_place(inst, g, j) == i);
        CHECK(g == f);
      }
      CHECK(config.size() == flippable);
    }
  }
}

TEST_CASE("greedy index conditions form intervals")
{
  std::mt19937_64 rng(31);
  oracle::SystemCache cache;
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = oracle::random_instance(rng, cache, oracle::small_types(), 9);
    CAPTURE(format_word(inst.word()));
    const int m = inst.size();
    for (const auto& pos : oracle::brute_force_facets(inst)) {
      auto f = facet_of(inst, pos);
      int gm = negative_greedy_index(inst, f);
      int gp = positive_greedy_index(inst, f);
      for (int x = 0; x <= m; ++x) CHECK(negative_condition(inst, pos, x) == (x <= gm));
      for (int x = 1; x <= m + 1; ++x) CHECK(positive_condition(inst, pos, x) == (x >= gp));
    }
    if (inst.nonempty()) {
      CHECK(negative_greedy_index(inst, negative_greedy(inst)) == m);
      CHECK(positive_greedy_index(inst, positive_greedy(inst)) == 1);
    }
  }
}

TEST_CASE("reversed instances mirror facets")
{
  std::mt19937_64 rng(47);
  oracle::SystemCache cache;
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = oracle::random_instance(rng, cache, oracle::small_types(), 9);
    auto rev = reverse_instance(inst);
    const int m = inst.size();
    auto mirror = [&](std::vector<int> pos) {
      for (auto& p : pos) p = m + 1 - p;
      std::sort(pos.begin(), pos.end());
      return pos;
    };
    std::set<std::vector<int>> a, b;
    for (const auto& f : oracle::brute_force_facets(inst)) a.insert(mirror(f));
    for (const auto& f : oracle::brute_force_facets(rev)) b.insert(f);
    CHECK(a == b);
    if (inst.nonempty())
      CHECK(positive_greedy(rev).positions() == mirror(negative_greedy(inst).positions()));
  }
}
