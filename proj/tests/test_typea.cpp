#include "oracle.hpp"

#include "subword/error.hpp"
#include "subword/typea.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace subword;
using namespace subword::typea;

namespace {

std::shared_ptr<const CoxeterSystem> system_of(const std::string& type)
{
  return std::make_shared<const CoxeterSystem>(CoxeterSystem::from_type(type));
}

Instance running_example()
{
  return Instance(system_of("A3"), parse_word("s2 s3 s1 s3 s2 s1 s2 s3 s1", 3),
                  word_from_permutation({4, 1, 3, 2}));
}

std::string slurp(const std::string& name)
{
  std::ifstream in(std::string(SUBWORD_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("type detection")
{
  CHECK(is_type_a(*system_of("A1")));
  CHECK(is_type_a(*system_of("A4")));
  CHECK_FALSE(is_type_a(*system_of("B3")));
  CHECK_FALSE(is_type_a(*system_of("D4")));
  CHECK_FALSE(is_type_a(*system_of("I2(5)")));
  CHECK_THROWS_AS(require_type_a(*system_of("H3")), NotTypeA);

  Instance h3(system_of("H3"), Word{0, 1}, Word{});
  CHECK_THROWS_AS(arrangement(h3, positive_greedy(h3)), NotTypeA);
}

TEST_CASE("networks")
{
  auto net = network_from_word(parse_word("s2 s3 s1", 3), 3);
  CHECK(net.levels == 4);
  CHECK(net.commutators == std::vector<int>{2, 3, 1});
  CHECK_THROWS_AS(network_from_word(Word{3}, 3), NotTypeA);
}

TEST_CASE("permutations to words")
{
  CHECK(word_from_permutation({1, 2, 3}).empty());
  CHECK(word_from_permutation({2, 1}) == Word{0});
  CHECK(format_word(word_from_permutation({4, 1, 3, 2})).size() > 0);
  CHECK_THROWS_AS(word_from_permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(word_from_permutation({0, 1}), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> p(6);
    for (int i = 0; i < 6; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    auto w = word_from_permutation(p);
    auto back = oracle::perm_of_word(5, w);
    CHECK(back.v == p);
    CHECK(static_cast<int>(w.size()) == back.length());
  }
}

TEST_CASE("embedding of transposition roots")
{
  CHECK(embed_difference(2, 1, 3) == Root{1, 0, 0});
  CHECK(embed_difference(4, 2, 3) == Root{0, 1, 1});
  CHECK(embed_difference(1, 3, 3) == Root{-1, -1, 0});
}

TEST_CASE("running example arrangement")
{
  auto inst = running_example();
  auto arr = arrangement(inst, negative_greedy(inst));
  CHECK(arr.contacts() == std::vector<int>{3, 4, 7, 8, 9});
  CHECK(arr.crossing_count() == 4);
  CHECK(arr.right_order() == std::vector<int>{4, 1, 3, 2});
  CHECK(root_readout(arr, 1) == std::pair{3, 2});
}

TEST_CASE("root readout equals the root function")
{
  std::mt19937_64 rng(77);
  oracle::SystemCache cache;
  const std::vector<std::string> types{"A1", "A2", "A3", "A4", "A5"};
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = oracle::random_instance(rng, cache, types, 10);
    CAPTURE(format_word(inst.word()));
    const int n = inst.system().rank();
    for (const auto& pos : oracle::brute_force_facets(inst)) {
      auto f = facet_from_positions(inst, pos);
      auto arr = arrangement(inst, f);
      CHECK(arr.contacts() == pos);
      CHECK(arr.crossing_count() == inst.rho().length());
      CHECK(arr.right_order() == oracle::perm_of_word(n, inst.rho_word()).v);
      for (int k = 1; k <= inst.size(); ++k) {
        auto [top, bottom] = root_readout(arr, k);
        CHECK(inst.system().root(f.root(k)) == embed_difference(top, bottom, n));
      }
    }
  }
}

TEST_CASE("ascii rendering golden files")
{
  auto inst = running_example();
  CHECK(render(arrangement(inst, positive_greedy(inst)), RenderFormat::kAscii) ==
        slurp("running_example_positive.txt"));
  CHECK(render(arrangement(inst, negative_greedy(inst)), RenderFormat::kAscii) ==
        slurp("running_example_negative.txt"));
}

TEST_CASE("svg rendering")
{
  auto inst = running_example();
  auto svg = render(arrangement(inst, positive_greedy(inst)), RenderFormat::kSvg);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  std::size_t polylines = 0, lines = 0;
  for (std::size_t at = 0; (at = svg.find("<polyline", at)) != std::string::npos; ++at) ++polylines;
  for (std::size_t at = 0; (at = svg.find("<line ", at)) != std::string::npos; ++at) ++lines;
  CHECK(polylines == 4);
  CHECK(lines == 9);
  CHECK(svg.find("</svg>") != std::string::npos);
}
