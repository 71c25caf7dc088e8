#include "subword/cli.hpp"
#include "subword/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace subword;
using namespace subword::cli;

namespace {

const InstanceSpec kRunning{"A3", "s2 s3 s1 s3 s2 s1 s2 s3 s1", "[4,1,3,2]"};

struct Run
{
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& body)
{
  std::ostringstream out, err;
  int code = body(out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name)
{
  std::ifstream in(std::string(SUBWORD_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("enumerate and count")
{
  auto r = run([](auto& o, auto& e) { return cmd_enumerate(kRunning, Algorithm::kInductive, true, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "1 2 3 5 6\n1 2 3 6 7\n1 2 3 7 9\n1 3 4 5 6\n1 3 4 6 7\n1 3 4 7 9\n"
        "2 3 5 6 8\n2 3 6 7 8\n2 3 7 8 9\n3 4 5 6 8\n3 4 6 7 8\n3 4 7 8 9\n");

  for (auto a : {Algorithm::kInductive, Algorithm::kGreedyPositive, Algorithm::kGreedyNegative,
                 Algorithm::kBfs}) {
    auto c = run([&](auto& o, auto& e) { return cmd_count(kRunning, a, o, e); });
    CHECK(c.out == "12\n");
  }
}

TEST_CASE("greedy facets and empty complexes")
{
  auto pos = run([](auto& o, auto& e) { return cmd_greedy(kRunning, Sign::kPositive, o, e); });
  CHECK(pos.out == "1 2 3 5 6\n");
  auto neg = run([](auto& o, auto& e) { return cmd_greedy(kRunning, Sign::kNegative, o, e); });
  CHECK(neg.out == "3 4 7 8 9\n");

  InstanceSpec empty{"A2", "s1", "s2"};
  auto r = run([&](auto& o, auto& e) { return cmd_greedy(empty, Sign::kPositive, o, e); });
  CHECK(r.code == kExitUser);
  CHECK(r.out.empty());
  CHECK(r.err.find("empty complex") != std::string::npos);

  auto chk = run([&](auto& o, auto& e) { return cmd_check(empty, 16, o, e); });
  CHECK(chk.code == kExitUser);
  CHECK(chk.err.find("empty complex") != std::string::npos);
}

TEST_CASE("tree output")
{
  auto neg = run([](auto& o, auto& e) { return cmd_tree(kRunning, Sign::kNegative, false, o, e); });
  CHECK(neg.out ==
        "34789|\n"
        "  34678|\n"
        "    13467|\n"
        "      13456|\n"
        "        123|56\n"
        "      123|67\n"
        "    3456|8\n"
        "      23|568\n"
        "    23|678\n"
        "  1347|9\n"
        "    123|79\n"
        "  23|789\n");

  auto dot = run([](auto& o, auto& e) { return cmd_tree(kRunning, Sign::kPositive, true, o, e); });
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("digraph positive_greedy_tree {", 0) == 0);
  CHECK(dot.out.find("n0 -> n1 [label=\"(1,8)\"]") != std::string::npos);
}

TEST_CASE("graph output")
{
  auto r = run([](auto& o, auto& e) { return cmd_graph(kRunning, false, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("12356 -> 12367 (5,7)\n") != std::string::npos);
  auto d = run([](auto& o, auto& e) { return cmd_graph(kRunning, true, o, e); });
  CHECK(d.out.rfind("digraph flip_graph {", 0) == 0);
}

TEST_CASE("render")
{
  auto r = run([](auto& o, auto& e) {
    return cmd_render(kRunning, "", typea::RenderFormat::kAscii, o, e);
  });
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp("running_example_positive.txt"));

  auto n = run([](auto& o, auto& e) {
    return cmd_render(kRunning, "3,4,7,8,9", typea::RenderFormat::kAscii, o, e);
  });
  CHECK(n.out == slurp("running_example_negative.txt"));

  auto bad = run([](auto& o, auto& e) {
    return cmd_render(kRunning, "1 2 3 4 5", typea::RenderFormat::kAscii, o, e);
  });
  CHECK(bad.code == kExitUser);

  InstanceSpec b3{"B3", "s1 s2 s3", ""};
  auto not_a = run([&](auto& o, auto& e) { return cmd_render(b3, "", typea::RenderFormat::kSvg, o, e); });
  CHECK(not_a.code == kExitUser);
}

TEST_CASE("sphere or ball")
{
  auto r = run([](auto& o, auto& e) { return cmd_check(kRunning, 16, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "result: ball\n"
        "demazure_product: s1 s2 s3 s1 s2 s1\n"
        "dimension: 4\n"
        "reduced_euler_characteristic: 0\n");

  InstanceSpec sphere{"A2", "s1 s2 s1 s2 s1", "w0"};
  auto s = run([&](auto& o, auto& e) { return cmd_check(sphere, 16, o, e); });
  CHECK(s.out.find("result: sphere\n") != std::string::npos);
  CHECK(s.out.find("dimension: 1\n") != std::string::npos);
  CHECK(s.out.find("reduced_euler_characteristic: -1\n") != std::string::npos);

  auto capped = run([](auto& o, auto& e) { return cmd_check(kRunning, 4, o, e); });
  CHECK(capped.code == kExitOk);
  CHECK(capped.out.find("reduced_euler_characteristic") == std::string::npos);
}

TEST_CASE("input errors map to exit code 2")
{
  InstanceSpec bad_word{"A3", "s1 s9", ""};
  auto r = run([&](auto& o, auto& e) { return cmd_count(bad_word, Algorithm::kInductive, o, e); });
  CHECK(r.code == kExitUser);
  CHECK(r.err.find("1:4") != std::string::npos);

  InstanceSpec bad_group{"Q7", "s1", ""};
  CHECK(run([&](auto& o, auto& e) { return cmd_count(bad_group, Algorithm::kInductive, o, e); }).code ==
        kExitUser);

  InstanceSpec perm_outside_a{"B3", "s1", "[2,1,3,4]"};
  CHECK(run([&](auto& o, auto& e) { return cmd_count(perm_outside_a, Algorithm::kInductive, o, e); }).code ==
        kExitUser);

  InstanceSpec short_perm{"A3", "s1", "[2,1,3]"};
  CHECK(run([&](auto& o, auto& e) { return cmd_count(short_perm, Algorithm::kInductive, o, e); }).code ==
        kExitUser);
}

TEST_CASE("matrix files")
{
  auto dir = std::filesystem::temp_directory_path() / "subword_cli_test";
  std::filesystem::create_directories(dir);
  auto good = (dir / "h3.txt").string();
  std::ofstream(good) << "3\n1 5 2\n5 1 3\n2 3 1\n";
  InstanceSpec spec{good, "s1 s2 s3 s1 s2 s3", ""};
  auto r = run([&](auto& o, auto& e) { return cmd_count(spec, Algorithm::kGreedyNegative, o, e); });
  CHECK(r.code == kExitOk);

  auto bad = (dir / "bad.txt").string();
  std::ofstream(bad) << "2\n1 3\n3 q\n";
  InstanceSpec bad_spec{bad, "s1", ""};
  auto b = run([&](auto& o, auto& e) { return cmd_count(bad_spec, Algorithm::kInductive, o, e); });
  CHECK(b.code == kExitUser);
  CHECK(b.err.find(":3:3:") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("ranges and positions")
{
  CHECK(parse_range("3") == std::pair{3, 3});
  CHECK(parse_range("2:5") == std::pair{2, 5});
  CHECK_THROWS_AS(parse_range("5:2"), ParseError);
  CHECK_THROWS_AS(parse_range("a:2"), ParseError);
  CHECK_THROWS_AS(parse_range(""), ParseError);
  CHECK(parse_positions("{1, 3,4}") == std::vector<int>{1, 3, 4});
  CHECK_THROWS_AS(parse_positions("1 x"), ParseError);
}

TEST_CASE("bench csv")
{
  BenchOptions opts;
  opts.n_range = "2:3";
  opts.k_range = "1:2";
  opts.algos = {"inductive", "greedy-neg", "greedy-pos"};
  auto r = run([&](auto& o, auto& e) { return cmd_bench(opts, o, e); });
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == kBenchHeader);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 2 * 2 * 3);
  CHECK(r.out.find("A3,2,3,12,84,") != std::string::npos);
  CHECK(r.out.find("A2,1,2,5,5,") != std::string::npos);

  BenchOptions broken = opts;
  broken.n_range = "4:2";
  auto b = run([&](auto& o, auto& e) { return cmd_bench(broken, o, e); });
  CHECK(b.code == kExitUser);
  CHECK(b.out.empty());
  CHECK(b.err.find("usage:") != std::string::npos);

  BenchOptions unknown = opts;
  unknown.algos = {"quick"};
  CHECK(run([&](auto& o, auto& e) { return cmd_bench(unknown, o, e); }).code == kExitUser);
}
