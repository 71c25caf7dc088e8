#ifndef SUBWORD_CLI_HPP
#define SUBWORD_CLI_HPP

#include "subword/enumerate.hpp"
#include "subword/typea.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace subword::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 2;
inline constexpr int kExitInternal = 3;

struct InstanceSpec
{
  std::string group;   // type string ("A3", "I2(5)") or path to a matrix file
  std::string word;    // "s2 s3 s1 ..."
  std::string rho;     // word, "w0", or "[4,1,3,2]" in type A
};

std::shared_ptr<const CoxeterSystem> load_group(const std::string& group);
Element parse_rho(const CoxeterSystem& sys, const std::string& text);
Instance load_instance(const InstanceSpec& spec);

/// "3" or "2:5", inclusive; throws ParseError.
std::pair<int, int> parse_range(const std::string& text);
std::vector<int> parse_positions(const std::string& text);

int cmd_enumerate(const InstanceSpec& spec, Algorithm algo, bool sort, std::ostream& out,
                  std::ostream& err);
int cmd_count(const InstanceSpec& spec, Algorithm algo, std::ostream& out, std::ostream& err);
int cmd_greedy(const InstanceSpec& spec, Sign sign, std::ostream& out, std::ostream& err);
int cmd_tree(const InstanceSpec& spec, Sign sign, bool dot, std::ostream& out, std::ostream& err);
int cmd_graph(const InstanceSpec& spec, bool dot, std::ostream& out, std::ostream& err);
int cmd_render(const InstanceSpec& spec, const std::string& facet, typea::RenderFormat format,
               std::ostream& out, std::ostream& err);
int cmd_check(const InstanceSpec& spec, int cap, std::ostream& out, std::ostream& err);

struct BenchOptions
{
  std::string type = "A";
  std::string k_range = "1";
  std::string n_range = "2:5";
  std::vector<std::string> algos{"inductive", "greedy-neg"};
  int repeat = 1;
};

struct BenchRecord
{
  std::string type;
  int k;
  int n;
  int m;
  std::uint64_t facets;
  double total_ms;
  double us_per_facet;
  std::string algo;
};

inline constexpr const char* kBenchHeader = "type,k,n,m,facets,total_ms,us_per_facet,algo";

/// Multicluster instances c^k w0(c) with rho = w0 over the given ranges.
/// Counts are cross-checked between algorithms before any row is written.
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

} // namespace subword::cli

#endif
