// Command-line front end for subword complex enumeration.

#include "subword/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace subword;

namespace {

void add_instance_options(CLI::App* app, cli::InstanceSpec& spec)
{
  app->add_option("-g,--group", spec.group, "type string (A3, B4, H3, I2(5)) or Coxeter matrix file")
    ->required();
  app->add_option("-q,--word", spec.word, "word Q, e.g. \"s2 s3 s1\"")->required();
  app->add_option("-r,--rho", spec.rho, "rho as a word, \"w0\", or [4,1,3,2] in type A")
    ->default_val("");
}

Sign parse_sign(const std::string& s)
{
  return s == "+" || s == "pos" || s == "positive" ? Sign::kPositive : Sign::kNegative;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Facet enumeration for subword complexes on finite Coxeter groups"};
  app.require_subcommand(1);

  cli::InstanceSpec spec;
  std::string algo = "greedy-neg";
  std::string sign = "-";
  bool sort = false;
  bool dot = false;
  std::string facet;
  std::string format = "ascii";
  int cap = kDefaultEulerCap;
  cli::BenchOptions bench;
  std::string algos = "inductive,greedy-neg";

  const std::vector<std::string> algo_names{"inductive", "greedy-pos", "greedy-neg", "bfs"};
  const std::vector<std::string> sign_names{"+", "-", "pos", "neg", "positive", "negative"};

  auto* enumerate = app.add_subcommand("enumerate", "print one facet per line");
  add_instance_options(enumerate, spec);
  enumerate->add_option("--algo", algo)->check(CLI::IsMember(algo_names));
  enumerate->add_flag("--sort", sort, "sort facets lexicographically");

  auto* count = app.add_subcommand("count", "print the number of facets");
  add_instance_options(count, spec);
  count->add_option("--algo", algo)->check(CLI::IsMember(algo_names));

  auto* greedy = app.add_subcommand("greedy", "print the positive or negative greedy facet");
  add_instance_options(greedy, spec);
  greedy->add_option("--sign", sign)->check(CLI::IsMember(sign_names));

  auto* tree = app.add_subcommand("tree", "print a greedy flip tree");
  add_instance_options(tree, spec);
  tree->add_option("--sign", sign)->check(CLI::IsMember(sign_names));
  tree->add_flag("--dot", dot, "Graphviz output");

  auto* graph = app.add_subcommand("graph", "print the increasing flip graph");
  add_instance_options(graph, spec);
  graph->add_flag("--dot", dot, "Graphviz output");

  auto* render = app.add_subcommand("render", "draw a facet as a pseudoline arrangement (type A)");
  add_instance_options(render, spec);
  render->add_option("--facet", facet, "facet positions, default the positive greedy facet");
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* check = app.add_subcommand("check", "decide sphere or ball");
  add_instance_options(check, spec);
  check->add_option("--cap", cap, "largest word length for the face scan");

  auto* bench_cmd = app.add_subcommand("bench", "time multicluster instances, CSV output");
  bench_cmd->add_option("--type", bench.type)->default_val("A");
  bench_cmd->add_option("--k-range", bench.k_range)->default_val("1");
  bench_cmd->add_option("--n-range", bench.n_range)->default_val("2:5");
  bench_cmd->add_option("--algos", algos)->default_val("inductive,greedy-neg");
  bench_cmd->add_option("--repeat", bench.repeat)->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUser;
  }

  auto parsed_algo = *parse_algorithm(algo);
  if (*enumerate)
    return cli::cmd_enumerate(spec, parsed_algo, sort, std::cout, std::cerr);
  if (*count)
    return cli::cmd_count(spec, parsed_algo, std::cout, std::cerr);
  if (*greedy)
    return cli::cmd_greedy(spec, parse_sign(sign), std::cout, std::cerr);
  if (*tree)
    return cli::cmd_tree(spec, parse_sign(sign), dot, std::cout, std::cerr);
  if (*graph)
    return cli::cmd_graph(spec, dot, std::cout, std::cerr);
  if (*render)
    return cli::cmd_render(spec, facet,
                           format == "svg" ? typea::RenderFormat::kSvg : typea::RenderFormat::kAscii,
                           std::cout, std::cerr);
  if (*check)
    return cli::cmd_check(spec, cap, std::cout, std::cerr);
  if (*bench_cmd) {
    bench.algos.clear();
    std::stringstream ss(algos);
    for (std::string a; std::getline(ss, a, ',');)
      if (!a.empty()) bench.algos.push_back(a);
    return cli::cmd_bench(bench, std::cout, std::cerr);
  }
  return cli::kExitUser;
}
