#include "subword/cli.hpp"

#include "subword/error.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace subword::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body)
{
  try {
    return body();
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const EmptyComplex& e) {
    err << e.what() << '\n';
    return kExitUser;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUser;
  }
}

void print_positions(std::ostream& out, const std::vector<int>& pos)
{
  for (std::size_t k = 0; k < pos.size(); ++k) out << (k ? " " : "") << pos[k];
  out << '\n';
}

std::vector<int> parse_int_list(const std::string& text, std::string_view what)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']' ||
        c == '{' || c == '}') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 9)
      throw ParseError("expected " + std::string(what) + " at '" + text.substr(start, 8) + "'", 1,
                       static_cast<int>(start) + 1);
    out.push_back(std::stoi(text.substr(start, pos - start)));
  }
  return out;
}

} // namespace

std::shared_ptr<const CoxeterSystem> load_group(const std::string& group)
{
  if (group.empty()) throw Error("no group given");
  std::error_code ec;
  if (std::filesystem::is_regular_file(group, ec)) {
    std::ifstream in(group);
    if (!in) throw Error("cannot open matrix file '" + group + "'");
    try {
      return std::make_shared<const CoxeterSystem>(CoxeterSystem::build(CoxeterMatrix::parse(in)));
    } catch (const ParseError& e) {
      throw Error(group + ":" + e.what());
    }
  }
  return std::make_shared<const CoxeterSystem>(CoxeterSystem::from_type(group));
}

Element parse_rho(const CoxeterSystem& sys, const std::string& text)
{
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text.compare(first, 2, "w0") == 0 &&
      text.find_first_not_of(" \t", first + 2) == std::string::npos)
    return longest_element(sys);
  if (first != std::string::npos && text[first] == '[') {
    if (!typea::is_type_a(sys))
      throw Error("permutation notation for rho is only accepted in type A");
    auto perm = parse_int_list(text, "a permutation entry");
    if (perm.size() != static_cast<std::size_t>(sys.rank()) + 1)
      throw Error("permutation must have " + std::to_string(sys.rank() + 1) + " entries");
    return Element::from_word(sys, typea::word_from_permutation(perm));
  }
  return Element::from_word(sys, parse_word(text, sys.rank()));
}

Instance load_instance(const InstanceSpec& spec)
{
  auto sys = load_group(spec.group);
  Word word;
  try {
    word = parse_word(spec.word, sys->rank());
  } catch (const ParseError& e) {
    throw Error(std::string("--word ") + e.what());
  }
  Element rho = Element::identity(*sys);
  try {
    rho = parse_rho(*sys, spec.rho);
  } catch (const ParseError& e) {
    throw Error(std::string("--rho ") + e.what());
  }
  return Instance(sys, std::move(word), rho);
}

std::pair<int, int> parse_range(const std::string& text)
{
  auto colon = text.find(':');
  auto number = [&](std::size_t from, std::size_t to) {
    std::string tok = text.substr(from, to - from);
    if (tok.empty() || tok.size() > 6 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed range '" + text + "'", 1, static_cast<int>(from) + 1);
    return std::stoi(tok);
  };
  if (colon == std::string::npos) {
    int v = number(0, text.size());
    return {v, v};
  }
  int lo = number(0, colon), hi = number(colon + 1, text.size());
  if (lo > hi) throw ParseError("empty range '" + text + "'", 1, 1);
  return {lo, hi};
}

std::vector<int> parse_positions(const std::string& text)
{
  return parse_int_list(text, "a position");
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const InstanceSpec& spec, Algorithm algo, bool sort, std::ostream& out,
                  std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    if (sort) {
      for (const auto& f : sorted_facets(inst, algo)) print_positions(out, f);
      return kExitOk;
    }
    std::vector<int> pos;
    for_each_facet(inst, algo, [&](const std::vector<bool>& mask) {
      pos.clear();
      for (std::size_t k = 0; k < mask.size(); ++k)
        if (mask[k]) pos.push_back(static_cast<int>(k) + 1);
      print_positions(out, pos);
    });
    return kExitOk;
  });
}

int cmd_count(const InstanceSpec& spec, Algorithm algo, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    out << count_facets(inst, algo) << '\n';
    return kExitOk;
  });
}

int cmd_greedy(const InstanceSpec& spec, Sign sign, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    if (!inst.nonempty()) throw EmptyComplex();
    print_positions(out, greedy_facet(inst, sign).positions());
    return kExitOk;
  });
}

int cmd_tree(const InstanceSpec& spec, Sign sign, bool dot, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    if (!inst.nonempty()) throw EmptyComplex();
    auto tree = greedy_tree(inst, sign);
    if (dot) {
      write_dot(out, tree);
      return kExitOk;
    }
    // indented preorder, '|' placed at the greedy index
    std::vector<int> depth(tree.nodes.size(), 0);
    for (const auto& a : tree.arcs) depth[a.child] = depth[a.parent] + 1;
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
      out << std::string(2 * depth[v], ' ');
      const auto& nodes = tree.nodes[v];
      const int g = tree.gamma[v];
      bool wide = std::any_of(nodes.begin(), nodes.end(), [](int p) { return p > 9; });
      bool barred = false;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        bool after = sign == Sign::kNegative ? nodes[k] > g : nodes[k] >= g;
        if (after && !barred) {
          out << '|';
          barred = true;
        } else if (wide && k) {
          out << ',';
        }
        out << nodes[k];
      }
      if (!barred) out << '|';
      out << '\n';
    }
    return kExitOk;
  });
}

int cmd_graph(const InstanceSpec& spec, bool dot, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    auto graph = flip_graph(inst);
    if (dot) {
      write_dot(out, graph);
      return kExitOk;
    }
    for (const auto& e : graph.edges)
      out << facet_label(graph.vertices[e.from]) << " -> " << facet_label(graph.vertices[e.to])
          << " (" << e.i << "," << e.j << ")\n";
    return kExitOk;
  });
}

int cmd_render(const InstanceSpec& spec, const std::string& facet, typea::RenderFormat format,
               std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    typea::require_type_a(inst.system());
    if (!inst.nonempty()) throw EmptyComplex();
    Facet f = facet.empty() ? positive_greedy(inst)
                            : facet_from_positions(inst, parse_positions(facet));
    out << typea::render(typea::arrangement(inst, f), format);
    return kExitOk;
  });
}

int cmd_check(const InstanceSpec& spec, int cap, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    auto inst = load_instance(spec);
    if (!inst.nonempty()) throw EmptyComplex();
    const auto& sys = inst.system();
    Element delta = demazure(sys, inst.word());
    bool sphere = delta == inst.rho();
    out << "result: " << (sphere ? "sphere" : "ball") << '\n';
    out << "demazure_product: " << format_word(reduced_word(sys, delta)) << '\n';
    out << "dimension: " << inst.size() - inst.rho().length() - 1 << '\n';
    if (inst.size() <= cap) {
      long chi = euler_characteristic(inst, cap);
      out << "reduced_euler_characteristic: " << chi << '\n';
      long expected = sphere ? ((inst.size() - inst.rho().length() - 1) % 2 == 0 ? 1 : -1) : 0;
      if (chi != expected)
        throw InvariantViolation("Euler characteristic disagrees with the sphere/ball criterion");
    }
    return kExitOk;
  });
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err)
{
  const char* usage =
    "usage: subword bench --type A|B|D --k-range LO[:HI] --n-range LO[:HI] "
    "--algos inductive,greedy-pos,greedy-neg,bfs [--repeat R]\n";
  std::pair<int, int> ks, ns;
  std::vector<Algorithm> algos;
  try {
    ks = parse_range(opts.k_range);
    ns = parse_range(opts.n_range);
    for (const auto& a : opts.algos) {
      auto parsed = parse_algorithm(a);
      if (!parsed) throw Error("unknown algorithm '" + a + "'");
      algos.push_back(*parsed);
    }
    if (algos.empty()) throw Error("no algorithms selected");
    if (opts.repeat < 1) throw Error("--repeat must be positive");
    if (opts.type != "A" && opts.type != "B" && opts.type != "D")
      throw Error("bench type must be A, B or D");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n' << usage;
    return kExitUser;
  }

  return guarded(err, [&] {
    out << kBenchHeader << '\n';
    for (int n = ns.first; n <= ns.second; ++n) {
      const std::string label = opts.type + std::to_string(n);
      auto sys = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_type(label));
      Word c(n);
      for (int i = 0; i < n; ++i) c[i] = i;
      for (int k = ks.first; k <= ks.second; ++k) {
        Instance inst(sys, multicluster_word(*sys, c, k), longest_element(*sys));
        std::vector<BenchRecord> rows;
        for (auto algo : algos) {
          std::uint64_t count = 0;
          auto start = std::chrono::steady_clock::now();
          for (int r = 0; r < opts.repeat; ++r) count = count_facets(inst, algo);
          auto stop = std::chrono::steady_clock::now();
          double ms = std::chrono::duration<double, std::milli>(stop - start).count() / opts.repeat;
          rows.push_back({label, k, n, inst.size(), count, ms,
                          count ? 1000.0 * ms / static_cast<double>(count) : 0.0,
                          std::string(algorithm_name(algo))});
        }
        for (const auto& r : rows)
          if (r.facets != rows.front().facets)
            throw InvariantViolation("facet counts disagree on " + label + " k=" +
                                     std::to_string(k) + ": " + rows.front().algo + "=" +
                                     std::to_string(rows.front().facets) + ", " + r.algo + "=" +
                                     std::to_string(r.facets));
        for (const auto& r : rows)
          out << r.type << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.facets << ','
              << std::fixed << std::setprecision(3) << r.total_ms << ',' << r.us_per_facet << ','
              << r.algo << '\n'
              << std::defaultfloat;
      }
    }
    return kExitOk;
  });
}

} // namespace subword::cli
