#include "cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brauer/algebra.hpp"
#include "brauer/cartan.hpp"
#include "brauer/enumerate.hpp"
#include "brauer/homotopy.hpp"
#include "brauer/io.hpp"
#include "brauer/server.hpp"
#include "brauer/verify.hpp"
#include "httplib.h"

namespace brauer::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit 1: the input was read but failed a check.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_edge(const BrauerTree& t, EdgeId i) {
  if (!t.has_edge(i)) {
    throw UsageError("--edge " + std::to_string(i) + " is not an edge (tree has edges 1.." +
                     std::to_string(t.edge_count()) + ")");
  }
}

VertexIndex require_vertex(const BrauerTree& t, const std::string& id) {
  if (auto v = t.find_vertex(id)) return *v;
  throw UsageError("--vertex " + id + " is not a vertex of the tree");
}

void require_enumerable(int n, bool labeled) {
  const int limit = labeled ? kMaxLabeledEdges : kMaxEnumerationEdges;
  if (n < 1 || n > limit) {
    throw UsageError("--edges must be in 1.." + std::to_string(limit) + (labeled ? " with --labeled" : ""));
  }
}

std::optional<int> mult_spec(int m) {
  if (m < 1) throw UsageError("--mult must be >= 1");
  if (m == 1) return std::nullopt;
  return m;
}

IntMatrix endo_cartan(const BrauerTree& t, std::optional<EdgeId> mutated, IntMatrix* quiver_out) {
  const auto a = build_algebra(t);
  std::set<EdgeId> e0;
  for (EdgeId j = 1; j <= t.edge_count(); ++j)
    if (!mutated || j != *mutated) e0.insert(j);
  const auto end = endomorphism_algebra(a.algebra, or_complex(a.algebra, e0));
  if (quiver_out) *quiver_out = quiver(end);
  return cartan_count(end);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer trees, their mutation, and tilting mutation of Brauer tree algebras"};
  app.name("brauer");
  app.require_subcommand(1);
  std::function<int()> action;

  // validate
  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a tree file and print it canonically");
  validate->add_option("file", file, "Tree JSON file")->required();
  validate->callback([&] {
    action = [&] {
      const auto result = io::parse_tree(io::read_text_file(file));
      if (result.ok()) {
        out << io::print_tree(*result.tree);
        return 0;
      }
      for (const auto& issue : result.issues) err << to_string(issue.kind) << ": " << issue.message << "\n";
      return 1;
    };
  });

  // mutate
  EdgeId edge = 0;
  std::string output;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a tree at an edge");
  mutate_cmd->add_option("file", file, "Tree JSON file")->required();
  mutate_cmd->add_option("--edge", edge, "Edge to mutate")->required();
  mutate_cmd->add_option("-o,--output", output, "Write the result here instead of stdout");
  mutate_cmd->callback([&] {
    action = [&] {
      const auto t = io::read_tree_file(file);
      require_edge(t, edge);
      const auto text = io::print_tree(mutate(t, edge));
      if (output.empty()) {
        out << text;
      } else {
        io::write_text_file(output, text);
      }
      return 0;
    };
  });

  // cartan
  std::string method = "formula";
  auto* cartan_cmd = app.add_subcommand("cartan", "Print the Cartan matrix of the tree algebra");
  cartan_cmd->add_option("file", file, "Tree JSON file")->required();
  cartan_cmd->add_option("--method", method, "formula | count | endo")
      ->check(CLI::IsMember({"formula", "count", "endo"}));
  cartan_cmd->callback([&] {
    action = [&] {
      const auto t = io::read_tree_file(file);
      IntMatrix c;
      if (method == "formula") {
        c = cartan_formula(t);
      } else if (method == "count") {
        c = cartan_count(build_algebra(t).algebra);
      } else {
        c = endo_cartan(t, std::nullopt, nullptr);
      }
      out << io::matrix_to_json(c).dump() << "\n";
      return 0;
    };
  });

  // ext
  auto* ext_cmd = app.add_subcommand("ext", "Print the Ext-quiver arrow counts");
  ext_cmd->add_option("file", file, "Tree JSON file")->required();
  ext_cmd->callback([&] {
    action = [&] {
      out << io::matrix_to_json(ext_formula(io::read_tree_file(file))).dump() << "\n";
      return 0;
    };
  });

  // endo
  auto* endo_cmd = app.add_subcommand("endo", "Cartan matrix and quiver of End(T) for the mutation at an edge");
  endo_cmd->add_option("file", file, "Tree JSON file")->required();
  endo_cmd->add_option("--edge", edge, "Edge left out of the stalk part")->required();
  endo_cmd->callback([&] {
    action = [&] {
      const auto t = io::read_tree_file(file);
      require_edge(t, edge);
      IntMatrix q;
      const auto c = endo_cartan(t, edge, &q);
      out << json{{"cartan", io::matrix_to_json(c)}, {"quiver", io::matrix_to_json(q)}}.dump() << "\n";
      return 0;
    };
  });

  // reconstruct
  std::string cartan_file;
  std::string ext_file;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a tree from Cartan and Ext matrices");
  reconstruct_cmd->add_option("cartan", cartan_file, "Cartan matrix JSON file")->required();
  reconstruct_cmd->add_option("ext", ext_file, "Ext matrix JSON file")->required();
  reconstruct_cmd->callback([&] {
    action = [&] {
      const auto c = io::read_matrix_file(cartan_file);
      const auto x = io::read_matrix_file(ext_file);
      if (c.size() != x.size()) throw CheckFailed("matrices have different sizes");
      try {
        out << io::print_tree(reconstruct(c, x));
      } catch (const BrauerError& e) {
        throw CheckFailed(e.what());
      }
      return 0;
    };
  });

  // to-star
  std::string vertex;
  auto* star_cmd = app.add_subcommand("to-star", "Mutation sequence turning the tree into a star at a vertex");
  star_cmd->add_option("file", file, "Tree JSON file")->required();
  star_cmd->add_option("--vertex", vertex, "Vertex id of the centre")->required();
  star_cmd->callback([&] {
    action = [&] {
      const auto t = io::read_tree_file(file);
      const auto v = require_vertex(t, vertex);
      const auto seq = to_star_sequence(t, v);
      BrauerTree final_tree = t;
      for (EdgeId e : seq) final_tree = mutate(final_tree, e);
      out << json{{"vertex", vertex}, {"sequence", seq}, {"final", io::tree_to_json(final_tree)}}.dump() << "\n";
      return 0;
    };
  });

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Smallest s with the s-th power of the mutation fixing the tree");
  orbit_cmd->add_option("file", file, "Tree JSON file")->required();
  orbit_cmd->add_option("--edge", edge, "Edge to mutate")->required();
  orbit_cmd->callback([&] {
    action = [&] {
      const auto t = io::read_tree_file(file);
      require_edge(t, edge);
      out << json{{"edge", edge}, {"order", orbit_order(t, edge)}}.dump() << "\n";
      return 0;
    };
  });

  // enumerate / mutation-graph
  int edges = 0;
  int mult = 1;
  bool labeled = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All Brauer trees with a given number of edges");
  enumerate_cmd->add_option("--edges", edges, "Number of edges")->required();
  enumerate_cmd->add_option("--mult", mult, "Multiplicity of the exceptional vertex (1 = none)");
  enumerate_cmd->add_flag("--labeled", labeled, "Distinguish edge labels");
  enumerate_cmd->callback([&] {
    action = [&] {
      require_enumerable(edges, labeled);
      const auto family = all_trees(edges, mult_spec(mult), labeled ? IsoMode::Labeled : IsoMode::Unlabeled);
      json trees = json::array();
      for (const auto& t : family.members) trees.push_back(io::tree_to_json(t));
      out << json{{"edges", edges}, {"count", family.members.size()}, {"trees", trees}}.dump(2) << "\n";
      return 0;
    };
  });

  auto* graph_cmd = app.add_subcommand("mutation-graph", "Mutation arrows between unlabeled trees");
  graph_cmd->add_option("--edges", edges, "Number of edges")->required();
  graph_cmd->add_option("--mult", mult, "Multiplicity of the exceptional vertex (1 = none)");
  graph_cmd->callback([&] {
    action = [&] {
      require_enumerable(edges, false);
      const auto family = all_trees(edges, mult_spec(mult), IsoMode::Unlabeled);
      const auto graph = mutation_graph(family);
      json nodes = json::array();
      for (std::size_t k = 0; k < family.members.size(); ++k) {
        nodes.push_back({{"index", k}, {"code", graph.nodes[k]}, {"tree", io::tree_to_json(family.members[k])}});
      }
      json arrows = json::array();
      for (const auto& a : graph.arrows) arrows.push_back({{"source", a.source}, {"edge", a.edge}, {"target", a.target}});
      out << json{{"nodes", nodes}, {"arrows", arrows}}.dump(2) << "\n";
      return 0;
    };
  });

  // verify
  int max_edges = 0;
  int max_mult = 0;
  bool verify_labeled = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep and print a summary");
  verify_cmd->require_subcommand(1);
  struct Check {
    const char* name;
    const char* help;
    int default_edges;
    int default_mult;
    std::function<SweepSummary(int, int, IsoMode)> run;
  };
  const std::vector<Check> checks = {
      {"main", "End(T) rebuilt as a tree equals the mutated tree", 4, 3,
       [](int n, int m, IsoMode mode) { return sweep_main(n, m, mode); }},
      {"cartan", "Cartan and Ext formulas against the algebra", 6, 3,
       [](int n, int m, IsoMode mode) { return sweep_cartan(n, m, mode); }},
      {"braid", "Braid-type relations between mutations", 5, 1,
       [](int n, int m, IsoMode mode) { return sweep_braid(n, m, mode); }},
      {"to-star", "Greedy mutation sequences to stars", 6, 3,
       [](int n, int m, IsoMode mode) { return sweep_to_star(n, m, mode); }},
      {"counts", "Enumeration counts against published tables", 6, 3,
       [](int n, int m, IsoMode) { return sweep_counts(n, m); }},
      {"reconstruct", "Trees rebuilt from their own Cartan and Ext matrices", 6, 3,
       [](int n, int m, IsoMode mode) { return sweep_reconstruct(n, m, mode); }},
  };
  for (const auto& check : checks) {
    auto* sub = verify_cmd->add_subcommand(check.name, check.help);
    sub->add_option("--max-edges", max_edges, "Largest edge count (default " + std::to_string(check.default_edges) + ")");
    sub->add_option("--max-mult", max_mult, "Largest exceptional multiplicity (default " + std::to_string(check.default_mult) + ")");
    sub->add_flag("--labeled", verify_labeled, "Sweep labeled trees instead of unlabeled shapes");
    sub->callback([&, check] {
      action = [&, check] {
        const int n = max_edges > 0 ? max_edges : check.default_edges;
        const int m = max_mult > 0 ? max_mult : check.default_mult;
        require_enumerable(n, verify_labeled);
        if (m < 1) throw UsageError("--max-mult must be >= 1");
        const auto summary = check.run(n, m, verify_labeled ? IsoMode::Labeled : IsoMode::Unlabeled);
        auto j = to_json(summary);
        j["max_edges"] = n;
        j["max_mult"] = m;
        j["mode"] = verify_labeled ? "labeled" : "unlabeled";
        out << j.dump(2) << "\n";
        return summary.passed() ? 0 : 1;
      };
    });
  }

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a tree");
  dot_cmd->add_option("file", file, "Tree JSON file")->required();
  dot_cmd->callback([&] {
    action = [&] {
      out << io::to_dot(io::read_tree_file(file));
      return 0;
    };
  });

  // serve
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP session server for the explorer UI");
  serve_cmd->add_option("--file", file, "Initial tree JSON file")->required();
  serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--ui", ui_dir, "Directory with the UI bundle");
  serve_cmd->callback([&] {
    action = [&] {
      if (!ui_dir.empty() && !std::filesystem::is_directory(ui_dir)) {
        throw UsageError("--ui " + ui_dir + " is not a directory");
      }
      Api api(io::read_tree_file(file));
      httplib::Server server;
      install_routes(server, api, ui_dir.empty() ? std::nullopt : std::optional<std::string>(ui_dir));
      if (!server.bind_to_port(host, port)) {
        err << "cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      out << "listening on http://" << host << ":" << port << std::endl;
      server.listen_after_bind();
      return 0;
    };
  });

  std::vector<std::string> args;
  for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().back();
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().back();
    out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const CheckFailed& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const BrauerError& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace brauer::cli
