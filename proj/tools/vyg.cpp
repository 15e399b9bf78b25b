#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vyg/constructions.hpp"
#include "vyg/decomp.hpp"
#include "vyg/errors.hpp"
#include "vyg/graphs.hpp"
#include "vyg/io.hpp"
#include "vyg/patterns.hpp"
#include "vyg/solvers.hpp"

namespace {

using nlohmann::json;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vyg::Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw vyg::Error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw vyg::Error("cannot write " + out_path);
  f << text;
}

vyg::Graph build_family(const std::string& family, int n) {
  if (family == "S") return vyg::build_shift(n);
  if (family == "G") return vyg::build_G(n);
  if (family == "H") return vyg::build_H(n);
  throw vyg::Error("unknown family: " + family);
}

struct SharedOpts {
  std::string family;
  int n = 0;
  std::string method;
  bool shrink = true;
  std::string graph_path;
  std::string decomp_path;
  std::string out_path;
  std::string graph_out_path;
  std::string format = "json";
  std::string embedding;
  int size = 0;
  bool n_given = false;
  bool want_chromatic = false;
  bool want_chi = false;
  bool want_pchr = false;
  vyg::SolverConfig cfg;
};

int run_gen(const SharedOpts& o) {
  vyg::Graph g = build_family(o.family, o.n);
  if (o.format == "dot")
    emit(o.out_path, vyg::graph_to_dot(g));
  else
    emit(o.out_path, vyg::json_to_text(vyg::graph_to_json(g)));
  return 0;
}

int run_decompose(const SharedOpts& o) {
  json out;
  vyg::Graph graph;
  if (o.method == "shift") {
    if (o.family != "S") throw vyg::Error("method shift needs --family S");
    auto sp = vyg::shift_path_decomposition(o.n);
    out = vyg::path_decomposition_to_json(sp.graph, sp.decomp);
    graph = std::move(sp.graph);
  } else if (o.method == "geometric") {
    if (o.family != "G") throw vyg::Error("method geometric needs --family G");
    auto gd = vyg::geometric_path_decomposition_G(o.n, o.shrink);
    out = vyg::path_decomposition_to_json(gd.graph, gd.decomp);
    graph = std::move(gd.graph);
  } else if (o.method == "natural-tree") {
    if (o.family != "H")
      throw vyg::Error("method natural-tree needs --family H");
    auto nt = vyg::natural_tree_decomposition_H(o.n);
    out = vyg::tree_decomposition_to_json(nt.graph, nt.decomp);
    graph = std::move(nt.graph);
  } else {
    throw vyg::Error("unknown method: " + o.method);
  }
  emit(o.out_path, vyg::json_to_text(out));
  if (!o.graph_out_path.empty())
    emit(o.graph_out_path, vyg::json_to_text(vyg::graph_to_json(graph)));
  return 0;
}

int run_verify(const SharedOpts& o) {
  vyg::Graph g = vyg::graph_from_json(load_json(o.graph_path));
  json jd = load_json(o.decomp_path);
  try {
    vyg::ValidityReport rep;
    json out;
    int chromatic = -1;
    if (jd.contains("intervals")) {
      auto d = vyg::path_decomposition_from_json(g, jd);
      rep = vyg::verify_path_decomposition(g, d);
      if (rep.valid && o.want_chromatic)
        chromatic = vyg::decomposition_chromatic(g, d, o.cfg);
    } else if (jd.contains("host")) {
      auto d = vyg::tree_decomposition_from_json(g, jd);
      rep = vyg::verify_tree_decomposition(g, d);
      if (rep.valid && o.want_chromatic)
        chromatic = vyg::decomposition_chromatic(g, d, o.cfg);
    } else {
      throw vyg::Error("decomposition document has neither intervals nor host");
    }
    out = vyg::validity_report_to_json(g, rep);
    if (chromatic >= 0) out["chromatic"] = chromatic;
    std::cout << vyg::json_to_text(out);
    if (!rep.valid) {
      std::cerr << "invalid decomposition: " << rep.uncovered_vertices.size()
                << " uncovered vertices, " << rep.uncovered_edges.size()
                << " uncovered edges, " << rep.bad_intervals.size()
                << " bad intervals, " << rep.broken_traces.size()
                << " broken traces\n";
      return 1;
    }
    return 0;
  } catch (const vyg::SizeCapError&) {
    throw;
  } catch (const vyg::Error& e) {
    std::cout << vyg::json_to_text(json{{"valid", false}, {"error", e.what()}});
    std::cerr << "invalid decomposition: " << e.what() << "\n";
    return 1;
  }
}

int run_solve(const SharedOpts& o) {
  vyg::Graph g = vyg::graph_from_json(load_json(o.graph_path));
  if (o.want_chi == o.want_pchr)
    throw vyg::Error("pick exactly one of --chi and --pchr");
  json out;
  if (o.want_chi)
    out = vyg::chromatic_result_to_json(g, vyg::chromatic_number(g, o.cfg));
  else
    out = vyg::pchr_result_to_json(g, vyg::pchr_exact(g, o.cfg));
  emit(o.out_path, vyg::json_to_text(out));
  return 0;
}

int run_classify(const SharedOpts& o) {
  auto gd = vyg::geometric_path_decomposition_G(o.n, o.shrink);
  auto rep = vyg::property_report(gd.graph, gd.decomp);
  emit(o.out_path, vyg::json_to_text(vyg::property_report_to_json(gd.graph, rep)));
  if (!rep.conformant) {
    std::cerr << "pattern relations do not conform (" << rep.total_violations
              << " violations)\n";
    return 1;
  }
  return 0;
}

int run_check_properties(const SharedOpts& o) {
  if (o.method != "geometric")
    throw vyg::Error("check-properties supports only --method geometric");
  auto gd = vyg::geometric_path_decomposition_G(o.n, o.shrink);
  auto rep = vyg::property_report(gd.graph, gd.decomp);
  auto tc = vyg::check_two_coloring_all_nodes(gd);
  json samples = json::array();
  for (const auto& s : tc.samples)
    samples.push_back({{"u", gd.graph.key(s.u)},
                       {"v", gd.graph.key(s.v)},
                       {"position", s.position}});
  bool ok = rep.conformant && tc.proper;
  json out{{"conformant", ok},
           {"patterns", vyg::property_report_to_json(gd.graph, rep)},
           {"two_coloring",
            {{"proper", tc.proper},
             {"violation_count", tc.violation_count},
             {"samples", std::move(samples)}}}};
  std::cout << vyg::json_to_text(out);
  if (!ok) {
    std::cerr << "properties violated: " << rep.total_violations
              << " pattern violations, " << tc.violation_count
              << " two-coloring violations\n";
    return 1;
  }
  return 0;
}

int run_embed(const SharedOpts& o) {
  json out;
  bool ok;
  if (o.embedding == "shift-in-G") {
    int n = o.n_given ? o.n : o.size - 1;
    auto e = vyg::embed_shift_in_G(o.size, n);
    ok = e.isomorphic;
    out = json{{"kind", "shift-in-G"},
               {"p", e.p},
               {"n", e.n},
               {"isomorphic", e.isomorphic},
               {"image", vyg::graph_to_json(e.image)}};
  } else if (o.embedding == "shift-in-H") {
    int n = o.n_given ? o.n : 3 * o.size - 1;
    auto e = vyg::embed_shift_in_H(o.size, n);
    ok = e.isomorphic && e.wyes_attach;
    out = json{{"kind", "shift-in-H"},
               {"m", e.m},
               {"n", e.n},
               {"isomorphic", e.isomorphic},
               {"wyes_attach", e.wyes_attach},
               {"image", vyg::graph_to_json(e.image)}};
  } else {
    throw vyg::Error("unknown embedding: " + o.embedding);
  }
  emit(o.out_path, vyg::json_to_text(out));
  if (!ok) {
    std::cerr << "embedding check failed\n";
    return 1;
  }
  return 0;
}

int run_export(const SharedOpts& o) {
  vyg::Graph g = vyg::graph_from_json(load_json(o.graph_path));
  if (!o.decomp_path.empty()) {
    json jd = load_json(o.decomp_path);
    if (jd.contains("intervals")) {
      auto d = vyg::path_decomposition_from_json(g, jd);
      if (o.format == "dot")
        emit(o.out_path, vyg::host_tree_to_dot(vyg::path_as_tree(g, d)));
      else
        emit(o.out_path,
             vyg::json_to_text(vyg::path_decomposition_to_json(g, d)));
    } else {
      auto d = vyg::tree_decomposition_from_json(g, jd);
      if (o.format == "dot")
        emit(o.out_path, vyg::host_tree_to_dot(d));
      else
        emit(o.out_path,
             vyg::json_to_text(vyg::tree_decomposition_to_json(g, d)));
    }
    return 0;
  }
  if (o.format == "dot")
    emit(o.out_path, vyg::graph_to_dot(g));
  else
    emit(o.out_path, vyg::json_to_text(vyg::graph_to_json(g)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval and tree-shape graph family workbench"};
  app.require_subcommand(1);
  SharedOpts o;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "graph family")
        ->required()
        ->check(CLI::IsMember({"S", "G", "H"}));
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", o.n, "tree depth / interval range");
    if (required) opt->required();
    else opt->each([&](const std::string&) { o.n_given = true; });
  };
  auto add_shrink = [&](CLI::App* sub) {
    sub->add_flag("--shrink,!--no-shrink", o.shrink,
                  "pull interval ends in by one unit");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "output path (default stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.cfg.jobs, "worker threads for bag solves");
    sub->add_option("--cap", o.cfg.size_cap, "exact-search size cap");
  };

  auto* gen = app.add_subcommand("gen", "generate a graph family");
  add_family(gen);
  add_n(gen, true);
  add_out(gen);
  add_format(gen);

  auto* dec = app.add_subcommand("decompose", "construct a decomposition");
  add_family(dec);
  add_n(dec, true);
  dec->add_option("--method", o.method, "construction")
      ->required()
      ->check(CLI::IsMember({"shift", "natural-tree", "geometric"}));
  add_shrink(dec);
  add_out(dec);
  dec->add_option("--graph-out", o.graph_out_path,
                  "also write the graph file");

  auto* ver = app.add_subcommand("verify", "verify a decomposition file");
  ver->add_option("--graph", o.graph_path, "graph JSON")->required();
  ver->add_option("--decomp", o.decomp_path, "decomposition JSON")->required();
  ver->add_flag("--chromatic", o.want_chromatic,
                "also report the largest bag chromatic number");
  add_solver(ver);

  auto* sol = app.add_subcommand("solve", "run an exact solver");
  sol->add_option("--graph", o.graph_path, "graph JSON")->required();
  sol->add_flag("--chi", o.want_chi, "chromatic number");
  sol->add_flag("--pchr", o.want_pchr, "path-chromatic number");
  add_out(sol);
  add_solver(sol);

  auto* cls = app.add_subcommand("classify", "pattern classes of the drawing");
  add_n(cls, true);
  add_shrink(cls);
  add_out(cls);

  auto* chk = app.add_subcommand("check-properties",
                                 "pattern relations plus bag two-coloring");
  add_n(chk, true);
  chk->add_option("--method", o.method, "construction")
      ->default_val("geometric")
      ->check(CLI::IsMember({"shift", "natural-tree", "geometric"}));
  add_shrink(chk);

  auto* emb = app.add_subcommand("embed", "interval graph embeddings");
  emb->add_option("--embed", o.embedding, "which embedding")
      ->required()
      ->check(CLI::IsMember({"shift-in-G", "shift-in-H"}));
  emb->add_option("--size", o.size, "interval range to embed")->required();
  add_n(emb, false);
  add_out(emb);

  auto* exp = app.add_subcommand("export", "re-emit files as JSON or DOT");
  exp->add_option("--graph", o.graph_path, "graph JSON")->required();
  exp->add_option("--decomp", o.decomp_path, "decomposition JSON");
  add_out(exp);
  add_format(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (dec->parsed()) return run_decompose(o);
    if (ver->parsed()) return run_verify(o);
    if (sol->parsed()) return run_solve(o);
    if (cls->parsed()) return run_classify(o);
    if (chk->parsed()) return run_check_properties(o);
    if (emb->parsed()) return run_embed(o);
    if (exp->parsed()) return run_export(o);
    std::cerr << "no command given\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
