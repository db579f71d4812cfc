#include "dompack/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

#include "dompack/chordal.hpp"
#include "dompack/contrafunctional.hpp"
#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/harness.hpp"
#include "dompack/io.hpp"
#include "dompack/solvers.hpp"
#include "dompack/transforms.hpp"
#include "dompack/tree_algorithms.hpp"

namespace dompack {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kAllParams = {"rho", "gamma", "gamma_t", "gamma_o", "slater",
                                             "bounds"};

ordered_json set_json(const VertexSet& s) {
  ordered_json a = ordered_json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

ordered_json solution_json(const Solution& s) {
  return {{"defined", true}, {"value", s.value}, {"witness", set_json(s.witness)}};
}

ordered_json undefined_json(const std::string& reason) {
  return {{"defined", false}, {"reason", reason}};
}

ordered_json classification_json(const Classification& c) {
  return {{"connected", c.connected},
          {"rooted_tree", c.rooted_tree},
          {"directed_tree", c.directed_tree},
          {"contrafunctional", c.contrafunctional},
          {"tournament", c.tournament}};
}

ordered_json degrees_json(const DegreeStats& s) {
  return {{"max_out", s.max_out},
          {"max_in", s.max_in},
          {"min_underlying", s.min_underlying},
          {"max_underlying", s.max_underlying},
          {"delta_star", s.delta_star}};
}

bool has_isolated(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.degree(v) == 0) return true;
  }
  return false;
}

bool has_source(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) == 0) return true;
  }
  return false;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

// Shared exception-to-exit-code mapping for commands.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::size_t need(const std::optional<std::size_t>& v, const char* name, const std::string& fam) {
  if (!v) throw ContractError("family " + fam + " needs --" + std::string(name));
  return *v;
}

GeneratedInstance generate_instance(const GenerateRequest& q) {
  const auto family = family_from_string(q.family);
  if (!family) throw ContractError("unknown family '" + q.family + "'");
  const std::uint64_t seed = q.seed.value_or(0);
  const std::string& f = q.family;
  switch (*family) {
    case Family::kStar:
      return directed_star(need(q.n, "n", f));
    case Family::kPath:
      return directed_path(need(q.n, "n", f));
    case Family::kCycle:
      return directed_cycle(need(q.n, "n", f));
    case Family::kTournament:
      return random_tournament(need(q.n, "n", f), seed);
    case Family::kRootedTree:
      return random_rooted_tree(need(q.n, "n", f), seed);
    case Family::kDirectedTree:
      return random_directed_tree(need(q.n, "n", f), seed);
    case Family::kContrafunctional:
      return random_contrafunctional(need(q.n, "n", f), seed);
    case Family::kTheta:
      return theta_instance(need(q.r, "r", f), need(q.k, "k", f), q.extra_arcs, seed);
    case Family::kSigma: {
      // Base: the directed cycle C_n, or a seeded contrafunctional digraph
      // on n vertices when --seed is given.
      const std::size_t n = need(q.n, "n", f);
      const Digraph base =
          q.seed ? random_contrafunctional(n, seed, 2).digraph : directed_cycle(n).digraph;
      std::size_t top = 0;
      for (Vertex v = 0; v < base.order(); ++v) top = std::max(top, base.out_degree(v));
      return sigma_instance(base, q.k.value_or(top), q.extra_arcs, seed);
    }
    case Family::kSlaterTree:
      return slater_realization_tree(need(q.a, "a", f), q.b.value_or(0));
    case Family::kPhiMember: {
      const std::size_t n = need(q.n, "n", f);
      if (n % 2 != 0) throw ContractError("phi_member needs an even --n");
      return random_phi_member(n / 2, seed);
    }
    case Family::kRandom:
      return random_digraph(need(q.n, "n", f), q.density, seed);
  }
  throw ContractError("unknown family '" + q.family + "'");
}

ordered_json certificate_json(const GeneratedInstance& g) {
  ordered_json expected = ordered_json::object();
  auto put = [&](const char* name, const std::optional<CertifiedValue>& v) {
    if (v) expected[name] = {{"value", v->value}, {"anchor", v->anchor}};
  };
  put("rho", g.expected.rho);
  put("gamma", g.expected.gamma);
  put("gamma_t", g.expected.gamma_t);
  put("gamma_o", g.expected.gamma_o);
  put("slater_out", g.expected.slater_out);
  ordered_json doc = {{"family", to_string(g.family)},
                      {"order", g.digraph.order()},
                      {"arcs", g.digraph.arc_count()}};
  doc["seed"] = g.seed ? ordered_json(*g.seed) : ordered_json(nullptr);
  doc["expected"] = expected;
  if (g.expected.witness) doc["witness"] = set_json(*g.expected.witness);
  return doc;
}

ordered_json report_json(const VerificationReport& r, const TheoremCheck& check) {
  ordered_json cex = ordered_json::array();
  for (const Counterexample& c : r.counterexamples) {
    cex.push_back({{"trial", c.trial},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"instance", c.instance}});
  }
  return {{"theorem_id", r.theorem_id},
          {"statement", check.statement},
          {"trials", r.trials},
          {"passes", r.passes},
          {"seed", r.seed},
          {"max_n", r.max_n},
          {"counterexamples", cex}};
}

void dump_counterexamples(const VerificationReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const Counterexample& c : r.counterexamples) {
    const auto path = dir / (r.theorem_id + "-trial" + std::to_string(c.trial) + ".txt");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << "# " << r.theorem_id << " seed " << r.seed << " trial " << c.trial << "\n"
      << "# expected: " << c.expected << "\n"
      << "# observed: " << c.observed << "\n"
      << c.instance;
  }
}

}  // namespace

int cmd_compute(const std::filesystem::path& file, const std::vector<std::string>& params,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::set<std::string> wanted(params.begin(), params.end());
    if (wanted.empty()) wanted.insert(kAllParams.begin(), kAllParams.end());
    for (const std::string& p : wanted) {
      if (std::find(kAllParams.begin(), kAllParams.end(), p) == kAllParams.end()) {
        throw ContractError("unknown parameter '" + p + "'");
      }
    }
    const Digraph d = read_digraph_file(file);
    ordered_json doc = {{"order", d.order()},
                        {"arcs", d.arc_count()},
                        {"classification", classification_json(classify(d))},
                        {"degrees", degrees_json(degree_stats(d))}};
    ordered_json values = ordered_json::object();
    const auto on = [&](const char* p) { return wanted.count(p) > 0; };
    if (on("rho")) values["rho"] = solution_json(rho_exact(d));
    if (on("gamma")) values["gamma"] = solution_json(gamma_exact(d));
    if (on("gamma_t")) {
      if (has_isolated(d)) {
        values["gamma_t"] = undefined_json("δ(D)=0");
      } else {
        values["gamma_t"] = solution_json(*gamma_t_exact(d));
      }
    }
    if (on("gamma_o")) {
      if (has_source(d)) {
        values["gamma_o"] = undefined_json("δ⁻(D)=0");
      } else {
        values["gamma_o"] = solution_json(*gamma_o_exact(d));
      }
    }
    if (on("slater")) {
      const auto sl = slater_out(d);
      values["slater_out"] = sl ? ordered_json{{"defined", true}, {"value", *sl}}
                                : undefined_json("degree sum too small");
    }
    doc["parameters"] = values;
    if (on("bounds")) {
      const Ratio bound = rho_lower_bound(d);
      doc["bounds"] = {{"rho_lower_bound", bound.str()},
                       {"rho_lower_bound_value", bound.value()},
                       {"greedy_packing", set_json(greedy_packing(d))}};
    }
    emit(out, doc);
    return static_cast<int>(kExitPass);
  });
}

int cmd_generate(const GenerateRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeneratedInstance g = generate_instance(request);
    write_digraph_file(request.out_file, g.digraph);
    const auto sidecar = request.out_file.string() + ".cert.json";
    std::ofstream f(sidecar, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + sidecar);
    const ordered_json doc = certificate_json(g);
    f << doc.dump(2) << "\n";
    out << "wrote " << request.out_file.string() << " (n=" << g.digraph.order() << ") and "
        << sidecar << "\n";
    return static_cast<int>(kExitPass);
  });
}

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TheoremCheck* check = find_theorem_check(request.theorem_id);
    if (check == nullptr) throw ContractError("unknown theorem id '" + request.theorem_id + "'");

    if (request.instance) {
      const Digraph d = read_digraph_file(*request.instance);
      const Verdict v = check->check(d);
      emit(out, {{"theorem_id", check->id},
                 {"instance", request.instance->string()},
                 {"ok", v.ok},
                 {"expected", v.expected},
                 {"observed", v.observed}});
      return static_cast<int>(v.ok ? kExitPass : kExitFailure);
    }

    const VerificationReport r = run_verification(request.theorem_id, request.trials,
                                                  request.max_n, request.seed, request.threads);
    emit(out, report_json(r, *check));
    // Wall time stays off stdout so reports are byte-identical across runs.
    err << r.theorem_id << ": " << r.passes << "/" << r.trials << " passed in " << std::fixed
        << std::setprecision(3) << r.elapsed_seconds << "s\n";
    if (request.dump_dir && !r.counterexamples.empty()) dump_counterexamples(r, *request.dump_dir);
    return static_cast<int>(r.counterexamples.empty() ? kExitPass : kExitFailure);
  });
}

int cmd_analyze(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Digraph d = read_digraph_file(file);
    const Classification c = classify(d);
    ordered_json doc = {{"order", d.order()},
                        {"arcs", d.arc_count()},
                        {"classification", classification_json(c)},
                        {"degrees", degrees_json(degree_stats(d))}};
    const auto sl = slater_out(d);
    ordered_json bounds = {{"rho_lower_bound", rho_lower_bound(d).str()},
                           {"greedy_packing", set_json(greedy_packing(d))}};
    bounds["slater_out"] = sl ? ordered_json(*sl) : ordered_json(nullptr);
    doc["bounds"] = bounds;

    if (c.tree && d.order() >= 2) {
      const RootedTree& t = *c.tree;
      const TreeProfile p = tree_profile(t);
      const PackingBounds b = t1_bounds(t);
      const RdsesResult r = max_packing_rooted_tree(t);
      const ConditionResult cond = rho_equals_s_test(t);
      const PhiResult phi = phi_membership(t);
      ordered_json tree = {{"root", t.root()},
                           {"leaves", p.leaves},
                           {"supports", p.supports},
                           {"height", p.height},
                           {"rho", r.chosen.size()},
                           {"packing", set_json(r.chosen)},
                           {"rho_range", {b.lower, b.upper}},
                           {"rho_equals_supports", cond.holds},
                           {"condition", cond.reason},
                           {"gamma_half_family", phi.member},
                           {"rho_attains_upper", rho_upper_characterization(t)}};
      if (phi.certificate) tree["phi_shape"] = to_string(phi.certificate->shape);
      doc["rooted_tree"] = tree;
    }
    if (c.connected && c.contrafunctional) {
      const ContrafunctionalAnalysis a = analyze_contrafunctional(d);
      ordered_json cycle = ordered_json::array();
      for (Vertex v : a.cycle) cycle.push_back(v);
      doc["contrafunctional"] = {{"cycle", cycle},
                                 {"height", a.height},
                                 {"omega", a.omega},
                                 {"rho", a.rho},
                                 {"gamma", a.gamma}};
    }

    const SplitTransform s = build_split(d);
    ordered_json split = {{"order", s.split_graph.order()},
                          {"edges", s.split_graph.arc_count() / 2}};
    const auto elim = simplicial_elimination(s.split_graph);
    split["chordal"] = elim.has_value();
    if (elim && s.split_graph.order() <= kSunSearchGuard) {
      const ChordalVerdict v = strongly_chordal_desk(s.split_graph);
      split["sun_free_k"] = v.k_max;
      split["strongly_chordal"] = v.strongly_chordal;
      if (v.sun) {
        ordered_json core = ordered_json::array();
        ordered_json outer = ordered_json::array();
        for (Vertex x : v.sun->core) core.push_back(x);
        for (Vertex x : v.sun->outer) outer.push_back(x);
        split["sun"] = {{"core", core}, {"outer", outer}};
      }
    } else if (elim) {
      split["strongly_chordal"] = nullptr;
      split["note"] = "sun search skipped above " + std::to_string(kSunSearchGuard) + " vertices";
    } else {
      split["strongly_chordal"] = false;
    }
    doc["split_graph"] = split;
    emit(out, doc);
    return static_cast<int>(kExitPass);
  });
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"packing and domination parameters of digraphs"};
  app.require_subcommand(1);

  std::filesystem::path compute_file;
  std::vector<std::string> params;
  auto* compute = app.add_subcommand("compute", "exact parameters of an edge-list file");
  compute->add_option("file", compute_file)->required();
  compute->add_option("--params", params, "rho gamma gamma_t gamma_o slater bounds")
      ->delimiter(',');

  GenerateRequest gen;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "write a certified instance");
  generate->add_option("family", gen.family)->required();
  generate->add_option("out", gen.out_file)->required();
  generate->add_option("--n", gen.n);
  generate->add_option("--r", gen.r);
  generate->add_option("--k", gen.k);
  generate->add_option("--a", gen.a);
  generate->add_option("--b", gen.b);
  auto* seed_opt = generate->add_option("--seed", gen_seed);
  generate->add_option("--density", gen.density)->check(CLI::Range(0.0, 1.0));
  generate->add_flag("--extra", gen.extra_arcs, "add seeded extra arcs (theta, sigma)");

  VerifyRequest ver;
  std::string instance;
  std::string dump_dir;
  auto* verify = app.add_subcommand("verify", "check a result on seeded random instances");
  verify->add_option("theorem-id", ver.theorem_id)->required();
  verify->add_option("--trials", ver.trials);
  verify->add_option("--max-n", ver.max_n);
  verify->add_option("--seed", ver.seed);
  verify->add_option("--threads", ver.threads)->check(CLI::PositiveNumber);
  verify->add_option("--dump-dir", dump_dir);
  verify->add_option("--instance", instance, "re-check one saved instance");

  std::filesystem::path analyze_file;
  auto* analyze = app.add_subcommand("analyze", "classification, bounds and split-graph verdict");
  analyze->add_option("file", analyze_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (compute->parsed()) return cmd_compute(compute_file, params, out, err);
  if (generate->parsed()) {
    if (seed_opt->count() > 0) gen.seed = gen_seed;
    return cmd_generate(gen, out, err);
  }
  if (verify->parsed()) {
    if (!dump_dir.empty()) ver.dump_dir = dump_dir;
    if (!instance.empty()) ver.instance = instance;
    return cmd_verify(ver, out, err);
  }
  if (analyze->parsed()) return cmd_analyze(analyze_file, out, err);
  return kExitUsage;
}

}  // namespace dompack
