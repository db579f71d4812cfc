#include "dompack/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "dompack/chordal.hpp"
#include "dompack/contrafunctional.hpp"
#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/io.hpp"
#include "dompack/solvers.hpp"
#include "dompack/transforms.hpp"
#include "dompack/tree_algorithms.hpp"

namespace dompack {

namespace {

// Collects named comparisons into one verdict.
class Checker {
 public:
  void expect(bool ok, const std::string& claim, const std::string& seen) {
    if (!expected_.empty()) expected_ += "; ";
    expected_ += claim;
    if (!observed_.empty()) observed_ += "; ";
    observed_ += seen;
    ok_ = ok_ && ok;
  }

  Verdict verdict() const { return {ok_, expected_, observed_}; }

 private:
  bool ok_ = true;
  std::string expected_;
  std::string observed_;
};

std::string kv(const std::string& key, std::size_t value) {
  return key + "=" + std::to_string(value);
}

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

std::size_t pick_order(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::size_t>(mix_seed(seed ^ 0x5bd1e995ULL) % (hi - lo + 1));
}

double swept_density(std::size_t trial, std::size_t trials) {
  if (trials <= 1) return 0.5;
  return 0.1 + 0.8 * static_cast<double>(trial) / static_cast<double>(trials - 1);
}

Digraph random_digraph_trial(std::uint64_t seed, std::size_t trial, std::size_t trials,
                             std::size_t max_n) {
  return random_digraph(pick_order(seed, 1, max_n), swept_density(trial, trials), seed).digraph;
}

Digraph directed_tree_trial(std::uint64_t seed, std::size_t lo, std::size_t max_n) {
  return random_directed_tree(pick_order(seed, lo, max_n), seed).digraph;
}

Digraph rooted_tree_trial(std::uint64_t seed, std::size_t lo, std::size_t max_n) {
  return random_rooted_tree(pick_order(seed, lo, max_n), seed).digraph;
}

std::size_t out_leaves(const Digraph& d) {
  std::size_t count = 0;
  for (Vertex v = 0; v < d.order(); ++v) count += d.out_degree(v) == 0 ? 1 : 0;
  return count;
}

std::size_t max_out(const Digraph& d) { return degree_stats(d).max_out; }

std::optional<RootedTree> as_rooted_tree(const Digraph& d, Checker& c) {
  auto t = RootedTree::try_make(d);
  c.expect(t.has_value(), "rooted tree", t ? "rooted tree" : "not a rooted tree");
  return t;
}

// Blocks partition V, every stage block is the support plus some of its
// children, and a leftover isolated root is chosen.
bool valid_tree_partition(const RootedTree& t, const RdsesResult& r) {
  std::vector<int> hits(t.order(), 0);
  for (const VertexSet& block : r.partition) {
    for (Vertex v : block) ++hits[v];
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  for (const RdsesStage& s : r.stages) {
    if (!s.removed.contains(s.support) || !s.removed.contains(s.leaf)) return false;
    for (Vertex v : s.removed) {
      if (v != s.support && t.parent(v) != s.support) return false;
    }
  }
  if (r.terminal == RdsesTerminal::kIsolated) {
    const Vertex last = *r.terminal_vertices.begin();
    if (r.partition.back() != VertexSet{last} || !r.chosen.contains(last)) return false;
  }
  return true;
}

Verdict check_r23(const Digraph& d) {
  Checker c;
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  c.expect(rho <= gamma, "rho <= gamma", kv("rho", rho) + "," + kv("gamma", gamma));
  return c.verdict();
}

Verdict check_l22(const Digraph& d) {
  Checker c;
  const SplitTransform s = build_split(d);
  const auto gamma = gamma_exact(d).value;
  const auto rho = rho_exact(d).value;
  const auto split_gamma = undirected_gamma_exact(s.split_graph).value;
  const auto split_rho = undirected_rho_exact(s.split_graph).value;
  c.expect(split_gamma == gamma, "gamma(G_D) = gamma(D)",
           kv("gamma(G_D)", split_gamma) + "," + kv("gamma(D)", gamma));
  c.expect(split_rho == rho, "rho(G_D) = rho(D)",
           kv("rho(G_D)", split_rho) + "," + kv("rho(D)", rho));
  return c.verdict();
}

Verdict check_t24(const Digraph& d) {
  Checker c;
  const Classification cl = classify(d);
  c.expect(cl.directed_tree, "directed tree", cl.directed_tree ? "directed tree" : "not one");
  if (!cl.directed_tree) return c.verdict();
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  c.expect(rho == gamma, "rho = gamma", kv("rho", rho) + "," + kv("gamma", gamma));
  const auto fast = gamma_directed_tree(d);
  c.expect(fast == gamma, "tree routine = gamma", kv("tree", fast));
  return c.verdict();
}

Verdict check_a1(const Digraph& d) {
  Checker c;
  const auto t = as_rooted_tree(d, c);
  if (!t) return c.verdict();
  const RdsesResult r = max_packing_rooted_tree(*t);
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  c.expect(r.chosen.size() == rho && rho == gamma, "|B| = rho = gamma",
           kv("|B|", r.chosen.size()) + "," + kv("rho", rho) + "," + kv("gamma", gamma));
  c.expect(is_packing(d, r.chosen), "B is a packing", set_str(r.chosen));
  c.expect(valid_tree_partition(*t, r), "star blocks partition V", kv("blocks", r.partition.size()));
  return c.verdict();
}

Verdict check_t25(const Digraph& d) {
  Checker c;
  const auto t = as_rooted_tree(d, c);
  if (!t || t->order() < 2) return c.verdict();
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  const PackingBounds b = t1_bounds(*t);
  c.expect(b.lower <= rho && rho <= b.upper, "s <= rho <= ceil((n-l+s)/2)",
           kv("s", b.lower) + "," + kv("rho", rho) + "," + kv("upper", b.upper));
  c.expect(gamma <= (d.order() + 1) / 2, "gamma <= ceil(n/2)", kv("gamma", gamma));
  bool binary = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    binary = binary && (d.out_degree(v) == 0 || d.out_degree(v) == 2);
  }
  if (binary) {
    c.expect(2 * gamma + 1 <= d.order(), "binary: gamma <= (n-1)/2", kv("gamma", gamma));
  }
  return c.verdict();
}

Verdict check_t27i(const Digraph& d) {
  Checker c;
  const auto t = as_rooted_tree(d, c);
  if (!t || t->order() < 2) return c.verdict();
  const auto rho = rho_exact(d).value;
  const auto s = tree_profile(*t).supports;
  const ConditionResult cond = rho_equals_s_test(*t);
  c.expect(cond.holds == (rho == s), "condition holds iff rho = s",
           std::string(cond.holds ? "holds" : "fails") + " (" + cond.reason + ")," +
               kv("rho", rho) + "," + kv("s", s));
  return c.verdict();
}

Verdict check_t27ii(const Digraph& d) {
  Checker c;
  const auto t = as_rooted_tree(d, c);
  if (!t || t->order() < 2) return c.verdict();
  const auto rho = rho_exact(d).value;
  const auto upper = t1_bounds(*t).upper;
  const bool in_phi = rho_upper_characterization(*t);
  c.expect(in_phi == (rho == upper), "T' in Phi iff rho = ceil((n-l+s)/2)",
           std::string(in_phi ? "T' in Phi" : "T' not in Phi") + "," + kv("rho", rho) + "," +
               kv("upper", upper));
  const PhiResult phi = phi_membership(*t);
  const auto gamma = gamma_exact(d).value;
  c.expect(phi.member == (gamma == (d.order() + 1) / 2), "T in Phi iff gamma = ceil(n/2)",
           std::string(phi.member ? "member" : "non-member") + "," + kv("gamma", gamma));
  return c.verdict();
}

Verdict check_t31(const Digraph& d) {
  Checker c;
  const auto rho = rho_exact(d).value;
  const Ratio bound = rho_lower_bound(d);
  c.expect(at_least(static_cast<std::int64_t>(rho), bound), "rho >= bound",
           kv("rho", rho) + ",bound=" + bound.str());
  const VertexSet greedy = greedy_packing(d);
  c.expect(is_packing(d, greedy), "greedy set is a packing", set_str(greedy));
  c.expect(at_least(static_cast<std::int64_t>(greedy.size()), bound), "|greedy| >= bound",
           kv("|greedy|", greedy.size()));
  return c.verdict();
}

Verdict check_l32(const Digraph& d) {
  Checker c;
  const auto cycle = unique_cycle(d);
  bool closed = true;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    closed = closed && d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  c.expect(closed, "cycle is a directed cycle", kv("length", cycle.size()));
  // Walking in-neighbors n steps from any vertex must end on the cycle.
  const VertexSet on_cycle{std::vector<Vertex>(cycle)};
  bool unique = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    Vertex w = v;
    for (std::size_t step = 0; step < d.order(); ++step) w = d.in(w).front();
    unique = unique && on_cycle.contains(w);
  }
  c.expect(unique, "every backward walk ends on the cycle", unique ? "yes" : "no");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % cycle.size()];
    const auto t = RootedTree::try_make(remove_arc(d, u, v));
    c.expect(t && t->root() == v, "D - (u,v) is a rooted tree with root v",
             "arc (" + std::to_string(u) + "," + std::to_string(v) + ")" +
                 (t ? " root " + std::to_string(t->root()) : " not a rooted tree"));
  }
  return c.verdict();
}

Verdict check_l33(const Digraph& d) {
  Checker c;
  const auto h = height(d);
  c.expect(h <= 1, "height <= 1", kv("height", h));
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  const bool cycle_only = h == 0;
  if (!cycle_only || d.order() % 2 == 0) {
    c.expect(rho == gamma, "gamma = rho", kv("rho", rho) + "," + kv("gamma", gamma));
  }
  const auto a = analyze_contrafunctional(d);
  c.expect(a.rho == rho && a.gamma == gamma, "analysis matches exhaustive values",
           kv("rho*", a.rho) + "," + kv("gamma*", a.gamma));
  return c.verdict();
}

Verdict check_t34(const Digraph& d) {
  Checker c;
  const auto a = analyze_contrafunctional(d);
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  c.expect(a.rho == rho && a.gamma == gamma, "analysis (rho, gamma) equal exhaustive",
           kv("rho*", a.rho) + "," + kv("gamma*", a.gamma) + "," + kv("rho", rho) + "," +
               kv("gamma", gamma));
  c.expect(gamma == rho + (a.omega ? 1 : 0), "gamma = rho + [D in Omega]",
           std::string(a.omega ? "in Omega" : "not in Omega"));
  return c.verdict();
}

Verdict check_e41(const Digraph& d) {
  Checker c;
  const auto gt = gamma_t_exact(d);
  if (!gt) {
    c.expect(true, "gamma_t undefined (vacuous)", "undefined");
    return c.verdict();
  }
  const auto sl = slater_out(d);
  c.expect(sl && gt->value >= *sl, "gamma_t >= out-Slater",
           kv("gamma_t", gt->value) + ",slater=" + (sl ? std::to_string(*sl) : "undefined"));
  const std::size_t q = gt->value;
  c.expect(max_out(d) * q >= d.order() - q / 2, "maxout*|S| >= n - floor(|S|/2)",
           kv("maxout", max_out(d)) + "," + kv("|S|", q));
  return c.verdict();
}

Verdict check_e42(const Digraph& d) {
  Checker c;
  const auto sl = slater_out(d);
  const std::size_t n = d.order();
  const std::size_t l = out_leaves(d);
  c.expect(sl && 3 * *sl >= 2 * (n - l + 1), "3*slater >= 2(n-l+1)",
           "slater=" + (sl ? std::to_string(*sl) : std::string("undefined")) + "," + kv("n", n) +
               "," + kv("l", l));
  return c.verdict();
}

Verdict check_t43t(const Digraph& d) {
  Checker c;
  const auto gt = gamma_t_exact(d);
  if (!gt) {
    c.expect(true, "gamma_t undefined (vacuous)", "undefined");
    return c.verdict();
  }
  const std::size_t lhs = gt->value * (2 * max_out(d) + 1);
  const std::size_t rhs = 2 * d.order();
  c.expect(lhs >= rhs, "gamma_t(2maxout+1) >= 2n", kv("lhs", lhs) + "," + kv("rhs", rhs));
  const bool equal = lhs == rhs;
  const auto core = find_theta_core(d);
  c.expect(equal == core.has_value(), "equality iff theta structure exists",
           std::string(equal ? "equal" : "strict") + "," +
               (core ? "core " + set_str(*core) : std::string("no core")));
  if (equal) {
    c.expect(theta_structure(d, gt->witness), "optimal set has theta structure",
             set_str(gt->witness));
  }
  return c.verdict();
}

Verdict check_t43o(const Digraph& d) {
  Checker c;
  const auto go = gamma_o_exact(d);
  if (!go) {
    c.expect(true, "gamma_o undefined (vacuous)", "undefined");
    return c.verdict();
  }
  const std::size_t lhs = go->value * max_out(d);
  c.expect(lhs >= d.order(), "gamma_o*maxout >= n", kv("lhs", lhs) + "," + kv("n", d.order()));
  const bool equal = lhs == d.order();
  const auto core = find_sigma_core(d);
  c.expect(equal == core.has_value(), "equality iff sigma structure exists",
           std::string(equal ? "equal" : "strict") + "," +
               (core ? "core " + set_str(*core) : std::string("no core")));
  if (equal) {
    c.expect(sigma_structure(d, go->witness), "optimal set has sigma structure",
             set_str(go->witness));
  }
  return c.verdict();
}

Verdict check_t44(const Digraph& d) {
  Checker c;
  const auto gt = gamma_t_exact(d);
  const auto sl = slater_out(d);
  if (!gt || !sl) {
    c.expect(false, "gamma_t and out-Slater defined", "undefined");
    return c.verdict();
  }
  c.expect(*sl <= gt->value && 2 * gt->value + 2 <= 3 * *sl,
           "slater <= gamma_t <= 3/2 slater - 1",
           kv("slater", *sl) + "," + kv("gamma_t", gt->value));
  return c.verdict();
}

Verdict check_s5(const Digraph& d) {
  Checker c;
  const auto rho = rho_exact(d).value;
  const auto gamma = gamma_exact(d).value;
  c.expect(rho <= gamma, "rho <= gamma", kv("rho", rho) + "," + kv("gamma", gamma));
  if (const auto gt = gamma_t_exact(d)) {
    c.expect(gamma <= gt->value && gt->value <= 2 * gamma, "gamma <= gamma_t <= 2 gamma",
             kv("gamma_t", gt->value));
  }
  return c.verdict();
}

Verdict check_gt_chordal(const Digraph& d) {
  Checker c;
  const SplitTransform s = build_split(d);
  const ChordalVerdict v = strongly_chordal_desk(s.split_graph);
  c.expect(v.strongly_chordal, "G_T strongly chordal (k <= 4)",
           std::string(v.chordal ? "chordal" : "not chordal") + (v.sun ? ", sun found" : ""));
  if (v.ordering) {
    c.expect(is_simplicial_elimination(s.split_graph, *v.ordering), "ordering is simplicial",
             "checked");
  }
  const auto rho = undirected_rho_exact(s.split_graph).value;
  const auto gamma = undirected_gamma_exact(s.split_graph).value;
  c.expect(rho == gamma, "rho(G_T) = gamma(G_T)", kv("rho", rho) + "," + kv("gamma", gamma));
  return c.verdict();
}

Digraph theta_trial(std::uint64_t seed, std::size_t trial, std::size_t trials, std::size_t max_n) {
  if (trial % 2 == 1) return random_digraph_trial(seed, trial, trials, max_n);
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t k = 0; k <= 3; ++k) {
      if (r * (2 * k + 3) <= max_n) shapes.emplace_back(r, k);
    }
  }
  if (shapes.empty()) return random_digraph_trial(seed, trial, trials, max_n);
  const auto [r, k] = shapes[mix_seed(seed) % shapes.size()];
  return theta_instance(r, k, (seed >> 7) & 1, seed).digraph;
}

Digraph sigma_trial(std::uint64_t seed, std::size_t trial, std::size_t trials, std::size_t max_n) {
  if (trial % 2 == 1 || max_n < 2) return random_digraph_trial(seed, trial, trials, max_n);
  const std::size_t m = pick_order(seed, 2, std::max<std::size_t>(2, std::min<std::size_t>(6, max_n / 2)));
  const Digraph base = random_contrafunctional(m, seed, 2).digraph;
  const std::size_t top = max_out(base);
  const std::size_t k_max = std::max(top, max_n / m);
  if (top * m > max_n) return random_digraph_trial(seed, trial, trials, max_n);
  const std::size_t k = pick_order(mix_seed(seed), top, k_max);
  return sigma_instance(base, k, (seed >> 9) & 1, seed).digraph;
}

std::vector<TheoremCheck> build_checks() {
  std::vector<TheoremCheck> list;
  auto digraphs = [](std::uint64_t s, std::size_t t, std::size_t ts, std::size_t m) {
    return random_digraph_trial(s, t, ts, m);
  };
  auto directed_trees = [](std::uint64_t s, std::size_t, std::size_t, std::size_t m) {
    return directed_tree_trial(s, 1, m);
  };
  auto directed_trees2 = [](std::uint64_t s, std::size_t, std::size_t, std::size_t m) {
    return directed_tree_trial(s, 2, std::max<std::size_t>(m, 2));
  };
  auto rooted_trees = [](std::uint64_t s, std::size_t, std::size_t, std::size_t m) {
    return rooted_tree_trial(s, 1, m);
  };
  auto rooted_trees2 = [](std::uint64_t s, std::size_t, std::size_t, std::size_t m) {
    return rooted_tree_trial(s, 2, std::max<std::size_t>(m, 2));
  };
  auto contrafunctional = [](std::uint64_t s, std::size_t t, std::size_t, std::size_t m) {
    const std::size_t min_cycle = (t % 2 == 0 || m < 3) ? 2 : 3;
    return random_contrafunctional(pick_order(s, min_cycle, std::max(m, min_cycle)), s, min_cycle)
        .digraph;
  };
  // Checks backed by exhaustive search never exceed the solver guard.
  const std::size_t guard = solver_guard();

  list.push_back({"R2.3", "rho(D) <= gamma(D)", guard, digraphs, check_r23});
  list.push_back({"L2.2", "gamma(G_D) = gamma(D) and rho(G_D) = rho(D)", std::min<std::size_t>(guard, 10), digraphs,
                  check_l22});
  list.push_back({"T2.4", "rho(T) = gamma(T) for directed trees", guard, directed_trees, check_t24});
  list.push_back({"A1-opt", "rooted-tree elimination returns a maximum packing", guard,
                  rooted_trees, check_a1});
  list.push_back({"T2.5", "s <= rho(T) <= ceil((n-l+s)/2) on rooted trees", guard, rooted_trees2,
                  check_t25});
  list.push_back({"T2.7i", "rho(T) = s iff the structural condition holds", guard, rooted_trees2,
                  check_t27i});
  list.push_back({"T2.7ii", "rho(T) = ceil((n-l+s)/2) iff T' in Phi", guard,
                  [](std::uint64_t s, std::size_t t, std::size_t, std::size_t m) {
                    if (t % 3 == 0 && m >= 4) {
                      return random_phi_member(pick_order(s, 2, m / 2), s).digraph;
                    }
                    return rooted_tree_trial(s, 2, std::max<std::size_t>(m, 2));
                  },
                  check_t27ii});
  list.push_back({"T3.1", "rho(D) >= degree lower bound; greedy packing attains it", guard,
                  digraphs, check_t31});
  list.push_back({"L3.2", "connected contrafunctional: unique cycle, cut arc gives rooted tree",
                  kMaxSolverGuard, contrafunctional, check_l32});
  list.push_back({"L3.3", "height-one contrafunctional: gamma = rho", guard,
                  [](std::uint64_t s, std::size_t, std::size_t, std::size_t m) {
                    return random_height_one_contrafunctional(
                               pick_order(s, 2, std::max<std::size_t>(m, 2)), s)
                        .digraph;
                  },
                  check_l33});
  list.push_back({"T3.4", "contrafunctional: gamma = rho + [D in Omega]", guard, contrafunctional,
                  check_t34});
  list.push_back({"E4.1", "gamma_t(D) >= out-Slater number", guard, digraphs, check_e41});
  list.push_back({"E4.2", "directed trees: out-Slater >= 2(n-l+1)/3", guard, directed_trees2,
                  check_e42});
  list.push_back({"T4.3t", "gamma_t = 2n/(2maxout+1) iff D in Theta", guard, theta_trial,
                  check_t43t});
  list.push_back({"T4.3o", "gamma_o = n/maxout iff D in Sigma", guard, sigma_trial, check_t43o});
  list.push_back({"T4.4", "directed trees: slater <= gamma_t <= 3/2 slater - 1", guard,
                  directed_trees2, check_t44});
  list.push_back({"T4.4r", "rooted trees: slater <= gamma_t <= 3/2 slater - 1", guard,
                  [](std::uint64_t s, std::size_t t, std::size_t, std::size_t m) {
                    if (t % 5 == 0 && m >= 10) return slater_realization_tree(2, 0).digraph;
                    return rooted_tree_trial(s, 2, std::max<std::size_t>(m, 2));
                  },
                  check_t44});
  list.push_back({"S5-chain", "gamma <= gamma_t <= 2 gamma", guard, digraphs, check_s5});
  list.push_back({"GT-chordal", "G_T is strongly chordal and rho(G_T) = gamma(G_T)",
                  kSunSearchGuard / 2, directed_trees, check_gt_chordal});
  return list;
}

}  // namespace

const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> checks = build_checks();
  return checks;
}

const TheoremCheck* find_theorem_check(const std::string& id) {
  for (const TheoremCheck& c : theorem_checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t trial) {
  return base ^ mix_seed(static_cast<std::uint64_t>(trial));
}

VerificationReport run_verification(const std::string& theorem_id, std::size_t trials,
                                    std::size_t max_n, std::uint64_t seed, std::size_t threads) {
  const TheoremCheck* check = find_theorem_check(theorem_id);
  if (check == nullptr) throw ContractError("unknown theorem id '" + theorem_id + "'");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.theorem_id = theorem_id;
  report.trials = trials;
  report.seed = seed;
  report.max_n = std::min(max_n, check->order_cap);

  struct Slot {
    bool ok = true;
    std::string instance;
    Verdict verdict;
  };
  std::vector<Slot> slots(trials);
  auto run_one = [&](std::size_t i) {
    const std::uint64_t s = trial_seed(seed, i);
    const Digraph d = check->generate(s, i, trials, report.max_n);
    Verdict v;
    try {
      v = check->check(d);
    } catch (const std::exception& e) {
      v = {false, "no exception", std::string("exception: ") + e.what()};
    }
    if (!v.ok) slots[i] = {false, serialize_digraph(d), std::move(v)};
  };

  threads = std::max<std::size_t>(1, std::min(threads, trials));
  if (threads == 1) {
    for (std::size_t i = 0; i < trials; ++i) run_one(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < trials; i += threads) run_one(i);
      });
    }
  }

  for (std::size_t i = 0; i < trials; ++i) {
    if (slots[i].ok) {
      ++report.passes;
    } else {
      report.counterexamples.push_back(
          {i, std::move(slots[i].instance), slots[i].verdict.expected, slots[i].verdict.observed});
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dompack
