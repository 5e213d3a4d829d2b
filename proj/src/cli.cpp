#include "addspan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "addspan/cycles.hpp"
#include "addspan/generators.hpp"
#include "addspan/io.hpp"
#include "addspan/solver.hpp"
#include "addspan/thresholds.hpp"
#include "addspan/verify.hpp"

namespace addspan {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct InputOpts {
  std::string path = "-";
  std::string format = "edgelist";
};

struct ParamOpts {
  std::optional<int> t;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
};

void add_input(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--input,-i", in.path, "graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format,-f", in.format, "edgelist | dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}))
      ->capture_default_str();
}

void add_params(CLI::App* cmd, ParamOpts& p) {
  auto* t = cmd->add_option("--t", p.t, "additive stretch");
  auto* a = cmd->add_option("--alpha", p.alpha, "multiplicative stretch (rational)");
  auto* b = cmd->add_option("--beta", p.beta, "additive part (rational)");
  t->excludes(a)->excludes(b);
  a->needs(b);
  b->needs(a);
}

Graph load(const InputOpts& in) {
  GraphFormat fmt = parse_format(in.format);
  if (in.path == "-") return read_graph(std::cin, fmt);
  return parse_graph(in.path, fmt);
}

SpannerParams to_params(const ParamOpts& p) {
  if (p.t) return SpannerParams::additive(*p.t);
  if (p.alpha && p.beta) {
    return SpannerParams::alpha_beta(Rational::parse(*p.alpha), Rational::parse(*p.beta));
  }
  throw CLI::ValidationError("give --t or both --alpha and --beta");
}

std::string count_str(Count c) {
  return c >= kSaturated ? std::string("\"saturated\"") : std::to_string(c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Remove edges from a graph while keeping an additive or (alpha, beta) spanner"};
  app.require_subcommand(1);

  InputOpts input;
  ParamOpts params;
  std::size_t k = 1;

  auto* solve_cmd = app.add_subcommand("solve", "find k removable edges");
  std::string mode = "exact";
  bool max_k = false;
  bool best_effort = false;
  add_input(solve_cmd, input);
  add_params(solve_cmd, params);
  solve_cmd->add_option("--k", k, "edges to remove")->capture_default_str();
  solve_cmd->add_option("--mode", mode, "exact | constructive")
      ->check(CLI::IsMember({"exact", "constructive"}))
      ->capture_default_str();
  solve_cmd->add_flag("--max-k", max_k, "report the largest removable k instead");
  solve_cmd->add_flag("--best-effort", best_effort,
                      "run the construction below its guaranteed thresholds");

  auto* verify_cmd = app.add_subcommand("verify", "check a removal set");
  std::string remove;
  add_input(verify_cmd, input);
  add_params(verify_cmd, params);
  verify_cmd->add_option("--remove", remove, "edges as \"u,v;u,v;...\"")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute force over all k-subsets of edges");
  std::uint64_t budget = 50'000'000;
  add_input(oracle_cmd, input);
  add_params(oracle_cmd, params);
  oracle_cmd->add_option("--k", k, "edges to remove")->capture_default_str();
  oracle_cmd->add_option("--budget", budget, "maximum number of subsets")->capture_default_str();

  auto* cand_cmd = app.add_subcommand("candidates", "edges on cycles of length <= t+2");
  int cand_t = 1;
  add_input(cand_cmd, input);
  cand_cmd->add_option("--t", cand_t, "additive stretch")->required()->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  std::string gen_name;
  std::vector<std::string> gen_kv;
  std::string gen_format = "edgelist";
  std::string gen_out = "-";
  gen_cmd->add_option("name", gen_name,
                      "cycle | complete | grid | erdos_renyi | book | caterpillar_triangles | "
                      "spaced_triangles")
      ->required();
  gen_cmd->add_option("params", gen_kv, "key=value pairs");
  gen_cmd->add_option("--format,-f", gen_format, "edgelist | dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}))
      ->capture_default_str();
  gen_cmd->add_option("--output,-o", gen_out, "file, '-' for stdout")->capture_default_str();

  auto* thr_cmd = app.add_subcommand("thresholds", "print f1..f4 for (t, k)");
  int thr_t = 1;
  int thr_k = 1;
  thr_cmd->add_option("--t", thr_t)->required()->check(CLI::PositiveNumber);
  thr_cmd->add_option("--k", thr_k)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      SpannerParams sp = to_params(params);
      Graph g = load(input);
      SolveOptions opts;
      opts.mode = mode == "constructive" ? SolveMode::ConstructivePreferred : SolveMode::Exact;
      opts.best_effort_constructive = best_effort;
      ResultDoc doc;
      doc.command = "solve";
      doc.params = sp.describe();
      doc.has_stats = true;
      EdgeMask removed;
      bool feasible = false;
      if (max_k) {
        std::size_t total = 0;
        removed = g.empty_mask();
        for (const auto& comp : components(g)) {
          InducedSubgraph sub = induced_subgraph(g, comp);
          if (sub.graph.num_edges() == 0) continue;
          MaxKResult part = solve_max_k(sub.graph, sp, static_cast<std::size_t>(-1), opts);
          total += part.k;
          for (EdgeId e : part.removed.indices()) removed.insert(sub.edge_map[e]);
          doc.stats.candidate_edges += part.stats.candidate_edges;
          doc.stats.cycles_found += part.stats.cycles_found;
          doc.stats.subsets_examined += part.stats.subsets_examined;
          doc.stats.fell_back = doc.stats.fell_back || part.stats.fell_back;
          if (part.k > 0) doc.branch = to_string(part.branch);
        }
        if (doc.branch.empty()) doc.branch = to_string(Branch::SmallF);
        doc.k = total;
        feasible = true;
      } else {
        SolveResult r = solve(g, sp, k, opts);
        doc.k = k;
        doc.branch = to_string(r.branch);
        doc.stats = r.stats;
        feasible = r.feasible;
        removed = std::move(r.removed);
      }
      doc.verdict = feasible ? "feasible" : "infeasible";
      doc.removed = edge_pairs(g, removed);
      doc.rechecked = verify(g, removed, sp).ok();
      write_result(out, doc);
      return feasible ? kOk : kNo;
    }

    if (verify_cmd->parsed()) {
      SpannerParams sp = to_params(params);
      Graph g = load(input);
      EdgeMask mask = parse_removal(g, remove);
      VerifyResult vr = verify(g, mask, sp);
      ResultDoc doc;
      doc.command = "verify";
      doc.verdict = vr.ok() ? "ok" : "violation";
      doc.params = sp.describe();
      doc.k = mask.count();
      doc.removed = edge_pairs(g, mask);
      doc.violation = vr.violation;
      doc.rechecked = true;
      write_result(out, doc);
      return vr.ok() ? kOk : kNo;
    }

    if (oracle_cmd->parsed()) {
      SpannerParams sp = to_params(params);
      Graph g = load(input);
      SolveResult r = oracle(g, sp, k, budget);
      ResultDoc doc;
      doc.command = "oracle";
      doc.verdict = r.feasible ? "feasible" : "infeasible";
      doc.params = sp.describe();
      doc.k = k;
      doc.removed = edge_pairs(g, r.removed);
      doc.branch = to_string(r.branch);
      doc.stats = r.stats;
      doc.has_stats = true;
      doc.rechecked = verify(g, r.removed, sp).ok();
      write_result(out, doc);
      return r.feasible ? kOk : kNo;
    }

    if (cand_cmd->parsed()) {
      Graph g = load(input);
      CandidateSet f = candidate_edges(g, cand_t);
      out << "{\n  \"command\": \"candidates\",\n  \"t\": " << cand_t
          << ",\n  \"count\": " << f.members.count() << ",\n  \"edges\": [";
      auto pairs = edge_pairs(g, f.members);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        out << (i ? ", " : "") << '[' << pairs[i].first << ", " << pairs[i].second << ']';
      }
      out << "]\n}\n";
      return kOk;
    }

    if (gen_cmd->parsed()) {
      std::map<std::string, std::string> kv;
      for (const std::string& item : gen_kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
          err << "expected key=value, got '" << item << "'\n";
          return kUsage;
        }
        kv[item.substr(0, eq)] = item.substr(eq + 1);
      }
      Graph g = generate(gen_name, kv);
      std::ofstream file;
      std::ostream* sink = &out;
      if (gen_out != "-") {
        file.open(gen_out);
        if (!file) {
          err << "cannot write " << gen_out << '\n';
          return kUsage;
        }
        sink = &file;
      }
      if (parse_format(gen_format) == GraphFormat::Dimacs) {
        write_dimacs(*sink, g);
      } else {
        write_edgelist(*sink, g);
      }
      return kOk;
    }

    if (thr_cmd->parsed()) {
      ThresholdTable tb = thresholds(thr_t, thr_k);
      const auto kk = static_cast<Count>(thr_k);
      out << "{\n";
      out << "  \"t\": " << thr_t << ",\n";
      out << "  \"k\": " << thr_k << ",\n";
      out << "  \"f1(k,1)\": " << count_str(f1(kk, 1)) << ",\n";
      out << "  \"f3(t,k)\": " << count_str(tb.p) << ",\n";
      out << "  \"f2(t,p)\": " << count_str(tb.n_disjoint) << ",\n";
      out << "  \"f1(k+t+1,t+1)\": " << count_str(tb.f1_prop) << ",\n";
      out << "  \"cycle_budget\": " << count_str(tb.cycle_budget) << ",\n";
      out << "  \"f4(t,k)\": " << count_str(tb.f4) << "\n";
      out << "}\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace addspan
