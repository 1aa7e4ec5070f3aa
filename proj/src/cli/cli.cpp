#include "fbp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fbp/bounds.hpp"
#include "fbp/colgen/colgen.hpp"
#include "fbp/errors.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/matrix_io.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/lp/integer.hpp"

namespace fbp {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { kText, kJson, kCsv };

struct CommonFlags {
  std::string source;
  int power = 1;
  std::string format = "text";
  std::string out_path;
};

struct ColGenFlags {
  std::string epsilon = "1/1000000";
  std::size_t prune_after = 3;
  std::size_t max_iters = 10000;
  std::string init = "union";
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::string checkpoint;
  double time_limit = 0;
  std::string lp = "hybrid";
  bool verbose = false;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

// "6" for integers, "5/2 = 2.500000" otherwise.
std::string value_line(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  return to_string(q) + " = " + to_decimal(q, 6);
}

json rational_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

ColGenConfig make_config(const ColGenFlags& f, std::ostream& err) {
  ColGenConfig c;
  c.epsilon = parse_rational(f.epsilon);
  c.prune_after = f.prune_after;
  c.max_iterations = f.max_iters;
  if (f.init == "stars") c.init = InitStrategy::kStars;
  else if (f.init == "all") c.init = InitStrategy::kAllBicliques;
  else if (f.init == "kron") c.init = InitStrategy::kKroneckerSupport;
  else c.init = InitStrategy::kUnion;
  c.threads = std::max(1U, f.threads);
  if (!f.checkpoint.empty()) c.checkpoint_path = f.checkpoint;
  if (f.time_limit > 0) c.time_limit_seconds = f.time_limit;
  c.engine = f.lp == "exact" ? lp::Engine::kExact : lp::Engine::kFloatGuided;
  if (f.verbose) {
    const auto start = std::chrono::steady_clock::now();
    c.on_iteration = [&err, start](const IterationRecord& r) {
      const std::chrono::duration<double> t = std::chrono::steady_clock::now() - start;
      err << "[" << std::fixed << std::setprecision(1) << t.count() << " s] iteration " << r.iteration
          << " objective " << to_decimal(r.master_objective, 6) << " alpha " << to_decimal(r.alpha, 6) << " pool "
          << r.pool_size << " +" << r.added << " -" << r.pruned << " pivots " << r.pivots << std::endl;
    };
  }
  c.validate();
  return c;
}

void add_colgen_flags(CLI::App* sub, ColGenFlags& f) {
  sub->add_option("--epsilon", f.epsilon, "pricing tolerance, rational or decimal")->capture_default_str();
  sub->add_option("--prune-after", f.prune_after, "slack iterations before a column is pruned")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iters", f.max_iters, "iteration limit")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--init", f.init, "initial columns")
      ->capture_default_str()
      ->check(CLI::IsMember({"stars", "all", "kron", "union"}));
  sub->add_option("--threads", f.threads, "pricing threads")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--checkpoint", f.checkpoint, "checkpoint file, resumed when present");
  sub->add_option("--time-limit", f.time_limit, "wall clock limit in seconds");
  sub->add_flag("--verbose,-v", f.verbose, "progress line per iteration on stderr");
  sub->add_option("--lp", f.lp, "master LP engine")->capture_default_str()->check(CLI::IsMember({"exact", "hybrid"}));
}

void add_common_flags(CLI::App* sub, CommonFlags& f, bool with_power) {
  sub->add_option("matrix", f.source, "matrix file or built-in name (domino, crownN)")->required();
  if (with_power) sub->add_option("--power", f.power, "Kronecker power")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--format", f.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", f.out_path, "write the result here instead of stdout");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw FormatError("cannot open output file '" + path + "'");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string rational_csv(const Rational& q) { return q.get_num().get_str() + "," + q.get_den().get_str(); }

int cmd_bpf(const CommonFlags& common, const ColGenFlags& flags, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const ColGenConfig config = make_config(flags, err);
  const BinaryMatrix base = load_matrix(common.source);
  const std::vector<ColGenReport> reports = run_power(base, common.power, config);
  const ColGenReport& r = reports.back();
  const BinaryMatrix a = kronecker_power(base, common.power);
  const double total = std::chrono::duration<double>(Clock::now() - start).count();

  Output dest(common.out_path, out);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      json support = json::array();
      for (const auto& s : r.support) {
        support.push_back({{"rows", s.biclique.rows.to_string()},
                           {"cols", s.biclique.cols.to_string()},
                           {"weight", rational_json(s.weight)}});
      }
      json levels = json::array();
      for (const auto& l : reports) levels.push_back({{"value", rational_json(l.value)}, {"iterations", l.iterations.size()}});
      const json doc = {{"matrix_hash", matrix_hash(a)},
                        {"kind", "bpf"},
                        {"power", common.power},
                        {"value", rational_json(r.value)},
                        {"decimal", to_decimal(r.value, 6)},
                        {"root", format_real(kth_root(r.value, common.power), 6)},
                        {"iterations", r.iterations.size()},
                        {"converged", r.converged},
                        {"exact", r.exact},
                        {"resumed", r.resumed},
                        {"lower_bound", rational_json(r.lower_bound)},
                        {"alpha", rational_json(r.alpha)},
                        {"support", std::move(support)},
                        {"levels", std::move(levels)},
                        {"timings", {{"colgen_seconds", r.seconds}, {"total_seconds", total}}}};
      *dest << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *dest << "kind,power,value_num,value_den,decimal,lower_num,lower_den,iterations,converged\n";
      *dest << "bpf," << common.power << ',' << rational_csv(r.value) << ',' << to_decimal(r.value, 6) << ','
            << rational_csv(r.lower_bound) << ',' << r.iterations.size() << ',' << (r.converged ? "true" : "false")
            << '\n';
      break;
    case Format::kText: {
      *dest << value_line(r.value) << '\n';
      if (common.power > 1) {
        *dest << "root (k = " << common.power << "): " << format_real(kth_root(r.value, common.power), 6) << '\n';
      }
      *dest << "lower bound: " << value_line(r.lower_bound) << '\n';
      *dest << "iterations: " << r.iterations.size()
            << (r.converged ? (r.exact ? " (converged, exact)" : " (converged within 1+epsilon)") : " (not converged)")
            << (r.resumed ? ", resumed from checkpoint" : "") << '\n';
      *dest << "support: " << r.support.size() << " bicliques, pool " << r.final_pool_size << " columns\n";
      for (std::size_t j = 0; j + 1 < reports.size(); ++j) {
        *dest << "level " << j + 1 << ": " << value_line(reports[j].value) << '\n';
      }
      *dest << "trace: iteration objective alpha lower_bound pool added pruned\n";
      for (const auto& it : r.iterations) {
        *dest << "  " << it.iteration << ' ' << to_decimal(it.master_objective, 6) << ' ' << to_decimal(it.alpha, 6)
              << ' ' << to_decimal(it.lower_bound, 6) << ' ' << it.pool_size << ' ' << it.added << ' ' << it.pruned
              << '\n';
      }
      *dest << "time: " << std::fixed << std::setprecision(2) << total << " s\n";
      break;
    }
  }
  return r.converged ? kExitOk : kExitNonconverged;
}

void emit_simple(const CommonFlags& common, const std::string& kind, const BinaryMatrix& a, const Rational& value,
                 std::size_t nodes, double seconds, std::ostream& out) {
  Output dest(common.out_path, out);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      const json doc = {{"matrix_hash", matrix_hash(a)},
                        {"kind", kind},
                        {"power", common.power},
                        {"value", rational_json(value)},
                        {"decimal", to_decimal(value, 6)},
                        {"iterations", nodes},
                        {"converged", true},
                        {"lower_bound", rational_json(value)},
                        {"support", json::array()},
                        {"timings", {{"total_seconds", seconds}}}};
      *dest << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *dest << "kind,power,value_num,value_den,decimal\n"
            << kind << ',' << common.power << ',' << rational_csv(value) << ',' << to_decimal(value, 6) << '\n';
      break;
    case Format::kText:
      *dest << value_line(value) << '\n';
      break;
  }
}

int cmd_bcf(const CommonFlags& common, std::ostream& out) {
  const auto start = Clock::now();
  const BinaryMatrix base = load_matrix(common.source);
  const BinaryMatrix a = kronecker_power(base, common.power);
  const std::vector<Biclique> maximals = maximal_bicliques_of_power(base, common.power);
  lp::LinearProgram program{a.num_edges(), {}, lp::Sense::kCover};
  for (const auto& b : maximals) program.columns.push_back(incidence_column(a, b));
  const lp::LpSolution sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) throw InternalError("cover LP is not optimal");
  emit_simple(common, "bcf", a, sol.objective, 1, std::chrono::duration<double>(Clock::now() - start).count(), out);
  return kExitOk;
}

int cmd_integer(const CommonFlags& common, bool partition, std::size_t node_cap, std::size_t biclique_cap,
                std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const BinaryMatrix base = load_matrix(common.source);
  const BinaryMatrix a = kronecker_power(base, common.power);
  if (a.num_edges() == 0) throw EmptyGraphError("matrix has no ones");
  // Covers may use maximal bicliques only; partitions need all of them.
  const std::vector<Biclique> columns =
      partition ? enumerate_all_bicliques(a, biclique_cap) : maximal_bicliques_of_power(base, common.power);
  lp::LinearProgram program{a.num_edges(), {}, partition ? lp::Sense::kPartition : lp::Sense::kCover};
  for (const auto& b : columns) program.columns.push_back(incidence_column(a, b));
  const lp::IntegerSolution sol = lp::solve_integer(program, node_cap);
  const std::string kind = partition ? "bp" : "bc";
  if (sol.status == lp::IntegerSolution::Status::kCapExceeded) {
    err << kind << ": node cap of " << node_cap << " reached; lower bound " << to_string(sol.lower_bound);
    if (sol.has_incumbent) err << ", best found " << sol.objective;
    err << '\n';
    return kExitCapRefused;
  }
  if (sol.status != lp::IntegerSolution::Status::kOptimal) throw InternalError(kind + ": integer program infeasible");
  emit_simple(common, kind, a, Rational(static_cast<unsigned long>(sol.objective)), sol.nodes,
              std::chrono::duration<double>(Clock::now() - start).count(), out);
  return kExitOk;
}

std::map<int, Rational> read_upper_values(const std::string& path) {
  std::map<int, Rational> values;
  if (path.empty()) return values;
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open upper values file '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string k_text;
    std::string v_text;
    if (!(fields >> k_text)) continue;
    std::string extra;
    if (!(fields >> v_text) || (fields >> extra)) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": expected 'k value'");
    }
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(k_text, &used);
      if (used != k_text.size() || k < 1) throw std::invalid_argument("k");
    } catch (const std::logic_error&) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": bad power '" + k_text + "'");
    }
    values[k] = parse_rational(v_text);
  }
  return values;
}

int cmd_bounds(const CommonFlags& common, const ColGenFlags& flags, int kmax, const std::string& upper_path,
               int compute_upto, std::size_t fooling_cap, std::ostream& out, std::ostream& err) {
  const ColGenConfig config = make_config(flags, err);
  const BinaryMatrix a = load_matrix(common.source);
  std::map<int, Rational> upper = read_upper_values(upper_path);
  const std::size_t levels = static_cast<std::size_t>(compute_upto);
  std::vector<ColGenReport> reports = run_power(a, compute_upto, config);
  // Stars or a resumed checkpoint only yield the top level.
  if (reports.size() != levels) {
    ColGenConfig single = config;
    single.checkpoint_path.reset();
    upper[compute_upto] = reports.back().value;
    reports.insert(reports.begin(), run_power(a, 1, single).front());
  } else {
    for (std::size_t j = 0; j < levels; ++j) upper[static_cast<int>(j) + 1] = reports[j].value;
  }
  bool converged = true;
  for (const auto& r : reports) converged = converged && r.converged;
  const Rational bp_f = reports.front().value;
  const SandwichReport rep = sandwich_report(a, bp_f, upper, kmax, fooling_cap);

  Output dest(common.out_path, out);
  auto opt_real = [](const std::optional<Real>& x) { return x ? format_real(*x, 6) : std::string("-"); };
  switch (parse_format(common.format)) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& r : rep.rows) {
        json row = {{"k", r.k}, {"lower", format_real(r.lower, 6)}};
        row["value"] = r.value ? rational_json(*r.value) : json(nullptr);
        row["upper"] = r.upper ? json(format_real(*r.upper, 6)) : json(nullptr);
        row["best_upper"] = r.best_upper ? json(format_real(*r.best_upper, 6)) : json(nullptr);
        rows.push_back(std::move(row));
      }
      json doc = {{"matrix_hash", matrix_hash(a)},
                  {"kind", "bounds"},
                  {"bc_f", rational_json(rep.bc_f)},
                  {"bp_f", rational_json(rep.bp_f)},
                  {"rows", std::move(rows)},
                  {"interval", {rep.interval_low, rep.interval_high}}};
      doc["fooling_set"] = rep.fooling_set ? json(*rep.fooling_set) : json(nullptr);
      *dest << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *dest << "k,lower,value_num,value_den,upper,best_upper\n";
      for (const auto& r : rep.rows) {
        *dest << r.k << ',' << format_real(r.lower, 6) << ',' << (r.value ? rational_csv(*r.value) : ",") << ','
              << (r.upper ? format_real(*r.upper, 6) : "") << ',' << (r.best_upper ? format_real(*r.best_upper, 6) : "")
              << '\n';
      }
      break;
    case Format::kText:
      *dest << "fooling set: " << (rep.fooling_set ? std::to_string(*rep.fooling_set) : std::string("above cap")) << '\n';
      *dest << "bc_f: " << value_line(rep.bc_f) << '\n';
      *dest << "bp_f: " << value_line(rep.bp_f) << '\n';
      *dest << std::left << std::setw(4) << "k" << std::setw(12) << "lower" << std::setw(26) << "bp_f(A^k)"
            << std::setw(12) << "root" << "best root\n";
      for (const auto& r : rep.rows) {
        *dest << std::left << std::setw(4) << r.k << std::setw(12) << format_real(r.lower, 6) << std::setw(26)
              << (r.value ? to_string(*r.value) : std::string("-")) << std::setw(12) << opt_real(r.upper)
              << opt_real(r.best_upper) << '\n';
      }
      *dest << "interval: [" << rep.interval_low << ", " << rep.interval_high << "]\n";
      break;
  }
  return converged ? kExitOk : kExitNonconverged;
}

int cmd_kron(const CommonFlags& common, std::ostream& out) {
  const BinaryMatrix a = kronecker_power(load_matrix(common.source), common.power);
  Output dest(common.out_path, out);
  *dest << format_matrix(a);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional biclique partition and cover numbers by column generation", "fbp"};
  app.require_subcommand(1);

  CommonFlags common;
  ColGenFlags flags;
  int kmax = 5;
  int compute_upto = 1;
  std::string upper_path;
  std::size_t node_cap = 100000;
  std::size_t biclique_cap = 100000;
  std::size_t fooling_cap = 512;

  CLI::App* bpf = app.add_subcommand("bpf", "fractional biclique partition number");
  add_common_flags(bpf, common, true);
  add_colgen_flags(bpf, flags);
  CLI::App* bcf = app.add_subcommand("bcf", "fractional biclique cover number");
  add_common_flags(bcf, common, true);
  CLI::App* bp = app.add_subcommand("bp", "biclique partition number (small instances)");
  add_common_flags(bp, common, true);
  bp->add_option("--node-cap", node_cap, "branch and bound node limit")->capture_default_str();
  bp->add_option("--biclique-cap", biclique_cap, "limit on enumerated bicliques")->capture_default_str();
  CLI::App* bc = app.add_subcommand("bc", "biclique cover number (small instances)");
  add_common_flags(bc, common, true);
  bc->add_option("--node-cap", node_cap, "branch and bound node limit")->capture_default_str();
  CLI::App* bounds = app.add_subcommand("bounds", "lower and upper bounds on the asymptotic value");
  add_common_flags(bounds, common, false);
  add_colgen_flags(bounds, flags);
  bounds->add_option("--kmax", kmax, "rows of the lower bound table")->capture_default_str()->check(CLI::PositiveNumber);
  bounds->add_option("--upper-values", upper_path, "file of 'k value' lines with bp_f of the k-th power");
  bounds->add_option("--compute", compute_upto, "compute bp_f of the powers up to this k")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bounds->add_option("--fooling-cap", fooling_cap, "largest number of ones for the fooling set search")
      ->capture_default_str();
  CLI::App* kron = app.add_subcommand("kron", "write a Kronecker power");
  add_common_flags(kron, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fbp: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kExitUsage;
  }

  try {
    if (bpf->parsed()) return cmd_bpf(common, flags, out, err);
    if (bcf->parsed()) return cmd_bcf(common, out);
    if (bp->parsed()) return cmd_integer(common, true, node_cap, biclique_cap, out, err);
    if (bc->parsed()) return cmd_integer(common, false, node_cap, biclique_cap, out, err);
    if (bounds->parsed()) return cmd_bounds(common, flags, kmax, upper_path, compute_upto, fooling_cap, out, err);
    if (kron->parsed()) return cmd_kron(common, out);
  } catch (const CheckpointError& e) {
    err << "fbp: checkpoint error: " << e.what() << '\n';
    return kExitCheckpoint;
  } catch (const CapExceeded& e) {
    err << "fbp: refused: " << e.what() << '\n';
    return kExitCapRefused;
  } catch (const FormatError& e) {
    err << "fbp: input error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const EmptyGraphError& e) {
    err << "fbp: input error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const SizeError& e) {
    err << "fbp: input error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const ContractViolation& e) {
    err << "fbp: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "fbp: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "fbp: error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace fbp
