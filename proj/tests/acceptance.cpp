// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Criterion 4 (D^4) is a stretch goal; it runs under a time budget taken from
// FBP_STRETCH_SECONDS (default 900, 0 skips it) and never affects the exit code.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fbp/bounds.hpp"
#include "fbp/colgen/colgen.hpp"
#include "fbp/graph/enumerate.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/maximal.hpp"
#include "fbp/lp/certificate.hpp"
#include "fbp/lp/integer.hpp"
#include "fbp/pricing.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << s << " s";
  return o.str();
}

void verdict(int id, bool ok, const std::string& what, bool blocking = true) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << what << (blocking ? "" : " (stretch, non-blocking)")
            << std::endl;
  if (!ok && blocking) ++failures;
}

void detail(const std::string& s) { std::cout << "    " << s << std::endl; }

lp::LinearProgram program(const BinaryMatrix& a, const std::vector<Biclique>& bs, lp::Sense sense) {
  lp::LinearProgram p;
  p.num_rows = a.num_edges();
  p.sense = sense;
  for (const auto& b : bs) p.columns.push_back(incidence_column(a, b));
  return p;
}

// Exact strong duality of the final master, and feasibility of its dual
// divided by alpha over every biclique (pricing is exact, so its maximum over
// the maximal bicliques is the maximum over all bicliques).
bool certified(const BinaryMatrix& a, const std::vector<Biclique>& maximals, const ColGenReport& r) {
  std::vector<Bitset> cols;
  Rational primal = 0;
  for (const auto& s : r.support) primal += s.weight;
  Rational dual = 0;
  for (const auto& y : r.certificate.dual) dual += y;
  if (r.certificate.status != lp::Status::kOptimal || primal != r.value || dual != r.value) return false;
  if (sgn(r.alpha) <= 0) return false;
  std::vector<Rational> scaled = r.certificate.dual;
  for (auto& y : scaled) y /= r.alpha;
  PricingOptions o;
  o.threshold = 1;
  const PricingResult p = price_all(a, maximals, EdgeWeights(scaled), o);
  return p.alpha <= 1 && p.candidates.empty();
}

ColGenConfig config_with(InitStrategy init) {
  ColGenConfig c;
  c.init = init;
  c.threads = 1;
  return c;
}

std::optional<ColGenReport> d2_report;
std::optional<ColGenReport> d3_report;
bool certificates_ok = true;
std::size_t certificates_checked = 0;

void note_certificate(const BinaryMatrix& a, const std::vector<Biclique>& maximals, const ColGenReport& r) {
  ++certificates_checked;
  if (!certified(a, maximals, r)) certificates_ok = false;
}

void criterion1() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto maximals = enumerate_maximal(d);
  bool ok = true;
  for (InitStrategy init : {InitStrategy::kAllBicliques, InitStrategy::kStars}) {
    const auto t = Clock::now();
    const ColGenReport r = run_column_generation(d, config_with(init));
    const double s = seconds_since(t);
    note_certificate(d, maximals, r);
    const bool this_ok = r.converged && r.value == Rational(5, 2) && s < 1.0;
    detail(std::string(init == InitStrategy::kStars ? "stars" : "all bicliques") + ": " + to_string(r.value) +
           " in " + std::to_string(r.iterations.size()) + " iterations, " + secs(s));
    ok = ok && this_ok;
  }
  verdict(1, ok, "bp_f(D) = 5/2 from all-bicliques and stars starts, each under 1 s");
}

void criterion2() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker(d, d);
  const auto t = Clock::now();
  const auto levels = run_power(d, 2, config_with(InitStrategy::kUnion));
  const double s = seconds_since(t);
  const ColGenReport& r = levels.back();
  d2_report = r;
  note_certificate(d2, maximal_bicliques_of_power(d, 2), r);
  detail("bp_f(D (x) D) = " + to_string(r.value) + ", " + std::to_string(r.iterations.size()) + " iterations, " +
         secs(s));

  bool fixture_ok = true;
  const auto support = fixture::domino2_support();
  for (std::size_t e = 0; e < d2.num_edges(); ++e) {
    Rational cover = 0;
    for (const auto& b : support) {
      if (!is_valid_biclique(d2, b)) fixture_ok = false;
      else if (incidence_column(d2, b).test(e)) cover += Rational(1, 2);
    }
    if (cover != 1) fixture_ok = false;
  }
  detail(std::string("12 bicliques of weight 1/2 partition D (x) D: ") + (fixture_ok ? "yes" : "no"));
  verdict(2, r.converged && r.value == 6 && s < 30.0 && fixture_ok,
          "bp_f(D (x) D) = 6 under 30 s, and the half-weight fixture is a fractional partition");
}

void criterion3() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto t = Clock::now();
  const auto levels = run_power(d, 3, config_with(InitStrategy::kUnion));
  const double s = seconds_since(t);
  const ColGenReport& r = levels.back();
  d3_report = r;
  note_certificate(kronecker_power(d, 3), maximal_bicliques_of_power(d, 3), r);
  const double value = r.value.get_d();
  detail("bp_f(D^3) = " + to_string(r.value) + " = " + to_decimal(r.value, 9) + ", " +
         std::to_string(r.iterations.size()) + " iterations, " + secs(s));
  detail(std::string("agreement with 2059/149: ") + (r.value == Rational(2059, 149) ? "yes" : "no"));
  verdict(3, r.converged && std::abs(value - fixture::kPowerValues[2]) <= 1e-5 && s < 1800.0,
          "bp_f(D^3) = 13.818792 +- 1e-5 under 30 min");
}

void criterion4() {
  double budget = 900;
  if (const char* env = std::getenv("FBP_STRETCH_SECONDS")) budget = std::atof(env);
  if (budget <= 0) {
    detail("skipped, FBP_STRETCH_SECONDS = 0");
    verdict(4, false, "bp_f(D^4) = 32.040389 +- 1e-3", false);
    return;
  }
  ColGenConfig c = config_with(InitStrategy::kUnion);
  c.time_limit_seconds = budget;
  const auto t = Clock::now();
  const auto levels = run_power(BinaryMatrix::domino(), 4, c);
  const double s = seconds_since(t);
  const ColGenReport& r = levels.back();
  if (levels.size() < 4 || !r.converged) {
    detail("not finished within the " + secs(budget) + " budget after " + std::to_string(r.iterations.size()) +
           " iterations at level " + std::to_string(levels.size()) + "; best bounds [" + to_decimal(r.lower_bound, 6) +
           ", " + to_decimal(r.value, 6) + "]");
    verdict(4, false, "bp_f(D^4) = 32.040389 +- 1e-3", false);
    return;
  }
  detail("bp_f(D^4) = " + to_string(r.value) + " = " + to_decimal(r.value, 6) + ", " + secs(s));
  verdict(4, std::abs(r.value.get_d() - fixture::kPowerValues[3]) <= 1e-3, "bp_f(D^4) = 32.040389 +- 1e-3", false);
}

void criterion5() {
  const Rational d = fractional_cover_number(BinaryMatrix::domino());
  const Rational c = fractional_cover_number(BinaryMatrix::crown(5));
  detail("bc_f(D) = " + to_string(d) + ", bc_f(crown5) = " + to_string(c));
  verdict(5, d == 2 && c == Rational(10, 3), "bc_f(D) = 2 and bc_f(crown5) = 10/3");
}

void criterion6() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto bc = lp::solve_integer(program(d, enumerate_maximal(d), lp::Sense::kCover), 100000);
  const auto bp = lp::solve_integer(program(d, enumerate_all_bicliques(d, 1000), lp::Sense::kPartition), 100000);
  const std::size_t brute = oracle::partition_number(d);
  detail("bc(D) = " + std::to_string(bc.objective) + ", bp(D) = " + std::to_string(bp.objective) +
         ", exhaustive partition search = " + std::to_string(brute));
  verdict(6,
          bc.status == lp::IntegerSolution::Status::kOptimal && bp.status == lp::IntegerSolution::Status::kOptimal &&
              bc.objective == 2 && bp.objective == 3 && brute == 3,
          "bc(D) = 2 and bp(D) = 3");
}

void criterion7() {
  bool ok = true;
  std::string row;
  for (int k = 1; k <= 5; ++k) {
    const std::string v = format_real(lemma_lower_bound(Rational(5, 2), 2, k).rooted, 3);
    row += (k > 1 ? " " : "") + v;
    ok = ok && v == fixture::kLemmaTable[k - 1];
  }
  detail("2 (5/4)^(1/k), k = 1..5: " + row);
  verdict(7, ok, "lower bound table 2.5 2.236 2.154 2.115 2.091");
}

void criterion8() {
  if (!d2_report || !d3_report) {
    verdict(8, false, "sandwich intervals (needs the results of 2 and 3)");
    return;
  }
  const BinaryMatrix d = BinaryMatrix::domino();
  std::map<int, Rational> upper = {{2, d2_report->value}, {3, d3_report->value}};
  const SandwichReport three = sandwich_report(d, Rational(5, 2), upper, 3);
  // The printed upper end must contain the true cube root and lie inside the target interval.
  const Rational high3 = parse_rational(three.interval_high);
  const bool three_ok = three.interval_low == "2" && high3 <= parse_rational("2.399700") &&
                        high3 * high3 * high3 >= d3_report->value;
  detail("computed k <= 3: [" + three.interval_low + ", " + three.interval_high + "]");

  upper[5] = parse_rational("75.201302");
  const SandwichReport five = sandwich_report(d, Rational(5, 2), upper, 5);
  detail("with the reference k = 5 value: [" + five.interval_low + ", " + five.interval_high + "]");
  verdict(8, three_ok && five.interval_low == "2" && five.interval_high == "2.372713",
          "sandwich within [2, 2.399700] from k <= 3, and [2, 2.372713] with k = 5");
}

void criterion9() {
  std::mt19937 rng(20240917);
  int partition_agree = 0;
  int cover_agree = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const BinaryMatrix a = oracle::random_matrix(rng, 4, 4);
    const auto all = oracle::all_bicliques(a);
    const Rational full = lp::solve(program(a, all, lp::Sense::kPartition)).objective;
    const ColGenReport r = run_column_generation(a, config_with(InitStrategy::kStars));
    note_certificate(a, enumerate_maximal(a), r);
    if (r.converged && r.value == full) ++partition_agree;
    if (fractional_cover_number(a) == lp::solve(program(a, all, lp::Sense::kCover)).objective) ++cover_agree;
  }
  detail("partition agreement " + std::to_string(partition_agree) + "/" + std::to_string(trials) +
         ", cover agreement " + std::to_string(cover_agree) + "/" + std::to_string(trials));
  verdict(9, partition_agree == trials && cover_agree == trials,
          "column generation and maximal-biclique cover LP match full enumeration on 200 random matrices");
}

void criterion10() {
  std::mt19937 rng(1010);
  const BinaryMatrix d = BinaryMatrix::domino();
  const BinaryMatrix d2 = kronecker(d, d);
  const Rational threshold(1000001, 1000000);
  int agree = 0;
  int checks = 0;
  for (const BinaryMatrix* a : {&d, &d2}) {
    const auto maximals = enumerate_maximal(*a);
    for (int t = 0; t < 200; ++t) {
      const auto y = oracle::random_weights(rng, a->num_edges());
      const EdgeWeights w(y);
      for (const auto& b : maximals) {
        ++checks;
        if (price_maximal(*a, b, w, threshold, 64).best.value == oracle::max_subrectangle(*a, y, b)) ++agree;
      }
    }
  }
  detail(std::to_string(agree) + "/" + std::to_string(checks) + " maximal bicliques priced exactly");
  verdict(10, agree == checks, "pricing equals brute force on 200 random duals for D and D (x) D");
}

void criterion11() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto p = program(d, enumerate_maximal(d), lp::Sense::kPartition);
  const lp::LpSolution s = lp::solve(p);
  const bool ok = s.status == lp::Status::kInfeasible && lp::check_infeasibility_ray(p, s);
  detail(std::string("status ") + (s.status == lp::Status::kInfeasible ? "infeasible" : "not infeasible") +
         ", ray certified: " + (lp::check_infeasibility_ray(p, s) ? "yes" : "no"));
  verdict(11, ok, "partition LP over the 4 maximal bicliques of D is infeasible");
}

void criterion12() {
  detail(std::to_string(certificates_checked) + " final masters checked");
  verdict(12, certificates_ok && certificates_checked > 0,
          "exact strong duality and feasibility of the alpha-rescaled dual on every run");
}

void criterion13() {
  const BinaryMatrix d = BinaryMatrix::domino();
  const auto path = std::filesystem::temp_directory_path() / "fbp_acceptance_resume.json";
  std::filesystem::remove(path);
  const ColGenConfig plain = config_with(InitStrategy::kUnion);
  const ColGenReport full = run_power(d, 2, plain).back();
  const ColGenReport again = run_power(d, 2, plain).back();

  ColGenConfig interrupted = plain;
  interrupted.checkpoint_path = path.string();
  interrupted.max_iterations = 2;
  const ColGenReport head = run_power(d, 2, interrupted).back();
  ColGenConfig resume = plain;
  resume.checkpoint_path = path.string();
  const ColGenReport tail = run_power(d, 2, resume).back();
  std::filesystem::remove(path);

  const bool deterministic = full.iterations == again.iterations && full.certificate.dual == again.certificate.dual;
  const bool resumed = !head.converged && tail.resumed && tail.converged && tail.value == full.value &&
                       tail.iterations == full.iterations && tail.certificate.dual == full.certificate.dual &&
                       tail.certificate.primal.size() == full.certificate.primal.size();
  detail("uninterrupted " + to_string(full.value) + " in " + std::to_string(full.iterations.size()) +
         " iterations; stopped after " + std::to_string(head.iterations.size()) + ", resumed to " +
         to_string(tail.value));
  verdict(13, deterministic && resumed, "repeat runs and an interrupted-and-resumed D (x) D run agree bit for bit");
}

void guarded(int id, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    detail(std::string("exception: ") + e.what());
    verdict(id, false, "raised an exception", id != 4);
  }
}

}  // namespace

int main() {
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  guarded(10, criterion10);
  guarded(11, criterion11);
  guarded(12, criterion12);
  guarded(13, criterion13);
  std::cout << (failures == 0 ? "all blocking criteria passed" : std::to_string(failures) + " blocking criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
