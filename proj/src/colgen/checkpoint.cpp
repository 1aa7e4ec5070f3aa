#include "fbp/colgen/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fbp/errors.hpp"
#include "fbp/graph/matrix_io.hpp"

namespace fbp {

using nlohmann::json;

namespace {

std::string encode_variable(const lp::Variable& v) {
  switch (v.kind) {
    case lp::Variable::Kind::kStructural: return "c" + std::to_string(v.index);
    case lp::Variable::Kind::kSurplus: return "s" + std::to_string(v.index);
    case lp::Variable::Kind::kArtificial: return "a" + std::to_string(v.index);
  }
  return {};
}

lp::Variable decode_variable(const std::string& s) {
  if (s.size() < 2) throw CheckpointError("malformed basis entry '" + s + "'");
  lp::Variable v;
  switch (s[0]) {
    case 'c': v.kind = lp::Variable::Kind::kStructural; break;
    case 's': v.kind = lp::Variable::Kind::kSurplus; break;
    case 'a': v.kind = lp::Variable::Kind::kArtificial; break;
    default: throw CheckpointError("malformed basis entry '" + s + "'");
  }
  try {
    std::size_t used = 0;
    v.index = std::stoull(s.substr(1), &used);
    if (used != s.size() - 1) throw CheckpointError("malformed basis entry '" + s + "'");
  } catch (const std::logic_error&) {
    throw CheckpointError("malformed basis entry '" + s + "'");
  }
  return v;
}

json record_to_json(const IterationRecord& r) {
  return {{"iteration", r.iteration},       {"master_objective", to_string(r.master_objective)},
          {"alpha", to_string(r.alpha)},     {"lower_bound", to_string(r.lower_bound)},
          {"pool_size", r.pool_size},        {"added", r.added},
          {"pruned", r.pruned},              {"pivots", r.pivots}};
}

IterationRecord record_from_json(const json& j) {
  IterationRecord r;
  r.iteration = j.at("iteration").get<std::size_t>();
  r.master_objective = parse_rational(j.at("master_objective").get<std::string>());
  r.alpha = parse_rational(j.at("alpha").get<std::string>());
  r.lower_bound = parse_rational(j.at("lower_bound").get<std::string>());
  r.pool_size = j.at("pool_size").get<std::size_t>();
  r.added = j.at("added").get<std::size_t>();
  r.pruned = j.at("pruned").get<std::size_t>();
  r.pivots = j.at("pivots").get<std::size_t>();
  return r;
}

}  // namespace

CheckpointState snapshot(const BinaryMatrix& a, const ColumnPool& pool, const lp::Basis& basis,
                         std::size_t iteration, const Rational& best_lower_bound,
                         const std::vector<IterationRecord>& trace) {
  CheckpointState s;
  s.matrix_hash = matrix_hash(a);
  s.num_rows = a.num_rows();
  s.num_cols = a.num_cols();
  s.iteration = iteration;
  s.best_lower_bound = best_lower_bound;
  s.pool.reserve(pool.size());
  for (const auto& e : pool.entries()) s.pool.push_back({e.biclique, e.slack_counter, e.born_iteration, e.star});
  s.basis = basis;
  s.trace = trace;
  return s;
}

void write_checkpoint(const std::string& path, const CheckpointState& state) {
  json pool = json::array();
  for (const auto& e : state.pool) {
    pool.push_back({{"rows", e.biclique.rows.to_hex()},
                    {"cols", e.biclique.cols.to_hex()},
                    {"slack_counter", e.slack_counter},
                    {"born_iteration", e.born_iteration},
                    {"star", e.star}});
  }
  json basis = json::array();
  for (const auto& v : state.basis.heading) basis.push_back(encode_variable(v));
  json trace = json::array();
  for (const auto& r : state.trace) trace.push_back(record_to_json(r));
  const json doc = {{"format", "fbp-colgen-checkpoint"},
                    {"version", kCheckpointVersion},
                    {"matrix_hash", state.matrix_hash},
                    {"num_rows", state.num_rows},
                    {"num_cols", state.num_cols},
                    {"iteration", state.iteration},
                    {"best_lower_bound", to_string(state.best_lower_bound)},
                    {"pool", std::move(pool)},
                    {"basis", std::move(basis)},
                    {"trace", std::move(trace)}};

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot open checkpoint file '" + tmp + "' for writing");
    out << doc.dump() << '\n';
    out.flush();
    if (!out) throw CheckpointError("failed writing checkpoint file '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place at '" + path + "': " + ec.message());
}

std::optional<CheckpointState> read_checkpoint(const std::string& path, const BinaryMatrix& a) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot open checkpoint file '" + path + "'");
  CheckpointState s;
  try {
    const json doc = json::parse(in);
    if (doc.at("format").get<std::string>() != "fbp-colgen-checkpoint") {
      throw CheckpointError("'" + path + "' is not a column generation checkpoint");
    }
    if (doc.at("version").get<int>() != kCheckpointVersion) {
      throw CheckpointError("unsupported checkpoint version in '" + path + "'");
    }
    s.matrix_hash = doc.at("matrix_hash").get<std::string>();
    if (s.matrix_hash != matrix_hash(a)) {
      throw CheckpointError("checkpoint '" + path + "' belongs to a different matrix (hash " + s.matrix_hash +
                            ", expected " + matrix_hash(a) + ")");
    }
    s.num_rows = doc.at("num_rows").get<std::size_t>();
    s.num_cols = doc.at("num_cols").get<std::size_t>();
    if (s.num_rows != a.num_rows() || s.num_cols != a.num_cols()) {
      throw CheckpointError("checkpoint dimensions do not match the matrix");
    }
    s.iteration = doc.at("iteration").get<std::size_t>();
    s.best_lower_bound = parse_rational(doc.at("best_lower_bound").get<std::string>());
    for (const auto& e : doc.at("pool")) {
      CheckpointState::Entry entry;
      entry.biclique.rows = Bitset::from_hex(e.at("rows").get<std::string>(), s.num_rows);
      entry.biclique.cols = Bitset::from_hex(e.at("cols").get<std::string>(), s.num_cols);
      entry.slack_counter = e.at("slack_counter").get<std::size_t>();
      entry.born_iteration = e.value("born_iteration", std::size_t{0});
      entry.star = e.value("star", false);
      if (!is_valid_biclique(a, entry.biclique)) throw CheckpointError("checkpoint pool holds an invalid biclique");
      s.pool.push_back(std::move(entry));
    }
    for (const auto& v : doc.at("basis")) s.basis.heading.push_back(decode_variable(v.get<std::string>()));
    for (const auto& r : doc.at("trace")) s.trace.push_back(record_from_json(r));
  } catch (const json::exception& e) {
    throw CheckpointError("malformed checkpoint '" + path + "': " + e.what());
  } catch (const FormatError& e) {
    throw CheckpointError("malformed checkpoint '" + path + "': " + e.what());
  }
  return s;
}

}  // namespace fbp
