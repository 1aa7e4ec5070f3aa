#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fbp/colgen/colgen.hpp"
#include "fbp/colgen/column_pool.hpp"

namespace fbp {

inline constexpr int kCheckpointVersion = 1;

struct CheckpointState {
  std::string matrix_hash;
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::size_t iteration = 0;
  Rational best_lower_bound;
  struct Entry {
    Biclique biclique;
    std::size_t slack_counter = 0;
    std::size_t born_iteration = 0;
    bool star = false;
  };
  std::vector<Entry> pool;
  lp::Basis basis;
  std::vector<IterationRecord> trace;
};

CheckpointState snapshot(const BinaryMatrix& a, const ColumnPool& pool, const lp::Basis& basis,
                         std::size_t iteration, const Rational& best_lower_bound,
                         const std::vector<IterationRecord>& trace);

// write-temp-then-rename. Throws CheckpointError on I/O failure.
void write_checkpoint(const std::string& path, const CheckpointState& state);

// nullopt if the file does not exist. Throws CheckpointError on unreadable or
// malformed files and when the matrix hash differs from `a`.
std::optional<CheckpointState> read_checkpoint(const std::string& path, const BinaryMatrix& a);

}  // namespace fbp
