#pragma once

#include <stdexcept>
#include <string>

namespace fbp {

// Caller broke a documented precondition (bad indices, invalid biclique, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested object would not fit in addressable memory / index types.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force routine refused to run because its work bound exceeds a cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix text, rational literal or upper-values file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven invariant failed at runtime; always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fbp
