#pragma once

#include <stdexcept>
#include <string>

namespace uniprod {

// Base class for every error the toolkit throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed caller input: bad indices, bad sizes, unknown options.
struct InputError : Error {
  using Error::Error;
};

// A Cayley-table entry outside 0..n-1.
struct OutOfRangeEntry : Error {
  OutOfRangeEntry(int row, int col, int value, int order)
      : Error("table entry out of range at (" + std::to_string(row) + "," +
              std::to_string(col) + "): " + std::to_string(value) +
              " not in 0.." + std::to_string(order - 1)),
        row(row), col(col), value(value), order(order) {}
  int row, col, value, order;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line, col;
};

struct NotASubgroup : Error {
  using Error::Error;
};

struct NotATransversal : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotExactFactorization : Error {
  using Error::Error;
};

// Datum tables fail the normalization conditions enforced at construction.
struct NotNormalized : Error {
  using Error::Error;
};

// A theorem-backed recomputation failed; indicates a bug, never expected.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace uniprod
