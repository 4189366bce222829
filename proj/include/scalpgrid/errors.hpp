#pragma once

#include <stdexcept>
#include <string>

namespace scalpgrid {

// Bad flags, unknown enum names, invalid parameter combinations. CLI exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data: files, layouts, recordings. CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergence, non-finite intermediate values. CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scalpgrid
