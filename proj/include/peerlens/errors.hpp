#pragma once

#include <stdexcept>
#include <string>

namespace peerlens {

// CLI exit codes. Library code throws; the CLI maps exception -> code.
enum class ExitCode : int {
    Ok = 0,
    Usage = 2,
    Data = 3,
    Degenerate = 4,
};

// Unusable input data: missing/empty files, malformed corpora, single-class
// training sets, and so on.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A metric was asked for on text that has no usable words.
class NoText : public DataError {
  public:
    explicit NoText(const std::string& what) : DataError(what) {}
};

// None of the tokens were found in the lexicon.
class NoCoverage : public DataError {
  public:
    explicit NoCoverage(const std::string& what) : DataError(what) {}
};

// Statistic undefined for this input (constant series, zero variance, n too
// small).
class DegenerateInput : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace peerlens
