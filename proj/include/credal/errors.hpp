/**
 * Error types for the credal engine.
 *
 * Every failure carries a stable machine-readable kind tag (the CLI prints
 * `ERROR <kind>: <detail>`) plus a human-readable detail string.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace credal {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Malformed text input (model files, rationals, density files).
class SyntaxError : public Error {
 public:
  explicit SyntaxError(const std::string& detail) : Error("SyntaxError", detail) {}
  SyntaxError(int line, int column, const std::string& detail)
      : Error("SyntaxError",
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

/// A directed cycle where a DAG is required.
class CycleError : public Error {
 public:
  explicit CycleError(const std::string& detail) : Error("CycleError", detail) {}
};

/// A node without a local credal set.
class MissingCpt : public Error {
 public:
  explicit MissingCpt(const std::string& detail) : Error("MissingCpt", detail) {}
};

/// A local interval system with no feasible density.
class InfeasibleLocal : public Error {
 public:
  explicit InfeasibleLocal(const std::string& detail) : Error("InfeasibleLocal", detail) {}
};

/// A two-variable marginal specification with an empty constraint polytope.
class InfeasibleSpec : public Error {
 public:
  explicit InfeasibleSpec(const std::string& detail) : Error("InfeasibleSpec", detail) {}
};

/// An infeasible constraint system handed to the LP layer.
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& detail) : Error("Infeasible", detail) {}
};

/// Vertex enumeration requested above the configured dimension cap.
class DimensionCap : public Error {
 public:
  explicit DimensionCap(const std::string& detail) : Error("DimensionCap", detail) {}
};

/// Selection enumeration would exceed the configured limit; carries the exact count.
class CombinationLimit : public Error {
 public:
  CombinationLimit(std::string count, std::uint64_t limit)
      : Error("CombinationLimit",
              "selection count " + count + " exceeds limit " + std::to_string(limit)),
        count_(std::move(count)) {}

  /// Exact selection count, as a decimal string (may exceed 64 bits).
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

/// Conditioning on an event whose upper probability is zero.
class ZeroEvidence : public Error {
 public:
  explicit ZeroEvidence(const std::string& detail) : Error("ZeroEvidence", detail) {}
};

/// Belief change whose factorization p(rest|Y)p(Y) is undefined.
class ZeroMarginal : public Error {
 public:
  explicit ZeroMarginal(const std::string& detail) : Error("ZeroMarginal", detail) {}
};

/// Vertex restriction with no satisfying vertex.
class EmptyRestriction : public Error {
 public:
  explicit EmptyRestriction(const std::string& detail) : Error("EmptyRestriction", detail) {}
};

/// Request beyond the module's frozen scale (e.g. natural extensions past two binary variables).
class UnsupportedScale : public Error {
 public:
  explicit UnsupportedScale(const std::string& detail) : Error("UnsupportedScale", detail) {}
};

/// Violated precondition or invariant on API use.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& detail) : Error("DomainError", detail) {}
};

}  // namespace credal
