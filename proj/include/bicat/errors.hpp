#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicat {

// Base for every structured failure the library reports. The witness string
// is embedded in what() so CLI reports can surface it verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string kind, std::string witness)
      : std::runtime_error(kind + ": " + witness),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

private:
  std::string kind_;
  std::string witness_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(std::string w) : Error("DimensionMismatch", std::move(w)) {}
};

struct AssociativityViolation : Error {
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("AssociativityViolation",
              "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) +
                  " != e" + std::to_string(i) + " (e" + std::to_string(j) + " e" +
                  std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

struct UnitViolation : Error {
  explicit UnitViolation(std::size_t i)
      : Error("UnitViolation", "unit law fails on basis element e" + std::to_string(i)), i(i) {}
  std::size_t i;
};

struct ActionViolation : Error {
  explicit ActionViolation(std::string w) : Error("ActionViolation", std::move(w)) {}
};

struct AlgebraMismatch : Error {
  explicit AlgebraMismatch(std::string w) : Error("AlgebraMismatch", std::move(w)) {}
};

struct NotAHomomorphism : Error {
  NotAHomomorphism(std::size_t i, std::size_t j)
      : Error("NotAHomomorphism",
              "rho(e" + std::to_string(i) + " e" + std::to_string(j) + ") != rho(e" +
                  std::to_string(i) + ") rho(e" + std::to_string(j) + ")"),
        i(i), j(j) {}
  explicit NotAHomomorphism(std::string w) : Error("NotAHomomorphism", std::move(w)), i(0), j(0) {}
  std::size_t i, j;
};

struct NotAFunctor : Error {
  explicit NotAFunctor(std::string w) : Error("NotAFunctor", std::move(w)) {}
};

struct NotComposable : Error {
  explicit NotComposable(std::string w) : Error("NotComposable", std::move(w)) {}
};

struct ObjectMismatch : Error {
  explicit ObjectMismatch(std::string w) : Error("ObjectMismatch", std::move(w)) {}
};

struct GroupoidMismatch : Error {
  explicit GroupoidMismatch(std::string w) : Error("GroupoidMismatch", std::move(w)) {}
};

struct NotRegular : Error {
  explicit NotRegular(std::string w) : Error("NotRegular", std::move(w)) {}
};

struct NotCertified : Error {
  explicit NotCertified(std::string w) : Error("NotCertified", std::move(w)) {}
};

struct DegenerateResult : Error {
  explicit DegenerateResult(std::string w) : Error("DegenerateResult", std::move(w)) {}
};

struct ValidationFailure : Error {
  explicit ValidationFailure(std::string w) : Error("ValidationFailure", std::move(w)) {}
};

}  // namespace bicat
