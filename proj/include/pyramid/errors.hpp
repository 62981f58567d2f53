#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pyramid {

// Raised by validate(); carries every violated constraint, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid model parameters:";
    for (const auto& x : v) s += "\n  - " + x;
    return s;
  }
  std::vector<std::string> violations_;
};

struct ZeroDiagonalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpectralRadiusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularBoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HonestProfitZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularSubGeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewWinsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSweepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pyramid
