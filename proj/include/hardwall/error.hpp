#ifndef HARDWALL_ERROR_HPP
#define HARDWALL_ERROR_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace hardwall {

// Runtime numerical failure (non-convergence, overflow region, underflow, ...).
// `code` is a stable machine-readable tag, reused verbatim by the CLI error
// reports. `partial` carries the best available estimate when one exists.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(std::string code, const std::string& what,
                  double partial = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(what), code_(std::move(code)), partial_(partial) {}

  const std::string& code() const noexcept { return code_; }
  double partial() const noexcept { return partial_; }

 private:
  std::string code_;
  double partial_;
};

}  // namespace hardwall

#endif
