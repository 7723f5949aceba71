#ifndef ADER1D_ERRORS_HPP
#define ADER1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ader1d {

// Bad user input: configuration values, file paths, precondition violations.
// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure of the numerical computation itself: inadmissible states, vacuum
// generation, solver non-convergence. The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ader1d

#endif
