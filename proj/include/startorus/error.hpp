#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace startorus {

/// Precondition violated by a caller (bad dimensions, mismatched shapes, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// No palette size up to the requested maximum admits a star coloring.
class RangeError : public std::range_error {
  public:
    RangeError(const std::string& what, int kmax) : std::range_error(what), kmax_(kmax) {}

    int kmax() const noexcept { return kmax_; }

  private:
    int kmax_;
};

/// The composer could not produce a verified coloring (all assemblies and the fallback failed).
class ConstructionError : public std::runtime_error {
  public:
    ConstructionError(const std::string& what, int m, int n)
        : std::runtime_error(what), m_(m), n_(n) {}

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }

  private:
    int m_;
    int n_;
};

} // namespace startorus
