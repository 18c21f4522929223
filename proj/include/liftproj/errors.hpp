#pragma once

#include <stdexcept>
#include <string>

namespace liftproj {

/// Invalid argument (wrong domain, mismatched dimensions, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A dense-size guard was exceeded (e.g. a 2^n x 2^n matrix for n too large).
class SizeError : public std::length_error {
 public:
  explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// An LP was proven infeasible where a value was requested.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An LP objective was proven unbounded.
class UnboundedError : public std::runtime_error {
 public:
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liftproj
