#pragma once

#include <stdexcept>
#include <string>

namespace pcfosc {

/// Invalid physical or numerical parameter (non-positive mass, too coarse grid, ...).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the mathematical domain of a function.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A numerical construction (root finding, exact reduction) did not complete.
class construction_error : public std::runtime_error {
 public:
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// A callable produced a non-finite value where a finite one was required.
class evaluation_error : public std::runtime_error {
 public:
  explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pcfosc
