#pragma once

/// @file errors.hpp
/// @brief Exception hierarchy shared by all modules.
///
/// DomainError covers bad input (the CLI maps it to exit code 2);
/// ConsistencyError means two independent computations disagreed (exit 3).

#include <stdexcept>
#include <string>

namespace cqs {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |det(g1, g2)| = 1: the cone is smooth and has no singularity to analyze.
class SmoothCone : public DomainError {
 public:
  SmoothCone() : DomainError("smooth cone: |det(g1, g2)| = 1") {}
};

/// e <= 3 (q = n - 1): the singularity is a hypersurface.
class HypersurfaceCase : public DomainError {
 public:
  HypersurfaceCase() : DomainError("hypersurface case: versal base irreducible") {}
};

class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A fan failed the T-test, roof continuity or roof convexity where it was
/// required to pass.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cqs
