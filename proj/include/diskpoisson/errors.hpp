#pragma once

#include <stdexcept>

namespace diskpoisson {

/// An argument lies outside the region where an operation is defined
/// (a point off the disk, a radius exceeding the boundary distance, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two arguments collide at a kernel singularity.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A point is too close to the unit circle for the boundary sampling in use.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Successive quadrature refinements disagree.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The differential degenerates (lambda(D_f) vanishes) at a sampled point.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sense-reversing point (J_f <= 0) was met where a sense-preserving map is required.
class SenseReversalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diskpoisson
