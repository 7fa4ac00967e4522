#pragma once

#include <stdexcept>
#include <string>

namespace diskinterp {

/// Bad argument or violated precondition on an input value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the closed unit disk.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Boundary trace requested at a peak, where F has a pole.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The off-arc supremum estimate of a peak function reached 1.
class NoContractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stage or the final interpolant violated one of its certified bounds.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diskinterp
