#pragma once

#include <stdexcept>
#include <string>

namespace raceopt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors the NLP solver may encounter at trial points during a line search
// and recover from by backtracking.
class RecoverableError : public Error {
 public:
  using Error::Error;
};

// Model evaluated outside its domain (e.g. v_x <= 0).
class DomainError : public RecoverableError {
 public:
  using RecoverableError::RecoverableError;
};

// Curvilinear singularity (1 - n*kappa ~ 0) or space-domain singularity
// (sdot ~ 0, car at standstill).
class SingularityError : public RecoverableError {
 public:
  using RecoverableError::RecoverableError;
};

// Invalid input data: parameter files, track specs, NLP dimensions, configs.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Curvilinear projection is not locally unique or the point left the corridor.
class ProjectionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace raceopt
