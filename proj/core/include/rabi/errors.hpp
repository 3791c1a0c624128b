#pragma once

#include <stdexcept>
#include <string>

namespace rabi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested state carries weight on the top Fock levels even at the
/// largest allowed truncation.
class TruncationNotConverged : public Error {
 public:
  TruncationNotConverged(const std::string& what, int n_tr, double tail_weight)
      : Error(what), n_tr_(n_tr), tail_weight_(tail_weight) {}

  int n_tr() const { return n_tr_; }
  double tail_weight() const { return tail_weight_; }

 private:
  int n_tr_;
  double tail_weight_;
};

class NotIsotropic : public Error {
 public:
  using Error::Error;
};

class InvalidTau : public Error {
 public:
  using Error::Error;
};

/// The two-Gaussian superposition nearly cancels; its squared norm is below
/// the resolution of the analytic quotient.
class DegenerateAnsatz : public Error {
 public:
  DegenerateAnsatz(const std::string& what, double norm)
      : Error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

}  // namespace rabi
