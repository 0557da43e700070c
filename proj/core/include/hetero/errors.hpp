#pragma once

#include <stdexcept>
#include <string>

namespace hetero {

/// Root of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularPadeTable : public Error {
 public:
  SingularPadeTable(int m, int n)
      : Error("singular Pade table at (" + std::to_string(m) + "," + std::to_string(n) + ")"), m_(m), n_(n) {}
  int m() const { return m_; }
  int n() const { return n_; }

 private:
  int m_, n_;
};

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

class EndpointRoot : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::string which, std::string where)
      : Error("hypothesis violated: " + which + " (" + where + ")"), which_(std::move(which)), where_(std::move(where)) {}
  const std::string& which() const { return which_; }
  const std::string& where() const { return where_; }

 private:
  std::string which_, where_;
};

class SpeedTooSmall : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class CertificateFailed : public Error {
 public:
  CertificateFailed(std::string stage, std::string detail)
      : Error("certificate failed at " + stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class OracleInconclusive : public Error {
 public:
  using Error::Error;
};

class StepFailure : public Error {
 public:
  StepFailure(const std::string& what, double reached) : Error(what), reached_(reached) {}
  /// Abscissa the integrator reached before giving up.
  double reached() const { return reached_; }

 private:
  double reached_;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace hetero
