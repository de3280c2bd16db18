#pragma once

#include <stdexcept>
#include <string>

namespace einwarp {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class OutOfDomain : public Error {
  public:
    using Error::Error;
};

class BadCoefficients : public Error {
  public:
    using Error::Error;
};

class NonMonotoneAbscissae : public Error {
  public:
    using Error::Error;
};

class TooFewPoints : public Error {
  public:
    using Error::Error;
};

class NonpositiveWarp : public Error {
  public:
    using Error::Error;
};

class NonpositiveProfile : public Error {
  public:
    using Error::Error;
};

class NonpositiveU : public Error {
  public:
    using Error::Error;
};

/// The fiber-constant identity cannot be solved when alpha == m*rho.
class DegenerateCoefficient : public Error {
  public:
    using Error::Error;
};

/// The Lichnerowicz change of variables requires alpha outside {2m rho, (1+m) rho}.
class ForbiddenParameters : public Error {
  public:
    using Error::Error;
};

class ChartUnavailable : public Error {
  public:
    using Error::Error;
};

/// Riccati escape: integration stopped before reaching the end of the interval.
class BlowUp : public Error {
  public:
    BlowUp(const std::string& what, double last_xi) : Error(what), last_xi_(last_xi) {}
    double last_xi() const { return last_xi_; }

  private:
    double last_xi_;
};

/// The implied fiber constant is constant but does not match the requested fiber.
class FiberMismatch : public Error {
  public:
    FiberMismatch(const std::string& what, double implied_theta)
        : Error(what), implied_theta_(implied_theta) {}
    double implied_theta() const { return implied_theta_; }

  private:
    double implied_theta_;
};

class NotASolution : public Error {
  public:
    using Error::Error;
};

class BracketZero : public Error {
  public:
    using Error::Error;
};

class InvalidEstimateConfig : public Error {
  public:
    using Error::Error;
};

class UnknownPreset : public Error {
  public:
    using Error::Error;
};

class IncompleteHypotheses : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class UnknownId : public Error {
  public:
    using Error::Error;
};

class UnsupportedBase : public Error {
  public:
    using Error::Error;
};

}  // namespace einwarp
