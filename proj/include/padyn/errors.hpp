#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

// Base class for all library errors so the CLI can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PrimeMismatch : public Error {
 public:
  PrimeMismatch() : Error("operands carry different prime contexts") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& op)
      : Error(op + ": input must be nonzero") {}
};

// Reason a square root does not exist in Q_p.
enum class NoRootReason { OddValuation, NonResidue, NotOneMod8 };

class NoRootInQp : public Error {
 public:
  explicit NoRootInQp(NoRootReason reason)
      : Error(describe(reason)), reason_(reason) {}
  NoRootReason reason() const { return reason_; }

 private:
  static const char* describe(NoRootReason r) {
    switch (r) {
      case NoRootReason::OddValuation:
        return "no square root in Q_p: valuation is odd";
      case NoRootReason::NonResidue:
        return "no square root in Q_p: unit part is a quadratic non-residue";
      case NoRootReason::NotOneMod8:
        return "no square root in Q_2: unit part is not 1 mod 8";
    }
    return "no square root in Q_p";
  }
  NoRootReason reason_;
};

class ZeroB : public Error {
 public:
  ZeroB() : Error("root norms require b != 0") {}
};

class InsufficientPrecision : public Error {
 public:
  explicit InsufficientPrecision(const std::string& what)
      : Error("insufficient precision: " + what) {}
};

class NotUniqueFixedPoint : public Error {
 public:
  NotUniqueFixedPoint()
      : Error("fixed-point cubic does not have a triple root") {}
};

class DegenerateAB : public Error {
 public:
  DegenerateAB() : Error("canonical parameters degenerate: a*b = 0") {}
};

class SingularPoint : public Error {
 public:
  SingularPoint() : Error("evaluation at the singular point x_hat = -b/a") {}
};

class CriticalRadius : public Error {
 public:
  CriticalRadius()
      : Error("radius map is point-dependent on a critical sphere; "
              "supply a point instead") {}
};

class NotCriticalSphere : public Error {
 public:
  NotCriticalSphere() : Error("point is not on a critical sphere") {}
};

class WrongCase : public Error {
 public:
  explicit WrongCase(const std::string& what) : Error(what) {}
};

class NotInvariantRadius : public Error {
 public:
  NotInvariantRadius() : Error("radius is not an invariant sphere radius") {}
};

class NonIntegralRadius : public Error {
 public:
  NonIntegralRadius()
      : Error("radius is not an integral power of p") {}
};

class BallNotInSphere : public Error {
 public:
  BallNotInSphere() : Error("ball is not contained in the sphere") {}
};

class NotSelfMap : public Error {
 public:
  explicit NotSelfMap(const std::string& what)
      : Error("not a self-map of the 2-adic units: " + what) {}
};

class WrongPrimeOrCase : public Error {
 public:
  explicit WrongPrimeOrCase(const std::string& what) : Error(what) {}
};

class ExcludedQ : public Error {
 public:
  explicit ExcludedQ(const std::string& what) : Error(what) {}
};

class NotPeriodicPair : public Error {
 public:
  NotPeriodicPair() : Error("points are not a 2-periodic pair") {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace padyn
