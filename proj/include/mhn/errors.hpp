#pragma once

#include <stdexcept>
#include <string>

namespace mhn {

/// Base class for all domain errors thrown by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by a zero rational, polynomial or series.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Evaluation of a rational function at a pole.
class PoleEvaluation : public Error {
 public:
  explicit PoleEvaluation(const std::string& what) : Error(what) {}
};

/// A coefficient outside the exactly-known window of a Laurent series was
/// requested, or an operation cannot guarantee the window it needs.
class InvalidWindow : public Error {
 public:
  explicit InvalidWindow(const std::string& what) : Error(what) {}
};

/// A Moebius substitution into a centered series does not fix the center.
class CenterNotFixed : public Error {
 public:
  explicit CenterNotFixed(const std::string& what) : Error(what) {}
};

/// Branch-series inversion requested at a point that is not a simple zero.
class NotSimpleZero : public Error {
 public:
  explicit NotSimpleZero(const std::string& what) : Error(what) {}
};

/// A spectral curve fails the branch-point requirements of the engine.
class BranchPointInvalid : public Error {
 public:
  explicit BranchPointInvalid(const std::string& what) : Error(what) {}
};

/// A differential does not lie in the span of the expected pole basis.
class BasisMembershipViolated : public Error {
 public:
  explicit BasisMembershipViolated(const std::string& what) : Error(what) {}
};

/// An exact identity that the engine relies on failed to hold.
class IdentityViolated : public Error {
 public:
  explicit IdentityViolated(const std::string& what) : Error(what) {}
};

/// A tuple argument has the wrong length or an invalid entry.
class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

/// A request exceeds the configured desk-scale caps.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// A requested coefficient lies outside a computed truncation range.
class TruncationInsufficient : public Error {
 public:
  explicit TruncationInsufficient(const std::string& what) : Error(what) {}
};

/// Request for an unstable (g, n) where only stable ones are defined.
class NotStable : public Error {
 public:
  explicit NotStable(const std::string& what) : Error(what) {}
};

/// A Moebius map with vanishing determinant.
class DegenerateMap : public Error {
 public:
  explicit DegenerateMap(const std::string& what) : Error(what) {}
};

/// Two independent pipelines produced different exact values.
class PipelineDisagreement : public Error {
 public:
  explicit PipelineDisagreement(const std::string& what) : Error(what) {}
};

}  // namespace mhn
