#pragma once

#include <stdexcept>
#include <string>

namespace aarf {

// Base class for all library errors. `internal` distinguishes bug sentinels
// (failed self-checks) from bad input; the CLI maps them to exit code 3
// versus 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg, bool internal = false)
      : std::runtime_error(msg), internal_(internal) {}
  bool internal() const noexcept { return internal_; }

private:
  bool internal_;
};

// gcd of the generators is not 1.
struct GcdNotOne : Error {
  explicit GcdNotOne(const std::string& msg) : Error(msg) {}
};

// A value required to be a nonzero element of the semigroup is not one.
struct NotAMember : Error {
  explicit NotAMember(const std::string& msg) : Error(msg) {}
};

// The semigroup is the full set of nonnegative integers; no Frobenius number.
struct NoGaps : Error {
  explicit NoGaps(const std::string& msg) : Error(msg) {}
};

// The given almost arithmetic family is not a minimal generating set.
struct NotMinimal : Error {
  explicit NotMinimal(const std::string& msg) : Error(msg) {}
};

// An operation restricted to one of the two structure regimes (W empty /
// W nonempty) was called in the other.
struct WrongRegime : Error {
  explicit WrongRegime(const std::string& msg) : Error(msg) {}
};

// No closed-form construction applies to the requested element.
struct NoApplicableCase : Error {
  explicit NoApplicableCase(const std::string& msg) : Error(msg) {}
};

struct NotPseudoFrobenius : Error {
  explicit NotPseudoFrobenius(const std::string& msg) : Error(msg) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// 64-bit overflow in checked arithmetic. Inputs that large are out of the
// supported range.
struct Overflow : Error {
  explicit Overflow(const std::string& msg) : Error(msg) {}
};

// A computation would need more memory than the configured cap.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

// Bug sentinel: a closed-form row failed validation.
struct ConstructionInvalid : Error {
  explicit ConstructionInvalid(const std::string& msg) : Error(msg, true) {}
};

// Bug sentinel: the symmetric-case predicate disagrees with the brute-force
// type computation.
struct ClassificationMismatch : Error {
  explicit ClassificationMismatch(const std::string& msg) : Error(msg, true) {}
};

}  // namespace aarf
