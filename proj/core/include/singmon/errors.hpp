#pragma once

#include <stdexcept>
#include <string>

namespace singmon {

// Base class for everything this library throws on bad input or a failed
// structural check.  Callers that only want "did it work" can catch this one.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SINGMON_DEFINE_ERROR(Name)                          \
  class Name : public Error {                               \
  public:                                                   \
    explicit Name(const std::string& what) : Error(what) {} \
  }

// Frame shapes and the Saito dual.
SINGMON_DEFINE_ERROR(NonDivisorPeriod);     // shape period does not divide the dual level
SINGMON_DEFINE_ERROR(NonIntegralExponent);  // Newton-sum inversion left a fraction
SINGMON_DEFINE_ERROR(NotAPolynomial);       // shape has a root with negative multiplicity
SINGMON_DEFINE_ERROR(NotCyclotomicProduct); // polynomial has a non-cyclotomic factor
SINGMON_DEFINE_ERROR(ParseError);           // malformed shape text or CLI value

// Orbit invariants and Seifert data.
SINGMON_DEFINE_ERROR(InvalidGeometry);      // weights/degree fail a validity condition
SINGMON_DEFINE_ERROR(NotCoprime);           // gcd condition required for a Seifert pair fails
SINGMON_DEFINE_ERROR(ZeroExponent);         // operation needs R != 0
SINGMON_DEFINE_ERROR(NotSimplePole);        // residue requested where the pole is not simple

// Characteristic polynomial oracle.
SINGMON_DEFINE_ERROR(RemainderNonzero);     // an exact polynomial division failed
SINGMON_DEFINE_ERROR(NonGaloisStable);      // root multiplicities differ within a conjugacy class
SINGMON_DEFINE_ERROR(CaseViolation);        // suspension reduction case hypothesis not met

// Catalog and root systems.
SINGMON_DEFINE_ERROR(UnknownEntry);         // no catalog entry with that name
SINGMON_DEFINE_ERROR(UnsupportedLabel);     // root system label out of range
SINGMON_DEFINE_ERROR(NonIntegralDims);      // Perron vector is not integral after scaling
SINGMON_DEFINE_ERROR(OddPowerPresent);      // determinant is not even, no char poly in t^2

#undef SINGMON_DEFINE_ERROR

}  // namespace singmon
