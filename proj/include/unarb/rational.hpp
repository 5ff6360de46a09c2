#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>
#include <string_view>

namespace unarb {

// Exact rational scalar. All domain arithmetic runs on this type; there is
// deliberately no floating-point path anywhere in the library.
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parse "p/q", "p", "-p/q" (optional leading +/-). Rejects everything else,
/// including whitespace, zero denominators and empty strings.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical serialization: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Componentwise sign predicates, in the vector-order convention
// x >= 0 (nonnegative), x > 0 (nonnegative and not zero), x >> 0 (every
// component positive).
bool is_nonnegative(const RationalVector& v);
bool is_semipositive(const RationalVector& v);
bool is_strictly_positive(const RationalVector& v);

}  // namespace unarb

namespace Eigen {

// mpq_class scalar support: exact arithmetic, so epsilon and precision are 0.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
