#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace medgeo {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25".
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Multiplies every entry by the lcm of the denominators. Returns the integer
/// matrix and the scale when all scaled entries fit in |x| < 2^limit_bits.
struct ScaledIntegers {
  Matrix<std::int64_t> values;
  Integer scale;
};
std::optional<ScaledIntegers> scale_to_int64(const RationalMatrix& m, int limit_bits = 60);

}  // namespace medgeo
