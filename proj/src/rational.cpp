#include "medgeo/rational.hpp"

#include "medgeo/errors.hpp"

#include <cctype>

namespace medgeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("not a rational: '" + std::string(text) + "'");
    Integer d = decimal_integer(den);
    if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    value = Rational(decimal_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw InputError("not a rational: '" + std::string(text) + "'");
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer num = decimal_integer(std::string(whole) + std::string(frac));
    value = Rational(num, den);
  } else {
    if (!all_digits(s)) throw InputError("not a rational: '" + std::string(text) + "'");
    value = Rational(decimal_integer(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::optional<ScaledIntegers> scale_to_int64(const RationalMatrix& m, int limit_bits) {
  Integer scale = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      scale = boost::multiprecision::lcm(scale, Integer(denominator(m(i, j))));
  const Integer limit = Integer(1) << limit_bits;
  Matrix<std::int64_t> values(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Integer v = numerator(m(i, j)) * (scale / denominator(m(i, j)));
      if (abs(v) >= limit) return std::nullopt;
      values(i, j) = v.convert_to<std::int64_t>();
    }
  return ScaledIntegers{std::move(values), scale};
}

}  // namespace medgeo
