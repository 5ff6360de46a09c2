#include "unarb/rational.hpp"

#include <cctype>

namespace unarb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  std::string_view numerator = body;
  std::string_view denominator = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    numerator = body.substr(0, slash);
    denominator = body.substr(slash + 1);
  }
  if (!all_digits(numerator) || !all_digits(denominator)) return std::nullopt;

  Rational value(mpz_class(std::string(numerator), 10),
                 mpz_class(std::string(denominator), 10));
  if (value.get_den() == 0) return std::nullopt;
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_nonnegative(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

bool is_semipositive(const RationalVector& v) {
  bool some_positive = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < 0) return false;
    if (v(i) > 0) some_positive = true;
  }
  return some_positive;
}

bool is_strictly_positive(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!(v(i) > 0)) return false;
  return true;
}

}  // namespace unarb
