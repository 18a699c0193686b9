#include "kltvol/rational.hpp"

#include <cctype>
#include <limits>

#include "kltvol/error.hpp"

namespace kltvol {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto slash = compact.find('/');
  const std::string num = compact.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : compact.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorKind::InvalidArgument, "integer " + z.get_str() + " out of range");
  }
  return static_cast<std::int64_t>(z.get_si());
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace kltvol
