#include "basicfn/rational.hpp"

#include <cctype>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::optional<Integer> exact_root(const Integer& x, unsigned long n) {
  if (x < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer_text(num)) fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_integer(num));
  } else {
    const auto den = text.substr(slash + 1);
    if (!valid_integer_text(den) || den[0] == '-') {
      fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_integer(num), d);
    r.canonicalize();
  }
  return r;
}

Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& base, std::int64_t exp) {
  if (exp < 0 && base == 0) fail(ErrorKind::InvalidInput, "zero raised to a negative power");
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exp < 0 ? Rational(d, n) : Rational(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
  if (base <= 0) fail(ErrorKind::InvalidInput, "rational_power needs a positive base");
  const unsigned long den = exponent.get_den().get_ui();
  auto rn = exact_root(base.get_num(), den);
  auto rd = exact_root(base.get_den(), den);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  root.canonicalize();
  return pow(root, exponent.get_num().get_si());
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace basicfn
