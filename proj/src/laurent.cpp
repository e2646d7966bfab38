#include "basicfn/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "basicfn/errors.hpp"

namespace basicfn {

LaurentV::LaurentV(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentV LaurentV::constant(const Integer& c) { return monomial(0, c); }

LaurentV LaurentV::monomial(int v_exponent, const Integer& coeff) {
  LaurentV p;
  if (coeff != 0) p.terms_.emplace(v_exponent, coeff);
  return p;
}

void LaurentV::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentV::coefficient(int v_exponent) const {
  auto it = terms_.find(v_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentV::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentV::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

bool LaurentV::only_even_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

bool LaurentV::is_q_polynomial() const {
  return only_even_exponents() && (terms_.empty() || terms_.begin()->first >= 0);
}

int LaurentV::q_degree() const {
  if (terms_.empty() || !only_even_exponents()) {
    fail(ErrorKind::InvalidInput, "q_degree needs a nonzero polynomial in q");
  }
  return terms_.rbegin()->first / 2;
}

bool LaurentV::nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentV& LaurentV::operator+=(const LaurentV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentV operator*(const LaurentV& a, const LaurentV& b) {
  LaurentV p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentV& LaurentV::operator*=(const LaurentV& o) { return *this = *this * o; }

LaurentV& LaurentV::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentV operator-(LaurentV a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentV LaurentV::shifted(int k) const {
  LaurentV p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentV LaurentV::inverted() const {
  LaurentV p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

std::optional<LaurentV> LaurentV::divided_by_unit(const LaurentV& unit) const {
  if (unit.terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *unit.terms_.begin();
  if (c != 1 && c != -1) return std::nullopt;
  LaurentV p = shifted(-e);
  if (c == -1) p = -p;
  return p;
}

Integer LaurentV::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational LaurentV::evaluate(const Rational& v) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += Rational(c) * pow(v, e);
  return s;
}

std::string LaurentV::to_string() const {
  if (terms_.empty()) return "0";
  const bool q_form = only_even_exponents();
  const char var = q_form ? 'q' : 'v';
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = q_form ? it->first / 2 : it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? "-" : "+");
    }
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << var;
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace basicfn
