#pragma once

#include <map>
#include <optional>
#include <string>

#include "basicfn/rational.hpp"

namespace basicfn {

/// Integer Laurent polynomial in v, where v^2 = q. Half-integral powers of
/// q (coming from pairings with rho) are ordinary odd powers of v.
class LaurentV {
 public:
  LaurentV() = default;
  LaurentV(long c);  // NOLINT: constants convert implicitly
  static LaurentV constant(const Integer& c);
  static LaurentV monomial(int v_exponent, const Integer& coeff = 1);
  static LaurentV q_power(int q_exponent, const Integer& coeff = 1) { return monomial(2 * q_exponent, coeff); }

  /// exponent of v -> nonzero coefficient.
  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(int v_exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  bool only_even_exponents() const;
  /// Every exponent even and nonnegative.
  bool is_q_polynomial() const;
  /// Highest power of q; requires only_even_exponents() and nonzero.
  int q_degree() const;
  bool nonnegative_coefficients() const;

  LaurentV& operator+=(const LaurentV& o);
  LaurentV& operator-=(const LaurentV& o);
  LaurentV& operator*=(const LaurentV& o);
  LaurentV& operator*=(const Integer& c);
  friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
  friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }
  friend LaurentV operator*(const LaurentV& a, const LaurentV& b);
  friend LaurentV operator*(LaurentV a, const Integer& c) { return a *= c; }
  friend LaurentV operator-(LaurentV a);
  friend bool operator==(const LaurentV&, const LaurentV&) = default;

  /// Multiplies by v^k.
  LaurentV shifted(int k) const;
  /// Substitutes v -> v^{-1}.
  LaurentV inverted() const;
  /// Exact quotient by a unit monomial (+-v^k); nullopt otherwise.
  std::optional<LaurentV> divided_by_unit(const LaurentV& unit) const;
  Integer at_one() const;
  /// Value at v = x (x nonzero when negative exponents occur).
  Rational evaluate(const Rational& v) const;

  /// Canonical text: descending exponents, "q" form when every exponent
  /// is even ("2*q^2 + q - 1"), otherwise "v" form ("v^3 + 2*v^-1").
  std::string to_string() const;

 private:
  void add_term(int e, const Integer& c);
  std::map<int, Integer> terms_;
};

}  // namespace basicfn
