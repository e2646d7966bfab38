#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "basicfn/basic_function.hpp"
#include "basicfn/characters.hpp"
#include "basicfn/kostka.hpp"

namespace basicfn {

/// Kato-Lusztig matrix on an ordered weight list:
/// M[l][m] = q^{-<rho_{B^-}, mu>} K_{lambda,mu}(q^{-1}), in v with v^2 = q.
/// Weights are sorted by decreasing <rho_{B^-}, .>, so M is upper
/// triangular with unit monomials on the diagonal.
struct KLMatrix {
  std::vector<Weight> weights;
  std::vector<std::vector<LaurentV>> m;
  std::vector<std::vector<LaurentV>> inverse;

  /// M * inverse == identity, exactly.
  bool verify_inverse() const;
};

/// Throws NotSaturated when an anti-dominant mu <= lambda with lambda in
/// S is missing from S, NotAntiDominant for a bad member of S.
KLMatrix kato_lusztig_matrix(const LusztigQ& kostka, std::vector<Weight> s);
KLMatrix kato_lusztig_matrix(const BasedRootDatum& d, std::vector<Weight> s);

/// A point of the dual torus together with qF = vF^2.
struct SatakeParameter {
  std::vector<Rational> coords;
  Rational qF;
  Rational vF;

  /// Throws InvalidInput for a zero coordinate or qF <= 1 and
  /// IrrationalHalfPower when qF is not the square of a rational.
  static SatakeParameter make(std::vector<Rational> coords, const Rational& qF);
  /// prod c_i^{nu_i}.
  Rational monomial(const Weight& nu) const;
};

/// False when c^{coroot} = 1 for some coroot, where Macdonald's formula
/// has a vanishing denominator.
bool is_regular(const BasedRootDatum& d, const SatakeParameter& c);
/// Regular parameter with small random rational coordinates.
SatakeParameter random_parameter(const BasedRootDatum& d, const Rational& qF, std::mt19937_64& rng);

Rational char_eval(const CharacterTable& t, const SatakeParameter& c);
Rational char_eval(const BasedRootDatum& d, const Weight& lambda, const SatakeParameter& c);

/// Macdonald's formula for the spherical transform of the indicator of
/// K mu(varpi) K at c. Throws DegenerateParameter on a zero denominator.
Rational macdonald_spherical(const BasedRootDatum& d, const Weight& mu, const SatakeParameter& c);

/// tr Sym^k(c) for k = 0..max_k, from symmetric power characters.
std::vector<Rational> lfactor_via_characters(const RepSpec& rep, const SatakeParameter& c, unsigned max_k);
/// Coefficients of det(1 - rho(c) X)^{-1} up to X^max_k.
std::vector<Rational> lfactor_via_product(const RepSpec& rep, const SatakeParameter& c, unsigned max_k);
/// Both routes, checked against each other (InternalMismatch otherwise).
std::vector<Rational> lfactor_series(const RepSpec& rep, const SatakeParameter& c, unsigned max_k);

struct LDegreeCheck {
  unsigned degree = 0;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// Compares L(c, X) with sum_mu c_mu(qF) qF^{-<rho_{B^-},mu>} S(1_mu)(c) X^{det mu}
/// degree by degree.
std::vector<LDegreeCheck> verify_l_identity(const BasicFunctionEngine& engine, const SatakeParameter& c,
                                            unsigned max_k);

}  // namespace basicfn
