#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basicfn/characters.hpp"
#include "basicfn/laurent.hpp"
#include "basicfn/weight_series.hpp"

namespace basicfn {

struct Preset {
  std::string name;
  BasedRootDatum datum;
  RepSpec rep;
};

/// GL(n) in the standard basis with det = (1,...,1) and the standard
/// representation.
Preset gl_preset(unsigned n);
/// GSp(4) in the basis (a, b, c) of coroot-alpha, coroot-beta, gamma with
/// the spin representation.
Preset gsp4_preset();
/// "gl1".."gl9" or "gsp4"; throws InvalidInput otherwise.
Preset preset_by_name(const std::string& name);

/// Closed form of c_mu(q^{-1}) for GL(n): q^{k(n-1)/2 - <rho_{B^-}, mu>}
/// on anti-dominant mu with nonnegative entries, 0 elsewhere.
LaurentV gl_closed_cmu(unsigned n, const Weight& mu);
/// prod_{i=1..n} (1 - q^{i(i-1)/2} e^{lambda_i} X^i)^{-1} up to det max_det,
/// lambda_i = e_{n-i+1} + ... + e_n.
WeightSeries gl_product_series(unsigned n, std::int64_t max_det);

/// GSp(4) coordinates: basis (a, b, c) <-> (x1, x2, x3, x4) in the
/// coordinates of GL(4)'s cocharacters; the image is x1 + x4 = x2 + x3.
std::vector<std::int64_t> gsp4_to_eps(const Weight& mu);
/// Throws InvalidInput off the sublattice.
Weight gsp4_from_eps(const std::vector<std::int64_t>& x);
/// x1 + x4 = x2 + x3 and 0 <= x1 <= x2 <= x3.
bool gsp4_cone_member_eps(const std::vector<std::int64_t>& x);
bool gsp4_cone_member(const Weight& mu);

/// Cartan matrix of type A_n, B_n, C_n, D_n or G2 ("A3", "C2", ...).
/// Throws InvalidInput for an unknown type.
std::vector<std::vector<std::int64_t>> cartan_of_type(const std::string& type);
/// Simply connected datum of a Cartan type: coroots are the standard
/// basis, roots are the rows of the Cartan matrix.
BasedRootDatum simply_connected_datum(const std::string& type);

/// Central extension of a simply connected datum determined by an
/// anti-dominant coweight xi_bar (in fundamental coweight coordinates),
/// with the irreducible representation of the lift (xi_bar, 1). Throws
/// NotSimplyConnected or XiNotAntiDominant.
Preset ngo_extend(const BasedRootDatum& d0, const std::vector<std::int64_t>& xi_bar);

/// Unimodular map U on cocharacters with U(coroot_i) = coroot'_{pi(i)} for
/// a Cartan-preserving permutation pi, roots and det pulled back
/// correctly, and U(Supp V) = Supp V'. Requires both representations to
/// carry a highest weight and one-dimensional centres.
struct DatumIsomorphism {
  IntMatrix map;
  std::vector<std::size_t> permutation;
};
std::optional<DatumIsomorphism> find_isomorphism(const Preset& a, const Preset& b);

}  // namespace basicfn
