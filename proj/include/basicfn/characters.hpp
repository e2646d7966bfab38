#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "basicfn/partition.hpp"
#include "basicfn/root_datum.hpp"

namespace basicfn {

/// W-invariant finite character: weight -> multiplicity.
struct CharacterTable {
  BasedRootDatum datum;
  std::map<Weight, Integer> weights;
  /// Set when the table is the character of V(lambda).
  std::optional<Weight> irreducible_of;

  Integer dimension() const;
  Integer multiplicity(const Weight& w) const;
};

/// A representation of the dual group given by its weights. All weights
/// have det = 1 unless the caller explicitly opts out.
class RepSpec {
 public:
  static RepSpec from_weights(const BasedRootDatum& datum, std::vector<WeightItem> items, bool require_det_one = true);
  static RepSpec irreducible(const BasedRootDatum& datum, const Weight& highest, bool require_det_one = true);

  const BasedRootDatum& datum() const noexcept { return datum_; }
  /// Distinct weights, sorted, with multiplicities.
  const std::vector<WeightItem>& supp() const noexcept { return supp_; }
  const std::optional<Weight>& highest_weight() const noexcept { return highest_; }
  unsigned dimension() const;
  bool all_det_one() const;
  CharacterTable character() const;

 private:
  RepSpec(BasedRootDatum d, std::vector<WeightItem> s, std::optional<Weight> h)
      : datum_(std::move(d)), supp_(std::move(s)), highest_(std::move(h)) {}

  BasedRootDatum datum_;
  std::vector<WeightItem> supp_;
  std::optional<Weight> highest_;
};

/// Weights of V(lambda) with multiplicities (Freudenthal). Throws
/// NotAntiDominant.
CharacterTable irreducible_weights(const BasedRootDatum& d, const Weight& lambda);
Integer weyl_dim(const BasedRootDatum& d, const Weight& lambda);

CharacterTable sym_power_character(const RepSpec& rep, unsigned k);
/// Characters of Sym^0 .. Sym^max_k in one pass.
std::vector<CharacterTable> sym_power_characters(const RepSpec& rep, unsigned max_k);

/// Irreducible constituents (lambda, multiplicity), sorted by lambda.
/// Throws NotWInvariant or NegativeMultiplicity.
std::vector<std::pair<Weight, Integer>> decompose_character(const CharacterTable& t, std::uint64_t seed = 0);

}  // namespace basicfn
