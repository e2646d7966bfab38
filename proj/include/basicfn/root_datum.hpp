#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "basicfn/weight.hpp"

namespace basicfn {

/// Unvalidated input: both lattices are Z^rank with the dot-product pairing.
struct RawDatum {
  std::size_t rank = 0;
  std::vector<std::vector<std::int64_t>> simple_roots;
  std::vector<std::vector<std::int64_t>> simple_coroots;
  std::vector<std::int64_t> det_grading;
  std::string label;

  friend bool operator==(const RawDatum&, const RawDatum&) = default;
};

struct DatumOptions {
  std::size_t weyl_cap = 100000;
  /// Bound on the size of the root orbit closure; exceeding it is taken
  /// as evidence of an infinite Weyl group.
  std::size_t root_cap = 10000;
};

struct RootPair {
  Weight root;    // character side
  Weight coroot;  // cocharacter side
};

struct WeylElement {
  IntMatrix on_characters;
  IntMatrix on_cocharacters;
  unsigned length = 0;
  /// Reduced word in simple reflections, applied right to left.
  std::vector<unsigned> word;

  int sign() const noexcept { return length % 2 == 0 ? 1 : -1; }
  Weight act(const Weight& w) const;
};

/// A validated based root datum with a central grading character. Values
/// are immutable; root tables and the Weyl group are computed once and
/// shared between copies.
class BasedRootDatum {
 public:
  static BasedRootDatum validate(const RawDatum& raw, DatumOptions options = {});

  std::size_t rank() const noexcept;
  std::size_t semisimple_rank() const noexcept;
  const std::string& label() const noexcept;
  const RawDatum& raw() const noexcept;

  const std::vector<Weight>& simple_roots() const noexcept;
  const std::vector<Weight>& simple_coroots() const noexcept;
  const Weight& det_grading() const noexcept;
  /// cartan()[i][j] = <alpha_i, coroot_j>.
  const std::vector<std::vector<std::int64_t>>& cartan() const noexcept;

  /// B-positive roots paired with their coroots; simple ones first.
  const std::vector<RootPair>& positive_roots() const noexcept;
  /// Half-sum of the B^- roots (character side).
  const HalfWeight& rho_neg() const noexcept;
  /// Half-sum of the B^- coroots (cocharacter side).
  const HalfWeight& corho_neg() const noexcept;

  /// Complete Weyl group, identity first, in order of nondecreasing
  /// length. Throws OrderCapExceeded past the configured cap.
  const std::vector<WeylElement>& weyl_group() const;
  const WeylElement& longest_element() const;

  std::int64_t det(const Weight& cocharacter) const;
  bool is_antidominant(const Weight& cocharacter) const;
  /// mu <= lambda relative to B^-: lambda - mu is a nonnegative integer
  /// combination of negated simple coroots.
  bool bruhat_leq(const Weight& mu, const Weight& lambda) const;
  /// Coefficients n with mu - lambda = sum n_i coroot_i, when integral.
  std::optional<std::vector<std::int64_t>> coroot_coordinates(const Weight& difference) const;
  Weight reflect(std::size_t i, const Weight& w) const;
  Weight antidominant_conjugate(const Weight& cocharacter) const;
  /// Orbit of a cocharacter under W, sorted.
  std::vector<Weight> orbit(const Weight& cocharacter) const;
  /// sum over w with w mu = mu of t^length(w), as coefficients by length.
  std::vector<std::int64_t> stabilizer_length_counts(const Weight& cocharacter) const;

  Weight cocharacter(std::vector<std::int64_t> coords) const;
  Weight character(std::vector<std::int64_t> coords) const;

  friend bool operator==(const BasedRootDatum& a, const BasedRootDatum& b);

 private:
  struct Tables;
  std::shared_ptr<Tables> t_;
};

// Free-function spellings of the datum operations.
BasedRootDatum validate_datum(const RawDatum& raw, DatumOptions options = {});
const std::vector<RootPair>& positive_roots(const BasedRootDatum& d);
const std::vector<WeylElement>& weyl_group(const BasedRootDatum& d);
bool bruhat_leq(const BasedRootDatum& d, const Weight& mu, const Weight& lambda);
bool is_antidominant(const BasedRootDatum& d, const Weight& mu);

}  // namespace basicfn
