#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "basicfn/rational.hpp"

namespace basicfn {

/// Which of the two dual lattices a vector lives in.
enum class Side : std::uint8_t { Character, Cocharacter };

/// Integral lattice vector tagged with its lattice. Cocharacters of G are
/// the weights of the dual group, which is where every multiplicity query
/// takes place.
struct Weight {
  std::vector<std::int64_t> coords;
  Side side = Side::Cocharacter;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c, Side s = Side::Cocharacter)
      : coords(std::move(c)), side(s) {}
  static Weight zero(std::size_t rank, Side s = Side::Cocharacter);

  std::size_t rank() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;  // "(1,-1,0)"
};

/// Half-integral weight stored as twice its value (rho and its shifts).
struct HalfWeight {
  std::vector<std::int64_t> doubled;
  Side side = Side::Cocharacter;

  static HalfWeight from(const Weight& w);
  std::size_t rank() const noexcept { return doubled.size(); }
  bool is_integral() const noexcept;
  /// Requires is_integral().
  Weight to_weight() const;

  friend bool operator==(const HalfWeight&, const HalfWeight&) = default;
  std::string to_string() const;
};

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Pairing between opposite lattices; throws InvalidInput on a side clash
/// or a rank mismatch.
std::int64_t pairing(const Weight& a, const Weight& b);
/// Exact pairing involving a half weight (returns a rational).
Rational pairing(const HalfWeight& a, const Weight& b);

/// Dense square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  /// Exact determinant (Bareiss).
  Integer determinant() const;
  std::vector<std::vector<std::int64_t>> rows() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace basicfn
