#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "basicfn/laurent.hpp"
#include "basicfn/linalg.hpp"
#include "basicfn/weight.hpp"

namespace basicfn {

struct WeightItem {
  Weight weight;
  unsigned multiplicity = 1;

  friend bool operator==(const WeightItem&, const WeightItem&) = default;
};

/// Multiset of nonzero weights together with a rational functional that
/// is >= 1 on every item, certifying that the items span a pointed cone.
class WeightMultiset {
 public:
  /// Finds a certificate by linear programming. Throws
  /// NotStronglyConvexError when none exists.
  static WeightMultiset certify(std::vector<WeightItem> items);
  /// Uses a supplied certificate after re-checking it (PsiNotCertified).
  static WeightMultiset with_functional(std::vector<WeightItem> items, linalg::RatVector functional);
  static WeightMultiset empty(std::size_t rank, Side side = Side::Cocharacter);

  const std::vector<WeightItem>& items() const noexcept { return items_; }
  const linalg::RatVector& functional() const noexcept { return functional_; }
  std::size_t rank() const noexcept { return functional_.size(); }
  Side side() const noexcept { return side_; }
  unsigned total_multiplicity() const;
  Rational height(const Weight& nu) const;

 private:
  WeightMultiset(std::vector<WeightItem> items, linalg::RatVector functional, Side side)
      : items_(std::move(items)), functional_(std::move(functional)), side_(side) {}
  static void check_items(const std::vector<WeightItem>& items);

  std::vector<WeightItem> items_;
  linalg::RatVector functional_;
  Side side_;
};

/// Exact l with <l, a> >= 1 for every listed weight, minimising the sum
/// of the pairings. Throws NotStronglyConvexError with a convex
/// combination of the weights equal to zero otherwise.
linalg::RatVector positive_functional(const std::vector<Weight>& weights);

/// Memoised q-partition function P_psi(nu; q): the sum over ways of
/// writing nu as a nonnegative combination of the items (copies counted
/// separately) of q^{number of parts}. Thread safe.
class PartitionFunction {
 public:
  static constexpr unsigned default_cap = 64;

  explicit PartitionFunction(WeightMultiset psi, unsigned cap = default_cap);
  ~PartitionFunction();
  PartitionFunction(const PartitionFunction&) = delete;
  PartitionFunction& operator=(const PartitionFunction&) = delete;

  const WeightMultiset& psi() const noexcept { return psi_; }
  /// Throws CapExceeded when <l, nu> exceeds the cap.
  LaurentV operator()(const Weight& nu) const;
  std::size_t memo_size() const;

 private:
  LaurentV eval(std::size_t item_count, const Weight& nu) const;

  struct Memo;
  WeightMultiset psi_;
  unsigned cap_;
  std::unique_ptr<Memo> memo_;
};

LaurentV kostant_partition_q(const WeightMultiset& psi, const Weight& nu);

}  // namespace basicfn
