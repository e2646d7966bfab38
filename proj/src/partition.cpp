#include "basicfn/partition.hpp"

#include <mutex>
#include <unordered_map>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

Rational pair_rational(const linalg::RatVector& l, const Weight& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += l[i] * w.coords[i];
  return s;
}

std::string describe(const Weight& w) { return w.to_string(); }

}  // namespace

linalg::RatVector positive_functional(const std::vector<Weight>& weights) {
  if (weights.empty()) fail(ErrorKind::InvalidInput, "positive_functional needs at least one weight");
  const std::size_t n = weights.front().rank();
  const std::size_t m = weights.size();
  // Variables: l+ (n), l- (n), surplus s (m).  <l+ - l-, a_j> - s_j = 1.
  linalg::RatMatrix a(m, linalg::RatVector(2 * n + m, Rational(0)));
  linalg::RatVector b(m, Rational(1));
  linalg::RatVector c(2 * n + m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a[j][i] = weights[j].coords[i];
      a[j][n + i] = -weights[j].coords[i];
      c[i] += weights[j].coords[i];
      c[n + i] -= weights[j].coords[i];
    }
    a[j][2 * n + j] = -1;
  }
  if (auto x = linalg::lp_minimize(a, b, c)) {
    linalg::RatVector l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = (*x)[i] - (*x)[n + i];
    return l;
  }
  // Witness: lambda >= 0, sum lambda = 1, sum lambda_j a_j = 0.
  linalg::RatMatrix wa(n + 1, linalg::RatVector(m, Rational(0)));
  linalg::RatVector wb(n + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) wa[i][j] = weights[j].coords[i];
    wa[n][j] = 1;
  }
  wb[n] = 1;
  auto lambda = linalg::lp_minimize(wa, wb, linalg::RatVector(m, Rational(0)));
  if (!lambda) fail(ErrorKind::InternalMismatch, "no positive functional and no convex witness");
  std::string detail = "0 =";
  for (std::size_t j = 0; j < m; ++j) {
    if ((*lambda)[j] == 0) continue;
    detail += " + " + to_string((*lambda)[j]) + "*" + describe(weights[j]);
  }
  throw NotStronglyConvexError(*lambda, detail);
}

void WeightMultiset::check_items(const std::vector<WeightItem>& items) {
  if (items.empty()) fail(ErrorKind::InvalidInput, "weight multiset is empty");
  for (const auto& it : items) {
    if (it.multiplicity == 0) fail(ErrorKind::InvalidInput, "zero multiplicity for " + describe(it.weight));
    if (it.weight.rank() != items.front().weight.rank() || it.weight.side != items.front().weight.side) {
      fail(ErrorKind::InvalidInput, "weights of a multiset must share rank and lattice");
    }
  }
}

WeightMultiset WeightMultiset::certify(std::vector<WeightItem> items) {
  check_items(items);
  std::vector<Weight> ws;
  for (const auto& it : items) ws.push_back(it.weight);
  auto l = positive_functional(ws);
  const Side side = items.front().weight.side;
  return WeightMultiset(std::move(items), std::move(l), side);
}

WeightMultiset WeightMultiset::with_functional(std::vector<WeightItem> items, linalg::RatVector functional) {
  check_items(items);
  if (functional.size() != items.front().weight.rank()) {
    fail(ErrorKind::PsiNotCertified, "functional has the wrong length");
  }
  for (const auto& it : items) {
    if (pair_rational(functional, it.weight) < 1) {
      fail(ErrorKind::PsiNotCertified, "functional is below 1 on " + describe(it.weight));
    }
  }
  const Side side = items.front().weight.side;
  return WeightMultiset(std::move(items), std::move(functional), side);
}

WeightMultiset WeightMultiset::empty(std::size_t rank, Side side) {
  return WeightMultiset({}, linalg::RatVector(rank, Rational(0)), side);
}

unsigned WeightMultiset::total_multiplicity() const {
  unsigned s = 0;
  for (const auto& it : items_) s += it.multiplicity;
  return s;
}

Rational WeightMultiset::height(const Weight& nu) const { return pair_rational(functional_, nu); }

struct PartitionFunction::Memo {
  mutable std::mutex mutex;
  std::vector<std::unordered_map<Weight, LaurentV, WeightHash>> tables;
};

PartitionFunction::PartitionFunction(WeightMultiset psi, unsigned cap)
    : psi_(std::move(psi)), cap_(cap), memo_(std::make_unique<Memo>()) {
  memo_->tables.resize(psi_.items().size() + 1);
}

PartitionFunction::~PartitionFunction() = default;

std::size_t PartitionFunction::memo_size() const {
  std::lock_guard lock(memo_->mutex);
  std::size_t s = 0;
  for (const auto& t : memo_->tables) s += t.size();
  return s;
}

LaurentV PartitionFunction::operator()(const Weight& nu) const {
  if (nu.rank() != psi_.rank() || nu.side != psi_.side()) {
    fail(ErrorKind::InvalidInput, "partition argument " + describe(nu) + " does not match the multiset");
  }
  if (psi_.height(nu) > cap_) {
    fail(ErrorKind::CapExceeded, "height of " + describe(nu) + " is " + to_string(psi_.height(nu)) +
                                     ", cap is " + std::to_string(cap_));
  }
  return eval(psi_.items().size(), nu);
}

LaurentV PartitionFunction::eval(std::size_t item_count, const Weight& nu) const {
  const Rational h = psi_.height(nu);
  if (h < 0) return {};
  if (nu.is_zero()) return LaurentV(1);
  if (item_count == 0) return {};
  {
    std::lock_guard lock(memo_->mutex);
    auto& table = memo_->tables[item_count];
    if (auto it = table.find(nu); it != table.end()) return it->second;
  }
  const WeightItem& item = psi_.items()[item_count - 1];
  const unsigned m = item.multiplicity;
  LaurentV result;
  Weight rest = nu;
  for (unsigned long a = 0;; ++a) {
    if (psi_.height(rest) < 0) break;
    LaurentV sub = eval(item_count - 1, rest);
    if (!sub.is_zero()) result += sub.shifted(static_cast<int>(2 * a)) * binomial(a + m - 1, m - 1);
    rest -= item.weight;
  }
  std::lock_guard lock(memo_->mutex);
  memo_->tables[item_count].emplace(nu, result);
  return result;
}

LaurentV kostant_partition_q(const WeightMultiset& psi, const Weight& nu) {
  PartitionFunction p(psi);
  return p(nu);
}

}  // namespace basicfn
