#include "basicfn/weight.hpp"

#include <algorithm>
#include <sstream>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank() || a.side != b.side) {
    fail(ErrorKind::InvalidInput, "weight arithmetic across lattices " + a.to_string() + " / " + b.to_string());
  }
}

std::string join(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

Weight Weight::zero(std::size_t rank, Side s) { return Weight(std::vector<std::int64_t>(rank, 0), s); }

bool Weight::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

std::string Weight::to_string() const { return join(coords); }

HalfWeight HalfWeight::from(const Weight& w) {
  HalfWeight h;
  h.side = w.side;
  h.doubled.reserve(w.rank());
  for (auto x : w.coords) h.doubled.push_back(2 * x);
  return h;
}

bool HalfWeight::is_integral() const noexcept {
  return std::all_of(doubled.begin(), doubled.end(), [](std::int64_t x) { return x % 2 == 0; });
}

Weight HalfWeight::to_weight() const {
  if (!is_integral()) fail(ErrorKind::InternalMismatch, "half weight " + to_string() + " is not integral");
  Weight w = Weight::zero(doubled.size(), side);
  for (std::size_t i = 0; i < doubled.size(); ++i) w.coords[i] = doubled[i] / 2;
  return w;
}

std::string HalfWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    os << (i ? "," : "");
    if (doubled[i] % 2 == 0) os << doubled[i] / 2;
    else os << doubled[i] << "/2";
  }
  os << ')';
  return os.str();
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t pairing(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank() || a.side == b.side) {
    fail(ErrorKind::InvalidInput, "pairing needs a character and a cocharacter of equal rank");
  }
  return dot(a.coords, b.coords);
}

Rational pairing(const HalfWeight& a, const Weight& b) {
  if (a.rank() != b.rank() || a.side == b.side) {
    fail(ErrorKind::InvalidInput, "pairing needs a character and a cocharacter of equal rank");
  }
  return ratio(dot(a.doubled, b.coords), 2);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Integer> m(a_.begin(), a_.end());
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n_ + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r].assign(a_.begin() + r * n_, a_.begin() + (r + 1) * n_);
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.side) * 0x9e3779b97f4a7c15ULL;
  for (auto x : w.coords) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace basicfn
