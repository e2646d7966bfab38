#include "basicfn/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "basicfn/errors.hpp"
#include "basicfn/linalg.hpp"

namespace basicfn {

struct BasedRootDatum::Tables {
  RawDatum raw;
  DatumOptions options;
  std::vector<Weight> simple_roots;
  std::vector<Weight> simple_coroots;
  Weight det_grading;
  std::vector<std::vector<std::int64_t>> cartan;
  linalg::RatMatrix cartan_inverse;
  std::vector<RootPair> positive;
  HalfWeight rho_neg;
  HalfWeight corho_neg;

  std::mutex weyl_mutex;
  bool weyl_ready = false;
  std::vector<WeylElement> weyl;
};

namespace {

void check_vector(const std::vector<std::int64_t>& v, std::size_t rank, const char* what) {
  if (v.size() != rank) {
    fail(ErrorKind::InvalidInput, std::string(what) + " has length " + std::to_string(v.size()) +
                                      ", expected " + std::to_string(rank));
  }
}

IntMatrix reflection(const Weight& moved, const Weight& functional) {
  const std::size_t n = moved.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= moved.coords[r] * functional.coords[c];
  return m;
}

}  // namespace

Weight WeylElement::act(const Weight& w) const {
  const IntMatrix& m = w.side == Side::Character ? on_characters : on_cocharacters;
  return Weight(m.apply(w.coords), w.side);
}

BasedRootDatum BasedRootDatum::validate(const RawDatum& raw, DatumOptions options) {
  if (raw.rank == 0) fail(ErrorKind::InvalidInput, "rank must be positive");
  if (raw.simple_roots.size() != raw.simple_coroots.size()) {
    fail(ErrorKind::InvalidInput, "simple roots and coroots differ in number");
  }
  for (const auto& v : raw.simple_roots) check_vector(v, raw.rank, "simple root");
  for (const auto& v : raw.simple_coroots) check_vector(v, raw.rank, "simple coroot");
  check_vector(raw.det_grading, raw.rank, "det_grading");

  auto t = std::make_shared<Tables>();
  t->raw = raw;
  t->options = options;
  const std::size_t r = raw.simple_roots.size();
  for (std::size_t i = 0; i < r; ++i) {
    t->simple_roots.emplace_back(raw.simple_roots[i], Side::Character);
    t->simple_coroots.emplace_back(raw.simple_coroots[i], Side::Cocharacter);
  }
  t->det_grading = Weight(raw.det_grading, Side::Character);

  t->cartan.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t->cartan[i][j] = pairing(t->simple_roots[i], t->simple_coroots[j]);
  for (std::size_t i = 0; i < r; ++i) {
    if (t->cartan[i][i] != 2) {
      fail(ErrorKind::CartanViolation, "<alpha_" + std::to_string(i) + ", coroot_" + std::to_string(i) +
                                           "> = " + std::to_string(t->cartan[i][i]) + ", expected 2");
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (t->cartan[i][j] > 0) {
        fail(ErrorKind::CartanViolation, "positive off-diagonal Cartan entry at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
      }
      if ((t->cartan[i][j] == 0) != (t->cartan[j][i] == 0)) {
        fail(ErrorKind::CartanViolation, "Cartan matrix zero pattern is not symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (pairing(t->det_grading, t->simple_coroots[i]) != 0) {
      fail(ErrorKind::GradingViolation, "det_grading pairs nontrivially with coroot " +
                                            t->simple_coroots[i].to_string());
    }
  }
  auto inv = linalg::inverse(linalg::to_rational(t->cartan));
  if (!inv) fail(ErrorKind::InfiniteWeyl, "Cartan matrix is singular");
  t->cartan_inverse = std::move(*inv);

  // Orbit closure of the simple roots, tracked together with coroots and
  // coefficient vectors in the simple roots.
  struct Entry {
    Weight root, coroot;
    std::vector<std::int64_t> coeffs;
  };
  std::map<Weight, Entry> roots;
  std::deque<Weight> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> e(r, 0);
    e[i] = 1;
    roots.emplace(t->simple_roots[i], Entry{t->simple_roots[i], t->simple_coroots[i], e});
    queue.push_back(t->simple_roots[i]);
  }
  while (!queue.empty()) {
    const Entry cur = roots.at(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      const std::int64_t a = pairing(cur.root, t->simple_coroots[j]);
      const std::int64_t b = pairing(t->simple_roots[j], cur.coroot);
      Entry next{cur.root - a * t->simple_roots[j], cur.coroot - b * t->simple_coroots[j], cur.coeffs};
      next.coeffs[j] -= a;
      if (roots.contains(next.root)) continue;
      if (roots.size() >= options.root_cap) {
        fail(ErrorKind::InfiniteWeyl, "root orbit closure exceeds " + std::to_string(options.root_cap));
      }
      queue.push_back(next.root);
      roots.emplace(next.root, std::move(next));
    }
  }
  for (std::size_t i = 0; i < r; ++i) t->positive.push_back({t->simple_roots[i], t->simple_coroots[i]});
  for (const auto& [key, e] : roots) {
    const bool nonneg = std::all_of(e.coeffs.begin(), e.coeffs.end(), [](auto x) { return x >= 0; });
    const bool nonpos = std::all_of(e.coeffs.begin(), e.coeffs.end(), [](auto x) { return x <= 0; });
    if (!nonneg && !nonpos) fail(ErrorKind::CartanViolation, "root " + key.to_string() + " has mixed signs");
    const bool simple = std::count(e.coeffs.begin(), e.coeffs.end(), 0) + 1 == static_cast<std::ptrdiff_t>(r) &&
                        std::count(e.coeffs.begin(), e.coeffs.end(), 1) == 1;
    if (nonneg && !simple) t->positive.push_back({e.root, e.coroot});
  }
  t->rho_neg = HalfWeight{std::vector<std::int64_t>(raw.rank, 0), Side::Character};
  t->corho_neg = HalfWeight{std::vector<std::int64_t>(raw.rank, 0), Side::Cocharacter};
  for (const auto& p : t->positive) {
    for (std::size_t k = 0; k < raw.rank; ++k) {
      t->rho_neg.doubled[k] -= p.root.coords[k];
      t->corho_neg.doubled[k] -= p.coroot.coords[k];
    }
  }
  BasedRootDatum d;
  d.t_ = std::move(t);
  return d;
}

std::size_t BasedRootDatum::rank() const noexcept { return t_->raw.rank; }
std::size_t BasedRootDatum::semisimple_rank() const noexcept { return t_->simple_roots.size(); }
const std::string& BasedRootDatum::label() const noexcept { return t_->raw.label; }
const RawDatum& BasedRootDatum::raw() const noexcept { return t_->raw; }
const std::vector<Weight>& BasedRootDatum::simple_roots() const noexcept { return t_->simple_roots; }
const std::vector<Weight>& BasedRootDatum::simple_coroots() const noexcept { return t_->simple_coroots; }
const Weight& BasedRootDatum::det_grading() const noexcept { return t_->det_grading; }
const std::vector<std::vector<std::int64_t>>& BasedRootDatum::cartan() const noexcept { return t_->cartan; }
const std::vector<RootPair>& BasedRootDatum::positive_roots() const noexcept { return t_->positive; }
const HalfWeight& BasedRootDatum::rho_neg() const noexcept { return t_->rho_neg; }
const HalfWeight& BasedRootDatum::corho_neg() const noexcept { return t_->corho_neg; }

const std::vector<WeylElement>& BasedRootDatum::weyl_group() const {
  std::lock_guard lock(t_->weyl_mutex);
  if (t_->weyl_ready) return t_->weyl;
  const std::size_t n = rank();
  const std::size_t r = semisimple_rank();
  std::vector<IntMatrix> s_char, s_cochar;
  for (std::size_t i = 0; i < r; ++i) {
    s_char.push_back(reflection(t_->simple_roots[i], t_->simple_coroots[i]));
    s_cochar.push_back(reflection(t_->simple_coroots[i], t_->simple_roots[i]));
  }
  std::vector<WeylElement> elements;
  std::set<IntMatrix> seen;
  elements.push_back({IntMatrix::identity(n), IntMatrix::identity(n), 0, {}});
  seen.insert(elements.front().on_cocharacters);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix m = elements[head].on_cocharacters * s_cochar[i];
      if (seen.contains(m)) continue;
      if (elements.size() >= t_->options.weyl_cap) {
        fail(ErrorKind::OrderCapExceeded, "Weyl group exceeds " + std::to_string(t_->options.weyl_cap) + " elements");
      }
      seen.insert(m);
      WeylElement w;
      w.on_characters = elements[head].on_characters * s_char[i];
      w.on_cocharacters = std::move(m);
      w.length = elements[head].length + 1;
      w.word = elements[head].word;
      w.word.push_back(static_cast<unsigned>(i));
      elements.push_back(std::move(w));
    }
  }
  t_->weyl = std::move(elements);
  t_->weyl_ready = true;
  return t_->weyl;
}

const WeylElement& BasedRootDatum::longest_element() const { return weyl_group().back(); }

std::int64_t BasedRootDatum::det(const Weight& cocharacter) const { return pairing(t_->det_grading, cocharacter); }

bool BasedRootDatum::is_antidominant(const Weight& cocharacter) const {
  return std::all_of(t_->simple_roots.begin(), t_->simple_roots.end(),
                     [&](const Weight& a) { return pairing(a, cocharacter) <= 0; });
}

std::optional<std::vector<std::int64_t>> BasedRootDatum::coroot_coordinates(const Weight& difference) const {
  const std::size_t r = semisimple_rank();
  linalg::RatVector pair(r);
  for (std::size_t j = 0; j < r; ++j) pair[j] = Rational(static_cast<long>(pairing(t_->simple_roots[j], difference)));
  // <alpha_j, sum n_i coroot_i> = sum_i C[j][i] n_i.
  const auto n = linalg::multiply(t_->cartan_inverse, pair);
  std::vector<std::int64_t> out(r);
  Weight rebuilt = Weight::zero(rank());
  for (std::size_t i = 0; i < r; ++i) {
    if (n[i].get_den() != 1) return std::nullopt;
    out[i] = n[i].get_num().get_si();
    rebuilt += out[i] * t_->simple_coroots[i];
  }
  if (rebuilt != difference) return std::nullopt;
  return out;
}

bool BasedRootDatum::bruhat_leq(const Weight& mu, const Weight& lambda) const {
  if (mu.side != Side::Cocharacter || lambda.side != Side::Cocharacter) {
    fail(ErrorKind::InvalidInput, "Bruhat order compares cocharacters");
  }
  const auto n = coroot_coordinates(mu - lambda);
  return n && std::all_of(n->begin(), n->end(), [](auto x) { return x >= 0; });
}

Weight BasedRootDatum::reflect(std::size_t i, const Weight& w) const {
  if (w.side == Side::Cocharacter) return w - pairing(t_->simple_roots[i], w) * t_->simple_coroots[i];
  return w - pairing(w, t_->simple_coroots[i]) * t_->simple_roots[i];
}

Weight BasedRootDatum::antidominant_conjugate(const Weight& cocharacter) const {
  Weight w = cocharacter;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      if (pairing(t_->simple_roots[i], w) > 0) {
        w = reflect(i, w);
        moved = true;
      }
    }
  }
  return w;
}

std::vector<Weight> BasedRootDatum::orbit(const Weight& cocharacter) const {
  std::set<Weight> seen{cocharacter};
  std::vector<Weight> stack{cocharacter};
  while (!stack.empty()) {
    Weight w = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      Weight x = reflect(i, w);
      if (seen.insert(x).second) stack.push_back(std::move(x));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::int64_t> BasedRootDatum::stabilizer_length_counts(const Weight& cocharacter) const {
  std::vector<std::int64_t> counts;
  for (const auto& w : weyl_group()) {
    if (w.act(cocharacter) != cocharacter) continue;
    if (counts.size() <= w.length) counts.resize(w.length + 1, 0);
    ++counts[w.length];
  }
  return counts;
}

Weight BasedRootDatum::cocharacter(std::vector<std::int64_t> coords) const {
  check_vector(coords, rank(), "cocharacter");
  return Weight(std::move(coords), Side::Cocharacter);
}

Weight BasedRootDatum::character(std::vector<std::int64_t> coords) const {
  check_vector(coords, rank(), "character");
  return Weight(std::move(coords), Side::Character);
}

bool operator==(const BasedRootDatum& a, const BasedRootDatum& b) {
  if (a.t_ == b.t_) return true;
  const RawDatum& x = a.raw();
  const RawDatum& y = b.raw();
  return x.rank == y.rank && x.simple_roots == y.simple_roots && x.simple_coroots == y.simple_coroots &&
         x.det_grading == y.det_grading;
}

BasedRootDatum validate_datum(const RawDatum& raw, DatumOptions options) {
  return BasedRootDatum::validate(raw, options);
}
const std::vector<RootPair>& positive_roots(const BasedRootDatum& d) { return d.positive_roots(); }
const std::vector<WeylElement>& weyl_group(const BasedRootDatum& d) { return d.weyl_group(); }
bool bruhat_leq(const BasedRootDatum& d, const Weight& mu, const Weight& lambda) { return d.bruhat_leq(mu, lambda); }
bool is_antidominant(const BasedRootDatum& d, const Weight& mu) { return d.is_antidominant(mu); }

}  // namespace basicfn
