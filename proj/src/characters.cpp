#include "basicfn/characters.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "basicfn/errors.hpp"

namespace basicfn {

namespace {

void require_antidominant(const BasedRootDatum& d, const Weight& lambda) {
  if (lambda.side != Side::Cocharacter || lambda.rank() != d.rank()) {
    fail(ErrorKind::InvalidInput, "highest weight " + lambda.to_string() + " is not a cocharacter of the datum");
  }
  if (!d.is_antidominant(lambda)) fail(ErrorKind::NotAntiDominant, lambda.to_string() + " is not anti-dominant");
}

// Sum over W of M^T M: a W-invariant positive definite form on cocharacters.
IntMatrix invariant_form(const BasedRootDatum& d) {
  const std::size_t n = d.rank();
  IntMatrix b(n);
  for (const auto& w : d.weyl_group()) {
    const IntMatrix& m = w.on_cocharacters;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) b(i, j) += m(k, i) * m(k, j);
  }
  return b;
}

Integer form(const IntMatrix& b, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += Integer(x[i]) * b(i, j) * y[j];
  }
  return s;
}

std::vector<std::int64_t> doubled_plus(const Weight& w, const HalfWeight& r) {
  std::vector<std::int64_t> out(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) out[i] = 2 * w.coords[i] + r.doubled[i];
  return out;
}

}  // namespace

Integer CharacterTable::dimension() const {
  Integer s = 0;
  for (const auto& [w, m] : weights) s += m;
  return s;
}

Integer CharacterTable::multiplicity(const Weight& w) const {
  auto it = weights.find(w);
  return it == weights.end() ? Integer(0) : it->second;
}

CharacterTable irreducible_weights(const BasedRootDatum& d, const Weight& lambda) {
  require_antidominant(d, lambda);
  CharacterTable t{d, {}, lambda};
  const IntMatrix b = invariant_form(d);
  const HalfWeight& rho = d.corho_neg();
  const auto top = doubled_plus(lambda, rho);
  const Integer top_norm = form(b, top, top);

  std::vector<Weight> positives;  // B-positive coroots; c - k*coroot moves up
  for (const auto& p : d.positive_roots()) positives.push_back(p.coroot);

  t.weights.emplace(lambda, 1);
  std::set<Weight> level{lambda};
  while (!level.empty()) {
    std::set<Weight> next;
    for (const auto& c : level)
      for (const auto& s : d.simple_coroots()) {
        Weight cand = c + s;
        if (t.weights.count(cand) || next.count(cand)) continue;
        if (d.bruhat_leq(d.antidominant_conjugate(cand), lambda)) next.insert(cand);
      }
    for (const auto& c : next) {
      const Weight conj = d.antidominant_conjugate(c);
      if (conj != c) {
        auto it = t.weights.find(conj);
        if (it == t.weights.end()) fail(ErrorKind::InternalMismatch, "conjugate weight not yet computed");
        t.weights.emplace(c, it->second);
        continue;
      }
      Integer sum = 0;
      for (const auto& beta : positives) {
        Weight up = c - beta;
        for (;;) {
          auto it = t.weights.find(up);
          if (it == t.weights.end()) break;
          // B(up, -beta) with beta the negated coroot.
          sum -= it->second * form(b, up.coords, beta.coords);
          up -= beta;
        }
      }
      const auto cur = doubled_plus(c, rho);
      const Integer denom = top_norm - form(b, cur, cur);
      const Integer num = 8 * sum;
      if (denom <= 0 || num % denom != 0) fail(ErrorKind::InternalMismatch, "Freudenthal quotient not integral");
      const Integer m = num / denom;
      if (m <= 0) fail(ErrorKind::InternalMismatch, "dominated weight " + c.to_string() + " has multiplicity 0");
      t.weights.emplace(c, m);
    }
    level = std::move(next);
  }
  return t;
}

Integer weyl_dim(const BasedRootDatum& d, const Weight& lambda) {
  require_antidominant(d, lambda);
  const auto shifted = doubled_plus(lambda, d.corho_neg());
  Rational v = 1;
  for (const auto& p : d.positive_roots()) {
    v *= ratio(dot(p.root.coords, shifted), dot(p.root.coords, d.corho_neg().doubled));
  }
  v.canonicalize();
  if (v.get_den() != 1) fail(ErrorKind::InternalMismatch, "Weyl dimension not integral");
  return v.get_num();
}

RepSpec RepSpec::from_weights(const BasedRootDatum& datum, std::vector<WeightItem> items, bool require_det_one) {
  std::map<Weight, unsigned> merged;
  for (auto& it : items) {
    if (it.weight.rank() != datum.rank() || it.weight.side != Side::Cocharacter) {
      fail(ErrorKind::InvalidInput, "representation weight " + it.weight.to_string() + " does not fit the datum");
    }
    if (it.multiplicity == 0) continue;
    if (require_det_one && datum.det(it.weight) != 1) {
      fail(ErrorKind::InvalidInput, "weight " + it.weight.to_string() + " has det " +
                                        std::to_string(datum.det(it.weight)) + ", expected 1");
    }
    merged[it.weight] += it.multiplicity;
  }
  std::vector<WeightItem> supp;
  for (auto& [w, m] : merged) supp.push_back({w, m});
  RepSpec rep(datum, std::move(supp), std::nullopt);
  // Must be W-invariant to be a character.
  decompose_character(rep.character());
  return rep;
}

RepSpec RepSpec::irreducible(const BasedRootDatum& datum, const Weight& highest, bool require_det_one) {
  const CharacterTable t = irreducible_weights(datum, highest);
  std::vector<WeightItem> items;
  for (const auto& [w, m] : t.weights) items.push_back({w, static_cast<unsigned>(m.get_ui())});
  RepSpec rep = from_weights(datum, std::move(items), require_det_one);
  rep.highest_ = highest;
  return rep;
}

unsigned RepSpec::dimension() const {
  unsigned s = 0;
  for (const auto& it : supp_) s += it.multiplicity;
  return s;
}

bool RepSpec::all_det_one() const {
  return std::all_of(supp_.begin(), supp_.end(), [&](const WeightItem& it) { return datum_.det(it.weight) == 1; });
}

CharacterTable RepSpec::character() const {
  CharacterTable t{datum_, {}, highest_};
  for (const auto& it : supp_) t.weights.emplace(it.weight, it.multiplicity);
  return t;
}

std::vector<CharacterTable> sym_power_characters(const RepSpec& rep, unsigned max_k) {
  using Table = std::map<Weight, Rational>;
  const Weight zero = Weight::zero(rep.datum().rank());
  std::vector<Table> h(max_k + 1);
  h[0].emplace(zero, 1);
  for (unsigned k = 1; k <= max_k; ++k) {
    Table acc;
    for (unsigned i = 1; i <= k; ++i) {
      for (const auto& [w, c] : h[k - i])
        for (const auto& it : rep.supp()) {
          Rational& slot = acc[w + static_cast<std::int64_t>(i) * it.weight];
          slot += c * it.multiplicity;
        }
    }
    for (auto& [w, c] : acc) {
      c /= k;
      if (c != 0) h[k].emplace(w, c);
    }
  }
  std::vector<CharacterTable> out;
  for (unsigned k = 0; k <= max_k; ++k) {
    CharacterTable t{rep.datum(), {}, std::nullopt};
    for (const auto& [w, c] : h[k]) {
      if (c.get_den() != 1 || c < 0) fail(ErrorKind::InternalMismatch, "symmetric power table not integral");
      t.weights.emplace(w, c.get_num());
    }
    out.push_back(std::move(t));
  }
  return out;
}

CharacterTable sym_power_character(const RepSpec& rep, unsigned k) { return std::move(sym_power_characters(rep, k)[k]); }

std::vector<std::pair<Weight, Integer>> decompose_character(const CharacterTable& t, std::uint64_t seed) {
  const BasedRootDatum& d = t.datum;
  std::map<Weight, Integer> rest;
  for (const auto& [w, m] : t.weights) {
    if (m < 0) fail(ErrorKind::NegativeMultiplicity, "weight " + w.to_string() + " has negative multiplicity");
    if (m != 0) rest.emplace(w, m);
  }
  for (const auto& [w, m] : rest)
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      auto it = rest.find(d.reflect(i, w));
      if (it == rest.end() || it->second != m) {
        fail(ErrorKind::NotWInvariant, "multiplicity of " + w.to_string() + " differs from its reflection");
      }
    }

  // Strictly decreasing along simple coroots: 2 rho_neg plus a small seeded perturbation.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  std::int64_t scale = 1;
  for (const auto& s : d.simple_coroots())
    for (auto x : s.coords) scale += std::abs(x);
  std::vector<Rational> f(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) {
    f[i] = Rational(d.rho_neg().doubled[i]) + ratio(dist(rng), 4000 * scale);
  }
  auto value = [&](const Weight& w) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.rank(); ++i) s += f[i] * w.coords[i];
    return s;
  };

  std::vector<std::pair<Weight, Integer>> out;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    Rational best_value;
    for (const auto& [w, m] : rest) {
      if (!d.is_antidominant(w)) continue;
      const Rational v = value(w);
      if (best == nullptr || v > best_value) {
        best = &w;
        best_value = v;
      }
    }
    if (best == nullptr) fail(ErrorKind::NegativeMultiplicity, "remainder has no anti-dominant weight");
    const Weight lambda = *best;
    const Integer m = rest.at(lambda);
    if (m < 0) fail(ErrorKind::NegativeMultiplicity, "constituent " + lambda.to_string() + " has negative multiplicity");
    for (const auto& [w, c] : irreducible_weights(d, lambda).weights) {
      auto it = rest.find(w);
      if (it == rest.end()) {
        fail(ErrorKind::NegativeMultiplicity, "weight " + w.to_string() + " of V" + lambda.to_string() + " missing");
      }
      it->second -= m * c;
      if (it->second == 0) {
        rest.erase(it);
      } else if (it->second < 0) {
        fail(ErrorKind::NegativeMultiplicity, "weight " + w.to_string() + " would become negative");
      }
    }
    out.emplace_back(lambda, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace basicfn
