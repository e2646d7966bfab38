#include "basicfn/presets.hpp"

#include <algorithm>
#include <numeric>

#include "basicfn/errors.hpp"
#include "basicfn/linalg.hpp"

namespace basicfn {

Preset gl_preset(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "GL(n) needs n >= 1");
  RawDatum raw;
  raw.rank = n;
  raw.label = "gl" + std::to_string(n);
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::vector<std::int64_t> a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    raw.simple_roots.push_back(a);
    raw.simple_coroots.push_back(a);
  }
  raw.det_grading.assign(n, 1);
  BasedRootDatum d = BasedRootDatum::validate(raw);
  std::vector<std::int64_t> top(n, 0);
  top[n - 1] = 1;
  RepSpec rep = RepSpec::irreducible(d, d.cocharacter(top));
  return Preset{raw.label, d, rep};
}

Preset gsp4_preset() {
  RawDatum raw;
  raw.rank = 3;
  raw.label = "gsp4";
  raw.simple_roots = {{2, -1, 0}, {-2, 2, 1}};
  raw.simple_coroots = {{1, 0, 0}, {0, 1, 0}};
  raw.det_grading = {0, 0, 1};
  BasedRootDatum d = BasedRootDatum::validate(raw);
  RepSpec rep = RepSpec::irreducible(d, d.cocharacter({-1, -2, 1}));
  return Preset{raw.label, d, rep};
}

Preset preset_by_name(const std::string& name) {
  if (name == "gsp4") return gsp4_preset();
  if (name.size() == 3 && name.rfind("gl", 0) == 0 && name[2] >= '1' && name[2] <= '9') {
    return gl_preset(static_cast<unsigned>(name[2] - '0'));
  }
  fail(ErrorKind::InvalidInput, "unknown preset '" + name + "'");
}

LaurentV gl_closed_cmu(unsigned n, const Weight& mu) {
  if (mu.rank() != n) fail(ErrorKind::InvalidInput, "weight has the wrong rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (mu.coords[i] < 0) return {};
    if (i + 1 < n && mu.coords[i] > mu.coords[i + 1]) return {};
  }
  std::int64_t k = 0, twice_rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    k += mu.coords[i];
    // rho_{B^-} = ((1-n)/2, ..., (n-1)/2)
    twice_rho += (2 * static_cast<std::int64_t>(i) + 1 - static_cast<std::int64_t>(n)) * mu.coords[i];
  }
  return LaurentV::monomial(static_cast<int>(k * (n - 1) - twice_rho));
}

WeightSeries gl_product_series(unsigned n, std::int64_t max_det) {
  const Preset p = gl_preset(n);
  WeightSeries s = WeightSeries::one(p.datum, max_det);
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::int64_t> lambda(n, 0);
    for (unsigned j = n - i; j < n; ++j) lambda[j] = 1;
    s = series_mul(s, geometric_expand(p.datum, p.datum.cocharacter(lambda),
                                       LaurentV::q_power(static_cast<int>(i * (i - 1) / 2)), max_det));
  }
  return s;
}

std::vector<std::int64_t> gsp4_to_eps(const Weight& mu) {
  if (mu.rank() != 3) fail(ErrorKind::InvalidInput, "GSp(4) cocharacters have rank 3");
  const std::int64_t a = mu.coords[0], b = mu.coords[1], c = mu.coords[2];
  return {a + c, -a + b + c, a - b, -a};
}

Weight gsp4_from_eps(const std::vector<std::int64_t>& x) {
  if (x.size() != 4 || x[0] + x[3] != x[1] + x[2]) {
    fail(ErrorKind::InvalidInput, "vector is not in the GSp(4) cocharacter lattice");
  }
  return Weight({-x[3], -x[3] - x[2], x[0] + x[3]});
}

bool gsp4_cone_member_eps(const std::vector<std::int64_t>& x) {
  return x.size() == 4 && x[0] + x[3] == x[1] + x[2] && 0 <= x[0] && x[0] <= x[1] && x[1] <= x[2];
}

bool gsp4_cone_member(const Weight& mu) { return gsp4_cone_member_eps(gsp4_to_eps(mu)); }

std::vector<std::vector<std::int64_t>> cartan_of_type(const std::string& type) {
  if (type.size() < 2) fail(ErrorKind::InvalidInput, "unknown Cartan type '" + type + "'");
  const char family = type[0];
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "unknown Cartan type '" + type + "'");
  }
  const bool ok = (family == 'A' && n >= 1) || ((family == 'B' || family == 'C') && n >= 2) ||
                  (family == 'D' && n >= 4) || (family == 'G' && n == 2);
  if (!ok || n > 12) fail(ErrorKind::InvalidInput, "unknown Cartan type '" + type + "'");
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  if (family == 'G') {
    c[0][1] = -1;
    c[1][0] = -3;
    return c;
  }
  const int chain = family == 'D' ? n - 1 : n;
  for (int i = 0; i + 1 < chain; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  if (family == 'B') c[n - 2][n - 1] = -2;
  if (family == 'C') c[n - 1][n - 2] = -2;
  if (family == 'D') c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
  return c;
}

BasedRootDatum simply_connected_datum(const std::string& type) {
  const auto c = cartan_of_type(type);
  const std::size_t n = c.size();
  RawDatum raw;
  raw.rank = n;
  raw.label = type;
  raw.simple_roots = c;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    raw.simple_coroots.push_back(e);
  }
  raw.det_grading.assign(n, 0);
  return BasedRootDatum::validate(raw);
}

Preset ngo_extend(const BasedRootDatum& d0, const std::vector<std::int64_t>& xi_bar) {
  const std::size_t r = d0.semisimple_rank();
  if (r != d0.rank()) fail(ErrorKind::NotSimplyConnected, "datum has a central torus");
  {
    IntMatrix coroots(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) coroots(j, i) = d0.simple_coroots()[i].coords[j];
    const Integer det = coroots.determinant();
    if (det != 1 && det != -1) fail(ErrorKind::NotSimplyConnected, "coroots do not span the cocharacter lattice");
  }
  if (xi_bar.size() != r) fail(ErrorKind::InvalidInput, "xi_bar has the wrong length");
  for (auto x : xi_bar)
    if (x > 0) fail(ErrorKind::XiNotAntiDominant, "xi_bar must pair nonpositively with every simple root");

  // Coordinates (fundamental coweights, n). Generators: (coroot_i, 0), (xi_bar, 1).
  const auto& cartan = d0.cartan();
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> g(r + 1, 0);
    for (std::size_t j = 0; j < r; ++j) g[j] = cartan[j][i];
    gens.push_back(g);
  }
  {
    std::vector<std::int64_t> g(xi_bar);
    g.push_back(1);
    gens.push_back(g);
  }
  const auto basis = linalg::hermite_basis(gens, r + 1);
  // Columns of bmat are the basis vectors; coordinates = bmat^{-1} x.
  linalg::RatMatrix bmat(r + 1, linalg::RatVector(r + 1));
  for (std::size_t k = 0; k <= r; ++k)
    for (std::size_t j = 0; j <= r; ++j) bmat[j][k] = basis[k][j];
  const auto binv = linalg::inverse(bmat);
  if (!binv) fail(ErrorKind::InternalMismatch, "lattice basis is singular");
  auto coords = [&](const std::vector<std::int64_t>& x) {
    const auto y = linalg::multiply(*binv, linalg::to_rational(x));
    std::vector<std::int64_t> out;
    for (const auto& v : y) {
      if (v.get_den() != 1) fail(ErrorKind::InternalMismatch, "vector is not in the extended lattice");
      out.push_back(v.get_num().get_si());
    }
    return out;
  };

  RawDatum raw;
  raw.rank = r + 1;
  raw.label = d0.label().empty() ? "ngo" : "ngo-" + d0.label();
  for (std::size_t i = 0; i < r; ++i) raw.simple_coroots.push_back(coords(gens[i]));
  // Root alpha_j reads coordinate j; det reads the last coordinate.
  for (std::size_t j = 0; j <= r; ++j) {
    std::vector<std::int64_t> f(r + 1);
    for (std::size_t k = 0; k <= r; ++k) f[k] = basis[k][j];
    if (j < r) {
      raw.simple_roots.push_back(f);
    } else {
      raw.det_grading = f;
    }
  }
  BasedRootDatum d = BasedRootDatum::validate(raw);
  const Weight xi = d.cocharacter(coords(gens[r]));
  RepSpec rep = RepSpec::irreducible(d, xi);
  return Preset{raw.label, d, rep};
}

std::optional<DatumIsomorphism> find_isomorphism(const Preset& a, const Preset& b) {
  const BasedRootDatum& da = a.datum;
  const BasedRootDatum& db = b.datum;
  const std::size_t n = da.rank();
  const std::size_t r = da.semisimple_rank();
  if (db.rank() != n || db.semisimple_rank() != r || r + 1 != n) return std::nullopt;
  if (!a.rep.highest_weight() || !b.rep.highest_weight()) {
    fail(ErrorKind::InvalidInput, "isomorphism search needs highest weights");
  }
  auto frame = [&](const BasedRootDatum& d, const Weight& xi, const std::vector<std::size_t>& perm) {
    linalg::RatMatrix m(n, linalg::RatVector(n));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) m[j][i] = d.simple_coroots()[perm[i]].coords[j];
    for (std::size_t j = 0; j < n; ++j) m[j][r] = xi.coords[j];
    return m;
  };
  std::vector<std::size_t> id(r);
  std::iota(id.begin(), id.end(), 0);
  const auto fa_inv = linalg::inverse(frame(da, *a.rep.highest_weight(), id));
  if (!fa_inv) return std::nullopt;

  std::vector<std::size_t> perm = id;
  do {
    bool cartan_ok = true;
    for (std::size_t i = 0; i < r && cartan_ok; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (da.cartan()[i][j] != db.cartan()[perm[i]][perm[j]]) cartan_ok = false;
    if (!cartan_ok) continue;
    const auto fb = frame(db, *b.rep.highest_weight(), perm);
    // U = F_b F_a^{-1}
    IntMatrix u(n);
    bool integral = true;
    for (std::size_t i = 0; i < n && integral; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += fb[i][k] * (*fa_inv)[k][j];
        if (s.get_den() != 1) {
          integral = false;
          break;
        }
        u(i, j) = s.get_num().get_si();
      }
    if (!integral) continue;
    const Integer det = u.determinant();
    if (det != 1 && det != -1) continue;
    const IntMatrix ut = u.transpose();
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      ok = Weight(ut.apply(db.simple_roots()[perm[i]].coords), Side::Character) == da.simple_roots()[i];
    }
    ok = ok && Weight(ut.apply(db.det_grading().coords), Side::Character) == da.det_grading();
    if (ok) {
      std::vector<WeightItem> mapped;
      for (const auto& it : a.rep.supp()) mapped.push_back({Weight(u.apply(it.weight.coords)), it.multiplicity});
      std::sort(mapped.begin(), mapped.end(),
                [](const WeightItem& x, const WeightItem& y) { return x.weight < y.weight; });
      ok = mapped == b.rep.supp();
    }
    if (ok) return DatumIsomorphism{u, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace basicfn
