#include "basicfn/cli.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "basicfn/basic_function.hpp"
#include "basicfn/errors.hpp"
#include "basicfn/kostka.hpp"
#include "basicfn/satake.hpp"

namespace basicfn {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s += c;
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "malformed integer list '" + text + "'");
    }
  }
  return out;
}

Json datum_json(const BasedRootDatum& d) {
  Json j;
  j["rank"] = d.rank();
  j["simple_roots"] = d.raw().simple_roots;
  j["simple_coroots"] = d.raw().simple_coroots;
  j["det_grading"] = d.raw().det_grading;
  j["label"] = d.label();
  return j;
}

Preset preset_from_json(const Json& j, const std::vector<std::int64_t>* highest_override) {
  RawDatum raw;
  try {
    raw.rank = j.at("rank").get<std::size_t>();
    raw.simple_roots = j.at("simple_roots").get<std::vector<std::vector<std::int64_t>>>();
    raw.simple_coroots = j.at("simple_coroots").get<std::vector<std::vector<std::int64_t>>>();
    raw.det_grading = j.at("det_grading").get<std::vector<std::int64_t>>();
    raw.label = j.value("label", std::string("custom"));
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad datum document: ") + e.what());
  }
  BasedRootDatum d = BasedRootDatum::validate(raw);
  const bool require_det_one = !j.value("allow_nonunit_det", false);
  std::optional<RepSpec> rep;
  try {
    if (highest_override) {
      rep = RepSpec::irreducible(d, d.cocharacter(*highest_override), require_det_one);
    } else if (j.contains("rep")) {
      const Json& r = j.at("rep");
      if (r.contains("highest_weight")) {
        rep = RepSpec::irreducible(d, d.cocharacter(r.at("highest_weight").get<std::vector<std::int64_t>>()),
                                   require_det_one);
      } else {
        std::vector<WeightItem> items;
        for (const auto& w : r.at("weights")) items.push_back({d.cocharacter(w.get<std::vector<std::int64_t>>()), 1});
        rep = RepSpec::from_weights(d, std::move(items), require_det_one);
      }
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad representation: ") + e.what());
  }
  if (!rep) fail(ErrorKind::InvalidInput, "datum document has no representation; pass --highest");
  return Preset{raw.label, d, *rep};
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Subject {
  std::string preset;
  std::string datum_file;
  std::string highest;
  std::string format = "text";
  std::string output;
  unsigned threads = 0;
};

void add_subject(CLI::App* sub, Subject& s, bool with_format = true) {
  auto* p = sub->add_option("--preset", s.preset, "gl1..gl9 or gsp4");
  auto* f = sub->add_option("--datum-file", s.datum_file, "JSON datum document");
  p->excludes(f);
  sub->add_option("--highest", s.highest, "highest weight overriding the document's representation");
  if (with_format) sub->add_option("--format", s.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--output", s.output, "write to a file instead of stdout");
  sub->add_option("--threads", s.threads, "worker threads (default BASICFN_THREADS or all cores)");
}

Preset load_subject(const Subject& s) {
  if (s.preset.empty() == s.datum_file.empty()) throw UsageError("exactly one of --preset and --datum-file is required");
  if (!s.preset.empty()) {
    Preset p = preset_by_name(s.preset);
    if (!s.highest.empty()) p.rep = RepSpec::irreducible(p.datum, p.datum.cocharacter(parse_int_list(s.highest)));
    return p;
  }
  std::ifstream in(s.datum_file);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + s.datum_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("cannot parse ") + s.datum_file + ": " + e.what());
  }
  if (!s.highest.empty()) {
    const auto h = parse_int_list(s.highest);
    return preset_from_json(j, &h);
  }
  return preset_from_json(j);
}

Json half_json(const HalfWeight& h) {
  Json a = Json::array();
  for (auto x : h.doubled) a.push_back(to_string(ratio(x, 2)));
  return a;
}

Json rep_json(const RepSpec& rep) {
  Json a = Json::array();
  for (const auto& it : rep.supp()) a.push_back(Json{{"weight", weight_json(it.weight)}, {"mult", it.multiplicity}});
  return a;
}

std::string matrix_text(const std::vector<std::vector<std::int64_t>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + Weight(m[i]).to_string();
  return s + "]";
}

Report datum_report(const Preset& p) {
  const BasedRootDatum& d = p.datum;
  Report r;
  r.kind = "datum";
  r.header["datum"] = datum_json(d);
  r.header["cartan"] = d.cartan();
  r.header["weyl_order"] = d.weyl_group().size();
  r.header["longest_length"] = d.longest_element().length;
  r.header["rho_neg"] = half_json(d.rho_neg());
  r.header["corho_neg"] = half_json(d.corho_neg());
  r.header["rep"] = rep_json(p.rep);
  if (p.rep.highest_weight()) r.header["highest_weight"] = weight_json(*p.rep.highest_weight());
  r.rows_key = "positive_roots";
  for (const auto& pr : d.positive_roots())
    r.rows.push_back({weight_field("root", "root", pr.root), weight_field("coroot", "coroot", pr.coroot)});
  r.notes.push_back("label=" + d.label() + " rank=" + std::to_string(d.rank()) +
                    " semisimple_rank=" + std::to_string(d.semisimple_rank()));
  r.notes.push_back("cartan=" + matrix_text(d.cartan()));
  r.notes.push_back("det_grading=" + d.det_grading().to_string());
  r.notes.push_back("weyl_order=" + std::to_string(d.weyl_group().size()) +
                    " longest_length=" + std::to_string(d.longest_element().length));
  r.notes.push_back("rho_neg=" + d.rho_neg().to_string() + " corho_neg=" + d.corho_neg().to_string());
  std::string weights;
  for (const auto& it : p.rep.supp()) {
    weights += (weights.empty() ? "" : " ") + it.weight.to_string();
    if (it.multiplicity != 1) weights += "x" + std::to_string(it.multiplicity);
  }
  r.notes.push_back("rep_weights=" + weights);
  return r;
}

Row ctable_row(const BasedRootDatum& d, const Weight& mu, const LaurentV& c) {
  return {weight_field("mu", "mu", mu), int_field("det", "det", d.det(mu)), poly_field("c_of_qinv", "c", c),
          integer_field("c_at_1", "", c.at_one())};
}

/// Accumulates comparison rows for verify commands.
class Checker {
 public:
  explicit Checker(std::string kind) {
    r_.kind = std::move(kind);
    r_.rows_key = "checks";
  }

  void add(const std::string& check, const std::string& subject, const std::string& expected,
           const std::string& actual) {
    const bool equal = expected == actual;
    r_.rows.push_back({text_field("check", "check", check), text_field("subject", "at", subject),
                       text_field("expected", "expected", expected), text_field("actual", "actual", actual),
                       bool_field("equal", "ok", equal)});
    if (!equal && ok_) {
      ok_ = false;
      first_ = check + " at " + subject + ": expected " + expected + ", got " + actual;
    }
  }
  void flag(const std::string& check, const std::string& subject, bool good, const std::string& detail) {
    add(check, subject, "true", good ? "true" : "false");
    if (!good && first_.find(detail) == std::string::npos && first_.rfind(check, 0) == 0) first_ += " (" + detail + ")";
  }
  Json& header() { return r_.header; }

  int finish(Format f, std::ostream& out, std::ostream& err) {
    Json h = Json::object();
    h["ok"] = ok_;
    h["count"] = r_.rows.size();
    if (!ok_) h["first_failure"] = first_;
    for (const auto& [k, v] : r_.header.items()) h[k] = v;
    r_.header = std::move(h);
    r_.notes.push_back(std::string("ok=") + (ok_ ? "true" : "false") + " checks=" + std::to_string(r_.rows.size()));
    if (!ok_) {
      r_.notes.push_back("first mismatch: " + first_);
      err << "verification failed: " << first_ << '\n';
    }
    emit_report(r_, f, out);
    return ok_ ? kExitOk : kExitVerifyFailed;
  }

 private:
  Report r_;
  bool ok_ = true;
  std::string first_;
};

// Nondecreasing integer vectors with entries in [lo, hi] summing to k.
void antidominant_gl(std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t k,
                     std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> v;
  auto rec = [&](auto&& self, std::int64_t min, std::int64_t rest) -> void {
    if (v.size() == n) {
      if (rest == 0) out.push_back(v);
      return;
    }
    for (std::int64_t x = min; x <= hi; ++x) {
      const auto left = static_cast<std::int64_t>(n - v.size() - 1);
      if (x + left * x > rest) break;  // remaining entries are >= x
      v.push_back(x);
      self(self, x, rest - x);
      v.pop_back();
    }
  };
  rec(rec, lo, k);
}

int verify_gl(unsigned n, std::int64_t max_det, unsigned threads, Format f, std::ostream& out, std::ostream& err) {
  const Preset p = gl_preset(n);
  BasicFunctionEngine engine(p.rep);
  Checker ch("verify-gl");
  ch.header()["n"] = n;
  ch.header()["max_det"] = max_det;
  for (std::int64_t k = 0; k <= max_det; ++k) {
    std::vector<std::vector<std::int64_t>> mus;
    antidominant_gl(n, -2, k + 2 * static_cast<std::int64_t>(n), k, mus);
    for (const auto& m : mus) {
      const Weight mu(m);
      ch.add("closed-form", mu.to_string(), gl_closed_cmu(n, mu).to_string(), engine.c_mu(mu).to_string());
    }
  }
  const BasicFunction bf = engine.basic_series(max_det, threads);
  const WeightSeries prod = gl_product_series(n, max_det);
  std::map<Weight, std::pair<LaurentV, LaurentV>> both;
  for (const auto& [mu, c] : prod.entries()) both[mu].first = c;
  for (const auto& [mu, c] : bf.coeffs.entries()) both[mu].second = c;
  for (const auto& [mu, pr] : both) ch.add("product", mu.to_string(), pr.first.to_string(), pr.second.to_string());
  return ch.finish(f, out, err);
}

int verify_gsp4(std::int64_t max_det, Format f, std::ostream& out, std::ostream& err) {
  const Preset p = gsp4_preset();
  BasicFunctionEngine engine(p.rep);
  Checker ch("verify-gsp4");
  ch.header()["max_det"] = max_det;
  for (std::int64_t k = 0; k <= max_det; ++k) {
    std::int64_t expected = 0;
    for (std::int64_t m = 0; 2 * m <= k; ++m) expected += m + 1;
    ch.add("layer-count", "k=" + std::to_string(k), std::to_string(expected), std::to_string(engine.layer_count(k)));
  }
  const std::vector<std::vector<std::int64_t>> gens = {{0, 0, 1, 1}, {0, 1, 1, 2}, {1, 1, 1, 1}};
  std::vector<std::int64_t> x(4, -2);
  for (;;) {
    const std::int64_t det = x[0] + x[3];
    if (x[0] + x[3] == x[1] + x[2] && det >= 0 && det <= max_det) {
      const Weight mu = gsp4_from_eps(x);
      const bool member = gsp4_cone_member(mu);
      const bool cone = p.datum.is_antidominant(mu) && engine.cone().contains(mu);
      ch.add("cone-member", mu.to_string(), member ? "true" : "false", cone ? "true" : "false");
      if (member) {
        int reps = 0;
        for (std::int64_t a = 0; a <= det; ++a)
          for (std::int64_t b = 0; a + 2 * b <= det; ++b)
            for (std::int64_t c = 0; a + 2 * b + 2 * c <= det; ++c) {
              bool eq = true;
              for (int i = 0; i < 4; ++i) eq = eq && a * gens[0][i] + b * gens[1][i] + c * gens[2][i] == x[i];
              reps += eq;
            }
        ch.add("free-generation", mu.to_string(), "1", std::to_string(reps));
      }
    }
    int i = 0;
    while (i < 4 && x[i] == max_det + 1) x[i++] = -2;
    if (i == 4) break;
    ++x[i];
  }
  std::optional<Weight> witness;
  for (std::int64_t k = 0; k <= 4 && !witness; ++k)
    for (const auto& mu : engine.layer(k))
      if (engine.c_mu(mu).at_one() >= 2) {
        witness = mu;
        break;
      }
  ch.add("dichotomy-witness", witness ? witness->to_string() : "none", "true", witness ? "true" : "false");
  if (witness) ch.header()["dichotomy_witness"] = weight_json(*witness);
  return ch.finish(f, out, err);
}

int verify_crosscheck(const Preset& p, std::int64_t max_det, Format f, std::ostream& out, std::ostream& err) {
  BasicFunctionEngine engine(p.rep);
  Checker ch("verify-crosscheck");
  ch.header()["preset"] = p.name;
  ch.header()["max_det"] = max_det;
  for (std::int64_t k = 0; k <= max_det; ++k)
    for (const auto& mu : engine.layer(k)) {
      const LaurentV c = engine.c_mu(mu);
      ch.add("dual-route", mu.to_string(), c.to_string(), engine.c_mu_via_gkf(mu).to_string());
      ch.add("classical-limit", mu.to_string(), c.at_one().get_str(), classical_limit_count(p.rep, mu).get_str());
    }
  return ch.finish(f, out, err);
}

int verify_lfactor(const Preset& p, const Rational& qf, std::uint64_t seed, unsigned max_k, unsigned samples,
                   Format f, std::ostream& out, std::ostream& err) {
  BasicFunctionEngine engine(p.rep);
  Checker ch("verify-lfactor");
  ch.header()["preset"] = p.name;
  ch.header()["qf"] = to_string(qf);
  ch.header()["seed"] = seed;
  ch.header()["max_k"] = max_k;
  Json params = Json::array();
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const SatakeParameter c = random_parameter(p.datum, qf, rng);
    Json coords = Json::array();
    std::string text;
    for (const auto& x : c.coords) {
      coords.push_back(to_string(x));
      text += (text.empty() ? "" : ",") + to_string(x);
    }
    params.push_back(coords);
    for (const auto& d : verify_l_identity(engine, c, max_k)) {
      ch.add("l-identity", "c=(" + text + ") degree=" + std::to_string(d.degree), to_string(d.lhs), to_string(d.rhs));
    }
  }
  ch.header()["parameters"] = std::move(params);
  return ch.finish(f, out, err);
}

std::ostream& pick_output(const Subject& s, std::ostream& out, std::unique_ptr<std::ofstream>& file) {
  if (s.output.empty()) return out;
  file = std::make_unique<std::ofstream>(s.output);
  if (!*file) fail(ErrorKind::InvalidInput, "cannot write " + s.output);
  return *file;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basic-function coefficients and the identities around them"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for all subcommands");

  Subject subj;
  std::string lambda_text, mu_text, nu_text, psi = "std", qf_text = "9", s_text = "0", xi_text, type_text;
  bool partition = false, symbolic = false;
  long long max_det = 0, k_value = 0;
  unsigned n_value = 2, max_k = 3, samples = 1;
  std::uint64_t seed = 0;

  auto* datum = app.add_subcommand("datum", "print a root datum and its representation");
  add_subject(datum, subj);

  auto* kostka = app.add_subcommand("kostka", "Lusztig q-analogue or generalized Kostka-Foulkes polynomial");
  add_subject(kostka, subj);
  kostka->add_option("--lambda", lambda_text, "anti-dominant weight");
  kostka->add_option("--mu", mu_text, "weight");
  kostka->add_option("--psi", psi, "std (positive coroots) or basic (weights of V plus positive coroots)")
      ->check(CLI::IsMember({"std", "basic"}));
  kostka->add_flag("--partition", partition, "evaluate the q-partition function at --nu instead");
  kostka->add_option("--nu", nu_text, "argument of the partition function");

  auto* symdec = app.add_subcommand("symdec", "decompose Sym^k of the representation");
  add_subject(symdec, subj);
  symdec->add_option("--k", k_value, "symmetric power")->required()->check(CLI::NonNegativeNumber);

  auto* ctable = app.add_subcommand("ctable", "table of c_mu(q^-1) up to a det bound");
  add_subject(ctable, subj);
  ctable->add_option("--max-det", max_det, "largest det")->required()->check(CLI::NonNegativeNumber);

  auto* series = app.add_subcommand("series", "Cartan coefficients of the basic function");
  add_subject(series, subj);
  series->add_option("--max-det", max_det, "largest det")->required()->check(CLI::NonNegativeNumber);
  auto* qf_opt = series->add_option("--qf", qf_text, "residue field size p/q for exact values");
  series->add_option("--s", s_text, "rational twist s");
  series->add_flag("--symbolic", symbolic, "keep irrational powers of qF symbolic");

  auto* layers = app.add_subcommand("count-layers", "anti-dominant cone points per det layer");
  add_subject(layers, subj);
  layers->add_option("--max-k", k_value, "largest det")->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run an identity check");
  verify->require_subcommand(1);
  auto* v_gl = verify->add_subcommand("gl", "GL(n) closed form and generating product");
  v_gl->add_option("--n", n_value, "n")->check(CLI::Range(1, 9));
  auto* gl_det = v_gl->add_option("--max-det", max_det, "largest det (default 6)")->check(CLI::NonNegativeNumber);
  v_gl->add_option("--format", subj.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  v_gl->add_option("--output", subj.output, "output file");
  v_gl->add_option("--threads", subj.threads, "worker threads");
  auto* v_gsp4 = verify->add_subcommand("gsp4", "GSp(4) layer counts, cone and dichotomy");
  auto* gsp4_det = v_gsp4->add_option("--max-det", max_det, "largest det (default 6)")->check(CLI::NonNegativeNumber);
  v_gsp4->add_option("--format", subj.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  v_gsp4->add_option("--output", subj.output, "output file");
  auto* v_cross = verify->add_subcommand("crosscheck", "c_mu against the generalized Kostka-Foulkes route");
  add_subject(v_cross, subj);
  v_cross->add_option("--max-det", max_det, "largest det")->required()->check(CLI::NonNegativeNumber);
  auto* v_lf = verify->add_subcommand("lfactor", "L-factor identity at random Satake parameters");
  add_subject(v_lf, subj);
  v_lf->add_option("--qf", qf_text, "square of a rational, > 1");
  v_lf->add_option("--seed", seed, "random seed");
  v_lf->add_option("--max-k", max_k, "largest degree");
  v_lf->add_option("--samples", samples, "number of parameters")->check(CLI::PositiveNumber);

  auto* ngo = app.add_subcommand("ngo", "central extension of a simply connected datum");
  ngo->add_option("--type", type_text, "Cartan type, e.g. A3 or C2")->required();
  ngo->add_option("--xi", xi_text, "anti-dominant coweight in fundamental coweight coordinates")->required();
  ngo->add_option("--format", subj.format, "text|json")->check(CLI::IsMember({"text", "json", "csv"}));
  ngo->add_option("--output", subj.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    std::ostream& o = pick_output(subj, out, file);
    const Format fmt = parse_format(subj.format);

    if (verify->parsed()) {
      if ((v_gl->parsed() && gl_det->count() == 0) || (v_gsp4->parsed() && gsp4_det->count() == 0)) max_det = 6;
      if (v_gl->parsed()) return verify_gl(n_value, max_det, subj.threads, fmt, o, err);
      if (v_gsp4->parsed()) return verify_gsp4(max_det, fmt, o, err);
      if (v_cross->parsed()) return verify_crosscheck(load_subject(subj), max_det, fmt, o, err);
      return verify_lfactor(load_subject(subj), parse_rational(qf_text), seed, max_k, samples, fmt, o, err);
    }

    if (ngo->parsed()) {
      const BasedRootDatum d0 = simply_connected_datum(type_text);
      const Preset p = ngo_extend(d0, parse_int_list(xi_text));
      Report r = datum_report(p);
      r.kind = "ngo";
      std::optional<Preset> target;
      if (type_text[0] == 'A' && d0.rank() + 1 <= 9) target = gl_preset(static_cast<unsigned>(d0.rank() + 1));
      if (type_text == "C2") target = gsp4_preset();
      if (target) {
        const auto iso = find_isomorphism(p, *target);
        r.header["compared_with"] = target->name;
        r.header["isomorphic"] = iso.has_value();
        std::string note = "compared_with=" + target->name + " isomorphic=" + (iso ? "true" : "false");
        if (iso) {
          r.header["map"] = iso->map.rows();
          r.header["permutation"] = iso->permutation;
          note += " map=" + matrix_text(iso->map.rows());
        }
        r.notes.push_back(note);
      }
      emit_report(r, fmt, o);
      return kExitOk;
    }

    const Preset p = load_subject(subj);
    const BasedRootDatum& d = p.datum;

    if (datum->parsed()) {
      emit_report(datum_report(p), fmt, o);
      return kExitOk;
    }

    if (kostka->parsed()) {
      Report r;
      r.kind = "kostka";
      r.header["preset"] = p.name;
      r.header["psi"] = psi;
      std::unique_ptr<PartitionFunction> pf;
      if (psi == "std") {
        pf = std::make_unique<PartitionFunction>(positive_coroot_multiset(d));
      } else {
        pf = std::make_unique<PartitionFunction>(basic_multiset(p.rep));
      }
      if (partition) {
        if (nu_text.empty()) throw UsageError("--partition needs --nu");
        const Weight nu = d.cocharacter(parse_int_list(nu_text));
        const LaurentV v = (*pf)(nu);
        r.rows.push_back({weight_field("nu", "nu", nu), poly_field("value", "P", v),
                          integer_field("value_at_1", "P(1)", v.at_one())});
      } else {
        if (lambda_text.empty() || mu_text.empty()) throw UsageError("kostka needs --lambda and --mu");
        const Weight lambda = d.cocharacter(parse_int_list(lambda_text));
        const Weight mu = d.cocharacter(parse_int_list(mu_text));
        LaurentV v = psi == "std" ? LusztigQ(d)(lambda, mu) : generalized_kf(d, lambda, mu, *pf);
        r.rows.push_back({weight_field("lambda", "lambda", lambda), weight_field("mu", "mu", mu),
                          poly_field("value", "K", v), integer_field("value_at_1", "K(1)", v.at_one())});
      }
      emit_report(r, fmt, o);
      return kExitOk;
    }

    if (symdec->parsed()) {
      BasicFunctionEngine engine(p.rep);
      Report r;
      r.kind = "symdec";
      r.header["preset"] = p.name;
      r.header["k"] = k_value;
      r.columns = {"lambda", "mult", "dim"};
      for (const auto& [lambda, m] : engine.sym_decomposition(static_cast<unsigned>(k_value))) {
        r.rows.push_back({weight_field("lambda", "lambda", lambda), integer_field("mult", "mult", m),
                          integer_field("dim", "dim", weyl_dim(d, lambda))});
      }
      emit_report(r, fmt, o);
      return kExitOk;
    }

    if (ctable->parsed()) {
      BasicFunctionEngine engine(p.rep);
      const BasicFunction bf = engine.basic_series(max_det, subj.threads);
      Report r;
      r.kind = "ctable";
      r.header["preset"] = p.name;
      r.header["max_det"] = max_det;
      r.columns = {"mu", "det", "c_of_qinv", "c_at_1"};
      for (std::int64_t k = 0; k <= max_det; ++k)
        for (const auto& [mu, c] : bf.coeffs.entries())
          if (d.det(mu) == k) r.rows.push_back(ctable_row(d, mu, c));
      emit_report(r, fmt, o);
      return kExitOk;
    }

    if (series->parsed()) {
      BasicFunctionEngine engine(p.rep);
      const BasicFunction bf = engine.basic_series(max_det, subj.threads);
      Report r;
      r.kind = "series";
      r.header["preset"] = p.name;
      r.header["max_det"] = max_det;
      const bool numeric = qf_opt->count() > 0;
      std::map<Weight, SpecializedValue> values;
      if (numeric) {
        r.header["qf"] = qf_text;
        r.header["s"] = s_text;
        for (auto& v : specialize(bf, parse_rational(qf_text), parse_rational(s_text), symbolic)) {
          values.emplace(v.mu, std::move(v));
        }
      }
      for (std::int64_t k = 0; k <= max_det; ++k)
        for (const auto& [mu, c] : bf.coeffs.entries()) {
          if (d.det(mu) != k) continue;
          // Coefficient of the indicator of K mu K, times X^det.
          const LaurentV coeff = c.inverted().shifted(-static_cast<int>(dot(d.rho_neg().doubled, mu.coords)));
          Row row{weight_field("mu", "mu", mu), int_field("det", "det", k), poly_field("coefficient", "coeff", coeff)};
          if (numeric) {
            const auto& v = values.at(mu);
            row.push_back(v.value ? rational_field("value", "value", *v.value)
                                  : text_field("value", "value", v.symbolic()));
          }
          r.rows.push_back(std::move(row));
        }
      emit_report(r, fmt, o);
      return kExitOk;
    }

    if (layers->parsed()) {
      BasicFunctionEngine engine(p.rep);
      Report r;
      r.kind = "count-layers";
      r.header["preset"] = p.name;
      r.columns = {"k", "count"};
      for (long long k = 0; k <= k_value; ++k) {
        r.rows.push_back({int_field("k", "k", k), int_field("count", "count", static_cast<long long>(engine.layer_count(k)))});
      }
      emit_report(r, fmt, o);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace basicfn
