#include "cli_app.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>

#include "superfrob/characters.hpp"
#include "superfrob/combinatorics.hpp"
#include "superfrob/exactalg.hpp"
#include "superfrob/limits.hpp"
#include "superfrob/rsk.hpp"
#include "superfrob/sequences.hpp"
#include "superfrob/superfunctions.hpp"

namespace sfrob::cli {

namespace {

using nlohmann::json;

struct Options {
  // shared
  bool as_json = false;
  bool force = false;
  std::string params_text;
  std::string strategy_text = "corrected";
  std::optional<int> m;
  std::optional<int> n;
  // enum
  std::optional<int> multipartitions;
  std::string std_shape, sstd_shape;
  // rsk / weight / qmu
  std::string sequence, mu;
  bool trace = false;
  bool diagnostic = false;
  // chartable / verify
  bool specialize = false;
  bool oracle = false;
  std::string cache_dir;
  std::string suite = "all";
  unsigned long seed = 1;
};

class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Limits limits_of(const Options& o) { return o.force ? Limits::unbounded() : Limits{}; }

void guard(const Options& o, int m, int n, const HookParams& params) {
  if (o.force) return;
  const auto parts = count_multipartitions(n, m);
  if (parts > kMultipartitionLimit)
    throw GuardRefusal("|P_{" + std::to_string(m) + "," + std::to_string(n) + "}| = " + std::to_string(parts) +
                       " exceeds " + std::to_string(kMultipartitionLimit) + " (use --force)");
  if (word_count(n, params.alphabet_size()) > kSequenceLimit)
    throw GuardRefusal("(k+l)^n = " + std::to_string(params.alphabet_size()) + "^" + std::to_string(n) +
                       " exceeds " + std::to_string(kSequenceLimit) + " (use --force)");
}

HookParams params_or_default(const Options& o, int m, int n) {
  if (o.params_text.empty()) return default_params(m, n);
  HookParams p = HookParams::parse(o.params_text);
  if (p.m() != m) throw ParameterError("--params has " + std::to_string(p.m()) + " colors but --m is " + std::to_string(m));
  return p;
}

HookParams required_params(const Options& o) {
  if (o.params_text.empty()) throw ParameterError("--params is required");
  HookParams p = HookParams::parse(o.params_text);
  if (o.m && *o.m != p.m()) throw ParameterError("--m disagrees with --params");
  return p;
}

std::string word_text(SymbolSpan w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i].value);
  return s;
}

// ---- enum ----

int cmd_enum(const Options& o, std::ostream& out) {
  json items = json::array();
  std::vector<std::string> lines;
  std::string what;
  if (o.multipartitions) {
    if (!o.m) throw ParameterError("--multipartitions needs --m");
    what = "multipartitions";
    if (!o.force && count_multipartitions(*o.multipartitions, *o.m) > kMultipartitionLimit)
      throw GuardRefusal("too many multipartitions (use --force)");
    for (const auto& mp : enumerate_multipartitions(*o.multipartitions, *o.m)) lines.push_back(mp.to_string());
  } else if (!o.std_shape.empty()) {
    what = "standard_tableaux";
    Multipartition shape = Multipartition::parse(o.std_shape);
    if (!o.force && count_standard_tableaux(shape) > kSequenceLimit) throw GuardRefusal("too many tableaux (use --force)");
    for (const auto& t : standard_tableaux(shape)) lines.push_back(to_string(t));
  } else if (!o.sstd_shape.empty()) {
    what = "hook_tableaux";
    HookParams params = required_params(o);
    Multipartition shape = Multipartition::parse(o.sstd_shape, params.m());
    if (!o.force && word_count(shape.size(), params.alphabet_size()) > kSequenceLimit)
      throw GuardRefusal("(k+l)^n bound on hook tableaux exceeds the limit (use --force)");
    for (const auto& t : hook_tableaux(shape, params)) lines.push_back(to_string(t, params));
  } else {
    throw ParameterError("enum needs one of --multipartitions, --std, --sstd");
  }
  if (o.as_json) {
    for (auto& l : lines) items.push_back(l);
    out << json{{"kind", "enum"}, {"what", what}, {"count", lines.size()}, {"items", items}}.dump(2) << "\n";
  } else {
    for (auto& l : lines) out << l << "\n";
    out << "# " << lines.size() << " " << what << "\n";
  }
  return kPass;
}

// ---- rsk ----

int cmd_rsk(const Options& o, std::ostream& out) {
  HookParams params = required_params(o);
  Strategy strategy = parse_strategy(o.strategy_text);
  auto seq = ParitySequence::parse(o.sequence, params);
  InsertionTrace tr = insert_sequence(seq.span(), params, strategy);
  if (o.as_json) {
    json j = to_json(tr);
    j["kind"] = "rsk";
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "strategy: " << to_string(strategy) << "\n";
  out << "shape: " << tr.T.shape().to_string() << "\n";
  out << "S: " << to_string(tr.S, params) << "\n";
  out << "T: " << to_string(tr.T) << "\n";
  if (strategy == Strategy::corrected) out << "note: odd letters of S are reflected within each color\n";
  if (o.trace) {
    json steps = to_json(tr)["steps"];
    for (const auto& st : steps) out << st.dump() << "\n";
  }
  return kPass;
}

// ---- weight ----

std::string explain_zero(SymbolSpan w, const Multipartition& mu) {
  size_t pos = 0;
  int row_no = 0;
  for (int c = 1; c <= mu.m(); ++c)
    for (int len : mu.component(c).parts()) {
      ++row_no;
      SymbolSpan row = w.subspan(pos, len);
      if (!updown_peak(row))
        return "row " + std::to_string(row_no) + " (positions " + std::to_string(pos + 1) + ".." +
               std::to_string(pos + len) + ") = (" + word_text(row) + ") is not up-down";
      pos += len;
    }
  return "";
}

int cmd_weight(const Options& o, std::ostream& out) {
  HookParams params = required_params(o);
  RingPtr ring = make_ring(params);
  auto seq = ParitySequence::parse(o.sequence, params);
  Multipartition mu = Multipartition::parse(o.mu, params.m());
  MPoly strict = mu_weight_sequence(seq.span(), mu, ring);
  std::string why = strict.is_zero() ? explain_zero(seq.span(), mu) : "";
  std::optional<MPoly> diag;
  if (o.diagnostic) diag = local_factor_product(seq.span(), mu, ring);
  if (o.as_json) {
    json j{{"kind", "weight"}, {"params", params.to_string()}, {"mu", mu.to_string()},
           {"sequence", seq.to_string()}, {"strict", to_json(strict)}, {"explanation", why}};
    if (diag) j["diagnostic"] = to_json(*diag);
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "strict: " << to_string(strict) << "\n";
  if (!why.empty()) out << "explanation: " << why << "\n";
  if (diag) out << "diagnostic: " << to_string(*diag) << "\n";
  return kPass;
}

// ---- qmu ----

int cmd_qmu(const Options& o, std::ostream& out) {
  HookParams params = required_params(o);
  RingPtr ring = make_ring(params);
  Multipartition mu = Multipartition::parse(o.mu, params.m());
  MPoly p = q_mu(mu, ring);
  if (o.as_json) {
    json j = to_json(p);
    j["kind"] = "qmu";
    j["mu"] = mu.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << to_string(p) << "\n";
  }
  return kPass;
}

// ---- chartable ----

std::string cache_file(const Options& o, int m, int n, const HookParams& params) {
  std::string p = params.to_string();
  for (char& c : p) c = c == '|' ? '_' : (c == ',' ? '-' : c);
  std::string route = o.oracle ? "oracle" : o.strategy_text;
  return "chartable-m" + std::to_string(m) + "-n" + std::to_string(n) + "-p" + p + "-" + route + "-" + kCodeVersion +
         ".json";
}

CharacterTable table_from_json(const json& j, const HookParams& params) {
  CharacterTable t;
  t.m = j.at("m");
  t.n = j.at("n");
  t.params = params;
  t.strategy = parse_strategy(j.at("strategy").get<std::string>());
  t.provenance = j.at("provenance") == "oracle" ? Provenance::oracle : Provenance::rsk;
  RingPtr ring = make_ring(params);
  for (const auto& l : j.at("labels")) t.labels.push_back(Multipartition::parse(l.get<std::string>(), t.m));
  for (const auto& row : j.at("entries")) {
    std::vector<MPoly> r;
    for (const auto& e : row) r.push_back(parse_mpoly(e.get<std::string>(), ring));
    t.entries.push_back(std::move(r));
  }
  return t;
}

int cmd_chartable(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.m || !o.n) throw ParameterError("chartable needs --m and --n");
  const int m = *o.m, n = *o.n;
  HookParams params = params_or_default(o, m, n);
  Strategy strategy = parse_strategy(o.strategy_text);
  guard(o, m, n, params);

  std::optional<CharacterTable> table;
  std::filesystem::path path;
  if (!o.cache_dir.empty()) {
    path = std::filesystem::path(o.cache_dir) / cache_file(o, m, n, params);
    std::ifstream in(path);
    if (in) {
      try {
        json j = json::parse(in);
        if (j.value("code_version", "") == kCodeVersion) table = table_from_json(j, params);
      } catch (const std::exception& ex) {
        err << "warning: ignoring unreadable cache file " << path << ": " << ex.what() << "\n";
      }
    }
  }
  if (!table) {
    table = o.oracle ? character_table_oracle(m, n, params, limits_of(o))
                     : character_table_rsk(m, n, params, strategy, limits_of(o));
    if (!path.empty()) {
      std::filesystem::create_directories(path.parent_path());
      json j = table->to_json();
      j["code_version"] = kCodeVersion;
      std::ofstream(path) << j.dump(1) << "\n";
    }
  }
  if (o.specialize) {
    SpecializedTable s = specialize_table(*table);
    if (o.as_json) out << s.to_json().dump(2) << "\n";
    else out << s.to_text();
  } else {
    if (o.as_json) out << table->to_json().dump(2) << "\n";
    else out << table->to_text();
  }
  return kPass;
}

// ---- verify ----

struct SuiteResult {
  std::string name;
  std::string status;  // pass | fail | skip
  std::string detail;
};

SuiteResult suite_frobenius(const Options& o, int m, int n, const HookParams& params, Strategy strategy) {
  FrobeniusReport rep = verify_frobenius(m, n, params, strategy, limits_of(o));
  int ok = 0;
  std::string first;
  for (const auto& r : rep.results) {
    if (r.identity && r.routes_agree) ++ok;
    else if (first.empty()) first = "; first failure mu=" + r.mu.to_string() + ": " + r.first_difference;
  }
  return {"frobenius", rep.pass() ? "pass" : "fail",
          std::to_string(ok) + "/" + std::to_string(rep.results.size()) + " mu pass identity and route agreement" + first};
}

SuiteResult suite_bijection(const Options& o, int n, const HookParams& params, Strategy strategy) {
  auto rep = verify_bijection(n, params, strategy, limits_of(o).sequences);
  return {"bijection", rep.pass() ? "pass" : "fail", rep.summary()};
}

SuiteResult suite_transport(const Options& o, int n, const HookParams& params, Strategy strategy) {
  auto rep = check_weight_transport(n, params, strategy, limits_of(o).sequences);
  return {"transport", rep.pass() ? "pass" : "fail", rep.summary()};
}

SuiteResult suite_sequences(int m, int n, const HookParams& params) {
  RingPtr ring = make_ring(params);
  int bad = 0, total = 0;
  std::string first;
  for (const auto& mu : enumerate_multipartitions(n, m)) {
    ++total;
    MPoly sum(ring);
    for_each_word(n, params.alphabet_size(),
                  [&](SymbolSpan w) { sum += mu_weight_sequence(w, mu, ring) * z_monomial(w, ring); });
    if (!(sum == q_mu(mu, ring))) {
      ++bad;
      if (first.empty()) first = "; first failure mu=" + mu.to_string();
    }
  }
  int comps = 0, comp_bad = 0;
  for (int t = 1; t <= n; ++t)
    for (const auto& c : compositions(t, params)) {
      ++comps;
      if (!permutation_sum_check(c, ring).pass) ++comp_bad;
    }
  bool ok = bad == 0 && comp_bad == 0;
  return {"sequences", ok ? "pass" : "fail",
          std::to_string(total - bad) + "/" + std::to_string(total) + " mu expand to q_mu; " +
              std::to_string(comps - comp_bad) + "/" + std::to_string(comps) + " permutation sums match" + first};
}

SuiteResult suite_orthogonality(const Options& o, int m, int n, const HookParams& params, Strategy strategy) {
  CharacterTable t = character_table_rsk(m, n, params, strategy, limits_of(o));
  SpecializedTable s = specialize_table(t);
  const size_t L = s.labels.size();
  int bad = 0;
  for (size_t j = 0; j < L; ++j) {
    Cyclotomic sum(Rational(0), m);
    for (size_t i = 0; i < L; ++i) sum += s.entries[i][j] * s.entries[i][j].conj();
    if (!(sum == Cyclotomic(centralizer_order(s.labels[j]), m))) ++bad;
  }
  // identity class: n fixed points of color 0, i.e. (1^n) in the last component
  size_t id = L;
  for (size_t j = 0; j < L; ++j) {
    const auto& mu = s.labels[j];
    if (mu.component(m).size() == n && mu.component(m).length() == n) id = j;
  }
  int dim_bad = 0;
  for (size_t i = 0; i < L && id < L; ++i)
    if (!(s.entries[i][id] == Cyclotomic(Rational(static_cast<long>(count_standard_tableaux(s.labels[i]))), m)))
      ++dim_bad;
  bool ok = bad == 0 && dim_bad == 0 && id < L;
  return {"orthogonality", ok ? "pass" : "fail",
          std::to_string(L - bad) + "/" + std::to_string(L) + " columns satisfy sum |chi|^2 = Z_mu; " +
              std::to_string(L - dim_bad) + "/" + std::to_string(L) + " identity-column entries equal d_lambda"};
}

SuiteResult suite_ring(int m, int n, const HookParams& params, unsigned long seed) {
  RingPtr ring = make_ring(params);
  std::mt19937_64 rng(seed);
  auto random_poly = [&]() {
    MPoly p(ring);
    std::uniform_int_distribution<int> terms(0, 4), coef(-3, 3), qe(-2, 2), small(0, 2);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      Exponent e(ring->width(), 0);
      e[0] = qe(rng);
      for (int s = 1; s < ring->width(); ++s) e[s] = small(rng) == 2 ? small(rng) : 0;
      p.add_term(e, Rational(coef(rng), 1 + small(rng)));
    }
    return p;
  };
  int bad = 0;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    MPoly a = random_poly(), b = random_poly(), c = random_poly();
    if (!((a * b) * c == a * (b * c))) ++bad;
    else if (!(a * (b + c) == a * b + a * c)) ++bad;
    else if (!(parse_mpoly(to_string(a), ring) == a)) ++bad;
    else if (!(specialize(a * b) == specialize(a) * specialize(b))) ++bad;
  }
  (void)m;
  (void)n;
  return {"ring", bad == 0 ? "pass" : "fail",
          std::to_string(cases - bad) + "/" + std::to_string(cases) + " random triples (seed " + std::to_string(seed) +
              ")"};
}

SuiteResult suite_dimension(const Options& o, int m, int n, HookParams params, Strategy strategy) {
  // the identity needs k_c + l_c = n, which the k = l = n default never meets
  if (o.params_text.empty()) params = HookParams::uniform(m, (n + 1) / 2, n / 2);
  for (int c = 1; c <= m; ++c)
    if (params.k(c) + params.l(c) != n) return {"dimension", "skip", "needs k_c + l_c = n in every color"};
  auto rep = verify_dimension_identity(m, n, params, strategy, limits_of(o));
  return {"dimension", rep.pass() ? "pass" : "fail",
          "params=" + params.to_string() + " sequences=" + std::to_string(rep.sequences) + " images=" + std::to_string(rep.distinct_images) +
              " sum d^2=" + std::to_string(rep.sum_d_squared) + " n!m^n=" + std::to_string(rep.expected)};
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.m || !o.n) throw ParameterError("verify needs --m and --n");
  const int m = *o.m, n = *o.n;
  HookParams params = params_or_default(o, m, n);
  Strategy strategy = parse_strategy(o.strategy_text);
  guard(o, m, n, params);
  static const std::vector<std::string> known = {"frobenius", "bijection", "transport", "sequences",
                                                 "orthogonality", "ring", "dimension"};
  std::vector<std::string> wanted;
  if (o.suite == "all") wanted = known;
  else if (std::find(known.begin(), known.end(), o.suite) != known.end()) wanted = {o.suite};
  else throw ParameterError("unknown suite '" + o.suite + "'");

  std::vector<SuiteResult> results;
  for (const auto& s : wanted) {
    if (s == "frobenius") results.push_back(suite_frobenius(o, m, n, params, strategy));
    else if (s == "bijection") results.push_back(suite_bijection(o, n, params, strategy));
    else if (s == "transport") results.push_back(suite_transport(o, n, params, strategy));
    else if (s == "sequences") results.push_back(suite_sequences(m, n, params));
    else if (s == "orthogonality") results.push_back(suite_orthogonality(o, m, n, params, strategy));
    else if (s == "ring") results.push_back(suite_ring(m, n, params, o.seed));
    else if (s == "dimension") results.push_back(suite_dimension(o, m, n, params, strategy));
  }
  bool ok = std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == "fail"; });
  if (o.as_json) {
    json suites = json::array();
    for (const auto& r : results) suites.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
    out << json{{"kind", "verify"}, {"m", m}, {"n", n}, {"params", params.to_string()},
                {"strategy", to_string(strategy)}, {"seed", o.seed}, {"pass", ok}, {"suites", suites}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : results) {
      std::string tag = r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "SKIP");
      out << tag << " " << r.name << ": " << r.detail << "\n";
    }
    out << (ok ? "verify: pass" : "verify: FAIL") << "\n";
  }
  return ok ? kPass : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Characters of cyclotomic Hecke algebras via RSK superinsertion"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sc) { sc->add_flag("--json", o.as_json, "Emit JSON"); };
  auto add_params = [&](CLI::App* sc) { sc->add_option("--params", o.params_text, "k1|l1,k2|l2,..."); };
  auto add_strategy = [&](CLI::App* sc) {
    sc->add_option("--strategy", o.strategy_text, "literal|corrected")->check(CLI::IsMember({"literal", "corrected"}));
  };

  auto* en = app.add_subcommand("enum", "List multipartitions or tableaux");
  en->add_option("--multipartitions", o.multipartitions, "Size N");
  en->add_option("--m", o.m, "Number of components");
  en->add_option("--std", o.std_shape, "Standard tableaux of SHAPE");
  en->add_option("--sstd", o.sstd_shape, "Hook tableaux of SHAPE (needs --params)");
  en->add_flag("--force", o.force, "Ignore size guards");
  add_params(en);
  add_json(en);

  auto* rs = app.add_subcommand("rsk", "Insert a sequence, print (S,T)");
  add_params(rs);
  add_strategy(rs);
  rs->add_option("--m", o.m, "Number of colors (checked against --params)");
  rs->add_option("--sequence", o.sequence, "Comma-separated symbols")->required();
  rs->add_flag("--trace", o.trace, "Per-step JSON lines");
  add_json(rs);

  auto* wt = app.add_subcommand("weight", "mu-weight of a sequence");
  add_params(wt);
  wt->add_option("--mu", o.mu, "Multipartition")->required();
  wt->add_option("--sequence", o.sequence, "Comma-separated symbols")->required();
  wt->add_flag("--diagnostic", o.diagnostic, "Also print the ungated local-factor product");
  add_json(wt);

  auto* qm = app.add_subcommand("qmu", "Deformed power sum q_mu");
  add_params(qm);
  qm->add_option("--mu", o.mu, "Multipartition")->required();
  add_json(qm);

  auto* ct = app.add_subcommand("chartable", "Character table");
  ct->add_option("--m", o.m, "Number of components")->required();
  ct->add_option("--n", o.n, "Size")->required();
  add_params(ct);
  add_strategy(ct);
  ct->add_flag("--specialize", o.specialize, "q=1, Q_a=zeta^a");
  ct->add_flag("--oracle", o.oracle, "Use the linear-algebra route");
  ct->add_option("--cache-dir", o.cache_dir, "Directory for persisted tables");
  ct->add_flag("--force", o.force, "Ignore size guards");
  add_json(ct);

  auto* vf = app.add_subcommand("verify", "Run verification suites");
  vf->add_option("--m", o.m, "Number of components")->required();
  vf->add_option("--n", o.n, "Size")->required();
  add_params(vf);
  add_strategy(vf);
  vf->add_option("--suite", o.suite, "frobenius|bijection|transport|sequences|orthogonality|ring|dimension|all");
  vf->add_option("--seed", o.seed, "Seed for randomized suites");
  vf->add_flag("--force", o.force, "Ignore size guards");
  add_json(vf);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(o, out);
    if (rs->parsed()) return cmd_rsk(o, out);
    if (wt->parsed()) return cmd_weight(o, out);
    if (qm->parsed()) return cmd_qmu(o, out);
    if (ct->parsed()) return cmd_chartable(o, out, err);
    if (vf->parsed()) return cmd_verify(o, out);
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kGuardRefusal;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UncertifiedStrategy& e) {
    err << "refused: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const RankDeficiency& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsage;
}

}  // namespace sfrob::cli
