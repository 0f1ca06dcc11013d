#include "detloci/verifier.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "detloci/gradedhom.hpp"

namespace detloci {

std::string to_string(IdentityStatus s)
{
  switch (s) {
  case IdentityStatus::holds: return "holds";
  case IdentityStatus::fails: return "fails";
  case IdentityStatus::skipped: return "skipped";
  }
  return "unknown";
}

IdentityRecord IdentityRecord::skip(std::string formula, std::string reason)
{
  IdentityRecord r;
  r.formula = std::move(formula);
  r.reason = std::move(reason);
  return r;
}

IdentityRecord IdentityRecord::compare(std::string formula, long long lhs, long long rhs,
                                       std::map<std::string, long long> inputs)
{
  IdentityRecord r;
  r.status = lhs == rhs ? IdentityStatus::holds : IdentityStatus::fails;
  r.formula = std::move(formula);
  r.lhs = lhs;
  r.rhs = rhs;
  r.inputs = std::move(inputs);
  return r;
}

bool CaseReport::pass() const
{
  for (const auto& [name, id] : identities)
    if (id.status == IdentityStatus::fails) return false;
  return !(prediction_binding && prediction.status == IdentityStatus::fails);
}

std::optional<long long> CaseReport::window_value(const std::string& name, int v) const
{
  auto it = windows.find(name);
  if (it == windows.end() || v < window_lo || v > window_hi) return std::nullopt;
  return it->second[v - window_lo];
}

bool spec_is_random(const MatrixSpec& spec)
{
  if (spec.kind == MatrixSpec::Kind::random) return true;
  if (spec.kind != MatrixSpec::Kind::explicit_entries) return false;
  return std::find(spec.entries.begin(), spec.entries.end(), "rand") != spec.entries.end();
}

namespace {

// Sum of C(a_j - a_top + n, n) over j = 1..upto.
long long binomial_tail(const DegreeData& d, int upto)
{
  long long s = 0;
  const int top = d.A(d.cols());
  for (int j = 1; j <= upto; ++j) s += binom_trunc(d.A(j) - top + d.n, d.n);
  return s;
}

int certificate_degree(const DegreeData& d)
{
  long long bound = 0;
  try {
    bound = mdr(d);
  } catch (const std::exception&) {
    for (int v : d.a) bound += std::max(v, 0);
  }
  return static_cast<int>(std::clamp<long long>(bound, 2, 60)) + 2;
}

void fill_invariants(CaseReport& rep)
{
  const DegreeData& d = rep.data;
  rep.invariants["lambda_c"] = lambda_c(d);
  rep.invariants["K_total"] = K_total(d);
  rep.invariants["Kprime_total"] = K_prime_total(d);
  rep.invariants["s_r"] = s_r(d);
  try {
    rep.invariants["mdg"] = mdg(d);
    rep.invariants["mdr"] = mdr(d);
  } catch (const std::exception& e) {
    rep.notes.push_back(std::string("mdg/mdr unavailable: ") + e.what());
  }
  if (d.c == 1 && d.r == 2) rep.invariants["kappa_1"] = kappa_1(d);
  if (kappa_prime_applicable(d)) {
    rep.invariants["kappa_prime"] = kappa_prime(d);
    rep.invariants["kapp"] = hf_from_betti(kapp_betti(d, 2 - d.r), d.n, d.A(d.t - d.r + 2));
  }
}

class CaseRunner {
public:
  CaseRunner(CaseReport& rep, const HomMatrix& m, const Flag& f, const CaseOptions& opt)
      : rep_(rep), m_(m), f_(f), opt_(opt), d_(rep.data)
  {
  }

  void run()
  {
    flag_quantities();
    first_ideal_quantities();
    ext1();
    kappa();
    prediction();
  }

private:
  const SyzygyBlock& syz(int k)
  {
    auto it = syz_.find(k);
    if (it != syz_.end()) return it->second;
    SyzygyBlock s = syzygy_generators(f_.stage(k), f_.stage_data(k));
    if (!s.complete) rep_.notes.push_back("syzygies of stage " + std::to_string(k) + " are truncated");
    return syz_.emplace(k, std::move(s)).first->second;
  }
  const GradedModuleView& quotient(int k)
  {
    auto it = quot_.find(k);
    if (it != quot_.end()) return it->second;
    return quot_.emplace(k, GradedModuleView::quotient(f_.stage(k).ideal)).first->second;
  }
  // I_{A_{k+1}} / I_{A_k}.
  const GradedModuleView& step(int k)
  {
    auto it = step_.find(k);
    if (it != step_.end()) return it->second;
    return step_.emplace(k, GradedModuleView::subquotient(f_.stage(k + 1).ideal, f_.stage(k).ideal)).first->second;
  }

  template <class F>
  void window(const std::string& name, F&& value)
  {
    std::vector<long long> seq;
    for (int v = rep_.window_lo; v <= rep_.window_hi; ++v) seq.push_back(value(v));
    if (rep_.window_lo <= 0 && 0 <= rep_.window_hi) rep_.computed[name] = seq[-rep_.window_lo];
    rep_.windows[name] = std::move(seq);
  }

  bool has(const std::string& name) const { return rep_.computed.count(name) > 0; }
  long long val(const std::string& name) const { return rep_.computed.at(name); }

  void flag_quantities()
  {
    const int c = d_.c;
    const char* why = nullptr;
    if (!opt_.flag_quantities) why = "flag quantities not requested";
    else if (c - 1 < f_.first) why = "needs c >= 3-r so that the last column can be deleted";
    if (why) {
      rep_.identities["thm61cond"] = IdentityRecord::skip("tangent = nB + fib2 - fib1", why);
      rep_.identities["thm61cond1"] = IdentityRecord::skip("fib1 + homIB_A = nB", why);
      rep_.identities["propo8_recursion"] =
          IdentityRecord::skip("fib2 - fib1 = lambda_c - lambda_{c-1} + K_c", why);
      rep_.identities["codgen"] = IdentityRecord::skip("fib1 = sum_{j<=t+c-2} C(a_j-a_{t+c-1}+n, n)", why);
      return;
    }
    const SyzygyBlock& SA = syz(c);
    const SyzygyBlock& SB = syz(c - 1);
    const auto& A = quotient(c);
    const auto& B = quotient(c - 1);
    const auto& Q = step(c - 1);
    const int top = d_.A(d_.cols());
    window("tangent", [&](int v) { return hom_dim(SA, A, v); });
    window("nB", [&](int v) { return hom_dim(SB, B, v); });
    window("fib1", [&](int v) { return hom_dim(SB, Q, v); });
    window("fib2", [&](int v) { return coker_tensor_dim(m_, f_.stage(c).ideal, top + v); });
    window("homIB_A", [&](int v) { return hom_dim(SB, A, v); });

    const long long tangent = val("tangent"), nB = val("nB"), fib1 = val("fib1"), fib2 = val("fib2"),
                    homIB_A = val("homIB_A");
    rep_.identities["thm61cond"] =
        IdentityRecord::compare("tangent = nB + fib2 - fib1", tangent, nB + fib2 - fib1,
                                {{"tangent", tangent}, {"nB", nB}, {"fib2", fib2}, {"fib1", fib1}});
    rep_.identities["thm61cond1"] = IdentityRecord::compare("fib1 + homIB_A = nB", fib1 + homIB_A, nB,
                                                            {{"fib1", fib1}, {"homIB_A", homIB_A}, {"nB", nB}});
    const std::string rec = "fib2 - fib1 = lambda_c - lambda_{c-1} + K_c";
    if (rep_.predicates.at("star")) {
      long long lc = lambda_c(d_), lp = lambda_c(drop_last_column(d_)), kc = c >= 3 ? K(d_, c) : 0;
      rep_.identities["propo8_recursion"] =
          IdentityRecord::compare(rec, fib2 - fib1, lc - lp + kc,
                                  {{"fib2", fib2}, {"fib1", fib1}, {"lambda_c", lc}, {"lambda_c-1", lp}, {"K_c", kc}});
    } else {
      rep_.identities["propo8_recursion"] = IdentityRecord::skip(rec, "star predicate fails");
    }
    const long long bt = binomial_tail(d_, d_.t + c - 2);
    rep_.identities["codgen"] = IdentityRecord::compare("fib1 = sum_{j<=t+c-2} C(a_j-a_{t+c-1}+n, n)", fib1, bt,
                                                        {{"fib1", fib1}, {"binomial_sum", bt}});
  }

  void first_ideal_quantities()
  {
    const int c = d_.c, g = 3 - d_.r;
    const std::string exf = "hom(I_G, I_{A/B})_0 = sum_{j<=t-r+2} C(a_j-a_{t+c-1}+n, n)";
    const std::string af = "hom(I_G, B)_0 = hom(I_G, A)_0 + hom(I_G, I_{A/B})_0";
    if (!opt_.exgenassump && opt_.a3r_steps <= 0) {
      rep_.identities["exgenassump"] = IdentityRecord::skip(exf, "not requested");
      rep_.identities["a3r"] = IdentityRecord::skip(af, "not requested");
      return;
    }
    if (c < g) {
      rep_.identities["exgenassump"] = IdentityRecord::skip(exf, "needs c >= 3-r");
      rep_.identities["a3r"] = IdentityRecord::skip(af, "needs c >= 4-r");
      return;
    }
    const SyzygyBlock& SG = syz(g);
    auto hom_G_stage = [&](int k) {
      std::string name = "homG_stage" + std::to_string(k);
      if (!rep_.windows.count(name)) window(name, [&](int v) { return hom_dim(SG, quotient(k), v); });
      return val(name);
    };
    auto hom_G_step = [&](int k) {
      std::string name = "homG_I" + std::to_string(k);
      if (!rep_.windows.count(name)) window(name, [&](int v) { return hom_dim(SG, step(k), v); });
      return val(name);
    };
    if (opt_.exgenassump) {
      long long lhs = hom_G_step(c - 1);
      long long bt = binomial_tail(d_, d_.t - d_.r + 2);
      rep_.identities["exgenassump"] =
          IdentityRecord::compare(exf, lhs, bt, {{"hom_G_IAB", lhs}, {"binomial_sum", bt}});
    } else {
      rep_.identities["exgenassump"] = IdentityRecord::skip(exf, "not requested");
    }
    if (opt_.a3r_steps <= 0) {
      rep_.identities["a3r"] = IdentityRecord::skip(af, "not requested");
      return;
    }
    for (int k = 0; k < opt_.a3r_steps; ++k) {
      const int hi = c - k, lo = c - k - 1;
      const std::string key = k == 0 ? "a3r" : "a3r_stage" + std::to_string(lo);
      if (lo < g) {
        rep_.identities[key] = IdentityRecord::skip(af, "needs the lower stage to contain the first flag ideal");
        continue;
      }
      long long b = hom_G_stage(lo), a = hom_G_stage(hi), i = hom_G_step(lo);
      rep_.identities[key] =
          IdentityRecord::compare(af, b, a + i, {{"hom_G_B", b}, {"hom_G_A", a}, {"hom_G_IAB", i}, {"stage", lo}});
    }
  }

  void ext1()
  {
    const std::string f = "ext1(MI, MI)_0 = lambda_c + sum K_i";
    if (!opt_.ext1) {
      rep_.identities["ext1_cross_check"] = IdentityRecord::skip(f, "not requested");
      return;
    }
    if (d_.c < 1 || !rep_.predicates.at("r1_hyp")) {
      rep_.identities["ext1_cross_check"] = IdentityRecord::skip(f, "needs c >= 1 and a_{i-1} >= b_i");
      return;
    }
    Ext1Result e = ext1_MI_dim(m_);
    rep_.computed["ext1"] = e.ext1;
    rep_.computed["hom_MI_MI"] = e.hom_MI_MI;
    if (e.conditional) {
      rep_.identities["ext1_cross_check"] =
          IdentityRecord::skip(f, "Hom(MI, MI)_0 has dimension " + std::to_string(e.hom_MI_MI) + ", not 1");
      return;
    }
    long long rhs = lambda_c(d_) + K_total(d_);
    rep_.identities["ext1_cross_check"] =
        IdentityRecord::compare(f, e.ext1, rhs, {{"ext1", e.ext1}, {"lambda_c", lambda_c(d_)}, {"K_total", K_total(d_)}});
  }

  void kappa()
  {
    if (!opt_.kappa) return;
    const int c = d_.c;
    if (c < 3 - d_.r) {
      rep_.notes.push_back("kappa needs c >= 3-r");
      return;
    }
    long long total = 0;
    HomMatrix mj = m_;
    for (int j = c; j >= 3 - d_.r; --j) {
      if (j < c) mj = delete_last_column(mj);
      const int deg = d_.A(d_.t + j - 1);
      long long term = coker_dim(mj, deg) - coker_tensor_dim(mj, f_.stage(j).ideal, deg);
      rep_.computed["kappa_term" + std::to_string(j)] = term;
      total += term;
    }
    rep_.computed["kappa"] = total;
    if (kappa_prime_applicable(d_)) {
      long long kp = kappa_prime(d_);
      rep_.identities["kappa_closed_form"] =
          IdentityRecord::compare("kappa = kappa'", total, kp, {{"kappa", total}, {"kappa_prime", kp}});
    }
  }

  void prediction()
  {
    const std::string f = "tangent = predicted dim W";
    const auto& p = rep_.predicted;
    if (!has("tangent")) {
      rep_.prediction = IdentityRecord::skip(f, "tangent not computed");
      return;
    }
    if (p.status == PredictionStatus::not_applicable) {
      rep_.prediction = IdentityRecord::skip(f, "no prediction applies");
      return;
    }
    if (p.status == PredictionStatus::upper_bound_only) {
      rep_.prediction = IdentityRecord::skip(f, "prediction is an upper bound only");
      return;
    }
    rep_.prediction = IdentityRecord::compare(f, val("tangent"), p.value, {{"tangent", val("tangent")}, {"predicted", p.value}});
    const auto& pr = rep_.predicates;
    rep_.prediction_binding = pr.at("star") && pr.at("a1_gt_bt") && dims_adequate(d_) &&
                              rep_.identities.at("thm61cond").status == IdentityStatus::holds;
  }

  CaseReport& rep_;
  const HomMatrix& m_;
  const Flag& f_;
  const CaseOptions& opt_;
  const DegreeData& d_;
  std::map<int, SyzygyBlock> syz_;
  std::map<int, GradedModuleView> quot_;
  std::map<int, GradedModuleView> step_;
};

}  // namespace

CaseReport run_case(const DegreeData& d, const MatrixSpec& spec, const CaseOptions& opt)
{
  validate(d);
  if (opt.window_lo > opt.window_hi) throw std::invalid_argument("window: lower end exceeds upper end");
  CaseReport rep;
  rep.data = d;
  rep.spec = spec;
  rep.prime = opt.prime;
  rep.window_lo = opt.window_lo;
  rep.window_hi = opt.window_hi;
  rep.predicates = check_conditions(d);
  rep.predicted = predict_dim(d);
  fill_invariants(rep);

  const bool random = spec_is_random(spec);
  MatrixSpec draw = spec;
  const int tries = random ? std::max(1, opt.max_retries + 1) : 1;
  for (int attempt = 1; attempt <= tries; ++attempt) {
    HomMatrix m = make_matrix(d, draw, opt.prime);
    Flag f = build_flag(m, d.r);
    bool certified = true;
    if (random) {
      for (int k = std::max(f.first, d.c - 1); k <= d.c; ++k)
        if (!certify_expected_dimension(f.stage(k), m.ring()->nvars(),
                                        certificate_degree(f.stage_data(k)), draw.seed))
          certified = false;
      if (!certified && attempt < tries) {
        rep.notes.push_back("seed " + std::to_string(draw.seed) + " failed the dimension certificate; redrawn");
        ++draw.seed;
        continue;
      }
      if (!certified) rep.notes.push_back("no draw passed the dimension certificate; results use the last draw");
    }
    rep.seed = draw.seed;
    rep.attempts = attempt;
    rep.matrix = m.to_string();
    CaseRunner(rep, m, f, opt).run();
    break;
  }
  return rep;
}

nlohmann::json to_json(const IdentityRecord& r)
{
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["formula"] = r.formula;
  if (r.status == IdentityStatus::skipped) {
    j["reason"] = r.reason;
  } else {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["delta"] = r.delta();
    j["inputs"] = r.inputs;
  }
  return j;
}

nlohmann::json to_json(const CaseReport& r)
{
  nlohmann::json j;
  auto& in = j["inputs"];
  in["t"] = r.data.t;
  in["c"] = r.data.c;
  in["r"] = r.data.r;
  in["n"] = r.data.n;
  in["a"] = r.data.a;
  in["b"] = r.data.b;
  in["matrix_kind"] = to_string(r.spec.kind);
  if (r.spec.kind == MatrixSpec::Kind::explicit_entries) in["entries"] = r.spec.entries;
  in["prime"] = r.prime;
  in["seed"] = r.seed;
  in["attempts"] = r.attempts;
  in["matrix"] = r.matrix;
  j["predicates"] = r.predicates;
  auto& p = j["predicted"];
  p["value"] = r.predicted.value;
  p["status"] = to_string(r.predicted.status);
  p["source"] = r.predicted.source;
  p["corrections"] = r.predicted.corrections;
  p["notes"] = r.predicted.notes;
  j["invariants"] = r.invariants;
  j["window"] = {r.window_lo, r.window_hi};
  j["windows"] = r.windows;
  j["computed"] = r.computed;
  auto& ids = j["identities"];
  ids = nlohmann::json::object();
  for (const auto& [name, id] : r.identities) ids[name] = to_json(id);
  j["prediction"] = to_json(r.prediction);
  j["prediction"]["binding"] = r.prediction_binding;
  j["notes"] = r.notes;
  j["verdict"] = r.verdict();
  return j;
}

std::string render_table(const CaseReport& r)
{
  std::ostringstream os;
  const auto& d = r.data;
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  os << "case t=" << d.t << " c=" << d.c << " r=" << d.r << " n=" << d.n << " a=(" << list(d.a) << ") b=("
     << list(d.b) << ") matrix=" << to_string(r.spec.kind) << " p=" << r.prime << " seed=" << r.seed << "\n";
  os << "predicted " << r.predicted.value << " [" << to_string(r.predicted.status) << "; " << r.predicted.source
     << "]\n";
  if (!r.windows.empty()) {
    os << "degree window " << r.window_lo << ".." << r.window_hi << "\n";
    for (const auto& [name, seq] : r.windows) {
      os << "  " << name << std::string(name.size() < 14 ? 14 - name.size() : 1, ' ') << "(";
      for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? ", " : "") << seq[i];
      os << ")\n";
    }
  }
  for (const auto& [name, v] : r.computed)
    if (!r.windows.count(name)) os << "  " << name << " = " << v << "\n";
  for (const auto& [name, id] : r.identities) {
    os << "  " << name << ": " << to_string(id.status);
    if (id.status == IdentityStatus::skipped)
      os << " (" << id.reason << ")";
    else
      os << " (" << id.lhs << " vs " << id.rhs << "; " << id.formula << ")";
    os << "\n";
  }
  os << "  prediction: " << to_string(r.prediction.status);
  if (r.prediction.status == IdentityStatus::skipped)
    os << " (" << r.prediction.reason << ")";
  else
    os << " (" << r.prediction.lhs << " vs " << r.prediction.rhs << (r.prediction_binding ? ", binding" : "") << ")";
  os << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "verdict " << r.verdict() << "\n";
  return os.str();
}

namespace {

DegreeData data(int t, int c, int r, int n, std::vector<int> a)
{
  DegreeData d;
  d.t = t;
  d.c = c;
  d.r = r;
  d.n = n;
  d.a = std::move(a);
  d.b.assign(t, 0);
  return d;
}

MatrixSpec kind(MatrixSpec::Kind k, std::vector<std::string> entries = {}, std::uint64_t seed = 1)
{
  MatrixSpec s;
  s.kind = k;
  s.entries = std::move(entries);
  s.seed = seed;
  return s;
}

CaseOptions only_first_ideal(int steps, bool exgen)
{
  CaseOptions o;
  o.flag_quantities = false;
  o.ext1 = false;
  o.a3r_steps = steps;
  o.exgenassump = exgen;
  return o;
}

CaseOptions only_ext1()
{
  CaseOptions o;
  o.flag_quantities = false;
  return o;
}

std::vector<CatalogEntry> build_catalog()
{
  using K = MatrixSpec::Kind;
  const auto H = IdentityStatus::holds;
  const auto X = IdentityStatus::fails;
  std::vector<CatalogEntry> c;

  c.push_back({"ex1dimW-n15", "4x4 power matrix, linear except a quadric last column, 3-minors in P^15",
               data(4, 1, 2, 15, {1, 1, 1, 2}), kind(K::power), {},
               {{"tangent", {0, 4, 73, 663}}, {"nB", {0, 0, 12, 168}}, {"fib2", {0, 4, 61, 495}}, {"fib1", {0, 0, 0, 0}}},
               {},
               {{"thm61cond", H}}});
  c.push_back({"gendet-3x3-n8", "generic linear 3x3 over the 3x2 flag, 2-minors in P^8", data(3, 1, 2, 8, {1, 1, 1}),
               kind(K::generic), {},
               {{"tangent", {0, 0, 9, 64}}, {"nB", {0, 0, 6, 42}}, {"fib1", {0, 0, 0, 2}}},
               {{"fib2", 24}, {"homIB_A", 48}, {"lambda_c", 64}},
               {{"thm61cond", H}, {"thm61cond1", X}, {"codgen", H}}});
  c.push_back({"gendet-3x4-n11", "generic linear 3x4 over the generic 3x3, 2-minors in P^11",
               data(3, 2, 2, 11, {1, 1, 1, 1}), kind(K::generic), {},
               {{"tangent", {0, 0, 12, 120}}, {"fib1", {0, 0, 0, 3}}},
               {{"lambda_c", 120}},
               {{"codgen", H}}});
  c.push_back({"gendet-3x5-n14", "generic linear 3x5 over the generic 3x4, 2-minors in P^14",
               data(3, 3, 2, 14, {1, 1, 1, 1, 1}), kind(K::generic), {},
               {},
               {{"fib1", 4}, {"lambda_c", 192}},
               {{"codgen", H}}});
  c.push_back({"dimW2-n8", "3x3 power matrix with quadric last column, 2-minors in P^8", data(3, 1, 2, 8, {1, 1, 2}),
               kind(K::power), {},
               {{"tangent", {0, 3, 31, 152}}, {"nB", {0, 0, 6, 42}}, {"fib2", {0, 3, 25, 110}}, {"fib1", {0, 0, 0, 0}}},
               {{"kappa_1", 6}},
               {{"thm61cond", H}}});
  c.push_back({"dimW2-n6", "3x3 with quadric last column and random entries, 2-minors in P^6",
               data(3, 1, 2, 6, {1, 1, 2}),
               kind(K::explicit_entries, {"x0", "x1", "x2^2", "x3", "x4", "x5^2", "x6", "rand", "rand"}), {},
               {{"tangent", {0, 3, 25, 94}}, {"nB", {0, 0, 6, 30}}, {"fib2", {0, 3, 19, 63}}, {"fib1", {0, 0, 0, 0}}},
               {},
               {{"thm61cond", X}}});
  c.push_back({"linear-3x5-n9", "linear 3x5 with random columns, 2-minors in P^9", data(3, 3, 2, 9, {1, 1, 1, 1, 1}),
               kind(K::explicit_entries, {"x0", "x1", "x2", "x3", "rand", "x4", "x5", "x6", "rand", "rand", "x7", "x8",
                                          "x9", "rand", "rand"}),
               {},
               {{"tangent", {0, 0, 15, 120}}, {"nB", {0, 0, 12, 96}}, {"fib2", {0, 0, 3, 25}}, {"fib1", {0, 0, 0, 4}}},
               {},
               {{"thm61cond", X}}});
  {
    CaseOptions o;
    o.kappa = true;
    c.push_back({"dimW3-n11", "4x3 power matrix with quadric last column, 2-minors in P^11",
                 data(4, 0, 3, 11, {1, 1, 2}), kind(K::power), o,
                 {},
                 {{"tangent", 344}, {"kapp", 4}},
                 {}});
  }
  c.push_back({"gendet-3x8-n23", "generic linear 3x8 flag from the generic 3x3, 2-minors in P^23",
               data(3, 6, 2, 23, std::vector<int>(8, 1)), kind(K::generic), only_first_ideal(1, true),
               {{"homG_stage5", {0, 0, 9, 187}}, {"homG_I5", {0, 0, 0, 3}}, {"homG_stage6", {0, 0, 9, 184}}},
               {},
               {{"exgenassump", H}, {"a3r", H}}});
  c.push_back({"linear-3x6-n12", "linear 3x6 flag with random columns, 2-minors in P^12",
               data(3, 4, 2, 12, std::vector<int>(6, 1)),
               kind(K::explicit_entries, {"x0", "x1", "x2", "x3", "x12", "rand", "x4", "x5", "x6", "x7", "rand", "rand",
                                          "x8", "x9", "x10", "x11", "rand", "rand"},
                    2),
               only_first_ideal(2, false),
               {{"homG_stage3", {0, 0, 9, 94}},
                {"homG_stage2", {0, 0, 9, 97}},
                {"homG_I2", {0, 0, 0, 3}},
                {"homG_stage4", {0, 0, 9, 91}},
                {"homG_I3", {0, 0, 0, 3}}},
               {},
               {{"a3r", H}, {"a3r_stage2", H}}});
  c.push_back({"ext1-generic-4x4", "generic linear 4x4, maximal minors in P^15", data(4, 1, 1, 15, {1, 1, 1, 1}),
               kind(K::generic), only_ext1(), {}, {{"ext1", 225}}, {{"ext1_cross_check", H}}});
  c.push_back({"ext1-power-1122", "4x4 power matrix with column degrees 1,1,2,2 in P^15",
               data(4, 1, 1, 15, {1, 1, 2, 2}), kind(K::power), only_ext1(), {}, {{"ext1", 1129}},
               {{"ext1_cross_check", H}}});
  c.push_back({"ext1-power-1222", "4x4 power matrix with column degrees 1,2,2,2 in P^15",
               data(4, 1, 1, 15, {1, 2, 2, 2}), kind(K::power), only_ext1(), {}, {{"ext1", 1623}},
               {{"ext1_cross_check", H}}});
  c.push_back({"linear-3x3-n5", "random linear 3x3, 2-minors in P^5 (dim A = 2)", data(3, 1, 2, 5, {1, 1, 1}),
               kind(K::random), {}, {}, {{"fib1", 3}, {"tangent", 36}, {"lambda_c", 37}},
               {{"thm61cond", H}, {"codgen", X}, {"propo8_recursion", X}}});
  c.push_back({"linear-3x3-n6", "random linear 3x3, 2-minors in P^6", data(3, 1, 2, 6, {1, 1, 1}), kind(K::random), {},
               {}, {{"fib1", 2}, {"tangent", 46}, {"lambda_c", 46}}, {}});
  c.push_back({"linear-3x3-n7", "random linear 3x3, 2-minors in P^7", data(3, 1, 2, 7, {1, 1, 1}), kind(K::random), {},
               {}, {{"fib1", 2}, {"tangent", 55}, {"lambda_c", 55}}, {}});
  c.push_back({"linear-4x4-n6", "random linear 4x4, 3-minors in P^6", data(4, 1, 2, 6, {1, 1, 1, 1}), kind(K::random),
               {}, {}, {{"fib1", 3}, {"nB", 60}, {"tangent", 88}, {"fib2", 24}}, {{"thm61cond", X}}});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog()
{
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
  for (const auto& e : catalog())
    if (e.name == name) return e;
  std::string names;
  for (const auto& e : catalog()) names += (names.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown catalog entry '" + name + "'; available: " + names);
}

CatalogResult verify_entry(const CatalogEntry& e, std::optional<std::uint32_t> prime)
{
  CaseOptions opt = e.options;
  if (prime) opt.prime = *prime;
  CatalogResult res;
  res.name = e.name;
  res.report = run_case(e.data, e.spec, opt);
  const CaseReport& r = res.report;
  auto seq_text = [](const std::vector<long long>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
    return out + ")";
  };
  for (const auto& [name, want] : e.expected_windows) {
    auto it = r.windows.find(name);
    if (it == r.windows.end()) {
      res.mismatches.push_back(name + ": not computed");
      continue;
    }
    // Expected sequences start at degree -3.
    std::vector<long long> got;
    for (std::size_t i = 0; i < want.size(); ++i) {
      auto v = r.window_value(name, -3 + static_cast<int>(i));
      if (!v) break;
      got.push_back(*v);
    }
    if (got != want) res.mismatches.push_back(name + ": expected " + seq_text(want) + ", got " + seq_text(got));
  }
  for (const auto& [name, want] : e.expected_values) {
    std::optional<long long> got;
    if (auto it = r.computed.find(name); it != r.computed.end()) got = it->second;
    else if (auto jt = r.invariants.find(name); jt != r.invariants.end()) got = jt->second;
    if (!got)
      res.mismatches.push_back(name + ": not computed");
    else if (*got != want)
      res.mismatches.push_back(name + ": expected " + std::to_string(want) + ", got " + std::to_string(*got));
  }
  for (const auto& [name, want] : e.expected_identities) {
    auto it = r.identities.find(name);
    IdentityStatus got = it == r.identities.end() ? IdentityStatus::skipped : it->second.status;
    if (got != want) res.mismatches.push_back(name + ": expected " + to_string(want) + ", got " + to_string(got));
  }
  return res;
}

std::vector<CatalogResult> verify_catalog(const std::string& name, std::optional<std::uint32_t> prime, int jobs)
{
  std::vector<const CatalogEntry*> todo;
  if (name == "all")
    for (const auto& e : catalog()) todo.push_back(&e);
  else
    todo.push_back(&catalog_entry(name));
  std::vector<CatalogResult> out;
  if (jobs <= 1) {
    for (const auto* e : todo) out.push_back(verify_entry(*e, prime));
    return out;
  }
  std::vector<std::future<CatalogResult>> pending;
  std::size_t next = 0;
  for (; next < todo.size() && static_cast<int>(pending.size()) < jobs; ++next)
    pending.push_back(std::async(std::launch::async, verify_entry, std::cref(*todo[next]), prime));
  for (std::size_t i = 0; i < todo.size(); ++i) {
    out.push_back(pending[i].get());
    if (next < todo.size()) {
      pending.push_back(std::async(std::launch::async, verify_entry, std::cref(*todo[next]), prime));
      ++next;
    }
  }
  return out;
}

nlohmann::json to_json(const CatalogResult& r)
{
  nlohmann::json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  j["mismatches"] = r.mismatches;
  j["report"] = to_json(r.report);
  return j;
}

}  // namespace detloci
