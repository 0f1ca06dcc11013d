#include <algorithm>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detloci/cli.hpp"
#include "detloci/gradedhom.hpp"

using namespace detloci;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string case_file;
  std::optional<int> t, c, r, n;
  std::string a, b;
  std::string matrix;
  std::string entries;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> prime;
  std::string window;
  std::string checks;
  bool json = false;
  int jobs = 0;
};

void add_case_options(CLI::App* cmd, CommonArgs& args, bool with_checks)
{
  cmd->add_option("--case", args.case_file, "Case file (key = value lines, '---' between cases)");
  cmd->add_option("-t", args.t, "Rows of the degree matrix");
  cmd->add_option("-c", args.c, "Column excess: the matrix has t+c-1 columns");
  cmd->add_option("-r", args.r, "Minor size is t-r+1");
  cmd->add_option("-n", args.n, "Ambient projective dimension");
  cmd->add_option("-a", args.a, "Column degrees a_1..a_{t+c-1}, comma or space separated");
  cmd->add_option("-b", args.b, "Row degrees b_1..b_t (default zeros)");
  cmd->add_option("--matrix", args.matrix, "generic | random | power | explicit");
  cmd->add_option("--entries", args.entries, "Explicit entries, ',' between entries and ';' between rows");
  cmd->add_option("--seed", args.seed, "Seed for random entries");
  cmd->add_option("--prime", args.prime, "Coefficient field F_p");
  cmd->add_option("--window", args.window, "Degree window lo..hi");
  cmd->add_flag("--json", args.json, "Emit JSON");
  cmd->add_option("--jobs", args.jobs, "Parallel cases in batch mode (default: hardware threads)");
  if (with_checks)
    cmd->add_option("--checks", args.checks, "Comma list of flag, ext1, exgenassump, kappa, a3r[:k]");
}

bool inline_given(const CommonArgs& g)
{
  return g.t || g.c || g.r || g.n || !g.a.empty() || !g.b.empty() || !g.matrix.empty() || !g.entries.empty();
}

// Cases from --case or from the inline flags; command-line values override file values.
std::vector<CaseSpec> load_cases(const CommonArgs& g)
{
  std::vector<CaseSpec> cases;
  if (!g.case_file.empty()) {
    if (inline_given(g)) throw std::invalid_argument("--case cannot be combined with inline data flags");
    cases = parse_cases(read_file(g.case_file));
  } else {
    std::ostringstream os;
    if (!g.t || !g.c || !g.r || !g.n || g.a.empty())
      throw std::invalid_argument("need --case FILE or all of -t -c -r -n -a");
    os << "t = " << *g.t << "\nc = " << *g.c << "\nr = " << *g.r << "\nn = " << *g.n << "\na = " << g.a << "\n";
    if (!g.b.empty()) os << "b = " << g.b << "\n";
    if (!g.matrix.empty()) os << "matrix = " << g.matrix << "\n";
    if (!g.entries.empty()) os << "entries = " << g.entries << "\n";
    cases.push_back(parse_case(os.str()));
  }
  for (auto& cs : cases) {
    if (g.seed) cs.matrix.seed = *g.seed;
    if (g.prime) {
      if (*g.prime < 3 || *g.prime >= 65536 || !is_prime(*g.prime))
        throw std::invalid_argument("--prime: must be an odd prime below 65536");
      cs.options.prime = *g.prime;
    }
    if (!g.window.empty()) {
      auto [lo, hi] = parse_window(g.window);
      cs.options.window_lo = lo;
      cs.options.window_hi = hi;
      cs.window_set = true;
    }
    if (!g.checks.empty()) apply_checks(g.checks, cs.options);
    if (g.json) cs.json = true;
  }
  return cases;
}

int job_count(int requested)
{
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Outcome {
  std::string text;
  json j;
  bool ok = true;
};

// Runs fn over the cases with at most jobs in flight; results keep input order.
template <class Fn>
std::vector<Outcome> run_batch(const std::vector<CaseSpec>& cases, int jobs, Fn fn)
{
  std::vector<Outcome> out(cases.size());
  std::vector<std::future<Outcome>> pending(cases.size());
  std::size_t next = 0, done = 0;
  while (done < cases.size()) {
    while (next < cases.size() && next - done < static_cast<std::size_t>(jobs)) {
      pending[next] = std::async(std::launch::async, fn, std::cref(cases[next]));
      ++next;
    }
    out[done] = pending[done].get();
    ++done;
  }
  return out;
}

int emit(const std::vector<CaseSpec>& cases, const std::vector<Outcome>& outs)
{
  bool ok = true;
  bool as_json = std::any_of(cases.begin(), cases.end(), [](const CaseSpec& c) { return c.json; });
  if (as_json) {
    if (outs.size() == 1) {
      std::cout << outs[0].j.dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& o : outs) arr.push_back(o.j);
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (outs.size() > 1)
        std::cout << (i ? "\n" : "") << "== case " << i + 1 << (cases[i].name.empty() ? "" : ": " + cases[i].name)
                  << "\n";
      std::cout << outs[i].text;
    }
  }
  for (const auto& o : outs) ok = ok && o.ok;
  return ok ? 0 : 1;
}

std::string row(const std::vector<long long>& v)
{
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

json case_inputs(const CaseSpec& cs)
{
  json j;
  if (!cs.name.empty()) j["name"] = cs.name;
  j["t"] = cs.data.t;
  j["c"] = cs.data.c;
  j["r"] = cs.data.r;
  j["n"] = cs.data.n;
  j["a"] = cs.data.a;
  j["b"] = cs.data.b;
  return j;
}

Outcome do_invariants(const CaseSpec& cs)
{
  Outcome o;
  o.j = case_inputs(cs);
  o.j["invariants"] = invariants_json(cs.data);
  o.text = invariants_text(cs.data);
  return o;
}

Outcome do_predict(const CaseSpec& cs)
{
  Outcome o;
  DimPrediction p = predict_dim(cs.data);
  o.j = case_inputs(cs);
  o.j["predicted"] = prediction_json(p);
  o.text = prediction_text(p);
  return o;
}

Outcome do_check(const CaseSpec& cs)
{
  Outcome o;
  PredicateMap pm = check_conditions(cs.data);
  o.j = case_inputs(cs);
  o.j["predicates"] = pm;
  std::ostringstream os;
  for (const auto& [k, v] : pm) os << k << std::string(k.size() < 16 ? 16 - k.size() : 1, ' ') << (v ? "true" : "false") << "\n";
  o.text = os.str();
  return o;
}

Outcome do_compute(const std::string& quantity, int syz_bound, const CaseSpec& in)
{
  CaseSpec cs = in;
  if (!cs.window_set) {
    cs.options.window_lo = -3;
    cs.options.window_hi = 5;
  }
  Outcome o;
  o.j = case_inputs(cs);
  o.j["quantity"] = quantity;
  o.j["prime"] = cs.options.prime;
  std::ostringstream os;
  if (quantity == "hf" || quantity == "syz") {
    HomMatrix m = make_matrix(cs.data, cs.matrix, cs.options.prime);
    Flag f = build_flag(m, cs.data.r);
    const MinorsIdeal& IA = f.stage(cs.data.c);
    o.j["seed"] = cs.matrix.seed;
    if (quantity == "hf") {
      std::vector<long long> v;
      for (int d = cs.options.window_lo; d <= cs.options.window_hi; ++d) v.push_back(hf_quotient(IA.ideal, d));
      o.j["window"] = {cs.options.window_lo, cs.options.window_hi};
      o.j["values"] = v;
      os << "hilbertFunction(R/I_A) " << cs.options.window_lo << ".." << cs.options.window_hi << ": " << row(v) << "\n";
    } else {
      SyzygyBlock sb = syz_bound >= 0 ? syzygy_generators(IA, f.stage_data(cs.data.c), syz_bound)
                                      : syzygy_generators(IA, f.stage_data(cs.data.c));
      std::map<int, int> gens;
      for (const auto& g : sb.gens.degs) ++gens[g[0]];
      json gj = json::object(), sj = json::object();
      for (const auto& [d, k] : gens) gj[std::to_string(d)] = k;
      for (const auto& [d, k] : sb.degree_counts()) sj[std::to_string(d)] = k;
      o.j["generators"] = gj;
      o.j["syzygies"] = sj;
      o.j["bound"] = sb.bound;
      o.j["complete"] = sb.complete;
      os << "minimal generators by degree:";
      for (const auto& [d, k] : gens) os << " " << d << ":" << k;
      os << "\nminimal syzygies by degree:";
      for (const auto& [d, k] : sb.degree_counts()) os << " " << d << ":" << k;
      os << "\nbound " << sb.bound << (sb.complete ? " (complete)" : " (not certified complete)") << "\n";
    }
  } else if (quantity == "ext1") {
    HomMatrix m = make_matrix(cs.data, cs.matrix, cs.options.prime);
    Ext1Result e = ext1_MI_dim(m);
    o.j["seed"] = cs.matrix.seed;
    o.j["ext1"] = e.ext1;
    o.j["hom_MI_MI"] = e.hom_MI_MI;
    o.j["conditional"] = e.conditional;
    os << "ext1(MI, MI)_0 = " << e.ext1 << "\nhom(MI, MI)_0 = " << e.hom_MI_MI
       << (e.conditional ? "\nwarning: hom(MI, MI)_0 is not the scalars; the value is conditional\n" : "\n");
  } else {
    CaseOptions opt = cs.options;
    opt.flag_quantities = true;
    opt.ext1 = false;
    opt.exgenassump = false;
    opt.kappa = false;
    opt.a3r_steps = 0;
    CaseReport rep = run_case(cs.data, cs.matrix, opt);
    const std::string key = quantity == "hom" ? "tangent" : quantity;
    auto it = rep.windows.find(key);
    o.j["seed"] = rep.seed;
    o.j["window"] = {rep.window_lo, rep.window_hi};
    if (it == rep.windows.end()) {
      std::string why = "not computed";
      auto id = rep.identities.find("thm61cond");
      if (id != rep.identities.end() && !id->second.reason.empty()) why = id->second.reason;
      throw std::invalid_argument(quantity + ": " + why);
    }
    o.j["values"] = it->second;
    static const std::map<std::string, std::string> label = {
        {"hom", "hom(I_A, A)"}, {"fib1", "hom(I_B, I_{A/B})"}, {"fib2", "dim(MI (x) A)_{a_top + v}"}};
    os << label.at(quantity) << " " << rep.window_lo << ".." << rep.window_hi << ": " << row(it->second) << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome do_verify(const CaseSpec& cs)
{
  Outcome o;
  CaseReport rep = run_case(cs.data, cs.matrix, cs.options);
  o.j = to_json(rep);
  if (!cs.name.empty()) o.j["name"] = cs.name;
  o.text = render_table(rep);
  o.ok = rep.pass();
  return o;
}

std::string catalog_text(const CatalogResult& r)
{
  std::ostringstream os;
  os << r.name << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& m : r.mismatches) os << "  mismatch: " << m << "\n";
  return os.str();
}

int run_catalog(const std::string& name, const CommonArgs& g)
{
  std::optional<std::uint32_t> prime;
  if (g.prime) {
    if (*g.prime < 3 || *g.prime >= 65536 || !is_prime(*g.prime))
      throw std::invalid_argument("--prime: must be an odd prime below 65536");
    prime = *g.prime;
  }
  auto results = verify_catalog(name, prime, job_count(g.jobs));
  bool ok = std::all_of(results.begin(), results.end(), [](const CatalogResult& r) { return r.pass(); });
  if (g.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    std::cout << (results.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results.size() == 1) std::cout << render_table(results[i].report) << "\n";
      std::cout << catalog_text(results[i]);
    }
    if (results.size() > 1)
      std::cout << std::count_if(results.begin(), results.end(), [](const CatalogResult& r) { return r.pass(); })
                << "/" << results.size() << " catalog entries match\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Invariants, dimension predictions and exact verification for determinantal loci"};
  app.require_subcommand(1);

  CommonArgs inv_args, pred_args, check_args, comp_args, ver_args, cat_args;
  auto* inv = app.add_subcommand("invariants", "Closed-form invariants of the degree data");
  add_case_options(inv, inv_args, false);
  auto* pred = app.add_subcommand("predict", "Predicted dimension of the locus with its status");
  add_case_options(pred, pred_args, false);
  auto* chk = app.add_subcommand("check", "Numerical hypotheses on the degree data");
  add_case_options(chk, check_args, false);

  auto* comp = app.add_subcommand("compute", "One computed quantity over F_p");
  std::string quantity;
  int syz_bound = -1;
  comp->add_option("quantity", quantity, "hf | hom | fib1 | fib2 | ext1 | syz")
      ->required()
      ->check(CLI::IsMember({"hf", "hom", "fib1", "fib2", "ext1", "syz"}));
  comp->add_option("--bound", syz_bound, "Degree bound for syz (default mdr)");
  add_case_options(comp, comp_args, false);

  auto* ver = app.add_subcommand("verify", "Run the verifier on a case or on catalog entries");
  std::string catalog_name;
  ver->add_option("--catalog", catalog_name, "Catalog entry name or 'all'");
  add_case_options(ver, ver_args, true);

  auto* cat = app.add_subcommand("catalog", "List catalog entries");
  cat->add_flag("--json", cat_args.json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      auto cases = load_cases(inv_args);
      return emit(cases, run_batch(cases, job_count(inv_args.jobs), do_invariants));
    }
    if (*pred) {
      auto cases = load_cases(pred_args);
      return emit(cases, run_batch(cases, job_count(pred_args.jobs), do_predict));
    }
    if (*chk) {
      auto cases = load_cases(check_args);
      return emit(cases, run_batch(cases, job_count(check_args.jobs), do_check));
    }
    if (*comp) {
      auto cases = load_cases(comp_args);
      auto fn = [&](const CaseSpec& cs) { return do_compute(quantity, syz_bound, cs); };
      return emit(cases, run_batch(cases, job_count(comp_args.jobs), fn));
    }
    if (*ver) {
      if (!catalog_name.empty()) {
        if (!ver_args.case_file.empty() || inline_given(ver_args))
          throw std::invalid_argument("--catalog cannot be combined with case data");
        return run_catalog(catalog_name, ver_args);
      }
      auto cases = load_cases(ver_args);
      return emit(cases, run_batch(cases, job_count(ver_args.jobs), do_verify));
    }
    if (*cat) {
      if (cat_args.json) {
        json arr = json::array();
        for (const auto& e : catalog()) arr.push_back({{"name", e.name}, {"description", e.description}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& e : catalog())
          std::cout << e.name << std::string(e.name.size() < 18 ? 18 - e.name.size() : 1, ' ') << e.description << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
