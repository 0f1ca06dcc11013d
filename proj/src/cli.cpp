#include "detloci/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace detloci {

namespace {

std::string trim(const std::string& s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_integer(const std::string& s, const std::string& field)
{
  std::string v = trim(s);
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": '" + v + "' is not an integer");
  }
  if (used != v.size()) throw std::invalid_argument(field + ": '" + v + "' is not an integer");
  return x;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& s, const std::string& field)
{
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) out.push_back(static_cast<int>(parse_integer(tok, field)));
  return out;
}

std::pair<int, int> parse_window(const std::string& s)
{
  auto pos = s.find("..");
  if (pos == std::string::npos) throw std::invalid_argument("window: expected lo..hi, got '" + s + "'");
  int lo = static_cast<int>(parse_integer(s.substr(0, pos), "window"));
  int hi = static_cast<int>(parse_integer(s.substr(pos + 2), "window"));
  if (lo > hi) throw std::invalid_argument("window: lower end exceeds upper end");
  return {lo, hi};
}

void apply_checks(const std::string& s, CaseOptions& opt)
{
  opt.flag_quantities = false;
  opt.ext1 = false;
  opt.exgenassump = false;
  opt.kappa = false;
  opt.a3r_steps = 0;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::string tok;
  while (is >> tok) {
    if (tok == "flag")
      opt.flag_quantities = true;
    else if (tok == "ext1")
      opt.ext1 = true;
    else if (tok == "exgenassump")
      opt.exgenassump = true;
    else if (tok == "kappa")
      opt.kappa = true;
    else if (tok == "a3r")
      opt.a3r_steps = 1;
    else if (tok.rfind("a3r:", 0) == 0) {
      opt.a3r_steps = static_cast<int>(parse_integer(tok.substr(4), "checks"));
      if (opt.a3r_steps < 1) throw std::invalid_argument("checks: a3r needs at least one step");
    } else {
      throw std::invalid_argument("checks: unknown check '" + tok + "' (flag, ext1, exgenassump, kappa, a3r[:k])");
    }
  }
}

std::vector<std::string> split_entries(const std::string& s)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ';') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  for (const auto& e : out)
    if (e.empty()) throw std::invalid_argument("entries: empty entry");
  return out;
}

CaseSpec parse_case(const std::string& text)
{
  static const std::set<std::string> known = {"name",  "t",       "c",    "r",     "n",      "a",      "b",
                                              "matrix", "entries", "seed", "prime", "window", "checks", "format"};
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!known.count(key)) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key)) throw std::invalid_argument("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
    kv[key] = value;
  }
  for (const char* req : {"t", "c", "r", "n", "a"})
    if (!kv.count(req)) throw std::invalid_argument(std::string(req) + ": missing");

  CaseSpec cs;
  if (kv.count("name")) cs.name = kv["name"];
  DegreeData& d = cs.data;
  d.t = static_cast<int>(parse_integer(kv["t"], "t"));
  d.c = static_cast<int>(parse_integer(kv["c"], "c"));
  d.r = static_cast<int>(parse_integer(kv["r"], "r"));
  d.n = static_cast<int>(parse_integer(kv["n"], "n"));
  d.a = parse_int_list(kv["a"], "a");
  d.b = kv.count("b") ? parse_int_list(kv["b"], "b") : std::vector<int>(std::max(d.t, 0), 0);
  validate(d);

  if (kv.count("matrix")) cs.matrix.kind = parse_matrix_kind(kv["matrix"]);
  if (kv.count("entries")) {
    if (cs.matrix.kind != MatrixSpec::Kind::explicit_entries)
      throw std::invalid_argument("entries: only allowed with matrix = explicit");
    cs.matrix.entries = split_entries(kv["entries"]);
  } else if (cs.matrix.kind == MatrixSpec::Kind::explicit_entries) {
    throw std::invalid_argument("entries: missing for matrix = explicit");
  }
  if (kv.count("seed")) {
    long long s = parse_integer(kv["seed"], "seed");
    if (s < 0) throw std::invalid_argument("seed: must be nonnegative");
    cs.matrix.seed = static_cast<std::uint64_t>(s);
  }
  if (kv.count("prime")) {
    long long p = parse_integer(kv["prime"], "prime");
    if (p < 3 || p >= 65536 || !is_prime(static_cast<std::uint32_t>(p)))
      throw std::invalid_argument("prime: must be an odd prime below 65536");
    cs.options.prime = static_cast<std::uint32_t>(p);
  }
  if (kv.count("window")) {
    auto [lo, hi] = parse_window(kv["window"]);
    cs.options.window_lo = lo;
    cs.options.window_hi = hi;
    cs.window_set = true;
  }
  if (kv.count("checks")) apply_checks(kv["checks"], cs.options);
  if (kv.count("format")) {
    if (kv["format"] == "json")
      cs.json = true;
    else if (kv["format"] != "text")
      throw std::invalid_argument("format: expected text or json");
  }
  return cs;
}

std::vector<CaseSpec> parse_cases(const std::string& text)
{
  std::vector<CaseSpec> out;
  std::istringstream is(text);
  std::string line, block;
  int index = 1;
  auto flush = [&]() {
    bool blank = std::all_of(block.begin(), block.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (!blank) {
      try {
        out.push_back(parse_case(block));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("case " + std::to_string(index) + ": " + e.what());
      }
    }
    ++index;
    block.clear();
  };
  while (std::getline(is, line)) {
    if (trim(line) == "---")
      flush();
    else
      block += line + "\n";
  }
  flush();
  if (out.empty()) throw std::invalid_argument("no case found");
  return out;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json invariants_json(const DegreeData& d)
{
  validate(d);
  nlohmann::json j;
  j["lambda_c"] = lambda_c(d);
  j["s_r"] = s_r(d);
  nlohmann::json ell_j = nlohmann::json::object();
  for (int i = std::max(2 - d.r, 1 - d.t); i <= d.c; ++i) ell_j[std::to_string(i)] = ell(d, i);
  j["ell"] = ell_j;
  nlohmann::json hj = nlohmann::json::object(), kj = nlohmann::json::object(), kpj = nlohmann::json::object();
  for (int i = 3; i <= d.c; ++i) {
    hj[std::to_string(i)] = h(d, i);
    kj[std::to_string(i)] = K(d, i);
  }
  for (int i = 3; i <= d.r; ++i) kpj[std::to_string(i)] = K_prime(d, i);
  j["h"] = hj;
  j["K"] = kj;
  j["K_total"] = K_total(d);
  j["Kprime"] = kpj;
  j["Kprime_total"] = K_prime_total(d);
  try {
    j["mdg"] = mdg(d);
    j["mdr"] = mdr(d);
  } catch (const std::exception&) {
    j["mdg"] = nullptr;
    j["mdr"] = nullptr;
  }
  j["kappa_1"] = d.c == 1 && d.r == 2 ? nlohmann::json(kappa_1(d)) : nlohmann::json(nullptr);
  j["kappa_prime"] = kappa_prime_applicable(d) ? nlohmann::json(kappa_prime(d)) : nlohmann::json(nullptr);
  return j;
}

std::string invariants_text(const DegreeData& d)
{
  nlohmann::json j = invariants_json(d);
  std::ostringstream os;
  auto line = [&](const std::string& label, const nlohmann::json& v) {
    os << label << std::string(label.size() < 14 ? 14 - label.size() : 1, ' ') << v.dump() << "\n";
  };
  line("lambda_c", j["lambda_c"]);
  line("s_r", j["s_r"]);
  for (const auto& [i, v] : j["ell"].items()) line("ell_" + i, v);
  for (const auto& [i, v] : j["h"].items()) line("h_" + i, v);
  for (const auto& [i, v] : j["K"].items()) line("K_" + i, v);
  line("K_total", j["K_total"]);
  for (const auto& [i, v] : j["Kprime"].items()) line("K'_" + i, v);
  line("K'_total", j["Kprime_total"]);
  line("mdg", j["mdg"]);
  line("mdr", j["mdr"]);
  line("kappa_1", j["kappa_1"]);
  line("kappa'", j["kappa_prime"]);
  return os.str();
}

nlohmann::json prediction_json(const DimPrediction& p)
{
  nlohmann::json j;
  j["value"] = p.value;
  j["status"] = to_string(p.status);
  j["source"] = p.source;
  j["corrections"] = p.corrections;
  j["notes"] = p.notes;
  return j;
}

std::string prediction_text(const DimPrediction& p)
{
  std::ostringstream os;
  if (p.status == PredictionStatus::not_applicable)
    os << "dim W: no prediction";
  else
    os << "dim W = " << p.value;
  os << " [" << to_string(p.status) << "; " << p.source << "]\n";
  for (const auto& [k, v] : p.corrections) os << "  " << k << " = " << v << "\n";
  for (const auto& n : p.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace detloci
