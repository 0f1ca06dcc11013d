#include "detloci/detschemes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "detloci/gradedhom.hpp"

namespace detloci {

MDeg operator+(const MDeg& x, const MDeg& y)
{
  MDeg z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

MDeg operator-(const MDeg& x, const MDeg& y)
{
  MDeg z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

Ring::Ring(int nvars, std::uint32_t p, std::vector<MDeg> var_degree)
    : nvars_(nvars), F_(p), var_degree_(std::move(var_degree))
{
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("ring needs between 1 and 32 variables");
  if (static_cast<int>(var_degree_.size()) != nvars) throw std::invalid_argument("one multidegree per variable expected");
  for (const auto& v : var_degree_)
    if (v.empty() || v[0] != 1 || v.size() != var_degree_[0].size())
      throw std::invalid_argument("variables must have standard degree 1 and equal multidegree width");
}

std::shared_ptr<const Ring> Ring::standard(int nvars, std::uint32_t p)
{
  return std::make_shared<const Ring>(nvars, p, std::vector<MDeg>(nvars, MDeg{1}));
}

MDeg Ring::degree(const Monomial& m) const
{
  MDeg out(width(), 0);
  for (int v = 0; v < nvars_; ++v)
    if (m.e[v])
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += m.e[v] * var_degree_[v][k];
  return out;
}

MDeg Ring::degree(const MultiPoly& f) const
{
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no multidegree");
  return degree(f.terms().front().m);
}

bool Ring::is_homogeneous(const MultiPoly& f) const
{
  if (f.is_zero()) return true;
  MDeg d = degree(f);
  for (const auto& t : f.terms())
    if (degree(t.m) != d) return false;
  return true;
}

void Ring::fill_degree(int d) const
{
  if (cache_.count(d)) return;
  auto& level = cache_[d];
  for (const auto& m : monomials(nvars_ - 1, d)) {
    auto& b = level[degree(m)];
    b.index.emplace(m, static_cast<std::uint32_t>(b.mons.size()));
    b.mons.push_back(m);
  }
}

const Bucket& Ring::bucket(const MDeg& m) const
{
  if (m.empty() || m[0] < 0) return empty_;
  std::lock_guard<std::mutex> lock(mu_);
  fill_degree(m[0]);
  const auto& level = cache_.at(m[0]);
  auto it = level.find(m);
  return it == level.end() ? empty_ : it->second;
}

std::vector<MDeg> Ring::keys(int d) const
{
  if (d < 0) return {};
  std::lock_guard<std::mutex> lock(mu_);
  fill_degree(d);
  std::vector<MDeg> out;
  for (const auto& [k, b] : cache_.at(d)) out.push_back(k);
  return out;
}

void Ideal::add(const MultiPoly& g)
{
  if (g.is_zero()) return;
  if (!ring->is_homogeneous(g)) throw std::invalid_argument("ideal generators must be multihomogeneous");
  gens.push_back(g);
  degs.push_back(ring->degree(g));
}

std::string to_string(MatrixSpec::Kind k)
{
  switch (k) {
  case MatrixSpec::Kind::generic: return "generic";
  case MatrixSpec::Kind::random: return "random";
  case MatrixSpec::Kind::power: return "power";
  case MatrixSpec::Kind::explicit_entries: return "explicit";
  }
  return "unknown";
}

MatrixSpec::Kind parse_matrix_kind(const std::string& s)
{
  if (s == "generic") return MatrixSpec::Kind::generic;
  if (s == "random") return MatrixSpec::Kind::random;
  if (s == "power") return MatrixSpec::Kind::power;
  if (s == "explicit") return MatrixSpec::Kind::explicit_entries;
  throw std::invalid_argument("matrix: unknown kind '" + s + "' (expected generic, random, power or explicit)");
}

HomMatrix::HomMatrix(DegreeData d, RingPtr ring, std::vector<std::vector<MultiPoly>> entries)
    : d_(std::move(d)), ring_(std::move(ring)), entries_(std::move(entries))
{
  if (static_cast<int>(entries_.size()) != d_.t) throw std::invalid_argument("matrix must have t rows");
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != d_.cols()) throw std::invalid_argument("matrix must have t+c-1 columns");
  const std::size_t w = ring_->width();
  // In the fine grading the row and column blocks start at 1 and 1+t.
  int L = 1;
  if (w > 1) {
    for (int i = 0; i < d_.t; ++i)
      for (int j = 0; j < d_.cols(); ++j)
        if (!entries_[i][j].is_zero()) {
          MDeg e = ring_->degree(entries_[i][j]);
          L = e[1 + i];
          break;
        }
  }
  for (int i = 0; i < d_.t; ++i) {
    MDeg r(w, 0);
    r[0] = d_.B(i + 1);
    if (w > 1) r[1 + i] = -L;
    row_deg_.push_back(r);
  }
  for (int j = 0; j < d_.cols(); ++j) {
    MDeg c(w, 0);
    c[0] = d_.A(j + 1);
    if (w > 1) c[1 + d_.t + j] = L;
    col_deg_.push_back(c);
  }
  for (int i = 0; i < d_.t; ++i)
    for (int j = 0; j < d_.cols(); ++j) {
      const auto& f = entries_[i][j];
      if (f.is_zero()) continue;
      if (!ring_->is_homogeneous(f) || ring_->degree(f) != col_deg_[j] - row_deg_[i])
        throw std::invalid_argument("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") does not have degree a_j - b_i");
    }
}

std::string HomMatrix::to_string() const
{
  std::ostringstream os;
  for (int i = 0; i < rows(); ++i) {
    os << (i ? "\n" : "") << "[";
    for (int j = 0; j < cols(); ++j) os << (j ? ", " : "") << entries_[i][j].to_string();
    os << "]";
  }
  return os.str();
}

// Fine grading by row and column content when every nonzero entry is a
// scalar times a power of its own variable; nullptr otherwise.
static RingPtr fine_ring(const DegreeData& d, const std::vector<std::vector<MultiPoly>>& e, int nvars, std::uint32_t p)
{
  std::vector<int> owner(nvars, -1);
  int L = 1;
  for (int i = 0; i < d.t; ++i)
    for (int j = 0; j < d.cols(); ++j) {
      const auto& f = e[i][j];
      if (f.is_zero()) continue;
      if (f.size() != 1) return nullptr;
      const auto& m = f.terms().front().m;
      int var = -1;
      for (int v = 0; v < nvars; ++v)
        if (m.e[v]) {
          if (var >= 0) return nullptr;
          var = v;
        }
      if (var < 0 || owner[var] >= 0) return nullptr;
      owner[var] = i * d.cols() + j;
      L = std::lcm(L, static_cast<int>(m.e[var]));
    }
  const std::size_t w = 1 + d.t + d.cols();
  std::vector<MDeg> deg(nvars, MDeg(w, 0));
  for (int v = 0; v < nvars; ++v) {
    deg[v][0] = 1;
    if (owner[v] < 0) continue;
    int i = owner[v] / d.cols(), j = owner[v] % d.cols();
    int ex = e[i][j].terms().front().m.e[v];
    deg[v][1 + i] = L / ex;
    deg[v][1 + d.t + j] = L / ex;
  }
  return std::make_shared<const Ring>(nvars, p, std::move(deg));
}

static HomMatrix finish(const DegreeData& d, std::vector<std::vector<MultiPoly>> e, int nvars, std::uint32_t p)
{
  RingPtr ring = fine_ring(d, e, nvars, p);
  if (!ring) ring = Ring::standard(nvars, p);
  return HomMatrix(d, ring, std::move(e));
}

HomMatrix generic_matrix(const DegreeData& d, std::uint32_t p)
{
  validate(d);
  for (int i = 1; i <= d.t; ++i)
    for (int j = 1; j <= d.cols(); ++j)
      if (d.A(j) - d.B(i) != 1) throw std::invalid_argument("generic matrix needs every a_j - b_i = 1");
  if (d.n + 1 < d.t * d.cols()) throw std::invalid_argument("generic matrix needs n+1 >= t(t+c-1) variables");
  PrimeField F(p);
  std::vector<std::vector<MultiPoly>> e(d.t, std::vector<MultiPoly>(d.cols()));
  for (int i = 0; i < d.t; ++i)
    for (int j = 0; j < d.cols(); ++j) e[i][j] = MultiPoly::variable(d.n + 1, F, i * d.cols() + j);
  return finish(d, std::move(e), d.n + 1, p);
}

HomMatrix random_matrix(const DegreeData& d, std::uint64_t seed, std::uint32_t p)
{
  validate(d);
  PrimeField F(p);
  std::vector<std::vector<MultiPoly>> e(d.t, std::vector<MultiPoly>(d.cols()));
  for (int i = 0; i < d.t; ++i)
    for (int j = 0; j < d.cols(); ++j) {
      int deg = d.A(j + 1) - d.B(i + 1);
      if (deg < 0) {
        e[i][j] = MultiPoly(d.n + 1, p);
        continue;
      }
      e[i][j] = random_homogeneous(deg, d.n, counter_random(seed, 0x9e37 + i, j), F);
    }
  return finish(d, std::move(e), d.n + 1, p);
}

HomMatrix power_matrix(const DegreeData& d, std::uint32_t p)
{
  validate(d);
  if (d.n + 1 < d.t * d.cols()) throw std::invalid_argument("power matrix needs n+1 >= t(t+c-1) variables");
  PrimeField F(p);
  std::vector<std::vector<MultiPoly>> e(d.t, std::vector<MultiPoly>(d.cols()));
  for (int i = 0; i < d.t; ++i)
    for (int j = 0; j < d.cols(); ++j) {
      int deg = d.A(j + 1) - d.B(i + 1);
      if (deg < 0)
        e[i][j] = MultiPoly(d.n + 1, p);
      else if (deg == 0)
        e[i][j] = MultiPoly::constant(d.n + 1, F, 1);
      else
        e[i][j] = MultiPoly::variable(d.n + 1, F, i * d.cols() + j, deg);
    }
  return finish(d, std::move(e), d.n + 1, p);
}

namespace {

struct EntryParser {
  const std::string& s;
  std::size_t pos = 0;
  int nvars;
  const PrimeField& F;

  [[noreturn]] void fail(const std::string& what) const
  {
    throw std::invalid_argument("entry '" + s + "': " + what + " at position " + std::to_string(pos));
  }
  void skip()
  {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char ch)
  {
    skip();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  long long number()
  {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoll(s.substr(start, pos - start));
  }
  MultiPoly factor()
  {
    skip();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) return MultiPoly::constant(nvars, F, number());
    if (!eat('x')) fail("expected x<index> or a number");
    long long v = number();
    if (v < 0 || v >= nvars) fail("variable index out of range");
    long long e = 1;
    if (eat('^')) e = number();
    if (e < 0 || e > 60) fail("exponent out of range");
    return MultiPoly::variable(nvars, F, static_cast<int>(v), static_cast<int>(e));
  }
  MultiPoly term()
  {
    MultiPoly t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }
  MultiPoly parse()
  {
    bool neg = eat('-');
    MultiPoly p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    skip();
    if (pos != s.size()) fail("unexpected character");
    return p;
  }
};

}  // namespace

MultiPoly parse_entry(const std::string& s, int nvars, const PrimeField& F)
{
  EntryParser ps{s, 0, nvars, F};
  return ps.parse();
}

HomMatrix explicit_matrix(const DegreeData& d, const std::vector<std::string>& entries, std::uint32_t p,
                          std::uint64_t seed)
{
  validate(d);
  if (static_cast<int>(entries.size()) != d.t * d.cols())
    throw std::invalid_argument("entries: expected " + std::to_string(d.t * d.cols()) + " tokens, got " +
                                std::to_string(entries.size()));
  PrimeField F(p);
  std::vector<std::vector<MultiPoly>> e(d.t, std::vector<MultiPoly>(d.cols()));
  for (int i = 0; i < d.t; ++i)
    for (int j = 0; j < d.cols(); ++j) {
      const std::string& tok = entries[i * d.cols() + j];
      int deg = d.A(j + 1) - d.B(i + 1);
      if (tok == "rand") {
        if (deg < 0) throw std::invalid_argument("entries: 'rand' needs a nonnegative entry degree");
        e[i][j] = random_homogeneous(deg, d.n, counter_random(seed, 0x9e37 + i, j), F);
      } else {
        e[i][j] = parse_entry(tok, d.n + 1, F);
        if (!e[i][j].is_zero() && (!e[i][j].is_homogeneous() || e[i][j].degree() != deg))
          throw std::invalid_argument("entries: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") must be homogeneous of degree " + std::to_string(deg));
      }
    }
  return finish(d, std::move(e), d.n + 1, p);
}

HomMatrix make_matrix(const DegreeData& d, const MatrixSpec& spec, std::uint32_t p)
{
  switch (spec.kind) {
  case MatrixSpec::Kind::generic: return generic_matrix(d, p);
  case MatrixSpec::Kind::random: return random_matrix(d, spec.seed, p);
  case MatrixSpec::Kind::power: return power_matrix(d, p);
  case MatrixSpec::Kind::explicit_entries: return explicit_matrix(d, spec.entries, p, spec.seed);
  }
  throw std::invalid_argument("unknown matrix kind");
}

HomMatrix delete_last_column(const HomMatrix& m)
{
  if (m.cols() <= 1) throw std::invalid_argument("cannot delete the only column");
  DegreeData d = drop_last_column(m.data());
  std::vector<std::vector<MultiPoly>> e(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j + 1 < m.cols(); ++j) e[i].push_back(m.at(i, j));
  return HomMatrix(d, m.ring(), std::move(e));
}

namespace {

// Laplace expansion along the rows of a fixed row set, memoised on the set of
// remaining columns.
class MinorEngine {
public:
  MinorEngine(const HomMatrix& m) : m_(m) {}

  MultiPoly det(const std::vector<int>& rows, const std::vector<int>& cols)
  {
    memo_.clear();
    rows_ = rows;
    unsigned mask = 0;
    for (int c : cols) mask |= 1u << c;
    return rec(0, mask);
  }

private:
  MultiPoly rec(std::size_t k, unsigned mask)
  {
    const auto& F = m_.ring()->field();
    if (k == rows_.size()) return MultiPoly::constant(m_.ring()->nvars(), F, 1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    MultiPoly acc(m_.ring()->nvars(), F.p());
    int pos = 0;
    for (int c = 0; c < m_.cols(); ++c) {
      if (!(mask & (1u << c))) continue;
      const MultiPoly& e = m_.at(rows_[k], c);
      if (!e.is_zero()) {
        MultiPoly sub = rec(k + 1, mask & ~(1u << c));
        if (!sub.is_zero()) {
          MultiPoly prod = e * sub;
          acc = (pos % 2 == 0) ? acc + prod : acc - prod;
        }
      }
      ++pos;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const HomMatrix& m_;
  std::vector<int> rows_;
  std::map<unsigned, MultiPoly> memo_;
};

void subsets(int n, int k, std::vector<std::vector<int>>& out)
{
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

MinorsIdeal minors(const HomMatrix& m, int s)
{
  if (s < 1 || s > m.rows() || s > m.cols()) throw std::invalid_argument("minor size out of range");
  MinorsIdeal out;
  out.s = s;
  out.num_cols = m.cols();
  out.ideal.ring = m.ring();
  int r = m.rows() + 1 - s;
  out.expected_codim = r * (m.cols() - m.rows() + r);
  std::vector<std::vector<int>> rs, cs;
  subsets(m.rows(), s, rs);
  subsets(m.cols(), s, cs);
  MinorEngine eng(m);
  // Column sets in the outer loop keep minors of the leading columns first.
  std::sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) {
    if (x.back() != y.back()) return x.back() < y.back();
    return x < y;
  });
  for (const auto& c : cs)
    for (const auto& rr : rs) {
      MultiPoly f = eng.det(rr, c);
      if (f.is_zero()) {
        ++out.zero_count;
        continue;
      }
      out.ideal.add(f);
      out.support.emplace_back(rr, c);
    }
  return out;
}

MinorsIdeal restrict_to_columns(const MinorsIdeal& I, int k, int expected_codim)
{
  MinorsIdeal out;
  out.s = I.s;
  out.num_cols = k;
  out.expected_codim = expected_codim;
  out.ideal.ring = I.ideal.ring;
  for (std::size_t g = 0; g < I.ideal.size(); ++g)
    if (I.support[g].second.back() < k) {
      out.ideal.gens.push_back(I.ideal.gens[g]);
      out.ideal.degs.push_back(I.ideal.degs[g]);
      out.support.push_back(I.support[g]);
    }
  return out;
}

Flag build_flag(const HomMatrix& m, int r)
{
  const DegreeData& d = m.data();
  if (r < 1 || r >= d.t) throw std::invalid_argument("r must satisfy 1 <= r < t");
  Flag f;
  f.r = r;
  f.first = 2 - r;
  if (d.c < f.first) throw std::invalid_argument("flag needs c >= 2-r");
  const int s = d.t + 1 - r;
  // Columns beyond the first s may be deleted and must not contain units.
  for (int j = s; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero() && m.at(i, j).degree() == 0)
        throw std::invalid_argument("flag: column " + std::to_string(j + 1) + " contains a unit (a_1 > b_t fails)");
  MinorsIdeal full = minors(m, s);
  for (int k = f.first; k <= d.c; ++k) {
    DegreeData dk = flag_stage(d, k);
    f.stages.push_back(restrict_to_columns(full, d.t + k - 1, r * (k + r - 1)));
    f.data.push_back(dk);
  }
  return f;
}

// Restricts I to a general linear subspace by substituting x_v = sum_w c_vw y_w.
static Ideal linear_section(const Ideal& I, int section, std::uint64_t seed)
{
  const Ring& R = *I.ring;
  const int m = R.nvars() - section;
  if (m < 1) throw std::invalid_argument("linear section removes every variable");
  RingPtr S = Ring::standard(m, R.field().p());
  const PrimeField& F = S->field();
  std::vector<MultiPoly> lin;
  for (int v = 0; v < R.nvars(); ++v) lin.push_back(random_homogeneous(1, m - 1, counter_random(seed, 0x5ec7, v), F));
  Ideal out;
  out.ring = S;
  for (const auto& g : I.gens) {
    MultiPoly acc(m, F.p());
    for (const auto& t : g.terms()) {
      MultiPoly prod = MultiPoly::constant(m, F, F.to_int(t.c));
      for (int v = 0; v < R.nvars(); ++v)
        for (int e = 0; e < t.m.e[v]; ++e) prod = prod * lin[v];
      acc = acc + prod;
    }
    out.add(acc);
  }
  return out;
}

DimensionEstimate dimension_estimate(const Ideal& I, int d0, int d1, int section, std::uint64_t seed)
{
  if (d0 < 0 || d1 < d0) throw std::invalid_argument("window must satisfy 0 <= d0 <= d1");
  Ideal J = section > 0 ? linear_section(I, section, seed) : I;
  DimensionEstimate out;
  out.section = section;
  for (int d = d0; d <= d1; ++d) out.values.push_back(hf_quotient(J, d));
  std::vector<long long> seq = out.values;
  bool all_zero = std::all_of(seq.begin(), seq.end(), [](long long x) { return x == 0; });
  if (all_zero) {
    out.fitted_degree = -1;
    out.dimension = section;
    return out;
  }
  for (int k = 0; seq.size() >= 2; ++k) {
    if (std::adjacent_find(seq.begin(), seq.end(), std::not_equal_to<>()) == seq.end()) {
      out.fitted_degree = k;
      out.dimension = k + 1 + section;
      return out;
    }
    std::vector<long long> next;
    for (std::size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
    seq = std::move(next);
  }
  throw std::invalid_argument("window too small to fit the Hilbert polynomial");
}

DimensionEstimate dimension_estimate(const MinorsIdeal& I, int d0, int d1, int section, std::uint64_t seed)
{
  return dimension_estimate(I.ideal, d0, d1, section, seed);
}

bool certify_expected_dimension(const MinorsIdeal& I, int nvars, int max_degree, std::uint64_t seed)
{
  int dim = nvars - I.expected_codim;
  if (dim < 0) return false;
  Ideal J = dim > 0 ? linear_section(I.ideal, dim, seed) : I.ideal;
  for (int d = 0; d <= max_degree; ++d)
    if (hf_quotient(J, d) == 0) return true;
  return false;
}

}  // namespace detloci
