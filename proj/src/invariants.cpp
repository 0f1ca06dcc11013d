#include "detloci/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace detloci {

int DegreeData::A(int j) const
{
  if (j < 1 || j > static_cast<int>(a.size())) throw std::out_of_range("a_" + std::to_string(j) + " is undefined");
  return a[j - 1];
}

int DegreeData::B(int i) const
{
  if (i < 1 || i > static_cast<int>(b.size())) throw std::out_of_range("b_" + std::to_string(i) + " is undefined");
  return b[i - 1];
}

std::string validation_error(const DegreeData& d)
{
  if (d.t < 2) return "t: must be at least 2";
  if (d.n < 1) return "n: must be at least 1";
  if (d.t + d.c - 1 < 1) return "c: the matrix must have at least one column";
  if (static_cast<int>(d.a.size()) != d.cols())
    return "a: expected " + std::to_string(d.cols()) + " entries, got " + std::to_string(d.a.size());
  if (static_cast<int>(d.b.size()) != d.t)
    return "b: expected " + std::to_string(d.t) + " entries, got " + std::to_string(d.b.size());
  if (!std::is_sorted(d.a.begin(), d.a.end())) return "a: must be nondecreasing";
  if (!std::is_sorted(d.b.begin(), d.b.end())) return "b: must be nondecreasing";
  int m = std::min(d.t, d.cols());
  bool strict = false;
  for (int i = 1; i <= m; ++i) {
    if (d.B(i) > d.A(i)) return "b: b_" + std::to_string(i) + " exceeds a_" + std::to_string(i);
    if (d.B(i) < d.A(i)) strict = true;
  }
  if (!strict) return "a: some a_i must exceed b_i";
  if (d.r < std::max(1, 2 - d.c) || d.r >= d.t)
    return "r: need max(1, 2-c) <= r < t";
  if (d.codim() <= 0 || d.codim() > d.n) return "n: expected codimension r(c+r-1) must lie in [1, n]";
  for (int v : d.a)
    if (v < -100 || v > 100) return "a: degrees must lie in [-100, 100]";
  for (int v : d.b)
    if (v < -100 || v > 100) return "b: degrees must lie in [-100, 100]";
  return "";
}

void validate(const DegreeData& d)
{
  auto e = validation_error(d);
  if (!e.empty()) throw std::invalid_argument(e);
}

DegreeData uniform_data(int t, int c, int r, int n, int deg)
{
  DegreeData d;
  d.t = t;
  d.c = c;
  d.r = r;
  d.n = n;
  d.a.assign(t + c - 1, deg);
  d.b.assign(t, 0);
  return d;
}

DegreeData drop_last_column(const DegreeData& d)
{
  DegreeData e = d;
  e.c = d.c - 1;
  if (!e.a.empty()) e.a.pop_back();
  return e;
}

DegreeData flag_stage(const DegreeData& d, int k)
{
  if (k > d.c || d.t + k - 1 < 1) throw std::out_of_range("flag stage out of range");
  DegreeData e = d;
  e.c = k;
  e.a.resize(d.t + k - 1);
  return e;
}

long long binom_trunc(long long m, long long k)
{
  if (k < 0) throw std::invalid_argument("binom_trunc: k must be nonnegative");
  if (m < k) return 0;
  if (k > m - k) k = m - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
    if (r > static_cast<__int128>(4e18)) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<long long>(r);
}

long long lambda_c(const DegreeData& d)
{
  long long s = 1;
  const int n = d.n;
  for (int ai : d.a)
    for (int bj : d.b) s += binom_trunc(ai - bj + n, n) + binom_trunc(bj - ai + n, n);
  for (int ai : d.a)
    for (int aj : d.a) s -= binom_trunc(ai - aj + n, n);
  for (int bi : d.b)
    for (int bj : d.b) s -= binom_trunc(bi - bj + n, n);
  return s;
}

static long long sum_b(const DegreeData& d)
{
  long long s = 0;
  for (int v : d.b) s += v;
  return s;
}

long long ell(const DegreeData& d, int i)
{
  int top = d.t + i - 1;
  if (top < 0 || top > d.cols()) throw std::out_of_range("l_" + std::to_string(i) + " needs a_1..a_" + std::to_string(top));
  long long s = 0;
  for (int j = 1; j <= top; ++j) s += d.A(j);
  return s - sum_b(d);
}

long long h(const DegreeData& d, int i)
{
  if (i < 3 || i > d.c) throw std::out_of_range("h is defined for 3 <= i <= c");
  return 2LL * d.A(d.t + i - 1) - ell(d, i) + d.n;
}

// Calls f(sum) for every k-element subset (strict) or k-multiset (weak) of vals.
static void for_each_choice_sum(const std::vector<long long>& vals, int k, bool multiset,
                                const std::function<void(long long)>& f)
{
  std::function<void(std::size_t, int, long long)> rec = [&](std::size_t start, int left, long long acc) {
    if (left == 0) {
      f(acc);
      return;
    }
    for (std::size_t i = start; i < vals.size(); ++i) rec(multiset ? i : i + 1, left - 1, acc + vals[i]);
  };
  rec(0, k, 0);
}

long long K(const DegreeData& d, int i)
{
  if (i < 3 || i > d.c) throw std::out_of_range("K_i is defined for 3 <= i <= c");
  long long hv = h(d, i);
  std::vector<long long> as(d.a.begin(), d.a.begin() + (d.t + i - 2));
  std::vector<long long> bs(d.b.begin(), d.b.end());
  long long total = 0;
  for (int p = 0; p <= i - 3; ++p) {
    int q = i - 3 - p;
    long long sign = ((i - 1 - p) % 2 == 0) ? 1 : -1;
    for_each_choice_sum(as, p, false, [&](long long sa) {
      for_each_choice_sum(bs, q, true, [&](long long sb) { total += sign * binom_trunc(hv + sa + sb, d.n); });
    });
  }
  return total;
}

long long K3_closed(const DegreeData& d)
{
  return binom_trunc(h(d, 3), d.n);
}

long long K4_closed(const DegreeData& d)
{
  long long h1 = h(d, 4);
  long long s = 0;
  for (int j = 1; j <= d.t + 2; ++j) s += binom_trunc(h1 + d.A(j), d.n);
  for (int i = 1; i <= d.t; ++i) s -= binom_trunc(h1 + d.B(i), d.n);
  return s;
}

long long K_total(const DegreeData& d)
{
  long long s = 0;
  for (int i = 3; i <= d.c; ++i) s += K(d, i);
  return s;
}

long long s_r(const DegreeData& d)
{
  if (d.r == 0) return ell(d, 2);
  long long s = 0;
  for (int i = 1; i <= d.t - d.r + 1; ++i) s += d.A(i);
  for (int i = 1; i <= d.t - d.r; ++i) s -= d.B(d.r + i);
  return s;
}

DegreeData transpose_data(const DegreeData& d)
{
  DegreeData e;
  e.t = d.t + d.c - 1;
  e.c = 2 - d.c;
  e.r = d.c + d.r - 1;
  e.n = d.n;
  e.a.resize(d.t);
  for (int i = 1; i <= d.t; ++i) e.a[i - 1] = -d.B(d.t + 1 - i);
  e.b.resize(d.t + d.c - 1);
  for (int j = 1; j <= d.t + d.c - 1; ++j) e.b[j - 1] = -d.A(d.t + d.c - j);
  return e;
}

long long ell_prime(const DegreeData& d, int i)
{
  if (i < 1 || i > d.r) throw std::out_of_range("l'_i is defined for 1 <= i <= r");
  long long s = 0;
  for (int j = 1; j <= d.t - d.r + 1; ++j) s += d.A(j);
  for (int k = d.r - i + 1; k <= d.t; ++k) s -= d.B(k);
  return s;
}

long long h_prime(const DegreeData& d, int i)
{
  if (i < 1 || i > d.r) throw std::out_of_range("h' is defined for 1 <= i <= r");
  return -2LL * d.B(d.r - i + 1) - ell_prime(d, i) + d.n;
}

long long K_prime(const DegreeData& d, int i)
{
  if (i < 3 || i > d.r) throw std::out_of_range("K'_i is defined for 3 <= i <= r");
  long long hv = h_prime(d, i);
  std::vector<long long> bs(d.b.begin() + (d.r - i + 1), d.b.end());
  std::vector<long long> as(d.a.begin(), d.a.begin() + (d.t - d.r + 1));
  long long total = 0;
  for (int x = 0; x <= i - 3; ++x) {
    int y = i - 3 - x;
    long long sign = ((i - 1 - x) % 2 == 0) ? 1 : -1;
    for_each_choice_sum(bs, x, false, [&](long long sb) {
      for_each_choice_sum(as, y, true, [&](long long sa) { total += sign * binom_trunc(hv - sb - sa, d.n); });
    });
  }
  return total;
}

long long K4_prime_closed(const DegreeData& d)
{
  long long h1 = h_prime(d, 4);
  long long s = 0;
  for (int j = d.r - 2; j <= d.t; ++j) s += binom_trunc(h1 - d.B(j), d.n);
  for (int i = 1; i <= d.t - d.r + 1; ++i) s -= binom_trunc(h1 - d.A(i), d.n);
  return s;
}

long long K_prime_total(const DegreeData& d)
{
  long long s = 0;
  for (int i = 3; i <= d.r; ++i) s += K_prime(d, i);
  return s;
}

long long mdg(const DegreeData& d)
{
  long long s = 0;
  for (int j = d.c + d.r - 1; j <= d.t + d.c - 1; ++j) s += d.A(j);
  for (int i = 1; i <= d.t + 1 - d.r; ++i) s -= d.B(i);
  return s;
}

long long mdr_submaximal_r2(const DegreeData& d)
{
  if (d.r != 2 || d.c < 1) throw std::domain_error("formula needs r = 2 and c >= 1");
  long long s = 0;
  for (int i = d.c; i <= d.t + d.c - 1; ++i) s += d.A(i);
  s -= sum_b(d);
  return s + std::max<long long>(d.A(d.t + d.c - 1) - d.A(d.c), d.B(d.t) - d.B(1));
}

long long mdr_submaximal_c3r(const DegreeData& d)
{
  if (d.r < 2 || d.c != 3 - d.r) throw std::domain_error("formula needs c = 3-r and r >= 2");
  long long s = 0;
  for (int i = 1; i <= d.t - d.r + 2; ++i) s += d.A(i) - d.B(i);
  return s + std::max<long long>(d.A(d.t - d.r + 2) - d.A(1), d.B(d.t - d.r + 2) - d.B(1));
}

long long mdr_maximal_c2r(const DegreeData& d)
{
  if (d.r < 2 || d.c != 2 - d.r) throw std::domain_error("formula needs c = 2-r and r >= 2");
  long long s = d.A(d.t - d.r + 1);
  for (int i = 1; i <= d.t - d.r + 1; ++i) s += d.A(i);
  for (int i = 1; i <= d.t - d.r + 2; ++i) s -= d.B(i);
  return s;
}

long long mdr(const DegreeData& d)
{
  if (d.r == 1) {
    // Maximal minors: the Eagon-Northcott complex; with c = 1 the ideal is
    // principal and has no syzygies, so the generator degree is returned.
    if (d.c == 1) return mdg(d);
    long long s = 0;
    for (int j = d.c - 1; j <= d.t + d.c - 1; ++j) s += d.A(j);
    return s - sum_b(d) - d.B(1);
  }
  if (d.c == 2 - d.r) return mdr_maximal_c2r(d);
  long long s = 0;
  for (int j = d.c + d.r - 2; j <= d.t + d.c - 1; ++j) s += d.A(j);
  for (int i = 1; i <= d.t + 2 - d.r; ++i) s -= d.B(i);
  return s + std::max<long long>(d.B(d.t + 2 - d.r) - d.B(1), d.A(d.t + d.c - 1) - d.A(d.c + d.r - 2));
}

long long kappa_1(const DegreeData& d)
{
  if (d.c != 1 || d.r != 2) throw std::domain_error("kappa_1 needs c = 1 and r = 2");
  const int t = d.t, n = d.n;
  long long s = 0;
  for (int i = 1; i <= t; ++i) s += d.A(i) - d.B(i);
  long long base = d.A(t) - s + n;
  long long k = 0;
  for (int j = 1; j <= t; ++j)
    for (int i = 1; i <= t; ++i)
      for (int kk = i; kk <= t; ++kk) k += binom_trunc(base - d.B(i) - d.B(kk) + d.A(j), n);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j)
      for (int kk = 1; kk <= t - 1; ++kk) k -= binom_trunc(base - d.B(i) - d.A(kk) + d.A(j), n);
  for (int i = 1; i <= t - 1; ++i)
    for (int kk = i + 1; kk <= t - 1; ++kk)
      for (int j = 1; j <= t; ++j) k += binom_trunc(base - d.A(i) - d.A(kk) + d.A(j), n);
  for (int i = 2; i <= t; ++i) k -= binom_trunc(base + d.B(i) - 2LL * d.B(1), n);
  return k;
}

long long hf_from_betti(const BettiTable& bt, int n, long long v)
{
  long long s = 0;
  for (std::size_t k = 0; k < bt.twists.size(); ++k) {
    long long part = 0;
    for (long long tw : bt.twists[k]) part += binom_trunc(v - tw + n, n);
    s += (k % 2 == 0) ? part : -part;
  }
  return s;
}

static std::vector<long long> choice_sums(const std::vector<long long>& vals, int k, bool multiset)
{
  std::vector<long long> out;
  for_each_choice_sum(vals, k, multiset, [&](long long s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

BettiTable en_betti(const DegreeData& d)
{
  if (d.c < 1) throw std::domain_error("Eagon-Northcott table needs c >= 1");
  std::vector<long long> as(d.a.begin(), d.a.end()), bs(d.b.begin(), d.b.end());
  long long sb = sum_b(d);
  BettiTable bt;
  bt.twists.push_back({0});
  for (int k = 1; k <= d.c; ++k) {
    std::vector<long long> row;
    for (long long x : choice_sums(as, d.t + k - 1, false))
      for (long long y : choice_sums(bs, k - 1, true)) row.push_back(x - y - sb);
    std::sort(row.begin(), row.end());
    bt.twists.push_back(std::move(row));
  }
  return bt;
}

BettiTable br_betti(const DegreeData& d)
{
  if (d.c < 2) throw std::domain_error("Buchsbaum-Rim table needs c >= 2");
  std::vector<long long> as(d.a.begin(), d.a.end()), bs(d.b.begin(), d.b.end());
  long long sb = sum_b(d);
  BettiTable bt;
  bt.twists.push_back(bs);
  bt.twists.push_back(as);
  for (int k = 2; k <= d.c; ++k) {
    std::vector<long long> row;
    for (long long x : choice_sums(as, d.t + k - 1, false))
      for (long long y : choice_sums(bs, k - 2, true)) row.push_back(x - y - sb);
    std::sort(row.begin(), row.end());
    bt.twists.push_back(std::move(row));
  }
  return bt;
}

BettiTable kapp_betti(const DegreeData& d, int i)
{
  if (d.r < 2 || i != 2 - d.r) throw std::domain_error("kapp table needs r >= 2 and i = 2-r");
  int g = d.t - d.r + 1;  // rank of G^*_{t+i-1}
  std::vector<long long> as(d.a.begin(), d.a.begin() + g), bs(d.b.begin(), d.b.end());
  long long shift = ell(d, 2 - d.r);
  BettiTable bt;
  for (int k = 0; k <= d.t - 1; ++k) {
    std::vector<long long> row;
    for (long long x : choice_sums(bs, d.t - 1 - k, false))
      for (long long y : choice_sums(as, k, true)) row.push_back(x + y + shift);
    std::sort(row.begin(), row.end());
    bt.twists.push_back(std::move(row));
  }
  return bt;
}

long long dim_MI(const DegreeData& d, long long v)
{
  if (d.c >= 2) return hf_from_betti(br_betti(d), d.n, v);
  long long s = 0;
  for (int bi : d.b) s += binom_trunc(v - bi + d.n, d.n);
  for (int aj : d.a) s -= binom_trunc(v - aj + d.n, d.n);
  return s;
}

long long hf_maximal_minors(const DegreeData& d, long long v)
{
  if (d.r == 1 && d.c >= 1) return hf_from_betti(en_betti(d), d.n, v);
  if (d.c == 2 - d.r) return hf_from_betti(en_betti(transpose_data(d)), d.n, v);
  throw std::domain_error("data is not a maximal-minor case");
}

bool kappa_prime_applicable(const DegreeData& d)
{
  return d.r >= 2 && d.c == 3 - d.r && d.A(d.t - d.r + 1) < s_r(d) - d.B(d.r) + d.B(1);
}

long long kappa_prime(const DegreeData& d)
{
  if (!kappa_prime_applicable(d))
    throw std::domain_error("kappa' closed form needs c = 3-r, r >= 2 and a_{t-r+1} < s_r - b_r + b_1");
  const int n = d.n;
  const int g = d.t - d.r + 1;
  const long long v = d.A(d.t - d.r + 2);
  DegreeData bdata = flag_stage(d, 2 - d.r);
  BettiTable hb = en_betti(transpose_data(bdata));
  auto hfB = [&](long long w) { return hf_from_betti(hb, n, w); };
  long long dimN = 0, dimNB = 0;
  for (int i = 1; i <= d.t; ++i) {
    dimN += binom_trunc(v - d.B(i) + n, n);
    dimNB += hfB(v - d.B(i));
  }
  for (int j = 1; j <= g; ++j) {
    dimN -= binom_trunc(v - d.A(j) + n, n);
    dimNB -= hfB(v - d.A(j));
  }
  dimNB += hf_from_betti(kapp_betti(d, 2 - d.r), n, v);
  return dimN - dimNB;
}

bool dims_adequate(const DegreeData& d)
{
  return d.dim_ring() >= (d.c == 1 ? 3 : 2);
}

PredicateMap check_conditions(const DegreeData& d)
{
  validate(d);
  const int t = d.t, c = d.c, r = d.r;
  const long long sr = s_r(d);
  const int top = d.A(t + c - 1);
  PredicateMap p;
  p["a1_gt_bt"] = d.A(1) > d.B(t);
  p["star"] = top < sr - d.B(r) + d.B(1);
  p["K_vanish"] = c <= 2 || top < ell(d, 2);
  p["Kprime_vanish"] = r <= 2 || -d.B(1) < ell_prime(d, 2);
  p["eg_fiber"] = d.B(t) == d.B(1) && d.A(t - r + 1) < top;

  bool pre = false;
  if (t + c - 2 >= 1) {
    long long lhs = d.B(r) - d.B(1);
    long long rhs = top - d.A(t + c - 2);
    for (int i = 1; i <= t - r; ++i) rhs += d.A(i) - d.B(r + i);
    long long rhs2 = top;
    for (int i = 1; i <= t - r + 1; ++i) rhs2 -= d.B(r + i - 1) - d.B(i);
    pre = lhs < rhs && d.A(t - r + 1) < rhs2;
  }
  p["prefiber"] = pre;

  long long btil = 0;
  if (r >= 2) {
    for (int i = r; i <= t; ++i) btil += d.B(i);
    for (int i = 1; i <= std::min(t, t - r + 2); ++i) btil -= d.B(i);
  }
  bool g3 = false, g4 = false;
  if (r >= 2 && c == 3 - r) g3 = d.A(t - r + 2) > 2LL * d.A(t - r + 1) + btil;
  auto gap4 = [&]() {
    return static_cast<long long>(d.A(t - r + 3)) >
           static_cast<long long>(d.A(t - r + 1)) + d.A(t - r + 2) + btil +
               std::max(d.A(t - r + 2) - d.A(1), d.B(t - r + 2) - d.B(1));
  };
  if (r >= 2 && c == 4 - r) g4 = gap4();
  p["gap_c3"] = g3;
  p["gap_c4"] = g4;

  bool cw4 = false;
  if (r >= 2 && c >= 4 - r) {
    long long rhs = 0;
    for (int i = 1; i <= t - r; ++i) rhs += d.A(i) - d.B(r + i);
    bool first = d.A(t - r + 2) > 2LL * d.A(t - r + 1) + btil;
    cw4 = d.A(1) > d.B(t) && d.B(r) - d.B(1) < rhs && first && gap4();
  }
  p["cw4"] = cw4;

  if (c >= 3 - r && t + c - 2 >= 1) {
    DegreeData bd = drop_last_column(d);
    p["hom_vanish_neg"] = sr - d.B(r) - d.A(t - r + 1) + top >= mdg(bd);
  } else {
    p["hom_vanish_neg"] = false;
  }

  bool r1 = true;
  for (int i = 2; i <= t; ++i)
    if (i - 1 > d.cols() || d.A(i - 1) < d.B(i)) r1 = false;
  p["r1_hyp"] = r1;
  bool tr = true;
  for (int i = r + 1; i <= t; ++i)
    if (i - r > d.cols() || d.A(i - r) < d.B(i)) tr = false;
  p["tr_hyp"] = tr;
  p["dims_adequate"] = dims_adequate(d);
  return p;
}

std::string to_string(PredictionStatus s)
{
  switch (s) {
  case PredictionStatus::proven: return "proven";
  case PredictionStatus::conjectural: return "conjectural";
  case PredictionStatus::upper_bound_only: return "upper-bound-only";
  case PredictionStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

static bool kappa1_hypotheses(const DegreeData& d)
{
  const int t = d.t;
  if (d.r != 2 || d.c != 1 || d.dim_ring() < 2 || t < 3) return false;
  bool some = false;
  for (int i = 1; i <= t - 2; ++i)
    if (d.A(i) > d.B(i + 2)) some = true;
  if (!some) return false;
  if (t == 3) {
    if (d.A(1) < d.B(t)) return false;
  } else {
    for (int i = 1; i <= t - 3; ++i)
      if (d.A(i) < d.B(i + 3)) return false;
  }
  return d.B(t) == d.B(1) && d.B(1) < d.A(1) && d.A(t - 1) < d.A(t);
}

static bool kappa_prime_hypotheses(const DegreeData& d)
{
  const int t = d.t, r = d.r;
  if (r < 2 || d.c != 3 - r) return false;
  if (d.dim_ring() < (d.c <= 0 ? 3 : 2)) return false;
  return d.A(1) > d.B(t) && d.B(t) == d.B(1) && d.A(t - r + 1) < d.A(t - r + 2) && kappa_prime_applicable(d);
}

DimPrediction predict_dim(const DegreeData& d)
{
  validate(d);
  DimPrediction out;
  const auto p = check_conditions(d);
  const long long lam = lambda_c(d);
  const bool room = d.n - d.codim() >= 1;

  bool r1_strict = d.c >= 1;
  for (int i = 2; r1_strict && i <= d.t; ++i)
    if (d.A(i - 1) <= d.B(i)) r1_strict = false;
  const bool r1_ok = d.c >= 1 && (d.c == 1 ? r1_strict : p.at("r1_hyp"));

  if (d.r == 1 && r1_ok && room && !(d.c == 1 && d.n == 2)) {
    long long k = K_total(d);
    out.value = lam + k;
    out.status = PredictionStatus::proven;
    out.source = "standard-determinantal equality";
    out.corrections["K_total"] = k;
    return out;
  }
  if (d.c == 2 - d.r && p.at("tr_hyp") && room) {
    long long k = K_prime_total(d);
    out.value = lam + k;
    out.status = PredictionStatus::proven;
    out.source = "maximal-minor transpose equality";
    out.corrections["Kprime_total"] = k;
    return out;
  }
  if (kappa1_hypotheses(d)) {
    long long k1 = kappa_1(d);
    out.value = lam - k1;
    out.status = PredictionStatus::proven;
    out.source = "submaximal square correction kappa_1";
    out.corrections["kappa_1"] = k1;
    return out;
  }
  if (kappa_prime_hypotheses(d)) {
    long long kp = kappa_prime(d);
    long long k = K_prime_total(d);
    out.value = lam + k - kp;
    out.status = PredictionStatus::proven;
    out.source = p.at("gap_c3") ? "degree-gap column extension" : "first flag step correction kappa'";
    out.corrections["kappa_prime"] = kp;
    out.corrections["Kprime_total"] = k;
    return out;
  }
  if (p.at("star") && p.at("a1_gt_bt") && dims_adequate(d)) {
    out.value = lam;
    out.status = PredictionStatus::conjectural;
    out.source = "expected lambda_c";
    return out;
  }
  if (d.c >= 1 && r1_ok && room) {
    long long k = K_total(d);
    out.value = lam + k;
    out.status = PredictionStatus::upper_bound_only;
    out.source = "upper bound lambda_c + K";
    out.corrections["K_total"] = k;
    return out;
  }
  if (d.c < 1 && p.at("tr_hyp") && room) {
    long long k = K_prime_total(d);
    out.value = lam + k;
    out.status = PredictionStatus::upper_bound_only;
    out.source = "upper bound lambda_c + K'";
    out.corrections["Kprime_total"] = k;
    return out;
  }
  out.status = PredictionStatus::not_applicable;
  out.source = "none";
  out.notes.push_back("no dimension statement covers this degree data");
  return out;
}

}  // namespace detloci
