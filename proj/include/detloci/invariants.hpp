#ifndef DETLOCI_INVARIANTS_HPP
#define DETLOCI_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace detloci {

// Degree data of a t x (t+c-1) homogeneous matrix whose (t-r+1)-minors cut
// out a determinantal scheme in P^n.  Entry (i,j) has degree a_j - b_i.
// Sequences are stored 0-based; the accessors take the 1-based indices used
// in formulas.
struct DegreeData {
  int t = 2;
  int c = 1;
  int r = 1;
  int n = 1;
  std::vector<int> a;  // t+c-1 entries
  std::vector<int> b;  // t entries

  int A(int j) const;  // a_j, 1 <= j <= t+c-1
  int B(int i) const;  // b_i, 1 <= i <= t
  int cols() const { return t + c - 1; }
  // Expected codimension r(c+r-1) of the scheme.
  int codim() const { return r * (c + r - 1); }
  // Krull dimension n+1 - r(c+r-1) of the coordinate ring.
  int dim_ring() const { return n + 1 - codim(); }
  bool operator==(const DegreeData& o) const = default;
};

// Empty string when d is valid, else a message naming the offending field.
std::string validation_error(const DegreeData& d);
void validate(const DegreeData& d);  // throws std::invalid_argument
// Data with uniform degrees a_j = deg, b_i = 0.
DegreeData uniform_data(int t, int c, int r, int n, int deg = 1);
// Data of the matrix with its last column removed (same t, r, n; c-1); not validated.
DegreeData drop_last_column(const DegreeData& d);
// Data of the first t+k-1 columns, i.e. stage k of the column-deletion flag.
DegreeData flag_stage(const DegreeData& d, int k);

long long binom_trunc(long long m, long long k);

long long lambda_c(const DegreeData& d);
// l_i = sum_{j<=t+i-1} a_j - sum b; requires 0 <= t+i-1 <= t+c-1.
long long ell(const DegreeData& d, int i);
// h_{i-3} = 2 a_{t+i-1} - l_i + n, indexed by i with 3 <= i <= c.
long long h(const DegreeData& d, int i);
// K_i for 3 <= i <= c via the signed multi-index sum.
long long K(const DegreeData& d, int i);
// The two closed forms K_3 = C(h_0, n) and K_4 = sum_j C(h_1+a_j) - sum_i C(h_1+b_i).
long long K3_closed(const DegreeData& d);
long long K4_closed(const DegreeData& d);
long long K_total(const DegreeData& d);  // sum_{i=3}^{c} K_i

long long s_r(const DegreeData& d);
// (t+c-1, 2-c, c+r-1, n, a'_i = -b_{t+1-i}, b'_j = -a_{t+c-j}).
DegreeData transpose_data(const DegreeData& d);
// Primed invariants of the maximal-minor case, indexed by i with 3 <= i <= r
// (ell_prime accepts 1 <= i <= r).
long long ell_prime(const DegreeData& d, int i);
long long h_prime(const DegreeData& d, int i);
long long K_prime(const DegreeData& d, int i);
long long K4_prime_closed(const DegreeData& d);
long long K_prime_total(const DegreeData& d);  // sum_{i=3}^{r} K'_i

// Largest degree of a minimal generator / first syzygy of the (t+1-r)-minors.
long long mdg(const DegreeData& d);
long long mdr(const DegreeData& d);
// The three specialised maximal-relation formulas; each throws outside its domain.
long long mdr_submaximal_r2(const DegreeData& d);   // r = 2, c >= 1
long long mdr_submaximal_c3r(const DegreeData& d);  // c = 3-r, r >= 2
long long mdr_maximal_c2r(const DegreeData& d);     // c = 2-r, r >= 2

long long kappa_1(const DegreeData& d);

// Twists with multiplicity per homological index; index 0 first.
struct BettiTable {
  std::vector<std::vector<long long>> twists;
  std::size_t length() const { return twists.size(); }
  std::size_t rank(std::size_t k) const { return k < twists.size() ? twists[k].size() : 0; }
};

long long hf_from_betti(const BettiTable& bt, int n, long long v);
// Eagon-Northcott resolution of R/I_t for c >= 1.
BettiTable en_betti(const DegreeData& d);
// Buchsbaum-Rim resolution of coker(phi^*) for c >= 2.
BettiTable br_betti(const DegreeData& d);
// Resolution of (B_i (x) A_i)^* at the maximal-minor stage i = 2-r, with the
// twist l_{2-r} already applied, so hf_from_betti evaluates the module itself.
BettiTable kapp_betti(const DegreeData& d, int i);

// dim (coker phi^*)_v: Buchsbaum-Rim for c >= 2, the injective two-term
// presentation for c <= 1 (exact for a general matrix).
long long dim_MI(const DegreeData& d, long long v);
// Hilbert function of R / I_{t+1-r} for maximal-minor data (r = 1 with c >= 1,
// or c = 2-r via the transpose).
long long hf_maximal_minors(const DegreeData& d, long long v);

long long kappa_prime(const DegreeData& d);
bool kappa_prime_applicable(const DegreeData& d);

using PredicateMap = std::map<std::string, bool>;
PredicateMap check_conditions(const DegreeData& d);
// dim A >= 2, and dim A >= 3 when c = 1.
bool dims_adequate(const DegreeData& d);

enum class PredictionStatus { proven, conjectural, upper_bound_only, not_applicable };
std::string to_string(PredictionStatus s);

struct DimPrediction {
  long long value = 0;
  PredictionStatus status = PredictionStatus::not_applicable;
  std::string source;
  std::map<std::string, long long> corrections;  // K_total, Kprime_total, kappa_1, kappa_prime
  std::vector<std::string> notes;
};

DimPrediction predict_dim(const DegreeData& d);

}  // namespace detloci

#endif
