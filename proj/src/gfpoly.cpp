#include "detloci/gfpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace detloci {

bool is_prime(std::uint32_t p)
{
  if (p < 2) return false;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
  if (p <= 2 || p >= (1u << 16) || !is_prime(p))
    throw std::invalid_argument("prime must be an odd prime below 65536, got " + std::to_string(p));
  inv_.assign(p, 0);
  inv_[1] = 1;
  for (std::uint32_t x = 2; x < p; ++x)
    inv_[x] = static_cast<std::uint32_t>(p - static_cast<std::uint64_t>(p / x) * inv_[p % x] % p);
}

std::uint32_t PrimeField::inv(std::uint32_t x) const
{
  if (x == 0 || x >= p_) throw std::domain_error("no inverse");
  return inv_[x];
}

std::uint32_t PrimeField::from_int(long long v) const
{
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

long long PrimeField::to_int(std::uint32_t x) const
{
  return x > p_ / 2 ? static_cast<long long>(x) - p_ : static_cast<long long>(x);
}

bool Monomial::grlex_greater(const Monomial& o) const
{
  int d = degree(), od = o.degree();
  if (d != od) return d > od;
  return e > o.e;
}

std::size_t MonomialHash::operator()(const Monomial& m) const
{
  std::uint64_t w[4];
  std::memcpy(w, m.e.data(), sizeof(w));
  std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
  h ^= (w[1] + 0x632BE59BD9B4E019ULL) * 0xBF58476D1CE4E5B9ULL;
  h = (h << 31) | (h >> 33);
  h ^= (w[2] + 0x94D049BB133111EBULL) * 0x9E3779B97F4A7C15ULL;
  h ^= (w[3] + 0x2545F4914F6CDD1DULL) * 0xBF58476D1CE4E5B9ULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

MonomialIndex::MonomialIndex(int nvars, int max_degree) : nvars_(nvars), max_n_(nvars + max_degree + 1)
{
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  table_.assign(max_n_ + 1, std::vector<std::size_t>(nvars + 1, 0));
  for (int m = 0; m <= max_n_; ++m) {
    table_[m][0] = 1;
    for (int k = 1; k <= std::min(m, nvars); ++k)
      table_[m][k] = table_[m - 1][k - 1] + (k <= m - 1 ? table_[m - 1][k] : 0);
  }
}

std::size_t MonomialIndex::binom(int m, int k) const
{
  if (k < 0 || m < k) return 0;
  if (m > max_n_) throw std::out_of_range("degree exceeds monomial index table");
  return table_[m][k];
}

std::size_t MonomialIndex::count(int d) const
{
  if (d < 0) return 0;
  return binom(d + nvars_ - 1, nvars_ - 1);
}

std::size_t MonomialIndex::rank(const Monomial& m, int d) const
{
  // Monomials preceding m are those agreeing on x_0..x_{i-1} with a larger
  // exponent of x_i; for each i they are counted by one binomial.
  std::size_t r = 0;
  int rem = d;
  for (int i = 0; i + 1 < nvars_; ++i) {
    int ei = m.e[i];
    int k = nvars_ - 1 - i;
    if (rem - ei - 1 >= 0) r += binom(rem - ei - 1 + k, k);
    rem -= ei;
  }
  return r;
}

static void monomials_rec(int nvars, int i, int rem, Monomial& cur, std::vector<Monomial>& out)
{
  if (i == nvars - 1) {
    cur.e[i] = static_cast<std::uint8_t>(rem);
    out.push_back(cur);
    cur.e[i] = 0;
    return;
  }
  for (int k = rem; k >= 0; --k) {
    cur.e[i] = static_cast<std::uint8_t>(k);
    monomials_rec(nvars, i + 1, rem - k, cur, out);
  }
  cur.e[i] = 0;
}

std::vector<Monomial> monomials(int n, int d)
{
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n < 0 || n + 1 > kMaxVars) throw std::invalid_argument("variable count out of range");
  if (d > 255) throw std::invalid_argument("degree too large");
  Monomial cur;
  monomials_rec(n + 1, 0, d, cur, out);
  return out;
}

MultiPoly MultiPoly::constant(int nvars, const PrimeField& F, long long v)
{
  MultiPoly f(nvars, F.p());
  std::uint32_t c = F.from_int(v);
  if (c) f.terms_.push_back({Monomial{}, c});
  return f;
}

MultiPoly MultiPoly::variable(int nvars, const PrimeField& F, int i, int power)
{
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  MultiPoly f(nvars, F.p());
  f.terms_.push_back({Monomial::var(i, power), 1});
  return f;
}

MultiPoly MultiPoly::from_terms(int nvars, const PrimeField& F, std::vector<Term> terms)
{
  MultiPoly f(nvars, F.p());
  for (auto& t : terms) t.c %= F.p();
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

void MultiPoly::normalize()
{
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.m.grlex_greater(y.m); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c = static_cast<std::uint32_t>((merged.back().c + static_cast<std::uint64_t>(t.c)) % p_);
    } else {
      merged.push_back(t);
    }
  }
  terms_.clear();
  for (const auto& t : merged)
    if (t.c) terms_.push_back(t);
}

int MultiPoly::degree() const
{
  return terms_.empty() ? -1 : terms_.front().m.degree();
}

bool MultiPoly::is_homogeneous() const
{
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

static void check_compatible(const MultiPoly& a, const MultiPoly& b)
{
  if (a.prime() != b.prime() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials over different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
  check_compatible(*this, o);
  MultiPoly r(nvars_, p_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

MultiPoly MultiPoly::operator-() const
{
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.c = p_ - t.c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
  check_compatible(*this, o);
  MultiPoly r(nvars_, p_);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& x : terms_)
    for (const auto& y : o.terms_)
      r.terms_.push_back({x.m * y.m, static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.c) * y.c % p_)});
  r.normalize();
  return r;
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const
{
  MultiPoly r(nvars_, p_);
  c %= p_;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.c) * c % p_);
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const
{
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const
{
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string MultiPoly::to_string() const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    long long c = t.c > p_ / 2 ? static_cast<long long>(t.c) - p_ : t.c;
    bool constant = t.m.degree() == 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || constant) os << a;
    bool need_star = a != 1 && !constant;
    for (int i = 0; i < nvars_; ++i) {
      if (t.m.e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << i;
      if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& o, const PrimeField& F) const
{
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
  DenseMatrix r(rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = at(i, k);
      if (!a) continue;
      const std::uint32_t* orow = o.row(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
      if ((k & 1023) == 1023)
        for (auto& x : acc) x %= F.p();
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = static_cast<std::uint32_t>(acc[j] % F.p());
  }
  return r;
}

DenseMatrix DenseMatrix::transposed() const
{
  DenseMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Echelon::Echelon(std::size_t width, const PrimeField& F) : width_(width), F_(F), pivot_row_(width, -1) {}

void Echelon::reduce_wide(std::vector<std::uint64_t>& acc, std::vector<std::uint32_t>* coeff) const
{
  const std::uint64_t p = F_.p();
  // Each update adds less than p^2 < 2^32, so at most 2^32 updates fit in
  // the 64-bit accumulators before the final reduction.
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    std::size_t pc = pivots_[r];
    std::uint64_t c = acc[pc] % p;
    if (coeff) (*coeff)[r] = static_cast<std::uint32_t>(c);
    if (!c) {
      acc[pc] = 0;
      continue;
    }
    std::uint64_t f = p - c;
    const std::uint32_t* row = rows_.data() + r * width_;
    for (std::size_t k = pc; k < width_; ++k) acc[k] += f * row[k];
  }
  for (auto& x : acc) x %= p;
}

void Echelon::reduce(std::vector<std::uint32_t>& v) const
{
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  reduce_wide(acc, nullptr);
  for (std::size_t k = 0; k < width_; ++k) v[k] = static_cast<std::uint32_t>(acc[k]);
}

void Echelon::reduce_with_coefficients(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& coeff) const
{
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  coeff.assign(pivots_.size(), 0);
  reduce_wide(acc, &coeff);
  for (std::size_t k = 0; k < width_; ++k) v[k] = static_cast<std::uint32_t>(acc[k]);
}

bool Echelon::insert(const std::vector<std::uint32_t>& v)
{
  if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  reduce_wide(acc, nullptr);
  std::size_t pc = 0;
  while (pc < width_ && acc[pc] == 0) ++pc;
  if (pc == width_) return false;
  std::uint64_t s = F_.inv(static_cast<std::uint32_t>(acc[pc]));
  std::size_t base = rows_.size();
  rows_.resize(base + width_);
  for (std::size_t k = 0; k < width_; ++k)
    rows_[base + k] = static_cast<std::uint32_t>(acc[k] * s % F_.p());
  pivot_row_[pc] = static_cast<long>(pivots_.size());
  pivots_.push_back(pc);
  return true;
}

std::vector<std::size_t> Echelon::non_pivots() const
{
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < width_; ++k)
    if (pivot_row_[k] < 0) out.push_back(k);
  return out;
}

void Echelon::back_substitute()
{
  const std::uint64_t p = F_.p();
  std::vector<std::uint64_t> acc(width_);
  for (std::size_t j = pivots_.size(); j-- > 0;) {
    std::size_t pc = pivots_[j];
    const std::uint32_t* rj = rows_.data() + j * width_;
    for (std::size_t i = 0; i < j; ++i) {
      std::uint32_t* ri = rows_.data() + i * width_;
      std::uint64_t c = ri[pc];
      if (!c) continue;
      std::uint64_t f = p - c;
      for (std::size_t k = pc; k < width_; ++k) ri[k] = static_cast<std::uint32_t>((ri[k] + f * rj[k]) % p);
    }
  }
}

std::size_t rank(const DenseMatrix& m, const PrimeField& F)
{
  // Row rank equals column rank; eliminate along the shorter side.
  const DenseMatrix& src = m.rows() <= m.cols() ? m : m.transposed();
  Echelon e(src.cols(), F);
  std::vector<std::uint32_t> v(src.cols());
  for (std::size_t i = 0; i < src.rows(); ++i) {
    std::copy(src.row(i), src.row(i) + src.cols(), v.begin());
    e.insert(v);
    if (e.rank() == src.cols()) break;
  }
  return e.rank();
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m, const PrimeField& F)
{
  // Column j of m is inserted together with the unit vector e_j; a column
  // that reduces to zero leaves a kernel vector in the unit part.
  std::size_t R = m.rows(), C = m.cols();
  Echelon e(R + C, F);
  std::vector<std::uint32_t> v(R + C);
  for (std::size_t j = 0; j < C; ++j) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < R; ++i) v[i] = m.at(i, j);
    v[R + j] = 1;
    e.insert(v);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots()[r] < R) continue;
    const std::uint32_t* row = e.row(r);
    out.emplace_back(row + R, row + R + C);
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& m, const std::vector<std::uint32_t>& target,
                                                const PrimeField& F)
{
  if (target.size() != m.rows()) throw std::invalid_argument("target length must equal row count");
  std::size_t R = m.rows(), C = m.cols();
  Echelon e(R + C, F);
  std::vector<std::uint32_t> v(R + C);
  for (std::size_t j = 0; j < C; ++j) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < R; ++i) v[i] = m.at(i, j);
    v[R + j] = 1;
    e.insert(v);
  }
  // Reducing (target | 0) leaves (0 | -x) exactly when m x = target.
  std::fill(v.begin(), v.end(), 0);
  std::copy(target.begin(), target.end(), v.begin());
  e.reduce(v);
  for (std::size_t i = 0; i < R; ++i)
    if (v[i]) return std::nullopt;
  std::vector<std::uint32_t> x(C);
  for (std::size_t j = 0; j < C; ++j) x[j] = F.neg(v[R + j]);
  return x;
}

std::vector<std::size_t> row_space_complement(const DenseMatrix& m, const PrimeField& F)
{
  Echelon e(m.cols(), F);
  std::vector<std::uint32_t> v(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i), m.row(i) + m.cols(), v.begin());
    e.insert(v);
  }
  return e.non_pivots();
}

GradedPieceMap mul_map(const MultiPoly& f, int d, const PrimeField& F)
{
  if (!f.is_homogeneous()) throw std::invalid_argument("mul_map requires a homogeneous polynomial");
  int n = f.nvars() - 1;
  int e = f.is_zero() ? 0 : f.degree();
  GradedPieceMap g;
  g.source_degree = d;
  g.target_degree = d + e;
  MonomialIndex idx(f.nvars(), d + e + 1);
  auto src = monomials(n, d);
  g.matrix = DenseMatrix(idx.count(d + e), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& t : f.terms()) {
      std::size_t i = idx.rank(t.m * src[j], d + e);
      g.matrix.at(i, j) = F.add(g.matrix.at(i, j), t.c % F.p());
    }
  return g;
}

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

MultiPoly random_homogeneous(int degree, int n, std::uint64_t seed, const PrimeField& F)
{
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  auto basis = monomials(n, degree);
  for (std::uint64_t stream = 0;; ++stream) {
    std::vector<Term> terms;
    terms.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      // Rejection sampling keeps the draw uniform on F_p.
      std::uint64_t limit = UINT64_MAX - UINT64_MAX % F.p();
      std::uint64_t x;
      std::uint64_t ctr = k;
      do {
        x = counter_random(seed, stream, ctr);
        ctr += basis.size();
      } while (x >= limit);
      std::uint32_t c = static_cast<std::uint32_t>(x % F.p());
      if (c) terms.push_back({basis[k], c});
    }
    if (!terms.empty()) return MultiPoly::from_terms(n + 1, F, std::move(terms));
  }
}

}  // namespace detloci
