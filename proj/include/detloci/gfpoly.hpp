#ifndef DETLOCI_GFPOLY_HPP
#define DETLOCI_GFPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace detloci {

// Arithmetic modulo an odd prime p < 2^16.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = 101);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const
  {
    std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const
  {
    return x >= y ? x - y : x + p_ - y;
  }
  std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const
  {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * y) % p_);
  }
  std::uint32_t inv(std::uint32_t x) const;
  // Maps an arbitrary integer to its residue.
  std::uint32_t from_int(long long v) const;
  // Symmetric representative in (-p/2, p/2].
  long long to_int(std::uint32_t x) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

bool is_prime(std::uint32_t p);

constexpr int kMaxVars = 32;

// Exponent vector of a monomial in x_0..x_{kMaxVars-1}.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const
  {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  Monomial operator*(const Monomial& o) const
  {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return r;
  }
  bool divides(const Monomial& o) const
  {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  // Graded lexicographic: higher degree first, then lexicographic with x0 largest.
  bool grlex_greater(const Monomial& o) const;

  static Monomial var(int i, int power = 1)
  {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    return m;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Ranks monomials of a fixed degree in the basis order of monomials(n, d).
class MonomialIndex {
public:
  explicit MonomialIndex(int nvars, int max_degree = 64);
  int nvars() const { return nvars_; }
  // Number of monomials of degree d in nvars variables.
  std::size_t count(int d) const;
  std::size_t rank(const Monomial& m, int d) const;

private:
  std::size_t binom(int m, int k) const;
  int nvars_;
  int max_n_;
  std::vector<std::vector<std::size_t>> table_;
};

// All monomials of degree d in x_0..x_n, lexicographically descending
// (x_0^d first).
std::vector<Monomial> monomials(int n, int d);

struct Term {
  Monomial m;
  std::uint32_t c;
};

// Sparse polynomial over a prime field, terms kept in descending grlex order.
class MultiPoly {
public:
  MultiPoly() = default;
  MultiPoly(int nvars, std::uint32_t p) : nvars_(nvars), p_(p) {}

  static MultiPoly constant(int nvars, const PrimeField& F, long long v);
  static MultiPoly variable(int nvars, const PrimeField& F, int i, int power = 1);
  static MultiPoly from_terms(int nvars, const PrimeField& F, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  std::uint32_t prime() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(std::uint32_t c) const;
  MultiPoly times_monomial(const Monomial& m) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void normalize();
  int nvars_ = 0;
  std::uint32_t p_ = 0;
  std::vector<Term> terms_;
};

// Dense row-major matrix over F_p.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::uint32_t* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::uint32_t* row(std::size_t i) { return data_.data() + i * cols_; }

  static DenseMatrix identity(std::size_t n);
  DenseMatrix multiply(const DenseMatrix& o, const PrimeField& F) const;
  DenseMatrix transposed() const;
  bool operator==(const DenseMatrix& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Incremental row echelon form over F_p.  Rows are kept reduced against all
// earlier rows, each with a unit pivot at its first nonzero column.  Reducing a
// vector against the rows in insertion order zeroes it at every pivot column,
// so the reduced vector is a normal form modulo the row space whose support
// lies in the non-pivot columns.
class Echelon {
public:
  Echelon(std::size_t width, const PrimeField& F);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  const std::uint32_t* row(std::size_t i) const { return rows_.data() + i * width_; }

  // Inserts v; returns true if it was independent of the current rows.
  bool insert(const std::vector<std::uint32_t>& v);
  // Reduces v in place to its normal form.
  void reduce(std::vector<std::uint32_t>& v) const;
  // Reduces v and records the multiple of every row that was subtracted.
  void reduce_with_coefficients(std::vector<std::uint32_t>& v,
                                std::vector<std::uint32_t>& coeff) const;
  std::vector<std::size_t> non_pivots() const;
  // Clears every pivot column from all other rows (reduced row echelon form).
  void back_substitute();
  // Row index owning the pivot at col, or -1.
  long pivot_row(std::size_t col) const { return pivot_row_[col]; }
  const PrimeField& field() const { return F_; }

private:
  void reduce_wide(std::vector<std::uint64_t>& acc, std::vector<std::uint32_t>* coeff) const;
  std::size_t width_;
  PrimeField F_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

std::size_t rank(const DenseMatrix& m, const PrimeField& F);
// Basis of {x : m x = 0}, one vector per non-pivot column of the reduced form.
std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m, const PrimeField& F);
// Some x with m x = target, or nothing when the system is inconsistent.
std::optional<std::vector<std::uint32_t>> solve(const DenseMatrix& m,
                                                const std::vector<std::uint32_t>& target,
                                                const PrimeField& F);
// Column indices outside the pivot set of the row space of m (a monomial
// complement when columns are monomials).
std::vector<std::size_t> row_space_complement(const DenseMatrix& m, const PrimeField& F);

// Linear map between graded pieces of R = F_p[x_0..x_n] in monomial bases.
struct GradedPieceMap {
  int source_degree = 0;
  int target_degree = 0;
  DenseMatrix matrix;  // rows: target basis, columns: source basis
};

GradedPieceMap mul_map(const MultiPoly& f, int d, const PrimeField& F);

// SplitMix64 output function; random streams are indexed by (seed, stream,
// counter) so every draw is reproducible independently of call order.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Dense homogeneous polynomial of the given degree in x_0..x_n with uniform
// coefficients; redrawn on the next stream when the draw is zero.
MultiPoly random_homogeneous(int degree, int n, std::uint64_t seed, const PrimeField& F);

}  // namespace detloci

#endif
