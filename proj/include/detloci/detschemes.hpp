#ifndef DETLOCI_DETSCHEMES_HPP
#define DETLOCI_DETSCHEMES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "detloci/gfpoly.hpp"
#include "detloci/invariants.hpp"

namespace detloci {

// Multidegree; coordinate 0 is always the standard degree.
using MDeg = std::vector<int>;

MDeg operator+(const MDeg& x, const MDeg& y);
MDeg operator-(const MDeg& x, const MDeg& y);

// Monomials sharing one multidegree, in the order of monomials(n, d).
struct Bucket {
  std::vector<Monomial> mons;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  std::size_t size() const { return mons.size(); }
  // Position of m, or -1.
  long find(const Monomial& m) const
  {
    auto it = index.find(m);
    return it == index.end() ? -1 : static_cast<long>(it->second);
  }
};

// Polynomial ring F_p[x_0..x_{nvars-1}] with a positive multigrading.  The
// standard grading has width 1; a matrix whose nonzero entries are pure powers
// of distinct variables admits a finer grading by row and column content,
// which splits every graded piece into much smaller ones.
class Ring {
public:
  Ring(int nvars, std::uint32_t p, std::vector<MDeg> var_degree);
  static std::shared_ptr<const Ring> standard(int nvars, std::uint32_t p);

  int nvars() const { return nvars_; }
  const PrimeField& field() const { return F_; }
  std::size_t width() const { return var_degree_.front().size(); }
  const MDeg& var_degree(int v) const { return var_degree_[v]; }
  MDeg degree(const Monomial& m) const;
  // Multidegree of a multihomogeneous polynomial (of its leading term).
  MDeg degree(const MultiPoly& f) const;
  bool is_homogeneous(const MultiPoly& f) const;
  bool is_standard() const { return width() == 1; }

  // Monomials of multidegree m; empty bucket when there are none.
  const Bucket& bucket(const MDeg& m) const;
  // Every multidegree carried by a monomial of standard degree d.
  std::vector<MDeg> keys(int d) const;

private:
  void fill_degree(int d) const;
  int nvars_;
  PrimeField F_;
  std::vector<MDeg> var_degree_;
  mutable std::mutex mu_;
  mutable std::map<int, std::map<MDeg, Bucket>> cache_;
  Bucket empty_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Homogeneous generators in a common ring, each with its multidegree.
struct Ideal {
  RingPtr ring;
  std::vector<MultiPoly> gens;
  std::vector<MDeg> degs;

  std::size_t size() const { return gens.size(); }
  void add(const MultiPoly& g);
};

// Entry grammar for explicit matrices:
//   entry := "rand" | "0" | term ("+" term)*
//   term  := [integer "*"] factor ("*" factor)* | integer
//   factor:= "x" index ["^" exponent]
// "rand" draws a random form of the entry's prescribed degree.
struct MatrixSpec {
  enum class Kind { generic, random, power, explicit_entries };
  Kind kind = Kind::generic;
  std::uint64_t seed = 1;
  std::vector<std::string> entries;  // row-major, t*(t+c-1) tokens, explicit only
};

std::string to_string(MatrixSpec::Kind k);
MatrixSpec::Kind parse_matrix_kind(const std::string& s);

// t x (t+c-1) homogeneous matrix; entry (i,j) has degree a_j - b_i or is zero.
// It represents phi^*: G^* = (+) R(-a_j) -> F^* = (+) R(-b_i), column j being the
// image of the j-th generator of G^*.
class HomMatrix {
public:
  HomMatrix(DegreeData d, RingPtr ring, std::vector<std::vector<MultiPoly>> entries);

  const DegreeData& data() const { return d_; }
  const RingPtr& ring() const { return ring_; }
  int rows() const { return d_.t; }
  int cols() const { return static_cast<int>(entries_.empty() ? 0 : entries_[0].size()); }
  const MultiPoly& at(int i, int j) const { return entries_[i][j]; }
  // Multidegrees of the generators of F^* and G^*.
  const MDeg& row_degree(int i) const { return row_deg_[i]; }
  const MDeg& col_degree(int j) const { return col_deg_[j]; }
  std::string to_string() const;

private:
  DegreeData d_;
  RingPtr ring_;
  std::vector<std::vector<MultiPoly>> entries_;
  std::vector<MDeg> row_deg_, col_deg_;
};

// Builds the ring (fine grading when the entries allow it) and the matrix.
HomMatrix make_matrix(const DegreeData& d, const MatrixSpec& spec, std::uint32_t p = 101);
HomMatrix generic_matrix(const DegreeData& d, std::uint32_t p = 101);
HomMatrix random_matrix(const DegreeData& d, std::uint64_t seed, std::uint32_t p = 101);
// Entry (i,j) = x_{i(t+c-1)+j}^{a_j-b_i}.
HomMatrix power_matrix(const DegreeData& d, std::uint32_t p = 101);
HomMatrix explicit_matrix(const DegreeData& d, const std::vector<std::string>& entries, std::uint32_t p = 101,
                          std::uint64_t seed = 1);
// Parses one entry of the explicit grammar (without "rand").
MultiPoly parse_entry(const std::string& s, int nvars, const PrimeField& F);

HomMatrix delete_last_column(const HomMatrix& m);

struct MinorsIdeal {
  Ideal ideal;  // nonzero minors
  int s = 1;
  int expected_codim = 0;
  std::size_t zero_count = 0;
  // Row and column sets of each nonzero minor, 0-based.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> support;
  int num_cols = 0;  // columns of the matrix the minors come from
};

MinorsIdeal minors(const HomMatrix& m, int s);
// Minors of m that only involve the first k columns.
MinorsIdeal restrict_to_columns(const MinorsIdeal& I, int k, int expected_codim);

// Stages A_{2-r}, ..., A_c of the column-deletion flag; stage k uses the
// first t+k-1 columns.
struct Flag {
  int r = 1;
  int first = 0;  // 2-r
  std::vector<MinorsIdeal> stages;
  std::vector<DegreeData> data;

  int last() const { return first + static_cast<int>(stages.size()) - 1; }
  const MinorsIdeal& stage(int k) const { return stages.at(k - first); }
  const DegreeData& stage_data(int k) const { return data.at(k - first); }
};

// Throws std::invalid_argument when a deleted column holds a unit.
Flag build_flag(const HomMatrix& m, int r);

struct DimensionEstimate {
  int dimension = -1;     // Krull dimension of R/I
  int fitted_degree = -1;  // degree of the Hilbert polynomial on the window
  int section = 0;         // general linear forms cut before fitting
  std::vector<long long> values;
  bool heuristic = true;
};

// Fits the degree of the polynomial interpolating the Hilbert function of
// R/(I + section general linear forms) on [d0, d1]; throws when the window is
// too short to detect a polynomial.
DimensionEstimate dimension_estimate(const Ideal& I, int d0, int d1, int section = 0, std::uint64_t seed = 7);
DimensionEstimate dimension_estimate(const MinorsIdeal& I, int d0, int d1, int section = 0, std::uint64_t seed = 7);

// True when R/(I + dim_ring general linear forms) vanishes in some degree at
// most max_degree, which proves that R/I has the expected dimension.
bool certify_expected_dimension(const MinorsIdeal& I, int nvars, int max_degree, std::uint64_t seed = 11);

}  // namespace detloci

#endif
