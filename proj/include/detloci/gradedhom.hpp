#ifndef DETLOCI_GRADEDHOM_HPP
#define DETLOCI_GRADEDHOM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "detloci/detschemes.hpp"
#include "detloci/gfpoly.hpp"

namespace detloci {

// Element of a free module (+) R e_k: one polynomial per component.
struct FreeVec {
  std::vector<MultiPoly> comp;
};

// A graded piece of a module presented as U / V inside a free module F, with
// V contained in U + V.  Coordinates live on the columns of F_m, which are the
// monomials of each summand.
struct Piece {
  MDeg m;
  std::vector<std::size_t> offsets;      // first column of each summand
  std::vector<const Bucket*> buckets;    // monomials of each summand
  std::size_t width = 0;                 // dim F_m
  std::vector<long> pivot_of;            // column -> row of the V reducer, or -1
  std::vector<long> free_pos;            // column -> index among non-pivot columns, or -1
  std::vector<std::size_t> free_cols;    // non-pivot columns of V_m
  DenseMatrix reducer;                   // rank(V_m) x free_cols: RREF rows off their pivots
  bool full = true;                      // U = F
  std::vector<std::size_t> basis_pos;    // pivots of the U basis inside the free columns
  DenseMatrix basis;                     // dim x free_cols, RREF basis of U mod V
  std::size_t dim = 0;

  // Summand and monomial of a column.
  std::pair<int, const Monomial*> column(std::size_t col) const;
  long column_of(int k, const Monomial& mon) const;
};

using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (column, coefficient)

class GradedModuleView {
public:
  enum class Kind { quotient, subquotient, ideal, coker };

  // R / J.
  static GradedModuleView quotient(const Ideal& J);
  // The ideal I itself.
  static GradedModuleView ideal(const Ideal& I);
  // I_A / I_B; throws std::invalid_argument unless each generator of I_B lies in I_A.
  static GradedModuleView subquotient(const Ideal& IA, const Ideal& IB);
  // coker(phi^*), optionally tensored with R / J.
  static GradedModuleView coker(const HomMatrix& m, const Ideal* over = nullptr);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return gen_deg_.size(); }
  const MDeg& generator_degree(int k) const { return gen_deg_[k]; }

  const Piece& piece(const MDeg& m) const;
  // Multidegrees m of standard degree v with F_m nonzero.
  std::vector<MDeg> support(int v) const;
  // Dimension of the standard-degree-v piece.
  long long dim(int v) const;

  // Coordinates in the basis of piece P of a dense vector over F_m lying in U + V.
  std::vector<std::uint32_t> coordinates(const Piece& P, const std::vector<std::uint64_t>& w) const;
  // Representative in F_m of the i-th basis element of P.
  SparseVec basis_vector(const Piece& P, std::size_t i) const;
  // Adds f * x (x in piece src) into the dense accumulator over the columns of dst.
  void multiply_into(const Piece& src, const SparseVec& x, const MultiPoly& f, const Piece& dst,
                     std::vector<std::uint64_t>& acc) const;

private:
  GradedModuleView() = default;
  std::unique_ptr<Piece> build(const MDeg& m) const;
  void add_product(const Piece& P, const Monomial& mu, const FreeVec& v, std::vector<std::uint32_t>& row) const;

  Kind kind_ = Kind::quotient;
  RingPtr ring_;
  std::vector<MDeg> gen_deg_;
  bool full_ = true;
  std::vector<FreeVec> U_, V_;
  std::vector<MDeg> U_deg_, V_deg_;
  std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  mutable std::map<MDeg, std::unique_ptr<Piece>> cache_;
};

// Span of the degree-d multiples of the generators.
struct IdealPiece {
  std::size_t dim = 0;
  std::size_t ambient = 0;  // dim R_d
};
IdealPiece ideal_piece(const Ideal& I, int d);
long long hf_quotient(const Ideal& I, int d);

// Minimal generators with their first syzygies up to standard degree bound.
struct SyzygyBlock {
  Ideal gens;
  std::vector<FreeVec> syz;
  std::vector<MDeg> syz_degs;
  int bound = 0;
  bool complete = false;

  // Number of minimal syzygies in each standard degree.
  std::map<int, int> degree_counts() const;
};

Ideal minimal_generators(const Ideal& I);
// Syzygies among the minimal generators of I in degrees <= D; never flagged complete.
SyzygyBlock syzygy_generators(const Ideal& I, int D);
// Determinantal version: D defaults to mdr(d) and the block is flagged
// complete when D >= mdr(d).
SyzygyBlock syzygy_generators(const MinorsIdeal& I, const DegreeData& d, int D = -1);

// dim Hom_R(I, M)_v from the generators and syzygies of I.
long long hom_dim(const SyzygyBlock& I, const GradedModuleView& M, int v);

// dim (MI (x) R/J)_v.
long long coker_tensor_dim(const HomMatrix& m, const Ideal& J, int v);
// dim (coker phi^*)_v computed from the matrix.
long long coker_dim(const HomMatrix& m, int v);

struct Ext1Result {
  long long ext1 = 0;
  long long hom_MI_MI = 0;  // dim Hom(MI, MI)_0
  bool conditional = false;  // Hom(MI, MI)_0 is not the scalars
};
// dim Ext^1_R(MI, MI)_0 = sum_j dim MI_{a_j} - rank of (m_i) -> (sum_i f_ij m_i)_j.
Ext1Result ext1_MI_dim(const HomMatrix& m);

// dim (I_A)_d - dim (I_B)_d; throws when I_B is not inside I_A.
long long subquotient_piece(const Ideal& IA, const Ideal& IB, int d);

}  // namespace detloci

#endif
