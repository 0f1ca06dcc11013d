#include "detloci/gradedhom.hpp"

#include <algorithm>
#include <stdexcept>

namespace detloci {

std::pair<int, const Monomial*> Piece::column(std::size_t col) const
{
  auto it = std::upper_bound(offsets.begin(), offsets.end(), col);
  int k = static_cast<int>(it - offsets.begin()) - 1;
  return {k, &buckets[k]->mons[col - offsets[k]]};
}

long Piece::column_of(int k, const Monomial& mon) const
{
  long i = buckets[k]->find(mon);
  return i < 0 ? -1 : static_cast<long>(offsets[k]) + i;
}

// Reduction of w modulo V_m, written on the free columns.
static std::vector<std::uint64_t> normal_form(const Piece& P, const std::vector<std::uint64_t>& w, std::uint32_t p)
{
  const std::size_t nf = P.free_cols.size();
  std::vector<std::uint64_t> y(nf);
  for (std::size_t f = 0; f < nf; ++f) y[f] = w[P.free_cols[f]] % p;
  std::size_t pending = 0;
  for (std::size_t c = 0; c < P.width; ++c) {
    if (P.pivot_of[c] < 0) continue;
    std::uint32_t x = static_cast<std::uint32_t>(w[c] % p);
    if (!x) continue;
    const std::uint64_t neg = p - x;
    const std::uint32_t* r = P.reducer.row(static_cast<std::size_t>(P.pivot_of[c]));
    for (std::size_t f = 0; f < nf; ++f) y[f] += neg * r[f];
    // Each step adds below 2^32, so folding every 2^30 steps keeps y below 2^63.
    if (++pending == (1u << 30)) {
      for (auto& v : y) v %= p;
      pending = 0;
    }
  }
  for (auto& v : y) v %= p;
  return y;
}

GradedModuleView GradedModuleView::quotient(const Ideal& J)
{
  GradedModuleView M;
  M.kind_ = Kind::quotient;
  M.ring_ = J.ring;
  M.gen_deg_.push_back(MDeg(J.ring->width(), 0));
  M.full_ = true;
  for (std::size_t g = 0; g < J.size(); ++g) {
    M.V_.push_back(FreeVec{{J.gens[g]}});
    M.V_deg_.push_back(J.degs[g]);
  }
  return M;
}

GradedModuleView GradedModuleView::ideal(const Ideal& I)
{
  GradedModuleView M;
  M.kind_ = Kind::ideal;
  M.ring_ = I.ring;
  M.gen_deg_.push_back(MDeg(I.ring->width(), 0));
  M.full_ = false;
  for (std::size_t g = 0; g < I.size(); ++g) {
    M.U_.push_back(FreeVec{{I.gens[g]}});
    M.U_deg_.push_back(I.degs[g]);
  }
  return M;
}

GradedModuleView GradedModuleView::subquotient(const Ideal& IA, const Ideal& IB)
{
  if (IA.ring != IB.ring) throw std::invalid_argument("subquotient: ideals live in different rings");
  GradedModuleView A = ideal(IA);
  const PrimeField& F = IA.ring->field();
  for (std::size_t g = 0; g < IB.size(); ++g) {
    const Piece& P = A.piece(IB.degs[g]);
    std::vector<std::uint64_t> w(P.width, 0);
    for (const auto& t : IB.gens[g].terms()) w[P.column_of(0, t.m)] = t.c;
    // Residual after removing the components along the RREF basis.
    std::vector<std::uint64_t> y(w.begin(), w.end());
    for (std::size_t i = 0; i < P.dim; ++i) {
      std::uint32_t c = static_cast<std::uint32_t>(y[P.free_cols[P.basis_pos[i]]] % F.p());
      if (!c) continue;
      for (std::size_t f = 0; f < P.free_cols.size(); ++f)
        y[P.free_cols[f]] = (y[P.free_cols[f]] + static_cast<std::uint64_t>(F.neg(c)) * P.basis.at(i, f)) % F.p();
    }
    for (auto x : y)
      if (x % F.p()) throw std::invalid_argument("subquotient: generator " + std::to_string(g + 1) + " of I_B is not in I_A");
  }
  GradedModuleView M;
  M.kind_ = Kind::subquotient;
  M.ring_ = IA.ring;
  M.gen_deg_ = A.gen_deg_;
  M.full_ = false;
  M.U_ = A.U_;
  M.U_deg_ = A.U_deg_;
  for (std::size_t g = 0; g < IB.size(); ++g) {
    M.V_.push_back(FreeVec{{IB.gens[g]}});
    M.V_deg_.push_back(IB.degs[g]);
  }
  return M;
}

GradedModuleView GradedModuleView::coker(const HomMatrix& m, const Ideal* over)
{
  GradedModuleView M;
  M.kind_ = Kind::coker;
  M.ring_ = m.ring();
  M.full_ = true;
  const int t = m.rows();
  for (int i = 0; i < t; ++i) M.gen_deg_.push_back(m.row_degree(i));
  for (int j = 0; j < m.cols(); ++j) {
    FreeVec v;
    bool nonzero = false;
    for (int i = 0; i < t; ++i) {
      v.comp.push_back(m.at(i, j));
      nonzero = nonzero || !m.at(i, j).is_zero();
    }
    if (!nonzero) continue;
    M.V_.push_back(std::move(v));
    M.V_deg_.push_back(m.col_degree(j));
  }
  if (over) {
    if (over->ring != m.ring()) throw std::invalid_argument("coker: ideal lives in a different ring");
    const int nv = m.ring()->nvars();
    const std::uint32_t p = m.ring()->field().p();
    for (std::size_t g = 0; g < over->size(); ++g)
      for (int i = 0; i < t; ++i) {
        FreeVec v;
        v.comp.assign(t, MultiPoly(nv, p));
        v.comp[i] = over->gens[g];
        M.V_.push_back(std::move(v));
        M.V_deg_.push_back(over->degs[g] + m.row_degree(i));
      }
  }
  return M;
}

void GradedModuleView::add_product(const Piece& P, const Monomial& mu, const FreeVec& v,
                                   std::vector<std::uint32_t>& row) const
{
  const PrimeField& F = ring_->field();
  for (std::size_t k = 0; k < v.comp.size(); ++k)
    for (const auto& t : v.comp[k].terms()) {
      long idx = P.column_of(static_cast<int>(k), mu * t.m);
      if (idx < 0) throw std::logic_error("product leaves its graded piece; generator degrees are inconsistent");
      row[idx] = F.add(row[idx], t.c);
    }
}

std::unique_ptr<Piece> GradedModuleView::build(const MDeg& m) const
{
  const PrimeField& F = ring_->field();
  auto P = std::make_unique<Piece>();
  P->m = m;
  P->full = full_;
  for (const auto& g : gen_deg_) {
    const Bucket& b = ring_->bucket(m - g);
    P->offsets.push_back(P->width);
    P->buckets.push_back(&b);
    P->width += b.size();
  }
  const std::size_t W = P->width;
  P->pivot_of.assign(W, -1);
  P->free_pos.assign(W, -1);
  if (W == 0) return P;

  Echelon EV(W, F);
  std::vector<std::uint32_t> row(W);
  for (std::size_t v = 0; v < V_.size() && EV.rank() < W; ++v) {
    const Bucket& b = ring_->bucket(m - V_deg_[v]);
    for (const auto& mu : b.mons) {
      std::fill(row.begin(), row.end(), 0);
      add_product(*P, mu, V_[v], row);
      EV.insert(row);
      if (EV.rank() == W) break;
    }
  }
  EV.back_substitute();
  for (std::size_t c = 0; c < W; ++c) {
    P->pivot_of[c] = EV.pivot_row(c);
    if (P->pivot_of[c] < 0) {
      P->free_pos[c] = static_cast<long>(P->free_cols.size());
      P->free_cols.push_back(c);
    }
  }
  const std::size_t nf = P->free_cols.size();
  P->reducer = DenseMatrix(EV.rank(), nf);
  for (std::size_t r = 0; r < EV.rank(); ++r) {
    const std::uint32_t* src = EV.row(r);
    for (std::size_t f = 0; f < nf; ++f) P->reducer.at(r, f) = src[P->free_cols[f]];
  }
  if (full_) {
    P->dim = nf;
    return P;
  }
  if (nf == 0) return P;
  Echelon EU(nf, F);
  std::vector<std::uint64_t> w(W);
  for (std::size_t u = 0; u < U_.size() && EU.rank() < nf; ++u) {
    const Bucket& b = ring_->bucket(m - U_deg_[u]);
    for (const auto& mu : b.mons) {
      std::fill(row.begin(), row.end(), 0);
      add_product(*P, mu, U_[u], row);
      std::copy(row.begin(), row.end(), w.begin());
      std::vector<std::uint64_t> y = normal_form(*P, w, F.p());
      EU.insert({y.begin(), y.end()});
      if (EU.rank() == nf) break;
    }
  }
  EU.back_substitute();
  P->dim = EU.rank();
  P->basis_pos = EU.pivots();
  P->basis = DenseMatrix(P->dim, nf);
  for (std::size_t i = 0; i < P->dim; ++i) std::copy(EU.row(i), EU.row(i) + nf, P->basis.row(i));
  return P;
}

const Piece& GradedModuleView::piece(const MDeg& m) const
{
  std::lock_guard<std::mutex> lock(*mu_);
  auto it = cache_.find(m);
  if (it != cache_.end()) return *it->second;
  auto P = build(m);
  const Piece& ref = *P;
  cache_.emplace(m, std::move(P));
  return ref;
}

std::vector<MDeg> GradedModuleView::support(int v) const
{
  std::set<MDeg> out;
  for (const auto& g : gen_deg_)
    for (const auto& key : ring_->keys(v - g[0])) out.insert(g + key);
  return {out.begin(), out.end()};
}

long long GradedModuleView::dim(int v) const
{
  long long s = 0;
  for (const auto& m : support(v)) s += static_cast<long long>(piece(m).dim);
  return s;
}

std::vector<std::uint32_t> GradedModuleView::coordinates(const Piece& P, const std::vector<std::uint64_t>& w) const
{
  std::vector<std::uint64_t> y = normal_form(P, w, ring_->field().p());
  if (P.full) return {y.begin(), y.end()};
  std::vector<std::uint32_t> out(P.dim);
  for (std::size_t i = 0; i < P.dim; ++i) out[i] = static_cast<std::uint32_t>(y[P.basis_pos[i]]);
  return out;
}

SparseVec GradedModuleView::basis_vector(const Piece& P, std::size_t i) const
{
  if (P.full) return {{static_cast<std::uint32_t>(P.free_cols[i]), 1u}};
  SparseVec out;
  for (std::size_t f = 0; f < P.free_cols.size(); ++f)
    if (P.basis.at(i, f)) out.emplace_back(static_cast<std::uint32_t>(P.free_cols[f]), P.basis.at(i, f));
  return out;
}

void GradedModuleView::multiply_into(const Piece& src, const SparseVec& x, const MultiPoly& f, const Piece& dst,
                                     std::vector<std::uint64_t>& acc) const
{
  const PrimeField& F = ring_->field();
  for (const auto& [col, c] : x) {
    auto [k, mon] = src.column(col);
    for (const auto& t : f.terms()) {
      long idx = dst.column_of(k, *mon * t.m);
      if (idx < 0) throw std::logic_error("product leaves its graded piece; degrees are inconsistent");
      acc[idx] += F.mul(c, t.c);
    }
  }
}

IdealPiece ideal_piece(const Ideal& I, int d)
{
  IdealPiece out;
  if (d < 0) return out;
  for (const auto& key : I.ring->keys(d)) out.ambient += I.ring->bucket(key).size();
  out.dim = static_cast<std::size_t>(GradedModuleView::ideal(I).dim(d));
  return out;
}

long long hf_quotient(const Ideal& I, int d)
{
  if (d < 0) return 0;
  auto p = ideal_piece(I, d);
  return static_cast<long long>(p.ambient - p.dim);
}

std::map<int, int> SyzygyBlock::degree_counts() const
{
  std::map<int, int> out;
  for (const auto& m : syz_degs) ++out[m[0]];
  return out;
}

Ideal minimal_generators(const Ideal& I)
{
  const Ring& R = *I.ring;
  const PrimeField& F = R.field();
  std::vector<std::size_t> order(I.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return I.degs[x][0] < I.degs[y][0]; });
  Ideal out;
  out.ring = I.ring;
  // Generators are grouped by multidegree; each group is tested against the
  // span of multiples of everything accepted so far.
  std::map<std::pair<int, MDeg>, std::vector<std::size_t>> groups;
  for (auto g : order) groups[{I.degs[g][0], I.degs[g]}].push_back(g);
  for (const auto& [key, members] : groups) {
    const MDeg& m = key.second;
    const Bucket& target = R.bucket(m);
    Echelon E(target.size(), F);
    std::vector<std::uint32_t> row(target.size());
    auto fill = [&](const Monomial& mu, const MultiPoly& g) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& t : g.terms()) {
        long idx = target.find(mu * t.m);
        row[idx] = F.add(row[idx], t.c);
      }
    };
    for (std::size_t h = 0; h < out.size(); ++h) {
      const Bucket& mult = R.bucket(m - out.degs[h]);
      for (const auto& mu : mult.mons) {
        fill(mu, out.gens[h]);
        E.insert(row);
      }
    }
    for (auto g : members) {
      fill(Monomial{}, I.gens[g]);
      if (E.insert(row)) {
        out.gens.push_back(I.gens[g]);
        out.degs.push_back(I.degs[g]);
      }
    }
  }
  return out;
}

SyzygyBlock syzygy_generators(const Ideal& I, int D)
{
  SyzygyBlock out;
  out.gens = minimal_generators(I);
  out.bound = D;
  const Ideal& G = out.gens;
  const std::size_t N = G.size();
  if (N == 0) return out;
  int dmin = G.degs[0][0], dmax = dmin;
  for (const auto& d : G.degs) {
    dmin = std::min(dmin, d[0]);
    dmax = std::max(dmax, d[0]);
  }
  if (D < dmax) throw std::invalid_argument("syzygy bound D is below the largest generator degree");
  const Ring& R = *G.ring;
  const PrimeField& F = R.field();
  const std::uint32_t p = F.p();
  for (int e = dmin + 1; e <= D; ++e) {
    std::set<MDeg> cands;
    for (std::size_t k = 0; k < N; ++k)
      for (const auto& key : R.keys(e - G.degs[k][0])) cands.insert(G.degs[k] + key);
    for (const auto& m : cands) {
      std::vector<const Bucket*> src(N);
      std::vector<std::size_t> off(N);
      std::size_t S = 0;
      for (std::size_t k = 0; k < N; ++k) {
        src[k] = &R.bucket(m - G.degs[k]);
        off[k] = S;
        S += src[k]->size();
      }
      const Bucket& tgt = R.bucket(m);
      const std::size_t T = tgt.size();
      if (S == 0) continue;
      Echelon E(T + S, F);
      std::vector<std::uint32_t> row(T + S);
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < src[k]->size(); ++i) {
          std::fill(row.begin(), row.end(), 0);
          const Monomial& mu = src[k]->mons[i];
          for (const auto& t : G.gens[k].terms()) {
            long idx = tgt.find(mu * t.m);
            row[idx] = F.add(row[idx], t.c);
          }
          row[T + off[k] + i] = 1;
          E.insert(row);
        }
      std::vector<std::vector<std::uint32_t>> kernel;
      for (std::size_t r = 0; r < E.rank(); ++r)
        if (E.pivots()[r] >= T) kernel.emplace_back(E.row(r) + T, E.row(r) + T + S);
      if (kernel.empty()) continue;

      Echelon low(S, F);
      std::vector<std::uint32_t> v(S);
      for (std::size_t s = 0; s < out.syz.size(); ++s) {
        const Bucket& mult = R.bucket(m - out.syz_degs[s]);
        for (const auto& nu : mult.mons) {
          std::fill(v.begin(), v.end(), 0);
          for (std::size_t k = 0; k < N; ++k)
            for (const auto& t : out.syz[s].comp[k].terms()) {
              long idx = src[k]->find(nu * t.m);
              v[off[k] + idx] = F.add(v[off[k] + idx], t.c);
            }
          low.insert(v);
        }
      }
      for (const auto& kv : kernel) {
        if (!low.insert(kv)) continue;
        FreeVec s;
        for (std::size_t k = 0; k < N; ++k) {
          std::vector<Term> terms;
          for (std::size_t i = 0; i < src[k]->size(); ++i)
            if (kv[off[k] + i]) terms.push_back({src[k]->mons[i], kv[off[k] + i]});
          s.comp.push_back(MultiPoly::from_terms(R.nvars(), F, std::move(terms)));
        }
        out.syz.push_back(std::move(s));
        out.syz_degs.push_back(m);
      }
      (void)p;
    }
  }
  return out;
}

SyzygyBlock syzygy_generators(const MinorsIdeal& I, const DegreeData& d, int D)
{
  long long bound = mdr(d);
  if (D < 0) D = static_cast<int>(bound);
  SyzygyBlock out = syzygy_generators(I.ideal, D);
  out.complete = D >= bound;
  return out;
}

// Multidegree shifts delta with delta[0] = v for which some M_{src_k + delta}
// can be nonzero.
static std::set<MDeg> hom_shifts(const std::vector<MDeg>& src, const GradedModuleView& M, int v)
{
  std::set<MDeg> out;
  const Ring& R = *M.ring();
  for (const auto& d : src)
    for (std::size_t j = 0; j < M.rank(); ++j) {
      const MDeg& g = M.generator_degree(static_cast<int>(j));
      for (const auto& key : R.keys(d[0] + v - g[0])) out.insert(g + key - d);
    }
  return out;
}

long long hom_dim(const SyzygyBlock& I, const GradedModuleView& M, int v)
{
  if (I.gens.ring != M.ring()) throw std::invalid_argument("hom_dim: ideal and module live in different rings");
  const Ideal& G = I.gens;
  const std::size_t N = G.size(), S = I.syz.size();
  const PrimeField& F = M.ring()->field();
  long long total = 0;
  for (const auto& delta : hom_shifts(G.degs, M, v)) {
    std::vector<const Piece*> P(N);
    std::vector<std::size_t> coff(N);
    std::size_t unknowns = 0;
    for (std::size_t k = 0; k < N; ++k) {
      P[k] = &M.piece(G.degs[k] + delta);
      coff[k] = unknowns;
      unknowns += P[k]->dim;
    }
    if (unknowns == 0) continue;
    std::vector<const Piece*> Q(S);
    std::vector<std::size_t> roff(S);
    std::size_t rows = 0;
    for (std::size_t s = 0; s < S; ++s) {
      Q[s] = &M.piece(I.syz_degs[s] + delta);
      roff[s] = rows;
      rows += Q[s]->dim;
    }
    if (rows == 0) {
      total += static_cast<long long>(unknowns);
      continue;
    }
    DenseMatrix A(rows, unknowns);
    std::vector<std::uint64_t> acc;
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < P[k]->dim; ++i) {
        SparseVec x = M.basis_vector(*P[k], i);
        for (std::size_t s = 0; s < S; ++s) {
          const MultiPoly& f = I.syz[s].comp[k];
          if (f.is_zero() || Q[s]->dim == 0) continue;
          acc.assign(Q[s]->width, 0);
          M.multiply_into(*P[k], x, f, *Q[s], acc);
          auto y = M.coordinates(*Q[s], acc);
          for (std::size_t r = 0; r < y.size(); ++r) A.at(roff[s] + r, coff[k] + i) = y[r];
        }
      }
    total += static_cast<long long>(unknowns - rank(A, F));
  }
  return total;
}

long long coker_tensor_dim(const HomMatrix& m, const Ideal& J, int v)
{
  return GradedModuleView::coker(m, &J).dim(v);
}

long long coker_dim(const HomMatrix& m, int v)
{
  return GradedModuleView::coker(m).dim(v);
}

Ext1Result ext1_MI_dim(const HomMatrix& m)
{
  GradedModuleView MI = GradedModuleView::coker(m);
  const PrimeField& F = m.ring()->field();
  const int t = m.rows(), q = m.cols();
  std::vector<MDeg> srcs;
  for (int i = 0; i < t; ++i) srcs.push_back(m.row_degree(i));
  for (int j = 0; j < q; ++j) srcs.push_back(m.col_degree(j));
  Ext1Result out;
  for (const auto& delta : hom_shifts(srcs, MI, 0)) {
    std::vector<const Piece*> P(t), Q(q);
    std::vector<std::size_t> coff(t), roff(q);
    std::size_t dom = 0, cod = 0;
    for (int i = 0; i < t; ++i) {
      P[i] = &MI.piece(m.row_degree(i) + delta);
      coff[i] = dom;
      dom += P[i]->dim;
    }
    for (int j = 0; j < q; ++j) {
      Q[j] = &MI.piece(m.col_degree(j) + delta);
      roff[j] = cod;
      cod += Q[j]->dim;
    }
    if (dom == 0) {
      out.ext1 += static_cast<long long>(cod);
      continue;
    }
    DenseMatrix A(cod, dom);
    std::vector<std::uint64_t> acc;
    for (int i = 0; i < t; ++i)
      for (std::size_t b = 0; b < P[i]->dim; ++b) {
        SparseVec x = MI.basis_vector(*P[i], b);
        for (int j = 0; j < q; ++j) {
          if (m.at(i, j).is_zero() || Q[j]->dim == 0) continue;
          acc.assign(Q[j]->width, 0);
          MI.multiply_into(*P[i], x, m.at(i, j), *Q[j], acc);
          auto y = MI.coordinates(*Q[j], acc);
          for (std::size_t r = 0; r < y.size(); ++r) A.at(roff[j] + r, coff[i] + b) = y[r];
        }
      }
    std::size_t rk = cod ? rank(A, F) : 0;
    out.ext1 += static_cast<long long>(cod - rk);
    out.hom_MI_MI += static_cast<long long>(dom - rk);
  }
  out.conditional = out.hom_MI_MI != 1;
  return out;
}

long long subquotient_piece(const Ideal& IA, const Ideal& IB, int d)
{
  return GradedModuleView::subquotient(IA, IB).dim(d);
}

}  // namespace detloci
