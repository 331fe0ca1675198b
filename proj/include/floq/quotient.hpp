#pragma once

// Stickelberger solver: the points of the zero-dimensional variety are the
// joint eigenvalues of the multiplication operators on the quotient ring.
//
// Multiplication matrices come from an exact normal-form table (memoized
// reduction of border monomials v_i * b against the closed-form basis; the
// basis is monic so rational inputs stay rational). The spectrum machinery:
//
//   * complex Schur form of a seeded random real combination of the
//     transposed multiplication matrices,
//   * eigenvalue clusters found by splitting at the largest internal gap
//     until the cluster's coordinates validate against the generators
//     (multiple points at one spot scatter the eigensolver's output, so a
//     fixed threshold cannot be trusted; validation can),
//   * cluster coordinates recovered as the mean Rayleigh quotient of the
//     cluster's Schur vectors, i.e. the normalized trace of the compressed
//     multiplication operators,
//   * simple points polished by Newton iteration on the square system.

#include "floq/groebner.hpp"
#include "floq/parallel.hpp"
#include "floq/symmetry.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <map>
#include <random>

namespace floq {

template <class C>
using SparseVec = std::vector<std::pair<uint32_t, C>>;

template <class C>
struct QuotientRep {
  std::vector<Monomial> basis;
  // Exact provenance: normal forms of v_i * b in basis coordinates.
  std::vector<std::vector<SparseVec<C>>> columns;  // [var][basis index]
  std::vector<Eigen::MatrixXcd> mats;              // complex copies of M_{v_i}
  double max_rel_commutator = 0.0;
};

namespace detail {

template <class C>
class NormalFormTable {
 public:
  NormalFormTable(const GroebnerSystem<C>& G) : G_(G) {
    for (uint32_t i = 0; i < G.basis.size(); ++i) index_.emplace(G.basis[i], i);
    for (size_t k = 0; k < G.gens.size(); ++k) {
      Tail tail;
      tail.lc = G.gens[k].coefficient(G.lead[k]);
      for (const auto& [m, c] : G.gens[k].terms())
        if (!(m == G.lead[k])) tail.terms.emplace_back(m, c);
      tails_.push_back(std::move(tail));
    }
    scratch_.assign(G.basis.size(), domain_traits<C>::zero());
  }

  const SparseVec<C>& normal_form(const Monomial& m) {
    ensure(m);
    return memo_.at(m);
  }

 private:
  struct Tail {
    C lc;
    std::vector<std::pair<Monomial, C>> terms;
  };

  void ensure(const Monomial& target) {
    std::vector<Monomial> stack{target};
    while (!stack.empty()) {
      Monomial m = stack.back();
      if (memo_.count(m)) {
        stack.pop_back();
        continue;
      }
      auto bi = index_.find(m);
      if (bi != index_.end()) {
        memo_.emplace(std::move(m), SparseVec<C>{{bi->second, domain_traits<C>::one()}});
        stack.pop_back();
        continue;
      }
      int hit = -1;
      for (size_t k = 0; k < G_.lead.size(); ++k)
        if (G_.lead[k].divides(m)) {
          hit = (int)k;
          break;
        }
      if (hit < 0)
        throw std::logic_error("normal form table: irreducible monomial outside the basis");
      Monomial q = G_.lead[hit].quotient_of(m);
      bool ready = true;
      for (const auto& [tm, tc] : tails_[hit].terms) {
        Monomial dep = q * tm;
        if (!memo_.count(dep)) {
          if (ready) ready = false;
          stack.push_back(std::move(dep));
        }
      }
      if (!ready) continue;
      // m = LT(g)*q  =>  NF(m) = -(1/lc) sum_t c_t NF(q t)
      C neg_inv_lc = -domain_traits<C>::inv(tails_[hit].lc);
      touched_.clear();
      for (const auto& [tm, tc] : tails_[hit].terms) {
        const SparseVec<C>& dep = memo_.at(q * tm);
        C factor = neg_inv_lc * tc;
        for (const auto& [idx, val] : dep) {
          if (domain_traits<C>::is_zero(scratch_[idx])) touched_.push_back(idx);
          scratch_[idx] = scratch_[idx] + factor * val;
        }
      }
      SparseVec<C> out;
      out.reserve(touched_.size());
      std::sort(touched_.begin(), touched_.end());
      for (uint32_t idx : touched_) {
        if (!domain_traits<C>::is_zero(scratch_[idx])) out.emplace_back(idx, scratch_[idx]);
        scratch_[idx] = domain_traits<C>::zero();
      }
      memo_.emplace(std::move(m), std::move(out));
      stack.pop_back();
    }
  }

  const GroebnerSystem<C>& G_;
  std::unordered_map<Monomial, uint32_t, MonomialHash> index_;
  std::unordered_map<Monomial, SparseVec<C>, MonomialHash> memo_;
  std::vector<Tail> tails_;
  std::vector<C> scratch_;
  std::vector<uint32_t> touched_;
};

}  // namespace detail

//! Exact multiplication matrices M_{v_i} on C[v]/I in the standard monomial
//! basis. The extended variant is rejected (the quotient is not finite).
template <class C>
QuotientRep<C> multiplication_matrices(const GroebnerSystem<C>& G, size_t ceiling = 6000) {
  if (G.variant == Variant::ExtendedT || G.t_unbounded)
    throw std::invalid_argument(
        "multiplication_matrices: the t-extended ideal is not zero-dimensional");
  const size_t N = G.basis.size();
  if (N > ceiling)
    throw std::invalid_argument(
        "multiplication_matrices: basis size " + std::to_string(N) +
        " exceeds the ceiling; consider the specialized variant");
  QuotientRep<C> rep;
  rep.basis = G.basis;
  detail::NormalFormTable<C> table(G);
  rep.columns.resize(G.nvars);
  for (int i = 0; i < G.nvars; ++i) {
    rep.columns[i].resize(N);
    for (size_t j = 0; j < N; ++j) {
      Monomial m = G.basis[j] * Monomial::unit(G.table->size(), i);
      rep.columns[i][j] = table.normal_form(m);
    }
  }
  rep.mats.assign(G.nvars, Eigen::MatrixXcd::Zero(N, N));
  for (int i = 0; i < G.nvars; ++i)
    for (size_t j = 0; j < N; ++j)
      for (const auto& [idx, val] : rep.columns[i][j])
        rep.mats[i]((Eigen::Index)idx, (Eigen::Index)j) = domain_traits<C>::to_cd(val);

  // Commutator check: the quotient of a zero-dimensional ideal is
  // commutative, so any violation is numerical.
  std::vector<double> norms(G.nvars);
  for (int i = 0; i < G.nvars; ++i) norms[i] = rep.mats[i].norm();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < G.nvars; ++i)
    for (int j = i + 1; j < G.nvars; ++j) pairs.emplace_back(i, j);
  std::vector<double> rel(pairs.size(), 0.0);
  parallel_for(pairs.size(), [&](size_t p) {
    auto [i, j] = pairs[p];
    double c = (rep.mats[i] * rep.mats[j] - rep.mats[j] * rep.mats[i]).norm();
    double d = norms[i] * norms[j];
    rel[p] = d > 0 ? c / d : c;
  });
  for (double r : rel) rep.max_rel_commutator = std::max(rep.max_rel_commutator, r);
  return rep;
}

struct SolveOptions {
  uint64_t seed = 0;
  double cluster_tol = 1e-6;
  double residual_tol = 1e-8;
  size_t basis_ceiling = 6000;
};

struct SolvePoint {
  std::vector<CD> coords;
  int multiplicity = 1;
  double residual = 0.0;
  bool is_zero = false;
  int orbit_id = -1;
};

struct SolutionSet {
  Variant variant = Variant::Full;
  int n = 0;
  int nvars = 0;
  uint64_t seed = 0;
  double cluster_tol = 1e-6;
  double residual_tol = 1e-8;
  size_t basis_size = 0;
  double max_rel_commutator = 0.0;
  std::vector<SolvePoint> points;

  long long total_multiplicity() const {
    long long s = 0;
    for (const auto& p : points) s += p.multiplicity;
    return s;
  }
};

namespace detail {

// Unitary similarity swapping adjacent diagonal entries of a triangular T.
inline void schur_swap(Eigen::MatrixXcd& T, Eigen::MatrixXcd& Q, int i) {
  using Eigen::MatrixXcd;
  const Eigen::Index n = T.rows();
  CD f = T(i, i + 1);
  CD g = T(i + 1, i + 1) - T(i, i);
  double r = std::sqrt(std::norm(f) + std::norm(g));
  Eigen::Matrix2cd U;
  if (r == 0.0) {
    U << CD(0, 0), CD(1, 0), CD(1, 0), CD(0, 0);
  } else if (std::abs(g) == 0.0) {
    return;  // defective pair with equal eigenvalues: order is immaterial
  } else {
    CD u11 = f / r, u21 = g / r;
    U << u11, -std::conj(u21), u21, std::conj(u11);
  }
  T.block(i, 0, 2, n) = (U.adjoint() * T.block(i, 0, 2, n)).eval();
  T.block(0, i, n, 2) = (T.block(0, i, n, 2) * U).eval();
  Q.block(0, i, n, 2) = (Q.block(0, i, n, 2) * U).eval();
  T(i + 1, i) = CD(0, 0);
}

// Orthonormal basis of the invariant subspace spanned by the cluster's
// Schur vectors: bring those diagonal positions to the front of copies.
inline Eigen::MatrixXcd cluster_subspace(const Eigen::MatrixXcd& T,
                                         const Eigen::MatrixXcd& Q,
                                         std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  Eigen::MatrixXcd T2 = T, Q2 = Q;
  int target = 0;
  for (int idx : positions) {
    for (int p = idx; p > target; --p) schur_swap(T2, Q2, p - 1);
    ++target;
  }
  return Q2.leftCols(target);
}

// Eigenvector of T for the (assumed simple) eigenvalue at diagonal
// position p, by back-substitution.
inline Eigen::VectorXcd schur_eigenvector(const Eigen::MatrixXcd& T,
                                          const Eigen::MatrixXcd& Q, int p) {
  const CD lam = T(p, p);
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(p + 1);
  y(p) = CD(1, 0);
  const double floor_d = 1e-300 + 1e-14 * T.norm();
  for (int i = p - 1; i >= 0; --i) {
    CD s(0, 0);
    for (int j = i + 1; j <= p; ++j) s += T(i, j) * y(j);
    CD d = T(i, i) - lam;
    if (std::abs(d) < floor_d) d = CD(floor_d, 0);
    y(i) = -s / d;
  }
  Eigen::VectorXcd w = Q.leftCols(p + 1) * y;
  w.normalize();
  return w;
}

// Prim MST over complex values; returns the edges (a, b, weight).
struct MstEdge {
  int a, b;
  double w;
};

inline std::vector<MstEdge> mst_edges(const std::vector<CD>& vals) {
  const int k = (int)vals.size();
  std::vector<MstEdge> edges;
  if (k <= 1) return edges;
  std::vector<char> in(k, 0);
  std::vector<double> best(k, 1e300);
  std::vector<int> from(k, 0);
  in[0] = 1;
  for (int j = 1; j < k; ++j) {
    best[j] = std::abs(vals[j] - vals[0]);
    from[j] = 0;
  }
  for (int step = 1; step < k; ++step) {
    int pick = -1;
    for (int j = 0; j < k; ++j)
      if (!in[j] && (pick < 0 || best[j] < best[pick])) pick = j;
    in[pick] = 1;
    edges.push_back({from[pick], pick, best[pick]});
    for (int j = 0; j < k; ++j)
      if (!in[j]) {
        double w = std::abs(vals[j] - vals[pick]);
        if (w < best[j]) {
          best[j] = w;
          from[j] = pick;
        }
      }
  }
  return edges;
}

// Split a cluster at its largest internal gap (largest MST edge).
inline std::pair<std::vector<int>, std::vector<int>> split_largest_gap(
    const std::vector<int>& members, const std::vector<CD>& evals) {
  std::vector<CD> vals;
  vals.reserve(members.size());
  for (int i : members) vals.push_back(evals[i]);
  auto edges = mst_edges(vals);
  size_t cut = 0;
  for (size_t e = 1; e < edges.size(); ++e)
    if (edges[e].w > edges[cut].w) cut = e;
  // components of the MST with the cut edge removed
  std::vector<std::vector<int>> adj(members.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    if (e == cut) continue;
    adj[edges[e].a].push_back(edges[e].b);
    adj[edges[e].b].push_back(edges[e].a);
  }
  std::vector<char> mark(members.size(), 0);
  std::vector<int> stack{edges[cut].a};
  mark[edges[cut].a] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!mark[y]) {
        mark[y] = 1;
        stack.push_back(y);
      }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (size_t j = 0; j < members.size(); ++j)
    (mark[j] ? parts.first : parts.second).push_back(members[j]);
  return parts;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace detail

//! Eigen-solve the variety of G through a prepared QuotientRep.
template <class C>
SolutionSet solve_variety(const GroebnerSystem<C>& G, const QuotientRep<C>& rep,
                          const SolveOptions& opts = {}) {
  using Eigen::MatrixXcd;
  using Eigen::VectorXcd;
  const int nv = G.nvars;
  const Eigen::Index N = (Eigen::Index)rep.basis.size();

  // Complex generators and Jacobian for residuals and Newton polish.
  std::vector<MultiPoly<CD>> gens;
  std::vector<std::vector<MultiPoly<CD>>> jac;
  std::vector<double> gnorm;  // 1-norms of the generator coefficients
  for (const auto& g : G.gens) gens.push_back(to_complex_poly(g));
  for (const auto& g : gens) {
    std::vector<MultiPoly<CD>> row;
    for (int i = 0; i < nv; ++i) row.push_back(g.derivative(i));
    jac.push_back(std::move(row));
    double s = 0;
    for (const auto& [m, c] : g.terms()) s += std::abs(c);
    gnorm.push_back(s);
  }
  auto residual_at = [&](const std::vector<CD>& x) {
    double r = 0;
    for (const auto& g : gens) r = std::max(r, std::abs(g.evaluate_point(x)));
    return r;
  };
  // Cluster validation compares against the coefficient scale.
  auto rel_residual_at = [&](const std::vector<CD>& x) {
    double r = 0;
    for (size_t k = 0; k < gens.size(); ++k)
      r = std::max(r, std::abs(gens[k].evaluate_point(x)) / (1.0 + gnorm[k]));
    return r;
  };

  // Transposed multiplication matrices: left eigenvectors carry the
  // evaluation functionals, so the transposes have the points as joint
  // eigenvalues with Rayleigh-readable coordinates.
  std::vector<MatrixXcd> NT;
  for (const auto& M : rep.mats) NT.push_back(M.transpose());

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> comb(nv);
  for (auto& c : comb) c = unit(rng);
  MatrixXcd Nxi = MatrixXcd::Zero(N, N);
  for (int i = 0; i < nv; ++i) Nxi += comb[i] * NT[i];

  Eigen::ComplexSchur<MatrixXcd> schur(Nxi, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("solve_variety: Schur decomposition failed");
  const MatrixXcd& T = schur.matrixT();
  const MatrixXcd& Q = schur.matrixU();
  std::vector<CD> evals(N);
  for (Eigen::Index i = 0; i < N; ++i) evals[i] = T(i, i);

  auto rayleigh = [&](const VectorXcd& w) {
    std::vector<CD> x(nv);
    for (int i = 0; i < nv; ++i) x[i] = w.dot(NT[i] * w);
    return x;
  };
  double fscale = 1.0;
  for (double s : gnorm) fscale = std::max(fscale, s);
  auto newton = [&](std::vector<CD> x) {
    Eigen::MatrixXcd J(nv, nv);
    Eigen::VectorXcd F(nv);
    double best = residual_at(x);
    std::vector<CD> bestx = x;
    for (int iter = 0; iter < 40; ++iter) {
      for (int k = 0; k < nv; ++k) F(k) = gens[k].evaluate_point(x);
      if (F.lpNorm<Eigen::Infinity>() < 1e-15 * fscale) break;
      for (int k = 0; k < nv; ++k)
        for (int i = 0; i < nv; ++i) J(k, i) = jac[k][i].evaluate_point(x);
      Eigen::VectorXcd dx = J.partialPivLu().solve(-F);
      if (!dx.allFinite()) break;
      for (int i = 0; i < nv; ++i) x[i] += dx(i);
      double r = residual_at(x);
      if (r < best) {
        best = r;
        bestx = x;
      }
      if (dx.lpNorm<Eigen::Infinity>() < 1e-14) break;
    }
    return bestx;
  };

  // Validated clustering: split at the largest internal eigenvalue gap until
  // the cluster certifies as a single point. A cluster passes when
  //   (a) the generators vanish at the trace coordinates,
  //   (b) every member eigenvalue lies in a window around xi(x): genuine
  //       multiple points scatter the eigensolver output, so the window must
  //       absorb that scatter while rejecting far-apart merges, and
  //   (c) the centered compressions B_i = A_i - x_i I have vanishing
  //       tr(B_i^p)/k for p = 2, 3, 4, where A_i compresses N_i to the
  //       cluster subspace. For one point the B_i are nilpotent and these
  //       traces are exactly zero; merges that fool (a) and (b) by symmetry
  //       (p with -p has mean 0, which is itself a root; the quadruple
  //       {p, -p, conj p, -conj p} even cancels the second moment when p^2
  //       is imaginary) leave a nonzero moment at p = 2 or p = 4.
  double spectral_scale = 1.0;
  for (const auto& ev : evals) spectral_scale = std::max(spectral_scale, std::abs(ev));
  const double lambda_window_ = 0.25 * spectral_scale;
  const double moment_tol_ = 1e-6 * spectral_scale * spectral_scale;

  struct Accepted {
    std::vector<CD> coords;
    int mult;
    double residual;
    std::vector<int> positions;
  };
  std::vector<Accepted> accepted;

  // Certify a candidate cluster; on success fills in the trace coordinates.
  auto certify = [&](const std::vector<int>& members,
                     std::vector<CD>& x_out) -> bool {
    const int k = (int)members.size();
    const bool full_space = (k == (int)N);
    MatrixXcd P;
    if (!full_space) P = detail::cluster_subspace(T, Q, members);
    std::vector<CD> x(nv);
    for (int i = 0; i < nv; ++i) {
      if (full_space)
        x[i] = NT[i].trace() / (double)k;
      else
        x[i] = (P.conjugate().cwiseProduct(NT[i] * P)).sum() / (double)k;
    }
    bool ok = rel_residual_at(x) <= opts.residual_tol;
    if (ok) {
      CD xi_bar(0, 0);
      for (int i = 0; i < nv; ++i) xi_bar += comb[i] * x[i];
      for (int j = 0; j < k && ok; ++j)
        if (std::abs(evals[members[j]] - xi_bar) > lambda_window_) ok = false;
    }
    if (ok) {
      for (int i = 0; i < nv && ok; ++i) {
        MatrixXcd B = full_space ? NT[i] : MatrixXcd(P.adjoint() * (NT[i] * P));
        B.diagonal().array() -= x[i];
        MatrixXcd B2 = B * B;
        if (std::abs(B2.trace()) / k > moment_tol_ ||
            std::abs((B2 * B).trace()) / k > moment_tol_ * spectral_scale ||
            std::abs((B2 * B2).trace()) / k > moment_tol_ * spectral_scale * spectral_scale)
          ok = false;
      }
    }
    if (ok) x_out = std::move(x);
    return ok;
  };

  std::vector<std::vector<int>> work;
  {
    std::vector<int> all(N);
    for (Eigen::Index i = 0; i < N; ++i) all[(size_t)i] = (int)i;
    work.push_back(std::move(all));
  }
  while (!work.empty()) {
    std::vector<int> members = std::move(work.back());
    work.pop_back();
    const int k = (int)members.size();
    if (k == 1) {
      VectorXcd w = detail::schur_eigenvector(T, Q, members[0]);
      std::vector<CD> x = newton(rayleigh(w));
      double r = residual_at(x);
      accepted.push_back({std::move(x), 1, r, members});
      continue;
    }
    auto split = [&] {
      auto [a, b] = detail::split_largest_gap(members, evals);
      if (a.empty() || b.empty())
        throw std::logic_error("solve_variety: cluster split failed");
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    };
    // cheap pre-check: no candidate point is consistent with a cluster
    // whose eigenvalue diameter exceeds the window
    double diam = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        diam = std::max(diam, std::abs(evals[members[a]] - evals[members[b]]));
    if (diam > 2 * lambda_window_) {
      split();
      continue;
    }
    std::vector<CD> x;
    if (certify(members, x)) {
      double r = residual_at(x);
      accepted.push_back({std::move(x), k, r, members});
    } else {
      split();
    }
  }

  // Repair pass. A point of high multiplicity can scatter its eigenvalues
  // wide enough (Jordan conditioning) that the gap-splitting shreds its
  // cluster into singletons, and Newton stalls at ~eps^(1/mult) from such a
  // root. Those fragments are recognizable by their residuals; re-uniting
  // their Schur positions gives the complete invariant subspace, which the
  // certificates accept exactly.
  {
    std::vector<size_t> frag;
    for (size_t i = 0; i < accepted.size(); ++i)
      if (accepted[i].mult == 1 && accepted[i].residual > opts.residual_tol * (1.0 + fscale))
        frag.push_back(i);
    if (!frag.empty()) {
      detail::UnionFind uf((int)frag.size());
      const double frag_link = 0.05 * spectral_scale;
      for (size_t a = 0; a < frag.size(); ++a)
        for (size_t b = a + 1; b < frag.size(); ++b)
          if (points_close(accepted[frag[a]].coords, accepted[frag[b]].coords, frag_link))
            uf.unite((int)a, (int)b);
      std::map<int, std::vector<size_t>> groups;
      for (size_t a = 0; a < frag.size(); ++a)
        groups[uf.find((int)a)].push_back(frag[a]);
      std::vector<char> dead(accepted.size(), 0);
      std::vector<Accepted> repaired;
      for (const auto& [root, members_idx] : groups) {
        if (members_idx.size() < 2) continue;
        std::vector<int> positions;
        for (size_t ai : members_idx)
          positions.insert(positions.end(), accepted[ai].positions.begin(),
                           accepted[ai].positions.end());
        std::vector<CD> x;
        if (certify(positions, x)) {
          double r = residual_at(x);
          repaired.push_back({std::move(x), (int)positions.size(), r, positions});
          for (size_t ai : members_idx) dead[ai] = 1;
        }
      }
      if (!repaired.empty()) {
        std::vector<Accepted> keep;
        for (size_t i = 0; i < accepted.size(); ++i)
          if (!dead[i]) keep.push_back(std::move(accepted[i]));
        for (auto& a : repaired) keep.push_back(std::move(a));
        accepted = std::move(keep);
      }
    }
  }

  // Merge accepted clusters that sit at the same point.
  detail::UnionFind uf((int)accepted.size());
  for (size_t i = 0; i < accepted.size(); ++i)
    for (size_t j = i + 1; j < accepted.size(); ++j)
      if (points_close(accepted[i].coords, accepted[j].coords, opts.cluster_tol))
        uf.unite((int)i, (int)j);
  std::map<int, SolvePoint> merged;
  for (size_t i = 0; i < accepted.size(); ++i) {
    int root = uf.find((int)i);
    auto [it, fresh] = merged.try_emplace(root);
    SolvePoint& pt = it->second;
    if (fresh) {
      pt.coords = accepted[i].coords;
      pt.multiplicity = accepted[i].mult;
    } else {
      // keep the representative with the smallest residual
      if (residual_at(accepted[i].coords) < residual_at(pt.coords))
        pt.coords = accepted[i].coords;
      pt.multiplicity += accepted[i].mult;
    }
  }

  SolutionSet sol;
  sol.variant = G.variant;
  sol.n = G.n;
  sol.nvars = nv;
  sol.seed = opts.seed;
  sol.cluster_tol = opts.cluster_tol;
  sol.residual_tol = opts.residual_tol;
  sol.basis_size = rep.basis.size();
  sol.max_rel_commutator = rep.max_rel_commutator;
  for (auto& [root, pt] : merged) {
    pt.residual = residual_at(pt.coords);
    pt.is_zero = true;
    for (const auto& c : pt.coords)
      if (std::abs(c) > opts.cluster_tol) pt.is_zero = false;
    sol.points.push_back(std::move(pt));
  }
  std::sort(sol.points.begin(), sol.points.end(), [&](const SolvePoint& a, const SolvePoint& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return detail::lex_less(a.coords, b.coords, 1e-9);
  });
  if (sol.total_multiplicity() != (long long)rep.basis.size())
    throw std::logic_error("solve_variety: multiplicities do not sum to |B|");

  // Orbit labels under the variant's symmetry group.
  auto group = group_for_variant(G.variant == Variant::Specialized, nv);
  detail::UnionFind orbits((int)sol.points.size());
  for (size_t i = 0; i < sol.points.size(); ++i)
    for (size_t j = i + 1; j < sol.points.size(); ++j)
      for (const auto& g : group)
        if (points_close(apply_symmetry(g, sol.points[i].coords), sol.points[j].coords,
                         opts.cluster_tol)) {
          orbits.unite((int)i, (int)j);
          break;
        }
  std::map<int, int> orbit_rep;
  for (size_t i = 0; i < sol.points.size(); ++i) {
    int root = orbits.find((int)i);
    auto [it, fresh] = orbit_rep.try_emplace(root, (int)i);
    sol.points[i].orbit_id = it->second;
  }
  return sol;
}

//! Convenience: build the quotient and solve in one call.
template <class C>
SolutionSet solve_variety(const GroebnerSystem<C>& G, const SolveOptions& opts = {}) {
  QuotientRep<C> rep = multiplication_matrices(G, opts.basis_ceiling);
  return solve_variety(G, rep, opts);
}

//! One row of the findings tables.
struct SummaryRow {
  long long mult_at_zero = 0;
  long long mult_nonzero = 0;
  long long unique_points = 0;
  long long unique_mod_dihedral = 0;  // full variant; = unique_mod_all otherwise
  long long unique_mod_all = 0;
  long long singular_mod_dihedral = 0;
  std::map<long long, long long> mult_counts;
  long long conjecture2_count = 0;
};

inline SummaryRow summarize(const SolutionSet& sol) {
  SummaryRow row;
  row.unique_points = (long long)sol.points.size();
  for (const auto& p : sol.points) {
    if (p.is_zero)
      row.mult_at_zero += p.multiplicity;
    else
      row.mult_nonzero += p.multiplicity;
    row.mult_counts[p.multiplicity] += 1;
  }
  const bool specialized = sol.variant == Variant::Specialized;
  auto count_orbits = [&](const std::vector<SymmetryElement>& group, bool singular_only,
                          bool nonzero_only = false) {
    std::vector<int> idx;
    for (size_t i = 0; i < sol.points.size(); ++i) {
      if (singular_only && sol.points[i].multiplicity <= 1) continue;
      if (nonzero_only && sol.points[i].is_zero) continue;
      idx.push_back((int)i);
    }
    detail::UnionFind uf((int)idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        for (const auto& g : group)
          if (points_close(apply_symmetry(g, sol.points[idx[a]].coords),
                           sol.points[idx[b]].coords, sol.cluster_tol)) {
            uf.unite((int)a, (int)b);
            break;
          }
    long long k = 0;
    for (size_t a = 0; a < idx.size(); ++a)
      if (uf.find((int)a) == (int)a) ++k;
    return k;
  };
  auto full = group_for_variant(specialized, sol.nvars);
  if (specialized) {
    // Table-2 convention: orbits of all unique points under {+-, conj}.
    row.unique_mod_all = count_orbits(full, false);
    row.unique_mod_dihedral = row.unique_mod_all;
  } else {
    // Table-1 conventions: the dihedral column counts every point, the
    // all-symmetries column counts nonzero points only (the origin stands
    // alone when nothing else is there).
    row.unique_mod_dihedral = count_orbits(dihedral_group(sol.nvars), false);
    row.unique_mod_all = count_orbits(full, false, /*nonzero_only=*/true);
    if (row.unique_mod_all == 0 && !sol.points.empty()) row.unique_mod_all = 1;
  }
  row.singular_mod_dihedral =
      count_orbits(specialized ? full : dihedral_group(sol.nvars), true);
  if (!specialized)
    for (const auto& p : sol.points)
      if (!p.is_zero &&
          conjecture_form_check(p.coords, ConjectureForm::C2ConjPalindromic, sol.cluster_tol))
        ++row.conjecture2_count;
  return row;
}

}  // namespace floq
