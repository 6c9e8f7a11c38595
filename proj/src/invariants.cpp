#include "obkirby/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "obkirby/errors.hpp"

namespace ob {

namespace {

using detail::Big;
using detail::cmp;
using detail::cmp_abs;
using detail::divexact;
using detail::divmod;
using detail::nearest_div;
using detail::to_longlong;

// Dense matrix of arbitrary-precision integers. The Smith normal form runs
// entirely in exact arithmetic and narrows back to 64-bit entries only at
// the very end, so no intermediate value can overflow.
struct BigMat {
  int rows = 0, cols = 0;
  std::vector<Big> a;

  BigMat(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  static BigMat of(const IntMat& m) {
    BigMat b(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) b.at(r, c) = Big(m(r, c));
    return b;
  }

  static BigMat identity(int n) {
    BigMat b(n, n);
    for (int i = 0; i < n; ++i) b.at(i, i) = Big(1);
    return b;
  }

  Big& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Big& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  // row dst += k * row src
  void add_row(int dst, int src, const Big& k) {
    for (int c = 0; c < cols; ++c) at(dst, c) = at(dst, c) + k * at(src, c);
  }
  // col dst += k * col src
  void add_col(int dst, int src, const Big& k) {
    for (int r = 0; r < rows; ++r) at(r, dst) = at(r, dst) + k * at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
};

BigMat big_mul(const BigMat& x, const BigMat& y) {
  BigMat p(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const Big& s = x.at(r, k);
      if (s.is_zero()) continue;
      for (int c = 0; c < y.cols; ++c) {
        if (y.at(k, c).is_zero()) continue;
        p.at(r, c) = p.at(r, c) + s * y.at(k, c);
      }
    }
  return p;
}

// Index of the entry with smallest non-zero absolute value in the submatrix
// starting at (t, t); {-1, -1} if that submatrix is zero.
std::pair<int, int> smallest_pivot(const BigMat& m, int t) {
  std::pair<int, int> best{-1, -1};
  const Big* best_abs = nullptr;
  for (int r = t; r < m.rows; ++r)
    for (int c = t; c < m.cols; ++c) {
      const Big& x = m.at(r, c);
      if (x.is_zero()) continue;
      if (!best_abs || cmp_abs(x, *best_abs) < 0) {
        best = {r, c};
        best_abs = &x;
      }
    }
  return best;
}

// Diagonalise d by integer row/column operations, mirroring every operation
// into the witnesses u and v, and return the rank. Re-selecting the globally
// smallest entry as pivot on every sweep and rounding quotients to nearest
// keeps intermediate entries from exploding.
int eliminate(BigMat& d, BigMat& u, BigMat& v) {
  const int bound = std::min(d.rows, d.cols);
  for (int t = 0; t < bound; ++t) {
    for (;;) {
      auto [pr, pc] = smallest_pivot(d, t);
      if (pr < 0) return t;  // the rest of the matrix is zero
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (int r = t + 1; r < d.rows; ++r) {
        if (d.at(r, t).is_zero()) continue;
        Big q = -nearest_div(d.at(r, t), d.at(t, t));
        if (!q.is_zero()) {
          d.add_row(r, t, q);
          u.add_row(r, t, q);
        }
        if (!d.at(r, t).is_zero()) clean = false;
      }
      for (int c = t + 1; c < d.cols; ++c) {
        if (d.at(t, c).is_zero()) continue;
        Big q = -nearest_div(d.at(t, c), d.at(t, t));
        if (!q.is_zero()) {
          d.add_col(c, t, q);
          v.add_col(c, t, q);
        }
        if (!d.at(t, c).is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the remaining submatrix; if it does not, fold
      // the offending row in — reducing it leaves a remainder at most half
      // the pivot, so the pivot shrinks on the next sweep.
      int bad = -1;
      for (int r = t + 1; r < d.rows && bad < 0; ++r)
        for (int c = t + 1; c < d.cols; ++c) {
          if (d.at(r, c).is_zero()) continue;
          Big q, rem;
          divmod(d.at(r, c), d.at(t, t), q, rem);
          if (!rem.is_zero()) {
            bad = r;
            break;
          }
        }
      if (bad < 0) break;
      d.add_row(t, bad, Big(1));
      u.add_row(t, bad, Big(1));
    }

    if (d.at(t, t).sign < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return bound;
}

// Lattice reduction (integral LLL with exact Gram–Schmidt data) over a list
// of row vectors. Swaps are permitted only between neighbours in the same
// `block` group, and every basis change is mirrored through the callbacks,
// so constrained bases — where only some reorderings are legal — can be
// reduced in place.
//   on_addmul(i, j, c): row i += c * row j was applied (j < i)
//   on_swap(i, j):      rows i and j were exchanged (j == i - 1)
template <typename AddMul, typename Swap>
void lll_rows(std::vector<std::vector<Big>>& z, const std::vector<int>& block,
              AddMul on_addmul, Swap on_swap) {
  const int m = static_cast<int>(z.size());
  if (m < 2) return;
  const std::size_t n = z[0].size();

  auto dot = [&](int i, int j) {
    Big s;
    for (std::size_t c = 0; c < n; ++c) s = s + z[static_cast<std::size_t>(i)][c] * z[static_cast<std::size_t>(j)][c];
    return s;
  };

  // dd[i+1] is the Gram determinant of the first i+1 rows; lam[i][j] is the
  // Gram–Schmidt coefficient mu(i, j) scaled by dd[j+1]. Both stay integral
  // throughout, so every division below is exact.
  std::vector<Big> dd(static_cast<std::size_t>(m) + 1, Big(1));
  std::vector<std::vector<Big>> lam(static_cast<std::size_t>(m),
                                    std::vector<Big>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      Big t = dot(i, j);
      for (int k = 0; k < j; ++k)
        t = divexact(dd[static_cast<std::size_t>(k) + 1] * t - lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * lam[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                     dd[static_cast<std::size_t>(k)]);
      if (j < i)
        lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
      else
        dd[static_cast<std::size_t>(i) + 1] = t;
    }

  auto L = [&lam](int i, int j) -> Big& {
    return lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  auto D = [&dd](int i) -> Big& { return dd[static_cast<std::size_t>(i)]; };

  // Make |mu(k, l)| <= 1/2 by subtracting the nearest multiple of row l.
  auto red = [&](int k, int l) {
    if (cmp_abs(L(k, l) + L(k, l), D(l + 1)) <= 0) return;
    Big r = nearest_div(L(k, l), D(l + 1));
    Big nr = -r;
    for (std::size_t c = 0; c < n; ++c)
      z[static_cast<std::size_t>(k)][c] = z[static_cast<std::size_t>(k)][c] + nr * z[static_cast<std::size_t>(l)][c];
    on_addmul(k, l, nr);
    L(k, l) = L(k, l) - r * D(l + 1);
    for (int j = 0; j < l; ++j) L(k, j) = L(k, j) - r * L(l, j);
  };

  int k = 1;
  while (k < m) {
    red(k, k - 1);
    bool swap_rows = false;
    if (block[static_cast<std::size_t>(k)] == block[static_cast<std::size_t>(k) - 1]) {
      // Lovász condition in integral form: exchange when
      // 4 * (dd[k+1] * dd[k-1] + lam[k][k-1]^2) < 3 * dd[k]^2.
      Big lhs = (D(k + 1) * D(k - 1) + L(k, k - 1) * L(k, k - 1)) * Big(4);
      Big rhs = D(k) * D(k) * Big(3);
      swap_rows = cmp(lhs, rhs) < 0;
    }
    if (swap_rows) {
      std::swap(z[static_cast<std::size_t>(k)], z[static_cast<std::size_t>(k) - 1]);
      on_swap(k, k - 1);
      for (int j = 0; j + 1 < k; ++j) std::swap(L(k, j), L(k - 1, j));
      const Big l0 = L(k, k - 1);
      const Big b = divexact(D(k - 1) * D(k + 1) + l0 * l0, D(k));
      for (int i = k + 1; i < m; ++i) {
        Big t = L(i, k);
        L(i, k) = divexact(D(k + 1) * L(i, k - 1) - l0 * t, D(k));
        L(i, k - 1) = divexact(b * t + l0 * L(i, k), D(k + 1));
      }
      D(k) = b;
      k = std::max(1, k - 1);
    } else {
      for (int l = k - 2; l >= 0; --l) red(k, l);
      ++k;
    }
  }
}

// Elimination leaves witness entries far larger than anything in the input
// or the result. Any unimodular pair (l, m) with l * d * m == d can be
// absorbed as (u, v) -> (l * u, v * m); the moves below enumerate exactly
// such pairs and use them to lattice-reduce the witnesses.

// Rows 0..rank-1 of u, in coordinates z_i = (D/d_i) * u_i (D the largest
// invariant factor) so that the legal stabiliser moves become free lattice
// moves: z_i += c * z_j for j < i corresponds to the pair
//   u.row(i) += c * (d_i / d_j) * u.row(j),   v.col(j) -= c * v.col(i),
// (integral because d_j | d_i), and neighbouring rows may swap exactly when
// their diagonal entries are equal.
void reduce_ranked_rows(BigMat& u, BigMat& v, const std::vector<Big>& diag) {
  const int rank = static_cast<int>(diag.size());
  if (rank < 2) return;
  std::vector<int> block(static_cast<std::size_t>(rank), 0);
  for (std::size_t i = 1; i < block.size(); ++i)
    block[i] = (diag[i] == diag[i - 1]) ? block[i - 1] : block[i - 1] + 1;
  const Big& top = diag[static_cast<std::size_t>(rank) - 1];
  std::vector<std::vector<Big>> z(static_cast<std::size_t>(rank),
                                  std::vector<Big>(static_cast<std::size_t>(u.cols)));
  for (int i = 0; i < rank; ++i) {
    Big scale = divexact(top, diag[static_cast<std::size_t>(i)]);
    for (int c = 0; c < u.cols; ++c)
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = scale * u.at(i, c);
  }
  lll_rows(
      z, block,
      [&](int i, int j, const Big& c) {
        u.add_row(i, j, c * divexact(diag[static_cast<std::size_t>(i)],
                                     diag[static_cast<std::size_t>(j)]));
        v.add_col(j, i, -c);
      },
      [&](int i, int j) {
        u.swap_rows(i, j);
        v.swap_cols(i, j);
      });
}

// Mirror image on the columns of v: w_i = (D/d_i) * v.col(i), a move
// w_i += c * w_j pairs v.col(i) += c * (d_i / d_j) * v.col(j) with
// u.row(j) -= c * u.row(i).
void reduce_ranked_cols(BigMat& u, BigMat& v, const std::vector<Big>& diag) {
  const int rank = static_cast<int>(diag.size());
  if (rank < 2) return;
  std::vector<int> block(static_cast<std::size_t>(rank), 0);
  for (std::size_t i = 1; i < block.size(); ++i)
    block[i] = (diag[i] == diag[i - 1]) ? block[i - 1] : block[i - 1] + 1;
  const Big& top = diag[static_cast<std::size_t>(rank) - 1];
  std::vector<std::vector<Big>> z(static_cast<std::size_t>(rank),
                                  std::vector<Big>(static_cast<std::size_t>(v.rows)));
  for (int i = 0; i < rank; ++i) {
    Big scale = divexact(top, diag[static_cast<std::size_t>(i)]);
    for (int r = 0; r < v.rows; ++r)
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = scale * v.at(r, i);
  }
  lll_rows(
      z, block,
      [&](int i, int j, const Big& c) {
        v.add_col(i, j, c * divexact(diag[static_cast<std::size_t>(i)],
                                     diag[static_cast<std::size_t>(j)]));
        u.add_row(j, i, -c);
      },
      [&](int i, int j) {
        v.swap_cols(i, j);
        u.swap_rows(i, j);
      });
}

// Rows of u past the rank multiply only zero rows of the diagonal, so any
// unimodular mixing among them needs no compensation in v at all.
void reduce_free_rows(BigMat& u, int rank) {
  const int nfree = u.rows - rank;
  if (nfree < 2) return;
  std::vector<std::vector<Big>> z(static_cast<std::size_t>(nfree),
                                  std::vector<Big>(static_cast<std::size_t>(u.cols)));
  for (int i = 0; i < nfree; ++i)
    for (int c = 0; c < u.cols; ++c)
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = u.at(rank + i, c);
  std::vector<int> block(static_cast<std::size_t>(nfree), 0);
  lll_rows(
      z, block,
      [&](int i, int j, const Big& c) { u.add_row(rank + i, rank + j, c); },
      [&](int i, int j) { u.swap_rows(rank + i, rank + j); });
}

void reduce_free_cols(BigMat& v, int rank) {
  const int nfree = v.cols - rank;
  if (nfree < 2) return;
  std::vector<std::vector<Big>> z(static_cast<std::size_t>(nfree),
                                  std::vector<Big>(static_cast<std::size_t>(v.rows)));
  for (int i = 0; i < nfree; ++i)
    for (int r = 0; r < v.rows; ++r)
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = v.at(r, rank + i);
  std::vector<int> block(static_cast<std::size_t>(nfree), 0);
  lll_rows(
      z, block,
      [&](int i, int j, const Big& c) { v.add_col(rank + i, rank + j, c); },
      [&](int i, int j) { v.swap_cols(rank + i, rank + j); });
}

// Shrink every ranked row of u against the free rows (adding a free row into
// a ranked row needs no compensation either, since it contributes nothing to
// u * a). The free rows should already be lattice-reduced.
void cross_reduce_rows(BigMat& u, int rank) {
  if (rank >= u.rows) return;
  auto row_dot = [&](int i, int j) {
    Big s;
    for (int c = 0; c < u.cols; ++c) s = s + u.at(i, c) * u.at(j, c);
    return s;
  };
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = rank; j < u.rows; ++j) {
        Big c = nearest_div(row_dot(i, j), row_dot(j, j));
        if (c.is_zero()) continue;
        u.add_row(i, j, -c);
        changed = true;
      }
    if (!changed) break;
  }
}

void cross_reduce_cols(BigMat& v, int rank) {
  if (rank >= v.cols) return;
  auto col_dot = [&](int i, int j) {
    Big s;
    for (int r = 0; r < v.rows; ++r) s = s + v.at(r, i) * v.at(r, j);
    return s;
  };
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = rank; j < v.cols; ++j) {
        Big c = nearest_div(col_dot(i, j), col_dot(j, j));
        if (c.is_zero()) continue;
        v.add_col(i, j, -c);
        changed = true;
      }
    if (!changed) break;
  }
}

// Largest absolute entry across both witnesses, with the total limb count as
// a tiebreaker — the quantity the reduction is trying to shrink.
std::pair<Big, std::size_t> witness_size(const BigMat& u, const BigMat& v) {
  Big peak;
  std::size_t limbs = 0;
  for (const Big& x : u.a) {
    limbs += x.mag.size();
    if (cmp_abs(x, peak) > 0) peak = x;
  }
  for (const Big& x : v.a) {
    limbs += x.mag.size();
    if (cmp_abs(x, peak) > 0) peak = x;
  }
  return {peak, limbs};
}

bool smaller(const std::pair<Big, std::size_t>& a, const std::pair<Big, std::size_t>& b) {
  int c = cmp_abs(a.first, b.first);
  return c < 0 || (c == 0 && a.second < b.second);
}

// Alternate constrained lattice reduction of u and v. Each side's reduction
// can enlarge the other side through its compensating operations, so run a
// few rounds and keep the smallest consistent pair seen.
void shrink_witnesses(const BigMat& d, BigMat& u, BigMat& v, int rank) {
  std::vector<Big> diag(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) diag[static_cast<std::size_t>(i)] = d.at(i, i);

  BigMat best_u = u;
  BigMat best_v = v;
  std::pair<Big, std::size_t> best = witness_size(u, v);
  for (int round = 0; round < 4; ++round) {
    reduce_free_rows(u, rank);
    cross_reduce_rows(u, rank);
    reduce_ranked_rows(u, v, diag);
    reduce_free_cols(v, rank);
    cross_reduce_cols(v, rank);
    reduce_ranked_cols(u, v, diag);
    reduce_free_rows(u, rank);
    cross_reduce_rows(u, rank);
    reduce_free_cols(v, rank);
    cross_reduce_cols(v, rank);
    std::pair<Big, std::size_t> now = witness_size(u, v);
    if (smaller(now, best)) {
      best = std::move(now);
      best_u = u;
      best_v = v;
    }
  }
  u = std::move(best_u);
  v = std::move(best_v);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  BigMat d = BigMat::of(a);
  BigMat u = BigMat::identity(a.rows);
  BigMat v = BigMat::identity(a.cols);
  const int rank = eliminate(d, u, v);
  shrink_witnesses(d, u, v, rank);

  // Exact self-check before narrowing: the witnesses must reproduce the
  // diagonal. Failure here would be an implementation bug, never bad input.
  BigMat p = big_mul(big_mul(u, BigMat::of(a)), v);
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c)
      if (!(p.at(r, c) == d.at(r, c)))
        throw std::logic_error("smith_normal_form: witness verification failed");

  SmithForm f{IntMat(a.rows, a.cols), IntMat(a.rows, a.rows), IntMat(a.cols, a.cols)};
  try {
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) f.d(r, c) = to_longlong(d.at(r, c));
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.rows; ++c) f.u(r, c) = to_longlong(u.at(r, c));
    for (int r = 0; r < a.cols; ++r)
      for (int c = 0; c < a.cols; ++c) f.v(r, c) = to_longlong(v.at(r, c));
  } catch (const std::overflow_error&) {
    throw std::overflow_error("smith normal form entries exceed the 64-bit range");
  }
  return f;
}

AbelianGroup cokernel(const IntMat& a) {
  SmithForm f = smith_normal_form(a);
  AbelianGroup g;
  int nonzero = 0;
  for (int i = 0; i < std::min(a.rows, a.cols); ++i) {
    long long d = f.d(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.rank = a.rows - nonzero;
  return g;
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (g.rank == 1)
    append("Z");
  else if (g.rank > 1)
    append("Z^" + std::to_string(g.rank));
  for (long long t : g.torsion) append("Z/" + std::to_string(t));
  return s;
}

GroupPresentation fundamental_group(const KirbyDiagram& kd) {
  check_well_formed(kd);
  if (!kd.is_closed()) throw DomainError("open diagram");
  GroupPresentation p;
  p.generators = kd.balls;
  for (const FramedComponent& c : kd.components)
    if (!c.word.empty()) p.relators.push_back(c.word);
  return p;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  IntMat e(p.generators, static_cast<int>(p.relators.size()));
  for (int c = 0; c < e.cols; ++c)
    for (const BallPass& x : p.relators[static_cast<std::size_t>(c)])
      e(x.ball - 1, c) = checked_add(e(x.ball - 1, c), x.sign);
  return cokernel(e);
}

IntMat exponent_matrix(const KirbyDiagram& kd) {
  IntMat e(kd.balls, kd.component_count());
  for (int c = 0; c < e.cols; ++c)
    for (const BallPass& x : kd.components[static_cast<std::size_t>(c)].word)
      e(x.ball - 1, c) = checked_add(e(x.ball - 1, c), x.sign);
  return e;
}

HomologyProfile homology(const KirbyDiagram& kd) {
  check_well_formed(kd);
  if (!kd.is_closed()) throw DomainError("open diagram");
  HomologyProfile hp;
  hp.euler = euler_characteristic(kd);

  AbelianGroup h1 = cokernel(exponent_matrix(kd));
  long long b1 = h1.rank;
  long long b2 = hp.euler - 2 + 2 * b1;
  if (b2 < 0)
    throw DomainError("diagram admits no closed 4-manifold homology (negative middle rank)");

  hp.h[0] = AbelianGroup{1, {}};
  hp.h[1] = h1;
  hp.h[2] = AbelianGroup{b2, h1.torsion};
  hp.h[3] = AbelianGroup{b1, {}};
  hp.h[4] = AbelianGroup{1, {}};
  return hp;
}

long long signature(const IntMat& s) {
  if (!is_symmetric(s)) throw DomainError("signature of a non-symmetric matrix");
  const int n = s.rows;
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                  std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = Rat::of(s(r, c));

  std::vector<int> active;
  for (int i = 0; i < n; ++i) active.push_back(i);
  long long sig = 0;

  while (!active.empty()) {
    // Prefer a non-zero diagonal pivot.
    int k = -1;
    for (int idx : active)
      if (!m[idx][idx].is_zero()) {
        k = idx;
        break;
      }
    if (k >= 0) {
      sig += m[k][k].sign();
      std::vector<int> rest;
      for (int idx : active)
        if (idx != k) rest.push_back(idx);
      for (int i : rest)
        for (int j : rest)
          m[i][j] = rat_sub(m[i][j], rat_div(rat_mul(m[i][k], m[j][k]), m[k][k]));
      active = std::move(rest);
      continue;
    }
    // All diagonal entries zero: find a hyperbolic pair, which contributes 0.
    int a = -1, b = -1;
    for (std::size_t x = 0; x < active.size() && a < 0; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (!m[active[x]][active[y]].is_zero()) {
          a = active[x];
          b = active[y];
          break;
        }
    if (a < 0) break;  // zero form on the remaining subspace
    const Rat c = m[a][b];
    std::vector<int> rest;
    for (int idx : active)
      if (idx != a && idx != b) rest.push_back(idx);
    for (int i : rest)
      for (int j : rest) {
        Rat num = rat_add(rat_mul(m[i][a], m[b][j]), rat_mul(m[i][b], m[a][j]));
        m[i][j] = rat_sub(m[i][j], rat_div(num, c));
      }
    active = std::move(rest);
  }
  return sig;
}

FormData intersection_form(const KirbyDiagram& kd) {
  check_well_formed(kd);
  if (!kd.is_closed()) throw DomainError("open diagram");
  if (kd.balls != 0 || kd.three_handles != 0)
    throw DomainError("form undefined for this diagram (balls or 3-handles present)");
  FormData f;
  f.matrix = kd.linking;
  f.even = true;
  for (int i = 0; i < f.matrix.rows; ++i)
    if (f.matrix(i, i) % 2 != 0) {
      f.even = false;
      break;
    }
  f.determinant = det(f.matrix);
  f.signature = signature(f.matrix);
  return f;
}

InvariantBundle invariant_bundle(const KirbyDiagram& kd) {
  check_well_formed(kd);
  if (!kd.is_closed()) throw DomainError("open diagram");
  InvariantBundle b;
  b.euler = euler_characteristic(kd);
  b.pi1_abelianized = abelianization(fundamental_group(kd));
  b.homology = homology(kd);
  if (kd.balls == 0 && kd.three_handles == 0) {
    FormData f = intersection_form(kd);
    b.form = FormSummary{f.even, f.determinant, f.signature};
  }
  return b;
}

}  // namespace ob
