#pragma once

// Shared test utilities: a deterministic RNG, random diagram generators, and
// independent brute-force oracles the implementation is checked against.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "obkirby/heegaard.hpp"
#include "obkirby/intmat.hpp"
#include "obkirby/kirby.hpp"
#include "obkirby/monodromy.hpp"
#include "obkirby/moves.hpp"

namespace obtest {

// std::uniform_int_distribution is not byte-identical across standard
// libraries; plain modulo reduction on mt19937_64 is, and bias is irrelevant
// for tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  int irange(int lo, int hi) { return static_cast<int>(range(lo, hi)); }
  int sign() { return range(0, 1) ? 1 : -1; }
  bool chance(int num, int den) { return range(1, den) <= num; }
};

inline ob::IntMat random_mat(Rng& rng, int rows, int cols, long long max_abs) {
  ob::IntMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.range(-max_abs, max_abs);
  return m;
}

// Product of random elementary row operations: unimodular by construction.
inline ob::IntMat random_unimodular(Rng& rng, int n, int ops = 8) {
  ob::IntMat m = ob::IntMat::identity(n);
  for (int i = 0; i < ops && n > 1; ++i) {
    int a = rng.irange(0, n - 1);
    int b = rng.irange(0, n - 1);
    if (a == b) continue;
    switch (rng.irange(0, 2)) {
      case 0: m.add_row(a, b, rng.range(-2, 2)); break;
      case 1: m.swap_rows(a, b); break;
      default: m.negate_row(a); break;
    }
  }
  return m;
}

// Cofactor-expansion determinant: slow, obviously correct.
inline long long naive_det(const ob::IntMat& m) {
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m(0, 0);
  long long sum = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (m(0, c) == 0) continue;
    long long minor = naive_det(m.without(0, c));
    sum += (c % 2 == 0 ? 1 : -1) * m(0, c) * minor;
  }
  return sum;
}

// Valid random page diagram. Pass signs are +1 (the invariant generated
// diagrams keep); kinks and crossings carry both signs.
inline ob::HeegaardDiagram random_hd(Rng& rng, int max_g = 3, int max_n = 3,
                                     bool with_crossings = true) {
  const int g = rng.irange(0, max_g);
  const int n = rng.irange(0, max_n);
  ob::HeegaardDiagram hd = ob::canonical_page(g, n);
  for (auto& curve : hd.curves) {
    if (g >= 1) {
      int passes = rng.irange(0, 3);
      for (int i = 0; i < passes; ++i)
        curve.events.push_back(ob::Event::pass(rng.irange(1, g), 1));
    }
    int kinks = rng.irange(0, 2);
    for (int i = 0; i < kinks; ++i) curve.events.push_back(ob::Event::kink(rng.sign()));
  }
  if (with_crossings && n >= 2) {
    long long next_id = 1;
    int pairs = rng.irange(0, 2);
    for (int p = 0; p < pairs; ++p) {
      int i = rng.irange(0, n - 1);
      int j = rng.irange(0, n - 1);
      if (i == j) continue;
      // Two crossings between the same pair keep the count even.
      for (int rep = 0; rep < 2; ++rep) {
        int s = rng.sign();
        long long id = next_id++;
        auto& ci = hd.curves[static_cast<std::size_t>(i)].events;
        auto& cj = hd.curves[static_cast<std::size_t>(j)].events;
        ci.insert(ci.begin() + rng.range(0, static_cast<long long>(ci.size())),
                  ob::Event::cross(hd.curves[static_cast<std::size_t>(j)].name,
                                   ob::CrossRole::Over, s, id));
        cj.insert(cj.begin() + rng.range(0, static_cast<long long>(cj.size())),
                  ob::Event::cross(hd.curves[static_cast<std::size_t>(i)].name,
                                   ob::CrossRole::Under, s, id));
      }
    }
  }
  return hd;
}

inline ob::TwistWord random_twistword(Rng& rng, int g, int n, int max_len = 6) {
  ob::TwistWord w = ob::identity_word(g, n);
  if (n == 0) return w;
  int len = rng.irange(0, max_len);
  for (int i = 0; i < len; ++i) {
    if (g >= 1 && rng.chance(2, 3))
      w.factors.push_back(ob::TorusTwist{rng.irange(1, n), rng.irange(1, g)});
    else
      w.factors.push_back(ob::SphereTwist{rng.irange(1, n), rng.range(-3, 3)});
  }
  return w;
}

// Random closed diagram drawn from the constructions (so its shadow is
// consistent: non-negative middle homology rank and so on).
inline ob::KirbyDiagram random_closed_kd(Rng& rng) {
  if (rng.chance(1, 3)) {
    // Flat page, twisted monodromy.
    int g = rng.irange(0, 3);
    int n = rng.irange(0, 3);
    return ob::open_book(ob::canonical_page(g, n), random_twistword(rng, g, n));
  }
  return ob::open_book_identity(random_hd(rng));
}

inline ob::Braid random_braid(Rng& rng, int max_strands = 6, int max_len = 12) {
  ob::Braid b;
  b.strands = rng.irange(2, max_strands);
  int len = rng.irange(0, max_len);
  for (int i = 0; i < len; ++i)
    b.word.push_back(rng.sign() * rng.irange(1, b.strands - 1));
  return b;
}

inline ob::Braid random_knot_braid(Rng& rng, int max_strands = 6, int max_len = 12) {
  for (;;) {
    ob::Braid b = random_braid(rng, max_strands, max_len);
    if (ob::closure_is_knot(b)) return b;
  }
}

// Independent endpoint-permutation oracle: track which strand occupies each
// position while the letters act left to right; the permutation sends a
// strand's start position to its end position.
inline ob::Permutation strand_tracking_oracle(const ob::Braid& b) {
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) at[static_cast<std::size_t>(i)] = i;
  for (int k : b.word) {
    int g = k > 0 ? k : -k;
    std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
  }
  ob::Permutation p;
  p.img.resize(at.size());
  for (int posn = 0; posn < b.strands; ++posn)
    p.img[static_cast<std::size_t>(at[static_cast<std::size_t>(posn)])] = posn;
  return p;
}

// Brute-force BFS: fewest transposition conjugations taking p to q.
inline int conjugation_distance(const ob::Permutation& p, const ob::Permutation& q) {
  if (p == q) return 0;
  const int n = p.degree();
  std::map<std::vector<int>, int> dist;
  std::deque<ob::Permutation> queue;
  dist[p.img] = 0;
  queue.push_back(p);
  while (!queue.empty()) {
    ob::Permutation cur = queue.front();
    queue.pop_front();
    int d = dist[cur.img];
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        ob::Permutation next = ob::conjugate_by_transposition(cur, a, b);
        if (dist.count(next.img)) continue;
        if (next == q) return d + 1;
        dist[next.img] = d + 1;
        queue.push_back(next);
      }
  }
  return -1;  // unreachable for same cycle type
}

}  // namespace obtest
