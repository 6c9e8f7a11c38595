// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// The criteria pin down the library's contract end to end: exact invariants
// for the known manifold corpus, the lens-page reduction with its verified
// twist words, equivalence evidence for spun lens spaces, parity-preserving
// framing normalization, stabilization round trips, randomized property
// suites against independent oracles, and the documented scope statement.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "obkirby/invariants.hpp"
#include "obkirby/moves.hpp"
#include "obkirby/reduce.hpp"

using namespace ob;
using obtest::Rng;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int n, const std::string& name, bool ok) {
  std::cout << "criterion " << n << " (" << name << "): " << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) {
    ++failures;
    for (const std::string& note : notes) std::cout << "    " << note << "\n";
  }
  notes.clear();
}

bool expect(bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
  return ok;
}

AbelianGroup z(long long rank) { return AbelianGroup{rank, {}}; }
AbelianGroup zmod(long long t) { return AbelianGroup{0, {t}}; }

TwistWord sphere_word(long long exponent) {
  TwistWord w = identity_word(0, 1);
  if (exponent != 0) w.factors.push_back(SphereTwist{1, exponent});
  return w;
}

// --------------------------------------------------------------------------

bool known_manifold_corpus() {
  bool ok = true;

  // The double of the bare ball page: the 4-sphere.
  {
    InvariantBundle b = invariant_bundle(open_book_identity(canonical_page(0, 0)));
    ok &= expect(b.euler == 2, "doubled ball: euler");
    ok &= expect(b.pi1_abelianized.is_trivial(), "doubled ball: pi1");
    ok &= expect(b.homology.h[1].is_trivial() && b.homology.h[2].is_trivial() &&
                     b.homology.h[3].is_trivial(),
                 "doubled ball: reduced homology vanishes");
    ok &= expect(b.form.has_value() && b.form->even && b.form->determinant == 1 &&
                     b.form->signature == 0,
                 "doubled ball: trivial even form");

    // The dumbbell page (one handle, one curve over it) doubles to the same
    // manifold; the cancelling move pair exposes that combinatorially.
    HeegaardDiagram dumbbell = canonical_page(1, 1);
    dumbbell.curves[0].events.push_back(Event::pass(1, 1));
    KirbyDiagram kd = open_book_identity(dumbbell);
    InvariantBundle db = invariant_bundle(kd);
    ok &= expect(db.euler == b.euler && db.pi1_abelianized == b.pi1_abelianized &&
                     db.homology == b.homology,
                 "dumbbell double: euler, pi1 and homology equal the 4-sphere's");
    KirbyDiagram collapsed = cancel_23(cancel_12(kd, 1, 0), 0);
    ok &= expect(same_shadow(collapsed, open_book_identity(canonical_page(0, 0))),
                 "dumbbell double: cancels to the empty diagram");
    ok &= expect(invariant_bundle(collapsed) == b, "dumbbell double: bundle survives the moves");
  }

  // The double of the punctured ball and its twisted sibling: the two
  // S^2-bundles over S^2, told apart by parity alone.
  {
    InvariantBundle flat = invariant_bundle(open_book(canonical_page(0, 1), sphere_word(0)));
    InvariantBundle twisted = invariant_bundle(open_book(canonical_page(0, 1), sphere_word(1)));
    ok &= expect(flat.euler == 4 && twisted.euler == 4, "sphere bundles: euler");
    ok &= expect(flat.homology.h[2] == z(2) && twisted.homology.h[2] == z(2),
                 "sphere bundles: H2 = Z^2");
    ok &= expect(flat.homology == twisted.homology, "sphere bundles: homology agrees");
    ok &= expect(flat.form.has_value() && twisted.form.has_value(), "sphere bundles: forms");
    ok &= expect(flat.form->even && !twisted.form->even, "sphere bundles: parity differs");
    ok &= expect(flat.form->determinant == -1 && twisted.form->determinant == -1 &&
                     flat.form->signature == 0 && twisted.form->signature == 0,
                 "sphere bundles: determinant -1, signature 0");
    ok &= expect(!(flat == twisted), "sphere bundles: bundles are distinguished");
  }

  // Doubled handlebodies: connected sums of S^1 x S^3.
  for (int g = 1; g <= 4; ++g) {
    InvariantBundle b = invariant_bundle(open_book_identity(canonical_page(g, 0)));
    ok &= expect(b.euler == 2 - 2 * g, "doubled handlebody g=" + std::to_string(g) + ": euler");
    ok &= expect(b.pi1_abelianized == z(g) && b.homology.h[1] == z(g),
                 "doubled handlebody g=" + std::to_string(g) + ": H1 = Z^g");
    ok &= expect(b.homology.h[2].is_trivial(),
                 "doubled handlebody g=" + std::to_string(g) + ": H2 = 0");
    ok &= expect(b.homology.h[3] == z(g),
                 "doubled handlebody g=" + std::to_string(g) + ": H3 = Z^g");
    ok &= expect(!b.form.has_value(),
                 "doubled handlebody g=" + std::to_string(g) + ": no form");
  }

  // The worked one-handle example: monodromy t(1,1)^3 s(1) on H_{1,1}.
  {
    TwistWord w = parse_twistword("t(1,1) t(1,1) t(1,1) s(1)", 1, 1);
    KirbyDiagram kd = open_book(canonical_page(1, 1), w);
    ok &= expect(kd.balls == 1 && kd.three_handles == 1 && kd.four_handles == 1,
                 "worked example: handle counts");
    ok &= expect(kd.component_count() == 2, "worked example: two components");
    ok &= expect(kd.components[0].word.empty() && kd.components[0].framing == 0,
                 "worked example: page curve untouched");
    ok &= expect(kd.components[1].word == BallWord{{1, 1}, {1, 1}, {1, 1}},
                 "worked example: dual word x1^3");
    ok &= expect(kd.components[1].framing == 1, "worked example: dual framing 1");
    ok &= expect(kd.linking(0, 1) == 1, "worked example: dual meets its curve once");
    InvariantBundle b = invariant_bundle(kd);
    ok &= expect(b.euler == 2 && b.pi1_abelianized == zmod(3),
                 "worked example: euler 2, pi1 = Z/3");
    ok &= expect(b == invariant_bundle(open_book_identity(lens_diagram(3, 1))),
                 "worked example: same bundle as the spun lens page");
  }

  // Spun lens spaces.
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {5, 2}, {7, 1}}) {
    InvariantBundle b = invariant_bundle(open_book_identity(lens_diagram(p, q)));
    std::string tag = "spun lens " + std::to_string(p) + "," + std::to_string(q);
    ok &= expect(b.euler == 2, tag + ": euler 2");
    ok &= expect(b.pi1_abelianized == zmod(p), tag + ": pi1 = Z/p");
    ok &= expect(b.homology.h[1] == zmod(p) && b.homology.h[2] == zmod(p) &&
                     b.homology.h[3].is_trivial(),
                 tag + ": homology (Z, Z/p, Z/p, 0, Z)");
    ok &= expect(!b.form.has_value(), tag + ": no form");
  }

  return ok;
}

bool lens_reduction() {
  bool ok = true;
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{
           {2, 1}, {3, 1}, {5, 2}, {5, 4}, {7, 3}}) {
    std::string tag = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    Reduction r = reduce(lens_diagram(p, q));
    ok &= expect(r.genus == 1 && r.curves == 1, tag + ": page H_{1,1}");
    ok &= expect(r.word == spun_lens_twistword(p, q), tag + ": exact twist word");
    long long torus = 0, sphere = 0;
    for (const TwistFactor& f : r.word.factors)
      std::holds_alternative<TorusTwist>(f) ? ++torus : ++sphere;
    ok &= expect(torus == p && sphere == (q != 0 ? 1 : 0), tag + ": p torus twists, one sphere");
    ReduceReport rep = verify_reduce(lens_diagram(p, q));
    ok &= expect(rep.verdict, tag + ": bundles of both open books agree");
    ok &= expect(rep.original == rep.reduced, tag + ": bundle equality is symmetric evidence");
  }
  ok &= expect(serialize_twistword(reduce(lens_diagram(3, 1)).word) == "t(1,1) t(1,1) t(1,1) s(1)",
               "L(3,1) word spelled out");
  return ok;
}

bool spun_lens_matrix() {
  bool ok = true;
  const std::vector<std::pair<long long, long long>> params{
      {2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {7, 1}, {7, 3}, {7, 5}};
  for (auto [p, q] : params)
    for (auto [p2, q2] : params) {
      std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ") vs (" +
                        std::to_string(p2) + "," + std::to_string(q2) + ")";
      SpunLensEvidence ev = spun_lens_equivalent(p, q, p2, q2);
      if (p == p2) {
        ok &= expect(ev.equivalent, tag + ": equivalent");
        ok &= expect(ev.bundles_equal && ev.lhs == ev.rhs, tag + ": equal bundles");
        ok &= expect(ev.braid_certificate.has_value() && ev.braid_certificate->equivalent,
                     tag + ": braid certificate");
        if (ev.braid_certificate) {
          ok &= expect(ev.braid_certificate->conjugations.size() <=
                           static_cast<std::size_t>(p - 1),
                       tag + ": certificate length bound");
          Permutation cur = braid_permutation(lens_braid(p, q));
          for (auto [a, b] : ev.braid_certificate->conjugations)
            cur = conjugate_by_transposition(cur, a - 1, b - 1);
          ok &= expect(cur == braid_permutation(lens_braid(p2, q2)), tag + ": replay reaches rhs");
        }
      } else {
        ok &= expect(!ev.equivalent, tag + ": inequivalent");
        ok &= expect(!ev.bundles_equal, tag + ": bundles differ");
        ok &= expect(ev.lhs.pi1_abelianized == zmod(p) && ev.rhs.pi1_abelianized == zmod(p2),
                     tag + ": H1 invariant factors are Z/p and Z/p2");
        ok &= expect(!ev.distinguishing.empty() &&
                         ev.distinguishing.find("H1") != std::string::npos,
                     tag + ": named distinguishing invariant");
      }
    }
  return ok;
}

bool framing_parity_normalization() {
  bool ok = true;
  for (long long n = 0; n <= 6; ++n) {
    std::string tag = "framing " + std::to_string(n);
    KirbyDiagram kd = open_book(canonical_page(0, 1), sphere_word(n));
    FormData before = intersection_form(kd);
    ok &= expect(before.even == (n % 2 == 0), tag + ": parity matches the twist count");

    int steps = 0;
    while (kd.components[1].framing > 1) {
      kd = slide(kd, 1, 0, -1);
      ++steps;
      FormData now = intersection_form(kd);
      ok &= expect(now.even == before.even && now.determinant == before.determinant &&
                       now.signature == before.signature,
                   tag + ": form preserved after slide " + std::to_string(steps));
    }
    ok &= expect(kd.components[1].framing == n % 2, tag + ": normalized to n mod 2");
    ok &= expect(steps == static_cast<int>(n / 2), tag + ": one slide per two twists");
    ok &= expect(same_shadow(kd, open_book(canonical_page(0, 1), sphere_word(n % 2))),
                 tag + ": shadow equals the normalized build");
  }
  return ok;
}

bool stabilization_roundtrip() {
  bool ok = true;
  Rng rng(0x5eedacc5);
  for (int iter = 0; iter < 10; ++iter) {
    std::string tag = "stabilization " + std::to_string(iter);
    const int g = rng.irange(0, 2);
    const int n = rng.irange(0, 2);
    TwistWord w = obtest::random_twistword(rng, g, n);
    KirbyDiagram original = open_book(canonical_page(g, n), w);
    InvariantBundle bundle = invariant_bundle(original);

    Stabilized st = stabilize(canonical_page(g, n), w);
    ok &= expect(st.page == canonical_page(g + 1, n + 1), tag + ": flat page stays flat");
    ok &= expect(st.monodromy.factors.size() == w.factors.size() + 1 &&
                     std::holds_alternative<TorusTwist>(st.monodromy.factors.back()) &&
                     std::get<TorusTwist>(st.monodromy.factors.back()) ==
                         TorusTwist{n + 1, g + 1},
                 tag + ": word gains exactly the new torus twist");

    // The stabilized presentation always carries the fresh 1-handle, so its
    // intersection form is not computable from it; compare the invariants
    // that are defined for every closed diagram.
    KirbyDiagram stabilized = open_book(st.page, st.monodromy);
    InvariantBundle sb = invariant_bundle(stabilized);
    ok &= expect(sb.euler == bundle.euler && sb.pi1_abelianized == bundle.pi1_abelianized &&
                     sb.homology == bundle.homology,
                 tag + ": invariants unchanged");

    // Cancel the new handle pair: the fresh dual is the only word through
    // the fresh ball, and the fresh page curve is then free to die on a
    // 3-handle. What remains is the original shadow.
    KirbyDiagram c1 = cancel_12(stabilized, g + 1, static_cast<std::size_t>(2 * n + 1));
    KirbyDiagram c2 = cancel_23(c1, static_cast<std::size_t>(n));
    ok &= expect(same_shadow(c2, original), tag + ": cancelling returns the original shadow");
    ok &= expect(invariant_bundle(c2) == bundle, tag + ": bundle survives the cancellation");
  }
  return ok;
}

bool property_suites() {
  bool ok = true;

  {  // Smith normal form against its own witnesses, 500 matrices.
    Rng rng(0x5eedacc6);
    for (int iter = 0; iter < 500 && ok; ++iter) {
      IntMat a = obtest::random_mat(rng, rng.irange(0, 6), rng.irange(0, 6), 9);
      SmithForm f = smith_normal_form(a);
      ok &= expect(mul(mul(f.u, a), f.v) == f.d, "snf: u*a*v == d");
      long long du = det(f.u), dv = det(f.v);
      ok &= expect((du == 1 || du == -1) && (dv == 1 || dv == -1), "snf: unimodular witnesses");
      long long prev = -1;
      for (int i = 0; i < std::min(f.d.rows, f.d.cols); ++i) {
        long long e = f.d(i, i);
        ok &= expect(e >= 0, "snf: non-negative diagonal");
        if (prev > 0) ok &= expect(e == 0 || e % prev == 0, "snf: divisibility chain");
        if (prev == 0) ok &= expect(e == 0, "snf: zeros stay last");
        prev = e;
      }
      if (a.rows == a.cols && a.rows > 0) {
        IntMat p = obtest::random_unimodular(rng, a.rows);
        IntMat q = obtest::random_unimodular(rng, a.cols);
        ok &= expect(smith_normal_form(mul(mul(p, a), q)).d == f.d,
                     "snf: invariant under unimodular change of basis");
      }
    }
  }

  {  // Handle slides never move any invariant, 200 diagrams.
    Rng rng(0x5eedacc7);
    for (int iter = 0; iter < 200 && ok; ++iter) {
      KirbyDiagram kd = obtest::random_closed_kd(rng);
      if (kd.component_count() < 2) continue;
      InvariantBundle bundle = invariant_bundle(kd);
      long long d0 = det(kd.linking);
      long long s0 = signature(kd.linking);
      int slides = rng.irange(1, 10);
      for (int s = 0; s < slides; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.irange(0, kd.component_count() - 1));
        std::size_t j = static_cast<std::size_t>(rng.irange(0, kd.component_count() - 1));
        if (i == j) continue;
        kd = slide(kd, i, j, rng.sign());
      }
      ok &= expect(invariant_bundle(kd) == bundle, "slides: invariant bundle preserved");
      ok &= expect(det(kd.linking) == d0, "slides: linking determinant preserved");
      ok &= expect(signature(kd.linking) == s0, "slides: linking signature preserved");
    }
  }

  {  // Braid endpoint permutations against the strand-tracking oracle, 200 words.
    Rng rng(0x5eedacc8);
    for (int iter = 0; iter < 200 && ok; ++iter) {
      Braid b = obtest::random_braid(rng, 6, 12);
      ok &= expect(braid_permutation(b) == obtest::strand_tracking_oracle(b),
                   "braids: permutation matches the oracle");
      Braid x = obtest::random_knot_braid(rng, 6, 12);
      Braid y = obtest::random_knot_braid(rng, 6, 12);
      if (x.strands != y.strands) continue;
      BraidEquivalence eq = braids_equivalent(x, y);
      ok &= expect(eq.equivalent, "braids: same strand count aligns");
      ok &= expect(eq.conjugations.size() < static_cast<std::size_t>(x.strands),
                   "braids: at most p-1 conjugations");
      Permutation cur = braid_permutation(x);
      for (auto [a, c] : eq.conjugations) cur = conjugate_by_transposition(cur, a - 1, c - 1);
      ok &= expect(cur == braid_permutation(y), "braids: certificate replays");
    }
  }

  {  // Doubling doubles the Euler characteristic of the page, whole grid.
    Rng rng(0x5eedacc9);
    for (int g = 0; g <= 5; ++g)
      for (int n = 0; n <= 5; ++n) {
        TwistWord w = obtest::random_twistword(rng, g, n);
        KirbyDiagram kd = open_book(canonical_page(g, n), w);
        ok &= expect(euler_characteristic(kd) == 2LL * euler_char_page(canonical_page(g, n)),
                     "euler: chi(double) == 2 chi(page) at g=" + std::to_string(g) +
                         " n=" + std::to_string(n));
        ok &= expect(invariant_bundle(kd).euler == euler_characteristic(kd),
                     "euler: bundle agrees");
      }
  }

  return ok;
}

bool scope_statement() {
  std::ifstream f(OBKIRBY_README_PATH);
  if (!f) {
    notes.push_back("README.md not found at " OBKIRBY_README_PATH);
    return false;
  }
  std::ostringstream os;
  os << f.rdbuf();
  const std::string text = os.str();
  bool ok = true;
  ok &= expect(text.find("necessary") != std::string::npos &&
                   text.find("never sufficient") != std::string::npos,
               "README must state that matching invariants are necessary, never sufficient");
  ok &= expect(text.find("## Scope") != std::string::npos, "README must carry a Scope section");
  return ok;
}

}  // namespace

int main() {
  struct Case {
    int n;
    const char* name;
    bool (*fn)();
  };
  const Case cases[] = {
      {1, "known manifold corpus", known_manifold_corpus},
      {2, "lens page reduction", lens_reduction},
      {3, "spun lens equivalence matrix", spun_lens_matrix},
      {4, "framing parity normalization", framing_parity_normalization},
      {5, "stabilization round trip", stabilization_roundtrip},
      {6, "randomized property suites", property_suites},
      {7, "documented scope statement", scope_statement},
  };
  for (const Case& c : cases) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    criterion(c.n, c.name, ok);
  }
  return failures == 0 ? 0 : 1;
}
