#include "obkirby/moves.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "obkirby/errors.hpp"
#include "obkirby/invariants.hpp"

using namespace ob;
using obtest::Rng;

namespace {

KirbyDiagram hopf_pair(long long n) {
  // Doubled punctured sphere page with n sphere twists: linking [[0,1],[1,n]].
  TwistWord w = identity_word(0, 1);
  if (n != 0) w.factors.push_back(SphereTwist{1, n});
  return open_book(canonical_page(0, 1), w);
}

}  // namespace

TEST_CASE("slide updates framing, word and linking by the band-sum rule") {
  KirbyDiagram kd = hopf_pair(0);  // [[0,1],[1,0]]
  MoveLog log;
  KirbyDiagram slid = slide(kd, 0, 1, 1, &log);
  CHECK(slid.components[0].framing == 2);  // 0 + 0 + 2*1*lk
  CHECK(slid.linking(0, 0) == 2);
  CHECK(slid.linking(0, 1) == 1);  // += 1 * lk(1,1) = n = 0
  CHECK(slid.components[1] == kd.components[1]);
  REQUIRE(log.size() == 1);
  CHECK(log[0].move == "slide");

  KirbyDiagram neg = slide(kd, 0, 1, -1);
  CHECK(neg.components[0].framing == -2);

  // Sliding over a component with a word appends the (possibly inverted) word.
  KirbyDiagram lens = open_book_identity(lens_diagram(3, 1));
  KirbyDiagram ls = slide(lens, 1, 0, -1);
  CHECK(ls.components[1].word == BallWord{{1, -1}, {1, -1}, {1, -1}});
  CHECK(ls.components[1].framing == 0 + 1 - 2 * 1);
}

TEST_CASE("slide by +1 then -1 over the same component is the identity") {
  Rng rng(0x5eed0401);
  for (int iter = 0; iter < 100; ++iter) {
    KirbyDiagram kd = obtest::random_closed_kd(rng);
    if (kd.component_count() < 2) continue;
    std::size_t i = static_cast<std::size_t>(rng.irange(0, kd.component_count() - 1));
    std::size_t j = static_cast<std::size_t>(rng.irange(0, kd.component_count() - 1));
    if (i == j) continue;
    int s = rng.sign();
    CHECK(slide(slide(kd, i, j, s), i, j, -s) == kd);
  }
}

TEST_CASE("slides preserve determinant, signature and parity of the linking matrix") {
  Rng rng(0x5eed0402);
  for (int iter = 0; iter < 60; ++iter) {
    KirbyDiagram kd = obtest::random_closed_kd(rng);
    if (kd.component_count() < 2) continue;
    long long d0 = det(kd.linking);
    long long s0 = signature(kd.linking);
    KirbyDiagram cur = kd;
    for (int step = 0; step < 4; ++step) {
      std::size_t i = static_cast<std::size_t>(rng.irange(0, cur.component_count() - 1));
      std::size_t j = static_cast<std::size_t>(rng.irange(0, cur.component_count() - 1));
      if (i == j) continue;
      cur = slide(cur, i, j, rng.sign());
      CHECK_NOTHROW(check_well_formed(cur));
    }
    CHECK(det(cur.linking) == d0);
    CHECK(signature(cur.linking) == s0);
  }
}

TEST_CASE("slide rejects bad indices") {
  KirbyDiagram kd = hopf_pair(0);
  CHECK_THROWS_WITH_AS(slide(kd, 0, 0, 1), doctest::Contains("itself"), DomainError);
  CHECK_THROWS_WITH_AS(slide(kd, 5, 0, 1), doctest::Contains("out of range"), DomainError);
  CHECK_THROWS_AS(slide(kd, 0, 1, 2), DomainError);
}

TEST_CASE("crossing change needs a 0-framed dual meridian partner") {
  KirbyDiagram kd = open_book_identity(lens_diagram(3, 1));
  MoveLog log;
  KirbyDiagram same = crossing_change(kd, 0, &log);
  CHECK(same == kd);  // the shadow is untouched
  REQUIRE(log.size() == 1);
  CHECK(log[0].move == "crossing");

  // The dual itself has no dual partner.
  CHECK_THROWS_WITH_AS(crossing_change(kd, 1), doctest::Contains("meridian"), DomainError);

  // A half open book has no duals at all.
  KirbyDiagram open_kd = half_open_book(lens_diagram(3, 1));
  CHECK_THROWS_AS(crossing_change(open_kd, 0), DomainError);
}

TEST_CASE("cancelling a 1-handle against its only rider deletes both") {
  HeegaardDiagram dumbbell = canonical_page(1, 1);
  dumbbell.curves[0].events.push_back(Event::pass(1, 1));
  KirbyDiagram kd = open_book_identity(dumbbell);
  InvariantBundle before = invariant_bundle(kd);

  MoveLog log;
  KirbyDiagram c1 = cancel_12(kd, 1, 0, &log);
  CHECK(c1.balls == 0);
  REQUIRE(c1.component_count() == 1);
  CHECK(c1.components[0].name == "a1*");
  CHECK(c1.components[0].word.empty());
  CHECK(invariant_bundle(c1) == before);

  KirbyDiagram c2 = cancel_23(c1, 0, &log);
  CHECK(c2.component_count() == 0);
  CHECK(c2.three_handles == 0);
  CHECK(c2.balls == 0);
  CHECK(c2.is_closed());
  // With the last ball and 3-handle gone the intersection form becomes
  // defined; everything that was already defined is unchanged.
  InvariantBundle after = invariant_bundle(c2);
  CHECK(after.euler == before.euler);
  CHECK(after.pi1_abelianized == before.pi1_abelianized);
  CHECK(after.homology == before.homology);
  CHECK_FALSE(before.form.has_value());
  REQUIRE(after.form.has_value());
  CHECK(after.form->even);
  CHECK(after.form->determinant == 1);
  CHECK(after.form->signature == 0);
  CHECK(euler_characteristic(c2) == 2);
  REQUIRE(log.size() == 2);
  CHECK(log[0].move == "cancel12");
  CHECK(log[1].move == "cancel23");
}

TEST_CASE("cancel_12 reroutes other components through the cancelled ball") {
  // Two components both running x1 x2; cancelling ball 1 against the second
  // substitutes x1 -> x2^-1 into the first, which then reduces to nothing.
  KirbyDiagram kd;
  kd.balls = 2;
  kd.components.push_back({"A", {{1, 1}, {2, 1}}, 0, ComponentRole::Page});
  kd.components.push_back({"B", {{1, 1}, {2, 1}}, 0, ComponentRole::Page});
  kd.linking = IntMat(2, 2);
  kd.four_handles = 1;

  MoveLog log;
  KirbyDiagram out = cancel_12(kd, 1, 1, &log);
  CHECK(out.balls == 1);
  REQUIRE(out.component_count() == 1);
  CHECK(out.components[0].name == "A");
  CHECK(out.components[0].word.empty());
  REQUIRE(log.size() == 1);
  CHECK(log[0].note.find("rerouted 1") != std::string::npos);

  // Inverse pass: the relator x1^-1 x2 says x1 = x2, so A's x1 becomes x2.
  KirbyDiagram kd2 = kd;
  kd2.components[1].word = {{1, -1}, {2, 1}};
  KirbyDiagram out2 = cancel_12(kd2, 1, 1);
  CHECK(out2.components[0].word == BallWord{{1, 1}, {1, 1}});  // x2 x2, renumbered
}

TEST_CASE("cancel_12 preserves invariants on construction outputs") {
  Rng rng(0x5eed0403);
  int done = 0;
  for (int iter = 0; iter < 200 && done < 40; ++iter) {
    HeegaardDiagram hd = obtest::random_hd(rng, 3, 3, false);
    KirbyDiagram kd = open_book_identity(hd);
    // Find a (ball, component) pair with exactly one pass.
    int ball = -1;
    std::size_t comp = 0;
    for (int b = 1; b <= kd.balls && ball < 0; ++b)
      for (std::size_t c = 0; c < kd.components.size(); ++c) {
        int count = 0;
        for (const BallPass& x : kd.components[c].word)
          if (x.ball == b) ++count;
        if (count == 1) {
          ball = b;
          comp = c;
          break;
        }
      }
    if (ball < 0) continue;
    ++done;
    InvariantBundle before = invariant_bundle(kd);
    KirbyDiagram after = cancel_12(kd, ball, comp);
    CHECK(invariant_bundle(after) == before);
  }
  CHECK(done >= 20);  // the generator must produce enough eligible diagrams
}

TEST_CASE("cancel preconditions are enforced") {
  KirbyDiagram kd = open_book_identity(lens_diagram(2, 1));
  // Page component passes ball 1 twice.
  CHECK_THROWS_WITH_AS(cancel_12(kd, 1, 0), doctest::Contains("more than once"), DomainError);
  // Dual never passes it.
  CHECK_THROWS_WITH_AS(cancel_12(kd, 1, 1), doctest::Contains("does not run"), DomainError);
  CHECK_THROWS_AS(cancel_12(kd, 2, 0), DomainError);

  // cancel_23 needs empty word, zero framing, no linking, a 3-handle.
  CHECK_THROWS_WITH_AS(cancel_23(kd, 0), doctest::Contains("ball"), DomainError);
  // The dual is 0-framed with empty word but links its page curve.
  CHECK_THROWS_WITH_AS(cancel_23(kd, 1), doctest::Contains("links"), DomainError);

  KirbyDiagram flat = open_book_identity(canonical_page(0, 1));
  // Unlinked 0-framed empty component, but no 3-handle available.
  KirbyDiagram unlinked = flat;
  unlinked.linking(0, 1) = unlinked.linking(1, 0) = 0;
  CHECK(unlinked.three_handles == 0);
  CHECK_THROWS_WITH_AS(cancel_23(unlinked, 1), doctest::Contains("3-handle"), DomainError);
}

TEST_CASE("move scripts run in order with 1-based indices") {
  HeegaardDiagram dumbbell = canonical_page(1, 1);
  dumbbell.curves[0].events.push_back(Event::pass(1, 1));
  KirbyDiagram kd = open_book_identity(dumbbell);

  ScriptResult res = apply_move_script(kd,
                                       "# collapse the dumbbell\n"
                                       "cancel12 1 1\n"
                                       "\n"
                                       "cancel23 1\n");
  CHECK(res.kd.component_count() == 0);
  CHECK(res.kd.balls == 0);
  CHECK(res.log.size() == 2);

  CHECK_THROWS_WITH_AS(apply_move_script(kd, "slide 1 1 +\n"), doctest::Contains("line 1"),
                       DomainError);
  CHECK_THROWS_WITH_AS(apply_move_script(kd, "cancel12 1\n"), doctest::Contains("argument"),
                       ParseError);
  CHECK_THROWS_WITH_AS(apply_move_script(kd, "warp 1\n"), doctest::Contains("unknown move"),
                       ParseError);
  CHECK_THROWS_WITH_AS(apply_move_script(kd, "slide 1 9 +\n"), doctest::Contains("out of range"),
                       DomainError);
  CHECK_THROWS_AS(apply_move_script(kd, "slide 1 2 *\n"), ParseError);
}

TEST_CASE("framing parity of a hopf pair normalizes by slides") {
  for (long long n = 0; n <= 6; ++n) {
    KirbyDiagram kd = hopf_pair(n);
    FormData before = intersection_form(kd);
    // Slide the dual over the 0-framed page curve until the framing is 0 or 1.
    while (kd.components[1].framing > 1) {
      kd = slide(kd, 1, 0, -1);
      FormData now = intersection_form(kd);
      CHECK(now.even == before.even);
      CHECK(now.determinant == before.determinant);
      CHECK(now.signature == before.signature);
    }
    CHECK(kd.components[1].framing == n % 2);
    CHECK(same_shadow(kd, hopf_pair(n % 2)));
    CHECK(before.even == (n % 2 == 0));
  }
}
