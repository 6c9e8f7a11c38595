#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obkirby/kirby.hpp"

namespace ob {

// Kirby moves acting on the algebraic shadow. Every move returns a new
// diagram and appends a human-readable record to the log (if given); the
// input is never mutated.

struct MoveRecord {
  std::string move;  // "slide", "crossing", "cancel12", "cancel23"
  std::string note;
  bool operator==(const MoveRecord&) const = default;
};

using MoveLog = std::vector<MoveRecord>;

// Slides component i over component j (band sum with sign). Framing of i
// becomes f_i + f_j + 2*sign*lk(i,j); linking row/column i gains sign times
// row/column j. This is the congruence by I + sign*E_ji, so determinant,
// signature and parity of the linking matrix are preserved.
KirbyDiagram slide(const KirbyDiagram& kd, std::size_t i, std::size_t j, int sign,
                   MoveLog* log = nullptr);

// A crossing change on a component that has a 0-framed dual meridian is a
// slide over that meridian: nothing in the shadow moves. Recorded for the
// move log only; errors if no eligible meridian partner exists.
KirbyDiagram crossing_change(const KirbyDiagram& kd, std::size_t i, MoveLog* log = nullptr);

// Cancels ball `ball` (1-based) against component i, which must run through
// it exactly once. Other components that run through the ball are rerouted:
// the cancelled generator is replaced by the rest of component i's word.
KirbyDiagram cancel_12(const KirbyDiagram& kd, int ball, std::size_t i, MoveLog* log = nullptr);

// Cancels component i (empty word, zero framing, unlinked) against a
// 3-handle.
KirbyDiagram cancel_23(const KirbyDiagram& kd, std::size_t i, MoveLog* log = nullptr);

// Move scripts: one move per line, 1-based component indices.
//   slide <i> <j> +|-
//   crossing <i>
//   cancel12 <ball> <i>
//   cancel23 <i>
// Blank lines and # comments are skipped.
struct ScriptResult {
  KirbyDiagram kd;
  MoveLog log;
};
ScriptResult apply_move_script(const KirbyDiagram& kd, std::string_view script);

// ---------------------------------------------------------------------------
// Braids. A braid on p strands is a word in the Artin generators; letter +k
// is s_k (strand k over strand k+1), -k its inverse.

struct Braid {
  int strands = 1;
  std::vector<int> word;
  bool operator==(const Braid&) const = default;
};

// `s<k>` or `s<k>^-1`, whitespace separated. strands == 0 infers the strand
// count as (largest generator index) + 1.
Braid parse_braid(std::string_view text, int strands = 0);
std::string serialize_braid(const Braid& b);

struct Permutation {
  std::vector<int> img;  // img[i] = image of i, 0-based

  static Permutation identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
  bool operator==(const Permutation&) const = default;
};

// Apply x first, then y.
Permutation compose(const Permutation& x, const Permutation& y);
Permutation transposition(int n, int a, int b);
// t (a b), then p, then t again: relabels the values a and b in p's cycles.
Permutation conjugate_by_transposition(const Permutation& p, int a, int b);
bool is_single_cycle(const Permutation& p);

// The permutation of strand endpoints: generators act leftmost first, so the
// word's first letter is applied first.
Permutation braid_permutation(const Braid& b);

// The closure of the braid is a knot iff the permutation is one p-cycle.
bool closure_is_knot(const Braid& b);

// Certificate that two knot-closure braids on the same strand count have a
// common closure up to crossing changes: a sequence of at most p-1
// transposition conjugations aligning the two strand permutations, plus a
// marker recording whether crossing changes are needed at all. Strand-count
// mismatch yields equivalent == false. Throws if either closure is a link.
struct BraidEquivalence {
  bool equivalent = false;
  std::vector<std::pair<int, int>> conjugations;  // 1-based strand labels
  bool crossing_changes = false;
  bool operator==(const BraidEquivalence&) const = default;
};
BraidEquivalence braids_equivalent(const Braid& x, const Braid& y);

}  // namespace ob
