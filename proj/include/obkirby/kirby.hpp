#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "obkirby/heegaard.hpp"
#include "obkirby/intmat.hpp"
#include "obkirby/monodromy.hpp"

namespace ob {

// The computable shadow of a Kirby diagram: dotted balls (1-handles), framed
// components (2-handles) whose attaching circles are recorded as free-group
// words in the ball generators x1..x_balls, the symmetric linking matrix
// (diagonal = framings), and 3-/4-handle counts. The diagram presents a
// closed manifold exactly when four_handles == 1.

struct BallPass {
  int ball = 0;  // 1-based
  int sign = 1;  // +1 or -1
  bool operator==(const BallPass&) const = default;
};

using BallWord = std::vector<BallPass>;

BallWord free_reduce(BallWord w);
BallWord inverse_word(const BallWord& w);

// "x1^3 x2^-1" with adjacent equal letters folded; "1" for the empty word.
std::string to_string(const BallWord& w);

enum class ComponentRole { Page, Dual };

struct FramedComponent {
  std::string name;
  BallWord word;  // stored freely reduced
  long long framing = 0;
  ComponentRole role = ComponentRole::Page;
  bool operator==(const FramedComponent&) const = default;
};

struct Provenance {
  std::string page;       // source page diagram, .hd text
  std::string monodromy;  // twist word; empty for identity / half open books
  bool operator==(const Provenance&) const = default;
};

struct KirbyDiagram {
  int balls = 0;
  std::vector<FramedComponent> components;
  IntMat linking;  // components.size() square, symmetric, diag == framings
  int three_handles = 0;
  int four_handles = 0;  // 0 or 1
  std::optional<Provenance> provenance;

  int component_count() const { return static_cast<int>(components.size()); }
  bool is_closed() const { return four_handles == 1; }
  bool operator==(const KirbyDiagram&) const = default;
};

// Structural equality of everything except provenance metadata.
bool same_shadow(const KirbyDiagram& x, const KirbyDiagram& y);

// Throws DomainError if the shadow is inconsistent: non-symmetric linking,
// diagonal != framing, word letters out of range, bad handle counts.
void check_well_formed(const KirbyDiagram& kd);

// Page framing of a curve: its writhe. Linking of two curves: half the signed
// count of their crossings.
long long page_framing(const AttachingCurve& c);
long long page_linking(const AttachingCurve& x, const AttachingCurve& y);

// Kirby diagram of the half open book on a page: one dotted ball per
// 1-handle, one blackboard-framed component per curve. Open (no 3-/4-handles).
KirbyDiagram half_open_book(const HeegaardDiagram& hd);

// Kirby diagram of the open book with trivial monodromy: the half open book
// plus a 0-framed dual meridian per curve, g 3-handles and one 4-handle.
KirbyDiagram open_book_identity(const HeegaardDiagram& hd);

// Kirby diagram of the open book with the given monodromy. The twist-word
// overload requires an all-eventless page matching the word's (g,n) context
// (any valid page is fine for the identity word); the table overload takes
// explicit cocore images (one per curve) for arbitrary pages.
KirbyDiagram open_book(const HeegaardDiagram& hd, const TwistWord& mono);
KirbyDiagram open_book(const HeegaardDiagram& hd, const std::vector<CocoreImage>& images);

// 1 - balls + components - three_handles + four_handles.
long long euler_characteristic(const KirbyDiagram& kd);

// Page stabilization: a new 1-handle and a new eventless curve, with the
// monodromy extended by the torus twist dragging the new curve over the new
// handle. Preserves the resulting 4-manifold.
struct Stabilized {
  HeegaardDiagram page;
  TwistWord monodromy;
};
Stabilized stabilize(const HeegaardDiagram& hd, const TwistWord& mono);

// JSON serialization, byte-deterministic (fixed key order, two-space indent).
KirbyDiagram parse_kd(std::string_view json_text);
std::string serialize_kd(const KirbyDiagram& kd);

}  // namespace ob
