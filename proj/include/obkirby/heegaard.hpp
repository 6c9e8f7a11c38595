#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ob {

// A Heegaard diagram of a compact 3-manifold with one 0-handle, g 1-handles
// and one attaching curve per 2-handle. Each curve is a cyclic word of planar
// events read along a fixed orientation.

enum class EventKind { Pass, Kink, Cross };
enum class CrossRole { Over, Under };

struct Event {
  EventKind kind = EventKind::Kink;
  int sign = 1;             // +1 or -1, meaningful for every kind
  int handle = 0;           // Pass: 1-handle index, 1-based
  std::string other;        // Cross: name of the partner curve
  CrossRole role = CrossRole::Over;  // Cross
  long long crossing_id = 0;         // Cross: tag pairing the two strands

  static Event pass(int handle, int sign);
  static Event kink(int sign);
  static Event cross(std::string other, CrossRole role, int sign, long long id);

  bool operator==(const Event&) const = default;
};

struct AttachingCurve {
  std::string name;
  std::vector<Event> events;  // cyclic; structural equality is positional

  bool operator==(const AttachingCurve&) const = default;
};

// Equality of event words up to cyclic rotation (curve names ignored).
bool equivalent(const AttachingCurve& x, const AttachingCurve& y);

// Sum of kink signs: the blackboard self-linking of the curve.
long long writhe(const AttachingCurve& c);

struct HeegaardDiagram {
  int genus = 0;                        // number of 1-handles
  std::vector<AttachingCurve> curves;   // one per 2-handle, ordered
  std::vector<std::string> handle_labels;  // size == genus; defaults h1..hg

  int curve_count() const { return static_cast<int>(curves.size()); }
  bool operator==(const HeegaardDiagram&) const = default;
};

std::vector<std::string> default_handle_labels(int genus);

// One well-formedness defect, with coordinates. event_index is -1 for
// curve-level or diagram-level defects; curve is empty for diagram-level ones.
struct Violation {
  std::string curve;
  int event_index = -1;
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

// Checks every invariant: pass handles in range, crossing ids paired exactly
// twice on two distinct curves with matching names, opposite roles and equal
// signs, and an even crossing count between each pair of curves. Returns every
// defect rather than stopping at the first.
std::vector<Violation> validate(const HeegaardDiagram& hd);

// Throws DomainError listing the violations if hd is not well-formed.
void require_valid(const HeegaardDiagram& hd);

// The punctured handlebody page H_{g,n}: genus g, n eventless curves a1..an.
HeegaardDiagram canonical_page(int genus, int curves);
bool is_canonical_page(const HeegaardDiagram& hd);

// Genus-1 diagram of the punctured lens space L(p,q) - D3: one curve running
// p times over the handle with q positive kinks. Requires p >= 1, q >= 1,
// gcd(p, q) == 1.
HeegaardDiagram lens_diagram(long long p, long long q);

// Euler characteristic of the page surface: 1 - genus + #curves.
int euler_char_page(const HeegaardDiagram& hd);

// Text format. A diagram is a `page g=<int>` line followed by one
// `curve <name> : <event> (; <event>)*` line per curve; `#` starts a comment.
// Events: `pass <handle> +|-`, `kink +|-`, `cross <other> over|under +|- <id>`.
HeegaardDiagram parse_hd(std::string_view text);
std::string serialize_hd(const HeegaardDiagram& hd);

}  // namespace ob
