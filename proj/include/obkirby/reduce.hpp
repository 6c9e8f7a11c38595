#pragma once

#include <string>
#include <utility>

#include "obkirby/heegaard.hpp"
#include "obkirby/invariants.hpp"
#include "obkirby/monodromy.hpp"
#include "obkirby/moves.hpp"

namespace ob {

// Any open book with trivial monodromy on a page with g 1-handles and n
// curves is also an open book on the eventless page H_{g,n} whose monodromy
// is a word of torus and sphere twists: each pass of curve j over handle l
// becomes a torus twist t(j,l), and the writhe of curve j becomes a sphere
// twist s(j)^writhe.
struct Reduction {
  int genus = 0;
  int curves = 0;
  TwistWord word;
  bool operator==(const Reduction&) const = default;
};
Reduction reduce(const HeegaardDiagram& hd);

// Checks the reduction by comparing the invariant bundles of the
// trivial-monodromy open book on hd and of the open book on the eventless
// page with the reduced word.
struct ReduceReport {
  Reduction reduction;
  InvariantBundle original;
  InvariantBundle reduced;
  bool verdict = false;
};
ReduceReport verify_reduce(const HeegaardDiagram& hd);

// Braid whose closure lives in the spun lens space construction: the full
// twist pattern (s_1 ... s_{p-1})^q on p strands. Closure is a knot iff
// gcd(p, q) == 1.
Braid lens_braid(long long p, long long q);

// Lens space parameter normalization: L(p, q) = L(p, q mod p) (q reduced
// into 1..p-1 for p >= 2; (1, 1) for p == 1).
std::pair<long long, long long> rolfsen_normalize(long long p, long long q);

// Evidence that the spun lens spaces for (p,q) and (p2,q2) are or are not
// the same closed 4-manifold: equal p yields equal invariant bundles and a
// braid-alignment certificate; distinct p is separated by H1.
struct SpunLensEvidence {
  bool equivalent = false;
  InvariantBundle lhs;
  InvariantBundle rhs;
  bool bundles_equal = false;
  std::optional<BraidEquivalence> braid_certificate;
  std::string distinguishing;  // non-empty when inequivalent
};
SpunLensEvidence spun_lens_equivalent(long long p, long long q, long long p2, long long q2);

}  // namespace ob
