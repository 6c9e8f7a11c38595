#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "obkirby/intmat.hpp"
#include "obkirby/kirby.hpp"

namespace ob {

// Smith normal form with unimodular witnesses: u * a * v == d, where d is
// diagonal with non-negative entries in a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMat d;
  IntMat u;  // rows x rows, |det| == 1
  IntMat v;  // cols x cols, |det| == 1
};
SmithForm smith_normal_form(const IntMat& a);

// A finitely generated abelian group Z^rank + Z/t1 + Z/t2 + ... with
// t1 | t2 | ... and every ti >= 2. This is a canonical form: two groups are
// isomorphic iff the records are equal.
struct AbelianGroup {
  long long rank = 0;
  std::vector<long long> torsion;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

std::string to_string(const AbelianGroup& g);  // e.g. "Z^2 + Z/3"

// Cokernel of the column space: Z^rows / col(a).
AbelianGroup cokernel(const IntMat& a);

// Presentation of the fundamental group read off a closed diagram: one
// generator per ball, one relator per component word (empty words dropped).
struct GroupPresentation {
  int generators = 0;
  std::vector<BallWord> relators;
  bool operator==(const GroupPresentation&) const = default;
};
GroupPresentation fundamental_group(const KirbyDiagram& kd);
AbelianGroup abelianization(const GroupPresentation& p);

// Exponent matrix: entry (l-1, c) is the total exponent of ball l in the
// word of component c.
IntMat exponent_matrix(const KirbyDiagram& kd);

// Homology of the closed 4-manifold: H0..H4 plus the Euler characteristic.
// H1 = cokernel of the exponent matrix; b2 = euler - 2 + 2*b1;
// torsion(H2) = torsion(H1); H3 = Z^b1; H4 = Z.
struct HomologyProfile {
  std::array<AbelianGroup, 5> h;
  long long euler = 0;
  bool operator==(const HomologyProfile&) const = default;
};
HomologyProfile homology(const KirbyDiagram& kd);

// Intersection form, defined for closed diagrams with no balls and no
// 3-handles: the linking matrix with parity (even iff all diagonal entries
// are even), exact determinant and exact signature.
struct FormData {
  IntMat matrix;
  bool even = true;
  long long determinant = 1;
  long long signature = 0;
};
FormData intersection_form(const KirbyDiagram& kd);

// Signature of a symmetric integer matrix by exact rational congruence
// diagonalization (no floating point).
long long signature(const IntMat& symmetric);

// Everything comparable about a closed diagram, in canonical form. The form
// summary is present only when the intersection form is defined. Equality is
// decidable, order-independent and used as the "same manifold" evidence
// throughout; it is necessary, never sufficient, for diffeomorphism.
struct FormSummary {
  bool even = true;
  long long determinant = 1;
  long long signature = 0;
  bool operator==(const FormSummary&) const = default;
};

struct InvariantBundle {
  long long euler = 0;
  AbelianGroup pi1_abelianized;
  HomologyProfile homology;
  std::optional<FormSummary> form;
  bool operator==(const InvariantBundle&) const = default;
};
InvariantBundle invariant_bundle(const KirbyDiagram& kd);

}  // namespace ob
