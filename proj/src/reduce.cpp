#include "obkirby/reduce.hpp"

#include <numeric>

#include "obkirby/errors.hpp"

namespace ob {

Reduction reduce(const HeegaardDiagram& hd) {
  require_valid(hd);
  Reduction r;
  r.genus = hd.genus;
  r.curves = hd.curve_count();
  r.word = identity_word(r.genus, r.curves);
  for (int j = 1; j <= r.curves; ++j) {
    const AttachingCurve& c = hd.curves[static_cast<std::size_t>(j - 1)];
    for (const Event& e : c.events)
      if (e.kind == EventKind::Pass)
        r.word.factors.push_back(TorusTwist{j, e.handle});  // pass sign is immaterial here
    if (long long w = writhe(c); w != 0)
      r.word.factors.push_back(SphereTwist{j, w});
  }
  return r;
}

ReduceReport verify_reduce(const HeegaardDiagram& hd) {
  ReduceReport rep;
  rep.reduction = reduce(hd);
  rep.original = invariant_bundle(open_book_identity(hd));
  HeegaardDiagram flat = canonical_page(rep.reduction.genus, rep.reduction.curves);
  rep.reduced = invariant_bundle(open_book(flat, rep.reduction.word));
  rep.verdict = rep.original == rep.reduced;
  return rep;
}

Braid lens_braid(long long p, long long q) {
  if (p < 1) throw DomainError("lens parameter p must be positive");
  if (q < 1) throw DomainError("lens parameter q must be positive");
  if (p > 1000000) throw DomainError("lens parameter p too large");
  Braid b;
  b.strands = static_cast<int>(p);
  for (long long rep = 0; rep < q; ++rep)
    for (int k = 1; k < b.strands; ++k) b.word.push_back(k);
  return b;
}

std::pair<long long, long long> rolfsen_normalize(long long p, long long q) {
  if (p < 1) throw DomainError("lens parameter p must be positive");
  if (q < 1) throw DomainError("lens parameter q must be positive");
  if (std::gcd(p, q) != 1) throw DomainError("lens parameters not coprime");
  if (p == 1) return {1, 1};
  long long r = q % p;
  if (r == 0) throw DomainError("lens parameters not coprime");  // unreachable for p >= 2
  return {p, r};
}

SpunLensEvidence spun_lens_equivalent(long long p, long long q, long long p2, long long q2) {
  SpunLensEvidence ev;
  ev.lhs = invariant_bundle(open_book_identity(lens_diagram(p, q)));
  ev.rhs = invariant_bundle(open_book_identity(lens_diagram(p2, q2)));
  ev.bundles_equal = ev.lhs == ev.rhs;

  if (p != p2) {
    ev.equivalent = false;
    ev.distinguishing = "H1 differs: " + to_string(ev.lhs.pi1_abelianized) + " vs " +
                        to_string(ev.rhs.pi1_abelianized);
    return ev;
  }

  // Same p: the spun lens space depends on p only. The braid certificate
  // aligns the two closure braids by conjugations (plus crossing changes).
  ev.equivalent = true;
  ev.braid_certificate = braids_equivalent(lens_braid(p, q), lens_braid(p2, q2));
  return ev;
}

}  // namespace ob
