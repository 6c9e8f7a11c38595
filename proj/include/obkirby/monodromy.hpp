#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ob {

// Monodromies of the trivial open book with page H_{g,n} are words in two
// families of twists: a torus twist t(j,l) drags 2-handle curve j once over
// 1-handle l, and a sphere twist s(j)^k adds k to the framing offset of
// curve j. Factors act on the page leftmost first.

struct TorusTwist {
  int two_handle = 0;  // j, 1-based in 1..n
  int one_handle = 0;  // l, 1-based in 1..g
  bool operator==(const TorusTwist&) const = default;
};

struct SphereTwist {
  int two_handle = 0;      // j, 1-based in 1..n
  long long exponent = 1;  // k, any integer
  bool operator==(const SphereTwist&) const = default;
};

using TwistFactor = std::variant<TorusTwist, SphereTwist>;

struct TwistWord {
  int genus = 0;   // g of the page the word acts on
  int curves = 0;  // n
  std::vector<TwistFactor> factors;  // leftmost applied first

  bool is_identity() const { return factors.empty(); }
  bool operator==(const TwistWord&) const = default;
};

TwistWord identity_word(int genus, int curves);

// Throws DomainError when a factor's indices leave 1..n / 1..g.
void check_twistword(const TwistWord& w);

// Concatenation (apply x, then y). Contexts must match.
TwistWord concat(const TwistWord& x, const TwistWord& y);

// Grammar: whitespace-separated factors `t(j,l)`, `s(j)`, `s(j)^k`.
// The empty string is the identity.
TwistWord parse_twistword(std::string_view text, int genus, int curves);
std::string serialize_twistword(const TwistWord& w);

// Where the monodromy sends the cocore of 2-handle j: a word of signed passes
// over 1-handles plus a framing offset. Torus twists append passes; sphere
// twists add to the offset.
struct CocoreImage {
  std::vector<std::pair<int, int>> pass_word;  // (1-handle, sign)
  long long framing_offset = 0;
  bool operator==(const CocoreImage&) const = default;
};

// One image per curve, index j-1. Composition is concatenation of pass words
// and addition of offsets.
std::vector<CocoreImage> cocore_images(const TwistWord& w);

// Sphere twists square to isotopically trivial twists: exponents are reduced
// mod 2 into {0, 1} and vanished factors dropped. Torus factors are kept.
TwistWord isotopy_normalize(const TwistWord& w);

// Monodromy of the spun lens space: p torus twists followed by one sphere
// twist of exponent q, on the page H_{1,1}. Requires coprime p >= 1, q >= 1.
TwistWord spun_lens_twistword(long long p, long long q);

}  // namespace ob
