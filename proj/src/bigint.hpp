#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ob::detail {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Internal to the library: Smith normal form elimination can exceed 64 bits
// in intermediate values even when input and output fit comfortably, so the
// computation runs on these and narrows (checked) at the end.
struct Big {
  int sign = 0;                // -1, 0, +1; zero iff mag is empty
  std::vector<uint32_t> mag;   // little-endian limbs, no trailing zeros

  Big() = default;
  Big(long long v);

  bool is_zero() const { return sign == 0; }
};

// -1, 0, +1 as a < b, a == b, a > b.
int cmp(const Big& a, const Big& b);
int cmp_abs(const Big& a, const Big& b);
bool operator==(const Big& a, const Big& b);
bool operator<(const Big& a, const Big& b);

Big operator+(const Big& a, const Big& b);
Big operator-(const Big& a, const Big& b);
Big operator*(const Big& a, const Big& b);
Big operator-(const Big& a);

// Truncated division: a == q*b + r with |r| < |b| and sign(r) == sign(a).
void divmod(const Big& a, const Big& b, Big& q, Big& r);
// Division known to be exact; throws std::logic_error on a remainder.
Big divexact(const Big& a, const Big& b);
// Nearest-integer quotient (ties away from zero).
Big nearest_div(const Big& a, const Big& b);

bool fits_longlong(const Big& a);
long long to_longlong(const Big& a);  // throws std::overflow_error if too big

std::string to_string(const Big& a);

}  // namespace ob::detail
