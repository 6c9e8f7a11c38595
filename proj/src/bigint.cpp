#include "bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ob::detail {

namespace {

void trim(std::vector<uint32_t>& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  trim(out);
  return out;
}

// Requires |a| >= |b|.
std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
    if (s < 0) {
      s += int64_t(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  trim(out);
  return out;
}

std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = uint64_t(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = uint64_t(out[k]) + carry;
      out[k++] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
  }
  trim(out);
  return out;
}

std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  std::vector<uint32_t> out(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] |= a[i] << bits;
    out[i + 1] = a[i] >> (32 - bits);
  }
  trim(out);
  return out;
}

std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  std::vector<uint32_t> out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] >> bits;
    if (i + 1 < a.size()) out[i] |= a[i + 1] << (32 - bits);
  }
  trim(out);
  return out;
}

// Knuth Algorithm D on magnitudes; quotient and remainder of a / b.
void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("bigint division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0], rem = 0;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(q);
    r.clear();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // Normalize so the divisor's top limb has its high bit set.
  unsigned shift = 0;
  for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  std::vector<uint32_t> u = shl_mag(a, shift);
  std::vector<uint32_t> v = shl_mag(b, shift);
  const size_t n = v.size();
  const size_t m = u.size() - n;
  u.push_back(0);
  q.assign(m + 1, 0);

  const uint64_t vtop = v[n - 1], vsec = v[n - 2];
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop, rhat = num % vtop;
    while (qhat > 0xffffffffull ||
           qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat > 0xffffffffull) break;
    }
    // u[j .. j+n] -= qhat * v
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = int64_t(u[j + i]) - int64_t(p & 0xffffffffull) - borrow;
      if (t < 0) {
        t += int64_t(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[j + i] = static_cast<uint32_t>(t);
    }
    int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
    if (t < 0) {
      // qhat was one too large: add v back.
      t += int64_t(1) << 32;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = uint64_t(u[j + i]) + v[i] + c2;
        u[j + i] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      t += int64_t(c2);
      t &= (int64_t(1) << 32) - 1;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  trim(q);
  u.resize(n);
  trim(u);
  r = shr_mag(u, shift);
}

Big make(int sign, std::vector<uint32_t> mag) {
  trim(mag);
  Big out;
  out.mag = std::move(mag);
  out.sign = out.mag.empty() ? 0 : sign;
  return out;
}

}  // namespace

Big::Big(long long v) {
  if (v == 0) return;
  sign = v > 0 ? 1 : -1;
  // Avoids overflow on LLONG_MIN.
  uint64_t u = v > 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
  mag.push_back(static_cast<uint32_t>(u));
  if (u >> 32) mag.push_back(static_cast<uint32_t>(u >> 32));
}

int cmp(const Big& a, const Big& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  return a.sign >= 0 ? cmp_mag(a.mag, b.mag) : -cmp_mag(a.mag, b.mag);
}

int cmp_abs(const Big& a, const Big& b) { return cmp_mag(a.mag, b.mag); }

bool operator==(const Big& a, const Big& b) { return cmp(a, b) == 0; }
bool operator<(const Big& a, const Big& b) { return cmp(a, b) < 0; }

Big operator+(const Big& a, const Big& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.sign == b.sign) return make(a.sign, add_mag(a.mag, b.mag));
  int c = cmp_mag(a.mag, b.mag);
  if (c == 0) return Big();
  return c > 0 ? make(a.sign, sub_mag(a.mag, b.mag))
               : make(b.sign, sub_mag(b.mag, a.mag));
}

Big operator-(const Big& a) {
  Big out = a;
  out.sign = -out.sign;
  return out;
}

Big operator-(const Big& a, const Big& b) { return a + (-b); }

Big operator*(const Big& a, const Big& b) {
  if (a.is_zero() || b.is_zero()) return Big();
  return make(a.sign * b.sign, mul_mag(a.mag, b.mag));
}

void divmod(const Big& a, const Big& b, Big& q, Big& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag, b.mag, qm, rm);
  q = make(a.sign * b.sign, std::move(qm));
  r = make(a.sign, std::move(rm));
}

Big divexact(const Big& a, const Big& b) {
  Big q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("bigint division expected exact");
  return q;
}

Big nearest_div(const Big& a, const Big& b) {
  Big q, r;
  divmod(a, b, q, r);
  if (r.is_zero()) return q;
  // |r| * 2 >= |b| rounds away from zero.
  if (cmp_mag(add_mag(r.mag, r.mag), b.mag) >= 0)
    q = q + Big(a.sign * b.sign >= 0 ? 1 : -1);
  return q;
}

bool fits_longlong(const Big& a) {
  if (a.mag.size() > 2) return false;
  if (a.mag.size() < 2) return true;
  uint64_t u = (uint64_t(a.mag[1]) << 32) | a.mag[0];
  return a.sign > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

long long to_longlong(const Big& a) {
  if (!fits_longlong(a)) throw std::overflow_error("bigint exceeds 64 bits");
  if (a.is_zero()) return 0;
  uint64_t u = a.mag[0];
  if (a.mag.size() == 2) u |= uint64_t(a.mag[1]) << 32;
  return a.sign > 0 ? static_cast<long long>(u)
                    : static_cast<long long>(~u + 1);
}

std::string to_string(const Big& a) {
  if (a.is_zero()) return "0";
  std::string out;
  std::vector<uint32_t> m = a.mag;
  const std::vector<uint32_t> billion{1000000000u};
  while (!m.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(m, billion, q, r);
    uint32_t chunk = r.empty() ? 0 : r[0];
    std::string part = std::to_string(chunk);
    if (!q.empty()) part = std::string(9 - part.size(), '0') + part;
    out = part + out;
    m = std::move(q);
  }
  return (a.sign < 0 ? "-" : "") + out;
}

}  // namespace ob::detail
