#include "obkirby/intmat.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace ob {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

long long checked_neg(long long a) { return checked_sub(0, a); }

namespace {

long long narrow(__int128 v, const char* what) {
  if (v > static_cast<__int128>(9223372036854775807LL) ||
      v < -static_cast<__int128>(9223372036854775807LL) - 1)
    throw std::overflow_error(what);
  return static_cast<long long>(v);
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::add_row(int dst, int src, long long k) {
  for (int c = 0; c < cols; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(k, (*this)(src, c)));
}

void IntMat::add_col(int dst, int src, long long k) {
  for (int r = 0; r < rows; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(k, (*this)(r, src)));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols; ++c) (*this)(i, c) = checked_neg((*this)(i, c));
}

void IntMat::negate_col(int i) {
  for (int r = 0; r < rows; ++r) (*this)(r, i) = checked_neg((*this)(r, i));
}

IntMat IntMat::without(int row, int col) const {
  IntMat out(rows - (row >= 0 ? 1 : 0), cols - (col >= 0 ? 1 : 0));
  int rr = 0;
  for (int r = 0; r < rows; ++r) {
    if (r == row) continue;
    int cc = 0;
    for (int c = 0; c < cols; ++c) {
      if (c == col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(x(i, k), y(k, j)));
    }
  return out;
}

IntMat transpose(const IntMat& x) {
  IntMat out(x.cols, x.rows);
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c) out(c, r) = x(r, c);
  return out;
}

bool is_symmetric(const IntMat& x) {
  if (x.rows != x.cols) return false;
  for (int r = 0; r < x.rows; ++r)
    for (int c = r + 1; c < x.cols; ++c)
      if (x(r, c) != x(c, r)) return false;
  return true;
}

long long det(const IntMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = x.rows;
  if (n == 0) return 1;

  std::vector<__int128> m(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r) * n + c] = x(r, c);
  auto at = [&](int r, int c) -> __int128& { return m[static_cast<std::size_t>(r) * n + c]; };

  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return narrow(sign * at(n - 1, n - 1), "integer overflow in determinant");
}

Rat Rat::of(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num = n;
  r.den = d;
  return r;
}

namespace {

Rat rat_from128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 an = n < 0 ? -n : n;
  // gcd on __int128
  __int128 x = an, y = d;
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x > 1) {
    n /= x;
    d /= x;
  }
  Rat r;
  r.num = narrow(n, "rational overflow");
  r.den = narrow(d, "rational overflow");
  return r;
}

}  // namespace

Rat rat_add(const Rat& x, const Rat& y) {
  return rat_from128(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                     static_cast<__int128>(x.den) * y.den);
}

Rat rat_sub(const Rat& x, const Rat& y) {
  return rat_from128(static_cast<__int128>(x.num) * y.den - static_cast<__int128>(y.num) * x.den,
                     static_cast<__int128>(x.den) * y.den);
}

Rat rat_mul(const Rat& x, const Rat& y) {
  return rat_from128(static_cast<__int128>(x.num) * y.num,
                     static_cast<__int128>(x.den) * y.den);
}

Rat rat_div(const Rat& x, const Rat& y) {
  if (y.num == 0) throw std::invalid_argument("rational division by zero");
  return rat_from128(static_cast<__int128>(x.num) * y.den,
                     static_cast<__int128>(x.den) * y.num);
}

}  // namespace ob
