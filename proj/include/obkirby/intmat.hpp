#pragma once

#include <cstddef>
#include <vector>

namespace ob {

// Exact 64-bit integer arithmetic; throws std::overflow_error instead of
// wrapping. All matrix entries in this project are small (linking numbers,
// framings, exponent sums), but elimination can blow values up, so every
// product and sum goes through these.
long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);
long long checked_neg(long long a);

// Dense row-major integer matrix. No numerics: exact arithmetic only.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  long long& operator()(int r, int c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  long long operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static IntMat identity(int n);

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row(int dst, int src, long long k);  // row dst += k * row src
  void add_col(int dst, int src, long long k);
  void negate_row(int i);
  void negate_col(int i);

  // Drops row i and column j (pass -1 to keep all rows / all columns).
  IntMat without(int row, int col) const;

  bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& x);
bool is_symmetric(const IntMat& x);

// Exact determinant by fraction-free (Bareiss) elimination. det of the 0x0
// matrix is 1.
long long det(const IntMat& x);

// Exact rational with checked arithmetic; only what the signature
// computation needs.
struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(num, den) == 1

  static Rat of(long long n, long long d = 1);
  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  bool operator==(const Rat&) const = default;
};

Rat rat_add(const Rat& x, const Rat& y);
Rat rat_sub(const Rat& x, const Rat& y);
Rat rat_mul(const Rat& x, const Rat& y);
Rat rat_div(const Rat& x, const Rat& y);

}  // namespace ob
