#pragma once

#include <array>
#include <ostream>

#include "pfrac/polynomial.hpp"

namespace pfrac {

// 2x2 matrix with polynomial entries, indexed (row, col).
class PolyMatrix2 {
 public:
  PolyMatrix2() = default;
  PolyMatrix2(Polynomial a00, Polynomial a01, Polynomial a10, Polynomial a11);

  static PolyMatrix2 identity();

  const Polynomial& operator()(int row, int col) const { return entries_[row][col]; }
  Polynomial& operator()(int row, int col) { return entries_[row][col]; }

  Polynomial det() const;
  Polynomial trace() const { return entries_[0][0] + entries_[1][1]; }

  friend PolyMatrix2 operator*(const PolyMatrix2& lhs, const PolyMatrix2& rhs);
  friend bool operator==(const PolyMatrix2& lhs, const PolyMatrix2& rhs) = default;
  friend std::ostream& operator<<(std::ostream& os, const PolyMatrix2& m);

 private:
  std::array<std::array<Polynomial, 2>, 2> entries_{};
};

inline PolyMatrix2 mat2_mul(const PolyMatrix2& lhs, const PolyMatrix2& rhs) { return lhs * rhs; }
inline Polynomial mat2_det(const PolyMatrix2& m) { return m.det(); }

}  // namespace pfrac
