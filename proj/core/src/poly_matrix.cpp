#include "pfrac/poly_matrix.hpp"

#include <utility>

namespace pfrac {

PolyMatrix2::PolyMatrix2(Polynomial a00, Polynomial a01, Polynomial a10, Polynomial a11)
    : entries_{{{std::move(a00), std::move(a01)}, {std::move(a10), std::move(a11)}}} {}

PolyMatrix2 PolyMatrix2::identity() { return {Polynomial(1), Polynomial(), Polynomial(), Polynomial(1)}; }

Polynomial PolyMatrix2::det() const {
  return entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0];
}

PolyMatrix2 operator*(const PolyMatrix2& lhs, const PolyMatrix2& rhs) {
  PolyMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = lhs(i, 0) * rhs(0, j) + lhs(i, 1) * rhs(1, j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix2& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

}  // namespace pfrac
