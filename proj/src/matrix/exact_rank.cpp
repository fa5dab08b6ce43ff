#include "crg/matrix/exact_rank.hpp"

#include <utility>

namespace crg {

namespace {

bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool is_zero(const GaussRat& z) { return z.is_zero(); }
Rational inverse(const Rational& q) { return 1 / q; }
GaussRat inverse(const GaussRat& z) { return z.inverse(); }

template <class T>
std::size_t rank_impl(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const T p = inverse(a[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (is_zero(a[r][col])) continue;
      const T f = a[r][col] * p;
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_over_q(std::vector<std::vector<Rational>> rows) { return rank_impl(std::move(rows)); }
std::size_t rank_over_qi(std::vector<std::vector<GaussRat>> rows) { return rank_impl(std::move(rows)); }

}  // namespace crg
