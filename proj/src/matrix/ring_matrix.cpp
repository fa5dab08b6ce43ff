#include "crg/matrix/ring_matrix.hpp"

#include <map>
#include <sstream>

#include "crg/errors.hpp"
#include "crg/util/parallel.hpp"

namespace crg {

RingMatrix RingMatrix::from_rows(const std::vector<std::vector<UnitFraction>>& rows) {
  RingMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows are not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = UnitFraction(1);
  return m;
}

RingMatrix RingMatrix::conj() const {
  return map([](const UnitFraction& f) { return f.conj(); });
}

RingMatrix RingMatrix::map(const std::function<UnitFraction(const UnitFraction&)>& f) const {
  RingMatrix out(n_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = f(e_[k]);
  return out;
}

bool RingMatrix::is_identity() const { return *this == identity(n_); }

namespace {

void check_same(const RingMatrix& a, const RingMatrix& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + "x" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + "x" + std::to_string(b.size()));
}

UnitFraction dot(const RingMatrix& a, const RingMatrix& b, std::size_t i, std::size_t j) {
  UnitFraction s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
    s += a(i, k) * b(k, j);
  }
  return s;
}

// Laplace expansion along the first remaining row, memoized on the set of
// remaining columns. rows[k] is the k-th row of the (sub)matrix.
class CofactorDet {
 public:
  CofactorDet(const RingMatrix& a, std::vector<std::size_t> rows, std::vector<std::size_t> cols)
      : a_(a), rows_(std::move(rows)), cols_(std::move(cols)) {}

  UnitFraction run() {
    if (rows_.empty()) return UnitFraction(1);
    return minor((1u << cols_.size()) - 1u);
  }

 private:
  UnitFraction minor(unsigned mask) {
    if (mask == 0) return UnitFraction(1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const auto depth = cols_.size() - static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = rows_[depth];
    UnitFraction sum;
    int sign = 1;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      if ((mask & (1u << k)) == 0) continue;
      const UnitFraction& x = a_(row, cols_[k]);
      if (!x.is_zero()) {
        UnitFraction t = x * minor(mask & ~(1u << k));
        if (sign > 0)
          sum += t;
        else
          sum -= t;
      }
      sign = -sign;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

  const RingMatrix& a_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::map<unsigned, UnitFraction> memo_;
};

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < n; ++k)
    if (k != skip) v.push_back(k);
  return v;
}

UnitFraction cofactor(const RingMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  UnitFraction m = CofactorDet(a, all_but(n, i), all_but(n, j)).run();
  return (i + j) % 2 == 0 ? m : -m;
}

}  // namespace

namespace kernels {

RingMatrix mat_mul_serial(const RingMatrix& a, const RingMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.size();
  RingMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = dot(a, b, i, j);
  return c;
}

RingMatrix mat_mul_parallel(const RingMatrix& a, const RingMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.size();
  RingMatrix c(n);
  parallel_for(n * n, [&](std::size_t k) { c(k / n, k % n) = dot(a, b, k / n, k % n); });
  return c;
}

UnitFraction det_cofactor(const RingMatrix& a) {
  const std::size_t n = a.size();
  if (n > 16) throw DimensionMismatch("cofactor determinant limited to n <= 16");
  return CofactorDet(a, all_but(n, n), all_but(n, n)).run();
}

// adj(A)(j, i) = cofactor(i, j)
RingMatrix adjugate_serial(const RingMatrix& a) {
  const std::size_t n = a.size();
  RingMatrix adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(a, i, j);
  return adj;
}

RingMatrix adjugate_parallel(const RingMatrix& a) {
  const std::size_t n = a.size();
  RingMatrix adj(n);
  parallel_for(n * n, [&](std::size_t k) { adj(k % n, k / n) = cofactor(a, k / n, k % n); });
  return adj;
}

std::vector<NumMatrix> substitute_batch_serial(const RingMatrix& a, const std::vector<Binding>& bs) {
  std::vector<NumMatrix> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back(mat_substitute(a, b));
  return out;
}

std::vector<NumMatrix> substitute_batch_parallel(const RingMatrix& a, const std::vector<Binding>& bs) {
  std::vector<NumMatrix> out(bs.size());
  parallel_for(bs.size(), [&](std::size_t k) { out[k] = mat_substitute(a, bs[k]); });
  return out;
}

}  // namespace kernels

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) { return kernels::mat_mul_parallel(a, b); }
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return mat_mul(a, b); }

RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b) {
  check_same(a, b);
  RingMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

UnitFraction mat_det(const RingMatrix& a) { return kernels::det_cofactor(a); }

RingMatrix mat_adjugate(const RingMatrix& a) { return kernels::adjugate_parallel(a); }

RingMatrix mat_inverse(const RingMatrix& a, const Relations* rel) {
  UnitFraction det = mat_det(a);
  if (rel != nullptr) det = rel->reduce(det);
  if (!det.is_unit()) throw NotInvertibleInRing("determinant " + det.str() + " is not a unit");
  const UnitFraction inv_det = det.inverse();
  RingMatrix adj = mat_adjugate(a);
  return adj.map([&](const UnitFraction& x) {
    UnitFraction y = x * inv_det;
    return rel != nullptr ? rel->reduce(y) : y;
  });
}

NumMatrix mat_substitute(const RingMatrix& a, const Binding& b) {
  const std::size_t n = a.size();
  NumMatrix out(n, std::vector<GaussRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = substitute(a(i, j), b);
  return out;
}

RingMatrix mat_substitute_symbols(const RingMatrix& a, const SymbolMap& map) {
  return a.map([&](const UnitFraction& x) { return substitute_symbols(x, map); });
}

RingMatrix mat_reduce(const RingMatrix& a, const Relations& rel) {
  return a.map([&](const UnitFraction& x) { return rel.reduce(x); });
}

bool mat_equal(const RingMatrix& a, const RingMatrix& b, const Relations* rel) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (!equal_mod(a.entries()[k], b.entries()[k], rel)) return false;
  return true;
}

std::size_t residual_terms(const RingMatrix& a, const RingMatrix& b, const Relations* rel) {
  check_same(a, b);
  std::size_t total = 0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const UnitFraction& x = a.entries()[k];
    const UnitFraction& y = b.entries()[k];
    StarPoly diff = x.numerator().times(y.denominator()) - y.numerator().times(x.denominator());
    if (rel != nullptr) diff = rel->reduce(diff);
    total += diff.term_count();
  }
  return total;
}

nlohmann::json to_json(const RingMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(const RingMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? ", " : "") << a(i, j).str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace crg
