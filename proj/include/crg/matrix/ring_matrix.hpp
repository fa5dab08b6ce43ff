#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crg/scalar/binding.hpp"
#include "crg/scalar/unit_fraction.hpp"

namespace crg {

using NumMatrix = std::vector<std::vector<GaussRat>>;

/// Dense square matrix over UnitFraction. Indices are 0-based.
class RingMatrix {
 public:
  RingMatrix() = default;
  explicit RingMatrix(std::size_t n) : n_(n), e_(n * n) {}
  // Throws DimensionMismatch unless rows is square.
  static RingMatrix from_rows(const std::vector<std::vector<UnitFraction>>& rows);
  static RingMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  UnitFraction& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const UnitFraction& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<UnitFraction>& entries() const noexcept { return e_; }

  RingMatrix conj() const;
  RingMatrix map(const std::function<UnitFraction(const UnitFraction&)>& f) const;
  bool is_identity() const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<UnitFraction> e_;
};

// Parallel implementations; serial references live in crg::kernels.
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b);
UnitFraction mat_det(const RingMatrix& a);
RingMatrix mat_adjugate(const RingMatrix& a);
// adjugate/det. Entries and det are reduced by rel when given. Throws
// NotInvertibleInRing when det is not a unit monomial.
RingMatrix mat_inverse(const RingMatrix& a, const Relations* rel = nullptr);
NumMatrix mat_substitute(const RingMatrix& a, const Binding& b);
RingMatrix mat_substitute_symbols(const RingMatrix& a, const SymbolMap& map);
RingMatrix mat_reduce(const RingMatrix& a, const Relations& rel);

// Entrywise equality, modulo rel when given.
bool mat_equal(const RingMatrix& a, const RingMatrix& b, const Relations* rel = nullptr);
// Total numerator terms of a - b after reduction; 0 iff equal.
std::size_t residual_terms(const RingMatrix& a, const RingMatrix& b, const Relations* rel = nullptr);

nlohmann::json to_json(const RingMatrix& a);
std::string to_string(const RingMatrix& a);

namespace kernels {

RingMatrix mat_mul_serial(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_mul_parallel(const RingMatrix& a, const RingMatrix& b);
UnitFraction det_cofactor(const RingMatrix& a);
RingMatrix adjugate_serial(const RingMatrix& a);
RingMatrix adjugate_parallel(const RingMatrix& a);
std::vector<NumMatrix> substitute_batch_serial(const RingMatrix& a, const std::vector<Binding>& bs);
std::vector<NumMatrix> substitute_batch_parallel(const RingMatrix& a, const std::vector<Binding>& bs);

}  // namespace kernels

}  // namespace crg
