#include "crg/errors.hpp"
#include "crg/groups/group_template.hpp"
#include "crg/matrix/exact_rank.hpp"

namespace crg {

namespace {

GaussRat eval_at(const StarPoly& p, const Binding& at) { return substitute(p, at); }

NumMatrix directional(const RingMatrix& m, const Binding& at, const std::function<StarPoly(const StarPoly&)>& d) {
  const std::size_t n = m.size();
  NumMatrix out(n, std::vector<GaussRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const UnitFraction& x = m(i, j);
      if (!x.is_polynomial()) throw Error("template entry " + x.str() + " is not polynomial");
      out[i][j] = eval_at(d(x.numerator()), at);
    }
  return out;
}

std::vector<Rational> flatten(const NumMatrix& m) {
  std::vector<Rational> v;
  for (const auto& row : m)
    for (const auto& z : row) {
      v.push_back(z.re());
      v.push_back(z.im());
    }
  return v;
}

NumMatrix commutator(const NumMatrix& x, const NumMatrix& y) {
  const std::size_t n = x.size();
  NumMatrix out(n, std::vector<GaussRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
  return out;
}

}  // namespace

LieBasis lie_algebra_basis(const GroupTemplate& t) {
  const RingMatrix m = t.symbolic_matrix();
  Binding at;
  for (const auto& spec : t.params) at.set(t.symbol(spec.name), GaussRat(spec.identity));
  LieBasis basis;
  const GaussRat i = GaussRat::i();
  for (const auto& spec : t.params) {
    const Symbol s = t.symbol(spec.name);
    if (spec.is_real()) {
      basis.labels.push_back(spec.name);
      basis.matrices.push_back(directional(m, at, [&](const StarPoly& p) { return p.partial(s); }));
      continue;
    }
    const Symbol sb = s.conj();
    basis.labels.push_back("Re(" + spec.name + ")");
    basis.matrices.push_back(
        directional(m, at, [&](const StarPoly& p) { return p.partial(s) + p.partial(sb); }));
    basis.labels.push_back("Im(" + spec.name + ")");
    basis.matrices.push_back(
        directional(m, at, [&](const StarPoly& p) { return (p.partial(s) - p.partial(sb)) * i; }));
  }
  return basis;
}

std::size_t lie_dimension(const std::vector<NumMatrix>& basis) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(basis.size());
  for (const auto& m : basis) rows.push_back(flatten(m));
  return rank_over_q(std::move(rows));
}

bool verify_lie_closure(const std::vector<NumMatrix>& basis) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : basis) rows.push_back(flatten(m));
  const std::size_t r = rank_over_q(rows);
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      auto extended = rows;
      extended.push_back(flatten(commutator(basis[x], basis[y])));
      if (rank_over_q(std::move(extended)) != r) return false;
    }
  return true;
}

}  // namespace crg
