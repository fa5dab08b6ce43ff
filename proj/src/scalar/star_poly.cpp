#include "crg/scalar/star_poly.hpp"

#include <algorithm>

namespace crg {

Monomial::Monomial(Symbol s, unsigned exp) {
  if (exp != 0) factors_.emplace_back(s, exp);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(s, e);
  }
  return m;
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(const Symbol& s) const {
  for (const auto& [sym, e] : factors_)
    if (sym == s) return e;
  return 0;
}

bool Monomial::only_units() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.is_unit(); });
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [s, e] : factors_)
    if (other.exponent(s) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (const auto& [s, e] : other.factors_) {
    const unsigned mine = exponent(s);
    if (e > mine) q.factors_.emplace_back(s, e - mine);
  }
  return q;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial g;
  for (const auto& [s, e] : a.factors_) {
    const unsigned o = b.exponent(s);
    if (o != 0) g.factors_.emplace_back(s, std::min(e, o));
  }
  return g;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> all = a.factors_;
  for (const auto& [s, e] : b.factors_) {
    const unsigned o = a.exponent(s);
    if (e > o) all.emplace_back(s, e - o);
  }
  return from_factors(std::move(all));
}

Monomial Monomial::conj() const {
  std::vector<Factor> fs;
  fs.reserve(factors_.size());
  for (const auto& [s, e] : factors_) fs.emplace_back(s.conj(), e);
  return from_factors(std::move(fs));
}

Monomial Monomial::without(const Symbol& s) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != s) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += "*";
    out += s.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

StarPoly::StarPoly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

StarPoly::StarPoly(Symbol s) { terms_.emplace(Monomial(s), GaussRat(1)); }

StarPoly::StarPoly(Monomial m, GaussRat c) {
  if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

bool StarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRat StarPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? GaussRat(0) : it->second;
}

unsigned StarPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::set<Symbol> StarPoly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

void StarPoly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

StarPoly StarPoly::conj() const {
  StarPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.conj(), c.conj());
  return out;
}

StarPoly StarPoly::pow(unsigned n) const {
  StarPoly result(1);
  StarPoly base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n != 0) base *= base;
  }
  return result;
}

StarPoly StarPoly::partial(const Symbol& s) const {
  StarPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(s);
    if (e == 0) continue;
    Monomial rest = m.without(s) * Monomial(s, e - 1);
    out.add_term(rest, c * GaussRat(static_cast<long>(e)));
  }
  return out;
}

StarPoly StarPoly::derive(const std::string& derivation) const {
  StarPoly out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m.factors()) {
      Monomial rest = m.without(s) * Monomial(s, e - 1) * Monomial(s.derive(derivation));
      out.add_term(rest, c * GaussRat(static_cast<long>(e)));
    }
  }
  return out;
}

StarPoly StarPoly::times(const Monomial& m) const {
  StarPoly out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

StarPoly StarPoly::divided_by(const Monomial& m) const {
  StarPoly out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(m.quotient_of(t), c);
  return out;
}

Monomial StarPoly::content_monomial() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [t, c] : terms_) {
    g = Monomial::gcd(g, t);
    if (g.is_one()) break;
  }
  return g;
}

StarPoly StarPoly::operator-() const {
  StarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

StarPoly& StarPoly::operator+=(const StarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

StarPoly& StarPoly::operator-=(const StarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

StarPoly operator*(const StarPoly& a, const StarPoly& b) {
  StarPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

StarPoly& StarPoly::operator*=(const StarPoly& o) { return *this = *this * o; }

StarPoly& StarPoly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

// Coefficient rendering for one term; returns the sign separately.
std::string term_string(const Monomial& m, const GaussRat& c, bool& negative) {
  GaussRat k = c;
  negative = false;
  if (k.is_real() && sgn(k.re()) < 0) {
    negative = true;
    k = -k;
  } else if (sgn(k.re()) == 0 && sgn(k.im()) < 0) {
    negative = true;
    k = -k;
  }
  if (m.is_one()) return to_string(k);
  if (k.is_one()) return m.str();
  return to_string(k) + "*" + m.str();
}

}  // namespace

std::string StarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = false;
    const std::string t = term_string(m, c, neg);
    if (first)
      out = neg ? "-" + t : t;
    else
      out += (neg ? " - " : " + ") + t;
    first = false;
  }
  return out;
}

std::string to_string(const StarPoly& p) { return p.str(); }

}  // namespace crg
