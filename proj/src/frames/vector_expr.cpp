#include <algorithm>
#include <ostream>

#include "crg/errors.hpp"
#include "crg/frames/frame_calculus.hpp"

namespace crg {

VectorExpr::VectorExpr(const std::string& frame, StarPoly coeff) { set(frame, std::move(coeff)); }

StarPoly VectorExpr::coeff(const std::string& frame) const {
  auto it = terms_.find(frame);
  return it == terms_.end() ? StarPoly() : it->second;
}

void VectorExpr::set(const std::string& frame, StarPoly coeff) {
  if (coeff.is_zero())
    terms_.erase(frame);
  else
    terms_[frame] = std::move(coeff);
}

VectorExpr VectorExpr::operator-() const {
  VectorExpr out;
  for (const auto& [f, c] : terms_) out.terms_.emplace(f, -c);
  return out;
}

VectorExpr& VectorExpr::operator+=(const VectorExpr& o) {
  for (const auto& [f, c] : o.terms_) set(f, coeff(f) + c);
  return *this;
}

VectorExpr& VectorExpr::operator-=(const VectorExpr& o) {
  for (const auto& [f, c] : o.terms_) set(f, coeff(f) - c);
  return *this;
}

VectorExpr operator*(const StarPoly& f, const VectorExpr& x) {
  VectorExpr out;
  for (const auto& [frame, c] : x.terms_) out.set(frame, f * c);
  return out;
}

std::string VectorExpr::str(const std::vector<std::string>& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& f : order)
    if (terms_.count(f) != 0) names.push_back(f);
  for (const auto& [f, c] : terms_)
    if (std::find(names.begin(), names.end(), f) == names.end()) names.push_back(f);

  std::string out;
  for (const auto& f : names) {
    const StarPoly& c = terms_.at(f);
    std::string piece;
    if (c == StarPoly(1))
      piece = f;
    else if (c == StarPoly(-1))
      piece = "-" + f;
    else if (c.is_single_term())
      piece = c.str() + "*" + f;
    else
      piece = "(" + c.str() + ")*" + f;
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const VectorExpr& x) { return os << x.str(); }

VectorExpr vf_conj(const VectorExpr& x) {
  VectorExpr out;
  for (const auto& [f, c] : x.terms()) out.set(conj_derivation(f), c.conj());
  return out;
}

bool BracketTable::find(const std::string& x, const std::string& y, VectorExpr& out) const {
  if (auto it = entries_.find({x, y}); it != entries_.end()) {
    out = it->second;
    return true;
  }
  if (auto it = entries_.find({y, x}); it != entries_.end()) {
    out = -it->second;
    return true;
  }
  const std::string xb = conj_derivation(x);
  const std::string yb = conj_derivation(y);
  if (auto it = entries_.find({xb, yb}); it != entries_.end()) {
    out = vf_conj(it->second);
    return true;
  }
  if (auto it = entries_.find({yb, xb}); it != entries_.end()) {
    out = -vf_conj(it->second);
    return true;
  }
  return false;
}

bool BracketTable::contains(const std::string& x, const std::string& y) const {
  VectorExpr tmp;
  return x == y || find(x, y, tmp);
}

void BracketTable::add(const std::string& x, const std::string& y, const VectorExpr& value) {
  if (x == y) {
    if (!value.is_zero()) throw Error("bracket [" + x + "," + x + "] must vanish");
    return;
  }
  VectorExpr existing;
  if (find(x, y, existing)) {
    if (existing != value)
      throw Error("bracket [" + x + "," + y + "] = " + value.str() + " contradicts the table value " + existing.str());
    return;
  }
  // A pair that conjugation maps to itself constrains its own value.
  const std::string xb = conj_derivation(x);
  const std::string yb = conj_derivation(y);
  if ((xb == x && yb == y && vf_conj(value) != value) || (xb == y && yb == x && vf_conj(value) != -value))
    throw Error("bracket [" + x + "," + y + "] = " + value.str() + " is not compatible with conjugation");
  entries_.emplace(std::make_pair(x, y), value);
}

VectorExpr BracketTable::lookup(const std::string& x, const std::string& y) const {
  if (x == y) return {};
  VectorExpr out;
  if (!find(x, y, out)) throw UntabulatedBracket("bracket [" + x + "," + y + "] is not tabulated");
  return out;
}

VectorExpr vf_bracket(const VectorExpr& x, const VectorExpr& y, const BracketTable& table) {
  VectorExpr out;
  for (const auto& [fx, cx] : x.terms())
    for (const auto& [fy, cy] : y.terms()) {
      if (fx != fy) out += (cx * cy) * table.lookup(fx, fy);
      out += VectorExpr(fy, cx * cy.derive(fx));
      out -= VectorExpr(fx, cy * cx.derive(fy));
    }
  return out;
}

}  // namespace crg
