#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace crg {

// How a base identifier behaves under conjugation and division.
struct SymbolKind {
  bool unit = false;  // invertible: may appear in denominators
  bool real = false;  // conj(s) == s

  friend bool operator==(const SymbolKind&, const SymbolKind&) = default;
};

namespace detail {
struct SymbolData;
}

/// Interned ring variable. Covers plain identifiers (a, conj(a)) as well as
/// derivation atoms X(f) built by applying frame derivations to a base
/// identifier. Copies are pointer-sized; the registry lives for the process.
///
/// Identity is (base name, kind, derivation prefix, conjugated flag), so a
/// unit `c` and a free `c` are distinct symbols.
class Symbol {
 public:
  // Plain identifier, unconjugated.
  static Symbol make(std::string_view base, SymbolKind kind = {});
  // Derivation atom: prefix is outermost-first, e.g. {"L","Lbar"} is L(Lbar(base)).
  static Symbol make_atom(std::string_view base, SymbolKind base_kind, bool base_conjugated,
                          std::vector<std::string> prefix);

  const std::string& base() const;
  bool base_conjugated() const;
  const std::vector<std::string>& prefix() const;
  SymbolKind base_kind() const;

  // Units are only bare identifiers; derivation atoms never are.
  bool is_unit() const;
  // conj(*this) == *this
  bool is_self_conjugate() const;
  bool is_atom() const { return !prefix().empty(); }

  Symbol conj() const;
  // X(*this) for a registered derivation X.
  Symbol derive(const std::string& derivation) const;

  // Grammar rendering: a, conj(a), L(conj(a)), Lbar(T(b)).
  const std::string& str() const;

  // Canonical global order: units first, then by base name, derivation
  // prefix, conjugation.
  friend bool operator<(const Symbol& a, const Symbol& b);
  friend bool operator==(const Symbol& a, const Symbol& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return a.d_ != b.d_; }

  std::size_t hash() const noexcept { return std::hash<const void*>{}(d_); }

 private:
  explicit Symbol(const detail::SymbolData* d) : d_(d) {}
  const detail::SymbolData* d_;
};

std::ostream& operator<<(std::ostream& os, const Symbol& s);

// Derivations (frame fields) known to the symbol layer, with their conjugate
// partner. Registering the same name twice with the same partner is a no-op;
// a conflicting partner throws crg::Error.
void register_derivation(const std::string& name, const std::string& conj_name);
bool is_registered_derivation(const std::string& name);
std::string conj_derivation(const std::string& name);

}  // namespace crg

template <>
struct std::hash<crg::Symbol> {
  std::size_t operator()(const crg::Symbol& s) const noexcept { return s.hash(); }
};
