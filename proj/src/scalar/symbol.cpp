#include "crg/scalar/symbol.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <tuple>

#include "crg/errors.hpp"

namespace crg {
namespace detail {

struct SymbolData {
  std::string base;
  SymbolKind kind;
  bool base_conj = false;
  std::vector<std::string> prefix;
  std::string display;
  const SymbolData* conj = nullptr;
};

}  // namespace detail

namespace {

using Key = std::tuple<std::string, bool, bool, bool, std::vector<std::string>>;

struct Registry {
  std::mutex mu;
  std::map<Key, std::unique_ptr<detail::SymbolData>> symbols;
  std::map<std::string, std::string> derivations;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string render(const std::string& base, bool base_conj, const std::vector<std::string>& prefix) {
  std::string out = base_conj ? "conj(" + base + ")" : base;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = *it + "(" + out + ")";
  return out;
}

// Caller holds the registry lock.
detail::SymbolData* intern_locked(Registry& r, const std::string& base, SymbolKind kind, bool base_conj,
                                  const std::vector<std::string>& prefix) {
  if (kind.real) base_conj = false;
  Key key{base, kind.unit, kind.real, base_conj, prefix};
  auto it = r.symbols.find(key);
  if (it != r.symbols.end()) return it->second.get();
  auto data = std::make_unique<detail::SymbolData>();
  data->base = base;
  data->kind = kind;
  data->base_conj = base_conj;
  data->prefix = prefix;
  data->display = render(base, base_conj, prefix);
  auto* raw = data.get();
  r.symbols.emplace(std::move(key), std::move(data));
  return raw;
}

const detail::SymbolData* intern(const std::string& base, SymbolKind kind, bool base_conj,
                                 std::vector<std::string> prefix) {
  if (base.empty()) throw Error("empty symbol name");
  if (!prefix.empty()) kind.unit = false;
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::vector<std::string> conj_prefix;
  conj_prefix.reserve(prefix.size());
  for (const auto& p : prefix) {
    auto d = r.derivations.find(p);
    if (d == r.derivations.end()) throw Error("unregistered derivation '" + p + "'");
    conj_prefix.push_back(d->second);
  }
  auto* self = intern_locked(r, base, kind, base_conj, prefix);
  if (self->conj == nullptr) {
    auto* partner = intern_locked(r, base, kind, !base_conj, conj_prefix);
    self->conj = partner;
    partner->conj = self;
  }
  return self;
}

}  // namespace

Symbol Symbol::make(std::string_view base, SymbolKind kind) {
  return Symbol(intern(std::string(base), kind, false, {}));
}

Symbol Symbol::make_atom(std::string_view base, SymbolKind base_kind, bool base_conjugated,
                         std::vector<std::string> prefix) {
  return Symbol(intern(std::string(base), base_kind, base_conjugated, std::move(prefix)));
}

const std::string& Symbol::base() const { return d_->base; }
bool Symbol::base_conjugated() const { return d_->base_conj; }
const std::vector<std::string>& Symbol::prefix() const { return d_->prefix; }
SymbolKind Symbol::base_kind() const { return d_->kind; }
bool Symbol::is_unit() const { return d_->kind.unit && d_->prefix.empty(); }
bool Symbol::is_self_conjugate() const { return d_->conj == d_; }
Symbol Symbol::conj() const { return Symbol(d_->conj); }
const std::string& Symbol::str() const { return d_->display; }

Symbol Symbol::derive(const std::string& derivation) const {
  std::vector<std::string> prefix;
  prefix.reserve(d_->prefix.size() + 1);
  prefix.push_back(derivation);
  prefix.insert(prefix.end(), d_->prefix.begin(), d_->prefix.end());
  return Symbol(intern(d_->base, d_->kind, d_->base_conj, std::move(prefix)));
}

bool operator<(const Symbol& a, const Symbol& b) {
  if (a.d_ == b.d_) return false;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  const bool xu = a.is_unit();
  const bool yu = b.is_unit();
  if (xu != yu) return xu;
  if (x.base != y.base) return x.base < y.base;
  if (x.prefix != y.prefix) return x.prefix < y.prefix;
  if (x.base_conj != y.base_conj) return !x.base_conj;
  if (x.kind.unit != y.kind.unit) return x.kind.unit;
  return x.kind.real && !y.kind.real;
}

std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.str(); }

void register_derivation(const std::string& name, const std::string& conj_name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto check = [&](const std::string& n, const std::string& c) {
    auto it = r.derivations.find(n);
    if (it != r.derivations.end() && it->second != c)
      throw Error("derivation '" + n + "' already registered with conjugate '" + it->second + "'");
  };
  check(name, conj_name);
  check(conj_name, name);
  r.derivations[name] = conj_name;
  r.derivations[conj_name] = name;
}

bool is_registered_derivation(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.derivations.count(name) != 0;
}

std::string conj_derivation(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.derivations.find(name);
  if (it == r.derivations.end()) throw Error("unregistered derivation '" + name + "'");
  return it->second;
}

}  // namespace crg
