#include "symk/perm.hpp"

#include <cctype>
#include <sstream>

namespace symk {

VariableMap VariableMap::transposition(VarId a, VarId b) {
  VariableMap m;
  if (a != b) {
    m.map_[a] = b;
    m.map_[b] = a;
  }
  return m;
}

VariableMap VariableMap::from_pairs(const std::vector<std::pair<VarId, VarId>>& pairs) {
  VariableMap m;
  std::set<VarId> images;
  for (const auto& [from, to] : pairs) {
    if (m.map_.count(from)) throw PreconditionError("variable map defines a source twice");
    if (!images.insert(to).second) throw PreconditionError("variable map is not injective");
    if (from != to) m.map_[from] = to;
  }
  return m;
}

VarId VariableMap::operator()(VarId v) const {
  auto it = map_.find(v);
  return it == map_.end() ? v : it->second;
}

std::set<VarId> VariableMap::support() const {
  std::set<VarId> s;
  for (const auto& [from, to] : map_) s.insert(from);
  return s;
}

bool VariableMap::is_bijection_of_support() const {
  std::set<VarId> images;
  for (const auto& [from, to] : map_) images.insert(to);
  return images == support();
}

VariableMap VariableMap::compose(const VariableMap& inner) const {
  VariableMap r;
  std::set<VarId> domain = inner.support();
  for (const auto& [from, to] : map_) domain.insert(from);
  for (VarId v : domain) {
    VarId image = (*this)(inner(v));
    if (image != v) r.map_[v] = image;
  }
  // composition of injective maps is injective on the combined support
  return r;
}

VariableMap VariableMap::inverse() const {
  if (!is_bijection_of_support()) throw PreconditionError("variable map is not a bijection of its support");
  VariableMap r;
  for (const auto& [from, to] : map_) r.map_[to] = from;
  return r;
}

std::string VariableMap::str(const Registry& reg) const {
  if (map_.empty()) return "()";
  std::ostringstream os;
  std::set<VarId> seen;
  for (const auto& entry : map_) {
    VarId start = entry.first;
    if (seen.count(start)) continue;
    // emit the cycle through start
    std::vector<VarId> cycle;
    VarId v = start;
    do {
      cycle.push_back(v);
      seen.insert(v);
      v = (*this)(v);
    } while (v != start);
    if (cycle.size() < 2) continue;
    os << "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << " ";
      os << reg.name(cycle[i]);
    }
    os << ")";
  }
  return os.str();
}

RationalFunction apply_substitution(const RationalFunction& f, const VariableMap& sigma) {
  if (sigma.is_identity()) return f;
  return f.rename(sigma.mapping());
}

bool is_invariant(const RationalFunction& f, const std::vector<VariableMap>& gens) {
  for (const auto& g : gens) {
    if (!g.is_bijection_of_support())
      throw PreconditionError("invariance generator is not a bijection of its support");
    if (apply_substitution(f, g) != f) return false;
  }
  return true;
}

std::set<RationalFunction> orbit(const RationalFunction& f, const std::vector<VariableMap>& group) {
  std::set<VariableMap> elements(group.begin(), group.end());
  for (const auto& a : group)
    for (const auto& b : group)
      if (!elements.count(a.compose(b)))
        throw PreconditionError("group list is not closed under composition");
  std::set<RationalFunction> out;
  for (const auto& g : group) out.insert(apply_substitution(f, g));
  return out;
}

VariableMap parse_cycles(const std::string& text, Registry& reg) {
  std::vector<std::pair<VarId, VarId>> pairs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return VariableMap::identity();
  std::vector<VariableMap> cycles;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
    ++pos;
    std::vector<VarId> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isalpha((unsigned char)text[pos]) && text[pos] != '_')
        throw ParseError("expected variable name in cycle", pos);
      std::string name;
      while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        name.push_back(text[pos++]);
      cycle.push_back(reg.get_or_add(name));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;  // tolerate commas
    }
    std::vector<std::pair<VarId, VarId>> cpairs;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) cpairs.push_back({cycle[i], cycle[i + 1]});
    if (cycle.size() > 1) cpairs.push_back({cycle.back(), cycle.front()});
    cycles.push_back(VariableMap::from_pairs(cpairs));
  }
  VariableMap result = VariableMap::identity();
  // standard convention: the product of cycles, rightmost applied first
  for (auto it = cycles.begin(); it != cycles.end(); ++it) result = result.compose(*it);
  return result;
}

}  // namespace symk
