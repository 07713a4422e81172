#include "symk/registry.hpp"

#include <cctype>

namespace symk {

namespace {
bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha((unsigned char)name[0]) && name[0] != '_') return false;
  for (char ch : name)
    if (!std::isalnum((unsigned char)ch) && ch != '_') return false;
  return true;
}
}  // namespace

VarId Registry::add(const std::string& name) {
  if (!valid_name(name)) throw PreconditionError("invalid variable name '" + name + "'");
  std::lock_guard<std::mutex> lock(mu_);
  if (index_.count(name)) throw PreconditionError("variable '" + name + "' already registered");
  VarId id = (VarId)names_.size();
  names_.push_back(name);
  index_[name] = id;
  return id;
}

VarId Registry::get_or_add(const std::string& name) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (!closed_) {
      if (!valid_name(name)) throw PreconditionError("invalid variable name '" + name + "'");
      VarId id = (VarId)names_.size();
      names_.push_back(name);
      index_[name] = id;
      return id;
    }
  }
  throw PreconditionError("unknown variable '" + name + "' in closed registry");
}

std::optional<VarId> Registry::lookup(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Registry::name(VarId id) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (id >= names_.size()) throw PreconditionError("unknown variable id " + std::to_string(id));
  return names_[id];
}

std::size_t Registry::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.size();
}

VarId Registry::add_fresh(const std::string& stem) {
  std::lock_guard<std::mutex> lock(mu_);
  std::string candidate = stem;
  int suffix = 0;
  while (index_.count(candidate)) candidate = stem + "_" + std::to_string(++suffix);
  VarId id = (VarId)names_.size();
  names_.push_back(candidate);
  index_[candidate] = id;
  return id;
}

}  // namespace symk
