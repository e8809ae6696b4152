#include "coulomb/variables.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace coulomb::vars {

namespace {

struct Table {
  std::mutex mu;
  std::vector<std::string> names;
  std::map<std::string, VarId, std::less<>> ids;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

VarId intern(std::string_view name) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  VarId id = static_cast<VarId>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return id;
}

std::optional<VarId> lookup(std::string_view name) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it == t.ids.end()) return std::nullopt;
  return it->second;
}

const std::string& name(VarId id) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  if (id >= t.names.size()) throw std::out_of_range("unknown variable id");
  return t.names[id];
}

std::size_t count() {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.size();
}

}  // namespace coulomb::vars
