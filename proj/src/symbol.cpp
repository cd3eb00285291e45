#include "famop/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "famop/errors.hpp"

namespace famop {

namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;

  SymbolTable() {
    names.emplace_back("x");
    ids.emplace("x", 0);
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  if (!is_identifier(name)) throw ValidationError("invalid identifier '" + std::string(name) + "'");
  auto& t = table();
  std::string key(name);
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(key);
    if (it != t.ids.end()) return Symbol(it->second);
  }
  std::unique_lock lock(t.mutex);
  auto it = t.ids.find(key);
  if (it != t.ids.end()) return Symbol(it->second);
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(std::move(key), id);
  return Symbol(id);
}

const std::string& Symbol::name() const {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.names[id_];
}

Symbol alphabet_symbol(int index) {
  static const char* first[] = {"x", "y", "z"};
  if (index >= 0 && index < 3) return Symbol::intern(first[index]);
  return Symbol::intern("x" + std::to_string(index));
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  if (s == "_") return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_' && c != '\'') return false;
  }
  return true;
}

}  // namespace famop
