#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace famop {

// Interned identifier used for tree decorations. Ordering follows interning order.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name);
  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  auto operator<=>(const Symbol&) const = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Default alphabet: x, y, z, then x3, x4, ...
Symbol alphabet_symbol(int index);

bool is_identifier(std::string_view s);

}  // namespace famop
