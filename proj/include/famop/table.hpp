#pragma once

#include <string>
#include <vector>

namespace famop {

// Row-major Cayley table on {0..size-1}: at(a, b) = a·b.
struct Table {
  int size = 0;
  std::vector<int> cells;

  Table() = default;
  Table(int n, std::vector<int> c);
  explicit Table(const std::vector<std::vector<int>>& rows);

  static Table constant(int n, int value);
  static Table left_projection(int n);
  static Table right_projection(int n);

  int at(int a, int b) const { return cells[static_cast<std::size_t>(a * size + b)]; }
  int operator()(int a, int b) const { return at(a, b); }
  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;

  bool operator==(const Table&) const = default;
  auto operator<=>(const Table&) const = default;
};

}  // namespace famop
