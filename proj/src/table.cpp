#include "famop/table.hpp"

#include <sstream>

#include "famop/errors.hpp"

namespace famop {

Table::Table(int n, std::vector<int> c) : size(n), cells(std::move(c)) {
  if (n < 1) throw ValidationError("table size must be positive");
  if (cells.size() != static_cast<std::size_t>(n * n))
    throw ValidationError("table must have " + std::to_string(n * n) + " cells");
  for (int v : cells)
    if (v < 0 || v >= n) throw ValidationError("table entry " + std::to_string(v) + " out of range");
}

Table::Table(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> c;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw ValidationError("table must be square");
    c.insert(c.end(), r.begin(), r.end());
  }
  *this = Table(n, std::move(c));
}

Table Table::constant(int n, int value) { return Table(n, std::vector<int>(static_cast<std::size_t>(n * n), value)); }

Table Table::left_projection(int n) {
  std::vector<int> c;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.push_back(a);
  return Table(n, c);
}

Table Table::right_projection(int n) {
  std::vector<int> c;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.push_back(b);
  return Table(n, c);
}

std::vector<std::vector<int>> Table::rows() const {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) r[static_cast<std::size_t>(a)].push_back(at(a, b));
  return r;
}

std::string Table::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int a = 0; a < size; ++a) {
    out << (a ? "," : "") << "[";
    for (int b = 0; b < size; ++b) out << (b ? "," : "") << at(a, b);
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace famop
