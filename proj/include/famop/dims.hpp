#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "famop/law_report.hpp"
#include "famop/table.hpp"

namespace famop {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in w with arbitrary-precision integer coefficients, dense ascending, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long c);
  IntPoly(const BigInt& c);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, std::size_t power);
  static IntPoly w() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
  // Largest k with w^k dividing this polynomial (0 for the zero polynomial).
  std::size_t valuation() const;
  IntPoly divide_by_w_power(std::size_t k) const;
  BigInt operator()(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  // "[c0,c1,...]"
  std::string to_string() const;
  static IntPoly parse(const std::string& text);
  std::string pretty() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// Truncated series R = r_1 X + ... + r_N X^N with IntPoly coefficients.
class PolySeries {
 public:
  explicit PolySeries(std::vector<IntPoly> terms);
  int order() const { return static_cast<int>(terms_.size()); }
  // 1-based, as in r_1..r_N
  const IntPoly& at(int n) const { return terms_.at(static_cast<std::size_t>(n - 1)); }
  const std::vector<IntPoly>& terms() const { return terms_; }

 private:
  std::vector<IntPoly> terms_;
};

// Catalan numbers with Cat(1) = Cat(2) = 1, Cat(3) = 2, Cat(k) = C(2k-2, k-1)/k.
BigInt catalan(int k);

PolySeries r_sequence(int n_max);
LawReport verify_identities(int n_max);

BigInt evaluate(const IntPoly& p, const BigInt& w);
std::vector<BigInt> evaluate(const PolySeries& s, const BigInt& w);

enum class DendOp { Prec, Succ };

// Planar binary tree whose internal vertices carry (op, α, β); stored in preorder, leaves included.
struct DecoratedOpTree {
  struct Vertex {
    bool leaf = true;
    DendOp op = DendOp::Prec;
    int alpha = 0;
    int beta = 0;
    bool operator==(const Vertex&) const = default;
  };
  std::vector<Vertex> preorder;

  int leaves() const;
  std::string to_string() const;
  bool operator==(const DecoratedOpTree&) const = default;
};

struct BasisTables {
  Table left;
  Table right;
  static BasisTables projections(int w);
};

// All decorated trees with n leaves (no pattern filter); bounded by `limit` trees.
std::vector<DecoratedOpTree> enumerate_op_trees(int n, int w, std::size_t limit = 2'000'000);
bool avoids_patterns(const DecoratedOpTree& t, const BasisTables& tables);

BigInt count_basis_trees(int n, int w);
BigInt count_basis_trees(int n, const BasisTables& tables, int max_n = 8, int max_w = 4);

}  // namespace famop
