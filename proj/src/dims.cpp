#include "famop/dims.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "famop/errors.hpp"

namespace famop {

IntPoly::IntPoly(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

IntPoly::IntPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return c_.empty() ? 0 : k;
}

IntPoly IntPoly::divide_by_w_power(std::size_t k) const {
  if (is_zero()) return {};
  if (valuation() < k) throw DomainError("polynomial not divisible by w^" + std::to_string(k));
  return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

BigInt IntPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string IntPoly::to_string() const {
  std::ostringstream out;
  out << "[";
  if (c_.empty()) out << "0";
  for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? "," : "") << c_[i];
  out << "]";
  return out.str();
}

IntPoly IntPoly::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t')) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  std::vector<BigInt> coeffs;
  for (;;) {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("expected integer", start);
    coeffs.emplace_back(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or ']'", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  return IntPoly(std::move(coeffs));
}

std::string IntPoly::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "w";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

PolySeries::PolySeries(std::vector<IntPoly> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw PreconditionError("series order must be at least 1");
}

BigInt catalan(int k) {
  if (k < 1) throw DomainError("Catalan index must be at least 1");
  // C(2k-2, k-1)/k computed multiplicatively
  BigInt c = 1;
  int m = k - 1;
  for (int i = 1; i <= m; ++i) c = c * (m + i) / i;
  return c / k;
}

namespace {

constexpr int kMaxSeriesOrder = 64;

// Coefficients 1..n of a product of two series given by index (index 0 unused and zero).
std::vector<IntPoly> series_mul(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b, std::size_t n) {
  std::vector<IntPoly> r(n + 1);
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

PolySeries r_sequence(int n_max) {
  if (n_max < 1) throw PreconditionError("order must be at least 1");
  if (n_max > kMaxSeriesOrder) throw ResourceError("order exceeds " + std::to_string(kMaxSeriesOrder));
  const IntPoly w = IntPoly::w();
  const IntPoly c3 = w * w * (w - 1);
  const IntPoly c2a = w * w;
  const IntPoly c2b = w * (2 * w - 2);
  const IntPoly c1 = 2 * w;

  std::vector<IntPoly> r(static_cast<std::size_t>(n_max) + 1);
  std::vector<IntPoly> s2(static_cast<std::size_t>(n_max) + 1);
  std::vector<IntPoly> s3(static_cast<std::size_t>(n_max) + 1);
  r[1] = 1;
  for (std::size_t n = 2; n <= static_cast<std::size_t>(n_max); ++n) {
    for (std::size_t i = 1; i < n; ++i) s2[n] += r[i] * r[n - i];
    for (std::size_t i = 1; i + 2 <= n; ++i) s3[n] += r[i] * s2[n - i];
    r[n] = c3 * s3[n] + c2a * s2[n - 1] + c2b * s2[n] + c1 * r[n - 1];
  }
  return PolySeries(std::vector<IntPoly>(r.begin() + 1, r.end()));
}

LawReport verify_identities(int n_max) {
  LawReport report("dims");
  PolySeries series = r_sequence(n_max);
  const auto N = static_cast<std::size_t>(n_max);
  std::vector<IntPoly> R(N + 1);
  for (std::size_t n = 1; n <= N; ++n) R[n] = series.at(static_cast<int>(n));

  const IntPoly w = IntPoly::w();
  auto R2 = series_mul(R, R, N);
  auto R3 = series_mul(R2, R, N);
  for (std::size_t m = 0; m <= N; ++m) {
    IntPoly res = w * w * (w - 1) * R3[m] + w * (2 * w - 2) * R2[m] - R[m];
    if (m >= 1) res += w * w * R2[m - 1] + 2 * w * R[m - 1];
    if (m == 1) res += 1;
    ++report.instances;
    if (!res.is_zero()) report.fail("cubic", {"X^" + std::to_string(m), res.to_string()});
  }

  for (int n = 1; n <= n_max; ++n) {
    const IntPoly& r = series.at(n);
    report.instances += 5;
    if (r.degree() != 2 * n - 2) report.fail("degree", {std::to_string(n), std::to_string(r.degree())});
    BigInt lc = BigInt(1) << (n - 1);
    lc *= catalan(n);
    if (r.leading() != lc) report.fail("leading_coefficient", {std::to_string(n), r.leading().str()});
    if (n >= 2) {
      if (r.valuation() < static_cast<std::size_t>(n)) {
        report.fail("w_power_divides", {std::to_string(n), r.to_string()});
      } else {
        BigInt t0 = r.divide_by_w_power(static_cast<std::size_t>(n)).coeff(0);
        BigInt expected = (n % 2 == 0) ? BigInt(n) : BigInt(-n);
        if (t0 != expected) report.fail("t_n_at_zero", {std::to_string(n), t0.str()});
      }
    }
    if (r(1) != catalan(n + 1)) report.fail("value_at_one", {std::to_string(n), r(1).str()});
    if (n % 2 == 0) {
      for (const auto& c : r.coeffs())
        if (c % 2 != 0) {
          report.fail("even_coefficients", {std::to_string(n), r.to_string()});
          break;
        }
    }
  }
  return report;
}

BigInt evaluate(const IntPoly& p, const BigInt& w) { return p(w); }

std::vector<BigInt> evaluate(const PolySeries& s, const BigInt& w) {
  std::vector<BigInt> out;
  for (const auto& p : s.terms()) out.push_back(p(w));
  return out;
}

int DecoratedOpTree::leaves() const {
  int n = 0;
  for (const auto& v : preorder) n += v.leaf ? 1 : 0;
  return n;
}

std::string DecoratedOpTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  std::function<void()> rec = [&] {
    const Vertex& v = preorder.at(pos++);
    if (v.leaf) {
      out += "_";
      return;
    }
    out += "(";
    out += v.op == DendOp::Prec ? "<" : ">";
    out += " " + std::to_string(v.alpha) + " " + std::to_string(v.beta) + " ";
    rec();
    out += " ";
    rec();
    out += ")";
  };
  if (!preorder.empty()) rec();
  return out;
}

BasisTables BasisTables::projections(int w) { return {Table::left_projection(w), Table::left_projection(w)}; }

std::vector<DecoratedOpTree> enumerate_op_trees(int n, int w, std::size_t limit) {
  if (n < 1 || w < 1) throw PreconditionError("leaf count and parameter size must be positive");
  // memo[k] = all trees with k leaves, as preorder sequences
  std::vector<std::vector<std::vector<DecoratedOpTree::Vertex>>> memo(static_cast<std::size_t>(n) + 1);
  memo[1] = {{DecoratedOpTree::Vertex{}}};
  for (int k = 2; k <= n; ++k) {
    auto& out = memo[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) {
      for (const auto& l : memo[static_cast<std::size_t>(i)]) {
        for (const auto& r : memo[static_cast<std::size_t>(k - i)]) {
          for (int op = 0; op < 2; ++op)
            for (int a = 0; a < w; ++a)
              for (int b = 0; b < w; ++b) {
                if (out.size() >= limit) throw ResourceError("decorated tree enumeration exceeds limit");
                std::vector<DecoratedOpTree::Vertex> t;
                t.reserve(l.size() + r.size() + 1);
                t.push_back({false, op == 0 ? DendOp::Prec : DendOp::Succ, a, b});
                t.insert(t.end(), l.begin(), l.end());
                t.insert(t.end(), r.begin(), r.end());
                out.push_back(std::move(t));
              }
        }
      }
    }
  }
  std::vector<DecoratedOpTree> result;
  for (auto& t : memo[static_cast<std::size_t>(n)]) result.push_back(DecoratedOpTree{std::move(t)});
  return result;
}

namespace {

bool forbidden(const BasisTables& t, DendOp parent_op, int parent_alpha, const DecoratedOpTree::Vertex& child) {
  if (parent_op == DendOp::Prec && child.op == DendOp::Prec) return parent_alpha == t.left(child.alpha, child.beta);
  if (parent_op == DendOp::Prec && child.op == DendOp::Succ) return parent_alpha == t.right(child.alpha, child.beta);
  return child.op == DendOp::Succ && parent_alpha == t.right(child.alpha, child.beta);
}

}  // namespace

bool avoids_patterns(const DecoratedOpTree& t, const BasisTables& tables) {
  const auto& p = t.preorder;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].leaf) continue;
    // the left child immediately follows its parent in preorder
    const auto& child = p.at(i + 1);
    if (!child.leaf && forbidden(tables, p[i].op, p[i].alpha, child)) return false;
  }
  return true;
}

BigInt count_basis_trees(int n, int w) { return count_basis_trees(n, BasisTables::projections(w)); }

BigInt count_basis_trees(int n, const BasisTables& tables, int max_n, int max_w) {
  const int w = tables.left.size;
  if (tables.right.size != w) throw PreconditionError("tables must share one size");
  if (n < 1 || w < 1) throw PreconditionError("leaf count and parameter size must be positive");
  if (n > max_n || w > max_w)
    throw ResourceError("count_basis_trees bound exceeded (n <= " + std::to_string(max_n) +
                        ", w <= " + std::to_string(max_w) + ")");
  const int decs = 2 * w * w;
  auto dec_of = [&](int d) {
    DecoratedOpTree::Vertex v;
    v.leaf = false;
    v.op = d < w * w ? DendOp::Prec : DendOp::Succ;
    v.alpha = (d % (w * w)) / w;
    v.beta = d % w;
    return v;
  };
  // by_root[m][d]: admissible trees with m leaves whose root carries decoration d
  std::vector<std::vector<BigInt>> by_root(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(decs), 0));
  std::vector<BigInt> total(static_cast<std::size_t>(n) + 1, 0);
  total[1] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int d = 0; d < decs; ++d) {
      auto parent = dec_of(d);
      BigInt sum = 0;
      for (int i = 1; i < m; ++i) {
        BigInt left = 0;
        if (i == 1) {
          left = 1;
        } else {
          for (int c = 0; c < decs; ++c)
            if (!forbidden(tables, parent.op, parent.alpha, dec_of(c))) left += by_root[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        }
        sum += left * total[static_cast<std::size_t>(m - i)];
      }
      by_root[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] = sum;
      total[static_cast<std::size_t>(m)] += sum;
    }
  }
  return total[static_cast<std::size_t>(n)];
}

}  // namespace famop
