#include "famop/omega.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "famop/errors.hpp"

namespace famop {

OmegaStructure::OmegaStructure(Table left, Table right)
    : size(left.size), left_arrow(std::move(left)), right_arrow(std::move(right)) {
  if (size < 1) throw ValidationError("structure size must be positive");
  if (right_arrow.size != size) throw ValidationError("tables must share one size");
}

OmegaStructure::OmegaStructure(Table left, Table right, Table ltri, Table rtri)
    : OmegaStructure(std::move(left), std::move(right)) {
  if (ltri.size != size || rtri.size != size) throw ValidationError("tables must share one size");
  left_tri = std::move(ltri);
  right_tri = std::move(rtri);
}

std::vector<int> OmegaStructure::flattened() const {
  std::vector<int> out = left_arrow.cells;
  out.insert(out.end(), right_arrow.cells.begin(), right_arrow.cells.end());
  if (has_triangles()) {
    out.insert(out.end(), left_tri->cells.begin(), left_tri->cells.end());
    out.insert(out.end(), right_tri->cells.begin(), right_tri->cells.end());
  }
  return out;
}

Magma::Magma(Table t) : size(t.size), table(std::move(t)) {
  if (size < 1) throw ValidationError("magma size must be positive");
}

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::Diassociative: return "diassociative";
    case LawKind::Duplicial: return "duplicial";
    case LawKind::Edus: return "edus";
    case LawKind::Associative: return "associative";
    case LawKind::TwistAssociative: return "twist_associative";
    case LawKind::NapNapPrime: return "napnapprime";
    case LawKind::Perm: return "perm";
  }
  return "?";
}

LawKind parse_law_kind(const std::string& name) {
  for (auto k : {LawKind::Diassociative, LawKind::Duplicial, LawKind::Edus, LawKind::Associative,
                 LawKind::TwistAssociative, LawKind::NapNapPrime, LawKind::Perm})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown law kind '" + name + "'");
}

bool is_magma_kind(LawKind k) {
  return k == LawKind::Associative || k == LawKind::TwistAssociative || k == LawKind::NapNapPrime ||
         k == LawKind::Perm;
}

const std::vector<Identity>& identities(LawKind k) {
  static const std::vector<Identity> duplicial{
      {"prec_assoc", "(a<b)<c", "a<(b<c)"},
      {"succ_prec", "(a>b)<c", "a>(b<c)"},
      {"succ_assoc", "(a>b)>c", "a>(b>c)"},
  };
  static const std::vector<Identity> diassociative{
      {"prec_assoc", "(a<b)<c", "a<(b<c)"},
      {"prec_absorbs", "a<(b<c)", "a<(b>c)"},
      {"succ_prec", "(a>b)<c", "a>(b<c)"},
      {"succ_assoc", "(a>b)>c", "a>(b>c)"},
      {"succ_absorbs", "(a<b)>c", "a>(b>c)"},
  };
  static const std::vector<Identity> edus = [] {
    std::vector<Identity> v = duplicial;
    v.push_back({"rtri_prec_absorb", "a](b<c)", "a]b"});
    v.push_back({"ltri_succ_absorb", "(a>b)[c", "b[c"});
    v.push_back({"ltri_prec_split", "(a[b)<((a<b)[c)", "a[(b<c)"});
    v.push_back({"ltri_ltri_split", "(a[b)[((a<b)[c)", "b[c"});
    v.push_back({"rtri_rtri_split", "(a](b>c))](b]c)", "a]b"});
    v.push_back({"rtri_succ_split", "(a](b>c))>(b]c)", "(a>b)]c"});
    return v;
  }();
  static const std::vector<Identity> associative{{"associative", "a*(b*c)", "(a*b)*c"}};
  static const std::vector<Identity> twist{{"twist", "a*(b*c)", "(b*a)*c"}};
  static const std::vector<Identity> napnap{
      {"nap", "a*(b*c)", "b*(a*c)"},
      {"nap_prime", "(a*b)*c", "(b*a)*c"},
  };
  static const std::vector<Identity> perm{
      {"associative", "a*(b*c)", "(a*b)*c"},
      {"nap", "a*(b*c)", "b*(a*c)"},
      {"nap_prime", "(a*b)*c", "(b*a)*c"},
  };
  switch (k) {
    case LawKind::Diassociative: return diassociative;
    case LawKind::Duplicial: return duplicial;
    case LawKind::Edus: return edus;
    case LawKind::Associative: return associative;
    case LawKind::TwistAssociative: return twist;
    case LawKind::NapNapPrime: return napnap;
    case LawKind::Perm: return perm;
  }
  return associative;
}

namespace {

// Word in a, b, c compiled to a node array; op < 0 marks a variable leaf.
struct Expr {
  struct Node {
    int op = -1;
    int var = 0;
    int l = -1;
    int r = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
};

int op_index(char c) {
  switch (c) {
    case '<': return 0;
    case '>': return 1;
    case '[': return 2;
    case ']': return 3;
    case '*': return 0;
    default: return -1;
  }
}

class WordParser {
 public:
  explicit WordParser(const std::string& s) : s_(s) {}
  Expr parse() {
    Expr e;
    e.root = binary(e);
    if (pos_ != s_.size()) throw ParseError("trailing characters in identity", pos_);
    return e;
  }

 private:
  int atom(Expr& e) {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of identity", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      int n = binary(e);
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return n;
    }
    if (c == 'a' || c == 'b' || c == 'c') {
      ++pos_;
      e.nodes.push_back({-1, c - 'a', -1, -1});
      return static_cast<int>(e.nodes.size()) - 1;
    }
    throw ParseError("unexpected character in identity", pos_);
  }
  int binary(Expr& e) {
    int l = atom(e);
    if (pos_ >= s_.size() || op_index(s_[pos_]) < 0) return l;
    int op = op_index(s_[pos_++]);
    int r = atom(e);
    e.nodes.push_back({op, 0, l, r});
    return static_cast<int>(e.nodes.size()) - 1;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
};

struct CompiledIdentity {
  std::string id;
  Expr lhs;
  Expr rhs;
};

std::vector<CompiledIdentity> compile(LawKind k) {
  std::vector<CompiledIdentity> out;
  for (const auto& i : identities(k)) out.push_back({i.id, WordParser(i.lhs).parse(), WordParser(i.rhs).parse()});
  return out;
}

// cells: concatenated row-major tables, -1 for an unassigned cell; returns -1 when undetermined.
int eval(const Expr& e, int node, const std::array<int, 3>& vars, const std::vector<int>& cells, int n) {
  const auto& nd = e.nodes[static_cast<std::size_t>(node)];
  if (nd.op < 0) return vars[static_cast<std::size_t>(nd.var)];
  int l = eval(e, nd.l, vars, cells, n);
  if (l < 0) return -1;
  int r = eval(e, nd.r, vars, cells, n);
  if (r < 0) return -1;
  return cells[static_cast<std::size_t>(nd.op * n * n + l * n + r)];
}

LawReport run_check(const std::vector<int>& cells, int n, LawKind kind, bool stop_at_first) {
  LawReport report(to_string(kind));
  auto ids = compile(kind);
  for (const auto& ci : ids)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          std::array<int, 3> v{a, b, c};
          ++report.instances;
          int l = eval(ci.lhs, ci.lhs.root, v, cells, n);
          int r = eval(ci.rhs, ci.rhs.root, v, cells, n);
          if (l != r) {
            report.fail(ci.id, {std::to_string(a), std::to_string(b), std::to_string(c)});
            if (stop_at_first) return report;
          }
        }
  return report;
}

int tables_for(LawKind k) {
  if (is_magma_kind(k)) return 1;
  return k == LawKind::Edus ? 4 : 2;
}

std::vector<std::vector<int>> search(int n, LawKind kind) {
  auto ids = compile(kind);
  const int total = tables_for(kind) * n * n;
  std::vector<int> cells(static_cast<std::size_t>(total), -1);
  std::vector<std::vector<int>> found;

  struct Instance {
    const CompiledIdentity* ci;
    std::array<int, 3> v;
  };
  std::vector<Instance> instances;
  for (const auto& ci : ids)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) instances.push_back({&ci, {a, b, c}});

  auto consistent = [&] {
    for (const auto& in : instances) {
      int l = eval(in.ci->lhs, in.ci->lhs.root, in.v, cells, n);
      if (l < 0) continue;
      int r = eval(in.ci->rhs, in.ci->rhs.root, in.v, cells, n);
      if (r >= 0 && l != r) return false;
    }
    return true;
  };

  std::vector<int> next(static_cast<std::size_t>(total) + 1, 0);
  int k = 0;
  // iterative depth-first search over cells in flattened order
  while (k >= 0) {
    if (k == total) {
      found.push_back(cells);
      --k;
      continue;
    }
    auto uk = static_cast<std::size_t>(k);
    if (next[uk] >= n) {
      cells[uk] = -1;
      next[uk] = 0;
      --k;
      continue;
    }
    cells[uk] = next[uk]++;
    if (consistent()) ++k;
  }
  return found;
}

void check_enumeration_size(int size, const EnumerationLimits& limits) {
  if (size < 1) throw PreconditionError("size must be positive");
  int bound = limits.max_size;
  if (limits.allow_size4) bound = std::max(bound, 4);
  if (size > bound) throw ResourceError("enumeration size " + std::to_string(size) + " exceeds bound " + std::to_string(bound));
}

Table slice(const std::vector<int>& cells, int index, int n) {
  auto begin = cells.begin() + index * n * n;
  return Table(n, std::vector<int>(begin, begin + n * n));
}

}  // namespace

LawReport check_laws(const OmegaStructure& s, LawKind kind, bool stop_at_first) {
  if (is_magma_kind(kind)) {
    if (s.left_arrow != s.right_arrow)
      throw PreconditionError(to_string(kind) + " needs a single product; the two arrows differ");
    return check_laws(Magma(s.left_arrow), kind, stop_at_first);
  }
  if (kind == LawKind::Edus && !s.has_triangles())
    throw PreconditionError("edus laws need both triangle tables");
  return run_check(s.flattened(), s.size, kind, stop_at_first);
}

LawReport check_laws(const Magma& m, LawKind kind, bool stop_at_first) {
  if (!is_magma_kind(kind)) return check_laws(from_semigroup(m), kind, stop_at_first);
  return run_check(m.table.cells, m.size, kind, stop_at_first);
}

std::vector<OmegaStructure> enumerate_structures(int size, LawKind kind, EnumerationLimits limits) {
  if (is_magma_kind(kind)) throw PreconditionError(to_string(kind) + " describes magmas, not structures");
  check_enumeration_size(size, limits);
  std::vector<OmegaStructure> out;
  for (const auto& cells : search(size, kind)) {
    if (kind == LawKind::Edus)
      out.emplace_back(slice(cells, 0, size), slice(cells, 1, size), slice(cells, 2, size), slice(cells, 3, size));
    else
      out.emplace_back(slice(cells, 0, size), slice(cells, 1, size));
  }
  return out;
}

std::vector<Magma> enumerate_magmas(int size, LawKind kind, EnumerationLimits limits) {
  if (!is_magma_kind(kind)) throw PreconditionError(to_string(kind) + " describes structures, not magmas");
  check_enumeration_size(size, limits);
  std::vector<Magma> out;
  for (const auto& cells : search(size, kind)) out.emplace_back(slice(cells, 0, size));
  return out;
}

OmegaStructure ds_projections(int size) {
  if (size < 1) throw PreconditionError("size must be positive");
  return OmegaStructure(Table::left_projection(size), Table::right_projection(size));
}

OmegaStructure from_semigroup(const Magma& m) { return OmegaStructure(m.table, m.table); }

TwistedMonomial::TwistedMonomial(std::string h, std::string t, std::map<std::string, BigNat> e)
    : head(std::move(h)), tail(std::move(t)) {
  for (auto& [k, v] : e) {
    if (v < 0) throw ValidationError("negative exponent");
    if (v != 0) exponent.emplace(k, v);
  }
}

std::string TwistedMonomial::to_string() const {
  std::ostringstream out;
  out << head << " " << tail << " X^{";
  bool first = true;
  for (const auto& [k, v] : exponent) {
    out << (first ? "" : ",") << k;
    if (v != 1) out << "^" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

NatMultiset::NatMultiset(std::vector<BigNat> e) : entries(std::move(e)) {
  for (const auto& v : entries)
    if (v < 1) throw ValidationError("multiset entries must be positive");
  std::sort(entries.begin(), entries.end());
}

std::string NatMultiset::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
  out << "}";
  return out.str();
}

TwistedMonomial model_product(const TwistedMonomial& x, const TwistedMonomial& y) {
  std::map<std::string, BigNat> e = x.exponent;
  for (const auto& [k, v] : y.exponent) e[k] += v;
  e[x.head] += 1;
  e[y.head] += 1;
  return TwistedMonomial(x.tail, y.tail, std::move(e));
}

NatMultiset model_product(const NatMultiset& x, const NatMultiset& y) {
  BigNat sum = 1;
  for (const auto& v : x.entries) sum += v;
  std::vector<BigNat> e = y.entries;
  e.push_back(sum);
  return NatMultiset(std::move(e));
}

ModelElement model_product(const ModelElement& x, const ModelElement& y) {
  if (x.index() != y.index()) throw TypeError("model_product: operands belong to different models");
  if (x.index() == 0) return model_product(std::get<0>(x), std::get<0>(y));
  return model_product(std::get<1>(x), std::get<1>(y));
}

}  // namespace famop
