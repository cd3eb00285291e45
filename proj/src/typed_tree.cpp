#include "famop/typed_tree.hpp"

#include <algorithm>
#include <cctype>

#include "famop/errors.hpp"

namespace famop {

std::string EdgeType::to_string() const {
  switch (kind) {
    case Kind::Sentinel: return ".";
    case Kind::Single: return std::to_string(first);
    case Kind::Pair: return std::to_string(first) + ":" + std::to_string(second);
  }
  return "?";
}

std::size_t subtree_end(const std::vector<TypedTree::Vertex>& nodes, std::size_t i) {
  // walk forward counting pending children
  std::size_t pending = 1;
  while (pending > 0) {
    if (i >= nodes.size()) throw ValidationError("truncated preorder");
    const auto& v = nodes[i++];
    --pending;
    pending += (v.left_type.is_sentinel() ? 0 : 1) + (v.right_type.is_sentinel() ? 0 : 1);
  }
  return i;
}

TypedTree TypedTree::single(Symbol x) {
  TypedTree t;
  t.nodes_.push_back({x, EdgeType::sentinel(), EdgeType::sentinel()});
  return t;
}

TypedTree TypedTree::from_preorder_unchecked(std::vector<Vertex> nodes) {
  TypedTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

TypedTree TypedTree::from_preorder(std::vector<Vertex> nodes) {
  if (!nodes.empty() && subtree_end(nodes, 0) != nodes.size())
    throw ValidationError("preorder does not describe a single tree");
  std::optional<EdgeType::Kind> kind;
  for (const auto& v : nodes)
    for (const auto& e : {v.left_type, v.right_type}) {
      if (e.is_sentinel()) continue;
      if (kind && *kind != e.kind) throw ValidationError("edge types of one tree must share a flavor");
      kind = e.kind;
    }
  return from_preorder_unchecked(std::move(nodes));
}

std::optional<Flavor> TypedTree::flavor() const {
  for (const auto& v : nodes_)
    for (const auto& e : {v.left_type, v.right_type}) {
      if (e.kind == EdgeType::Kind::Single) return Flavor::Single;
      if (e.kind == EdgeType::Kind::Pair) return Flavor::Pair;
    }
  return std::nullopt;
}

TypedTree::Parts TypedTree::split() const {
  if (is_leaf()) throw PreconditionError("a leaf has no root vertex");
  const Vertex& root = nodes_.front();
  std::size_t left_end = root.left_type.is_sentinel() ? 1 : subtree_end(nodes_, 1);
  Parts p;
  p.dec = root.dec;
  p.left_type = root.left_type;
  p.right_type = root.right_type;
  p.left = from_preorder_unchecked(std::vector<Vertex>(nodes_.begin() + 1, nodes_.begin() + static_cast<std::ptrdiff_t>(left_end)));
  p.right = from_preorder_unchecked(std::vector<Vertex>(nodes_.begin() + static_cast<std::ptrdiff_t>(left_end), nodes_.end()));
  return p;
}

TreeStats TypedTree::stats() const {
  TreeStats s;
  s.internal_vertices = vertices();
  s.leaves = s.internal_vertices + 1;
  s.depth = depth(*this);
  return s;
}

TypedTree graft(const TypedTree& t1, Symbol x, EdgeType a, EdgeType b, const TypedTree& t2) {
  if (a.is_sentinel() != t1.is_leaf())
    throw ValidationError("left edge type must be the sentinel exactly when the left subtree is a leaf");
  if (b.is_sentinel() != t2.is_leaf())
    throw ValidationError("right edge type must be the sentinel exactly when the right subtree is a leaf");
  if (!a.is_sentinel() && !b.is_sentinel() && a.kind != b.kind)
    throw ValidationError("edge types of one tree must share a flavor");
  std::vector<TypedTree::Vertex> nodes;
  nodes.reserve(t1.preorder().size() + t2.preorder().size() + 1);
  nodes.push_back({x, a, b});
  nodes.insert(nodes.end(), t1.preorder().begin(), t1.preorder().end());
  nodes.insert(nodes.end(), t2.preorder().begin(), t2.preorder().end());
  return TypedTree::from_preorder(std::move(nodes));
}

int depth(const TypedTree& t) {
  const auto& nodes = t.preorder();
  int best = 0;
  // depth of each vertex via an explicit stack of pending child depths
  std::vector<int> stack;
  if (!nodes.empty()) stack.push_back(1);
  for (const auto& v : nodes) {
    int d = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (!v.right_type.is_sentinel()) stack.push_back(d + 1);
    if (!v.left_type.is_sentinel()) stack.push_back(d + 1);
  }
  return best;
}

namespace {

std::size_t tree_count(int n, int x_size, int w, Flavor flavor) {
  // Cat(n+1) shapes in the shifted indexing, i.e. the usual C_n
  long double shapes = 1;
  for (int k = 0; k < n; ++k) shapes = shapes * 2 * (2 * k + 1) / (k + 2);
  long double count = shapes;
  for (int k = 0; k < n; ++k) count *= x_size;
  int per_edge = flavor == Flavor::Single ? w : w * w;
  for (int k = 0; k + 1 < n; ++k) count *= per_edge;
  return count > 1e18L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(count + 0.5L);
}

std::vector<EdgeType> edge_types(int w, Flavor flavor) {
  std::vector<EdgeType> out;
  for (int a = 0; a < w; ++a) {
    if (flavor == Flavor::Single) {
      out.push_back(EdgeType::single(a));
    } else {
      for (int b = 0; b < w; ++b) out.push_back(EdgeType::pair(a, b));
    }
  }
  return out;
}

}  // namespace

std::vector<TypedTree> enumerate_trees(int n, int x_size, int w, Flavor flavor, std::size_t limit) {
  if (n < 0 || x_size < 1 || w < 1) throw PreconditionError("invalid enumeration parameters");
  std::size_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::size_t c = tree_count(k, x_size, w, flavor);
    if (c > limit || total > limit - c) throw ResourceError("tree enumeration exceeds limit " + std::to_string(limit));
    total += c;
  }
  std::vector<Symbol> decs;
  for (int i = 0; i < x_size; ++i) decs.push_back(alphabet_symbol(i));
  auto types = edge_types(w, flavor);
  std::vector<EdgeType> sentinel_only{EdgeType::sentinel()};

  std::vector<std::vector<TypedTree>> memo(static_cast<std::size_t>(n) + 1);
  memo[0] = {TypedTree::leaf()};
  for (int k = 1; k <= n; ++k) {
    auto& out = memo[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) {
      const auto& lefts = memo[static_cast<std::size_t>(i)];
      const auto& rights = memo[static_cast<std::size_t>(k - 1 - i)];
      const auto& ltypes = i == 0 ? sentinel_only : types;
      const auto& rtypes = k - 1 - i == 0 ? sentinel_only : types;
      for (const auto& l : lefts)
        for (Symbol x : decs)
          for (const auto& a : ltypes)
            for (const auto& b : rtypes)
              for (const auto& r : rights) {
                std::vector<TypedTree::Vertex> nodes;
                nodes.reserve(static_cast<std::size_t>(k));
                nodes.push_back({x, a, b});
                nodes.insert(nodes.end(), l.preorder().begin(), l.preorder().end());
                nodes.insert(nodes.end(), r.preorder().begin(), r.preorder().end());
                out.push_back(TypedTree::from_preorder_unchecked(std::move(nodes)));
              }
    }
  }
  return std::move(memo[static_cast<std::size_t>(n)]);
}

std::vector<TypedTree> enumerate_trees_up_to(int max_vertices, int x_size, int w, Flavor flavor, std::size_t limit) {
  std::vector<TypedTree> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto part = enumerate_trees(n, x_size, w, flavor, limit);
    if (out.size() + part.size() > limit) throw ResourceError("tree enumeration exceeds limit " + std::to_string(limit));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

void write(const std::vector<TypedTree::Vertex>& nodes, std::size_t& i, std::string& out, bool present) {
  if (!present) {
    out += "_";
    return;
  }
  const auto& v = nodes[i++];
  out += "(";
  out += v.dec.name();
  out += " " + v.left_type.to_string() + " " + v.right_type.to_string() + " ";
  write(nodes, i, out, !v.left_type.is_sentinel());
  out += " ";
  write(nodes, i, out, !v.right_type.is_sentinel());
  out += ")";
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  TypedTree run() {
    std::vector<TypedTree::Vertex> nodes;
    tree(nodes);
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    try {
      return TypedTree::from_preorder(std::move(nodes));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' && s_[pos_] != ')') ++pos_;
    return s_.substr(start, pos_ - start);
  }
  static bool all_digits(std::string_view t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }
  EdgeType edge() {
    skip();
    std::size_t start = pos_;
    auto t = token();
    if (t == ".") return EdgeType::sentinel();
    if (all_digits(t)) return EdgeType::single(std::stoi(std::string(t)));
    auto colon = t.find(':');
    if (colon != std::string_view::npos && all_digits(t.substr(0, colon)) && all_digits(t.substr(colon + 1)))
      return EdgeType::pair(std::stoi(std::string(t.substr(0, colon))), std::stoi(std::string(t.substr(colon + 1))));
    throw ParseError("malformed edge type '" + std::string(t) + "'", start);
  }
  // returns true for a vertex, false for a leaf
  bool tree(std::vector<TypedTree::Vertex>& nodes) {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    if (s_[pos_] == '_') {
      ++pos_;
      return false;
    }
    if (s_[pos_] != '(') throw ParseError("expected '(' or '_'", pos_);
    ++pos_;
    skip();
    std::size_t dec_pos = pos_;
    auto name = token();
    if (!is_identifier(name)) throw ParseError("expected decoration identifier", dec_pos);
    std::size_t self = nodes.size();
    nodes.push_back({Symbol::intern(name), EdgeType::sentinel(), EdgeType::sentinel()});
    std::size_t lt_pos = (skip(), pos_);
    EdgeType lt = edge();
    std::size_t rt_pos = (skip(), pos_);
    EdgeType rt = edge();
    std::size_t l_pos = (skip(), pos_);
    bool has_l = tree(nodes);
    std::size_t r_pos = (skip(), pos_);
    bool has_r = tree(nodes);
    if (lt.is_sentinel() == has_l)
      throw ParseError(has_l ? "sentinel type on an internal edge" : "non-sentinel type on a leaf edge", has_l ? l_pos : lt_pos);
    if (rt.is_sentinel() == has_r)
      throw ParseError(has_r ? "sentinel type on an internal edge" : "non-sentinel type on a leaf edge", has_r ? r_pos : rt_pos);
    nodes[self].left_type = lt;
    nodes[self].right_type = rt;
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return true;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const TypedTree& t) {
  std::string out;
  std::size_t i = 0;
  write(t.preorder(), i, out, !t.is_leaf());
  return out;
}

TypedTree parse_tree(std::string_view text) { return TreeParser(text).run(); }

}  // namespace famop
