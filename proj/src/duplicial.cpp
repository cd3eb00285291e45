#include "famop/duplicial.hpp"

#include "famop/errors.hpp"

namespace famop {

namespace {

using Vertex = TypedTree::Vertex;
using Nodes = std::vector<Vertex>;

std::size_t right_spine_end(const Nodes& s) {
  std::size_t i = 0;
  while (!s[i].right_type.is_sentinel()) i = s[i].left_type.is_sentinel() ? i + 1 : subtree_end(s, i + 1);
  return i;
}

std::size_t left_spine_end(const Nodes& t) {
  std::size_t i = 0;
  while (!t[i].left_type.is_sentinel()) ++i;
  return i;
}

void prec2_into(const Nodes& s, const Nodes& t, int a, int b, const OmegaStructure& o, Nodes& out) {
  out.clear();
  out.reserve(s.size() + t.size());
  for (Vertex v : s) {
    if (!v.left_type.is_sentinel()) v.left_type.second = o.left(v.left_type.second, b);
    if (!v.right_type.is_sentinel()) v.right_type.second = o.left(v.right_type.second, b);
    out.push_back(v);
  }
  out[right_spine_end(s)].right_type = EdgeType::pair(a, b);
  for (Vertex v : t) {
    if (!v.left_type.is_sentinel()) v.left_type.first = o.left(a, v.left_type.first);
    if (!v.right_type.is_sentinel()) v.right_type.first = o.left(a, v.right_type.first);
    out.push_back(v);
  }
}

void succ2_into(const Nodes& s, const Nodes& t, int a, int b, const OmegaStructure& o, Nodes& out) {
  out.clear();
  out.reserve(s.size() + t.size());
  std::size_t leftmost = left_spine_end(t);
  auto host = [&](Vertex v) {
    if (!v.left_type.is_sentinel()) v.left_type.first = o.right(a, v.left_type.first);
    if (!v.right_type.is_sentinel()) v.right_type.first = o.right(a, v.right_type.first);
    return v;
  };
  for (std::size_t i = 0; i <= leftmost; ++i) out.push_back(host(t[i]));
  out.back().left_type = EdgeType::pair(a, b);
  for (Vertex v : s) {
    if (!v.left_type.is_sentinel()) v.left_type.second = o.right(v.left_type.second, b);
    if (!v.right_type.is_sentinel()) v.right_type.second = o.right(v.right_type.second, b);
    out.push_back(v);
  }
  for (std::size_t i = leftmost + 1; i < t.size(); ++i) out.push_back(host(t[i]));
}

void prec1_into(const Nodes& t, const Nodes& u, int omega, const OmegaStructure& e, Nodes& out) {
  out.assign(t.begin(), t.end());
  std::size_t i = 0;
  int cur = omega;
  for (;;) {
    Vertex& v = out[i];
    if (v.right_type.is_sentinel()) {
      v.right_type = EdgeType::single(cur);
      break;
    }
    int a2 = v.right_type.first;
    v.right_type = EdgeType::single(e.left(a2, cur));
    cur = e.ltri(a2, cur);
    i = v.left_type.is_sentinel() ? i + 1 : subtree_end(out, i + 1);
  }
  out.insert(out.end(), u.begin(), u.end());
}

void succ1_into(const Nodes& t, const Nodes& u, int omega, const OmegaStructure& e, Nodes& out) {
  out.clear();
  out.reserve(t.size() + u.size());
  std::size_t i = 0;
  int cur = omega;
  for (;; ++i) {
    Vertex v = u[i];
    if (v.left_type.is_sentinel()) {
      v.left_type = EdgeType::single(cur);
      out.push_back(v);
      break;
    }
    int b1 = v.left_type.first;
    v.left_type = EdgeType::single(e.right(cur, b1));
    cur = e.rtri(cur, b1);
    out.push_back(v);
  }
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(i) + 1, u.end());
}

void require_operands(const TypedTree& s, const TypedTree& t, Flavor flavor, const char* op) {
  if (s.is_leaf() || t.is_leaf()) throw PreconditionError(std::string(op) + ": operands must not be leaves");
  for (const auto* x : {&s, &t}) {
    auto f = x->flavor();
    if (f && *f != flavor)
      throw PreconditionError(std::string(op) + (flavor == Flavor::Pair ? ": expects pair-typed trees" : ": expects single-typed trees"));
  }
}

void require_param(int v, const OmegaStructure& o) {
  if (v < 0 || v >= o.size) throw PreconditionError("parameter " + std::to_string(v) + " out of range");
}

void require_types_in_range(const TypedTree& t, const OmegaStructure& o) {
  for (const auto& v : t.preorder())
    for (const auto& e : {v.left_type, v.right_type}) {
      if (e.is_sentinel()) continue;
      require_param(e.first, o);
      if (e.kind == EdgeType::Kind::Pair) require_param(e.second, o);
    }
}

void require_triangles(const OmegaStructure& e) {
  if (!e.has_triangles()) throw PreconditionError("one-parameter products need both triangle tables");
}

}  // namespace

TypedTree prec2(const TypedTree& s, const TypedTree& t, int alpha, int beta, const OmegaStructure& o) {
  require_operands(s, t, Flavor::Pair, "prec2");
  require_param(alpha, o);
  require_param(beta, o);
  require_types_in_range(s, o);
  require_types_in_range(t, o);
  Nodes out;
  prec2_into(s.preorder(), t.preorder(), alpha, beta, o, out);
  return TypedTree::from_preorder_unchecked(std::move(out));
}

TypedTree succ2(const TypedTree& s, const TypedTree& t, int alpha, int beta, const OmegaStructure& o) {
  require_operands(s, t, Flavor::Pair, "succ2");
  require_param(alpha, o);
  require_param(beta, o);
  require_types_in_range(s, o);
  require_types_in_range(t, o);
  Nodes out;
  succ2_into(s.preorder(), t.preorder(), alpha, beta, o, out);
  return TypedTree::from_preorder_unchecked(std::move(out));
}

TypedTree prec1(const TypedTree& t, const TypedTree& u, int omega, const OmegaStructure& e) {
  require_operands(t, u, Flavor::Single, "prec1");
  require_triangles(e);
  require_param(omega, e);
  require_types_in_range(t, e);
  require_types_in_range(u, e);
  Nodes out;
  prec1_into(t.preorder(), u.preorder(), omega, e, out);
  return TypedTree::from_preorder_unchecked(std::move(out));
}

TypedTree succ1(const TypedTree& t, const TypedTree& u, int omega, const OmegaStructure& e) {
  require_operands(t, u, Flavor::Single, "succ1");
  require_triangles(e);
  require_param(omega, e);
  require_types_in_range(t, e);
  require_types_in_range(u, e);
  Nodes out;
  succ1_into(t.preorder(), u.preorder(), omega, e, out);
  return TypedTree::from_preorder_unchecked(std::move(out));
}

GradedElement graded_prec(const GradedElement& x, const GradedElement& y, const OmegaStructure& e) {
  require_triangles(e);
  require_param(x.color, e);
  require_param(y.color, e);
  return {prec1(x.tree, y.tree, e.ltri(x.color, y.color), e), e.left(x.color, y.color)};
}

GradedElement graded_succ(const GradedElement& x, const GradedElement& y, const OmegaStructure& e) {
  require_triangles(e);
  require_param(x.color, e);
  require_param(y.color, e);
  return {succ1(x.tree, y.tree, e.rtri(x.color, y.color), e), e.right(x.color, y.color)};
}

std::string to_string(AxiomMode m) {
  switch (m) {
    case AxiomMode::TwoParam: return "two_param";
    case AxiomMode::OneParam: return "one_param";
    case AxiomMode::Graded: return "graded";
  }
  return "?";
}

AxiomMode parse_axiom_mode(const std::string& name) {
  for (auto m : {AxiomMode::TwoParam, AxiomMode::OneParam, AxiomMode::Graded})
    if (to_string(m) == name) return m;
  throw ValidationError("unknown axiom mode '" + name + "'");
}

OneParamProducts<TypedTree> free_products(const OmegaStructure& e) {
  require_triangles(e);
  return {[e](const TypedTree& a, const TypedTree& b, int w) { return prec1(a, b, w, e); },
          [e](const TypedTree& a, const TypedTree& b, int w) { return succ1(a, b, w, e); }};
}

namespace {

// Products of every ordered pair of trees under every parameter tuple, indexed [(x*N + y)*P + p].
struct PairCache {
  std::vector<Nodes> prec, succ;
};

constexpr std::size_t kMaxCachedProducts = 4'000'000;

LawReport check_two_param(const OmegaStructure& o, const std::vector<TypedTree>& trees, bool stop) {
  LawReport report("two_param");
  const int w = o.size;
  const std::size_t N = trees.size(), P = static_cast<std::size_t>(w * w);
  if (N * N * P > kMaxCachedProducts) throw ResourceError("two_param check too large; lower max_vertices");
  PairCache c;
  c.prec.resize(N * N * P);
  c.succ.resize(N * N * P);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) {
          std::size_t k = (x * N + y) * P + static_cast<std::size_t>(a * w + b);
          prec2_into(trees[x].preorder(), trees[y].preorder(), a, b, o, c.prec[k]);
          succ2_into(trees[x].preorder(), trees[y].preorder(), a, b, o, c.succ[k]);
        }
  auto idx = [&](std::size_t x, std::size_t y, int a, int b) { return (x * N + y) * P + static_cast<std::size_t>(a * w + b); };
  Nodes lhs, rhs;
  auto witness = [&](const char* law, std::size_t x, std::size_t y, std::size_t z, int a, int b, int g) {
    report.fail(law, {serialize(trees[x]), serialize(trees[y]), serialize(trees[z]), std::to_string(a), std::to_string(b),
                      std::to_string(g)});
  };
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z)
        for (int a = 0; a < w; ++a)
          for (int b = 0; b < w; ++b)
            for (int g = 0; g < w; ++g) {
              const Nodes& X = trees[x].preorder();
              const Nodes& Z = trees[z].preorder();
              report.instances += 3;
              // (x ≺_{α,β} y) ≺_{α←β,γ} z = x ≺_{α,β←γ} (y ≺_{β,γ} z)
              prec2_into(c.prec[idx(x, y, a, b)], Z, o.left(a, b), g, o, lhs);
              prec2_into(X, c.prec[idx(y, z, b, g)], a, o.left(b, g), o, rhs);
              if (lhs != rhs) {
                witness("prec_prec", x, y, z, a, b, g);
                if (stop) return report;
              }
              // (x ≻_{α,β} y) ≺_{α→β,γ} z = x ≻_{α,β←γ} (y ≺_{β,γ} z)
              prec2_into(c.succ[idx(x, y, a, b)], Z, o.right(a, b), g, o, lhs);
              succ2_into(X, c.prec[idx(y, z, b, g)], a, o.left(b, g), o, rhs);
              if (lhs != rhs) {
                witness("succ_prec", x, y, z, a, b, g);
                if (stop) return report;
              }
              // x ≻_{α,β→γ} (y ≻_{β,γ} z) = (x ≻_{α,β} y) ≻_{α→β,γ} z
              succ2_into(X, c.succ[idx(y, z, b, g)], a, o.right(b, g), o, lhs);
              succ2_into(c.succ[idx(x, y, a, b)], Z, o.right(a, b), g, o, rhs);
              if (lhs != rhs) {
                witness("succ_succ", x, y, z, a, b, g);
                if (stop) return report;
              }
            }
  return report;
}

LawReport check_one_param(const OmegaStructure& e, const std::vector<TypedTree>& trees, bool stop) {
  LawReport report("one_param");
  const int w = e.size;
  const std::size_t N = trees.size(), P = static_cast<std::size_t>(w);
  if (N * N * P > kMaxCachedProducts) throw ResourceError("one_param check too large; lower max_vertices");
  PairCache c;
  c.prec.resize(N * N * P);
  c.succ.resize(N * N * P);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (int a = 0; a < w; ++a) {
        std::size_t k = (x * N + y) * P + static_cast<std::size_t>(a);
        prec1_into(trees[x].preorder(), trees[y].preorder(), a, e, c.prec[k]);
        succ1_into(trees[x].preorder(), trees[y].preorder(), a, e, c.succ[k]);
      }
  auto idx = [&](std::size_t x, std::size_t y, int a) { return (x * N + y) * P + static_cast<std::size_t>(a); };
  Nodes lhs, rhs;
  auto witness = [&](const char* law, std::size_t x, std::size_t y, std::size_t z, int a, int b) {
    report.fail(law, {serialize(trees[x]), serialize(trees[y]), serialize(trees[z]), std::to_string(a), std::to_string(b)});
  };
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z)
        for (int a = 0; a < w; ++a)
          for (int b = 0; b < w; ++b) {
            const Nodes& X = trees[x].preorder();
            const Nodes& Z = trees[z].preorder();
            report.instances += 3;
            // (x ≺_α y) ≺_β z = x ≺_{α←β} (y ≺_{α◁β} z)
            prec1_into(c.prec[idx(x, y, a)], Z, b, e, lhs);
            prec1_into(X, c.prec[idx(y, z, e.ltri(a, b))], e.left(a, b), e, rhs);
            if (lhs != rhs) {
              witness("prec_prec", x, y, z, a, b);
              if (stop) return report;
            }
            // x ≻_α (y ≺_β z) = (x ≻_α y) ≺_β z
            succ1_into(X, c.prec[idx(y, z, b)], a, e, lhs);
            prec1_into(c.succ[idx(x, y, a)], Z, b, e, rhs);
            if (lhs != rhs) {
              witness("succ_prec", x, y, z, a, b);
              if (stop) return report;
            }
            // x ≻_α (y ≻_β z) = (x ≻_{α▷β} y) ≻_{α→β} z
            succ1_into(X, c.succ[idx(y, z, b)], a, e, lhs);
            succ1_into(c.succ[idx(x, y, e.rtri(a, b))], Z, e.right(a, b), e, rhs);
            if (lhs != rhs) {
              witness("succ_succ", x, y, z, a, b);
              if (stop) return report;
            }
          }
  return report;
}

LawReport check_graded(const OmegaStructure& e, const std::vector<TypedTree>& trees, bool stop) {
  LawReport report("graded");
  std::vector<GradedElement> elems;
  for (const auto& t : trees)
    for (int c = 0; c < e.size; ++c) elems.push_back({t, c});
  Nodes buf1, buf2;
  auto prec = [&](const GradedElement& x, const GradedElement& y) {
    prec1_into(x.tree.preorder(), y.tree.preorder(), e.ltri(x.color, y.color), e, buf1);
    return GradedElement{TypedTree::from_preorder_unchecked(buf1), e.left(x.color, y.color)};
  };
  auto succ = [&](const GradedElement& x, const GradedElement& y) {
    succ1_into(x.tree.preorder(), y.tree.preorder(), e.rtri(x.color, y.color), e, buf2);
    return GradedElement{TypedTree::from_preorder_unchecked(buf2), e.right(x.color, y.color)};
  };
  auto witness = [&](const char* law, const GradedElement& x, const GradedElement& y, const GradedElement& z) {
    report.fail(law, {serialize(x.tree) + "@" + std::to_string(x.color), serialize(y.tree) + "@" + std::to_string(y.color),
                      serialize(z.tree) + "@" + std::to_string(z.color)});
  };
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) {
        report.instances += 3;
        if (prec(prec(x, y), z) != prec(x, prec(y, z))) {
          witness("prec_prec", x, y, z);
          if (stop) return report;
        }
        if (prec(succ(x, y), z) != succ(x, prec(y, z))) {
          witness("succ_prec", x, y, z);
          if (stop) return report;
        }
        if (succ(succ(x, y), z) != succ(x, succ(y, z))) {
          witness("succ_succ", x, y, z);
          if (stop) return report;
        }
      }
  return report;
}

}  // namespace

LawReport check_axioms(AxiomMode mode, const OmegaStructure& o, const AxiomCheckOptions& options) {
  if (options.max_vertices < 1 || options.x_size < 1) throw PreconditionError("max_vertices and x_size must be positive");
  if (mode != AxiomMode::TwoParam) require_triangles(o);
  Flavor flavor = mode == AxiomMode::TwoParam ? Flavor::Pair : Flavor::Single;
  auto trees = enumerate_trees_up_to(options.max_vertices, options.x_size, o.size, flavor, options.max_trees);
  LawReport r;
  switch (mode) {
    case AxiomMode::TwoParam: r = check_two_param(o, trees, options.stop_at_first); break;
    case AxiomMode::OneParam: r = check_one_param(o, trees, options.stop_at_first); break;
    case AxiomMode::Graded: r = check_graded(o, trees, options.stop_at_first); break;
  }
  r.stats["trees"] = static_cast<std::int64_t>(trees.size());
  return r;
}

}  // namespace famop
