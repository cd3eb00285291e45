#include <doctest.h>

#include "famop/duplicial.hpp"
#include "famop/errors.hpp"
#include "oracles.hpp"

using namespace famop;

namespace {

oracle::TreeP to_oracle(const TypedTree& t) {
  if (t.is_leaf()) return nullptr;
  auto p = t.split();
  auto n = std::make_shared<oracle::Tree>();
  n->dec = p.dec.name();
  n->la = p.left_type.first;
  n->lb = p.left_type.kind == EdgeType::Kind::Pair ? p.left_type.second : -1;
  n->ra = p.right_type.first;
  n->rb = p.right_type.kind == EdgeType::Kind::Pair ? p.right_type.second : -1;
  n->left = to_oracle(p.left);
  n->right = to_oracle(p.right);
  return n;
}

OmegaStructure zn_addition(int n) {
  std::vector<int> c;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.push_back((a + b) % n);
  return OmegaStructure(Table(n, c), Table(n, c));
}

oracle::Edus as_oracle(const OmegaStructure& e) {
  return {[e](int a, int b) { return e.left(a, b); }, [e](int a, int b) { return e.right(a, b); },
          [e](int a, int b) { return e.ltri(a, b); }, [e](int a, int b) { return e.rtri(a, b); }};
}

TypedTree T(const char* s) { return parse_tree(s); }

}  // namespace

TEST_CASE("two-parameter products of single vertices") {
  auto o = ds_projections(2);
  auto x = TypedTree::single(Symbol::intern("x")), y = TypedTree::single(Symbol::intern("y"));
  CHECK(serialize(prec2(x, y, 0, 1, o)) == "(x . 0:1 _ (y . . _ _))");
  CHECK(serialize(succ2(x, y, 1, 0, o)) == "(y 1:0 . (x . . _ _) _)");
  CHECK_THROWS_AS(prec2(TypedTree::leaf(), y, 0, 0, o), PreconditionError);
  CHECK_THROWS_AS(prec2(x, y, 2, 0, o), PreconditionError);
}

TEST_CASE("worked example of the two-parameter products") {
  // s has edges (a1,a2) to y and (b1,b2) to z; t has one edge (g1,g2) to n; parameters (a,b).
  auto o = zn_addition(5);
  const int a1 = 1, a2 = 2, b1 = 3, b2 = 4, g1 = 2, g2 = 3, a = 4, b = 2;
  auto s = T("(x 1:2 3:4 (y . . _ _) (z . . _ _))");
  auto t = T("(m . 2:3 _ (n . . _ _))");
  auto L = [&](int p, int q) { return o.left(p, q); };
  auto R = [&](int p, int q) { return o.right(p, q); };
  auto e = [](int p, int q) { return std::to_string(p) + ":" + std::to_string(q); };
  std::string expected_prec = "(x " + e(a1, L(a2, b)) + " " + e(b1, L(b2, b)) + " (y . . _ _) (z . " + e(a, b) +
                              " _ (m . " + e(L(a, g1), g2) + " _ (n . . _ _))))";
  CHECK(serialize(prec2(s, t, a, b, o)) == expected_prec);
  std::string expected_succ = "(m " + e(a, b) + " " + e(R(a, g1), g2) + " (x " + e(a1, R(a2, b)) + " " + e(b1, R(b2, b)) +
                              " (y . . _ _) (z . . _ _)) (n . . _ _))";
  CHECK(serialize(succ2(s, t, a, b, o)) == expected_succ);
}

TEST_CASE("trivial parameter set gives the bare graftings") {
  auto o = ds_projections(1);
  auto s = T("(x 0:0 . (y . . _ _) _)"), t = T("(z . . _ _)");
  CHECK(serialize(prec2(s, t, 0, 0, o)) == "(x 0:0 0:0 (y . . _ _) (z . . _ _))");
  CHECK(serialize(succ2(s, t, 0, 0, o)) == "(z 0:0 . (x 0:0 . (y . . _ _) _) _)");
}

TEST_CASE("two-parameter products agree with the recursive reference") {
  auto trees = enumerate_trees_up_to(3, 1, 2, Flavor::Pair);
  for (const auto& o : enumerate_structures(2, LawKind::Duplicial)) {
    oracle::BinOp L = [&](int p, int q) { return o.left(p, q); };
    oracle::BinOp R = [&](int p, int q) { return o.right(p, q); };
    for (std::size_t i = 0; i < trees.size(); i += 7)
      for (std::size_t j = 0; j < trees.size(); j += 5)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            auto s = to_oracle(trees[i]), t = to_oracle(trees[j]);
            CHECK(serialize(prec2(trees[i], trees[j], a, b, o)) == oracle::text(oracle::prec2(s, t, a, b, L)));
            CHECK(serialize(succ2(trees[i], trees[j], a, b, o)) == oracle::text(oracle::succ2(s, t, a, b, R)));
          }
  }
}

TEST_CASE("products keep decorations and bare shape") {
  auto o = ds_projections(2);
  auto s = T("(x 0:1 . (y . . _ _) _)"), t = T("(z . 1:1 _ (u . . _ _))");
  auto p = prec2(s, t, 1, 0, o);
  CHECK(p.vertices() == 4);
  auto q = prec2(T("(x 0:0 . (y . . _ _) _)"), T("(z . 0:0 _ (u . . _ _))"), 0, 0, ds_projections(1));
  // same bare shape and decorations
  REQUIRE(p.vertices() == q.vertices());
  for (int i = 0; i < p.vertices(); ++i) {
    CHECK(p.preorder()[static_cast<std::size_t>(i)].dec == q.preorder()[static_cast<std::size_t>(i)].dec);
    CHECK(p.preorder()[static_cast<std::size_t>(i)].left_type.is_sentinel() ==
          q.preorder()[static_cast<std::size_t>(i)].left_type.is_sentinel());
  }
}

TEST_CASE("one-parameter products of single vertices") {
  auto e = enumerate_structures(2, LawKind::Edus).front();
  auto x = TypedTree::single(Symbol::intern("x")), y = TypedTree::single(Symbol::intern("y"));
  CHECK(serialize(prec1(x, y, 0, e)) == "(x . 0 _ (y . . _ _))");
  CHECK(serialize(prec1(x, y, 1, e)) == "(x . 1 _ (y . . _ _))");
  CHECK(serialize(succ1(x, y, 1, e)) == "(y 1 . (x . . _ _) _)");
  CHECK_THROWS_AS(prec1(x, y, 0, ds_projections(2)), PreconditionError);
  CHECK_THROWS_AS(succ1(x, TypedTree::leaf(), 0, e), PreconditionError);
}

TEST_CASE("one-parameter products agree with the defining recursion") {
  auto trees = enumerate_trees_up_to(3, 2, 2, Flavor::Single);
  auto edus = enumerate_structures(2, LawKind::Edus);
  REQUIRE_FALSE(edus.empty());
  for (std::size_t k = 0; k < edus.size(); k += 3) {
    const auto& e = edus[k];
    auto oe = as_oracle(e);
    for (std::size_t i = 0; i < trees.size(); i += 3)
      for (std::size_t j = 0; j < trees.size(); j += 4)
        for (int w = 0; w < 2; ++w) {
          auto s = to_oracle(trees[i]), t = to_oracle(trees[j]);
          CHECK(serialize(prec1(trees[i], trees[j], w, e)) == oracle::text(oracle::prec1(s, t, w, oe)));
          CHECK(serialize(succ1(trees[i], trees[j], w, e)) == oracle::text(oracle::succ1(s, t, w, oe)));
        }
  }
}

TEST_CASE("first one-parameter axiom on generators") {
  for (const auto& e : enumerate_structures(2, LawKind::Edus)) {
    auto x = TypedTree::single(Symbol::intern("x")), y = TypedTree::single(Symbol::intern("y")),
         z = TypedTree::single(Symbol::intern("z"));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(prec1(prec1(x, y, a, e), z, b, e) == prec1(x, prec1(y, z, e.ltri(a, b), e), e.left(a, b), e));
  }
}

TEST_CASE("two-parameter axioms over the projection structure") {
  AxiomCheckOptions opt;
  opt.max_vertices = 3;
  auto rep = check_axioms(AxiomMode::TwoParam, ds_projections(2), opt);
  CHECK(rep.passed());
  CHECK(rep.stats["trees"] == 89);
}

TEST_CASE("two-parameter axioms fail on a structure that is not duplicial") {
  OmegaStructure bad(Table({{1, 0}, {0, 0}}), Table::right_projection(2));
  AxiomCheckOptions opt;
  opt.max_vertices = 2;
  auto rep = check_axioms(AxiomMode::TwoParam, bad, opt);
  CHECK_FALSE(rep.passed());
  CHECK(rep.witnesses.front().law == "prec_prec");
}

TEST_CASE("one-parameter axioms over every size-2 edus") {
  AxiomCheckOptions opt;
  opt.max_vertices = 3;
  for (const auto& e : enumerate_structures(2, LawKind::Edus)) CHECK(check_axioms(AxiomMode::OneParam, e, opt).passed());
}

TEST_CASE("one-parameter axioms fail on a structure that is not edus") {
  auto base = ds_projections(2);
  OmegaStructure e(base.left_arrow, base.right_arrow, Table({{1, 1}, {0, 1}}), Table({{0, 1}, {1, 0}}));
  REQUIRE_FALSE(check_laws(e, LawKind::Edus).passed());
  AxiomCheckOptions opt;
  opt.max_vertices = 3;
  auto rep = check_axioms(AxiomMode::OneParam, e, opt);
  CHECK_FALSE(rep.passed());
  CHECK(rep.witnesses.front().args.size() == 5);
}

TEST_CASE("graded mode passes exactly on edus at size 2") {
  AxiomCheckOptions opt;
  opt.max_vertices = 2;
  opt.stop_at_first = true;
  int agree = 0;
  for (long long code = 0; code < 65536; code += 97) {
    std::vector<int> c;
    long long v = code;
    for (int i = 0; i < 16; ++i) {
      c.push_back(static_cast<int>(v & 1));
      v >>= 1;
    }
    auto slice = [&](int k) { return Table(2, std::vector<int>(c.begin() + 4 * k, c.begin() + 4 * k + 4)); };
    OmegaStructure e(slice(0), slice(1), slice(2), slice(3));
    bool graded = check_axioms(AxiomMode::Graded, e, opt).passed();
    CHECK(graded == check_laws(e, LawKind::Edus).passed());
    ++agree;
  }
  for (const auto& e : enumerate_structures(2, LawKind::Edus)) CHECK(check_axioms(AxiomMode::Graded, e, opt).passed());
  CHECK(agree > 0);
}

TEST_CASE("graded products") {
  auto e = enumerate_structures(2, LawKind::Edus).back();
  GradedElement x{TypedTree::single(Symbol::intern("x")), 1}, y{TypedTree::single(Symbol::intern("y")), 0};
  auto p = graded_prec(x, y, e);
  CHECK(p.color == e.left(1, 0));
  CHECK(p.tree == prec1(x.tree, y.tree, e.ltri(1, 0), e));
  auto s = graded_succ(x, y, e);
  CHECK(s.color == e.right(1, 0));
  CHECK(s.tree == succ1(x.tree, y.tree, e.rtri(1, 0), e));
}

TEST_CASE("universal morphism") {
  auto edus = enumerate_structures(2, LawKind::Edus);
  const auto& e = edus[edus.size() / 2];
  auto target = free_products(e);
  auto trees = enumerate_trees_up_to(3, 2, 2, Flavor::Single);

  std::function<TypedTree(Symbol)> embed = [](Symbol x) { return TypedTree::single(x); };
  for (const auto& t : trees) CHECK(free_morphism_eval(t, embed, target) == t);

  auto x = TypedTree::single(Symbol::intern("x"));
  CHECK(free_morphism_eval(x, embed, target) == x);

  // a non-trivial endomorphism: x ↦ x ≺_0 y, y ↦ y ≻_1 x
  std::function<TypedTree(Symbol)> f = [&](Symbol s) {
    auto a = TypedTree::single(Symbol::intern("x")), b = TypedTree::single(Symbol::intern("y"));
    return s.name() == "x" ? prec1(a, b, 0, e) : succ1(b, a, 1, e);
  };
  auto small = enumerate_trees_up_to(2, 2, 2, Flavor::Single);
  for (const auto& t : small)
    for (const auto& u : small)
      for (int w = 0; w < 2; ++w) {
        CHECK(free_morphism_eval(prec1(t, u, w, e), f, target) ==
              prec1(free_morphism_eval(t, f, target), free_morphism_eval(u, f, target), w, e));
        CHECK(free_morphism_eval(succ1(t, u, w, e), f, target) ==
              succ1(free_morphism_eval(t, f, target), free_morphism_eval(u, f, target), w, e));
      }
  for (const auto& t : trees) CHECK(free_morphism_eval_right(t, f, target) == free_morphism_eval(t, f, target));
}
