#pragma once

#include <functional>
#include <string>

#include "famop/law_report.hpp"
#include "famop/omega.hpp"
#include "famop/typed_tree.hpp"

namespace famop {

// Two-parameter products on pair-typed trees: ≺_{α,β} grafts t at the rightmost leaf of s,
// ≻_{α,β} grafts s at the leftmost leaf of t. Only ← and → of o are used.
TypedTree prec2(const TypedTree& s, const TypedTree& t, int alpha, int beta, const OmegaStructure& o);
TypedTree succ2(const TypedTree& s, const TypedTree& t, int alpha, int beta, const OmegaStructure& o);

// One-parameter products on single-typed trees, defined by recursion along the right spine of
// the left factor (≺) and the left spine of the right factor (≻). Needs the triangle tables.
TypedTree prec1(const TypedTree& t, const TypedTree& u, int omega, const OmegaStructure& e);
TypedTree succ1(const TypedTree& t, const TypedTree& u, int omega, const OmegaStructure& e);

struct GradedElement {
  TypedTree tree;
  int color = 0;
  bool operator==(const GradedElement&) const = default;
};

// (x⊗α)≺(y⊗β) = (x ≺_{α◁β} y)⊗(α←β) and (x⊗α)≻(y⊗β) = (x ≻_{α▷β} y)⊗(α→β)
GradedElement graded_prec(const GradedElement& x, const GradedElement& y, const OmegaStructure& e);
GradedElement graded_succ(const GradedElement& x, const GradedElement& y, const OmegaStructure& e);

enum class AxiomMode { TwoParam, OneParam, Graded };
std::string to_string(AxiomMode m);
AxiomMode parse_axiom_mode(const std::string& name);

struct AxiomCheckOptions {
  int x_size = 1;
  int max_vertices = 3;
  bool stop_at_first = false;
  std::size_t max_trees = 5000;
};

// Exhaustive check of the defining equations over all tree triples with at most
// max_vertices vertices each and all parameter tuples.
LawReport check_axioms(AxiomMode mode, const OmegaStructure& o, const AxiomCheckOptions& options = {});

template <class V>
struct OneParamProducts {
  std::function<V(const V&, const V&, int)> prec;
  std::function<V(const V&, const V&, int)> succ;
};

OneParamProducts<TypedTree> free_products(const OmegaStructure& e);

// The morphism induced by f: single vertex x ↦ f(x), then by cases on which subtrees are leaves.
template <class V>
V free_morphism_eval(const TypedTree& t, const std::function<V(Symbol)>& f, const OneParamProducts<V>& target) {
  auto p = t.split();
  bool l = !p.left.is_leaf(), r = !p.right.is_leaf();
  if (!l && !r) return f(p.dec);
  if (!l) return target.prec(f(p.dec), free_morphism_eval(p.right, f, target), p.right_type.first);
  if (!r) return target.succ(free_morphism_eval(p.left, f, target), f(p.dec), p.left_type.first);
  V left = target.succ(free_morphism_eval(p.left, f, target), f(p.dec), p.left_type.first);
  return target.prec(left, free_morphism_eval(p.right, f, target), p.right_type.first);
}

// Same value computed through the other bracketing T₁ ≻ (x ≺ T₂).
template <class V>
V free_morphism_eval_right(const TypedTree& t, const std::function<V(Symbol)>& f, const OneParamProducts<V>& target) {
  auto p = t.split();
  bool l = !p.left.is_leaf(), r = !p.right.is_leaf();
  if (!l && !r) return f(p.dec);
  if (!l) return target.prec(f(p.dec), free_morphism_eval_right(p.right, f, target), p.right_type.first);
  if (!r) return target.succ(free_morphism_eval_right(p.left, f, target), f(p.dec), p.left_type.first);
  V right = target.prec(f(p.dec), free_morphism_eval_right(p.right, f, target), p.right_type.first);
  return target.succ(free_morphism_eval_right(p.left, f, target), right, p.left_type.first);
}

}  // namespace famop
