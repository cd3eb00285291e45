#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famop/symbol.hpp"

namespace famop {

enum class Flavor { Single, Pair };

// Type of an internal edge. Sentinel stands for the adjoined element 1 and marks a leaf child.
struct EdgeType {
  enum class Kind : std::uint8_t { Sentinel, Single, Pair };
  Kind kind = Kind::Sentinel;
  int first = 0;
  int second = 0;

  static EdgeType sentinel() { return {}; }
  static EdgeType single(int w) { return {Kind::Single, w, 0}; }
  static EdgeType pair(int a, int b) { return {Kind::Pair, a, b}; }

  bool is_sentinel() const { return kind == Kind::Sentinel; }
  std::string to_string() const;

  auto operator<=>(const EdgeType&) const = default;
};

struct TreeStats {
  int internal_vertices = 0;
  int leaves = 1;
  int depth = 0;
};

// Planar binary tree with decorated internal vertices, stored as its preorder vertex list.
// A vertex has a left (right) child exactly when its left (right) edge type is not Sentinel.
class TypedTree {
 public:
  struct Vertex {
    Symbol dec;
    EdgeType left_type;
    EdgeType right_type;
    auto operator<=>(const Vertex&) const = default;
  };

  struct Parts;

  TypedTree() = default;
  static TypedTree leaf() { return {}; }
  static TypedTree single(Symbol x);
  // Validates the sentinel and flavor invariants.
  static TypedTree from_preorder(std::vector<Vertex> nodes);
  static TypedTree from_preorder_unchecked(std::vector<Vertex> nodes);

  bool is_leaf() const { return nodes_.empty(); }
  int vertices() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Vertex>& preorder() const { return nodes_; }
  std::optional<Flavor> flavor() const;
  Parts split() const;
  TreeStats stats() const;

  auto operator<=>(const TypedTree&) const = default;
  bool operator==(const TypedTree&) const = default;

 private:
  std::vector<Vertex> nodes_;
};

struct TypedTree::Parts {
  TypedTree left;
  Symbol dec;
  EdgeType left_type;
  EdgeType right_type;
  TypedTree right;
};

TypedTree graft(const TypedTree& t1, Symbol x, EdgeType a, EdgeType b, const TypedTree& t2);
int depth(const TypedTree& t);

// Index one past the end of the subtree rooted at preorder position i.
std::size_t subtree_end(const std::vector<TypedTree::Vertex>& nodes, std::size_t i);

// All trees with n internal vertices, decorations from the first x_size alphabet symbols and
// edge types over {0..w-1}; deterministic order (left size, left tree, decoration, types, right tree).
std::vector<TypedTree> enumerate_trees(int n, int x_size, int w, Flavor flavor, std::size_t limit = 1'000'000);
std::vector<TypedTree> enumerate_trees_up_to(int max_vertices, int x_size, int w, Flavor flavor, std::size_t limit = 1'000'000);

std::string serialize(const TypedTree& t);
TypedTree parse_tree(std::string_view text);

}  // namespace famop
