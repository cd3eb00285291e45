#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "famop/law_report.hpp"
#include "famop/omega.hpp"

namespace famop {

// Planar binary term in preorder. An internal node has gen >= 0; a leaf has gen == -1 and a label.
struct TermNode {
  int gen = -1;
  int label = 0;
  auto operator<=>(const TermNode&) const = default;
};

struct OperadTerm {
  std::vector<TermNode> nodes;

  static OperadTerm leaf(int label);
  static OperadTerm node(int gen, const OperadTerm& left, const OperadTerm& right);

  int arity() const;
  bool is_leaf() const { return nodes.size() == 1; }
  // Leaf labels from left to right.
  std::vector<int> leaf_labels() const;
  auto operator<=>(const OperadTerm&) const = default;
};

enum class TermMode { Planar, Labeled };

struct Presentation {
  std::vector<std::string> generators;
  TermMode mode = TermMode::Planar;
  std::vector<std::vector<OperadTerm>> relations;

  void validate() const;
  // Non-fatal remarks, such as relation classes of differing arities.
  std::vector<std::string> warnings() const;
};

std::string serialize(const OperadTerm& t, const std::vector<std::string>& generators);
OperadTerm parse_term(const std::string& text, const std::vector<std::string>& generators);

// "dendriform", "duplicial", "prelie", "associative", "twist", "napnap".
Presentation preset(const std::string& name);
std::vector<std::string> preset_names();

struct TermBounds {
  int planar = 6;
  int labeled = 5;
};

// Sorted by serialization. Planar leaves are numbered 1..n from left to right.
std::vector<OperadTerm> enumerate_terms(const Presentation& p, int arity, TermBounds bounds = {});

struct Quotient {
  std::vector<OperadTerm> terms;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // members as indices into terms, ordered by representative
  std::vector<std::string> warnings;

  std::size_t count() const { return classes.size(); }
  const OperadTerm& representative(std::size_t c) const { return terms[static_cast<std::size_t>(classes[c].front())]; }
};

// Finest equivalence generated by substituting relation instances at every subterm position.
Quotient quotient_classes(const Presentation& p, int arity, TermBounds bounds = {});
Quotient quotient_classes(const Presentation& p, const std::vector<OperadTerm>& terms);

// Planar composition: the term y replaces leaf number `position` (1-based) of x.
OperadTerm compose(const OperadTerm& x, int position, const OperadTerm& y);

struct ColoredTerm {
  OperadTerm term;
  std::vector<int> input_colors;
  int output_color = 0;
  bool operator==(const ColoredTerm&) const = default;
};

// Null when the output color of y differs from the input color of x at `position`.
std::optional<ColoredTerm> colored_compose(const ColoredTerm& x, int position, const ColoredTerm& y);

using ColorKey = std::pair<std::vector<int>, int>;
using ColoredFamily = std::map<ColorKey, std::vector<OperadTerm>>;

// κ*Q: component (α, ω) is the component (κ∘α, κ(ω)) of Q; kappa maps {0..colors-1} into Q's colors.
ColoredFamily color_change(const ColoredFamily& q, const std::vector<int>& kappa, int colors, int arity);
// Every (α, ω) component is a copy of the base component.
ColoredFamily uniformize(const std::vector<OperadTerm>& base, int colors, int arity);
// Underlying uncolored component: the disjoint union of all components, tagged by color data.
std::vector<std::pair<ColorKey, OperadTerm>> forget(const ColoredFamily& q, int arity);

using ColorTables = std::map<std::string, Table>;

// Color of a term under the given generator tables; labeled leaves take coloring[label - 1],
// planar leaves coloring[position - 1].
int evaluate_colors(const OperadTerm& t, const Presentation& p, const ColorTables& tables,
                    const std::vector<int>& coloring);

// Whether evaluation is constant on every class for every input coloring.
LawReport mixing_report(const Presentation& p, const ColorTables& tables, int arity, TermBounds bounds = {});

struct MixingResult {
  std::vector<int> member_classes;
  std::vector<int> non_member_classes;
  LawReport consistency;
};

MixingResult mixing_filter(const Presentation& p, const ColorTables& tables, int arity,
                           const std::vector<int>& coloring, int output, TermBounds bounds = {});

// prec ↦ ←, succ ↦ →.
ColorTables color_tables(const OmegaStructure& o);
// Every generator ↦ the magma product.
ColorTables color_tables(const Presentation& p, const Magma& m);

}  // namespace famop
