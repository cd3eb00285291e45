#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "famop/law_report.hpp"
#include "famop/omega.hpp"

namespace famop {

using Label = std::string;
// Sorted, duplicate free.
using Carrier = std::vector<Label>;

Carrier make_carrier(std::vector<Label> labels);

// Ordered pair of distinct labels, or the unit on a singleton carrier.
struct NonDiagonalPair {
  Carrier carrier;
  std::optional<std::pair<Label, Label>> value;

  static NonDiagonalPair unit(const Label& x);
  static NonDiagonalPair make(Carrier carrier, const Label& first, const Label& second);
  bool is_unit() const { return !value.has_value(); }
  auto operator<=>(const NonDiagonalPair&) const = default;
};

// Root plus a set partition of the other labels into branches (sorted blocks, sorted).
struct Corolla {
  Carrier carrier;
  Label root;
  std::vector<std::vector<Label>> branches;

  static Corolla make(const Label& root, std::vector<std::vector<Label>> branches);
  auto operator<=>(const Corolla&) const = default;
};

struct PermPoint {
  Carrier carrier;
  Label value;

  static PermPoint make(Carrier carrier, const Label& value);
  auto operator<=>(const PermPoint&) const = default;
};

struct LinearOrder {
  std::vector<Label> order;

  static LinearOrder make(std::vector<Label> order);
  Carrier carrier() const { return make_carrier(order); }
  auto operator<=>(const LinearOrder&) const = default;
};

NonDiagonalPair twist_compose(const NonDiagonalPair& x, const Label& a, const NonDiagonalPair& y);
Corolla corolla_compose(const Corolla& x, const Label& b, const Corolla& y);
PermPoint perm_compose(const PermPoint& x, const Label& a, const PermPoint& y);
LinearOrder order_compose(const LinearOrder& x, const Label& a, const LinearOrder& y);

// Push forward along a bijection defined on the carrier.
using Relabeling = std::map<Label, Label>;
NonDiagonalPair relabel(const NonDiagonalPair& x, const Relabeling& phi);
Corolla relabel(const Corolla& x, const Relabeling& phi);
PermPoint relabel(const PermPoint& x, const Relabeling& phi);
LinearOrder relabel(const LinearOrder& x, const Relabeling& phi);

std::vector<NonDiagonalPair> enumerate_pairs(const Carrier& a);
std::vector<Corolla> enumerate_corollas(const Carrier& a);
std::vector<PermPoint> enumerate_perm(const Carrier& a);
std::vector<LinearOrder> enumerate_orders(const Carrier& a);

using OperadElement = std::variant<NonDiagonalPair, Corolla, PermPoint, LinearOrder, TwistedMonomial, NatMultiset>;

// α ⊳ β = (μ ∘₁ α) ∘₂ β, with μ on the reserved labels "#1", "#2"; the model products for
// twisted monomials and multisets. Mixed kinds raise TypeError.
OperadElement binary_product(const OperadElement& x, const OperadElement& y);
NonDiagonalPair binary_product(const NonDiagonalPair& x, const NonDiagonalPair& y);
Corolla binary_product(const Corolla& x, const Corolla& y);
PermPoint binary_product(const PermPoint& x, const PermPoint& y);
LinearOrder binary_product(const LinearOrder& x, const LinearOrder& y);

std::string to_string(const OperadElement& x);

enum class OperadWhich { Pairs, Corollas, Perm, Orders };
std::string to_string(OperadWhich w);
// Accepts "twist" or "pairs", "corolla" or "corollas", "perm", "orders".
OperadWhich parse_operad_which(const std::string& name);

struct OperadCheckOptions {
  int max_size = 3;   // per carrier
  int max_total = 9;  // |A| + |B| + |C|
};

// Defaults used by the command line and the acceptance run.
OperadCheckOptions default_check_options(OperadWhich w);

// Sequential and parallel associativity, unit laws and relabeling equivariance. Parallel
// associativity needs two composition points in the host, whose carrier may be one larger.
// For pairs, stats record how many of the nine sequential and seven parallel case patterns occur
// and every case is compared against its closed form.
LawReport check_operad_laws(OperadWhich which, const OperadCheckOptions& options);

// (a′, a″) ↦ a″, corolla ↦ root, order ↦ last element; morphism and surjectivity checks.
PermPoint to_perm(const NonDiagonalPair& x);
PermPoint to_perm(const Corolla& x);
PermPoint to_perm(const LinearOrder& x);
LawReport perm_surjection(OperadWhich which, const OperadCheckOptions& options);

// Models: the pair (x, y) on A decorated by dec ↦ dec(x) dec(y) X^(decorations of the rest);
// a corolla ↦ the multiset of its branch sizes.
TwistedMonomial twisted_image(const NonDiagonalPair& x, const std::map<Label, std::string>& decoration);
NatMultiset multiset_image(const Corolla& x);

// Quotient classes of the twist presentation against non-diagonal pairs, arities 2..max_arity.
LawReport psi_phi_roundtrip(int max_arity);

}  // namespace famop
