#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "famop/law_report.hpp"
#include "famop/table.hpp"

namespace famop {

// Finite parameter set {0..size-1} with ← and →, and optionally ◁ and ▷ (together).
struct OmegaStructure {
  int size = 1;
  Table left_arrow;
  Table right_arrow;
  std::optional<Table> left_tri;
  std::optional<Table> right_tri;

  OmegaStructure(Table left, Table right);
  OmegaStructure(Table left, Table right, Table ltri, Table rtri);

  bool has_triangles() const { return left_tri.has_value(); }
  int left(int a, int b) const { return left_arrow.at(a, b); }
  int right(int a, int b) const { return right_arrow.at(a, b); }
  int ltri(int a, int b) const { return left_tri->at(a, b); }
  int rtri(int a, int b) const { return right_tri->at(a, b); }

  // left, right, then the triangles when present, each row-major.
  std::vector<int> flattened() const;

  bool operator==(const OmegaStructure&) const = default;
};

struct Magma {
  int size = 1;
  Table table;

  explicit Magma(Table t);
  int operator()(int a, int b) const { return table.at(a, b); }
  bool operator==(const Magma&) const = default;
};

enum class LawKind { Diassociative, Duplicial, Edus, Associative, TwistAssociative, NapNapPrime, Perm };

std::string to_string(LawKind k);
LawKind parse_law_kind(const std::string& name);
bool is_magma_kind(LawKind k);

// One defining identity: both sides as fully parenthesised words in a, b, c. Operation letters:
// '<' is ←, '>' is →, '[' is ◁, ']' is ▷, '*' is the magma product.
struct Identity {
  std::string id;
  std::string lhs;
  std::string rhs;
};
const std::vector<Identity>& identities(LawKind k);

LawReport check_laws(const OmegaStructure& s, LawKind kind, bool stop_at_first = false);
LawReport check_laws(const Magma& m, LawKind kind, bool stop_at_first = false);

struct EnumerationLimits {
  int max_size = 3;
  bool allow_size4 = false;
};

// All labeled structures of the given kind, ordered lexicographically by flattened tables.
std::vector<OmegaStructure> enumerate_structures(int size, LawKind kind, EnumerationLimits limits = {});
std::vector<Magma> enumerate_magmas(int size, LawKind kind, EnumerationLimits limits = {});

OmegaStructure ds_projections(int size);
OmegaStructure from_semigroup(const Magma& m);

using BigNat = boost::multiprecision::cpp_int;

// d d' X^alpha in the free twisted semigroup on a finite alphabet.
struct TwistedMonomial {
  std::string head;
  std::string tail;
  std::map<std::string, BigNat> exponent;  // no zero multiplicities stored

  TwistedMonomial(std::string h, std::string t, std::map<std::string, BigNat> e = {});
  std::string to_string() const;
  bool operator==(const TwistedMonomial&) const = default;
};

// Finite multiset of positive integers, stored sorted.
struct NatMultiset {
  std::vector<BigNat> entries;

  NatMultiset() = default;
  explicit NatMultiset(std::vector<BigNat> e);
  std::string to_string() const;
  bool operator==(const NatMultiset&) const = default;
};

using ModelElement = std::variant<TwistedMonomial, NatMultiset>;

TwistedMonomial model_product(const TwistedMonomial& x, const TwistedMonomial& y);
NatMultiset model_product(const NatMultiset& x, const NatMultiset& y);
ModelElement model_product(const ModelElement& x, const ModelElement& y);

}  // namespace famop
