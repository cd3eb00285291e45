#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "famop/law_report.hpp"
#include "famop/omega.hpp"

namespace famop {

using Rational = boost::multiprecision::cpp_rational;

// Finite-dimensional algebra with bilinear products indexed by pairs (a, b) of parameters.
// ops[name][a * params + b] holds c[(i * dim + j) * dim + k], meaning e_i ∘ e_j = Σ_k c e_k.
// A plain (unparametrized) algebra is the case params == 1.
struct FamilyBilinear {
  int dim = 0;
  int params = 1;
  std::map<std::string, std::vector<std::vector<Rational>>> ops;

  FamilyBilinear() = default;
  FamilyBilinear(int d, int w, const std::vector<std::string>& names);

  Rational& at(const std::string& op, int a, int b, int i, int j, int k);
  const Rational& at(const std::string& op, int a, int b, int i, int j, int k) const;
  std::vector<Rational> product(const std::string& op, int a, int b, const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  void validate() const;
  bool operator==(const FamilyBilinear&) const = default;
};

// Basis vector (i, ω) has index i * colors + ω in the underlying one-parameter algebra.
struct GradedBasisAlgebra {
  int base_dim = 0;
  int colors = 1;
  FamilyBilinear algebra;

  int index(int i, int color) const { return i * colors + color; }
};

enum class FamilyKind { Dendriform2, Duplicial2, PreLie2, AssocFamily, TwistedFamily, NapNapFamily };
enum class ClassicKind { Dendriform, Duplicial, PreLie, Associative };

std::string to_string(FamilyKind k);
std::string to_string(ClassicKind k);
FamilyKind parse_family_kind(const std::string& name);
ClassicKind parse_classic_kind(const std::string& name);

// Operation names: "prec" and "succ" for the dendriform and duplicial kinds, "rhd" otherwise.
std::vector<std::string> operation_names(FamilyKind k);
std::vector<std::string> operation_names(ClassicKind k);
// The law on the parameter set a family kind requires.
LawKind parameter_law(FamilyKind k);
bool uses_magma(FamilyKind k);

struct FamilyCheckOptions {
  bool require_parameter_laws = true;
  bool stop_at_first = false;
  std::uint64_t max_instances = 50'000'000;
};

LawReport check_family_laws(const FamilyBilinear& a, const OmegaStructure& o, FamilyKind kind,
                            const FamilyCheckOptions& options = {});
LawReport check_family_laws(const FamilyBilinear& a, const Magma& m, FamilyKind kind,
                            const FamilyCheckOptions& options = {});

GradedBasisAlgebra make_graded(const FamilyBilinear& a, const OmegaStructure& o, ClassicKind kind);
GradedBasisAlgebra make_graded(const FamilyBilinear& a, const Magma& m, ClassicKind kind);

LawReport check_classic_laws(const FamilyBilinear& b, ClassicKind kind, const FamilyCheckOptions& options = {});
LawReport check_classic_laws(const GradedBasisAlgebra& b, ClassicKind kind, const FamilyCheckOptions& options = {});

// Whether every product of colors α, β lands in the single color given by the matching table.
bool color_support_holds(const GradedBasisAlgebra& b, const std::string& op, const Table& colors);

// Generic instance: the free family algebra on a few generators truncated after degree 3, where
// all degree-3 monomials are sent to one top vector by a seeded random functional vanishing on
// the relations. Multilinear mode keeps only monomials with distinct generators.
struct GenericInstanceOptions {
  int generators = 1;
  bool multilinear = false;
  std::uint64_t seed = 1;
  int max_dim = 64;
};

FamilyBilinear generic_instance(FamilyKind kind, const OmegaStructure& o, const GenericInstanceOptions& options = {});
FamilyBilinear generic_instance(FamilyKind kind, const Magma& m, const GenericInstanceOptions& options = {});

// Structure constants drawn uniformly from small fractions p/q with |p| ≤ 2, 1 ≤ q ≤ 3; density in percent.
FamilyBilinear random_family(int dim, int params, const std::vector<std::string>& names, std::uint64_t seed,
                             int density = 50);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace famop
