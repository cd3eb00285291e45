#include <doctest.h>

#include "famop/errors.hpp"
#include "famop/linear_family.hpp"

using namespace famop;

namespace {

using Vec = std::vector<Rational>;

Vec basis(int d, int i) {
  Vec v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Vec add(Vec a, const Vec& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign > 0 ? b[i] : -b[i];
  return a;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Dendriform family axioms evaluated directly with the algebra's products.
bool dendriform2_holds(const FamilyBilinear& A, const OmegaStructure& o) {
  int d = A.dim, w = o.size;
  auto P = [&](int a, int b, const Vec& x, const Vec& y) { return A.product("prec", a, b, x, y); };
  auto S = [&](int a, int b, const Vec& x, const Vec& y) { return A.product("succ", a, b, x, y); };
  for (int al = 0; al < w; ++al)
    for (int be = 0; be < w; ++be)
      for (int ga = 0; ga < w; ++ga)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
              auto x = basis(d, i), y = basis(d, j), z = basis(d, k);
              auto l1 = P(o.left(al, be), ga, P(al, be, x, y), z);
              auto r1 = add(P(al, o.left(be, ga), x, P(be, ga, y, z)), P(al, o.right(be, ga), x, S(be, ga, y, z)));
              auto l2 = P(o.right(al, be), ga, S(al, be, x, y), z);
              auto r2 = S(al, o.left(be, ga), x, P(be, ga, y, z));
              auto l3 = S(al, o.right(be, ga), x, S(be, ga, y, z));
              auto r3 = add(S(o.right(al, be), ga, S(al, be, x, y), z), S(o.left(al, be), ga, P(al, be, x, y), z));
              if (!is_zero(add(l1, r1, -1)) || !is_zero(add(l2, r2, -1)) || !is_zero(add(l3, r3, -1))) return false;
            }
  return true;
}

std::vector<OmegaStructure> all_pairs(int n) {
  std::vector<OmegaStructure> out;
  int cells = n * n;
  long long total = 1;
  for (int i = 0; i < 2 * cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> c;
    long long v = code;
    for (int i = 0; i < 2 * cells; ++i) {
      c.push_back(static_cast<int>(v % n));
      v /= n;
    }
    out.emplace_back(Table(n, std::vector<int>(c.begin(), c.begin() + cells)),
                     Table(n, std::vector<int>(c.begin() + cells, c.end())));
  }
  return out;
}

std::vector<Magma> all_magmas(int n) {
  std::vector<Magma> out;
  for (const auto& p : all_pairs(n)) {
    bool first = true;
    for (int i = 0; i < n * n; ++i)
      if (p.right_arrow.cells[static_cast<std::size_t>(i)] != 0) first = false;
    if (first) out.emplace_back(p.left_arrow);
  }
  return out;
}

bool nonzero(const FamilyBilinear& a) {
  for (const auto& [n, ts] : a.ops)
    for (const auto& t : ts)
      for (const auto& c : t)
        if (c != 0) return true;
  return false;
}

}  // namespace

TEST_CASE("rational codec") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  for (int p = -6; p <= 6; ++p)
    for (int q = 1; q <= 4; ++q) CHECK(parse_rational(to_string(Rational(p, q))) == Rational(p, q));
}

TEST_CASE("zero algebras pass every kind") {
  auto o = ds_projections(2);
  CHECK(check_family_laws(FamilyBilinear(3, 2, {"prec", "succ"}), o, FamilyKind::Dendriform2).passed());
  CHECK(check_family_laws(FamilyBilinear(3, 2, {"prec", "succ"}), o, FamilyKind::Duplicial2).passed());
  Magma perm(Table::right_projection(2));
  for (auto k : {FamilyKind::PreLie2, FamilyKind::AssocFamily, FamilyKind::TwistedFamily, FamilyKind::NapNapFamily})
    CHECK(check_family_laws(FamilyBilinear(3, 2, {"rhd"}), perm, k).passed());
  for (auto k : {ClassicKind::Dendriform, ClassicKind::Duplicial})
    CHECK(check_classic_laws(FamilyBilinear(2, 1, {"prec", "succ"}), k).passed());
}

TEST_CASE("single parameter with zero right product and associative left product") {
  // truncated polynomial algebra with basis 1, t, t^2
  FamilyBilinear a(3, 1, {"prec", "succ"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) a.at("prec", 0, 0, i, j, i + j) = 1;
  CHECK(check_family_laws(a, ds_projections(1), FamilyKind::Dendriform2).passed());
  CHECK(dendriform2_holds(a, ds_projections(1)));
}

TEST_CASE("one-dimensional commutative algebra is a pre-Lie family over perm magmas") {
  int perms = 0;
  for (const auto& m : all_magmas(2)) {
    if (!check_laws(m, LawKind::Perm).passed()) continue;
    ++perms;
    FamilyBilinear a(1, 2, {"rhd"});
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) a.at("rhd", p, q, 0, 0, 0) = 1;
    CHECK(check_family_laws(a, m, FamilyKind::PreLie2).passed());
  }
  CHECK(perms > 0);
}

TEST_CASE("idempotent line is associative but not dendriform") {
  FamilyBilinear a(1, 1, {"rhd", "prec", "succ"});
  a.at("rhd", 0, 0, 0, 0, 0) = 1;
  a.at("prec", 0, 0, 0, 0, 0) = 1;
  a.at("succ", 0, 0, 0, 0, 0) = 1;
  CHECK(check_classic_laws(a, ClassicKind::Associative).passed());
  auto r = check_classic_laws(a, ClassicKind::Dendriform);
  CHECK_FALSE(r.passed());
  CHECK(r.witnesses.front().law == "prec_prec");
}

TEST_CASE("parameter law preconditions") {
  OmegaStructure bad(Table({{1, 0}, {0, 0}}), Table::right_projection(2));
  FamilyBilinear a(1, 2, {"prec", "succ"});
  CHECK_THROWS_AS(check_family_laws(a, bad, FamilyKind::Dendriform2), PreconditionError);
  try {
    check_family_laws(a, bad, FamilyKind::Dendriform2);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("diassociative") != std::string::npos);
  }
  FamilyCheckOptions loose;
  loose.require_parameter_laws = false;
  CHECK(check_family_laws(a, bad, FamilyKind::Dendriform2, loose).passed());
  CHECK_THROWS_AS(check_family_laws(FamilyBilinear(1, 3, {"prec", "succ"}), ds_projections(2), FamilyKind::Dendriform2),
                  PreconditionError);
  CHECK_THROWS_AS(check_family_laws(a, ds_projections(2), FamilyKind::PreLie2), PreconditionError);
}

TEST_CASE("checker agrees with direct evaluation on random families") {
  int passes = 0, fails = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto o = ds_projections(2);
    auto a = random_family(2, 2, {"prec", "succ"}, seed, seed % 4 == 0 ? 5 : 30);
    bool lib = check_family_laws(a, o, FamilyKind::Dendriform2).passed();
    CHECK(lib == dendriform2_holds(a, o));
    (lib ? passes : fails)++;
  }
  CHECK(fails > 0);
  for (const auto& o : enumerate_structures(2, LawKind::Diassociative)) {
    auto a = generic_instance(FamilyKind::Dendriform2, o);
    CHECK(dendriform2_holds(a, o));
  }
}

TEST_CASE("generic instances satisfy their own laws and are not zero") {
  for (const auto& o : enumerate_structures(2, LawKind::Diassociative)) {
    auto a = generic_instance(FamilyKind::Dendriform2, o, {1, false, 7});
    CHECK(a.dim == 10);
    CHECK(nonzero(a));
    CHECK(check_family_laws(a, o, FamilyKind::Dendriform2).passed());
  }
  for (const auto& m : all_magmas(2)) {
    for (auto k : {FamilyKind::PreLie2, FamilyKind::AssocFamily, FamilyKind::TwistedFamily, FamilyKind::NapNapFamily}) {
      FamilyCheckOptions loose;
      loose.require_parameter_laws = false;
      auto a = generic_instance(k, m, {3, true, 3});
      CHECK(a.dim == 28);
      CHECK(check_family_laws(a, m, k, loose).passed());
    }
  }
  GenericInstanceOptions tiny;
  tiny.max_dim = 5;
  CHECK_THROWS_AS(generic_instance(FamilyKind::Dendriform2, ds_projections(2), tiny), ResourceError);
}

TEST_CASE("graded algebra shape and color support") {
  for (const auto& o : enumerate_structures(2, LawKind::Diassociative)) {
    auto a = generic_instance(FamilyKind::Dendriform2, o);
    auto g = make_graded(a, o, ClassicKind::Dendriform);
    CHECK(g.algebra.dim == a.dim * 2);
    CHECK(color_support_holds(g, "prec", o.left_arrow));
    CHECK(color_support_holds(g, "succ", o.right_arrow));
  }
  auto one = ds_projections(1);
  auto a = generic_instance(FamilyKind::Dendriform2, one);
  CHECK(make_graded(a, one, ClassicKind::Dendriform).algebra == a);
  CHECK_THROWS_AS(make_graded(a, one, ClassicKind::PreLie), PreconditionError);
}

TEST_CASE("graded dendriform holds exactly over diassociative pairs") {
  FamilyCheckOptions loose;
  loose.require_parameter_laws = false;
  loose.stop_at_first = true;
  int dias = 0, graded_pass = 0;
  for (const auto& o : all_pairs(2)) {
    auto a = generic_instance(FamilyKind::Dendriform2, o);
    REQUIRE(check_family_laws(a, o, FamilyKind::Dendriform2, loose).passed());
    bool graded = check_classic_laws(make_graded(a, o, ClassicKind::Dendriform), ClassicKind::Dendriform, loose).passed();
    bool di = check_laws(o, LawKind::Diassociative).passed();
    CHECK(graded == di);
    dias += di;
    graded_pass += graded;
  }
  CHECK(dias == 13);
  CHECK(graded_pass == 13);
}

TEST_CASE("graded duplicial holds exactly over duplicial pairs") {
  FamilyCheckOptions loose;
  loose.require_parameter_laws = false;
  loose.stop_at_first = true;
  int count = 0;
  for (const auto& o : all_pairs(2)) {
    auto a = generic_instance(FamilyKind::Duplicial2, o);
    REQUIRE(check_family_laws(a, o, FamilyKind::Duplicial2, loose).passed());
    bool graded = check_classic_laws(make_graded(a, o, ClassicKind::Duplicial), ClassicKind::Duplicial, loose).passed();
    bool dup = check_laws(o, LawKind::Duplicial).passed();
    CHECK(graded == dup);
    count += graded;
  }
  CHECK(count == 27);
}

TEST_CASE("graded pre-Lie holds exactly over perm magmas") {
  FamilyCheckOptions loose;
  loose.require_parameter_laws = false;
  loose.stop_at_first = true;
  for (const auto& m : all_magmas(2)) {
    auto a = generic_instance(FamilyKind::PreLie2, m, {3, true, 11});
    REQUIRE(check_family_laws(a, m, FamilyKind::PreLie2, loose).passed());
    bool graded = check_classic_laws(make_graded(a, m, ClassicKind::PreLie), ClassicKind::PreLie, loose).passed();
    CHECK(graded == check_laws(m, LawKind::Perm).passed());
  }
}

TEST_CASE("the three set-operad cases each imply the pre-Lie family law over perm magmas") {
  for (const auto& m : all_magmas(2)) {
    if (!check_laws(m, LawKind::Perm).passed()) continue;
    for (auto k : {FamilyKind::AssocFamily, FamilyKind::TwistedFamily, FamilyKind::NapNapFamily}) {
      auto a = generic_instance(k, m, {3, true, 5});
      REQUIRE(check_family_laws(a, m, k).passed());
      CHECK(check_family_laws(a, m, FamilyKind::PreLie2).passed());
    }
    // associative families: both sides of the pre-Lie family law vanish separately
    auto a = generic_instance(FamilyKind::AssocFamily, m, {3, true, 9});
    int d = a.dim;
    auto R = [&](int p, int q, const Vec& x, const Vec& y) { return a.product("rhd", p, q, x, y); };
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be)
        for (int ga = 0; ga < 2; ++ga)
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < d; j += 3)
              for (int k = 0; k < d; k += 2) {
                auto x = basis(d, i), y = basis(d, j), z = basis(d, k);
                CHECK(is_zero(add(R(al, m(be, ga), x, R(be, ga, y, z)), R(m(al, be), ga, R(al, be, x, y), z), -1)));
                CHECK(is_zero(add(R(be, m(al, ga), y, R(al, ga, x, z)), R(m(be, al), ga, R(be, al, y, x), z), -1)));
              }
  }
}

TEST_CASE("generic pre-Lie families are not associative") {
  Magma perm(Table::right_projection(2));
  auto a = generic_instance(FamilyKind::PreLie2, perm, {3, true, 2});
  CHECK(check_family_laws(a, perm, FamilyKind::PreLie2).passed());
  CHECK_FALSE(check_family_laws(a, perm, FamilyKind::AssocFamily).passed());
}

TEST_CASE("instance bound") {
  FamilyCheckOptions small;
  small.max_instances = 10;
  CHECK_THROWS_AS(check_family_laws(FamilyBilinear(3, 2, {"prec", "succ"}), ds_projections(2), FamilyKind::Dendriform2, small),
                  ResourceError);
}
