#include <doctest.h>

#include <algorithm>
#include <deque>
#include <memory>
#include <random>
#include <set>

#include "famop/errors.hpp"
#include "famop/presentations.hpp"

using namespace famop;

namespace {

// Recursive terms and a breadth-first closure, independent of the library's flat representation.
struct N;
using NP = std::shared_ptr<const N>;
struct N {
  std::string g;
  int label = 0;
  NP l, r;
};

std::string text(const NP& t) {
  if (!t->l) return std::to_string(t->label);
  return "(" + t->g + " " + text(t->l) + " " + text(t->r) + ")";
}

NP parse(const std::string& s, std::size_t& i) {
  while (s[i] == ' ') ++i;
  if (s[i] != '(') {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    auto n = std::make_shared<N>(N{"", std::stoi(s.substr(i, j - i)), nullptr, nullptr});
    i = j;
    return n;
  }
  ++i;
  std::size_t j = i;
  while (s[j] != ' ') ++j;
  std::string g = s.substr(i, j - i);
  i = j;
  auto l = parse(s, i);
  auto r = parse(s, i);
  while (s[i] == ' ') ++i;
  ++i;
  return std::make_shared<N>(N{g, 0, l, r});
}

NP parse(const std::string& s) {
  std::size_t i = 0;
  return parse(s, i);
}

bool bind(const NP& pat, const NP& t, std::map<int, NP>& b) {
  if (!pat->l) {
    b[pat->label] = t;
    return true;
  }
  if (!t->l || t->g != pat->g) return false;
  return bind(pat->l, t->l, b) && bind(pat->r, t->r, b);
}

NP subst(const NP& pat, const std::map<int, NP>& b) {
  if (!pat->l) return b.at(pat->label);
  return std::make_shared<N>(N{pat->g, 0, subst(pat->l, b), subst(pat->r, b)});
}

std::vector<NP> neighbours(const NP& t, const std::vector<std::vector<NP>>& rels) {
  std::vector<NP> out;
  if (!t->l) return out;
  for (const auto& cls : rels)
    for (const auto& u : cls) {
      std::map<int, NP> b;
      if (!bind(u, t, b)) continue;
      for (const auto& v : cls) out.push_back(subst(v, b));
    }
  for (const auto& l : neighbours(t->l, rels)) out.push_back(std::make_shared<N>(N{t->g, 0, l, t->r}));
  for (const auto& r : neighbours(t->r, rels)) out.push_back(std::make_shared<N>(N{t->g, 0, t->l, r}));
  return out;
}

std::set<std::set<std::string>> oracle_partition(const std::vector<std::string>& terms,
                                                 const std::vector<std::vector<std::string>>& relations) {
  std::vector<std::vector<NP>> rels;
  for (const auto& cls : relations) {
    rels.emplace_back();
    for (const auto& s : cls) rels.back().push_back(parse(s));
  }
  std::set<std::string> done;
  std::set<std::set<std::string>> out;
  for (const auto& s : terms) {
    if (done.count(s)) continue;
    std::set<std::string> comp{s};
    std::deque<NP> queue{parse(s)};
    while (!queue.empty()) {
      auto t = queue.front();
      queue.pop_front();
      for (const auto& n : neighbours(t, rels))
        if (comp.insert(text(n)).second) queue.push_back(n);
    }
    done.insert(comp.begin(), comp.end());
    out.insert(comp);
  }
  return out;
}

std::set<std::set<std::string>> partition(const Quotient& q, const Presentation& p) {
  std::set<std::set<std::string>> out;
  for (const auto& cls : q.classes) {
    std::set<std::string> s;
    for (int m : cls) s.insert(serialize(q.terms[static_cast<std::size_t>(m)], p.generators));
    out.insert(s);
  }
  return out;
}

long long catalan_shapes(int leaves) {
  std::vector<long long> c(static_cast<std::size_t>(leaves) + 1, 0);
  c[1] = 1;
  for (int n = 2; n <= leaves; ++n)
    for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
  return c[static_cast<std::size_t>(leaves)];
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long bell(int n) {
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n) + 1, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          k * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
  long long b = 0;
  for (int k = 0; k <= n; ++k) b += s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  return b;
}

std::vector<OmegaStructure> all_pairs2() {
  std::vector<OmegaStructure> out;
  for (int code = 0; code < 256; ++code) {
    std::vector<int> c;
    for (int i = 0; i < 8; ++i) c.push_back((code >> i) & 1);
    out.emplace_back(Table(2, std::vector<int>(c.begin(), c.begin() + 4)), Table(2, std::vector<int>(c.begin() + 4, c.end())));
  }
  return out;
}

}  // namespace

TEST_CASE("term codec") {
  auto p = preset("dendriform");
  auto t = parse_term("(prec 1 (succ 2 3))", p.generators);
  CHECK(t.arity() == 3);
  CHECK(serialize(t, p.generators) == "(prec 1 (succ 2 3))");
  CHECK(parse_term("  ( succ  2 1 ) ", p.generators) == parse_term("(succ 2 1)", p.generators));
  CHECK_THROWS_AS(parse_term("(foo 1 2)", p.generators), ParseError);
  CHECK_THROWS_AS(parse_term("(prec 1 2", p.generators), ParseError);
  CHECK_THROWS_AS(parse_term("(prec 1 2) 3", p.generators), ParseError);
  try {
    parse_term("(prec 1 x)", p.generators);
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& term : enumerate_terms(p, n)) CHECK(parse_term(serialize(term, p.generators), p.generators) == term);
}

TEST_CASE("enumeration counts") {
  Presentation one{{"mu"}, TermMode::Labeled, {}};
  CHECK(enumerate_terms(one, 2).size() == 2);
  CHECK(enumerate_terms(one, 3).size() == 12);
  Presentation two{{"a", "b"}, TermMode::Planar, {}};
  CHECK(enumerate_terms(two, 3).size() == 8);
  for (int n = 1; n <= 5; ++n) {
    long long planar = catalan_shapes(n);
    for (int k = 1; k < n; ++k) planar *= 2;
    CHECK(static_cast<long long>(enumerate_terms(two, n).size()) == planar);
    CHECK(static_cast<long long>(enumerate_terms(one, n).size()) == catalan_shapes(n) * factorial(n));
  }
  CHECK_THROWS_AS(enumerate_terms(one, 6), ResourceError);
  CHECK_THROWS_AS(enumerate_terms(two, 7), ResourceError);
  auto terms = enumerate_terms(two, 4);
  std::set<OperadTerm> unique(terms.begin(), terms.end());
  CHECK(unique.size() == terms.size());
}

TEST_CASE("pinned class counts") {
  std::map<std::string, std::vector<std::size_t>> expected{
      {"duplicial", {2, 5, 14}}, {"dendriform", {2, 3, 4}}, {"prelie", {2, 3, 4}}};
  for (const auto& [name, counts] : expected) {
    auto p = preset(name);
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(quotient_classes(p, n).count() == counts[static_cast<std::size_t>(n - 2)]);
    }
  }
  CHECK(quotient_classes(preset("duplicial"), 3).count() == 5);
}

TEST_CASE("further presets") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(quotient_classes(preset("twist"), n).count() == static_cast<std::size_t>(n * (n - 1)));
    CHECK(quotient_classes(preset("napnap"), n).count() == static_cast<std::size_t>(n * bell(n - 1)));
    CHECK(quotient_classes(preset("associative"), n).count() == 1);
  }
}

TEST_CASE("closure agrees with a breadth-first oracle") {
  for (const auto& name : preset_names()) {
    auto p = preset(name);
    std::vector<std::vector<std::string>> rels;
    for (const auto& cls : p.relations) {
      rels.emplace_back();
      for (const auto& t : cls) rels.back().push_back(serialize(t, p.generators));
    }
    for (int n = 2; n <= 4; ++n) {
      auto q = quotient_classes(p, n);
      std::vector<std::string> terms;
      for (const auto& t : q.terms) terms.push_back(serialize(t, p.generators));
      CAPTURE(name);
      CHECK(partition(q, p) == oracle_partition(terms, rels));
    }
  }
}

TEST_CASE("partition does not depend on enumeration order") {
  std::mt19937 rng(4);
  for (const auto& name : preset_names()) {
    auto p = preset(name);
    auto terms = enumerate_terms(p, 4);
    auto base = partition(quotient_classes(p, terms), p);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(terms.begin(), terms.end(), rng);
      CHECK(partition(quotient_classes(p, terms), p) == base);
    }
  }
}

TEST_CASE("representatives and class order are canonical") {
  auto p = preset("dendriform");
  auto q = quotient_classes(p, 3);
  std::vector<std::string> reps;
  for (std::size_t c = 0; c < q.count(); ++c) {
    reps.push_back(serialize(q.representative(c), p.generators));
    for (int m : q.classes[c]) CHECK(serialize(q.terms[static_cast<std::size_t>(m)], p.generators) >= reps.back());
  }
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  CHECK(reps == std::vector<std::string>{"(prec (prec 1 2) 3)", "(prec (succ 1 2) 3)", "(succ (prec 1 2) 3)"});
}

TEST_CASE("arity two classes are the generators") {
  for (const auto& name : preset_names()) {
    auto p = preset(name);
    std::size_t expected = p.generators.size() * (p.mode == TermMode::Labeled ? 2 : 1);
    CHECK(quotient_classes(p, 2).count() == expected);
  }
}

TEST_CASE("presentation validation and warnings") {
  Presentation p{{"m"}, TermMode::Planar, {}};
  p.relations.push_back({parse_term("(m 1 2)", p.generators), parse_term("(m (m 1 2) 3)", p.generators)});
  CHECK_THROWS_AS(p.validate(), ValidationError);
  Presentation planar{{"m"}, TermMode::Planar, {{parse_term("(m 2 1)", {"m"})}}};
  CHECK_THROWS_AS(planar.validate(), ValidationError);
  Presentation dup_label{{"m"}, TermMode::Labeled, {{parse_term("(m 1 1)", {"m"})}}};
  CHECK_THROWS_AS(dup_label.validate(), ValidationError);
  Presentation mixed{{"m"}, TermMode::Labeled, {}};
  mixed.relations.push_back({parse_term("(m 1 2)", {"m"}), parse_term("(m 2 1)", {"m"})});
  mixed.relations.push_back({parse_term("(m (m 1 2) 3)", {"m"}), parse_term("(m 1 (m 2 3))", {"m"})});
  CHECK(mixed.warnings().size() == 1);
  CHECK(quotient_classes(mixed, 3).warnings.size() == 1);
  for (const auto& name : preset_names()) CHECK(preset(name).warnings().empty());
  CHECK_THROWS_AS(preset("nope"), ValidationError);
}

TEST_CASE("planar composition") {
  std::vector<std::string> g{"m"};
  auto x = parse_term("(m 1 2)", g), y = parse_term("(m 1 2)", g);
  CHECK(serialize(compose(x, 1, y), g) == "(m (m 1 2) 3)");
  CHECK(serialize(compose(x, 2, y), g) == "(m 1 (m 2 3))");
  CHECK(compose(x, 1, OperadTerm::leaf(1)) == x);
  CHECK(compose(OperadTerm::leaf(1), 1, x) == x);
  CHECK_THROWS_AS(compose(x, 3, y), DomainError);
}

TEST_CASE("colored composition") {
  std::vector<std::string> g{"m"};
  ColoredTerm x{parse_term("(m 1 2)", g), {0, 1}, 1};
  ColoredTerm y{parse_term("(m 1 2)", g), {1, 1}, 0};
  ColoredTerm u{OperadTerm::leaf(1), {0}, 0};
  auto xy = colored_compose(x, 1, y);
  REQUIRE(xy.has_value());
  CHECK(xy->input_colors == std::vector<int>{1, 1, 1});
  CHECK(xy->output_color == 1);
  CHECK_FALSE(colored_compose(x, 2, y).has_value());
  CHECK(colored_compose(x, 1, u).value() == x);
  CHECK(colored_compose(u, 1, y).value() == y);
  CHECK_THROWS_AS(colored_compose(x, 0, y), DomainError);

  // sequential associativity on random matching triples
  Presentation free2{{"a", "b"}, TermMode::Planar, {}};
  std::vector<OperadTerm> pool;
  for (int n = 1; n <= 3; ++n) {
    auto ts = enumerate_terms(free2, n);
    pool.insert(pool.end(), ts.begin(), ts.end());
  }
  std::mt19937 rng(12);
  auto random_colored = [&]() {
    ColoredTerm c;
    c.term = pool[rng() % pool.size()];
    for (int i = 0; i < c.term.arity(); ++i) c.input_colors.push_back(static_cast<int>(rng() % 2));
    c.output_color = static_cast<int>(rng() % 2);
    return c;
  };
  int tested = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    auto a = random_colored(), b = random_colored(), c = random_colored();
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(a.term.arity()));
    int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.term.arity()));
    b.output_color = a.input_colors[static_cast<std::size_t>(i - 1)];
    c.output_color = b.input_colors[static_cast<std::size_t>(j - 1)];
    auto left = colored_compose(colored_compose(a, i, b).value(), i + j - 1, c);
    auto right = colored_compose(a, i, colored_compose(b, j, c).value());
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(*left == *right);
    ++tested;
  }
  CHECK(tested == 4000);

  // all colors equal: colored composition is plain composition
  for (const auto& s : pool)
    for (const auto& t : pool)
      for (int i = 1; i <= s.arity(); ++i) {
        ColoredTerm cs{s, std::vector<int>(static_cast<std::size_t>(s.arity()), 0), 0};
        ColoredTerm ct{t, std::vector<int>(static_cast<std::size_t>(t.arity()), 0), 0};
        CHECK(colored_compose(cs, i, ct)->term == compose(s, i, t));
      }
}

TEST_CASE("color transforms") {
  auto p = preset("duplicial");
  auto base = enumerate_terms(p, 3);
  const int w = 2, n = 3;
  auto uni = uniformize(base, w, n);
  CHECK(forget(uni, n).size() == base.size() * 16);
  std::vector<int> identity{0, 1};
  CHECK(color_change(uni, identity, w, n) == uni);
  ColoredFamily mono;
  mono[{std::vector<int>(3, 0), 0}] = base;
  CHECK(color_change(mono, {0, 0}, w, n) == uniformize(base, w, n));
  for (int colors = 1; colors <= 3; ++colors)
    for (int ar = 1; ar <= 3; ++ar) {
      auto ts = enumerate_terms(p, ar);
      std::size_t expected = ts.size();
      for (int k = 0; k <= ar; ++k) expected *= static_cast<std::size_t>(colors);
      CHECK(forget(uniformize(ts, colors, ar), ar).size() == expected);
    }
  CHECK_THROWS_AS(color_change(uni, {0}, w, n), ValidationError);
}

TEST_CASE("color mixing") {
  auto p = preset("duplicial");
  auto o = ds_projections(2);
  auto tables = color_tables(o);
  // arity two: member iff the output is the product of the input colors
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int w = 0; w < 2; ++w) {
        auto r = mixing_filter(p, tables, 2, {a, b}, w);
        auto q = quotient_classes(p, 2);
        for (int c : r.member_classes) {
          auto rep = serialize(q.representative(static_cast<std::size_t>(c)), p.generators);
          CHECK(w == (rep.rfind("(prec", 0) == 0 ? o.left(a, b) : o.right(a, b)));
        }
        CHECK(r.member_classes.size() + r.non_member_classes.size() == 2);
      }
  CHECK(mixing_report(p, tables, 3).passed());
  auto q = quotient_classes(p, 3);
  std::vector<int> members(q.count(), 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int w = 0; w < 2; ++w)
          for (int m : mixing_filter(p, tables, 3, {a, b, c}, w).member_classes) {
            ++members[static_cast<std::size_t>(m)];
            for (int t : q.classes[static_cast<std::size_t>(m)])
              CHECK(evaluate_colors(q.terms[static_cast<std::size_t>(t)], p, tables, {a, b, c}) == w);
          }
  for (int m : members) CHECK(m == 8);
}

TEST_CASE("class consistency characterizes the parameter laws") {
  int dup = 0, dend = 0;
  for (const auto& o : all_pairs2()) {
    bool d = mixing_report(preset("duplicial"), color_tables(o), 3).passed();
    CHECK(d == check_laws(o, LawKind::Duplicial).passed());
    bool e = mixing_report(preset("dendriform"), color_tables(o), 3).passed();
    CHECK(e == check_laws(o, LawKind::Diassociative).passed());
    dup += d;
    dend += e;
  }
  CHECK(dup == 27);
  CHECK(dend == 13);
  OmegaStructure bad(Table({{1, 0}, {0, 0}}), Table::right_projection(2));
  REQUIRE_FALSE(check_laws(bad, LawKind::Diassociative).passed());
  try {
    mixing_filter(preset("dendriform"), color_tables(bad), 3, {0, 0, 0}, 0);
    FAIL("expected an exception");
  } catch (const PreconditionError& e) {
    std::string what = e.what();
    CHECK(what.find("not a ℗-algebra") != std::string::npos);
    CHECK(what.find("(prec") != std::string::npos);
  }
  auto pl = preset("prelie");
  for (int code = 0; code < 16; ++code) {
    Magma m(Table(2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1}));
    CHECK(mixing_report(pl, color_tables(pl, m), 3).passed() == check_laws(m, LawKind::Perm).passed());
  }
}
