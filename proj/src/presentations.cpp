#include "famop/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "famop/errors.hpp"

namespace famop {

namespace {

std::size_t subterm_end(const std::vector<TermNode>& nodes, std::size_t i) {
  std::size_t need = 1;
  while (need > 0) {
    need += nodes[i].gen >= 0 ? 1 : 0;
    need -= nodes[i].gen >= 0 ? 0 : 1;
    ++i;
  }
  return i;
}

void serialize_into(const std::vector<TermNode>& nodes, std::size_t& i, const std::vector<std::string>& gens,
                    std::string& out) {
  const auto& n = nodes[i++];
  if (n.gen < 0) {
    out += std::to_string(n.label);
    return;
  }
  out += "(";
  out += gens.at(static_cast<std::size_t>(n.gen));
  out += " ";
  serialize_into(nodes, i, gens, out);
  out += " ";
  serialize_into(nodes, i, gens, out);
  out += ")";
}

class TermParser {
 public:
  TermParser(const std::string& s, const std::vector<std::string>& g) : text_(s), gens_(g) {}

  OperadTerm run() {
    OperadTerm t;
    parse(t.nodes);
    skip();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void parse(std::vector<TermNode>& out) {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of term", pos_);
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 6) throw ParseError("leaf label too large", start);
      out.push_back({-1, std::stoi(text_.substr(start, pos_ - start))});
      return;
    }
    if (text_[pos_] != '(') throw ParseError("expected '(' or a leaf label", pos_);
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) throw ParseError("unknown generator '" + name + "'", start);
    out.push_back({static_cast<int>(it - gens_.begin()), 0});
    parse(out);
    parse(out);
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  const std::string& text_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

std::vector<OperadTerm> shapes(int n, int gens) {
  if (n == 1) return {OperadTerm::leaf(0)};
  std::vector<OperadTerm> out;
  for (int k = 1; k < n; ++k) {
    auto ls = shapes(k, gens), rs = shapes(n - k, gens);
    for (int g = 0; g < gens; ++g)
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(OperadTerm::node(g, l, r));
  }
  return out;
}

OperadTerm with_labels(OperadTerm t, const std::vector<int>& labels) {
  std::size_t k = 0;
  for (auto& n : t.nodes)
    if (n.gen < 0) n.label = labels[k++];
  return t;
}

// Matches pattern p against t at position i; binds pattern variables (leaf labels) to subterms.
bool match(const std::vector<TermNode>& p, std::size_t& pi, const std::vector<TermNode>& t, std::size_t& ti,
           std::map<int, std::pair<std::size_t, std::size_t>>& bind) {
  const auto& pn = p[pi];
  if (pn.gen < 0) {
    std::size_t end = subterm_end(t, ti);
    bind[pn.label] = {ti, end};
    ++pi;
    ti = end;
    return true;
  }
  if (t[ti].gen != pn.gen) return false;
  ++pi;
  ++ti;
  return match(p, pi, t, ti, bind) && match(p, pi, t, ti, bind);
}

std::vector<std::vector<int>> all_colorings(int colors, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(c);
    int k = n - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == colors - 1) c[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++c[static_cast<std::size_t>(k)];
  }
  return out;
}

std::string coloring_text(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

int eval_at(const std::vector<TermNode>& nodes, std::size_t& i, const std::vector<const Table*>& tables,
            const std::vector<int>& coloring) {
  const auto& n = nodes[i++];
  if (n.gen < 0) return coloring.at(static_cast<std::size_t>(n.label - 1));
  int l = eval_at(nodes, i, tables, coloring);
  int r = eval_at(nodes, i, tables, coloring);
  return tables[static_cast<std::size_t>(n.gen)]->at(l, r);
}

std::vector<const Table*> resolve_tables(const Presentation& p, const ColorTables& tables) {
  std::vector<const Table*> out;
  int size = -1;
  for (const auto& g : p.generators) {
    auto it = tables.find(g);
    if (it == tables.end()) throw PreconditionError("no color table for generator '" + g + "'");
    if (size >= 0 && it->second.size != size) throw PreconditionError("color tables differ in size");
    size = it->second.size;
    out.push_back(&it->second);
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

OperadTerm OperadTerm::leaf(int label) { return OperadTerm{{TermNode{-1, label}}}; }

OperadTerm OperadTerm::node(int gen, const OperadTerm& left, const OperadTerm& right) {
  OperadTerm t;
  t.nodes.reserve(1 + left.nodes.size() + right.nodes.size());
  t.nodes.push_back({gen, 0});
  t.nodes.insert(t.nodes.end(), left.nodes.begin(), left.nodes.end());
  t.nodes.insert(t.nodes.end(), right.nodes.begin(), right.nodes.end());
  return t;
}

int OperadTerm::arity() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const TermNode& n) { return n.gen < 0; }));
}

std::vector<int> OperadTerm::leaf_labels() const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.gen < 0) out.push_back(n.label);
  return out;
}

void Presentation::validate() const {
  if (generators.empty()) throw ValidationError("a presentation needs at least one generator");
  std::set<std::string> seen(generators.begin(), generators.end());
  if (seen.size() != generators.size()) throw ValidationError("generator names must be distinct");
  for (const auto& cls : relations) {
    if (cls.empty()) throw ValidationError("empty relation class");
    int arity = cls.front().arity();
    for (const auto& t : cls) {
      if (t.nodes.empty() || subterm_end(t.nodes, 0) != t.nodes.size()) throw ValidationError("malformed term");
      for (const auto& n : t.nodes)
        if (n.gen >= static_cast<int>(generators.size())) throw ValidationError("generator index out of range");
      if (t.arity() != arity) throw ValidationError("terms of one relation class must share their arity");
      auto labels = t.leaf_labels();
      std::vector<int> expected(labels.size());
      std::iota(expected.begin(), expected.end(), 1);
      if (mode == TermMode::Planar && labels != expected)
        throw ValidationError("planar relation terms must number their leaves 1..n from left to right");
      std::sort(labels.begin(), labels.end());
      if (labels != expected) throw ValidationError("relation leaves must carry the labels 1..n once each");
    }
  }
}

std::vector<std::string> Presentation::warnings() const {
  std::set<int> arities;
  for (const auto& cls : relations)
    if (!cls.empty()) arities.insert(cls.front().arity());
  if (arities.size() <= 1) return {};
  std::string list;
  for (int a : arities) list += (list.empty() ? "" : ", ") + std::to_string(a);
  return {"relation classes have differing arities (" + list +
          "); the fixed-arity closure may be finer than the operadic congruence"};
}

std::string serialize(const OperadTerm& t, const std::vector<std::string>& generators) {
  std::string out;
  std::size_t i = 0;
  serialize_into(t.nodes, i, generators, out);
  return out;
}

OperadTerm parse_term(const std::string& text, const std::vector<std::string>& generators) {
  return TermParser(text, generators).run();
}

std::vector<std::string> preset_names() { return {"dendriform", "duplicial", "prelie", "associative", "twist", "napnap"}; }

Presentation preset(const std::string& name) {
  Presentation p;
  auto cls = [&](std::initializer_list<const char*> terms) {
    std::vector<OperadTerm> out;
    for (const char* t : terms) out.push_back(parse_term(t, p.generators));
    p.relations.push_back(std::move(out));
  };
  if (name == "duplicial" || name == "dendriform") {
    p.generators = {"prec", "succ"};
    p.mode = TermMode::Planar;
    if (name == "duplicial") {
      cls({"(prec (prec 1 2) 3)", "(prec 1 (prec 2 3))"});
      cls({"(prec (succ 1 2) 3)", "(succ 1 (prec 2 3))"});
      cls({"(succ 1 (succ 2 3))", "(succ (succ 1 2) 3)"});
    } else {
      cls({"(prec (prec 1 2) 3)", "(prec 1 (prec 2 3))", "(prec 1 (succ 2 3))"});
      cls({"(prec (succ 1 2) 3)", "(succ 1 (prec 2 3))"});
      cls({"(succ 1 (succ 2 3))", "(succ (succ 1 2) 3)", "(succ (prec 1 2) 3)"});
    }
  } else if (name == "prelie") {
    p.generators = {"rhd"};
    p.mode = TermMode::Labeled;
    cls({"(rhd 1 (rhd 2 3))", "(rhd (rhd 1 2) 3)", "(rhd 2 (rhd 1 3))", "(rhd (rhd 2 1) 3)"});
  } else if (name == "associative") {
    p.generators = {"mu"};
    p.mode = TermMode::Planar;
    cls({"(mu (mu 1 2) 3)", "(mu 1 (mu 2 3))"});
  } else if (name == "twist") {
    p.generators = {"mu"};
    p.mode = TermMode::Labeled;
    cls({"(mu 1 (mu 2 3))", "(mu (mu 2 1) 3)"});
  } else if (name == "napnap") {
    p.generators = {"mu"};
    p.mode = TermMode::Labeled;
    cls({"(mu 1 (mu 2 3))", "(mu 2 (mu 1 3))"});
    cls({"(mu (mu 1 2) 3)", "(mu (mu 2 1) 3)"});
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return p;
}

std::vector<OperadTerm> enumerate_terms(const Presentation& p, int arity, TermBounds bounds) {
  p.validate();
  if (arity < 1) throw PreconditionError("arity must be positive");
  int bound = p.mode == TermMode::Planar ? bounds.planar : bounds.labeled;
  if (arity > bound)
    throw ResourceError("arity " + std::to_string(arity) + " exceeds the bound " + std::to_string(bound));
  std::vector<OperadTerm> out;
  std::vector<int> labels(static_cast<std::size_t>(arity));
  std::iota(labels.begin(), labels.end(), 1);
  for (const auto& s : shapes(arity, static_cast<int>(p.generators.size()))) {
    if (p.mode == TermMode::Planar) {
      out.push_back(with_labels(s, labels));
      continue;
    }
    auto perm = labels;
    do out.push_back(with_labels(s, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::pair<std::string, OperadTerm>> keyed;
  for (auto& t : out) keyed.emplace_back(serialize(t, p.generators), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

Quotient quotient_classes(const Presentation& p, int arity, TermBounds bounds) {
  return quotient_classes(p, enumerate_terms(p, arity, bounds));
}

Quotient quotient_classes(const Presentation& p, const std::vector<OperadTerm>& terms) {
  p.validate();
  Quotient q;
  q.terms = terms;
  q.warnings = p.warnings();
  std::map<OperadTerm, int> index;
  for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i], static_cast<int>(i));
  UnionFind uf(terms.size());
  for (std::size_t ti = 0; ti < terms.size(); ++ti) {
    const auto& t = terms[ti].nodes;
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
      if (t[pos].gen < 0) continue;
      for (const auto& cls : p.relations) {
        if (cls.size() < 2) continue;
        const auto& target = cls.front().nodes;
        for (std::size_t r = 1; r < cls.size(); ++r) {
          std::map<int, std::pair<std::size_t, std::size_t>> bind;
          std::size_t pi = 0, cur = pos;
          if (!match(cls[r].nodes, pi, t, cur, bind)) continue;
          OperadTerm rewritten;
          rewritten.nodes.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos));
          for (const auto& n : target) {
            if (n.gen >= 0) {
              rewritten.nodes.push_back(n);
              continue;
            }
            auto [b, e] = bind.at(n.label);
            rewritten.nodes.insert(rewritten.nodes.end(), t.begin() + static_cast<std::ptrdiff_t>(b),
                                   t.begin() + static_cast<std::ptrdiff_t>(e));
          }
          rewritten.nodes.insert(rewritten.nodes.end(), t.begin() + static_cast<std::ptrdiff_t>(cur), t.end());
          auto it = index.find(rewritten);
          if (it != index.end()) uf.unite(static_cast<int>(ti), it->second);
        }
      }
    }
  }
  std::vector<std::string> keys;
  for (const auto& t : terms) keys.push_back(serialize(t, p.generators));
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < terms.size(); ++i) groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    q.classes.push_back(members);
  }
  std::sort(q.classes.begin(), q.classes.end(), [&](const auto& a, const auto& b) {
    return keys[static_cast<std::size_t>(a.front())] < keys[static_cast<std::size_t>(b.front())];
  });
  q.class_of.assign(terms.size(), 0);
  for (std::size_t c = 0; c < q.classes.size(); ++c)
    for (int m : q.classes[c]) q.class_of[static_cast<std::size_t>(m)] = static_cast<int>(c);
  return q;
}

OperadTerm compose(const OperadTerm& x, int position, const OperadTerm& y) {
  int n = x.arity();
  if (position < 1 || position > n)
    throw DomainError("position " + std::to_string(position) + " outside 1.." + std::to_string(n));
  OperadTerm out;
  int seen = 0, label = 0;
  for (const auto& node : x.nodes) {
    if (node.gen >= 0) {
      out.nodes.push_back(node);
      continue;
    }
    if (++seen == position) {
      for (const auto& yn : y.nodes) out.nodes.push_back(yn.gen >= 0 ? yn : TermNode{-1, ++label});
    } else {
      out.nodes.push_back({-1, ++label});
    }
  }
  return out;
}

std::optional<ColoredTerm> colored_compose(const ColoredTerm& x, int position, const ColoredTerm& y) {
  int n = x.term.arity();
  if (static_cast<int>(x.input_colors.size()) != n || static_cast<int>(y.input_colors.size()) != y.term.arity())
    throw ValidationError("input colors must match the arity");
  if (position < 1 || position > n)
    throw DomainError("position " + std::to_string(position) + " outside 1.." + std::to_string(n));
  auto pos = static_cast<std::size_t>(position - 1);
  if (x.input_colors[pos] != y.output_color) return std::nullopt;
  ColoredTerm out;
  out.term = compose(x.term, position, y.term);
  out.input_colors.assign(x.input_colors.begin(), x.input_colors.begin() + static_cast<std::ptrdiff_t>(pos));
  out.input_colors.insert(out.input_colors.end(), y.input_colors.begin(), y.input_colors.end());
  out.input_colors.insert(out.input_colors.end(), x.input_colors.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                          x.input_colors.end());
  out.output_color = x.output_color;
  return out;
}

ColoredFamily color_change(const ColoredFamily& q, const std::vector<int>& kappa, int colors, int arity) {
  if (static_cast<int>(kappa.size()) != colors) throw ValidationError("kappa must be defined on every color");
  ColoredFamily out;
  for (const auto& in : all_colorings(colors, arity))
    for (int w = 0; w < colors; ++w) {
      std::vector<int> mapped;
      for (int c : in) mapped.push_back(kappa[static_cast<std::size_t>(c)]);
      auto it = q.find({mapped, kappa[static_cast<std::size_t>(w)]});
      out[{in, w}] = it == q.end() ? std::vector<OperadTerm>{} : it->second;
    }
  return out;
}

ColoredFamily uniformize(const std::vector<OperadTerm>& base, int colors, int arity) {
  ColoredFamily out;
  for (const auto& in : all_colorings(colors, arity))
    for (int w = 0; w < colors; ++w) out[{in, w}] = base;
  return out;
}

std::vector<std::pair<ColorKey, OperadTerm>> forget(const ColoredFamily& q, int arity) {
  std::vector<std::pair<ColorKey, OperadTerm>> out;
  for (const auto& [key, terms] : q)
    if (static_cast<int>(key.first.size()) == arity)
      for (const auto& t : terms) out.emplace_back(key, t);
  return out;
}

int evaluate_colors(const OperadTerm& t, const Presentation& p, const ColorTables& tables,
                    const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != t.arity()) throw ValidationError("coloring length must equal the arity");
  auto ts = resolve_tables(p, tables);
  for (int c : coloring)
    if (c < 0 || c >= ts.front()->size) throw ValidationError("color out of range");
  std::size_t i = 0;
  return eval_at(t.nodes, i, ts, coloring);
}

LawReport mixing_report(const Presentation& p, const ColorTables& tables, int arity, TermBounds bounds) {
  auto q = quotient_classes(p, arity, bounds);
  auto ts = resolve_tables(p, tables);
  LawReport rep("mixing");
  for (std::size_t c = 0; c < q.count(); ++c)
    for (const auto& col : all_colorings(ts.front()->size, arity)) {
      std::set<int> values;
      for (int m : q.classes[c]) {
        std::size_t i = 0;
        values.insert(eval_at(q.terms[static_cast<std::size_t>(m)].nodes, i, ts, col));
      }
      ++rep.instances;
      if (values.size() > 1) rep.fail("class_constant", {serialize(q.representative(c), p.generators), coloring_text(col)});
    }
  rep.stats["classes"] = static_cast<std::int64_t>(q.count());
  return rep;
}

MixingResult mixing_filter(const Presentation& p, const ColorTables& tables, int arity, const std::vector<int>& coloring,
                           int output, TermBounds bounds) {
  if (static_cast<int>(coloring.size()) != arity) throw ValidationError("coloring length must equal the arity");
  MixingResult r;
  r.consistency = mixing_report(p, tables, arity, bounds);
  if (!r.consistency.passed())
    throw PreconditionError("not a ℗-algebra: evaluation is not constant on the class of " +
                            r.consistency.witnesses.front().args.front());
  auto q = quotient_classes(p, arity, bounds);
  for (std::size_t c = 0; c < q.count(); ++c) {
    bool member = evaluate_colors(q.representative(c), p, tables, coloring) == output;
    (member ? r.member_classes : r.non_member_classes).push_back(static_cast<int>(c));
  }
  return r;
}

ColorTables color_tables(const OmegaStructure& o) { return {{"prec", o.left_arrow}, {"succ", o.right_arrow}}; }

ColorTables color_tables(const Presentation& p, const Magma& m) {
  ColorTables out;
  for (const auto& g : p.generators) out[g] = m.table;
  return out;
}

}  // namespace famop
