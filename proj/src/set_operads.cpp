#include "famop/set_operads.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "famop/errors.hpp"
#include "famop/presentations.hpp"

namespace famop {

namespace {

const Label kMu1 = "#1";
const Label kMu2 = "#2";

bool contains(const Carrier& c, const Label& x) { return std::binary_search(c.begin(), c.end(), x); }

std::string braces(const Carrier& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i];
  return s + "}";
}

// Carrier of x ∘_a y after checking a ∈ A and A ∩ B = ∅.
Carrier grafted_carrier(const Carrier& a_set, const Label& a, const Carrier& b_set) {
  if (!contains(a_set, a)) throw DomainError("label '" + a + "' is not in the carrier " + braces(a_set));
  for (const auto& b : b_set)
    if (contains(a_set, b)) throw PreconditionError("carriers share the label '" + b + "'; relabel first");
  Carrier out;
  for (const auto& x : a_set)
    if (x != a) out.push_back(x);
  out.insert(out.end(), b_set.begin(), b_set.end());
  return make_carrier(std::move(out));
}

const Label& image(const Relabeling& phi, const Label& x) {
  auto it = phi.find(x);
  if (it == phi.end()) throw ValidationError("relabeling undefined on '" + x + "'");
  return it->second;
}

Carrier relabel_carrier(const Carrier& c, const Relabeling& phi) {
  Carrier out;
  for (const auto& x : c) out.push_back(image(phi, x));
  return make_carrier(std::move(out));
}

void check_reserved(const Carrier& a, const Carrier& b) {
  for (const auto* c : {&a, &b})
    if (contains(*c, kMu1) || contains(*c, kMu2)) throw PreconditionError("labels #1 and #2 are reserved");
  for (const auto& x : a)
    if (contains(b, x)) throw PreconditionError("carriers share the label '" + x + "'");
}

template <class E>
struct Ops;

template <>
struct Ops<NonDiagonalPair> {
  static std::vector<NonDiagonalPair> all(const Carrier& c) { return enumerate_pairs(c); }
  static NonDiagonalPair compose(const NonDiagonalPair& x, const Label& a, const NonDiagonalPair& y) {
    return twist_compose(x, a, y);
  }
  static Carrier carrier(const NonDiagonalPair& x) { return x.carrier; }
  static NonDiagonalPair unit(const Label& u) { return NonDiagonalPair::unit(u); }
};

template <>
struct Ops<Corolla> {
  static std::vector<Corolla> all(const Carrier& c) { return enumerate_corollas(c); }
  static Corolla compose(const Corolla& x, const Label& a, const Corolla& y) { return corolla_compose(x, a, y); }
  static Carrier carrier(const Corolla& x) { return x.carrier; }
  static Corolla unit(const Label& u) { return Corolla::make(u, {}); }
};

template <>
struct Ops<PermPoint> {
  static std::vector<PermPoint> all(const Carrier& c) { return enumerate_perm(c); }
  static PermPoint compose(const PermPoint& x, const Label& a, const PermPoint& y) { return perm_compose(x, a, y); }
  static Carrier carrier(const PermPoint& x) { return x.carrier; }
  static PermPoint unit(const Label& u) { return PermPoint::make({u}, u); }
};

template <>
struct Ops<LinearOrder> {
  static std::vector<LinearOrder> all(const Carrier& c) { return enumerate_orders(c); }
  static LinearOrder compose(const LinearOrder& x, const Label& a, const LinearOrder& y) {
    return order_compose(x, a, y);
  }
  static Carrier carrier(const LinearOrder& x) { return x.carrier(); }
  static LinearOrder unit(const Label& u) { return LinearOrder::make({u}); }
};

Carrier labels(const std::string& prefix, int n) {
  Carrier c;
  for (int i = 1; i <= n; ++i) c.push_back(prefix + std::to_string(i));
  return make_carrier(std::move(c));
}

// Bijections from c onto fresh labels: all of them for small carriers, otherwise the cyclic
// shifts and their reversals.
std::vector<Relabeling> bijections(const Carrier& c) {
  std::vector<Relabeling> out;
  auto target = labels("p", static_cast<int>(c.size()));
  auto add = [&](const std::vector<Label>& t) {
    Relabeling phi;
    for (std::size_t i = 0; i < c.size(); ++i) phi[c[i]] = t[i];
    out.push_back(std::move(phi));
  };
  if (c.size() <= 4) {
    auto t = target;
    do add(t);
    while (std::next_permutation(t.begin(), t.end()));
    return out;
  }
  for (std::size_t s = 0; s < c.size(); ++s) {
    std::vector<Label> t(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) t[i] = target[(i + s) % c.size()];
    add(t);
    std::reverse(t.begin(), t.end());
    add(t);
  }
  return out;
}

Relabeling restrict(const Relabeling& phi, const Carrier& c) {
  Relabeling out;
  for (const auto& x : c) out[x] = image(phi, x);
  return out;
}

std::string show(const NonDiagonalPair& x) { return to_string(OperadElement{x}); }
std::string show(const Corolla& x) { return to_string(OperadElement{x}); }
std::string show(const PermPoint& x) { return to_string(OperadElement{x}); }
std::string show(const LinearOrder& x) { return to_string(OperadElement{x}); }

int position(const NonDiagonalPair& x, const Label& a) {
  if (a == x.value->first) return 0;
  if (a == x.value->second) return 1;
  return 2;
}

// Closed forms of the case tables: expected (first, second) of the composite.
std::pair<Label, Label> sequential_expected(int pa, int pb, const NonDiagonalPair& x, const NonDiagonalPair& y,
                                            const NonDiagonalPair& z) {
  const auto &[a1, a2] = *x.value;
  const auto &[b1, b2] = *y.value;
  const auto& c2 = z.value->second;
  if (pa == 0) return {pb == 1 ? c2 : b2, a2};
  if (pa == 1) return {a1, pb == 1 ? c2 : b2};
  return {a1, a2};
}

std::pair<Label, Label> parallel_expected(int pa, int pbar, const NonDiagonalPair& x, const NonDiagonalPair& y,
                                          const NonDiagonalPair& z) {
  const auto &[a1, a2] = *x.value;
  const auto& b2 = y.value->second;
  const auto& c2 = z.value->second;
  Label first = a1, second = a2;
  if (pa == 0) first = b2;
  if (pa == 1) second = b2;
  if (pbar == 0) first = c2;
  if (pbar == 1) second = c2;
  return {first, second};
}

int parallel_case(int pa, int pbar) {
  static const std::map<std::pair<int, int>, int> table{{{0, 1}, 1}, {{0, 2}, 2}, {{1, 0}, 3}, {{1, 2}, 4},
                                                        {{2, 0}, 5}, {{2, 1}, 6}, {{2, 2}, 7}};
  return table.at({pa, pbar});
}

template <class E>
void check_laws_for(LawReport& rep, const OperadCheckOptions& o) {
  constexpr bool pairs = std::is_same_v<E, NonDiagonalPair>;
  std::set<int> seq_cases, par_cases;
  std::int64_t relabelings = 0;
  for (int sa = 1; sa <= o.max_size; ++sa)
    for (int sb = 1; sb <= o.max_size; ++sb)
      for (int sc = 1; sc <= o.max_size; ++sc) {
        if (sa + sb + sc > o.max_total) continue;
        auto A = labels("a", sa), B = labels("b", sb), C = labels("c", sc);
        auto xs = Ops<E>::all(A), ys = Ops<E>::all(B), zs = Ops<E>::all(C);
        for (const auto& x : xs)
          for (const auto& a : A)
            for (const auto& y : ys) {
              auto xy = Ops<E>::compose(x, a, y);
              for (const auto& b : B)
                for (const auto& z : zs) {
                  ++rep.instances;
                  auto lhs = Ops<E>::compose(xy, b, z);
                  auto rhs = Ops<E>::compose(x, a, Ops<E>::compose(y, b, z));
                  if (lhs != rhs) rep.fail("sequential", {show(x), a, show(y), b, show(z)});
                  if constexpr (pairs) {
                    if (x.is_unit() || y.is_unit() || z.is_unit()) continue;
                    int pa = position(x, a), pb = position(y, b);
                    seq_cases.insert(3 * pa + pb + 1);
                    auto expected = sequential_expected(pa, pb, x, y, z);
                    if (lhs.value != expected) rep.fail("case_table", {"sequential " + std::to_string(3 * pa + pb + 1), show(lhs)});
                  }
                }
            }
      }
  for (int sa = 2; sa <= o.max_size + 1; ++sa)
    for (int sb = 1; sb <= o.max_size; ++sb)
      for (int sc = 1; sc <= o.max_size; ++sc) {
        if (sa + sb + sc > o.max_total + 1) continue;
        auto A = labels("a", sa), B = labels("b", sb), C = labels("c", sc);
        auto xs = Ops<E>::all(A), ys = Ops<E>::all(B), zs = Ops<E>::all(C);
        for (const auto& x : xs)
          for (const auto& a : A)
            for (const auto& abar : A) {
              if (a == abar) continue;
              for (const auto& y : ys)
                for (const auto& z : zs) {
                  ++rep.instances;
                  auto lhs = Ops<E>::compose(Ops<E>::compose(x, a, y), abar, z);
                  auto rhs = Ops<E>::compose(Ops<E>::compose(x, abar, z), a, y);
                  if (lhs != rhs) rep.fail("parallel", {show(x), a, show(y), abar, show(z)});
                  if constexpr (pairs) {
                    if (x.is_unit() || y.is_unit() || z.is_unit()) continue;
                    int pa = position(x, a), pbar = position(x, abar);
                    par_cases.insert(parallel_case(pa, pbar));
                    auto expected = parallel_expected(pa, pbar, x, y, z);
                    if (lhs.value != expected)
                      rep.fail("case_table", {"parallel " + std::to_string(parallel_case(pa, pbar)), show(lhs)});
                  }
                }
            }
      }
  for (int sa = 1; sa <= o.max_size; ++sa) {
    auto A = labels("a", sa);
    for (const auto& x : Ops<E>::all(A)) {
      ++rep.instances;
      if (Ops<E>::compose(Ops<E>::unit("u"), "u", x) != x) rep.fail("left_unit", {show(x)});
      for (const auto& a : A) {
        ++rep.instances;
        if (Ops<E>::compose(x, a, Ops<E>::unit("u")) != relabel(x, [&] {
              Relabeling phi;
              for (const auto& l : A) phi[l] = l == a ? Label("u") : l;
              return phi;
            }()))
          rep.fail("right_unit", {show(x), a});
      }
    }
  }
  for (int sa = 1; sa <= o.max_size; ++sa)
    for (int sb = 1; sb <= o.max_size; ++sb) {
      if (sa + sb > o.max_total) continue;
      auto A = labels("a", sa), B = labels("b", sb);
      Carrier both = A;
      both.insert(both.end(), B.begin(), B.end());
      both = make_carrier(both);
      auto phis = bijections(both);
      for (const auto& x : Ops<E>::all(A))
        for (const auto& a : A)
          for (const auto& y : Ops<E>::all(B)) {
            auto xy = Ops<E>::compose(x, a, y);
            for (const auto& phi : phis) {
              ++rep.instances;
              ++relabelings;
              auto lhs = relabel(xy, restrict(phi, Ops<E>::carrier(xy)));
              auto rhs = Ops<E>::compose(relabel(x, restrict(phi, A)), image(phi, a), relabel(y, restrict(phi, B)));
              if (lhs != rhs) rep.fail("relabeling", {show(x), a, show(y)});
            }
          }
    }
  rep.stats["relabelings"] = relabelings;
  if constexpr (pairs) {
    rep.stats["seq_cases"] = static_cast<std::int64_t>(seq_cases.size());
    rep.stats["par_cases"] = static_cast<std::int64_t>(par_cases.size());
  }
  rep.stats["max_size"] = o.max_size;
  rep.stats["max_total"] = o.max_total;
}

template <class E>
void surjection_for(LawReport& rep, const OperadCheckOptions& o) {
  for (int sa = 1; sa <= o.max_size; ++sa) {
    auto A = labels("a", sa);
    std::set<Label> hit;
    for (const auto& x : Ops<E>::all(A)) hit.insert(to_perm(x).value);
    ++rep.instances;
    if (hit.size() != A.size()) rep.fail("surjective", {braces(A)});
    for (int sb = 1; sb <= o.max_size; ++sb) {
      if (sa + sb > o.max_total) continue;
      auto B = labels("b", sb);
      for (const auto& x : Ops<E>::all(A))
        for (const auto& a : A)
          for (const auto& y : Ops<E>::all(B)) {
            ++rep.instances;
            if (to_perm(Ops<E>::compose(x, a, y)) != perm_compose(to_perm(x), a, to_perm(y)))
              rep.fail("morphism", {show(x), a, show(y)});
          }
    }
  }
}

}  // namespace

Carrier make_carrier(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw ValidationError("carrier labels must be distinct");
  return labels;
}

NonDiagonalPair NonDiagonalPair::unit(const Label& x) { return NonDiagonalPair{{x}, std::nullopt}; }

NonDiagonalPair NonDiagonalPair::make(Carrier carrier, const Label& first, const Label& second) {
  carrier = make_carrier(std::move(carrier));
  if (carrier.size() < 2) throw ValidationError("a pair needs at least two labels");
  if (first == second) throw ValidationError("pair entries must differ");
  if (!contains(carrier, first) || !contains(carrier, second)) throw ValidationError("pair entries must lie in the carrier");
  return NonDiagonalPair{std::move(carrier), std::make_pair(first, second)};
}

Corolla Corolla::make(const Label& root, std::vector<std::vector<Label>> branches) {
  Carrier all{root};
  for (auto& b : branches) {
    if (b.empty()) throw ValidationError("corolla branches must be nonempty");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(branches.begin(), branches.end());
  return Corolla{make_carrier(std::move(all)), root, std::move(branches)};
}

PermPoint PermPoint::make(Carrier carrier, const Label& value) {
  carrier = make_carrier(std::move(carrier));
  if (!contains(carrier, value)) throw ValidationError("perm value must lie in the carrier");
  return PermPoint{std::move(carrier), value};
}

LinearOrder LinearOrder::make(std::vector<Label> order) {
  make_carrier(order);
  if (order.empty()) throw ValidationError("an order needs at least one label");
  return LinearOrder{std::move(order)};
}

NonDiagonalPair twist_compose(const NonDiagonalPair& x, const Label& a, const NonDiagonalPair& y) {
  auto carrier = grafted_carrier(x.carrier, a, y.carrier);
  if (x.is_unit()) return y;
  if (y.is_unit()) {
    Relabeling phi;
    for (const auto& l : x.carrier) phi[l] = l == a ? y.carrier.front() : l;
    return relabel(x, phi);
  }
  const auto &[a1, a2] = *x.value;
  const auto& b2 = y.value->second;
  if (a == a1) return NonDiagonalPair{carrier, std::make_pair(b2, a2)};
  if (a == a2) return NonDiagonalPair{carrier, std::make_pair(a1, b2)};
  return NonDiagonalPair{carrier, x.value};
}

Corolla corolla_compose(const Corolla& x, const Label& b, const Corolla& y) {
  grafted_carrier(x.carrier, b, y.carrier);
  if (b == x.root) {
    auto branches = x.branches;
    branches.insert(branches.end(), y.branches.begin(), y.branches.end());
    return Corolla::make(y.root, std::move(branches));
  }
  auto branches = x.branches;
  for (auto& br : branches) {
    auto it = std::find(br.begin(), br.end(), b);
    if (it == br.end()) continue;
    br.erase(it);
    br.insert(br.end(), y.carrier.begin(), y.carrier.end());
  }
  return Corolla::make(x.root, std::move(branches));
}

PermPoint perm_compose(const PermPoint& x, const Label& a, const PermPoint& y) {
  auto carrier = grafted_carrier(x.carrier, a, y.carrier);
  return PermPoint{std::move(carrier), x.value == a ? y.value : x.value};
}

LinearOrder order_compose(const LinearOrder& x, const Label& a, const LinearOrder& y) {
  grafted_carrier(x.carrier(), a, y.carrier());
  std::vector<Label> out;
  for (const auto& l : x.order) {
    if (l == a)
      out.insert(out.end(), y.order.begin(), y.order.end());
    else
      out.push_back(l);
  }
  return LinearOrder{std::move(out)};
}

NonDiagonalPair relabel(const NonDiagonalPair& x, const Relabeling& phi) {
  auto carrier = relabel_carrier(x.carrier, phi);
  if (x.is_unit()) return NonDiagonalPair{carrier, std::nullopt};
  return NonDiagonalPair{carrier, std::make_pair(image(phi, x.value->first), image(phi, x.value->second))};
}

Corolla relabel(const Corolla& x, const Relabeling& phi) {
  relabel_carrier(x.carrier, phi);
  auto branches = x.branches;
  for (auto& b : branches)
    for (auto& l : b) l = image(phi, l);
  return Corolla::make(image(phi, x.root), std::move(branches));
}

PermPoint relabel(const PermPoint& x, const Relabeling& phi) {
  return PermPoint{relabel_carrier(x.carrier, phi), image(phi, x.value)};
}

LinearOrder relabel(const LinearOrder& x, const Relabeling& phi) {
  relabel_carrier(x.carrier(), phi);
  std::vector<Label> out;
  for (const auto& l : x.order) out.push_back(image(phi, l));
  return LinearOrder{std::move(out)};
}

std::vector<NonDiagonalPair> enumerate_pairs(const Carrier& a) {
  auto c = make_carrier(a);
  if (c.empty()) return {};
  if (c.size() == 1) return {NonDiagonalPair::unit(c.front())};
  std::vector<NonDiagonalPair> out;
  for (const auto& x : c)
    for (const auto& y : c)
      if (x != y) out.push_back(NonDiagonalPair{c, std::make_pair(x, y)});
  return out;
}

std::vector<Corolla> enumerate_corollas(const Carrier& a) {
  auto c = make_carrier(a);
  std::vector<Corolla> out;
  for (const auto& root : c) {
    std::vector<Label> rest;
    for (const auto& l : c)
      if (l != root) rest.push_back(l);
    // set partitions by restricted growth strings
    std::vector<int> block(rest.size(), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
      if (i == rest.size()) {
        std::vector<std::vector<Label>> branches(static_cast<std::size_t>(used));
        for (std::size_t k = 0; k < rest.size(); ++k) branches[static_cast<std::size_t>(block[k])].push_back(rest[k]);
        out.push_back(Corolla::make(root, std::move(branches)));
        return;
      }
      for (int b = 0; b <= used; ++b) {
        block[i] = b;
        go(i + 1, std::max(used, b + 1));
      }
    };
    go(0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PermPoint> enumerate_perm(const Carrier& a) {
  auto c = make_carrier(a);
  std::vector<PermPoint> out;
  for (const auto& x : c) out.push_back(PermPoint{c, x});
  return out;
}

std::vector<LinearOrder> enumerate_orders(const Carrier& a) {
  auto c = make_carrier(a);
  std::vector<LinearOrder> out;
  if (c.empty()) return out;
  do out.push_back(LinearOrder{c});
  while (std::next_permutation(c.begin(), c.end()));
  return out;
}

NonDiagonalPair binary_product(const NonDiagonalPair& x, const NonDiagonalPair& y) {
  check_reserved(x.carrier, y.carrier);
  auto mu = NonDiagonalPair::make({kMu1, kMu2}, kMu1, kMu2);
  return twist_compose(twist_compose(mu, kMu1, x), kMu2, y);
}

Corolla binary_product(const Corolla& x, const Corolla& y) {
  check_reserved(x.carrier, y.carrier);
  auto mu = Corolla::make(kMu2, {{kMu1}});
  return corolla_compose(corolla_compose(mu, kMu1, x), kMu2, y);
}

PermPoint binary_product(const PermPoint& x, const PermPoint& y) {
  check_reserved(x.carrier, y.carrier);
  auto mu = PermPoint::make({kMu1, kMu2}, kMu2);
  return perm_compose(perm_compose(mu, kMu1, x), kMu2, y);
}

LinearOrder binary_product(const LinearOrder& x, const LinearOrder& y) {
  check_reserved(x.carrier(), y.carrier());
  auto mu = LinearOrder::make({kMu1, kMu2});
  return order_compose(order_compose(mu, kMu1, x), kMu2, y);
}

OperadElement binary_product(const OperadElement& x, const OperadElement& y) {
  if (x.index() != y.index()) throw TypeError("operands belong to different operads");
  return std::visit(
      [&](const auto& a) -> OperadElement {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(y);
        if constexpr (std::is_same_v<T, TwistedMonomial> || std::is_same_v<T, NatMultiset>)
          return model_product(a, b);
        else
          return binary_product(a, b);
      },
      x);
}

std::string to_string(const OperadElement& x) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, NonDiagonalPair>) {
          if (a.is_unit()) return "1" + braces(a.carrier);
          return "(" + a.value->first + "," + a.value->second + ")" + braces(a.carrier);
        } else if constexpr (std::is_same_v<T, Corolla>) {
          std::string s = "[";
          for (std::size_t i = 0; i < a.branches.size(); ++i) s += (i ? "," : "") + braces(a.branches[i]);
          return s + "]_" + a.root;
        } else if constexpr (std::is_same_v<T, PermPoint>) {
          return a.value + braces(a.carrier);
        } else if constexpr (std::is_same_v<T, LinearOrder>) {
          std::string s = "<";
          for (std::size_t i = 0; i < a.order.size(); ++i) s += (i ? " " : "") + a.order[i];
          return s + ">";
        } else {
          return a.to_string();
        }
      },
      x);
}

std::string to_string(OperadWhich w) {
  switch (w) {
    case OperadWhich::Pairs: return "twist";
    case OperadWhich::Corollas: return "corolla";
    case OperadWhich::Perm: return "perm";
    case OperadWhich::Orders: return "orders";
  }
  return "?";
}

OperadWhich parse_operad_which(const std::string& name) {
  if (name == "twist" || name == "pairs") return OperadWhich::Pairs;
  if (name == "corolla" || name == "corollas") return OperadWhich::Corollas;
  if (name == "perm") return OperadWhich::Perm;
  if (name == "orders") return OperadWhich::Orders;
  throw ValidationError("unknown operad '" + name + "'");
}

OperadCheckOptions default_check_options(OperadWhich w) {
  switch (w) {
    case OperadWhich::Pairs: return {3, 9};
    case OperadWhich::Corollas: return {4, 6};
    case OperadWhich::Perm: return {4, 12};
    case OperadWhich::Orders: return {3, 9};
  }
  return {};
}

LawReport check_operad_laws(OperadWhich which, const OperadCheckOptions& options) {
  if (options.max_size < 1 || options.max_total < 3) throw PreconditionError("size bounds too small");
  auto bound = size_bound(6);
  if (options.max_size > bound || options.max_total > 3 * bound)
    throw ResourceError("operad check sizes exceed the bound " + std::to_string(bound));
  LawReport rep("operad_" + to_string(which));
  switch (which) {
    case OperadWhich::Pairs: check_laws_for<NonDiagonalPair>(rep, options); break;
    case OperadWhich::Corollas: check_laws_for<Corolla>(rep, options); break;
    case OperadWhich::Perm: check_laws_for<PermPoint>(rep, options); break;
    case OperadWhich::Orders: check_laws_for<LinearOrder>(rep, options); break;
  }
  return rep;
}

PermPoint to_perm(const NonDiagonalPair& x) {
  return PermPoint{x.carrier, x.is_unit() ? x.carrier.front() : x.value->second};
}

PermPoint to_perm(const Corolla& x) { return PermPoint{x.carrier, x.root}; }

PermPoint to_perm(const LinearOrder& x) { return PermPoint{x.carrier(), x.order.back()}; }

LawReport perm_surjection(OperadWhich which, const OperadCheckOptions& options) {
  auto bound = size_bound(6);
  if (options.max_size > bound || options.max_total > 3 * bound)
    throw ResourceError("surjection check sizes exceed the bound " + std::to_string(bound));
  LawReport rep("perm_surjection_" + to_string(which));
  switch (which) {
    case OperadWhich::Pairs: surjection_for<NonDiagonalPair>(rep, options); break;
    case OperadWhich::Corollas: surjection_for<Corolla>(rep, options); break;
    case OperadWhich::Orders: surjection_for<LinearOrder>(rep, options); break;
    case OperadWhich::Perm: throw PreconditionError("the map from perm to itself is the identity");
  }
  return rep;
}

TwistedMonomial twisted_image(const NonDiagonalPair& x, const std::map<Label, std::string>& decoration) {
  if (x.is_unit()) throw PreconditionError("the unit has no image in the twisted semigroup");
  auto dec = [&](const Label& l) {
    auto it = decoration.find(l);
    if (it == decoration.end()) throw ValidationError("no decoration for '" + l + "'");
    return it->second;
  };
  std::map<std::string, BigNat> exponent;
  for (const auto& l : x.carrier)
    if (l != x.value->first && l != x.value->second) exponent[dec(l)] += 1;
  return TwistedMonomial(dec(x.value->first), dec(x.value->second), exponent);
}

NatMultiset multiset_image(const Corolla& x) {
  std::vector<BigNat> sizes;
  for (const auto& b : x.branches) sizes.emplace_back(b.size());
  return NatMultiset(sizes);
}

LawReport psi_phi_roundtrip(int max_arity) {
  if (max_arity > 5) throw PreconditionError("arity bound is 5");
  LawReport rep("psi_phi");
  auto p = preset("twist");
  for (int n = 2; n <= max_arity; ++n) {
    auto q = quotient_classes(p, n);
    Carrier A;
    for (int i = 1; i <= n; ++i) A.push_back(std::to_string(i));
    A = make_carrier(A);

    std::function<NonDiagonalPair(const std::vector<TermNode>&, std::size_t&)> phi =
        [&](const std::vector<TermNode>& nodes, std::size_t& i) -> NonDiagonalPair {
      const auto& node = nodes[i++];
      if (node.gen < 0) return NonDiagonalPair::unit(std::to_string(node.label));
      auto l = phi(nodes, i);
      auto r = phi(nodes, i);
      return binary_product(l, r);
    };
    auto Phi = [&](const OperadTerm& t) {
      std::size_t i = 0;
      return phi(t.nodes, i);
    };
    // Ψ(x, y) = 1 ⊳ Ψ(x′, y) with x′ chosen by `pick` among the remaining labels.
    std::function<OperadTerm(const NonDiagonalPair&, std::size_t)> psi = [&](const NonDiagonalPair& pr,
                                                                              std::size_t pick) -> OperadTerm {
      const auto &[x, y] = *pr.value;
      if (pr.carrier.size() == 2) return OperadTerm::node(0, OperadTerm::leaf(std::stoi(x)), OperadTerm::leaf(std::stoi(y)));
      std::vector<Label> others;
      for (const auto& l : pr.carrier)
        if (l != x && l != y) others.push_back(l);
      Carrier rest;
      for (const auto& l : pr.carrier)
        if (l != x) rest.push_back(l);
      auto sub = NonDiagonalPair{make_carrier(rest), std::make_pair(others[pick % others.size()], y)};
      return OperadTerm::node(0, OperadTerm::leaf(std::stoi(x)), psi(sub, pick));
    };
    std::map<OperadTerm, int> index;
    for (std::size_t i = 0; i < q.terms.size(); ++i) index.emplace(q.terms[i], q.class_of[i]);

    ++rep.instances;
    if (q.count() != static_cast<std::size_t>(n * (n - 1)))
      rep.fail("class_count", {std::to_string(n), std::to_string(q.count())});
    std::map<NonDiagonalPair, int> image_of;
    for (std::size_t c = 0; c < q.count(); ++c) {
      auto value = Phi(q.representative(c));
      for (int m : q.classes[c]) {
        ++rep.instances;
        if (Phi(q.terms[static_cast<std::size_t>(m)]) != value)
          rep.fail("phi_constant", {serialize(q.terms[static_cast<std::size_t>(m)], p.generators)});
      }
      ++rep.instances;
      if (!image_of.emplace(value, static_cast<int>(c)).second) rep.fail("phi_injective", {show(value)});
      auto back = psi(value, 0);
      ++rep.instances;
      if (index.at(back) != static_cast<int>(c)) rep.fail("psi_phi", {serialize(q.representative(c), p.generators)});
    }
    for (const auto& pr : enumerate_pairs(A)) {
      ++rep.instances;
      if (!image_of.count(pr)) rep.fail("phi_surjective", {show(pr)});
      auto t = psi(pr, 0);
      ++rep.instances;
      if (Phi(t) != pr) rep.fail("phi_psi", {show(pr)});
      for (std::size_t pick = 1; pick + 2 < static_cast<std::size_t>(n); ++pick) {
        ++rep.instances;
        if (index.at(psi(pr, pick)) != index.at(t)) rep.fail("psi_choice", {show(pr), std::to_string(pick)});
      }
    }
    rep.stats["classes_" + std::to_string(n)] = static_cast<std::int64_t>(q.count());
  }
  return rep;
}

}  // namespace famop
