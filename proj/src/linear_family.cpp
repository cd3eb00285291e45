#include "famop/linear_family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <utility>

#include "famop/errors.hpp"

namespace famop {

namespace {

std::size_t cube(int d) { return static_cast<std::size_t>(d) * static_cast<std::size_t>(d) * static_cast<std::size_t>(d); }

// Parameter expression: variable a (0 = α, 1 = β, 2 = γ), optionally combined with b by op.
struct PExpr {
  int a = 0;
  char op = 0;
  int b = 0;
};

// right: v0 ∘outer (v1 ∘inner v2); otherwise (v0 ∘inner v1) ∘outer v2.
struct Mono {
  bool right = true;
  std::string outer, inner;
  std::array<int, 3> v{0, 1, 2};
  PExpr o1, o2, i1, i2;
};

struct Term {
  int sign = 1;
  Mono m;
};

struct LinLaw {
  std::string id;
  std::vector<Term> terms;
};

constexpr int kA = 0, kB = 1, kC = 2;

PExpr var(int a) { return PExpr{a, 0, 0}; }
PExpr op(int a, char o, int b) { return PExpr{a, o, b}; }

Term right(int sign, std::array<int, 3> v, const std::string& outer, PExpr o1, PExpr o2, const std::string& inner,
           PExpr i1, PExpr i2) {
  return Term{sign, Mono{true, outer, inner, v, o1, o2, i1, i2}};
}

Term left(int sign, std::array<int, 3> v, const std::string& outer, PExpr o1, PExpr o2, const std::string& inner,
          PExpr i1, PExpr i2) {
  return Term{sign, Mono{false, outer, inner, v, o1, o2, i1, i2}};
}

const std::array<int, 3> xyz{0, 1, 2};
const std::array<int, 3> yxz{1, 0, 2};

std::vector<LinLaw> laws(FamilyKind k) {
  const std::string P = "prec", S = "succ", R = "rhd";
  switch (k) {
    case FamilyKind::Dendriform2:
      return {
          {"prec_prec",
           {left(1, xyz, P, op(kA, '<', kB), var(kC), P, var(kA), var(kB)),
            right(-1, xyz, P, var(kA), op(kB, '<', kC), P, var(kB), var(kC)),
            right(-1, xyz, P, var(kA), op(kB, '>', kC), S, var(kB), var(kC))}},
          {"succ_prec",
           {left(1, xyz, P, op(kA, '>', kB), var(kC), S, var(kA), var(kB)),
            right(-1, xyz, S, var(kA), op(kB, '<', kC), P, var(kB), var(kC))}},
          {"succ_succ",
           {right(1, xyz, S, var(kA), op(kB, '>', kC), S, var(kB), var(kC)),
            left(-1, xyz, S, op(kA, '>', kB), var(kC), S, var(kA), var(kB)),
            left(-1, xyz, S, op(kA, '<', kB), var(kC), P, var(kA), var(kB))}},
      };
    case FamilyKind::Duplicial2:
      return {
          {"prec_prec",
           {left(1, xyz, P, op(kA, '<', kB), var(kC), P, var(kA), var(kB)),
            right(-1, xyz, P, var(kA), op(kB, '<', kC), P, var(kB), var(kC))}},
          {"succ_prec",
           {left(1, xyz, P, op(kA, '>', kB), var(kC), S, var(kA), var(kB)),
            right(-1, xyz, S, var(kA), op(kB, '<', kC), P, var(kB), var(kC))}},
          {"succ_succ",
           {right(1, xyz, S, var(kA), op(kB, '>', kC), S, var(kB), var(kC)),
            left(-1, xyz, S, op(kA, '>', kB), var(kC), S, var(kA), var(kB))}},
      };
    case FamilyKind::PreLie2:
      return {{"prelie",
               {right(1, xyz, R, var(kA), op(kB, '*', kC), R, var(kB), var(kC)),
                left(-1, xyz, R, op(kA, '*', kB), var(kC), R, var(kA), var(kB)),
                right(-1, yxz, R, var(kB), op(kA, '*', kC), R, var(kA), var(kC)),
                left(1, yxz, R, op(kB, '*', kA), var(kC), R, var(kB), var(kA))}}};
    case FamilyKind::AssocFamily:
      return {{"associative",
               {right(1, xyz, R, var(kA), op(kB, '*', kC), R, var(kB), var(kC)),
                left(-1, xyz, R, op(kA, '*', kB), var(kC), R, var(kA), var(kB))}}};
    case FamilyKind::TwistedFamily:
      return {{"twisted",
               {right(1, xyz, R, var(kA), op(kB, '*', kC), R, var(kB), var(kC)),
                left(1, yxz, R, op(kB, '*', kA), var(kC), R, var(kB), var(kA))}}};
    case FamilyKind::NapNapFamily:
      return {{"nap",
               {right(1, xyz, R, var(kA), op(kB, '*', kC), R, var(kB), var(kC)),
                right(-1, yxz, R, var(kB), op(kA, '*', kC), R, var(kA), var(kC))}},
              {"nap_prime",
               {left(1, xyz, R, op(kA, '*', kB), var(kC), R, var(kA), var(kB)),
                left(-1, yxz, R, op(kB, '*', kA), var(kC), R, var(kB), var(kA))}}};
  }
  return {};
}

FamilyKind family_of(ClassicKind k) {
  switch (k) {
    case ClassicKind::Dendriform: return FamilyKind::Dendriform2;
    case ClassicKind::Duplicial: return FamilyKind::Duplicial2;
    case ClassicKind::PreLie: return FamilyKind::PreLie2;
    case ClassicKind::Associative: return FamilyKind::AssocFamily;
  }
  return FamilyKind::AssocFamily;
}

// Parameter tables by operation letter.
struct Params {
  int size = 1;
  std::map<char, Table> tables;

  int eval(const PExpr& e, const std::array<int, 3>& abc) const {
    int a = abc[static_cast<std::size_t>(e.a)];
    if (e.op == 0) return a;
    return tables.at(e.op).at(a, abc[static_cast<std::size_t>(e.b)]);
  }
};

Params params_of(const OmegaStructure& o) { return Params{o.size, {{'<', o.left_arrow}, {'>', o.right_arrow}}}; }
Params params_of(const Magma& m) { return Params{m.size, {{'*', m.table}}}; }
Params trivial_params() {
  auto t = Table::constant(1, 0);
  return Params{1, {{'<', t}, {'>', t}, {'*', t}}};
}

using SparseRow = std::vector<std::pair<int, Rational>>;

struct SparseOps {
  int d = 0;
  // rows[op][param pair][i * d + j]
  std::map<std::string, std::vector<std::vector<SparseRow>>> rows;

  explicit SparseOps(const FamilyBilinear& a) : d(a.dim) {
    for (const auto& [name, tensors] : a.ops) {
      auto& r = rows[name];
      r.resize(tensors.size());
      for (std::size_t p = 0; p < tensors.size(); ++p) {
        r[p].resize(static_cast<std::size_t>(d * d));
        for (int ij = 0; ij < d * d; ++ij)
          for (int k = 0; k < d; ++k) {
            const auto& c = tensors[p][static_cast<std::size_t>(ij * d + k)];
            if (c != 0) r[p][static_cast<std::size_t>(ij)].emplace_back(k, c);
          }
      }
    }
  }

  const SparseRow& row(const std::string& op, int param, int i, int j) const {
    return rows.at(op)[static_cast<std::size_t>(param)][static_cast<std::size_t>(i * d + j)];
  }
};

struct Accumulator {
  std::vector<Rational> values;
  std::vector<char> touched_flag;
  std::vector<int> touched;

  explicit Accumulator(int d) : values(static_cast<std::size_t>(d)), touched_flag(static_cast<std::size_t>(d), 0) {}

  void add(int k, const Rational& c) {
    auto ku = static_cast<std::size_t>(k);
    if (!touched_flag[ku]) {
      touched_flag[ku] = 1;
      touched.push_back(k);
    }
    values[ku] += c;
  }

  bool is_zero_and_reset() {
    bool zero = true;
    for (int k : touched) {
      auto ku = static_cast<std::size_t>(k);
      if (values[ku] != 0) zero = false;
      values[ku] = 0;
      touched_flag[ku] = 0;
    }
    touched.clear();
    return zero;
  }
};

std::vector<std::string> required_ops(const std::vector<LinLaw>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls)
    for (const auto& t : l.terms)
      for (const auto* n : {&t.m.outer, &t.m.inner})
        if (std::find(out.begin(), out.end(), *n) == out.end()) out.push_back(*n);
  return out;
}

LawReport run_laws(const FamilyBilinear& a, const Params& prm, const std::vector<LinLaw>& ls, const std::string& kind,
                   const FamilyCheckOptions& options) {
  a.validate();
  if (a.params != prm.size)
    throw PreconditionError("algebra has " + std::to_string(a.params) + " parameters but the parameter set has " +
                            std::to_string(prm.size));
  for (const auto& name : required_ops(ls))
    if (!a.ops.count(name)) throw PreconditionError("missing operation '" + name + "'");
  const int d = a.dim, w = prm.size;
  std::uint64_t total = static_cast<std::uint64_t>(cube(d)) * static_cast<std::uint64_t>(cube(w)) * ls.size();
  if (total > options.max_instances)
    throw ResourceError("law check needs " + std::to_string(total) + " instances, above the bound " +
                        std::to_string(options.max_instances));
  LawReport rep(kind);
  SparseOps sp(a);
  Accumulator acc(d);
  for (int al = 0; al < w; ++al)
    for (int be = 0; be < w; ++be)
      for (int ga = 0; ga < w; ++ga) {
        std::array<int, 3> abc{al, be, ga};
        for (const auto& law : ls) {
          struct Resolved {
            int sign;
            bool right;
            std::string outer, inner;
            std::array<int, 3> v;
            int po, pi;
          };
          std::vector<Resolved> rs;
          for (const auto& t : law.terms)
            rs.push_back({t.sign, t.m.right, t.m.outer, t.m.inner, t.m.v,
                          prm.eval(t.m.o1, abc) * w + prm.eval(t.m.o2, abc),
                          prm.eval(t.m.i1, abc) * w + prm.eval(t.m.i2, abc)});
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              for (int k = 0; k < d; ++k) {
                std::array<int, 3> ijk{i, j, k};
                ++rep.instances;
                for (const auto& r : rs) {
                  int u = ijk[static_cast<std::size_t>(r.v[0])], v = ijk[static_cast<std::size_t>(r.v[1])],
                      x = ijk[static_cast<std::size_t>(r.v[2])];
                  if (r.right) {
                    for (const auto& [m, c] : sp.row(r.inner, r.pi, v, x))
                      for (const auto& [kk, c2] : sp.row(r.outer, r.po, u, m)) acc.add(kk, r.sign > 0 ? Rational(c * c2) : Rational(-(c * c2)));
                  } else {
                    for (const auto& [m, c] : sp.row(r.inner, r.pi, u, v))
                      for (const auto& [kk, c2] : sp.row(r.outer, r.po, m, x)) acc.add(kk, r.sign > 0 ? Rational(c * c2) : Rational(-(c * c2)));
                  }
                }
                if (!acc.is_zero_and_reset()) {
                  rep.fail(law.id, {"x=e" + std::to_string(i), "y=e" + std::to_string(j), "z=e" + std::to_string(k),
                                    "alpha=" + std::to_string(al), "beta=" + std::to_string(be),
                                    "gamma=" + std::to_string(ga)});
                  if (options.stop_at_first) return rep;
                }
              }
        }
      }
  return rep;
}

template <class O>
void require_law(const O& o, FamilyKind kind, const FamilyCheckOptions& options) {
  if (!options.require_parameter_laws) return;
  auto r = check_laws(o, parameter_law(kind), true);
  if (!r.passed())
    throw PreconditionError("parameter set is not " + to_string(parameter_law(kind)) + ": identity " +
                            r.witnesses.front().law + " fails");
}

std::uint64_t next_value(std::mt19937_64& rng) { return rng(); }

int random_nonzero(std::mt19937_64& rng) {
  int v = static_cast<int>(next_value(rng) % 9) - 4;
  return v == 0 ? 5 : v;
}

// Null space of a rational matrix by reduced row echelon form; returns a basis.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> m, int cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][static_cast<std::size_t>(c)];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][static_cast<std::size_t>(c)] == 0) continue;
      Rational f = m[q][static_cast<std::size_t>(c)];
      for (int cc = 0; cc < cols; ++cc) m[q][static_cast<std::size_t>(cc)] -= f * m[r][static_cast<std::size_t>(cc)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t row = 0; row < pivot_col.size(); ++row)
      v[static_cast<std::size_t>(pivot_col[row])] = -m[row][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

// (right, outer op, outer params, inner op, inner params, three generators)
using MonoKey = std::array<int, 8>;

FamilyBilinear generic_impl(FamilyKind kind, const Params& prm, const GenericInstanceOptions& options) {
  const int g = options.generators, w = prm.size;
  if (g < 1) throw PreconditionError("at least one generator is needed");
  if (options.multilinear && g < 3) throw PreconditionError("multilinear mode needs at least three generators");
  auto names = operation_names(kind);
  const int nops = static_cast<int>(names.size());
  auto op_index = [&](const std::string& n) {
    return static_cast<int>(std::find(names.begin(), names.end(), n) - names.begin());
  };

  std::map<std::array<int, 4>, int> deg2;  // (op, param pair, left gen, right gen) -> basis index
  int next = g;
  for (int o = 0; o < nops; ++o)
    for (int p = 0; p < w * w; ++p)
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
          if (options.multilinear && i == j) continue;
          deg2[{o, p, i, j}] = next++;
        }
  const int dim = next + 1, top = next;
  if (dim > options.max_dim)
    throw ResourceError("generic instance needs dimension " + std::to_string(dim) + ", above the bound " +
                        std::to_string(options.max_dim));

  std::map<MonoKey, int> column;
  std::vector<std::map<int, Rational>> relations;
  auto col = [&](const MonoKey& k) {
    auto it = column.find(k);
    if (it != column.end()) return it->second;
    int c = static_cast<int>(column.size());
    column.emplace(k, c);
    return c;
  };
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c) {
        if (options.multilinear && (a == b || b == c || a == c)) continue;
        std::array<int, 3> gens{a, b, c};
        for (int al = 0; al < w; ++al)
          for (int be = 0; be < w; ++be)
            for (int ga = 0; ga < w; ++ga) {
              std::array<int, 3> abc{al, be, ga};
              for (const auto& law : laws(kind)) {
                std::map<int, Rational> row;
                for (const auto& t : law.terms) {
                  MonoKey k{t.m.right ? 1 : 0,
                            op_index(t.m.outer),
                            prm.eval(t.m.o1, abc) * w + prm.eval(t.m.o2, abc),
                            op_index(t.m.inner),
                            prm.eval(t.m.i1, abc) * w + prm.eval(t.m.i2, abc),
                            gens[static_cast<std::size_t>(t.m.v[0])],
                            gens[static_cast<std::size_t>(t.m.v[1])],
                            gens[static_cast<std::size_t>(t.m.v[2])]};
                  row[col(k)] += t.sign;
                }
                relations.push_back(std::move(row));
              }
            }
      }
  const int cols = static_cast<int>(column.size());
  std::vector<std::vector<Rational>> dense;
  for (const auto& row : relations) {
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    bool any = false;
    for (const auto& [c, x] : row) {
      v[static_cast<std::size_t>(c)] = x;
      if (x != 0) any = true;
    }
    if (any) dense.push_back(std::move(v));
  }
  std::mt19937_64 rng(options.seed);
  std::vector<Rational> lambda(static_cast<std::size_t>(cols));
  for (const auto& v : null_space(std::move(dense), cols)) {
    Rational r = random_nonzero(rng);
    for (int c = 0; c < cols; ++c) lambda[static_cast<std::size_t>(c)] += r * v[static_cast<std::size_t>(c)];
  }
  auto value = [&](const MonoKey& k) -> Rational {
    auto it = column.find(k);
    if (it != column.end()) return lambda[static_cast<std::size_t>(it->second)];
    return Rational(random_nonzero(rng));
  };

  FamilyBilinear out(dim, w, names);
  for (int o = 0; o < nops; ++o)
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < w; ++b) {
        const int p = a * w + b;
        auto& t = out.ops[names[static_cast<std::size_t>(o)]][static_cast<std::size_t>(p)];
        auto set = [&](int i, int j, int k, const Rational& c) {
          t[static_cast<std::size_t>((i * dim + j) * dim + k)] = c;
        };
        for (const auto& [key, idx] : deg2)
          if (key[0] == o && key[1] == p) set(key[2], key[3], idx, 1);
        for (const auto& [key, idx] : deg2)
          for (int u = 0; u < g; ++u) {
            if (options.multilinear && (u == key[2] || u == key[3])) continue;
            set(u, idx, top, value({1, o, p, key[0], key[1], u, key[2], key[3]}));
            set(idx, u, top, value({0, o, p, key[0], key[1], key[2], key[3], u}));
          }
      }
  return out;
}

GradedBasisAlgebra graded_impl(const FamilyBilinear& a, const std::map<std::string, Table>& color_tables, int w,
                               ClassicKind kind) {
  a.validate();
  if (a.params != w)
    throw PreconditionError("algebra has " + std::to_string(a.params) + " parameters but the parameter set has " +
                            std::to_string(w));
  auto names = operation_names(kind);
  for (const auto& n : names)
    if (!a.ops.count(n)) throw PreconditionError("missing operation '" + n + "'");
  GradedBasisAlgebra g;
  g.base_dim = a.dim;
  g.colors = w;
  g.algebra = FamilyBilinear(a.dim * w, 1, names);
  const int d = a.dim;
  for (const auto& n : names) {
    const Table& t = color_tables.at(n);
    for (int al = 0; al < w; ++al)
      for (int be = 0; be < w; ++be)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
              const auto& c = a.at(n, al, be, i, j, k);
              if (c != 0) g.algebra.at(n, 0, 0, g.index(i, al), g.index(j, be), g.index(k, t.at(al, be))) = c;
            }
  }
  return g;
}

}  // namespace

FamilyBilinear::FamilyBilinear(int d, int w, const std::vector<std::string>& names) : dim(d), params(w) {
  if (d < 0 || w < 1) throw ValidationError("dimension must be non-negative and parameters positive");
  for (const auto& n : names)
    ops[n] = std::vector<std::vector<Rational>>(static_cast<std::size_t>(w * w), std::vector<Rational>(cube(d)));
}

Rational& FamilyBilinear::at(const std::string& op, int a, int b, int i, int j, int k) {
  return ops.at(op)[static_cast<std::size_t>(a * params + b)][static_cast<std::size_t>((i * dim + j) * dim + k)];
}

const Rational& FamilyBilinear::at(const std::string& op, int a, int b, int i, int j, int k) const {
  return ops.at(op)[static_cast<std::size_t>(a * params + b)][static_cast<std::size_t>((i * dim + j) * dim + k)];
}

std::vector<Rational> FamilyBilinear::product(const std::string& op, int a, int b, const std::vector<Rational>& x,
                                              const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw PreconditionError("vector length differs from the dimension");
  std::vector<Rational> out(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<std::size_t>(j)] == 0) continue;
      Rational s = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim; ++k) {
        const auto& c = at(op, a, b, i, j, k);
        if (c != 0) out[static_cast<std::size_t>(k)] += s * c;
      }
    }
  }
  return out;
}

void FamilyBilinear::validate() const {
  if (dim < 0 || params < 1) throw ValidationError("dimension must be non-negative and parameters positive");
  for (const auto& [name, tensors] : ops) {
    if (tensors.size() != static_cast<std::size_t>(params * params))
      throw ValidationError("operation '" + name + "' has the wrong number of parameter pairs");
    for (const auto& t : tensors)
      if (t.size() != cube(dim)) throw ValidationError("operation '" + name + "' has a tensor of the wrong size");
  }
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Dendriform2: return "dendriform2";
    case FamilyKind::Duplicial2: return "duplicial2";
    case FamilyKind::PreLie2: return "prelie2";
    case FamilyKind::AssocFamily: return "assoc_family";
    case FamilyKind::TwistedFamily: return "twisted_family";
    case FamilyKind::NapNapFamily: return "napnap_family";
  }
  return "?";
}

std::string to_string(ClassicKind k) {
  switch (k) {
    case ClassicKind::Dendriform: return "dendriform";
    case ClassicKind::Duplicial: return "duplicial";
    case ClassicKind::PreLie: return "prelie";
    case ClassicKind::Associative: return "associative";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto k : {FamilyKind::Dendriform2, FamilyKind::Duplicial2, FamilyKind::PreLie2, FamilyKind::AssocFamily,
                 FamilyKind::TwistedFamily, FamilyKind::NapNapFamily})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown family kind '" + name + "'");
}

ClassicKind parse_classic_kind(const std::string& name) {
  for (auto k : {ClassicKind::Dendriform, ClassicKind::Duplicial, ClassicKind::PreLie, ClassicKind::Associative})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown algebra kind '" + name + "'");
}

std::vector<std::string> operation_names(FamilyKind k) {
  if (k == FamilyKind::Dendriform2 || k == FamilyKind::Duplicial2) return {"prec", "succ"};
  return {"rhd"};
}

std::vector<std::string> operation_names(ClassicKind k) { return operation_names(family_of(k)); }

LawKind parameter_law(FamilyKind k) {
  switch (k) {
    case FamilyKind::Dendriform2: return LawKind::Diassociative;
    case FamilyKind::Duplicial2: return LawKind::Duplicial;
    case FamilyKind::PreLie2: return LawKind::Perm;
    case FamilyKind::AssocFamily: return LawKind::Associative;
    case FamilyKind::TwistedFamily: return LawKind::TwistAssociative;
    case FamilyKind::NapNapFamily: return LawKind::NapNapPrime;
  }
  return LawKind::Associative;
}

bool uses_magma(FamilyKind k) { return k != FamilyKind::Dendriform2 && k != FamilyKind::Duplicial2; }

LawReport check_family_laws(const FamilyBilinear& a, const OmegaStructure& o, FamilyKind kind,
                            const FamilyCheckOptions& options) {
  if (uses_magma(kind)) throw PreconditionError(to_string(kind) + " is indexed by a magma");
  require_law(o, kind, options);
  return run_laws(a, params_of(o), laws(kind), to_string(kind), options);
}

LawReport check_family_laws(const FamilyBilinear& a, const Magma& m, FamilyKind kind, const FamilyCheckOptions& options) {
  if (!uses_magma(kind)) throw PreconditionError(to_string(kind) + " is indexed by a pair of products");
  require_law(m, kind, options);
  return run_laws(a, params_of(m), laws(kind), to_string(kind), options);
}

GradedBasisAlgebra make_graded(const FamilyBilinear& a, const OmegaStructure& o, ClassicKind kind) {
  if (kind != ClassicKind::Dendriform && kind != ClassicKind::Duplicial)
    throw PreconditionError(to_string(kind) + " grading needs a magma");
  return graded_impl(a, {{"prec", o.left_arrow}, {"succ", o.right_arrow}}, o.size, kind);
}

GradedBasisAlgebra make_graded(const FamilyBilinear& a, const Magma& m, ClassicKind kind) {
  if (kind != ClassicKind::PreLie && kind != ClassicKind::Associative)
    throw PreconditionError(to_string(kind) + " grading needs a pair of products");
  return graded_impl(a, {{"rhd", m.table}}, m.size, kind);
}

LawReport check_classic_laws(const FamilyBilinear& b, ClassicKind kind, const FamilyCheckOptions& options) {
  if (b.params != 1) throw PreconditionError("classical laws need an algebra without parameters");
  return run_laws(b, trivial_params(), laws(family_of(kind)), to_string(kind), options);
}

LawReport check_classic_laws(const GradedBasisAlgebra& b, ClassicKind kind, const FamilyCheckOptions& options) {
  return check_classic_laws(b.algebra, kind, options);
}

bool color_support_holds(const GradedBasisAlgebra& b, const std::string& op, const Table& colors) {
  const int d = b.base_dim, w = b.colors;
  for (int i = 0; i < d; ++i)
    for (int al = 0; al < w; ++al)
      for (int j = 0; j < d; ++j)
        for (int be = 0; be < w; ++be)
          for (int k = 0; k < d; ++k)
            for (int ga = 0; ga < w; ++ga)
              if (ga != colors.at(al, be) && b.algebra.at(op, 0, 0, b.index(i, al), b.index(j, be), b.index(k, ga)) != 0)
                return false;
  return true;
}

FamilyBilinear generic_instance(FamilyKind kind, const OmegaStructure& o, const GenericInstanceOptions& options) {
  if (uses_magma(kind)) throw PreconditionError(to_string(kind) + " is indexed by a magma");
  return generic_impl(kind, params_of(o), options);
}

FamilyBilinear generic_instance(FamilyKind kind, const Magma& m, const GenericInstanceOptions& options) {
  if (!uses_magma(kind)) throw PreconditionError(to_string(kind) + " is indexed by a pair of products");
  return generic_impl(kind, params_of(m), options);
}

FamilyBilinear random_family(int dim, int params, const std::vector<std::string>& names, std::uint64_t seed,
                             int density) {
  FamilyBilinear a(dim, params, names);
  std::mt19937_64 rng(seed);
  for (auto& [name, tensors] : a.ops)
    for (auto& t : tensors)
      for (auto& c : t)
        if (static_cast<int>(rng() % 100) < density) {
          int p = static_cast<int>(rng() % 5) - 2;
          int q = static_cast<int>(rng() % 3) + 1;
          c = Rational(p, q);
        }
  return a;
}

std::string to_string(const Rational& q) {
  auto n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto integer = [&](const std::string& part, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t k = i; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) throw ParseError("unexpected character", offset + k);
    return BigNat(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(integer(s, 0, true));
  BigNat num = integer(s.substr(0, slash), 0, true);
  BigNat den = integer(s.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

}  // namespace famop
