#pragma once

// Independent reference computations used by the test suites. None of these call into the library.

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace oracle {

using BinOp = std::function<int(int, int)>;

inline int left_proj(int a, int) { return a; }
inline int right_proj(int, int b) { return b; }

// Expands c·w^k·(inner, highest degree first) into an ascending coefficient string "[c0,...]".
inline std::string expand(long long c, int k, std::vector<long long> inner_desc) {
  std::reverse(inner_desc.begin(), inner_desc.end());
  std::vector<long long> coeffs(static_cast<std::size_t>(k), 0);
  for (long long v : inner_desc) coeffs.push_back(c * v);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
  return s + "]";
}

// The eight displayed dimension polynomials, transcribed in factored form.
inline std::string printed_r(int n) {
  switch (n) {
    case 1: return expand(1, 0, {1});
    case 2: return expand(2, 2, {1});
    case 3: return expand(1, 3, {8, -3});
    case 4: return expand(2, 4, {20, -15, 2});
    case 5: return expand(1, 5, {224, -252, 75, -5});
    case 6: return expand(2, 6, {672, -1008, 476, -77, 3});
    case 7: return expand(1, 7, {8448, -15840, 10320, -2772, 280, -7});
    case 8: return expand(2, 8, {27456, -61776, 51480, -19635, 3420, -234, 4});
    default: return "";
  }
}

struct OpTree {
  bool prec = true;
  int a = 0, b = 0;
  std::shared_ptr<OpTree> left, right;  // null = leaf
};

inline std::vector<std::shared_ptr<OpTree>> all_op_trees(int leaves, int w) {
  if (leaves == 1) return {nullptr};
  std::vector<std::shared_ptr<OpTree>> out;
  for (int i = 1; i < leaves; ++i)
    for (auto& l : all_op_trees(i, w))
      for (auto& r : all_op_trees(leaves - i, w))
        for (int p = 0; p < 2; ++p)
          for (int a = 0; a < w; ++a)
            for (int b = 0; b < w; ++b) out.push_back(std::make_shared<OpTree>(OpTree{p == 0, a, b, l, r}));
  return out;
}

inline bool avoids(const std::shared_ptr<OpTree>& t, const BinOp& larrow, const BinOp& rarrow) {
  if (!t) return true;
  if (t->left) {
    const auto& c = *t->left;
    bool bad = false;
    if (t->prec && c.prec && t->a == larrow(c.a, c.b)) bad = true;
    if (t->prec && !c.prec && t->a == rarrow(c.a, c.b)) bad = true;
    if (!t->prec && !c.prec && t->a == rarrow(c.a, c.b)) bad = true;
    if (bad) return false;
  }
  return avoids(t->left, larrow, rarrow) && avoids(t->right, larrow, rarrow);
}

inline long long count_avoiding_trees(int leaves, int w, const BinOp& larrow, const BinOp& rarrow) {
  long long n = 0;
  for (auto& t : all_op_trees(leaves, w))
    if (avoids(t, larrow, rarrow)) ++n;
  return n;
}

}  // namespace oracle

namespace oracle {

// Recursive typed tree; a null pointer is the leaf. Edge types are (first, second); a Single
// type uses second = -1.
struct Tree {
  std::string dec;
  int la = 0, lb = -1, ra = 0, rb = -1;
  std::shared_ptr<Tree> left, right;
};
using TreeP = std::shared_ptr<Tree>;

inline std::string edge_text(bool present, int a, int b) {
  if (!present) return ".";
  return b < 0 ? std::to_string(a) : std::to_string(a) + ":" + std::to_string(b);
}

inline std::string text(const TreeP& t) {
  if (!t) return "_";
  return "(" + t->dec + " " + edge_text(t->left != nullptr, t->la, t->lb) + " " +
         edge_text(t->right != nullptr, t->ra, t->rb) + " " + text(t->left) + " " + text(t->right) + ")";
}

inline TreeP copy_map(const TreeP& t, const std::function<void(int&, int&)>& f) {
  if (!t) return nullptr;
  auto n = std::make_shared<Tree>(*t);
  if (n->left) f(n->la, n->lb);
  if (n->right) f(n->ra, n->rb);
  n->left = copy_map(t->left, f);
  n->right = copy_map(t->right, f);
  return n;
}

inline TreeP graft_rightmost(const TreeP& s, const TreeP& t, int a, int b) {
  auto n = std::make_shared<Tree>(*s);
  if (!s->right) {
    n->right = t;
    n->ra = a;
    n->rb = b;
  } else {
    n->right = graft_rightmost(s->right, t, a, b);
  }
  return n;
}

inline TreeP graft_leftmost(const TreeP& t, const TreeP& s, int a, int b) {
  auto n = std::make_shared<Tree>(*t);
  if (!t->left) {
    n->left = s;
    n->la = a;
    n->lb = b;
  } else {
    n->left = graft_leftmost(t->left, s, a, b);
  }
  return n;
}

// Two-parameter products following the worked example: the host keeps its first components.
inline TreeP prec2(const TreeP& s, const TreeP& t, int a, int b, const BinOp& larrow) {
  auto s2 = copy_map(s, [&](int&, int& tau) { tau = larrow(tau, b); });
  auto t2 = copy_map(t, [&](int& om, int&) { om = larrow(a, om); });
  return graft_rightmost(s2, t2, a, b);
}

inline TreeP succ2(const TreeP& s, const TreeP& t, int a, int b, const BinOp& rarrow) {
  auto s2 = copy_map(s, [&](int&, int& tau) { tau = rarrow(tau, b); });
  auto t2 = copy_map(t, [&](int& om, int&) { om = rarrow(a, om); });
  return graft_leftmost(t2, s2, a, b);
}

// One-parameter products by the defining recursion, with 1←ω = 1◁ω = ω▷1 = ω→1 = ω.
struct Edus {
  BinOp larrow, rarrow, ltri, rtri;
};

inline TreeP prec1(const TreeP& t, const TreeP& u, int w, const Edus& e) {
  if (!t) return u;
  auto n = std::make_shared<Tree>(*t);
  if (!t->right) {
    n->right = u;
    n->ra = w;
  } else {
    n->ra = e.larrow(t->ra, w);
    n->right = prec1(t->right, u, e.ltri(t->ra, w), e);
  }
  return n;
}

inline TreeP succ1(const TreeP& t, const TreeP& u, int w, const Edus& e) {
  if (!u) return t;
  auto n = std::make_shared<Tree>(*u);
  if (!u->left) {
    n->left = t;
    n->la = w;
  } else {
    n->la = e.rarrow(w, u->la);
    n->left = succ1(t, u->left, e.rtri(w, u->la), e);
  }
  return n;
}

}  // namespace oracle
