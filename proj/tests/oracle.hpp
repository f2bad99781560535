#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here includes library code; parameters for the default
// model are typed in again by hand.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace oracle {

enum Kind { Gauss, Sigm, Tri };

struct Mf {
  Kind kind;
  double a, b, c = 0.0;

  double operator()(double x) const {
    switch (kind) {
      case Gauss:
        return std::exp(-(x - b) * (x - b) / (2.0 * a * a));
      case Sigm:
        return 1.0 / (1.0 + std::exp(-a * (x - b)));
      case Tri: {
        if (x <= a || x >= c) return x == b ? 1.0 : 0.0;
        if (x <= b) return (x - a) / (b - a);
        return (c - x) / (c - b);
      }
    }
    return 0.0;
  }
};

struct Var {
  double lo, hi;
  std::vector<Mf> terms;
};

struct Rule {
  std::vector<std::pair<int, int>> when;  // (input index, term index)
  int then;
};

struct Node {
  std::vector<Var> in;
  Var out;
  std::vector<Rule> rules;
};

struct Result {
  double crisp;
  bool degenerate;
};

// One rule at a time: fire, clip the consequent, max into the aggregate,
// then a plain weighted average over 1001 points.
inline Result mamdani(const Node& n, std::vector<double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], n.in[i].lo, n.in[i].hi);
  std::vector<double> agg(1001, 0.0);
  for (const auto& r : n.rules) {
    double w = 1.0;
    for (auto [i, t] : r.when) w = std::min(w, n.in[i].terms[t](x[i]));
    for (int k = 0; k <= 1000; ++k) {
      const double y = n.out.lo + (n.out.hi - n.out.lo) * k / 1000.0;
      agg[k] = std::max(agg[k], std::min(w, n.out.terms[r.then](y)));
    }
  }
  double num = 0, den = 0;
  for (int k = 0; k <= 1000; ++k) {
    const double y = n.out.lo + (n.out.hi - n.out.lo) * k / 1000.0;
    num += y * agg[k];
    den += agg[k];
  }
  if (den == 0) return {(n.out.lo + n.out.hi) / 2, true};
  return {num / den, false};
}

// Default model typed in from the parameter tables.
inline const Var guesses{0, 10, {{Gauss, 1.699, 0}, {Gauss, 1.699, 5}, {Gauss, 1.699, 10}}};
inline const Var timev{0, 60, {{Gauss, 10.19, 0}, {Gauss, 10.19, 30}, {Gauss, 10.19, 60}}};
inline const Var skipped{0, 1, {{Tri, 0.99, 1, 1.01}, {Tri, -0.01, 0, 0.01}}};  // True, False
inline const Var length{1, 15, {{Gauss, 0.85, 5}, {Sigm, 2.38, 6.53}, {Gauss, 0.85, 10}}};
inline const Var dos{0, 1, {{Gauss, 0.1699, 0}, {Sigm, 0.1699, 0.5}, {Gauss, 0.1699, 1}}};
inline const Var ue{0, 1, {{Gauss, 0.1699, 0}, {Gauss, 0.1699, 0.5}, {Gauss, 0.1699, 1}}};
inline const Var cow{0, 1, {{Gauss, 2.123, 0}, {Gauss, 2.123, 0.5}, {Gauss, 2.123, 1}}};
inline const Var iwd{0, 10, {{Gauss, 1.0, 1.6}, {Gauss, 1.0, 4.6}, {Gauss, 1.5, 8.9}}};

enum { Low = 0, Med = 1, High = 2 };
enum { True = 0, False = 1 };

inline const Node ue_node{{guesses, timev},
                          ue,
                          {{{{0, Low}, {1, Low}}, Low},
                           {{{0, Med}, {1, Med}}, Med},
                           {{{0, High}, {1, High}}, High},
                           {{{1, Low}}, Low},
                           {{{1, High}}, High}}};

// length: Short, Long, Very Long; scramble: Low, High, Very High
inline const Node cow_node{{length, dos},
                           cow,
                           {{{{0, 0}, {1, 0}}, Med},
                            {{{0, 1}, {1, 0}}, High},
                            {{{1, 2}}, Low},
                            {{{0, 2}, {1, 1}}, High},
                            {{{0, 0}, {1, 0}}, Low}}};

// inputs: ue, cow, skipped; outputs Easy, Medium, Hard
inline const Node iwd_node{{ue, cow, skipped},
                           iwd,
                           {{{{0, Low}, {2, False}}, 0},
                            {{{0, Low}, {1, Low}, {2, False}}, 0},
                            {{{0, Low}, {1, High}, {2, True}}, 2},
                            {{{0, High}}, 2},
                            {{{0, Low}, {2, False}}, 0},
                            {{{0, Low}, {1, High}, {2, False}}, 1}}};

inline double ue_of(double g, double t) { return mamdani(ue_node, {g, t}).crisp; }
inline double cow_of(double l, double s) { return mamdani(cow_node, {l, s}).crisp; }
inline double iwd_of(double u, double c, double s) { return mamdani(iwd_node, {u, c, s}).crisp; }

inline double scramble_degree(const std::string& w, const std::string& p) {
  double s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != p[i]) s += 1.0 / std::pow(2.0, static_cast<double>(i + 1));
  }
  return s;
}

inline int category(double crisp) { return crisp < 4.5 ? 0 : (crisp <= 5.5 ? 1 : 2); }
inline int urd_category(int urd) { return urd <= 4 ? 0 : (urd == 5 ? 1 : 2); }

inline double full_iwd(const std::string& word, const std::string& scr, double time, int guesses_n,
                       bool skip) {
  const double u = ue_of(guesses_n, time);
  const double c = cow_of(static_cast<double>(word.size()), scramble_degree(word, scr));
  return iwd_of(u, c, skip ? 1.0 : 0.0);
}

// Per-class precision/recall/F straight from (truth, predicted) pairs.
struct Prf {
  double p, r, f;
};
inline Prf prf_from_pairs(const std::vector<std::pair<int, int>>& tp, int cls) {
  double hit = 0, pred = 0, act = 0;
  for (auto [t, p] : tp) {
    if (t == cls && p == cls) hit += 1;
    if (p == cls) pred += 1;
    if (t == cls) act += 1;
  }
  const double pr = pred ? hit / pred : 0, rc = act ? hit / act : 0;
  return {pr, rc, pr + rc > 0 ? 2 * pr * rc / (pr + rc) : 0};
}

}  // namespace oracle
