#pragma once

#include <array>
#include <string>
#include <vector>

#include "uniprod/extending_structure.hpp"
#include "uniprod/finite_group.hpp"

namespace uniprod {

// Crossed system (H, G, alpha, f): a weak action alpha: G -> Aut(H) and an
// alpha-cocycle f: GxG -> H subject to
//   (WA) g1>(g2>h) = f(g1,g2) ((g1 g2)>h) f(g1,g2)^-1
//   (CC) f(g1,g2) f(g1 g2, g3) = (g1>f(g2,g3)) f(g1, g2 g3)
struct CrossedSystem {
  FiniteGroup group_h;
  FiniteGroup group_g;
  std::vector<int> action;   // g*|H|+h -> H index, alpha(g)(h)
  std::vector<int> cocycle;  // g1*|G|+g2 -> H index

  int act(int g, int h) const { return action[static_cast<std::size_t>(g) * group_h.order() + h]; }
  int f(int g1, int g2) const { return cocycle[static_cast<std::size_t>(g1) * group_g.order() + g2]; }
  bool normalized() const {
    return f(group_g.identity(), group_g.identity()) == group_h.identity();
  }
};

struct CrossedWitness {
  std::string condition;  // automorphism | WA | CC
  std::array<int, 3> args{-1, -1, -1};
  int lhs = -1, rhs = -1;
};

struct CrossedReport {
  std::vector<CrossedWitness> witnesses;  // capped at 8 per condition
  std::uint64_t total = 0;
  bool ok() const { return total == 0; }
};

struct CrossedAxiomViolation : Error {
  CrossedAxiomViolation(CrossedReport r, const std::string& what_arg)
      : Error(what_arg), report(std::move(r)) {}
  CrossedReport report;
};

CrossedReport crossed_system_check(const CrossedSystem& c);

// Crossed product H #_alpha^f G on pair codes (h,g) -> h*|G|+g with unit
// (f(1,1)^-1, 1); non-normalized systems are accepted.
FiniteGroup crossed_product(const CrossedSystem& c);
std::vector<int> crossed_product_table(const CrossedSystem& c);

// Matched pair (H, G, >, <): > a left action of G on the set H, < a right
// action of H on the set G, subject to
//   g>(h1 h2) = (g>h1) ((g<h1)>h2)
//   (g1 g2)<h = (g1<(g2>h)) (g2<h)
struct MatchedPair {
  FiniteGroup group_h;
  FiniteGroup group_g;
  std::vector<int> lact;  // g*|H|+h -> H index, g>h
  std::vector<int> ract;  // g*|H|+h -> G index, g<h

  int act_left(int g, int h) const { return lact[static_cast<std::size_t>(g) * group_h.order() + h]; }
  int act_right(int g, int h) const { return ract[static_cast<std::size_t>(g) * group_h.order() + h]; }
};

struct MatchedWitness {
  std::string condition;  // left-action | right-action | compat-left | compat-right
  std::array<int, 3> args{-1, -1, -1};
  int lhs = -1, rhs = -1;
};

struct MatchedReport {
  std::vector<MatchedWitness> witnesses;
  std::uint64_t total = 0;
  bool ok() const { return total == 0; }
};

struct MatchedPairViolation : Error {
  MatchedPairViolation(MatchedReport r, const std::string& what_arg)
      : Error(what_arg), report(std::move(r)) {}
  MatchedReport report;
};

MatchedReport matched_pair_check(const MatchedPair& mp);

// Bicrossed (Zappa-Szep) product H |><| G on pair codes (h,g) -> h*|G|+g.
FiniteGroup bicrossed_product(const MatchedPair& mp);
std::vector<int> bicrossed_product_table(const MatchedPair& mp);

// Lifts into extending data. The carrier group must have identity index 0
// so the pair coding of the lift matches the special product bit-exactly.
ExtendingDatum lift_crossed(const CrossedSystem& c);   // requires normalized()
ExtendingDatum lift_matched(const MatchedPair& mp);
// Twisted case: > trivial; inputs are the tables over (host, m).
ExtendingDatum lift_twisted(const FiniteGroup& host, int m, const std::vector<int>& ract,
                            const std::vector<int>& cocycle, const std::vector<int>& star);

// The twisted-product multiplication (h1,s1)(h2,s2) =
// (h1 h2 f(s1<h2, s2), (s1<h2)*s2), written out directly.
std::vector<int> twisted_product_table(const FiniteGroup& host, int m,
                                       const std::vector<int>& ract,
                                       const std::vector<int>& cocycle,
                                       const std::vector<int>& star);

struct TransitionIncompatible : Error {
  TransitionIncompatible(std::string cond, std::array<int, 3> w, const std::string& what_arg)
      : Error(what_arg), condition(std::move(cond)), witness(w) {}
  std::string condition;  // "be1" or "be2"
  std::array<int, 3> witness;
};

// Builds a datum from a transition map gamma: S -> H with gamma(1_S) = 1_H:
//   x>g   := gamma(x) g gamma(x<g)^-1
//   f(x,y):= gamma(x) gamma(y) gamma(x*y)^-1
// subject to the two displayed compatibilities (checked, witness-reported).
// The resulting datum is put through check_axioms; a violation there (the
// carrier can lack left inverses) raises AxiomViolation.
ExtendingDatum from_transition_map(const FiniteGroup& host, int m, const std::vector<int>& star,
                                   const std::vector<int>& ract, const std::vector<int>& gamma);

}  // namespace uniprod
