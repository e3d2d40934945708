#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniprod/extending_structure.hpp"
#include "uniprod/finite_group.hpp"
#include "uniprod/special_products.hpp"

namespace uniprod {

// A pair of unitary maps (r: S -> H, v: S -> S') witnessing an H-stabilizing
// morphism psi(h,s) = (h r(s), v(s)) between unified products.
struct StabilizingPair {
  std::vector<int> r;  // S index -> H index, r[0] = 1_H
  std::vector<int> v;  // S index -> S' index, v[0] = 1_{S'}

  bool v_bijective(int m_target) const;
};

// Whether (r, v) satisfies the four morphism conditions between d and d2.
bool stabilizing_pair_valid(const ExtendingDatum& d, const ExtendingDatum& d2,
                            const StabilizingPair& pair);

// Expands a pair to the map psi on pair codes and verifies it is a
// homomorphism making the stabilizing diagram commute.
bool verify_stabilizing_morphism(const ExtendingDatum& d, const ExtendingDatum& d2,
                                 const StabilizingPair& pair, bool generators_only = false);

struct MorphismSearchResult {
  std::vector<StabilizingPair> pairs;  // lexicographic in (v, r) encoding
  bool complete = true;                // false when the budget truncated the scan
  std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// All unitary pairs (r, v) satisfying the morphism conditions; both data
// must live over the same host group.
MorphismSearchResult stabilizing_morphisms(const ExtendingDatum& d, const ExtendingDatum& d2,
                                           std::uint64_t budget = kDefaultSearchBudget,
                                           int threads = 1);

struct EquivalenceOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<StabilizingPair> witness;  // bijective v
  std::uint64_t nodes = 0;
};

// First (in lexicographic (v, r) order) stabilizing pair with bijective v,
// i.e. an isomorphism witness; the found witness is inverted and the inverse
// re-verified as a witness in the opposite direction.
EquivalenceOutcome equivalent(const ExtendingDatum& d, const ExtendingDatum& d2,
                              std::uint64_t budget = kDefaultSearchBudget);

StabilizingPair invert_witness(const ExtendingDatum& d, const ExtendingDatum& d2,
                               const StabilizingPair& pair);
// Composite witness for psi2 . psi1 (first: d1 -> d2, second: d2 -> d3).
StabilizingPair compose_witnesses(const FiniteGroup& host, const StabilizingPair& first,
                                  const StabilizingPair& second);

struct EquivalenceClassSet {
  std::vector<ExtendingDatum> items;
  std::vector<std::vector<int>> classes;  // partition of item indices
  std::vector<int> class_of;
  // Witness item -> class representative, for every non-representative item.
  std::map<std::pair<int, int>, StabilizingPair> witnesses;
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Partition under the bijective-v equivalence; reflexivity, symmetry and
// transitive closure are re-verified by inverting and composing witnesses.
EquivalenceClassSet k2_classes(const std::vector<ExtendingDatum>& items,
                               std::uint64_t budget = kDefaultSearchBudget);

// Partition under the cohomologous relation: r-only witnesses with v = id,
// over items sharing one right action. Every witness is checked to be an
// isomorphism.
EquivalenceClassSet h2_classes(const std::vector<ExtendingDatum>& items,
                               std::uint64_t budget = kDefaultSearchBudget);

// Unified product vs crossed product, up to an H-stabilizing isomorphism:
// succeeds iff < is trivial and some (r, v) with v a group isomorphism
// (S,*) -> G satisfies the two transported conditions.
struct CrossedIsoOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<StabilizingPair> witness;
  std::string reason;  // set when status == none
  std::uint64_t nodes = 0;
};

CrossedIsoOutcome crossed_iso_check(const ExtendingDatum& d, const CrossedSystem& c,
                                    std::uint64_t budget = kDefaultSearchBudget);

// Unified product vs bicrossed product: witness (r, v) with v a bijective
// unitary map intertwining the right actions.
CrossedIsoOutcome bicrossed_iso_check(const ExtendingDatum& d, const MatchedPair& mp,
                                      std::uint64_t budget = kDefaultSearchBudget);

// Two exact factorizations E = HS and E = HT: searches unitary bijections
// v: S -> T with s v(s)^-1 in H, sets r(s) = s v(s)^-1 and verifies the five
// compatibility conditions. Witness maps are indexed by S member position;
// r lands in H member positions, v in T member positions. Throws
// NotExactFactorization naming the failing condition.
struct KuperbergOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<StabilizingPair> witness;
  std::uint64_t nodes = 0;
};

KuperbergOutcome kuperberg_check(const FiniteGroup& e, const std::vector<int>& h_members,
                                 const std::vector<int>& s_members,
                                 const std::vector<int>& t_members,
                                 std::uint64_t budget = kDefaultSearchBudget);

// Candidate object for the two universality categories. For the initial
// category: u: H -> G (a group morphism) and v: S -> G. For the final
// category: u: G -> H and v: G -> S.
struct UniversalCandidate {
  FiniteGroup group;
  std::vector<int> u;
  std::vector<int> v;
};

struct NotAnObjectC : Error {
  NotAnObjectC(std::string eq, std::vector<int> w, const std::string& what_arg)
      : Error(what_arg), equation(std::move(eq)), witness(std::move(w)) {}
  std::string equation;
  std::vector<int> witness;
};

struct NotAnObjectD : Error {
  NotAnObjectD(std::string eq, std::vector<int> w, const std::string& what_arg)
      : Error(what_arg), equation(std::move(eq)), witness(std::move(w)) {}
  std::string equation;
  std::vector<int> witness;
};

enum class UniquenessMode { verified_exhaustive, by_construction };

struct UniversalCheck {
  std::vector<int> induced;  // phi: pair code -> G, or psi: G -> pair code
  UniquenessMode uniqueness = UniquenessMode::by_construction;
};

// Initial-object check: validates the two candidate equations, builds
// phi(h,s) = u(h) v(s), verifies it is the unique commuting homomorphism.
// Uniqueness is exhausted over all maps for |G| <= 12 (budgeted), otherwise
// flagged by_construction.
UniversalCheck verify_universal_C(const ExtendingDatum& d, const UniversalCandidate& cand,
                                  std::uint64_t budget = kDefaultSearchBudget);

// Final-object check: validates the two candidate equations, builds
// psi(g) = (u(g), v(g)) and verifies it is the unique commuting homomorphism.
UniversalCheck verify_universal_D(const ExtendingDatum& d, const UniversalCandidate& cand,
                                  std::uint64_t budget = kDefaultSearchBudget);

}  // namespace uniprod
