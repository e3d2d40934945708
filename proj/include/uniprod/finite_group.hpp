#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniprod/errors.hpp"

namespace uniprod {

struct LawViolation {
  std::string law;  // latin-row | latin-col | identity | associativity | inverse
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

// Every violated group law with concrete witnesses. Witness lists are capped
// at 8 per law; `total` is always the exact count.
struct ValidationReport {
  std::vector<LawViolation> violations;
  std::uint64_t total = 0;
  bool ok() const { return total == 0; }
};

// Checks the group laws on a dense n*n table (row-major, table[x*n+y] = x*y).
// Throws OutOfRangeEntry on malformed entries and InputError on bad sizes.
ValidationReport validate_group(int order, const std::vector<int>& table, int identity);

struct InvalidGroup : Error {
  InvalidGroup(ValidationReport r, const std::string& what_arg)
      : Error(what_arg), report(std::move(r)) {}
  ValidationReport report;
};

// Finite group as a dense Cayley table over element indices 0..n-1.
// Immutable after construction; construction validates all group laws.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table, int identity,
              std::vector<std::string> labels = {});

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  int element_order(int x) const;
  bool is_abelian() const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  std::optional<int> index_of_label(const std::string& label) const;

  bool same_table(const FiniteGroup& other) const {
    return n_ == other.n_ && identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  int n_;
  std::vector<int> table_;
  int identity_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

// Multiset of element orders, indexed by order (size n+1).
std::vector<int> order_spectrum(const FiniteGroup& g);

// Direct product on pair codes (a,b) -> a*|B|+b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// True iff subset is nonempty and closed under product and inverse.
bool is_subgroup(const FiniteGroup& e, const std::vector<int>& subset);

// A subgroup H <= E kept in ambient coordinates. Members are stored sorted
// ascending; as_group() is the subgroup relabeled onto positions 0..|H|-1.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(FiniteGroup ambient, std::vector<int> members);

  const FiniteGroup& ambient() const { return ambient_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int member(int pos) const { return members_[pos]; }
  int position_of(int ambient_index) const { return pos_[ambient_index]; }
  bool contains(int ambient_index) const { return pos_[ambient_index] >= 0; }
  const FiniteGroup& as_group() const { return sub_; }

 private:
  FiniteGroup ambient_;
  std::vector<int> members_;
  std::vector<int> pos_;
  FiniteGroup sub_;
};

bool is_normal(const FiniteGroup& e, const SubgroupEmbedding& h);

// Smallest subgroup containing the generators.
SubgroupEmbedding subgroup_generated_by(const FiniteGroup& e, const std::vector<int>& gens);

struct TransversalSelector {
  enum class Kind { lowest_index, seeded_random, explicit_list };
  Kind kind = Kind::lowest_index;
  std::uint64_t seed = 0;
  std::vector<int> reps;

  static TransversalSelector lowest() { return {}; }
  static TransversalSelector random(std::uint64_t seed) {
    TransversalSelector s;
    s.kind = Kind::seeded_random;
    s.seed = seed;
    return s;
  }
  static TransversalSelector explicit_list(std::vector<int> reps) {
    TransversalSelector s;
    s.kind = Kind::explicit_list;
    s.reps = std::move(reps);
    return s;
  }
};

// One representative per right coset H·x, with reps[0] = identity and the
// remaining representatives in ascending ambient order.
class Transversal {
 public:
  Transversal(FiniteGroup ambient, SubgroupEmbedding subgroup, std::vector<int> reps);

  const FiniteGroup& ambient() const { return ambient_; }
  const SubgroupEmbedding& subgroup() const { return subgroup_; }
  const std::vector<int>& reps() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int rep(int coset) const { return reps_[coset]; }
  // Index into reps() of the right coset containing x.
  int coset_of(int x) const { return coset_of_[x]; }

 private:
  FiniteGroup ambient_;
  SubgroupEmbedding subgroup_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
};

Transversal right_transversal(const FiniteGroup& e, const SubgroupEmbedding& h,
                              const TransversalSelector& selector = {});

enum class SearchStatus { found, none, budget_exhausted };

struct IsoSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<std::vector<int>> mapping;  // g1 index -> g2 index
  std::uint64_t nodes = 0;
};

// Backtracking isomorphism search pruned by order spectra and generator
// images. A returned mapping is always re-verified as a bijective
// homomorphism. budget bounds the number of candidate assignments tried;
// exceeding it yields budget_exhausted, distinct from a definitive none.
IsoSearchResult find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                 std::uint64_t budget = 1'000'000);

}  // namespace uniprod
