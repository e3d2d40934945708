#include "uniprod/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace uniprod {

namespace {

constexpr std::size_t kWitnessCap = 8;

void push_violation(ValidationReport& report, std::uint64_t& law_count,
                    LawViolation v) {
  ++law_count;
  ++report.total;
  if (law_count <= kWitnessCap) report.violations.push_back(std::move(v));
}

}  // namespace

ValidationReport validate_group(int order, const std::vector<int>& table, int identity) {
  if (order <= 0) throw InputError("group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw InputError("table size does not match order");
  if (identity < 0 || identity >= order) throw InputError("identity index out of range");
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int v = table[static_cast<std::size_t>(x) * order + y];
      if (v < 0 || v >= order) throw OutOfRangeEntry(x, y, v, order);
    }

  ValidationReport report;
  auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x) * order + y]; };

  std::uint64_t latin_rows = 0;
  for (int x = 0; x < order; ++x) {
    std::vector<int> first_col(order, -1);
    for (int y = 0; y < order; ++y) {
      int v = at(x, y);
      if (first_col[v] >= 0) {
        push_violation(report, latin_rows,
                       {"latin-row",
                        {x, first_col[v], y},
                        "row " + std::to_string(x) + " repeats value " + std::to_string(v) +
                            " at columns " + std::to_string(first_col[v]) + " and " +
                            std::to_string(y)});
      } else {
        first_col[v] = y;
      }
    }
  }

  std::uint64_t latin_cols = 0;
  for (int y = 0; y < order; ++y) {
    std::vector<int> first_row(order, -1);
    for (int x = 0; x < order; ++x) {
      int v = at(x, y);
      if (first_row[v] >= 0) {
        push_violation(report, latin_cols,
                       {"latin-col",
                        {y, first_row[v], x},
                        "column " + std::to_string(y) + " repeats value " + std::to_string(v) +
                            " at rows " + std::to_string(first_row[v]) + " and " +
                            std::to_string(x)});
      } else {
        first_row[v] = x;
      }
    }
  }

  std::uint64_t identity_law = 0;
  for (int x = 0; x < order; ++x) {
    if (at(identity, x) != x)
      push_violation(report, identity_law,
                     {"identity",
                      {identity, x, -1},
                      "e*" + std::to_string(x) + " = " + std::to_string(at(identity, x))});
    if (at(x, identity) != x)
      push_violation(report, identity_law,
                     {"identity",
                      {x, identity, -1},
                      std::to_string(x) + "*e = " + std::to_string(at(x, identity))});
  }

  std::uint64_t assoc = 0;
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z) {
        int lhs = at(at(x, y), z);
        int rhs = at(x, at(y, z));
        if (lhs != rhs)
          push_violation(report, assoc,
                         {"associativity",
                          {x, y, z},
                          "(x*y)*z = " + std::to_string(lhs) + ", x*(y*z) = " +
                              std::to_string(rhs)});
      }

  std::uint64_t inverse_law = 0;
  for (int x = 0; x < order; ++x) {
    bool has = false;
    for (int y = 0; y < order; ++y)
      if (at(x, y) == identity) {
        has = true;
        break;
      }
    if (!has)
      push_violation(report, inverse_law,
                     {"inverse", {x, -1, -1}, "no inverse for element " + std::to_string(x)});
  }

  return report;
}

FiniteGroup::FiniteGroup(int order, std::vector<int> table, int identity,
                         std::vector<std::string> labels)
    : n_(order), table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  ValidationReport report = validate_group(n_, table_, identity_);
  if (!report.ok()) {
    std::string msg = "not a group (" + std::to_string(report.total) + " law violations";
    if (!report.violations.empty()) msg += "; first: " + report.violations.front().detail;
    msg += ")";
    throw InvalidGroup(std::move(report), msg);
  }
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != static_cast<std::size_t>(n_))
    throw InputError("label count does not match order");
  inverse_.assign(n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  int acc = x;
  while (acc != identity_) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::optional<int> FiniteGroup::index_of_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<int> order_spectrum(const FiniteGroup& g) {
  std::vector<int> spectrum(g.order() + 1, 0);
  for (int x = 0; x < g.order(); ++x) ++spectrum[g.element_order(x)];
  return spectrum;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int lhs = x1 * nb + y1;
          int rhs = x2 * nb + y2;
          table[static_cast<std::size_t>(lhs) * n + rhs] = a.mul(x1, x2) * nb + b.mul(y1, y2);
        }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FiniteGroup(n, std::move(table), a.identity() * nb + b.identity(), std::move(labels));
}

bool is_subgroup(const FiniteGroup& e, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<char> in(e.order(), 0);
  for (int x : subset) {
    if (x < 0 || x >= e.order()) throw InputError("subset index out of range");
    in[x] = 1;
  }
  for (int x = 0; x < e.order(); ++x) {
    if (!in[x]) continue;
    if (!in[e.inv(x)]) return false;
    for (int y = 0; y < e.order(); ++y)
      if (in[y] && !in[e.mul(x, y)]) return false;
  }
  return true;
}

SubgroupEmbedding::SubgroupEmbedding(FiniteGroup ambient, std::vector<int> members)
    : ambient_(std::move(ambient)),
      members_(std::move(members)),
      pos_(ambient_.order(), -1),
      sub_(1, {0}, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_subgroup(ambient_, members_))
    throw NotASubgroup("member set is not closed under product and inverse");
  bool has_identity = false;
  for (int x : members_) has_identity |= (x == ambient_.identity());
  if (!has_identity) throw NotASubgroup("member set does not contain the identity");
  if (ambient_.order() % static_cast<int>(members_.size()) != 0)
    throw NotASubgroup("member count does not divide the ambient order");
  for (std::size_t i = 0; i < members_.size(); ++i) pos_[members_[i]] = static_cast<int>(i);

  int m = static_cast<int>(members_.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) {
    labels.push_back(ambient_.label(members_[i]));
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = pos_[ambient_.mul(members_[i], members_[j])];
  }
  sub_ = FiniteGroup(m, std::move(table), pos_[ambient_.identity()], std::move(labels));
}

bool is_normal(const FiniteGroup& e, const SubgroupEmbedding& h) {
  for (int x = 0; x < e.order(); ++x)
    for (int i = 0; i < h.size(); ++i)
      if (!h.contains(e.mul(e.mul(x, h.member(i)), e.inv(x)))) return false;
  return true;
}

SubgroupEmbedding subgroup_generated_by(const FiniteGroup& e, const std::vector<int>& gens) {
  std::set<int> members{e.identity()};
  std::vector<int> frontier{e.identity()};
  for (int g : gens) {
    if (g < 0 || g >= e.order()) throw InputError("generator index out of range");
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(members.begin(), members.end());
    for (int x : current)
      for (int g : gens) {
        int y = e.mul(x, g);
        if (members.insert(y).second) grew = true;
        int z = e.mul(g, x);
        if (members.insert(z).second) grew = true;
      }
  }
  return SubgroupEmbedding(e, std::vector<int>(members.begin(), members.end()));
}

Transversal::Transversal(FiniteGroup ambient, SubgroupEmbedding subgroup, std::vector<int> reps)
    : ambient_(std::move(ambient)),
      subgroup_(std::move(subgroup)),
      reps_(std::move(reps)),
      coset_of_(ambient_.order(), -1) {
  int expected = ambient_.order() / subgroup_.size();
  if (static_cast<int>(reps_.size()) != expected)
    throw NotATransversal("expected " + std::to_string(expected) + " representatives, got " +
                          std::to_string(reps_.size()));
  // Canonical order: identity first, remaining representatives ascending.
  auto it = std::find(reps_.begin(), reps_.end(), ambient_.identity());
  if (it == reps_.end()) throw NotATransversal("representative list does not contain the identity");
  reps_.erase(it);
  std::sort(reps_.begin(), reps_.end());
  reps_.insert(reps_.begin(), ambient_.identity());

  for (std::size_t i = 0; i < reps_.size(); ++i) {
    int r = reps_[i];
    if (r < 0 || r >= ambient_.order()) throw NotATransversal("representative index out of range");
    for (int k = 0; k < subgroup_.size(); ++k) {
      int x = ambient_.mul(subgroup_.member(k), r);
      if (coset_of_[x] >= 0)
        throw NotATransversal("representatives " + ambient_.label(reps_[coset_of_[x]]) + " and " +
                              ambient_.label(r) + " lie in the same right coset");
      coset_of_[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < ambient_.order(); ++x)
    if (coset_of_[x] < 0)
      throw NotATransversal("right cosets are not covered (element " + ambient_.label(x) +
                            " unreached)");
}

Transversal right_transversal(const FiniteGroup& e, const SubgroupEmbedding& h,
                              const TransversalSelector& selector) {
  // Partition E into right cosets H·x, discovered in ascending index order.
  std::vector<int> coset_id(e.order(), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < e.order(); ++x) {
    if (coset_id[x] >= 0) continue;
    int id = static_cast<int>(cosets.size());
    cosets.emplace_back();
    for (int k = 0; k < h.size(); ++k) {
      int y = e.mul(h.member(k), x);
      coset_id[y] = id;
      cosets[id].push_back(y);
    }
    std::sort(cosets[id].begin(), cosets[id].end());
  }

  std::vector<int> reps;
  switch (selector.kind) {
    case TransversalSelector::Kind::lowest_index: {
      for (const auto& coset : cosets)
        reps.push_back(coset_id[e.identity()] == coset_id[coset.front()] ? e.identity()
                                                                         : coset.front());
      break;
    }
    case TransversalSelector::Kind::seeded_random: {
      std::mt19937_64 rng(selector.seed);
      for (const auto& coset : cosets) {
        if (coset_id[coset.front()] == coset_id[e.identity()]) {
          reps.push_back(e.identity());
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, coset.size() - 1);
          reps.push_back(coset[pick(rng)]);
        }
      }
      break;
    }
    case TransversalSelector::Kind::explicit_list:
      reps = selector.reps;
      break;
  }
  return Transversal(e, h, std::move(reps));
}

namespace {

// Greedy minimal generating sequence: repeatedly adjoin the smallest element
// outside the subgroup generated so far.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  int count = 1;
  std::vector<int> closure{g.identity()};
  std::vector<int> gens;
  while (count < g.order()) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!in[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    // close up under products with the enlarged generating set
    std::vector<int> frontier{next};
    in[next] = 1;
    closure.push_back(next);
    ++count;
    while (!frontier.empty()) {
      std::vector<int> fresh;
      for (int x : frontier)
        for (std::size_t i = 0; i < closure.size(); ++i) {
          for (int y : {g.mul(x, closure[i]), g.mul(closure[i], x)})
            if (!in[y]) {
              in[y] = 1;
              ++count;
              fresh.push_back(y);
            }
        }
      for (int y : fresh) closure.push_back(y);
      frontier = std::move(fresh);
    }
  }
  return gens;
}

struct IsoSearcher {
  const FiniteGroup& g1;
  const FiniteGroup& g2;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> gens;
  std::vector<int> orders1, orders2;

  // Partial map from g1 indices to g2 indices and its image mask.
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> known_;  // g1 indices with map_ assigned, in closure order

  bool extend_closure(std::size_t from) {
    // Derive images of all products of already-known elements; detect clashes.
    for (std::size_t i = from; i < known_.size(); ++i) {
      for (std::size_t j = 0; j < known_.size(); ++j) {
        for (auto [x, y] : {std::pair{known_[i], known_[j]}, std::pair{known_[j], known_[i]}}) {
          int p = g1.mul(x, y);
          int q = g2.mul(map_[x], map_[y]);
          if (map_[p] >= 0) {
            if (map_[p] != q) return false;
          } else {
            if (used_[q]) return false;
            if (orders1[p] != orders2[q]) return false;
            map_[p] = q;
            used_[q] = 1;
            known_.push_back(p);
          }
        }
      }
    }
    return true;
  }

  bool assign(std::size_t gen_index) {
    if (gen_index == gens.size()) return static_cast<int>(known_.size()) == g1.order();
    int g = gens[gen_index];
    if (map_[g] >= 0) return assign(gen_index + 1);  // already forced by closure
    for (int cand = 0; cand < g2.order(); ++cand) {
      if (used_[cand] || orders2[cand] != orders1[g]) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      auto saved_map = map_;
      auto saved_used = used_;
      auto saved_known = known_;
      map_[g] = cand;
      used_[cand] = 1;
      known_.push_back(g);
      if (extend_closure(known_.size() - 1) && assign(gen_index + 1)) return true;
      if (exhausted) return false;
      map_ = std::move(saved_map);
      used_ = std::move(saved_used);
      known_ = std::move(saved_known);
    }
    return false;
  }
};

}  // namespace

IsoSearchResult find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                                 std::uint64_t budget) {
  IsoSearchResult result;
  if (g1.order() != g2.order()) return result;
  if (order_spectrum(g1) != order_spectrum(g2)) return result;

  IsoSearcher searcher{g1, g2, budget};
  searcher.gens = generating_sequence(g1);
  searcher.orders1.resize(g1.order());
  searcher.orders2.resize(g2.order());
  for (int x = 0; x < g1.order(); ++x) searcher.orders1[x] = g1.element_order(x);
  for (int x = 0; x < g2.order(); ++x) searcher.orders2[x] = g2.element_order(x);
  searcher.map_.assign(g1.order(), -1);
  searcher.used_.assign(g2.order(), 0);
  searcher.map_[g1.identity()] = g2.identity();
  searcher.used_[g2.identity()] = 1;
  searcher.known_.push_back(g1.identity());

  bool found = searcher.assign(0);
  result.nodes = searcher.nodes;
  if (searcher.exhausted) {
    result.status = SearchStatus::budget_exhausted;
    return result;
  }
  if (!found) return result;

  // Verify the homomorphism property before returning the bijection.
  const std::vector<int>& map = searcher.map_;
  std::vector<char> hit(g2.order(), 0);
  for (int x = 0; x < g1.order(); ++x) {
    if (map[x] < 0 || hit[map[x]]) throw InternalInconsistency("isomorphism search broke bijectivity");
    hit[map[x]] = 1;
  }
  for (int x = 0; x < g1.order(); ++x)
    for (int y = 0; y < g1.order(); ++y)
      if (map[g1.mul(x, y)] != g2.mul(map[x], map[y]))
        throw InternalInconsistency("isomorphism search returned a non-homomorphism");

  result.status = SearchStatus::found;
  result.mapping = map;
  return result;
}

}  // namespace uniprod
