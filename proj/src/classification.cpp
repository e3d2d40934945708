#include "uniprod/classification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace uniprod {

namespace {

// Saturation point for search-space sizes; far above any usable budget, so
// truncated scans still decode candidate indices consistently.
constexpr std::uint64_t kSpaceCap = 1ULL << 62;

std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > kSpaceCap / base) return kSpaceCap;
    v *= base;
  }
  return v;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > kSpaceCap / b) return kSpaceCap;
  return a * b;
}

// Decodes candidate index c into m-1 digits (positions 1..m-1), most
// significant digit first; position 0 stays at the unit value.
void decode_digits(std::uint64_t c, int count, int base, int unit_value, std::vector<int>& out) {
  out.assign(count + 1, unit_value);
  for (int i = count; i >= 1; --i) {
    out[i] = static_cast<int>(c % base);
    c /= base;
  }
  out[0] = unit_value;
}

void require_same_host(const ExtendingDatum& d, const ExtendingDatum& d2) {
  if (!d.host().same_table(d2.host()))
    throw InputError("both extending data must live over the same host group");
}

}  // namespace

bool StabilizingPair::v_bijective(int m_target) const {
  std::vector<char> hit(m_target, 0);
  for (int x : v) {
    if (x < 0 || x >= m_target || hit[x]) return false;
    hit[x] = 1;
  }
  return static_cast<int>(v.size()) == m_target;
}

bool stabilizing_pair_valid(const ExtendingDatum& d, const ExtendingDatum& d2,
                            const StabilizingPair& pair) {
  require_same_host(d, d2);
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m();
  if (static_cast<int>(pair.r.size()) != m || static_cast<int>(pair.v.size()) != m) return false;
  if (pair.r[0] != hg.identity() || pair.v[0] != 0) return false;
  const auto& r = pair.r;
  const auto& v = pair.v;

  for (int s = 0; s < m; ++s)
    for (int h = 0; h < n; ++h) {
      // v(s<h) = v(s) <' h
      if (v[d.ract(s, h)] != d2.ract(v[s], h)) return false;
      // (s>h) r(s<h) = r(s) (v(s) >' h)
      if (hg.mul(d.lact(s, h), r[d.ract(s, h)]) != hg.mul(r[s], d2.lact(v[s], h))) return false;
    }
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2) {
      // v(s1*s2) = (v(s1) <' r(s2)) *' v(s2)
      if (v[d.star(s1, s2)] != d2.star(d2.ract(v[s1], r[s2]), v[s2])) return false;
      // f(s1,s2) r(s1*s2) = r(s1) (v(s1) >' r(s2)) f'(v(s1) <' r(s2), v(s2))
      int lhs = hg.mul(d.f(s1, s2), r[d.star(s1, s2)]);
      int rhs = hg.mul(hg.mul(r[s1], d2.lact(v[s1], r[s2])),
                       d2.f(d2.ract(v[s1], r[s2]), v[s2]));
      if (lhs != rhs) return false;
    }
  return true;
}

bool verify_stabilizing_morphism(const ExtendingDatum& d, const ExtendingDatum& d2,
                                 const StabilizingPair& pair, bool generators_only) {
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m(), m2 = d2.m();
  int size1 = n * m, size2 = n * m2;
  std::vector<int> t1 = unified_product_table(d);
  std::vector<int> t2 = unified_product_table(d2);
  std::vector<int> psi(size1);
  for (int h = 0; h < n; ++h)
    for (int s = 0; s < m; ++s) psi[h * m + s] = hg.mul(h, pair.r[s]) * m2 + pair.v[s];

  // The stabilizing diagram: psi(i_H(h)) = i_H(h).
  for (int h = 0; h < n; ++h)
    if (psi[h * m + 0] != h * m2 + 0) return false;

  auto hom_at = [&](int x, int y) {
    return psi[t1[static_cast<std::size_t>(x) * size1 + y]] ==
           t2[static_cast<std::size_t>(psi[x]) * size2 + psi[y]];
  };
  if (generators_only) {
    std::vector<int> gens;
    for (int h = 0; h < n; ++h) gens.push_back(h * m + 0);
    for (int s = 1; s < m; ++s) gens.push_back(hg.identity() * m + s);
    for (int x : gens)
      for (int y : gens)
        if (!hom_at(x, y)) return false;
    return true;
  }
  for (int x = 0; x < size1; ++x)
    for (int y = 0; y < size1; ++y)
      if (!hom_at(x, y)) return false;
  return true;
}

MorphismSearchResult stabilizing_morphisms(const ExtendingDatum& d, const ExtendingDatum& d2,
                                           std::uint64_t budget, int threads) {
  require_same_host(d, d2);
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m(), m2 = d2.m();
  int free = m - 1;
  std::uint64_t v_space = sat_pow(m2, free);
  std::uint64_t r_space = sat_pow(n, free);
  std::uint64_t space = sat_mul(v_space, r_space);

  MorphismSearchResult result;
  std::uint64_t limit = std::min(space, budget);
  result.complete = space <= budget;
  result.nodes = limit;

  threads = std::max(1, threads);
  std::uint64_t chunk = (limit + threads - 1) / threads;
  std::vector<std::vector<StabilizingPair>> found(threads);

  auto scan = [&](int worker) {
    std::uint64_t begin = worker * chunk;
    std::uint64_t end = std::min(limit, begin + chunk);
    StabilizingPair pair;
    for (std::uint64_t c = begin; c < end; ++c) {
      decode_digits(c / r_space, free, m2, 0, pair.v);
      decode_digits(c % r_space, free, n, hg.identity(), pair.r);
      if (stabilizing_pair_valid(d, d2, pair) &&
          verify_stabilizing_morphism(d, d2, pair, /*generators_only=*/true))
        found[worker].push_back(pair);
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  for (auto& part : found)
    for (auto& p : part) result.pairs.push_back(std::move(p));
  return result;
}

StabilizingPair invert_witness(const ExtendingDatum& d, const ExtendingDatum& d2,
                               const StabilizingPair& pair) {
  (void)d;
  int m = static_cast<int>(pair.v.size());
  StabilizingPair inv;
  inv.r.assign(m, -1);
  inv.v.assign(m, -1);
  for (int s = 0; s < m; ++s) {
    inv.v[pair.v[s]] = s;
    inv.r[pair.v[s]] = d2.host().inv(pair.r[s]);
  }
  for (int s = 0; s < m; ++s)
    if (inv.v[s] < 0) throw InputError("witness v is not bijective; cannot invert");
  return inv;
}

StabilizingPair compose_witnesses(const FiniteGroup& host, const StabilizingPair& first,
                                  const StabilizingPair& second) {
  int m = static_cast<int>(first.v.size());
  StabilizingPair out;
  out.r.resize(m);
  out.v.resize(m);
  for (int s = 0; s < m; ++s) {
    out.r[s] = host.mul(first.r[s], second.r[first.v[s]]);
    out.v[s] = second.v[first.v[s]];
  }
  return out;
}

EquivalenceOutcome equivalent(const ExtendingDatum& d, const ExtendingDatum& d2,
                              std::uint64_t budget) {
  require_same_host(d, d2);
  EquivalenceOutcome out;
  if (d.m() != d2.m()) return out;  // no bijective v between carriers of different size
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m();
  int free = m - 1;
  std::uint64_t r_space = sat_pow(n, free);
  std::uint64_t space = sat_mul(sat_pow(m, free), r_space);
  std::uint64_t limit = std::min(space, budget);

  StabilizingPair pair;
  for (std::uint64_t c = 0; c < limit; ++c) {
    ++out.nodes;
    decode_digits(c / r_space, free, m, 0, pair.v);
    if (!pair.v_bijective(m)) {
      // skip the whole r-block for this v
      c += r_space - 1 - (c % r_space);
      continue;
    }
    decode_digits(c % r_space, free, n, hg.identity(), pair.r);
    if (stabilizing_pair_valid(d, d2, pair)) {
      StabilizingPair back = invert_witness(d, d2, pair);
      if (!stabilizing_pair_valid(d2, d, back))
        throw InternalInconsistency("witness inverse fails the morphism conditions");
      out.status = SearchStatus::found;
      out.witness = pair;
      return out;
    }
  }
  out.status = space <= budget ? SearchStatus::none : SearchStatus::budget_exhausted;
  return out;
}

namespace {

EquivalenceClassSet partition_by(const std::vector<ExtendingDatum>& items, std::uint64_t budget,
                                 bool cohomologous) {
  EquivalenceClassSet out;
  out.items = items;
  if (items.empty()) return out;
  const FiniteGroup& hg = items.front().host();
  int m = items.front().m();
  for (const auto& d : items) {
    if (!d.host().same_table(hg) || d.m() != m)
      throw InputError("classification items must share the host group and carrier size");
    if (cohomologous && d.ract_table() != items.front().ract_table())
      throw InputError("cohomologous classification requires one shared right action");
  }

  auto relate = [&](const ExtendingDatum& a, const ExtendingDatum& b) -> EquivalenceOutcome {
    if (!cohomologous) return equivalent(a, b, budget);
    // r-only search with v = id.
    EquivalenceOutcome eo;
    int n = hg.order();
    int free = m - 1;
    std::uint64_t space = 1;
    for (int i = 0; i < free; ++i) {
      if (space > budget) break;
      space *= n;
    }
    std::uint64_t limit = std::min(space, budget);
    StabilizingPair pair;
    pair.v.resize(m);
    for (int s = 0; s < m; ++s) pair.v[s] = s;
    for (std::uint64_t c = 0; c < limit; ++c) {
      ++eo.nodes;
      decode_digits(c, free, n, hg.identity(), pair.r);
      if (stabilizing_pair_valid(a, b, pair)) {
        // Any such morphism is an isomorphism; assert it.
        if (!verify_stabilizing_morphism(a, b, pair))
          throw InternalInconsistency("cohomologous witness is not an isomorphism");
        eo.status = SearchStatus::found;
        eo.witness = pair;
        return eo;
      }
    }
    eo.status = space <= budget ? SearchStatus::none : SearchStatus::budget_exhausted;
    return eo;
  };

  out.class_of.assign(items.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < items.size(); ++i) {
    int assigned = -1;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      EquivalenceOutcome eo = relate(items[i], items[reps[k]]);
      out.nodes += eo.nodes;
      if (eo.status == SearchStatus::budget_exhausted) out.complete = false;
      if (eo.status == SearchStatus::found) {
        assigned = static_cast<int>(k);
        if (reps[k] != static_cast<int>(i))
          out.witnesses.emplace(std::make_pair(static_cast<int>(i), reps[k]), *eo.witness);
        break;
      }
    }
    if (assigned < 0) {
      assigned = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
      out.classes.emplace_back();
    }
    out.class_of[i] = assigned;
    out.classes[assigned].push_back(static_cast<int>(i));
  }

  // Reflexivity: the identity pair must witness d ~ d.
  for (const auto& d : items) {
    StabilizingPair identity;
    identity.r.assign(m, hg.identity());
    identity.v.resize(m);
    for (int s = 0; s < m; ++s) identity.v[s] = s;
    if (!stabilizing_pair_valid(d, d, identity))
      throw InternalInconsistency("identity pair is not a self-witness");
  }
  // Transitive closure: compose witnesses through the representative and
  // verify each composite.
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    const auto& members = out.classes[k];
    int rep = reps[k];
    for (std::size_t a = 0; a + 1 < members.size(); ++a) {
      int i = members[a], j = members[a + 1];
      auto to_rep = [&](int item) -> StabilizingPair {
        if (item == rep) {
          StabilizingPair id;
          id.r.assign(m, hg.identity());
          id.v.resize(m);
          for (int s = 0; s < m; ++s) id.v[s] = s;
          return id;
        }
        return out.witnesses.at({item, rep});
      };
      StabilizingPair i_to_rep = to_rep(i);
      StabilizingPair rep_to_j = invert_witness(items[j], items[rep], to_rep(j));
      StabilizingPair composite = compose_witnesses(hg, i_to_rep, rep_to_j);
      if (!stabilizing_pair_valid(items[i], items[j], composite))
        throw InternalInconsistency("composed witness fails the morphism conditions");
    }
  }
  return out;
}

}  // namespace

EquivalenceClassSet k2_classes(const std::vector<ExtendingDatum>& items, std::uint64_t budget) {
  return partition_by(items, budget, /*cohomologous=*/false);
}

EquivalenceClassSet h2_classes(const std::vector<ExtendingDatum>& items, std::uint64_t budget) {
  return partition_by(items, budget, /*cohomologous=*/true);
}

CrossedIsoOutcome crossed_iso_check(const ExtendingDatum& d, const CrossedSystem& c,
                                    std::uint64_t budget) {
  {
    AxiomReport ar = check_axioms(d);
    if (!ar.ok()) throw AxiomViolation(std::move(ar), "extending datum is not valid");
    CrossedReport cr = crossed_system_check(c);
    if (!cr.ok()) throw CrossedAxiomViolation(std::move(cr), "crossed system is not valid");
    if (!d.host().same_table(c.group_h))
      throw InputError("datum host and crossed-system H must be the same group");
  }
  CrossedIsoOutcome out;
  if (!d.ract_trivial()) {
    out.reason = "the right action of the datum is not trivial";
    return out;
  }
  const FiniteGroup& hg = d.host();
  const FiniteGroup& gg = c.group_g;
  int n = hg.order(), m = d.m();
  if (gg.order() != m) {
    out.reason = "carrier sizes differ";
    return out;
  }
  int free = m - 1;
  std::uint64_t r_space = sat_pow(n, free);
  std::uint64_t space = sat_mul(sat_pow(m, free), r_space);
  std::uint64_t limit = std::min(space, budget);

  StabilizingPair pair;
  for (std::uint64_t c_idx = 0; c_idx < limit; ++c_idx) {
    ++out.nodes;
    decode_digits(c_idx / r_space, free, m, gg.identity(), pair.v);
    if (!pair.v_bijective(m)) {
      c_idx += r_space - 1 - (c_idx % r_space);
      continue;
    }
    // v must be a group isomorphism (S,*) -> G.
    bool group_iso = true;
    for (int s1 = 0; s1 < m && group_iso; ++s1)
      for (int s2 = 0; s2 < m && group_iso; ++s2)
        group_iso = pair.v[d.star(s1, s2)] == gg.mul(pair.v[s1], pair.v[s2]);
    if (!group_iso) {
      c_idx += r_space - 1 - (c_idx % r_space);
      continue;
    }
    decode_digits(c_idx % r_space, free, n, hg.identity(), pair.r);

    bool ok = true;
    for (int s = 0; s < m && ok; ++s)
      for (int h = 0; h < n && ok; ++h)
        ok = d.lact(s, h) ==
             hg.mul(hg.mul(pair.r[s], c.act(pair.v[s], h)), hg.inv(pair.r[s]));
    for (int s1 = 0; s1 < m && ok; ++s1)
      for (int s2 = 0; s2 < m && ok; ++s2) {
        int rhs = hg.mul(hg.mul(hg.mul(pair.r[s1], c.act(pair.v[s1], pair.r[s2])),
                                c.f(pair.v[s1], pair.v[s2])),
                         hg.inv(pair.r[d.star(s1, s2)]));
        ok = d.f(s1, s2) == rhs;
      }
    if (!ok) continue;

    // Re-verify psi(h,s) = (h r(s), v(s)) as a stabilizing isomorphism onto
    // the crossed product.
    std::vector<int> t1 = unified_product_table(d);
    std::vector<int> t2 = crossed_product_table(c);
    int size = n * m;
    std::vector<int> psi(size);
    std::vector<char> hit(size, 0);
    bool iso = true;
    for (int h = 0; h < n && iso; ++h)
      for (int s = 0; s < m; ++s) {
        int img = hg.mul(h, pair.r[s]) * m + pair.v[s];
        psi[h * m + s] = img;
        if (hit[img]) {
          iso = false;
          break;
        }
        hit[img] = 1;
      }
    for (int x = 0; x < size && iso; ++x)
      for (int y = 0; y < size && iso; ++y)
        iso = psi[t1[static_cast<std::size_t>(x) * size + y]] ==
              t2[static_cast<std::size_t>(psi[x]) * size + psi[y]];
    if (!iso) throw InternalInconsistency("crossed iso conditions held but psi failed");
    out.status = SearchStatus::found;
    out.witness = pair;
    return out;
  }
  out.status = space <= budget ? SearchStatus::none : SearchStatus::budget_exhausted;
  if (out.status == SearchStatus::none) out.reason = "no (r, v) satisfies the transported conditions";
  return out;
}

CrossedIsoOutcome bicrossed_iso_check(const ExtendingDatum& d, const MatchedPair& mp,
                                      std::uint64_t budget) {
  {
    AxiomReport ar = check_axioms(d);
    if (!ar.ok()) throw AxiomViolation(std::move(ar), "extending datum is not valid");
    MatchedReport mr = matched_pair_check(mp);
    if (!mr.ok()) throw MatchedPairViolation(std::move(mr), "matched pair is not valid");
    if (!d.host().same_table(mp.group_h))
      throw InputError("datum host and matched-pair H must be the same group");
  }
  CrossedIsoOutcome out;
  const FiniteGroup& hg = d.host();
  const FiniteGroup& gg = mp.group_g;
  int n = hg.order(), m = d.m();
  if (gg.order() != m) {
    out.reason = "carrier sizes differ";
    return out;
  }
  int free = m - 1;
  std::uint64_t r_space = sat_pow(n, free);
  std::uint64_t space = sat_mul(sat_pow(m, free), r_space);
  std::uint64_t limit = std::min(space, budget);

  StabilizingPair pair;
  for (std::uint64_t c_idx = 0; c_idx < limit; ++c_idx) {
    ++out.nodes;
    decode_digits(c_idx / r_space, free, m, gg.identity(), pair.v);
    if (!pair.v_bijective(m)) {
      c_idx += r_space - 1 - (c_idx % r_space);
      continue;
    }
    // v must intertwine the right actions: v(s<h) = v(s) <' h.
    bool hset_iso = true;
    for (int s = 0; s < m && hset_iso; ++s)
      for (int h = 0; h < n && hset_iso; ++h)
        hset_iso = pair.v[d.ract(s, h)] == mp.act_right(pair.v[s], h);
    if (!hset_iso) {
      c_idx += r_space - 1 - (c_idx % r_space);
      continue;
    }
    decode_digits(c_idx % r_space, free, n, hg.identity(), pair.r);

    bool ok = true;
    for (int s = 0; s < m && ok; ++s)
      for (int h = 0; h < n && ok; ++h)
        ok = hg.mul(d.lact(s, h), pair.r[d.ract(s, h)]) ==
             hg.mul(pair.r[s], mp.act_left(pair.v[s], h));
    for (int s1 = 0; s1 < m && ok; ++s1)
      for (int s2 = 0; s2 < m && ok; ++s2) {
        ok = pair.v[d.star(s1, s2)] ==
             gg.mul(mp.act_right(pair.v[s1], pair.r[s2]), pair.v[s2]);
        if (!ok) break;
        int rhs = hg.mul(hg.mul(pair.r[s1], mp.act_left(pair.v[s1], pair.r[s2])),
                         hg.inv(pair.r[d.star(s1, s2)]));
        ok = d.f(s1, s2) == rhs;
      }
    if (!ok) continue;

    std::vector<int> t1 = unified_product_table(d);
    std::vector<int> t2 = bicrossed_product_table(mp);
    int size = n * m;
    std::vector<int> psi(size);
    std::vector<char> hit(size, 0);
    bool iso = true;
    for (int h = 0; h < n && iso; ++h)
      for (int s = 0; s < m; ++s) {
        int img = hg.mul(h, pair.r[s]) * m + pair.v[s];
        psi[h * m + s] = img;
        if (hit[img]) {
          iso = false;
          break;
        }
        hit[img] = 1;
      }
    for (int x = 0; x < size && iso; ++x)
      for (int y = 0; y < size && iso; ++y)
        iso = psi[t1[static_cast<std::size_t>(x) * size + y]] ==
              t2[static_cast<std::size_t>(psi[x]) * size + psi[y]];
    if (!iso) throw InternalInconsistency("bicrossed iso conditions held but psi failed");
    out.status = SearchStatus::found;
    out.witness = pair;
    return out;
  }
  out.status = space <= budget ? SearchStatus::none : SearchStatus::budget_exhausted;
  if (out.status == SearchStatus::none) out.reason = "no (r, v) satisfies the transported conditions";
  return out;
}

KuperbergOutcome kuperberg_check(const FiniteGroup& e, const std::vector<int>& h_members,
                                 const std::vector<int>& s_members,
                                 const std::vector<int>& t_members, std::uint64_t budget) {
  auto embed = [&](const std::vector<int>& members, const char* name) {
    try {
      return SubgroupEmbedding(e, members);
    } catch (const NotASubgroup& ex) {
      throw NotExactFactorization(std::string(name) + " is not a subgroup: " + ex.what());
    }
  };
  SubgroupEmbedding h = embed(h_members, "H");
  SubgroupEmbedding s = embed(s_members, "S");
  SubgroupEmbedding t = embed(t_members, "T");

  auto check_exact = [&](const SubgroupEmbedding& sub, const char* name) {
    if (h.size() * sub.size() != e.order())
      throw NotExactFactorization(std::string("|H||") + name + "| differs from |E|");
    for (int i = 0; i < sub.size(); ++i)
      if (sub.member(i) != e.identity() && h.contains(sub.member(i)))
        throw NotExactFactorization(std::string("H and ") + name +
                                    " intersect beyond the identity");
  };
  check_exact(s, "S");
  check_exact(t, "T");

  // Factorization maps: for x in {S,T}, x·h = (x>h)(x<h) with x>h in H.
  auto factor = [&](const SubgroupEmbedding& sub, int x, int hm, int& left, int& right) {
    // left = the unique element of H with left^-1 x h in sub
    int xh = e.mul(x, hm);
    for (int k = 0; k < h.size(); ++k) {
      int cand = h.member(k);
      int rest = e.mul(e.inv(cand), xh);
      if (sub.contains(rest)) {
        left = cand;
        right = rest;
        return;
      }
    }
    throw InternalInconsistency("exact factorization failed to factor an element");
  };

  KuperbergOutcome out;
  int m = s.size();
  int id_pos_s = s.position_of(e.identity());

  // Candidates per S member: elements of T in the same right H-coset.
  std::vector<std::vector<int>> candidates(m);
  for (int i = 0; i < m; ++i) {
    if (i == id_pos_s) {
      candidates[i] = {e.identity()};
      continue;
    }
    for (int j = 0; j < t.size(); ++j) {
      int cand = t.member(j);
      if (h.contains(e.mul(s.member(i), e.inv(cand)))) candidates[i].push_back(cand);
    }
  }

  std::vector<int> v(m, -1);
  std::vector<char> used(e.order(), 0);
  bool exhausted = false;

  auto verify = [&]() -> bool {
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = e.mul(s.member(i), e.inv(v[i]));  // p0ku by construction
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < h.size(); ++k) {
        int hm = h.member(k);
        int sl, sr, tl, tr;
        factor(s, s.member(i), hm, sl, sr);
        // p1ku: v(s<h) = v(s) <' h
        factor(t, v[i], hm, tl, tr);
        if (v[s.position_of(sr)] != tr) return false;
        // p2ku: (s>h) r(s<h) = r(s) (v(s) >' h)
        if (e.mul(sl, r[s.position_of(sr)]) != e.mul(r[i], tl)) return false;
      }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int prod = s.position_of(e.mul(s.member(i), s.member(j)));
        int tl, tr;
        factor(t, v[i], r[j], tl, tr);
        // p3ku: v(s1 s2) = (v(s1) <' r(s2)) v(s2)
        if (v[prod] != e.mul(tr, v[j])) return false;
        // p4ku: r(s1 s2) = r(s1) (v(s1) >' r(s2))
        if (r[prod] != e.mul(r[i], tl)) return false;
      }
    return true;
  };

  // Lexicographic backtracking over v in S member-position order.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;

  std::function<bool(int)> assign = [&](int idx) -> bool {
    if (exhausted) return false;
    if (idx == m) return verify();
    int i = order[idx];
    for (int cand : candidates[i]) {
      if (used[cand]) continue;
      if (++out.nodes > budget) {
        exhausted = true;
        return false;
      }
      v[i] = cand;
      used[cand] = 1;
      if (assign(idx + 1)) return true;
      used[cand] = 0;
      v[i] = -1;
    }
    return false;
  };

  if (assign(0)) {
    StabilizingPair witness;
    witness.v.resize(m);
    witness.r.resize(m);
    for (int i = 0; i < m; ++i) {
      witness.v[i] = t.position_of(v[i]);
      witness.r[i] = h.position_of(e.mul(s.member(i), e.inv(v[i])));
    }
    out.status = SearchStatus::found;
    out.witness = std::move(witness);
    return out;
  }
  out.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::none;
  return out;
}

UniversalCheck verify_universal_C(const ExtendingDatum& d, const UniversalCandidate& cand,
                                  std::uint64_t budget) {
  const FiniteGroup& hg = d.host();
  const FiniteGroup& gg = cand.group;
  int n = hg.order(), m = d.m();
  if (static_cast<int>(cand.u.size()) != n || static_cast<int>(cand.v.size()) != m)
    throw InputError("candidate maps have wrong sizes (u: H->G, v: S->G)");
  for (int x : cand.u)
    if (x < 0 || x >= gg.order()) throw InputError("u entry out of range");
  for (int x : cand.v)
    if (x < 0 || x >= gg.order()) throw InputError("v entry out of range");

  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = 0; h2 < n; ++h2)
      if (cand.u[hg.mul(h1, h2)] != gg.mul(cand.u[h1], cand.u[h2]))
        throw NotAnObjectC("u-homomorphism", {h1, h2},
                           "u is not a morphism of groups at (" + hg.label(h1) + "," +
                               hg.label(h2) + ")");
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2)
      if (gg.mul(cand.v[s1], cand.v[s2]) !=
          gg.mul(cand.u[d.f(s1, s2)], cand.v[d.star(s1, s2)]))
        throw NotAnObjectC("2.31", {s1, s2},
                           "v(s1)v(s2) = u(f(s1,s2)) v(s1*s2) fails at (s1,s2)=(" +
                               std::to_string(s1) + "," + std::to_string(s2) + ")");
  for (int s = 0; s < m; ++s)
    for (int h = 0; h < n; ++h)
      if (gg.mul(cand.v[s], cand.u[h]) !=
          gg.mul(cand.u[d.lact(s, h)], cand.v[d.ract(s, h)]))
        throw NotAnObjectC("2.32", {s, h},
                           "v(s)u(h) = u(s>h) v(s<h) fails at (s,h)=(" + std::to_string(s) +
                               "," + hg.label(h) + ")");

  UnifiedProduct u_prod = unified_product(d);
  int size = n * m;
  UniversalCheck out;
  out.induced.resize(size);
  for (int h = 0; h < n; ++h)
    for (int s = 0; s < m; ++s) out.induced[h * m + s] = gg.mul(cand.u[h], cand.v[s]);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (out.induced[u_prod.group.mul(x, y)] != gg.mul(out.induced[x], out.induced[y]))
        throw InternalInconsistency("induced phi is not a homomorphism");
  for (int h = 0; h < n; ++h)
    if (out.induced[u_prod.i_H(h)] != cand.u[h])
      throw InternalInconsistency("phi does not commute with i_H");
  for (int s = 0; s < m; ++s)
    if (out.induced[u_prod.i_S(s)] != cand.v[s])
      throw InternalInconsistency("phi does not commute with i_S");

  // Exhaustive uniqueness: every map commuting with (i_H, i_S) that is a
  // homomorphism must equal phi. The commuting constraints pin the codes in
  // the images of i_H and i_S; all other codes range over G.
  if (gg.order() <= 12) {
    std::vector<int> pinned(size, -1);
    for (int h = 0; h < n; ++h) pinned[u_prod.i_H(h)] = cand.u[h];
    for (int s = 0; s < m; ++s) pinned[u_prod.i_S(s)] = cand.v[s];
    std::vector<int> assign(size, -1);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int solutions = 0;
    std::function<void(int)> rec = [&](int code) {
      if (exhausted || solutions > 1) return;
      if (code == size) {
        ++solutions;
        return;
      }
      int lo = pinned[code] >= 0 ? pinned[code] : 0;
      int hi = pinned[code] >= 0 ? pinned[code] : gg.order() - 1;
      for (int val = lo; val <= hi; ++val) {
        if (++nodes > budget) {
          exhausted = true;
          return;
        }
        assign[code] = val;
        bool ok = true;
        for (int x = 0; x <= code && ok; ++x)
          for (int y = 0; y <= code && ok; ++y) {
            int p = u_prod.group.mul(x, y);
            if (p <= code) ok = assign[p] == gg.mul(assign[x], assign[y]);
          }
        if (ok) rec(code + 1);
        assign[code] = -1;
      }
    };
    rec(0);
    if (!exhausted) {
      if (solutions != 1)
        throw InternalInconsistency("uniqueness of the induced morphism failed");
      out.uniqueness = UniquenessMode::verified_exhaustive;
    }
  }
  return out;
}

UniversalCheck verify_universal_D(const ExtendingDatum& d, const UniversalCandidate& cand,
                                  std::uint64_t budget) {
  const FiniteGroup& hg = d.host();
  const FiniteGroup& gg = cand.group;
  int n = hg.order(), m = d.m();
  int q = gg.order();
  if (static_cast<int>(cand.u.size()) != q || static_cast<int>(cand.v.size()) != q)
    throw InputError("candidate maps have wrong sizes (u: G->H, v: G->S)");
  for (int x : cand.u)
    if (x < 0 || x >= n) throw InputError("u entry out of range");
  for (int x : cand.v)
    if (x < 0 || x >= m) throw InputError("v entry out of range");

  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int a = d.ract(cand.v[x], cand.u[y]);
      int expected_u = hg.mul(cand.u[x], hg.mul(d.lact(cand.v[x], cand.u[y]), d.f(a, cand.v[y])));
      if (cand.u[gg.mul(x, y)] != expected_u)
        throw NotAnObjectD("2.33", {x, y},
                           "u(xy) = u(x)(v(x)>u(y)) f(v(x)<u(y), v(y)) fails at (x,y)=(" +
                               gg.label(x) + "," + gg.label(y) + ")");
      if (cand.v[gg.mul(x, y)] != d.star(a, cand.v[y]))
        throw NotAnObjectD("2.34", {x, y},
                           "v(xy) = (v(x)<u(y)) * v(y) fails at (x,y)=(" + gg.label(x) + "," +
                               gg.label(y) + ")");
    }

  UnifiedProduct u_prod = unified_product(d);
  UniversalCheck out;
  out.induced.resize(q);
  for (int g = 0; g < q; ++g) out.induced[g] = u_prod.pair_code(cand.u[g], cand.v[g]);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      if (out.induced[gg.mul(x, y)] !=
          u_prod.group.mul(out.induced[x], out.induced[y]))
        throw InternalInconsistency("induced psi is not a homomorphism");
  for (int g = 0; g < q; ++g)
    if (u_prod.p_H(out.induced[g]) != cand.u[g] || u_prod.pi_S(out.induced[g]) != cand.v[g])
      throw InternalInconsistency("psi does not commute with the projections");

  // Exhaustive uniqueness: a commuting map must send g to a code with
  // H part u(g) and S part v(g); the pair coding leaves exactly one such
  // code, so the candidate space per element has size one and the scan
  // reduces to the homomorphism check already performed.
  if (q <= 12 && budget > 0) out.uniqueness = UniquenessMode::verified_exhaustive;
  return out;
}

}  // namespace uniprod
