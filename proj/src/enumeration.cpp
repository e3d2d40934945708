#include "uniprod/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "uniprod/classification.hpp"

namespace uniprod {

namespace {

// Enumerates all fillings of `slots` cells, each ranging over 0..base-1,
// with a per-filling visitor. Returns false when the budget ran out.
bool enumerate_fillings(int slots, int base, std::uint64_t& nodes, std::uint64_t budget,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> digits(slots, 0);
  while (true) {
    if (++nodes > budget) return false;
    visit(digits);
    int i = slots - 1;
    while (i >= 0 && digits[i] == base - 1) digits[i--] = 0;
    if (i < 0) return true;
    ++digits[i];
  }
}

}  // namespace

long double normalized_candidate_space(const FiniteGroup& host, int m) {
  int n = host.order();
  long double space = 1;
  space *= std::pow(static_cast<long double>(m), static_cast<long double>(m - 1) * (m - 1));
  space *= std::pow(static_cast<long double>(m), static_cast<long double>(m - 1) * (n - 1));
  space *= std::pow(static_cast<long double>(n), static_cast<long double>(m - 1) * (n - 1));
  space *= std::pow(static_cast<long double>(n), static_cast<long double>(m - 1) * (m - 1));
  return space;
}

void for_each_normalized_candidate(const FiniteGroup& host, int m,
                                   const std::function<void(const ExtendingDatum&)>& fn) {
  int n = host.order(), e = host.identity();
  std::vector<int> star(static_cast<std::size_t>(m) * m);
  std::vector<int> ract(static_cast<std::size_t>(m) * n);
  std::vector<int> lact(static_cast<std::size_t>(m) * n);
  std::vector<int> cocycle(static_cast<std::size_t>(m) * m, e);

  // Free cells exclude the normalized rows and columns.
  std::vector<std::pair<int, int>> star_cells, act_cells, f_cells;
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) star_cells.push_back({i, j}), f_cells.push_back({i, j});
  for (int i = 1; i < m; ++i)
    for (int h = 0; h < n; ++h)
      if (h != e) act_cells.push_back({i, h});

  auto reset_normalized = [&] {
    for (int s = 0; s < m; ++s) {
      star[static_cast<std::size_t>(s) * m] = s;
      star[s] = s;
      cocycle[static_cast<std::size_t>(s) * m] = e;
      cocycle[s] = e;
      for (int h = 0; h < n; ++h) {
        ract[static_cast<std::size_t>(s) * n + h] = s == 0 ? 0 : (h == e ? s : 0);
        lact[static_cast<std::size_t>(s) * n + h] = s == 0 ? h : (h == e ? e : 0);
      }
    }
  };
  reset_normalized();

  // Nested odometers over the four free regions, innermost varying fastest
  // in (star, ract, lact, f) significance order.
  std::function<void(int)> walk_f = [&](int idx) {
    if (idx == static_cast<int>(f_cells.size())) {
      fn(ExtendingDatum(host, PointedSet{m}, star, ract, lact, cocycle));
      return;
    }
    auto [i, j] = f_cells[idx];
    for (int v = 0; v < n; ++v) {
      cocycle[static_cast<std::size_t>(i) * m + j] = v;
      walk_f(idx + 1);
    }
    cocycle[static_cast<std::size_t>(i) * m + j] = e;
  };
  std::function<void(int)> walk_lact = [&](int idx) {
    if (idx == static_cast<int>(act_cells.size())) {
      walk_f(0);
      return;
    }
    auto [i, h] = act_cells[idx];
    for (int v = 0; v < n; ++v) {
      lact[static_cast<std::size_t>(i) * n + h] = v;
      walk_lact(idx + 1);
    }
    lact[static_cast<std::size_t>(i) * n + h] = 0;
  };
  std::function<void(int)> walk_ract = [&](int idx) {
    if (idx == static_cast<int>(act_cells.size())) {
      walk_lact(0);
      return;
    }
    auto [i, h] = act_cells[idx];
    for (int v = 0; v < m; ++v) {
      ract[static_cast<std::size_t>(i) * n + h] = v;
      walk_ract(idx + 1);
    }
    ract[static_cast<std::size_t>(i) * n + h] = 0;
  };
  std::function<void(int)> walk_star = [&](int idx) {
    if (idx == static_cast<int>(star_cells.size())) {
      walk_ract(0);
      return;
    }
    auto [i, j] = star_cells[idx];
    for (int v = 0; v < m; ++v) {
      star[static_cast<std::size_t>(i) * m + j] = v;
      walk_star(idx + 1);
    }
    star[static_cast<std::size_t>(i) * m + j] = 0;
  };
  walk_star(0);
}

EnumerationResult enumerate_extending_data(const EnumerationTask& task) {
  const FiniteGroup& host = task.host;
  int n = host.order(), m = task.m, e = host.identity();
  EnumerationResult result;
  result.search_space = normalized_candidate_space(host, m);

  std::uint64_t nodes = 0;
  const std::uint64_t budget = task.budget;
  bool truncated = false;

  auto trivial_ract = [&] {
    std::vector<int> t(static_cast<std::size_t>(m) * n);
    for (int s = 0; s < m; ++s)
      for (int h = 0; h < n; ++h) t[static_cast<std::size_t>(s) * n + h] = s;
    return t;
  };
  auto trivial_lact = [&] {
    std::vector<int> t(static_cast<std::size_t>(m) * n);
    for (int s = 0; s < m; ++s)
      for (int h = 0; h < n; ++h) t[static_cast<std::size_t>(s) * n + h] = h;
    return t;
  };

  // Stage 1: right actions (ES1 plus normalization).
  std::vector<std::vector<int>> ract_list;
  {
    auto accept = [&](const std::vector<int>& ract) {
      for (int s = 0; s < m; ++s)
        for (int h1 = 0; h1 < n; ++h1)
          for (int h2 = 0; h2 < n; ++h2)
            if (ract[static_cast<std::size_t>(s) * n + host.mul(h1, h2)] !=
                ract[static_cast<std::size_t>(ract[static_cast<std::size_t>(s) * n + h1]) * n + h2])
              return false;
      return true;
    };
    if (task.require_ract_trivial) {
      ract_list.push_back(trivial_ract());
    } else {
      int slots = (m - 1) * (n - 1);
      std::vector<int> ract(static_cast<std::size_t>(m) * n);
      for (int h = 0; h < n; ++h) ract[h] = 0;
      for (int s = 0; s < m; ++s) ract[static_cast<std::size_t>(s) * n + e] = s;
      bool done = enumerate_fillings(slots, m, nodes, budget, [&](const std::vector<int>& digits) {
        int k = 0;
        for (int s = 1; s < m; ++s)
          for (int h = 0; h < n; ++h)
            if (h != e) ract[static_cast<std::size_t>(s) * n + h] = digits[k++];
        if (accept(ract)) ract_list.push_back(ract);
      });
      truncated |= !done;
    }
  }

  // Stage 2: left actions compatible with a right action (ES3).
  auto lact_candidates = [&](const std::vector<int>& ract) {
    std::vector<std::vector<int>> out;
    auto accept = [&](const std::vector<int>& lact) {
      for (int s = 0; s < m; ++s)
        for (int h1 = 0; h1 < n; ++h1)
          for (int h2 = 0; h2 < n; ++h2) {
            int lhs = lact[static_cast<std::size_t>(s) * n + host.mul(h1, h2)];
            int sa = ract[static_cast<std::size_t>(s) * n + h1];
            int rhs = host.mul(lact[static_cast<std::size_t>(s) * n + h1],
                               lact[static_cast<std::size_t>(sa) * n + h2]);
            if (lhs != rhs) return false;
          }
      return true;
    };
    if (task.require_lact_trivial) {
      auto t = trivial_lact();
      if (accept(t)) out.push_back(std::move(t));
      return out;
    }
    int slots = (m - 1) * (n - 1);
    std::vector<int> lact(static_cast<std::size_t>(m) * n);
    for (int h = 0; h < n; ++h) lact[h] = h;
    for (int s = 0; s < m; ++s) lact[static_cast<std::size_t>(s) * n + e] = e;
    bool done = enumerate_fillings(slots, n, nodes, budget, [&](const std::vector<int>& digits) {
      int k = 0;
      for (int s = 1; s < m; ++s)
        for (int h = 0; h < n; ++h)
          if (h != e) lact[static_cast<std::size_t>(s) * n + h] = digits[k++];
      if (accept(lact)) out.push_back(lact);
    });
    truncated |= !done;
    return out;
  };

  // Stage 3: star tables (ES7 existence plus the star-only part of ES4).
  auto star_candidates = [&](const std::vector<int>& ract, const std::vector<int>& lact) {
    std::vector<std::vector<int>> out;
    auto ract_at = [&](int s, int h) { return ract[static_cast<std::size_t>(s) * n + h]; };
    auto lact_at = [&](int s, int h) { return lact[static_cast<std::size_t>(s) * n + h]; };
    auto accept = [&](const std::vector<int>& star) {
      auto star_at = [&](int a, int b) { return star[static_cast<std::size_t>(a) * m + b]; };
      for (int s = 1; s < m; ++s) {
        bool left_inv = false;
        for (int t = 0; t < m; ++t) left_inv |= star_at(t, s) == 0;
        if (!left_inv) return false;
      }
      for (int s1 = 0; s1 < m; ++s1)
        for (int s2 = 0; s2 < m; ++s2)
          for (int h = 0; h < n; ++h)
            if (ract_at(star_at(s1, s2), h) !=
                star_at(ract_at(s1, lact_at(s2, h)), ract_at(s2, h)))
              return false;
      return true;
    };
    int slots = (m - 1) * (m - 1);
    std::vector<int> star(static_cast<std::size_t>(m) * m);
    for (int s = 0; s < m; ++s) {
      star[s] = s;
      star[static_cast<std::size_t>(s) * m] = s;
    }
    bool done = enumerate_fillings(slots, m, nodes, budget, [&](const std::vector<int>& digits) {
      int k = 0;
      for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) star[static_cast<std::size_t>(i) * m + j] = digits[k++];
      if (accept(star)) out.push_back(star);
    });
    truncated |= !done;
    return out;
  };

  // Stage 4: cocycles (remaining axioms via the full check).
  auto cocycle_scan = [&](const std::vector<int>& ract, const std::vector<int>& lact,
                          const std::vector<int>& star) {
    std::vector<int> cocycle(static_cast<std::size_t>(m) * m, e);
    if (task.require_cocycle_trivial) {
      if (++nodes > budget) {
        truncated = true;
        return;
      }
      ExtendingDatum d(host, PointedSet{m}, star, ract, lact, cocycle);
      if (check_axioms(d).ok()) result.data.push_back(std::move(d));
      return;
    }
    int slots = (m - 1) * (m - 1);
    bool done = enumerate_fillings(slots, n, nodes, budget, [&](const std::vector<int>& digits) {
      int k = 0;
      for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) cocycle[static_cast<std::size_t>(i) * m + j] = digits[k++];
      ExtendingDatum d(host, PointedSet{m}, star, ract, lact, cocycle);
      if (check_axioms(d).ok()) result.data.push_back(std::move(d));
    });
    truncated |= !done;
  };

  for (const auto& ract : ract_list) {
    if (truncated) break;
    for (const auto& lact : lact_candidates(ract)) {
      if (truncated) break;
      for (const auto& star : star_candidates(ract, lact)) {
        if (truncated) break;
        cocycle_scan(ract, lact, star);
      }
    }
  }

  result.nodes = nodes;
  result.complete = !truncated;
  if (truncated)
    result.checkpoint = "budget exhausted after " + std::to_string(nodes) + " candidates; " +
                        std::to_string(result.data.size()) + " data emitted so far";
  std::sort(result.data.begin(), result.data.end(),
            [](const ExtendingDatum& a, const ExtendingDatum& b) {
              return a.encoding() < b.encoding();
            });
  return result;
}

namespace {

// Backtracking completion of an N*N Cayley table with fixed cells.
struct TableCompleter {
  int n;  // fixed block size
  int size;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> table;            // -1 = empty
  std::vector<std::uint32_t> row_used, col_used;
  std::vector<std::vector<int>> pos_in_row;  // [value][row] -> col or -1
  std::vector<std::vector<int>> pos_in_col;  // [value][col] -> row or -1
  std::vector<std::vector<int>>* out;
  int first_cell = -1;
  int shard_value = -1;  // when >= 0, the first free cell is pinned to this value

  int at(int x, int y) const { return table[static_cast<std::size_t>(x) * size + y]; }
  void put(int x, int y, int v) {
    table[static_cast<std::size_t>(x) * size + y] = v;
    if (v >= 0) {
      row_used[x] |= 1u << v;
      col_used[y] |= 1u << v;
      pos_in_row[v][x] = y;
      pos_in_col[v][y] = x;
    }
  }
  void erase(int x, int y) {
    int v = at(x, y);
    table[static_cast<std::size_t>(x) * size + y] = -1;
    row_used[x] &= ~(1u << v);
    col_used[y] &= ~(1u << v);
    pos_in_row[v][x] = -1;
    pos_in_col[v][y] = -1;
  }

  bool triple_ok(int a, int b, int c) const {
    int ab = at(a, b);
    int bc = at(b, c);
    if (ab < 0 || bc < 0) return true;
    int lhs = at(ab, c);
    int rhs = at(a, bc);
    if (lhs < 0 || rhs < 0) return true;
    return lhs == rhs;
  }

  // All triples that gained their last needed cell from (x, y).
  bool assoc_ok(int x, int y) const {
    for (int c = 0; c < size; ++c)
      if (!triple_ok(x, y, c)) return false;
    for (int a = 0; a < size; ++a)
      if (!triple_ok(a, x, y)) return false;
    int v = at(x, y);
    (void)v;
    for (int b = 0; b < size; ++b) {
      int a = pos_in_col[x][b];  // t[a][b] = x, check (a, b, y)
      if (a >= 0 && !triple_ok(a, b, y)) return false;
      int c = pos_in_row[y][b];  // t[b][c] = y, check (x, b, c)
      if (c >= 0 && !triple_ok(x, b, c)) return false;
    }
    return true;
  }

  bool pick_cell(int& bx, int& by) const {
    int best = size + 1;
    bx = -1;
    for (int x = 0; x < size && best > 1; ++x)
      for (int y = 0; y < size && best > 1; ++y) {
        if (at(x, y) >= 0) continue;
        std::uint32_t free_mask = ~(row_used[x] | col_used[y]) & ((1u << size) - 1);
        int count = __builtin_popcount(free_mask);
        if (count < best) {
          best = count;
          bx = x;
          by = y;
        }
      }
    return bx >= 0;
  }

  void search() {
    if (exhausted) return;
    int x, y;
    if (!pick_cell(x, y)) {
      out->push_back(table);
      return;
    }
    std::uint32_t free_mask = ~(row_used[x] | col_used[y]) & ((1u << size) - 1);
    bool pin = shard_value >= 0 && x * size + y == first_cell;
    while (free_mask) {
      int v = __builtin_ctz(free_mask);
      free_mask &= free_mask - 1;
      if (pin && v != shard_value) continue;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      put(x, y, v);
      if (assoc_ok(x, y)) search();
      erase(x, y);
      if (exhausted) return;
    }
  }
};

std::vector<std::vector<int>> complete_tables(const FiniteGroup& h, int total_order,
                                              std::uint64_t budget, int threads, bool& complete,
                                              std::uint64_t& nodes_out) {
  int n = h.order();
  int size = total_order;
  if (size > 31) throw InputError("oracle supports total order up to 31");
  if (size % n != 0) throw InputError("total order must be a multiple of |H|");
  int e = h.identity();

  TableCompleter base;
  base.n = n;
  base.size = size;
  base.budget = budget;
  base.table.assign(static_cast<std::size_t>(size) * size, -1);
  base.row_used.assign(size, 0);
  base.col_used.assign(size, 0);
  base.pos_in_row.assign(size, std::vector<int>(size, -1));
  base.pos_in_col.assign(size, std::vector<int>(size, -1));

  // H's block verbatim, and the identity row/column (the completed group's
  // identity must be H's identity, the unique idempotent).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) base.put(x, y, h.mul(x, y));
  for (int x = n; x < size; ++x) {
    base.put(e, x, x);
    base.put(x, e, x);
  }

  int first_cell = -1;
  for (int c = 0; c < size * size && first_cell < 0; ++c)
    if (base.table[c] < 0) first_cell = c;

  if (first_cell < 0) {
    complete = true;
    nodes_out = 0;
    std::vector<std::vector<int>> only{base.table};
    return only;
  }

  threads = std::max(1, threads);
  // Shard by the first free cell's value; each shard runs independently and
  // results merge in value order.
  std::vector<std::vector<std::vector<int>>> shard_results(size);
  std::vector<TableCompleter> shards;
  for (int v = 0; v < size; ++v) {
    TableCompleter c = base;
    c.first_cell = first_cell;
    c.shard_value = v;
    c.budget = budget / size + 1;
    shards.push_back(std::move(c));
  }
  auto run_range = [&](int begin, int end) {
    for (int v = begin; v < end; ++v) {
      shards[v].out = &shard_results[v];
      shards[v].search();
    }
  };
  if (threads == 1) {
    run_range(0, size);
  } else {
    std::vector<std::thread> pool;
    int chunk = (size + threads - 1) / threads;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(run_range, std::min(w * chunk, size), std::min((w + 1) * chunk, size));
    for (auto& t : pool) t.join();
  }

  complete = true;
  nodes_out = 0;
  std::vector<std::vector<int>> tables;
  for (int v = 0; v < size; ++v) {
    complete &= !shards[v].exhausted;
    nodes_out += shards[v].nodes;
    for (auto& t : shard_results[v]) tables.push_back(std::move(t));
  }
  std::sort(tables.begin(), tables.end());
  return tables;
}

std::vector<int> table_order_spectrum(const std::vector<int>& t, int size, int identity) {
  std::vector<int> spectrum(size + 1, 0);
  for (int x = 0; x < size; ++x) {
    int k = 1, acc = x;
    while (acc != identity) {
      acc = t[static_cast<std::size_t>(acc) * size + x];
      ++k;
    }
    ++spectrum[k];
  }
  return spectrum;
}

}  // namespace

std::optional<std::vector<int>> stabilizing_table_iso(const std::vector<int>& t1,
                                                      const std::vector<int>& t2, int size,
                                                      int fixed) {
  std::vector<int> map(size, -1);
  std::vector<char> used(size, 0);
  for (int i = 0; i < fixed; ++i) {
    map[i] = i;
    used[i] = 1;
  }
  auto at = [size](const std::vector<int>& t, int x, int y) {
    return t[static_cast<std::size_t>(x) * size + y];
  };

  // Element orders must match pointwise under any candidate assignment.
  int id1 = -1, id2 = -1;
  for (int x = 0; x < size; ++x) {
    bool idr1 = true, idr2 = true;
    for (int y = 0; y < size; ++y) {
      idr1 &= at(t1, x, y) == y;
      idr2 &= at(t2, x, y) == y;
    }
    if (idr1) id1 = x;
    if (idr2) id2 = x;
  }
  if (id1 < 0 || id2 < 0) return std::nullopt;
  std::vector<int> ord1(size), ord2(size);
  for (int x = 0; x < size; ++x) {
    int k = 1, acc = x;
    while (acc != id1) acc = at(t1, acc, x), ++k;
    ord1[x] = k;
    k = 1, acc = x;
    while (acc != id2) acc = at(t2, acc, x), ++k;
    ord2[x] = k;
  }

  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x == size) return true;
    if (map[x] >= 0) return assign(x + 1);
    for (int cand = 0; cand < size; ++cand) {
      if (used[cand] || ord1[x] != ord2[cand]) continue;
      map[x] = cand;
      used[cand] = 1;
      bool ok = true;
      for (int a = 0; a <= x && ok; ++a) {
        if (map[a] < 0) continue;
        for (int b = 0; b <= x && ok; ++b) {
          if (map[b] < 0) continue;
          int p1 = at(t1, a, b);
          if (map[p1] >= 0) ok = map[p1] == at(t2, map[a], map[b]);
          int p1b = at(t1, b, a);
          if (ok && map[p1b] >= 0) ok = map[p1b] == at(t2, map[b], map[a]);
        }
      }
      if (ok && assign(x + 1)) return true;
      map[x] = -1;
      used[cand] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (map[at(t1, a, b)] != at(t2, map[a], map[b]))
        throw InternalInconsistency("table isomorphism verification failed");
  return map;
}

OracleResult oracle_group_structures(const FiniteGroup& h, int total_order, std::uint64_t budget,
                                     int threads) {
  OracleResult result;
  result.tables = complete_tables(h, total_order, budget, threads, result.complete, result.nodes);

  int size = total_order;
  int n = h.order();
  int identity = h.identity();
  std::vector<std::vector<int>> spectra;
  spectra.reserve(result.tables.size());
  for (const auto& t : result.tables) spectra.push_back(table_order_spectrum(t, size, identity));

  result.class_of.assign(result.tables.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < result.tables.size(); ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (spectra[i] != spectra[reps[k]]) continue;
      if (stabilizing_table_iso(result.tables[i], result.tables[reps[k]], size, n)) {
        result.class_of[i] = static_cast<int>(k);
        break;
      }
    }
    if (result.class_of[i] < 0) {
      result.class_of[i] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
      result.classes.emplace_back();
    }
    result.classes[result.class_of[i]].push_back(static_cast<int>(i));
  }
  return result;
}

PrimaintReport cross_validate_primaint(const FiniteGroup& h, int m, std::uint64_t budget,
                                       int threads) {
  PrimaintReport report;
  int n = h.order();
  int size = n * m;

  EnumerationTask task;
  task.host = h;
  task.m = m;
  task.budget = budget;
  task.threads = threads;
  EnumerationResult data = enumerate_extending_data(task);
  report.datum_count = static_cast<int>(data.data.size());
  report.complete = data.complete;

  EquivalenceClassSet k2 = k2_classes(data.data);
  report.k2_count = static_cast<int>(k2.classes.size());
  report.complete &= k2.complete;

  OracleResult oracle = oracle_group_structures(h, size, budget, threads);
  report.oracle_table_count = static_cast<int>(oracle.tables.size());
  report.oracle_class_count = static_cast<int>(oracle.classes.size());
  report.complete &= oracle.complete;

  report.counts_agree = report.k2_count == report.oracle_class_count;

  // Surjectivity: transport each oracle table into the pair coding over an
  // H-fixing relabeling and look for a stabilizing iso from some datum.
  // Pair codes: H sits at (h, 0) = h*m; the oracle fixes H at 0..n-1.
  std::vector<int> relabel(size);  // oracle index -> pair code
  {
    std::vector<char> taken(size, 0);
    for (int x = 0; x < n; ++x) {
      relabel[x] = x * m;
      taken[x * m] = 1;
    }
    int next = 0;
    for (int x = n; x < size; ++x) {
      while (taken[next]) ++next;
      relabel[x] = next;
      taken[next] = 1;
    }
  }
  std::vector<std::vector<int>> datum_tables;
  datum_tables.reserve(data.data.size());
  for (const auto& d : data.data) datum_tables.push_back(unified_product_table(d));

  report.surjective = true;
  for (std::size_t t = 0; t < oracle.tables.size(); ++t) {
    std::vector<int> transported(static_cast<std::size_t>(size) * size);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        transported[static_cast<std::size_t>(relabel[x]) * size + relabel[y]] =
            relabel[oracle.tables[t][static_cast<std::size_t>(x) * size + y]];
    bool reached = false;
    for (const auto& dt : datum_tables) {
      // Stabilizing here means fixing the H image (h,0) pointwise; compress
      // the pair coding so those codes are 0..n-1 and reuse the searcher.
      std::vector<int> shuffle(size);
      int next = n;
      for (int code = 0; code < size; ++code)
        shuffle[code] = code % m == 0 ? code / m : next++;
      auto shuffled = [&](const std::vector<int>& src) {
        std::vector<int> out(static_cast<std::size_t>(size) * size);
        for (int x = 0; x < size; ++x)
          for (int y = 0; y < size; ++y)
            out[static_cast<std::size_t>(shuffle[x]) * size + shuffle[y]] =
                shuffle[src[static_cast<std::size_t>(x) * size + y]];
        return out;
      };
      if (stabilizing_table_iso(shuffled(dt), shuffled(transported), size, n)) {
        reached = true;
        break;
      }
    }
    if (!reached) {
      report.surjective = false;
      report.unreached_tables.push_back(static_cast<int>(t));
    }
  }
  return report;
}

std::vector<Transversal> all_transversals(const FiniteGroup& e, const SubgroupEmbedding& h,
                                          std::uint64_t max_count) {
  Transversal base = right_transversal(e, h);
  int cosets = base.size();
  std::vector<std::vector<int>> choices(cosets);
  for (int x = 0; x < e.order(); ++x) choices[base.coset_of(x)].push_back(x);

  std::uint64_t count = 1;
  for (int c = 1; c < cosets; ++c) {
    count *= choices[c].size();
    if (count > max_count)
      throw InputError("transversal count exceeds the cap; use sampling instead");
  }

  std::vector<Transversal> out;
  std::vector<int> reps(cosets);
  reps[0] = e.identity();
  std::function<void(int)> walk = [&](int c) {
    if (c == cosets) {
      out.push_back(Transversal(e, h, reps));
      return;
    }
    for (int x : choices[c]) {
      reps[c] = x;
      walk(c + 1);
    }
  };
  walk(1);
  return out;
}

SurveyStats survey_transversals(const FiniteGroup& e, const SubgroupEmbedding& h,
                                const SurveyPolicy& policy) {
  SurveyStats stats;
  auto visit = [&](const Transversal& gamma) {
    ++stats.samples;
    Retraction r = retraction_from_transversal(e, h, gamma);
    try {
      ExtendingDatum d = extract_datum(r);
      ++stats.axioms_pass;
      RecognizeFlags flags = recognize(d);
      stats.crossed += flags.is_crossed;
      stats.bicrossed += flags.is_bicrossed;
      stats.twisted += flags.is_twisted;
      stats.direct += flags.is_direct;
    } catch (const InternalInconsistency& ex) {
      stats.failures.push_back(ex.what());
    }
    std::vector<int> fiber = r.fiber;
    stats.fiber_subgroup += is_subgroup(e, fiber) ? 1 : 0;
  };

  if (policy.kind == SurveyPolicy::Kind::all) {
    for (const auto& gamma : all_transversals(e, h)) visit(gamma);
  } else {
    for (int i = 0; i < policy.samples; ++i)
      visit(right_transversal(e, h, TransversalSelector::random(policy.seed + i)));
  }
  return stats;
}

}  // namespace uniprod
