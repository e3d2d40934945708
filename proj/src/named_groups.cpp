#include "uniprod/named_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace uniprod {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& x, const Perm& y) {
  Perm out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = x[y[p]];
  return out;
}

bool is_even(const Perm& p) {
  int transpositions = 0;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      out += static_cast<char>('0' + j);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

FiniteGroup group_from_perms(std::vector<Perm> perms) {
  std::sort(perms.begin(), perms.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int n = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  int identity = -1;
  for (int i = 0; i < n; ++i) {
    labels.push_back(cycle_label(perms[i]));
    bool id = true;
    for (std::size_t p = 0; p < perms[i].size(); ++p) id &= perms[i][p] == static_cast<int>(p);
    if (id) identity = i;
    for (int j = 0; j < n; ++j) {
      auto it = index.find(compose(perms[i], perms[j]));
      if (it == index.end()) throw InputError("permutation set is not closed");
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  return FiniteGroup(n, std::move(table), identity, std::move(labels));
}

std::vector<Perm> all_perms(int points, bool even_only) {
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> perms;
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > 1024) throw InputError("cyclic group order must be in 1..1024");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup klein_four() {
  // Z2 x Z2 with the customary labels.
  std::vector<int> table = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  return FiniteGroup(4, std::move(table), 0, {"e", "a", "b", "ab"});
}

FiniteGroup symmetric_group(int points) {
  if (points < 1 || points > 6) throw InputError("symmetric group supported for 1..6 points");
  return group_from_perms(all_perms(points, false));
}

FiniteGroup alternating_group(int points) {
  if (points < 1 || points > 6) throw InputError("alternating group supported for 1..6 points");
  return group_from_perms(all_perms(points, true));
}

FiniteGroup dihedral_square() {
  // Symmetries of the square as permutations of its corners.
  Perm rotation = {1, 2, 3, 0};
  Perm reflection = {1, 0, 3, 2};
  std::vector<Perm> perms;
  Perm r = {0, 1, 2, 3};
  for (int i = 0; i < 4; ++i) {
    perms.push_back(r);
    perms.push_back(compose(r, reflection));
    r = compose(rotation, r);
  }
  return group_from_perms(perms);
}

FiniteGroup named_group(const std::string& name) {
  if (name == "V4") return klein_four();
  if (name == "D4") return dihedral_square();
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A') &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int points = std::stoi(name.substr(1));
    if (name[0] == 'S' && points >= 1 && points <= 6) return symmetric_group(points);
    if (name[0] == 'A' && points >= 1 && points <= 6) return alternating_group(points);
  }
  if (name.size() >= 2 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return cyclic_group(std::stoi(name.substr(1)));
  throw InputError("unknown group name: " + name +
                   " (expected Z<n>, V4, D4, S2..S6 or A3..A6)");
}

}  // namespace uniprod
