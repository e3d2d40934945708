#include "uniprod/special_products.hpp"

#include <algorithm>

namespace uniprod {

namespace {

constexpr std::uint64_t kCap = 8;

template <typename Witness>
struct WitnessSink {
  std::vector<Witness>& out;
  std::uint64_t& total;
  std::uint64_t per_condition = 0;
  std::string condition;

  void start(std::string cond) {
    condition = std::move(cond);
    per_condition = 0;
  }
  void hit(std::array<int, 3> args, int lhs, int rhs) {
    ++total;
    if (++per_condition <= kCap) out.push_back({condition, args, lhs, rhs});
  }
};

}  // namespace

CrossedReport crossed_system_check(const CrossedSystem& c) {
  const FiniteGroup& hg = c.group_h;
  const FiniteGroup& gg = c.group_g;
  int n = hg.order(), q = gg.order();
  if (c.action.size() != static_cast<std::size_t>(q) * n || c.cocycle.size() != static_cast<std::size_t>(q) * q)
    throw InputError("crossed system table sizes do not match the groups");
  for (int v : c.action)
    if (v < 0 || v >= n) throw InputError("action entry out of range");
  for (int v : c.cocycle)
    if (v < 0 || v >= n) throw InputError("cocycle entry out of range");

  CrossedReport report;
  WitnessSink<CrossedWitness> sink{report.witnesses, report.total};

  // Each alpha(g) must be an automorphism of H.
  sink.start("automorphism");
  for (int g = 0; g < q; ++g) {
    std::vector<char> image(n, 0);
    bool bijective = true;
    for (int h = 0; h < n; ++h) {
      int v = c.act(g, h);
      if (image[v]) bijective = false;
      image[v] = 1;
    }
    if (!bijective) {
      sink.hit({g, -1, -1}, -1, -1);
      continue;
    }
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        int lhs = c.act(g, hg.mul(h1, h2));
        int rhs = hg.mul(c.act(g, h1), c.act(g, h2));
        if (lhs != rhs) sink.hit({g, h1, h2}, lhs, rhs);
      }
  }

  sink.start("WA");
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int h = 0; h < n; ++h) {
        int lhs = c.act(g1, c.act(g2, h));
        int fg = c.f(g1, g2);
        int rhs = hg.mul(hg.mul(fg, c.act(gg.mul(g1, g2), h)), hg.inv(fg));
        if (lhs != rhs) sink.hit({g1, g2, h}, lhs, rhs);
      }

  sink.start("CC");
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int g3 = 0; g3 < q; ++g3) {
        int lhs = hg.mul(c.f(g1, g2), c.f(gg.mul(g1, g2), g3));
        int rhs = hg.mul(c.act(g1, c.f(g2, g3)), c.f(g1, gg.mul(g2, g3)));
        if (lhs != rhs) sink.hit({g1, g2, g3}, lhs, rhs);
      }

  return report;
}

std::vector<int> crossed_product_table(const CrossedSystem& c) {
  const FiniteGroup& hg = c.group_h;
  const FiniteGroup& gg = c.group_g;
  int n = hg.order(), q = gg.order(), size = n * q;
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int h1 = 0; h1 < n; ++h1)
    for (int g1 = 0; g1 < q; ++g1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int g2 = 0; g2 < q; ++g2) {
          int h = hg.mul(h1, hg.mul(c.act(g1, h2), c.f(g1, g2)));
          table[static_cast<std::size_t>(h1 * q + g1) * size + (h2 * q + g2)] =
              h * q + gg.mul(g1, g2);
        }
  return table;
}

FiniteGroup crossed_product(const CrossedSystem& c) {
  CrossedReport report = crossed_system_check(c);
  if (!report.ok())
    throw CrossedAxiomViolation(std::move(report), "crossed system compatibilities fail");
  int n = c.group_h.order(), q = c.group_g.order(), size = n * q;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < q; ++g)
      labels.push_back("(" + c.group_h.label(h) + "," + c.group_g.label(g) + ")");
  int eg = c.group_g.identity();
  int unit = c.group_h.inv(c.f(eg, eg)) * q + eg;
  return FiniteGroup(size, crossed_product_table(c), unit, std::move(labels));
}

MatchedReport matched_pair_check(const MatchedPair& mp) {
  const FiniteGroup& hg = mp.group_h;
  const FiniteGroup& gg = mp.group_g;
  int n = hg.order(), q = gg.order();
  if (mp.lact.size() != static_cast<std::size_t>(q) * n || mp.ract.size() != static_cast<std::size_t>(q) * n)
    throw InputError("matched pair table sizes do not match the groups");
  for (int v : mp.lact)
    if (v < 0 || v >= n) throw InputError("left action entry out of range");
  for (int v : mp.ract)
    if (v < 0 || v >= q) throw InputError("right action entry out of range");

  MatchedReport report;
  WitnessSink<MatchedWitness> sink{report.witnesses, report.total};

  sink.start("left-action");
  for (int h = 0; h < n; ++h) {
    int lhs = mp.act_left(gg.identity(), h);
    if (lhs != h) sink.hit({gg.identity(), h, -1}, lhs, h);
  }
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int h = 0; h < n; ++h) {
        int lhs = mp.act_left(gg.mul(g1, g2), h);
        int rhs = mp.act_left(g1, mp.act_left(g2, h));
        if (lhs != rhs) sink.hit({g1, g2, h}, lhs, rhs);
      }

  sink.start("right-action");
  for (int g = 0; g < q; ++g) {
    int lhs = mp.act_right(g, hg.identity());
    if (lhs != g) sink.hit({g, hg.identity(), -1}, lhs, g);
  }
  for (int g = 0; g < q; ++g)
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        int lhs = mp.act_right(g, hg.mul(h1, h2));
        int rhs = mp.act_right(mp.act_right(g, h1), h2);
        if (lhs != rhs) sink.hit({g, h1, h2}, lhs, rhs);
      }

  sink.start("compat-left");  // g>(h1 h2) = (g>h1) ((g<h1)>h2)
  for (int g = 0; g < q; ++g)
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        int lhs = mp.act_left(g, hg.mul(h1, h2));
        int rhs = hg.mul(mp.act_left(g, h1), mp.act_left(mp.act_right(g, h1), h2));
        if (lhs != rhs) sink.hit({g, h1, h2}, lhs, rhs);
      }

  sink.start("compat-right");  // (g1 g2)<h = (g1<(g2>h)) (g2<h)
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int h = 0; h < n; ++h) {
        int lhs = mp.act_right(gg.mul(g1, g2), h);
        int rhs = gg.mul(mp.act_right(g1, mp.act_left(g2, h)), mp.act_right(g2, h));
        if (lhs != rhs) sink.hit({g1, g2, h}, lhs, rhs);
      }

  return report;
}

std::vector<int> bicrossed_product_table(const MatchedPair& mp) {
  const FiniteGroup& hg = mp.group_h;
  const FiniteGroup& gg = mp.group_g;
  int n = hg.order(), q = gg.order(), size = n * q;
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int h1 = 0; h1 < n; ++h1)
    for (int g1 = 0; g1 < q; ++g1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int g2 = 0; g2 < q; ++g2) {
          int h = hg.mul(h1, mp.act_left(g1, h2));
          int g = gg.mul(mp.act_right(g1, h2), g2);
          table[static_cast<std::size_t>(h1 * q + g1) * size + (h2 * q + g2)] = h * q + g;
        }
  return table;
}

FiniteGroup bicrossed_product(const MatchedPair& mp) {
  MatchedReport report = matched_pair_check(mp);
  if (!report.ok())
    throw MatchedPairViolation(std::move(report), "matched pair compatibilities fail");
  int n = mp.group_h.order(), q = mp.group_g.order(), size = n * q;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < q; ++g)
      labels.push_back("(" + mp.group_h.label(h) + "," + mp.group_g.label(g) + ")");
  int unit = mp.group_h.identity() * q + mp.group_g.identity();
  return FiniteGroup(size, bicrossed_product_table(mp), unit, std::move(labels));
}

namespace {

void require_pointed_carrier(const FiniteGroup& g) {
  if (g.identity() != 0)
    throw InputError(
        "carrier group must have identity index 0 so the pair coding matches the lift");
}

}  // namespace

ExtendingDatum lift_crossed(const CrossedSystem& c) {
  CrossedReport report = crossed_system_check(c);
  if (!report.ok())
    throw CrossedAxiomViolation(std::move(report), "crossed system compatibilities fail");
  if (!c.normalized())
    throw InputError("only normalized crossed systems (f(1,1)=1) lift to extending data");
  require_pointed_carrier(c.group_g);
  int n = c.group_h.order(), m = c.group_g.order();
  std::vector<int> ract(static_cast<std::size_t>(m) * n);
  std::vector<int> lact(static_cast<std::size_t>(m) * n);
  for (int s = 0; s < m; ++s)
    for (int h = 0; h < n; ++h) {
      ract[static_cast<std::size_t>(s) * n + h] = s;
      lact[static_cast<std::size_t>(s) * n + h] = c.act(s, h);
    }
  return ExtendingDatum(c.group_h, PointedSet{m}, c.group_g.table(), std::move(ract),
                        std::move(lact), c.cocycle);
}

ExtendingDatum lift_matched(const MatchedPair& mp) {
  MatchedReport report = matched_pair_check(mp);
  if (!report.ok())
    throw MatchedPairViolation(std::move(report), "matched pair compatibilities fail");
  require_pointed_carrier(mp.group_g);
  int n = mp.group_h.order(), m = mp.group_g.order(), e = mp.group_h.identity();
  std::vector<int> cocycle(static_cast<std::size_t>(m) * m, e);
  return ExtendingDatum(mp.group_h, PointedSet{m}, mp.group_g.table(), mp.ract, mp.lact,
                        std::move(cocycle));
}

ExtendingDatum lift_twisted(const FiniteGroup& host, int m, const std::vector<int>& ract,
                            const std::vector<int>& cocycle, const std::vector<int>& star) {
  int n = host.order();
  std::vector<int> lact(static_cast<std::size_t>(m) * n);
  for (int s = 0; s < m; ++s)
    for (int h = 0; h < n; ++h) lact[static_cast<std::size_t>(s) * n + h] = h;
  ExtendingDatum d(host, PointedSet{m}, star, ract, std::move(lact), cocycle);
  AxiomReport report = check_axioms(d);
  if (!report.ok())
    throw AxiomViolation(std::move(report), "twisted data fail the compatibility conditions");
  return d;
}

std::vector<int> twisted_product_table(const FiniteGroup& host, int m,
                                       const std::vector<int>& ract,
                                       const std::vector<int>& cocycle,
                                       const std::vector<int>& star) {
  int n = host.order(), size = n * m;
  auto ract_at = [&](int s, int h) { return ract[static_cast<std::size_t>(s) * n + h]; };
  auto f_at = [&](int s1, int s2) { return cocycle[static_cast<std::size_t>(s1) * m + s2]; };
  auto star_at = [&](int s1, int s2) { return star[static_cast<std::size_t>(s1) * m + s2]; };
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int h1 = 0; h1 < n; ++h1)
    for (int s1 = 0; s1 < m; ++s1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int s2 = 0; s2 < m; ++s2) {
          int u = ract_at(s1, h2);
          int h = host.mul(host.mul(h1, h2), f_at(u, s2));
          table[static_cast<std::size_t>(h1 * m + s1) * size + (h2 * m + s2)] =
              h * m + star_at(u, s2);
        }
  return table;
}

ExtendingDatum from_transition_map(const FiniteGroup& host, int m, const std::vector<int>& star,
                                   const std::vector<int>& ract, const std::vector<int>& gamma) {
  int n = host.order(), e = host.identity();
  if (static_cast<int>(gamma.size()) != m) throw InputError("gamma must have one value per S element");
  for (int v : gamma)
    if (v < 0 || v >= n) throw InputError("gamma entry out of range");
  if (star.size() != static_cast<std::size_t>(m) * m || ract.size() != static_cast<std::size_t>(m) * n)
    throw InputError("table sizes do not match (host, m)");
  auto star_at = [&](int s1, int s2) { return star[static_cast<std::size_t>(s1) * m + s2]; };
  auto ract_at = [&](int s, int h) { return ract[static_cast<std::size_t>(s) * n + h]; };

  if (gamma[0] != e) throw InputError("gamma must be unitary: gamma(1_S) = 1_H");
  for (int s = 0; s < m; ++s)
    if (star_at(s, 0) != s || star_at(0, s) != s)
      throw InputError("star must have 1_S as a unit");
  for (int h = 0; h < n; ++h)
    if (ract_at(0, h) != 0) throw InputError("basepoint must be a fixed point of the right action");
  for (int s = 0; s < m; ++s) {
    if (ract_at(s, e) != s) throw InputError("right action must satisfy s<1_H = s");
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2)
        if (ract_at(s, host.mul(h1, h2)) != ract_at(ract_at(s, h1), h2))
          throw InputError("(S,<) is not a right H-set");
  }

  // Compatibility (x*y)*z = ( x < (gamma(y) gamma(z) gamma(y*z)^-1) ) * (y*z).
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        int lhs = star_at(star_at(x, y), z);
        int g = host.mul(host.mul(gamma[y], gamma[z]), host.inv(gamma[star_at(y, z)]));
        int rhs = star_at(ract_at(x, g), star_at(y, z));
        if (lhs != rhs)
          throw TransitionIncompatible(
              "be1", {x, y, z},
              "transition compatibility be1 fails at (x,y,z)=(" + std::to_string(x) + "," +
                  std::to_string(y) + "," + std::to_string(z) + ")");
      }

  // Compatibility (x*y)<g = ( x < (gamma(y) g gamma(y<g)^-1) ) * (y<g).
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int g = 0; g < n; ++g) {
        int lhs = ract_at(star_at(x, y), g);
        int t = host.mul(host.mul(gamma[y], g), host.inv(gamma[ract_at(y, g)]));
        int rhs = star_at(ract_at(x, t), ract_at(y, g));
        if (lhs != rhs)
          throw TransitionIncompatible(
              "be2", {x, y, g},
              "transition compatibility be2 fails at (x,y,g)=(" + std::to_string(x) + "," +
                  std::to_string(y) + "," + host.label(g) + ")");
      }

  std::vector<int> lact(static_cast<std::size_t>(m) * n);
  std::vector<int> cocycle(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int g = 0; g < n; ++g)
      lact[static_cast<std::size_t>(x) * n + g] =
          host.mul(host.mul(gamma[x], g), host.inv(gamma[ract_at(x, g)]));
    for (int y = 0; y < m; ++y)
      cocycle[static_cast<std::size_t>(x) * m + y] =
          host.mul(host.mul(gamma[x], gamma[y]), host.inv(gamma[star_at(x, y)]));
  }
  ExtendingDatum d(host, PointedSet{m}, star, ract, std::move(lact), std::move(cocycle));
  AxiomReport report = check_axioms(d);
  // The star operation may lack left inverses, which the transition
  // compatibilities do not rule out; surface that as an axiom failure.
  if (!report.ok())
    throw AxiomViolation(std::move(report), "transition data do not form a group extending structure");
  return d;
}

}  // namespace uniprod
