#include "uniprod/extending_structure.hpp"

#include <algorithm>

namespace uniprod {

const char* axiom_name(EsAxiom a) {
  switch (a) {
    case EsAxiom::es1: return "ES1";
    case EsAxiom::es2: return "ES2";
    case EsAxiom::es3: return "ES3";
    case EsAxiom::es4: return "ES4";
    case EsAxiom::es5: return "ES5";
    case EsAxiom::es6: return "ES6";
    case EsAxiom::es7: return "ES7";
  }
  return "?";
}

namespace {

void check_table(const std::vector<int>& t, std::size_t expected, int range, const char* name) {
  if (t.size() != expected) throw InputError(std::string(name) + " table has wrong size");
  for (int v : t)
    if (v < 0 || v >= range) throw InputError(std::string(name) + " table entry out of range");
}

}  // namespace

ExtendingDatum::ExtendingDatum(FiniteGroup host, PointedSet carrier, std::vector<int> star,
                               std::vector<int> ract, std::vector<int> lact,
                               std::vector<int> cocycle)
    : host_(std::move(host)),
      m_(carrier.size),
      star_(std::move(star)),
      ract_(std::move(ract)),
      lact_(std::move(lact)),
      cocycle_(std::move(cocycle)) {
  if (m_ < 1) throw InputError("carrier size must be positive");
  int n = host_.order();
  std::size_t mm = static_cast<std::size_t>(m_) * m_;
  std::size_t mn = static_cast<std::size_t>(m_) * n;
  check_table(star_, mm, m_, "star");
  check_table(ract_, mn, m_, "ract");
  check_table(lact_, mn, n, "lact");
  check_table(cocycle_, mm, n, "cocycle");

  int e = host_.identity();
  for (int s = 0; s < m_; ++s) {
    if (this->star(s, 0) != s)
      throw NotNormalized("s*1_S = s fails at s=" + std::to_string(s));
    if (this->star(0, s) != s)
      throw NotNormalized("1_S*s = s fails at s=" + std::to_string(s));
    if (this->ract(s, e) != s)
      throw NotNormalized("s<1_H = s fails at s=" + std::to_string(s));
    if (this->lact(s, e) != e)
      throw NotNormalized("s>1_H = 1_H fails at s=" + std::to_string(s));
    if (this->f(s, 0) != e)
      throw NotNormalized("f(s,1_S) = 1_H fails at s=" + std::to_string(s));
    if (this->f(0, s) != e)
      throw NotNormalized("f(1_S,s) = 1_H fails at s=" + std::to_string(s));
  }
  for (int h = 0; h < n; ++h) {
    if (this->ract(0, h) != 0)
      throw NotNormalized("1_S<h = 1_S fails at h=" + host_.label(h));
    if (this->lact(0, h) != h)
      throw NotNormalized("1_S>h = h fails at h=" + host_.label(h));
  }
}

bool ExtendingDatum::ract_trivial() const {
  for (int s = 0; s < m_; ++s)
    for (int h = 0; h < host_.order(); ++h)
      if (ract(s, h) != s) return false;
  return true;
}

bool ExtendingDatum::lact_trivial() const {
  for (int s = 0; s < m_; ++s)
    for (int h = 0; h < host_.order(); ++h)
      if (lact(s, h) != h) return false;
  return true;
}

bool ExtendingDatum::cocycle_trivial() const {
  int e = host_.identity();
  for (int s1 = 0; s1 < m_; ++s1)
    for (int s2 = 0; s2 < m_; ++s2)
      if (f(s1, s2) != e) return false;
  return true;
}

std::vector<int> ExtendingDatum::encoding() const {
  std::vector<int> out;
  out.reserve(star_.size() + ract_.size() + lact_.size() + cocycle_.size());
  out.insert(out.end(), star_.begin(), star_.end());
  out.insert(out.end(), ract_.begin(), ract_.end());
  out.insert(out.end(), lact_.begin(), lact_.end());
  out.insert(out.end(), cocycle_.begin(), cocycle_.end());
  return out;
}

std::uint64_t ExtendingDatum::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  auto mix = [&h](int v) {
    for (int k = 0; k < 4; ++k) {
      h ^= static_cast<std::uint64_t>((v >> (8 * k)) & 0xff);
      h *= 1099511628211ULL;
    }
  };
  mix(host_.order());
  mix(host_.identity());
  for (int v : host_.table()) mix(v);
  mix(m_);
  for (int v : encoding()) mix(v);
  return h;
}

bool ExtendingDatum::same_tables(const ExtendingDatum& other) const {
  return host_.same_table(other.host_) && m_ == other.m_ && star_ == other.star_ &&
         ract_ == other.ract_ && lact_ == other.lact_ && cocycle_ == other.cocycle_;
}

ExtendingDatum ExtendingDatum::direct(FiniteGroup host, const FiniteGroup& s_group) {
  if (s_group.identity() != 0)
    throw InputError("carrier group must have identity index 0 to serve as a pointed set");
  int n = host.order(), m = s_group.order(), e = host.identity();
  std::vector<int> ract(static_cast<std::size_t>(m) * n), lact(static_cast<std::size_t>(m) * n);
  std::vector<int> cocycle(static_cast<std::size_t>(m) * m, e);
  for (int s = 0; s < m; ++s)
    for (int h = 0; h < n; ++h) {
      ract[static_cast<std::size_t>(s) * n + h] = s;
      lact[static_cast<std::size_t>(s) * n + h] = h;
    }
  return ExtendingDatum(std::move(host), PointedSet{m}, s_group.table(), std::move(ract),
                        std::move(lact), std::move(cocycle));
}

AxiomReport check_axioms(const ExtendingDatum& d) {
  AxiomReport report;
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m();
  constexpr std::uint64_t cap = 8;

  auto record = [&report](EsAxiom axiom, std::array<int, 3> args, int arity, int lhs, int rhs,
                          bool host_valued) {
    auto idx = static_cast<std::size_t>(axiom);
    ++report.counts[idx];
    ++report.total;
    if (report.counts[idx] <= cap)
      report.witnesses.push_back({axiom, args, arity, lhs, rhs, host_valued});
  };

  // ES1: < is a right action of H on S.
  for (int s = 0; s < m; ++s)
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        int lhs = d.ract(s, hg.mul(h1, h2));
        int rhs = d.ract(d.ract(s, h1), h2);
        if (lhs != rhs) record(EsAxiom::es1, {s, h1, h2}, 3, lhs, rhs, false);
      }

  // ES2: twisted associativity of *.
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2)
      for (int s3 = 0; s3 < m; ++s3) {
        int lhs = d.star(d.star(s1, s2), s3);
        int rhs = d.star(d.ract(s1, d.f(s2, s3)), d.star(s2, s3));
        if (lhs != rhs) record(EsAxiom::es2, {s1, s2, s3}, 3, lhs, rhs, false);
      }

  // ES3: s>(h1 h2) = (s>h1) ((s<h1)>h2).
  for (int s = 0; s < m; ++s)
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2) {
        int lhs = d.lact(s, hg.mul(h1, h2));
        int rhs = hg.mul(d.lact(s, h1), d.lact(d.ract(s, h1), h2));
        if (lhs != rhs) record(EsAxiom::es3, {s, h1, h2}, 3, lhs, rhs, true);
      }

  // ES4: (s1*s2)<h = (s1<(s2>h)) * (s2<h).
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2)
      for (int h = 0; h < n; ++h) {
        int lhs = d.ract(d.star(s1, s2), h);
        int rhs = d.star(d.ract(s1, d.lact(s2, h)), d.ract(s2, h));
        if (lhs != rhs) record(EsAxiom::es4, {s1, s2, h}, 3, lhs, rhs, false);
      }

  // ES5: (s1>(s2>h)) f(s1<(s2>h), s2<h) = f(s1,s2) ((s1*s2)>h).
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2)
      for (int h = 0; h < n; ++h) {
        int a = d.lact(s2, h);
        int lhs = hg.mul(d.lact(s1, a), d.f(d.ract(s1, a), d.ract(s2, h)));
        int rhs = hg.mul(d.f(s1, s2), d.lact(d.star(s1, s2), h));
        if (lhs != rhs) record(EsAxiom::es5, {s1, s2, h}, 3, lhs, rhs, true);
      }

  // ES6: f(s1,s2) f(s1*s2, s3) = (s1>f(s2,s3)) f(s1<f(s2,s3), s2*s3).
  for (int s1 = 0; s1 < m; ++s1)
    for (int s2 = 0; s2 < m; ++s2)
      for (int s3 = 0; s3 < m; ++s3) {
        int c = d.f(s2, s3);
        int lhs = hg.mul(d.f(s1, s2), d.f(d.star(s1, s2), s3));
        int rhs = hg.mul(d.lact(s1, c), d.f(d.ract(s1, c), d.star(s2, s3)));
        if (lhs != rhs) record(EsAxiom::es6, {s1, s2, s3}, 3, lhs, rhs, true);
      }

  // ES7: every s has a left inverse under *.
  for (int s = 0; s < m; ++s) {
    bool has = false;
    for (int t = 0; t < m; ++t)
      if (d.star(t, s) == 0) {
        has = true;
        break;
      }
    if (!has) record(EsAxiom::es7, {s, -1, -1}, 1, -1, -1, false);
  }

  return report;
}

RecognizeFlags recognize(const ExtendingDatum& d) {
  RecognizeFlags flags;
  flags.is_crossed = d.ract_trivial();
  flags.is_bicrossed = d.cocycle_trivial();
  flags.is_twisted = d.lact_trivial();
  flags.is_direct = flags.is_crossed && flags.is_bicrossed && flags.is_twisted;
  return flags;
}

std::vector<int> unified_product_table(const ExtendingDatum& d) {
  const FiniteGroup& hg = d.host();
  int n = hg.order(), m = d.m(), size = n * m;
  std::vector<int> table(static_cast<std::size_t>(size) * size);
  for (int h1 = 0; h1 < n; ++h1)
    for (int s1 = 0; s1 < m; ++s1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int s2 = 0; s2 < m; ++s2) {
          int u = d.ract(s1, h2);
          int h = hg.mul(h1, hg.mul(d.lact(s1, h2), d.f(u, s2)));
          int s = d.star(u, s2);
          table[static_cast<std::size_t>(h1 * m + s1) * size + (h2 * m + s2)] = h * m + s;
        }
  return table;
}

UnifiedProduct unified_product(const ExtendingDatum& d) {
  AxiomReport report = check_axioms(d);
  if (!report.ok())
    throw AxiomViolation(std::move(report), "extending datum violates the axioms; no unified product");
  int n = d.host().order(), m = d.m(), size = n * m;
  std::vector<std::string> labels;
  labels.reserve(size);
  for (int h = 0; h < n; ++h)
    for (int s = 0; s < m; ++s)
      labels.push_back("(" + d.host().label(h) + ",s" + std::to_string(s) + ")");
  // The equivalence theorem guarantees this table is a group when the
  // axioms hold; a validation failure here would be a bug.
  try {
    FiniteGroup group(size, unified_product_table(d), d.host().identity() * m,
                      std::move(labels));
    return UnifiedProduct{std::move(group), d};
  } catch (const InvalidGroup& e) {
    throw InternalInconsistency(std::string("axioms passed but pair table is not a group: ") +
                                e.what());
  }
}

std::vector<int> left_inverse_map(const ExtendingDatum& d) {
  std::vector<int> inv(d.m(), -1);
  AxiomReport report;
  for (int s = 0; s < d.m(); ++s) {
    for (int t = 0; t < d.m(); ++t) {
      if (d.star(t, s) != 0) continue;
      if (inv[s] >= 0) {
        AxiomReport r;
        r.total = 1;
        throw AxiomViolation(std::move(r), "two left inverses for s=" + std::to_string(s) +
                                               " (contradicts the axioms)");
      }
      inv[s] = t;
    }
    if (inv[s] < 0) {
      AxiomReport r;
      r.counts[static_cast<std::size_t>(EsAxiom::es7)] = 1;
      r.total = 1;
      r.witnesses.push_back({EsAxiom::es7, {s, -1, -1}, 1, -1, -1, false});
      throw AxiomViolation(std::move(r), "no left inverse for s=" + std::to_string(s));
    }
  }
  return inv;
}

std::pair<int, int> inverse_in_product(const ExtendingDatum& d, int h, int s) {
  if (h < 0 || h >= d.host().order() || s < 0 || s >= d.m())
    throw InputError("pair index out of range");
  std::vector<int> li = left_inverse_map(d);
  const FiniteGroup& hg = d.host();
  int sp = li[s];
  int hinv = hg.inv(h);
  int out_h = hg.mul(hg.inv(d.f(sp, s)), d.lact(sp, hinv));
  int out_s = d.ract(sp, hinv);
  return {out_h, out_s};
}

}  // namespace uniprod
