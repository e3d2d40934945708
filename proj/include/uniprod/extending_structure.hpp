#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uniprod/finite_group.hpp"

namespace uniprod {

struct PointedSet {
  int size = 1;  // basepoint is always index 0
};

enum class EsAxiom { es1 = 1, es2, es3, es4, es5, es6, es7 };

const char* axiom_name(EsAxiom a);  // "ES1".."ES7"

struct AxiomWitness {
  EsAxiom axiom;
  std::array<int, 3> args{-1, -1, -1};
  int arity = 0;
  int lhs = -1;  // evaluated values; -1 when not applicable (ES7)
  int rhs = -1;
  bool host_valued = false;  // whether lhs/rhs live in H rather than S
};

// At most 8 witnesses per axiom are recorded; counts are always exact.
struct AxiomReport {
  std::vector<AxiomWitness> witnesses;
  std::array<std::uint64_t, 8> counts{};  // counts[1..7]
  std::uint64_t total = 0;
  bool ok() const { return total == 0; }
};

struct AxiomViolation : Error {
  AxiomViolation(AxiomReport r, const std::string& what_arg)
      : Error(what_arg), report(std::move(r)) {}
  AxiomReport report;
};

// Extending datum of a group H: a pointed set S of size m with the four
// tables (*, <, >, f). Normalization is a construction invariant:
//   s*1 = 1*s = s,  s<1_H = s,  1_S<h = 1_S,  1_S>h = h,  s>1_H = 1_H,
//   f(s,1_S) = f(1_S,s) = 1_H.
class ExtendingDatum {
 public:
  // star: m*m S-indices, ract: m*n S-indices, lact: m*n H-indices,
  // cocycle: m*m H-indices (all row-major, S index first).
  ExtendingDatum(FiniteGroup host, PointedSet carrier, std::vector<int> star,
                 std::vector<int> ract, std::vector<int> lact, std::vector<int> cocycle);

  const FiniteGroup& host() const { return host_; }
  int m() const { return m_; }

  int star(int s1, int s2) const { return star_[static_cast<std::size_t>(s1) * m_ + s2]; }
  int ract(int s, int h) const { return ract_[static_cast<std::size_t>(s) * host_.order() + h]; }
  int lact(int s, int h) const { return lact_[static_cast<std::size_t>(s) * host_.order() + h]; }
  int f(int s1, int s2) const { return cocycle_[static_cast<std::size_t>(s1) * m_ + s2]; }

  const std::vector<int>& star_table() const { return star_; }
  const std::vector<int>& ract_table() const { return ract_; }
  const std::vector<int>& lact_table() const { return lact_; }
  const std::vector<int>& cocycle_table() const { return cocycle_; }

  bool ract_trivial() const;
  bool lact_trivial() const;
  bool cocycle_trivial() const;

  // Flattened (*, <, >, f) tables; the lexicographic stream order and the
  // content digest are defined over this encoding.
  std::vector<int> encoding() const;
  std::uint64_t content_hash() const;

  bool same_tables(const ExtendingDatum& other) const;

  // The direct-product datum over H with S carrying the given group
  // structure (which must have identity index 0).
  static ExtendingDatum direct(FiniteGroup host, const FiniteGroup& s_group);

 private:
  FiniteGroup host_;
  int m_;
  std::vector<int> star_, ract_, lact_, cocycle_;
};

// Exhaustive check of (ES1)-(ES7); empty report iff the unified product
// of the datum is a group. Total function with deterministic witness order.
AxiomReport check_axioms(const ExtendingDatum& d);

struct RecognizeFlags {
  bool is_crossed = false;    // < trivial
  bool is_bicrossed = false;  // f trivial
  bool is_twisted = false;    // > trivial
  bool is_direct = false;     // all three
};

// Flags refer to the datum's literal tables, not to isomorphism type.
RecognizeFlags recognize(const ExtendingDatum& d);

// The raw pair-code multiplication table of Eq (h1,s1)(h2,s2) =
// (h1 (s1>h2) f(s1<h2, s2), (s1<h2)*s2) under the fixed coding
// (h,s) -> h*m + s. Total; does not require the axioms.
std::vector<int> unified_product_table(const ExtendingDatum& d);

// The unified product group with its canonical maps.
struct UnifiedProduct {
  FiniteGroup group;
  ExtendingDatum source;

  int n() const { return source.host().order(); }
  int m() const { return source.m(); }
  int pair_code(int h, int s) const { return h * m() + s; }
  int h_of(int code) const { return code / m(); }
  int s_of(int code) const { return code % m(); }
  int i_H(int h) const { return pair_code(h, 0); }
  int i_S(int s) const { return pair_code(source.host().identity(), s); }
  int p_H(int code) const { return h_of(code); }
  int pi_S(int code) const { return s_of(code); }
};

// Throws AxiomViolation (carrying the report) when check_axioms fails.
UnifiedProduct unified_product(const ExtendingDatum& d);

// Inverse of (h,s) from the closed formula (f(s',s)^-1 (s'>h^-1), s'<h^-1)
// where s' is the left inverse of s under *.
std::pair<int, int> inverse_in_product(const ExtendingDatum& d, int h, int s);

// s -> s' with s'*s = 1_S; verified unique for each s.
std::vector<int> left_inverse_map(const ExtendingDatum& d);

}  // namespace uniprod
