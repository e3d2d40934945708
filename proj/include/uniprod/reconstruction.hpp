#pragma once

#include <string>
#include <vector>

#include "uniprod/extending_structure.hpp"
#include "uniprod/finite_group.hpp"
#include "uniprod/special_products.hpp"

namespace uniprod {

// A unitary left-H-linear retraction p: E -> H with fiber S = p^-1(1).
// p(1) = 1 and p(h x) = h p(x); the fiber is ordered identity first, then
// ascending ambient index.
struct Retraction {
  FiniteGroup ambient;
  SubgroupEmbedding subgroup;
  Transversal source;
  std::vector<int> p;          // E index -> ambient index of the H part
  std::vector<int> fiber;      // ambient indices with p(x) = 1
  std::vector<int> fiber_pos;  // ambient index -> fiber position or -1

  int p_sub(int x) const { return subgroup.position_of(p[x]); }
};

Retraction retraction_from_transversal(const FiniteGroup& e, const SubgroupEmbedding& h,
                                       const Transversal& gamma);

// Datum extraction on fiber/subgroup indices:
//   s>h = p(sh), s<h = p(sh)^-1 s h, f(s1,s2) = p(s1 s2),
//   s1*s2 = p(s1 s2)^-1 s1 s2.
// The result is re-verified against the axioms (a failure is a bug).
ExtendingDatum extract_datum(const Retraction& r);

// The multiplication bijection phi(h,s) = h s from pair codes to E,
// verified bijective and a homomorphism from the unified product.
struct PhiIsomorphism {
  std::vector<int> pair_to_ambient;  // code (h,s) -> E index
  std::vector<int> ambient_to_pair;
  UnifiedProduct product;
};

PhiIsomorphism phi_isomorphism(const Retraction& r);

// The transversal {(1_H, s) : s in S} of i_H(H) inside a unified product;
// extraction over it reproduces the source datum table-for-table.
Transversal canonical_transversal(const UnifiedProduct& u);

// Classical Schreier reconstruction for H normal in E: quotient G = E/H
// (cosets indexed in transversal order), section chi(g) = rep, crossed
// system alpha(g)(h) = chi(g) h chi(g)^-1, f(g1,g2) = chi(g1) chi(g2)
// chi(g1 g2)^-1, and the isomorphism theta(h,g) = h chi(g).
struct SchreierData {
  FiniteGroup ambient;
  SubgroupEmbedding subgroup;
  FiniteGroup quotient;
  std::vector<int> chi;    // quotient index -> ambient index
  CrossedSystem crossed;
  std::vector<int> theta;  // pair code (h,g) -> ambient index
};

SchreierData schreier_reconstruct(const FiniteGroup& e, const SubgroupEmbedding& h,
                                  const Transversal& gamma);

// Compares the two reconstruction routes over the same transversal: the
// extracted datum (which has trivial < when H is normal) against the
// Schreier crossed system, through phi and theta.
struct SchreierComparison {
  bool ract_trivial = false;
  bool tables_agree = false;     // unified table equals crossed table cell by cell
  bool iso_verified = false;     // theta^-1 . phi is a stabilizing isomorphism
  std::string detail;
};

SchreierComparison schreier_vs_unified(const FiniteGroup& e, const SubgroupEmbedding& h,
                                       const Transversal& gamma);

// Retraction text format (.ret): a group file reference plus member and
// representative lists (ambient indices).
std::string serialize_retraction(const Retraction& r, const std::string& group_ref);
// Parses against an already-loaded ambient group.
Retraction parse_retraction(const std::string& text, const FiniteGroup& ambient,
                            std::string* group_ref_out = nullptr);

}  // namespace uniprod
