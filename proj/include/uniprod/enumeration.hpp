#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uniprod/extending_structure.hpp"
#include "uniprod/finite_group.hpp"
#include "uniprod/reconstruction.hpp"

namespace uniprod {

struct EnumerationTask {
  FiniteGroup host;
  int m = 1;
  bool require_ract_trivial = false;  // crossed-system stream
  bool require_cocycle_trivial = false;  // matched-pair stream
  bool require_lact_trivial = false;  // twisted-product stream
  std::uint64_t budget = 50'000'000;
  int threads = 1;
};

struct EnumerationResult {
  std::vector<ExtendingDatum> data;  // lexicographic in the datum encoding
  bool complete = true;
  std::uint64_t nodes = 0;           // candidates visited across all stages
  long double search_space = 0;      // naive candidate-space size, reported up front
  std::string checkpoint;            // progress note when the budget truncated
};

// Emits exactly the normalized table choices passing check_axioms, in
// lexicographic (star, ract, lact, f) order. Candidates are generated in
// stages (right actions, then compatible left actions, then star tables,
// then cocycles) with component-wise filtering; every survivor is put
// through the full axiom check.
EnumerationResult enumerate_extending_data(const EnumerationTask& task);

// Size of the naive normalized candidate space for (host, m).
long double normalized_candidate_space(const FiniteGroup& host, int m);

// Visits every normalized candidate datum over (host, m), valid or not.
// Intended for small spaces (the callback count equals the naive space).
void for_each_normalized_candidate(const FiniteGroup& host, int m,
                                   const std::function<void(const ExtendingDatum&)>& fn);

struct OracleResult {
  std::vector<std::vector<int>> tables;       // completed N*N tables, lexicographic
  std::vector<int> class_of;                  // table index -> class index
  std::vector<std::vector<int>> classes;      // stabilizing-iso class partition
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Independent brute-force oracle: backtracking completion of the N*N Cayley
// table with H's block fixed at indices 0..|H|-1, Latin-square candidate
// propagation per row/column, and associativity checked incrementally as
// triples complete. Completions are then partitioned by isomorphisms fixing
// H pointwise.
OracleResult oracle_group_structures(const FiniteGroup& h, int total_order,
                                     std::uint64_t budget = 200'000'000, int threads = 1);

// Backtracking search for a bijection T1 -> T2 on 0..size-1 that fixes
// 0..fixed-1 pointwise and transports one table into the other.
std::optional<std::vector<int>> stabilizing_table_iso(const std::vector<int>& t1,
                                                      const std::vector<int>& t2, int size,
                                                      int fixed);

struct PrimaintReport {
  int datum_count = 0;
  int k2_count = 0;
  int oracle_table_count = 0;
  int oracle_class_count = 0;
  bool counts_agree = false;
  bool surjective = false;  // every oracle table is reached by some datum
  std::vector<int> unreached_tables;
  bool complete = true;
};

// Cross-validates the constructive enumeration against the oracle: every
// oracle completion must arise from some enumerated datum up to an
// H-fixing isomorphism, and the K2 class count must equal the oracle's
// stabilizing-iso class count.
PrimaintReport cross_validate_primaint(const FiniteGroup& h, int m,
                                       std::uint64_t budget = 200'000'000, int threads = 1);

struct SurveyPolicy {
  enum class Kind { all, sample } kind = Kind::all;
  int samples = 0;
  std::uint64_t seed = 0;

  static SurveyPolicy all() { return {}; }
  static SurveyPolicy sample(int count, std::uint64_t seed) {
    return {Kind::sample, count, seed};
  }
};

struct SurveyStats {
  int samples = 0;
  int axioms_pass = 0;
  int crossed = 0;    // extracted datum had trivial <
  int bicrossed = 0;  // trivial f
  int twisted = 0;    // trivial >
  int direct = 0;
  int fiber_subgroup = 0;  // fibers that happen to be subgroups
  std::vector<std::string> failures;  // axiom failures, never expected
};

// Extracts a datum per sampled transversal and aggregates recognize flags.
SurveyStats survey_transversals(const FiniteGroup& e, const SubgroupEmbedding& h,
                                const SurveyPolicy& policy);

// All transversals with the identity representing the H-coset; the count is
// |H|^(#cosets - 1). Guarded by max_count.
std::vector<Transversal> all_transversals(const FiniteGroup& e, const SubgroupEmbedding& h,
                                          std::uint64_t max_count = 1'000'000);

}  // namespace uniprod
