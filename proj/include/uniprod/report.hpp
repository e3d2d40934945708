#pragma once

#include <string>

#include "uniprod/classification.hpp"
#include "uniprod/enumeration.hpp"
#include "uniprod/extending_structure.hpp"
#include "uniprod/finite_group.hpp"
#include "uniprod/reconstruction.hpp"
#include "uniprod/special_products.hpp"

namespace uniprod {

// Human-readable renderings shared by the CLI; witness tuples verbatim,
// host elements by label, carrier elements by index.
std::string render_text(const ValidationReport& r, const FiniteGroup* g = nullptr);
std::string render_text(const AxiomReport& r, const ExtendingDatum* d = nullptr);
std::string render_text(const CrossedReport& r);
std::string render_text(const MatchedReport& r);
std::string render_text(const RecognizeFlags& flags);
std::string render_text(const EquivalenceClassSet& classes);
std::string render_text(const SurveyStats& stats);
std::string render_text(const PrimaintReport& report);
std::string render_text(const SchreierComparison& cmp);

std::string render_witness(const StabilizingPair& pair, const FiniteGroup& host);

// Class-set report (.cls): item digests, class membership, witness tables.
std::string render_cls(const EquivalenceClassSet& classes);

// Enumeration summary (.sum): counts, partitions, content hashes.
std::string render_sum(const EnumerationResult& result, const FiniteGroup& host, int m,
                       const EquivalenceClassSet* classes = nullptr);

std::string hash_hex(std::uint64_t value);

}  // namespace uniprod
