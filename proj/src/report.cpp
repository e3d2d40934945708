#include "uniprod/report.hpp"

#include <iomanip>
#include <sstream>

namespace uniprod {

std::string hash_hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << value;
  return out.str();
}

std::string render_text(const ValidationReport& r, const FiniteGroup* g) {
  if (r.ok()) return "OK (0 violations)\n";
  std::ostringstream out;
  out << r.total << " violation(s)\n";
  for (const auto& v : r.violations) {
    out << v.law << " FAIL";
    if (v.witness[0] >= 0) {
      out << " at (";
      for (int i = 0; i < 3 && v.witness[i] >= 0; ++i) {
        if (i) out << ",";
        if (g)
          out << g->label(v.witness[i]);
        else
          out << v.witness[i];
      }
      out << ")";
    }
    out << ": " << v.detail << "\n";
  }
  if (r.total > r.violations.size())
    out << "... " << (r.total - r.violations.size()) << " more\n";
  return out.str();
}

std::string render_text(const AxiomReport& r, const ExtendingDatum* d) {
  if (r.ok()) return "OK (0 violations)\n";
  std::ostringstream out;
  out << r.total << " violation(s)\n";
  auto value = [&](const AxiomWitness& w, int v) -> std::string {
    if (v < 0) return "-";
    if (w.host_valued && d) return d->host().label(v);
    return std::to_string(v);
  };
  for (const auto& w : r.witnesses) {
    out << axiom_name(w.axiom) << " FAIL at (";
    for (int i = 0; i < w.arity; ++i) {
      if (i) out << ",";
      out << w.args[i];
    }
    out << ")";
    if (w.axiom == EsAxiom::es7)
      out << ": no s' with s'*s = 1_S";
    else
      out << ": lhs=" << value(w, w.lhs) << ", rhs=" << value(w, w.rhs);
    out << "\n";
  }
  if (r.total > r.witnesses.size()) out << "... " << (r.total - r.witnesses.size()) << " more\n";
  return out.str();
}

std::string render_text(const CrossedReport& r) {
  if (r.ok()) return "OK (0 violations)\n";
  std::ostringstream out;
  out << r.total << " violation(s)\n";
  for (const auto& w : r.witnesses) {
    out << w.condition << " FAIL at (";
    for (int i = 0; i < 3 && w.args[i] >= 0; ++i) out << (i ? "," : "") << w.args[i];
    out << ")";
    if (w.lhs >= 0) out << ": lhs=" << w.lhs << ", rhs=" << w.rhs;
    out << "\n";
  }
  return out.str();
}

std::string render_text(const MatchedReport& r) {
  if (r.ok()) return "OK (0 violations)\n";
  std::ostringstream out;
  out << r.total << " violation(s)\n";
  for (const auto& w : r.witnesses) {
    out << w.condition << " FAIL at (";
    for (int i = 0; i < 3 && w.args[i] >= 0; ++i) out << (i ? "," : "") << w.args[i];
    out << ")";
    if (w.lhs >= 0) out << ": lhs=" << w.lhs << ", rhs=" << w.rhs;
    out << "\n";
  }
  return out.str();
}

std::string render_text(const RecognizeFlags& flags) {
  std::ostringstream out;
  out << "crossed=" << (flags.is_crossed ? "yes" : "no")
      << " bicrossed=" << (flags.is_bicrossed ? "yes" : "no")
      << " twisted=" << (flags.is_twisted ? "yes" : "no")
      << " direct=" << (flags.is_direct ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_witness(const StabilizingPair& pair, const FiniteGroup& host) {
  std::ostringstream out;
  out << "r = [";
  for (std::size_t i = 0; i < pair.r.size(); ++i)
    out << (i ? " " : "") << host.label(pair.r[i]);
  out << "]; v = [";
  for (std::size_t i = 0; i < pair.v.size(); ++i) out << (i ? " " : "") << pair.v[i];
  out << "]";
  return out.str();
}

std::string render_text(const EquivalenceClassSet& classes) {
  std::ostringstream out;
  out << classes.classes.size() << " class(es) over " << classes.items.size() << " item(s)"
      << (classes.complete ? "" : " [INCOMPLETE: budget exhausted]") << "\n";
  for (std::size_t k = 0; k < classes.classes.size(); ++k) {
    out << "class " << k << ":";
    for (int i : classes.classes[k]) out << " " << i;
    out << "\n";
  }
  if (!classes.items.empty()) {
    const FiniteGroup& host = classes.items.front().host();
    for (const auto& [edge, witness] : classes.witnesses)
      out << "witness " << edge.first << " -> " << edge.second << ": "
          << render_witness(witness, host) << "\n";
  }
  return out.str();
}

std::string render_text(const SurveyStats& stats) {
  std::ostringstream out;
  out << "samples=" << stats.samples << " axioms_pass=" << stats.axioms_pass
      << " crossed=" << stats.crossed << " bicrossed=" << stats.bicrossed
      << " twisted=" << stats.twisted << " direct=" << stats.direct
      << " fiber_subgroup=" << stats.fiber_subgroup << "\n";
  for (const auto& f : stats.failures) out << "FAILURE: " << f << "\n";
  return out.str();
}

std::string render_text(const PrimaintReport& report) {
  std::ostringstream out;
  out << "data=" << report.datum_count << " k2_classes=" << report.k2_count
      << " oracle_tables=" << report.oracle_table_count
      << " oracle_classes=" << report.oracle_class_count << "\n";
  out << "counts " << (report.counts_agree ? "AGREE" : "DISAGREE") << "; surjectivity "
      << (report.surjective ? "OK" : "FAILED") << (report.complete ? "" : " [INCOMPLETE]")
      << "\n";
  for (int t : report.unreached_tables) out << "unreached oracle table " << t << "\n";
  return out.str();
}

std::string render_text(const SchreierComparison& cmp) {
  return cmp.detail + "\n";
}

std::string render_cls(const EquivalenceClassSet& classes) {
  std::ostringstream out;
  out << "# class-set report\n";
  out << "items " << classes.items.size() << "\n";
  for (std::size_t i = 0; i < classes.items.size(); ++i)
    out << "item " << i << " " << hash_hex(classes.items[i].content_hash()) << "\n";
  out << "classes " << classes.classes.size() << "\n";
  for (std::size_t k = 0; k < classes.classes.size(); ++k) {
    out << "class " << k << ":";
    for (int i : classes.classes[k]) out << " " << i;
    out << "\n";
  }
  if (!classes.items.empty()) {
    for (const auto& [edge, witness] : classes.witnesses) {
      out << "witness " << edge.first << " " << edge.second << ": r =";
      for (int v : witness.r) out << " " << v;
      out << "; v =";
      for (int v : witness.v) out << " " << v;
      out << "\n";
    }
  }
  if (!classes.complete) out << "incomplete 1\n";
  return out.str();
}

std::string render_sum(const EnumerationResult& result, const FiniteGroup& host, int m,
                       const EquivalenceClassSet* classes) {
  std::ostringstream out;
  out << "# enumeration summary\n";
  out << "host_order " << host.order() << "\n";
  out << "m " << m << "\n";
  out << std::setprecision(6) << "search_space " << static_cast<double>(result.search_space)
      << "\n";
  out << "candidates_visited " << result.nodes << "\n";
  out << "valid " << result.data.size() << "\n";
  out << "complete " << (result.complete ? 1 : 0) << "\n";
  if (!result.checkpoint.empty()) out << "checkpoint " << result.checkpoint << "\n";
  for (std::size_t i = 0; i < result.data.size(); ++i)
    out << "datum " << i << " hash " << hash_hex(result.data[i].content_hash()) << "\n";
  if (classes) {
    out << "classes " << classes->classes.size() << "\n";
    for (std::size_t k = 0; k < classes->classes.size(); ++k) {
      out << "class " << k << ":";
      for (int i : classes->classes[k]) out << " " << i;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace uniprod
