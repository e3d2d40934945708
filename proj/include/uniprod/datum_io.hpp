#pragma once

#include <string>

#include "uniprod/extending_structure.hpp"

namespace uniprod {

// Extending-datum text format (.esd): section-headed tables of indices.
//   [H]      embedded group in the .grp format
//   [S] m
//   [STAR]   m rows of m S-indices        (s1*s2)
//   [RACT]   m rows of n S-indices        (s<h)
//   [LACT]   m rows of n H-indices        (s>h)
//   [F]      m rows of m H-indices        (f(s1,s2))
// '#' starts a comment line. Normalization is enforced on parse.
ExtendingDatum parse_datum(const std::string& text);
std::string serialize_datum(const ExtendingDatum& d);

}  // namespace uniprod
