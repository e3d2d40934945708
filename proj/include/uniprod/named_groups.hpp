#pragma once

#include <string>

#include "uniprod/finite_group.hpp"

namespace uniprod {

// Built-in groups addressable by name: Z<n>, V4, D4, S2..S6, A3..A6.
// Permutation groups are generated from permutation composition with
// cycle-notation labels ("e", "(01)", "(012)(345)", ...); products compose
// right to left, (x*y)(p) = x(y(p)).
FiniteGroup named_group(const std::string& name);

FiniteGroup cyclic_group(int n);
FiniteGroup klein_four();
FiniteGroup symmetric_group(int points);    // points <= 6
FiniteGroup alternating_group(int points);  // points <= 6
FiniteGroup dihedral_square();              // D4, order 8

}  // namespace uniprod
