#pragma once

// Bond matrices of the systems used throughout tests, the acceptance suite and
// the sample group files.

#include "coxeter/core.hpp"

namespace coxeter::catalog {

/// A_n: the symmetric group on n + 1 points.
CoxeterSystem type_A(std::size_t n);
/// B_n with the 4-bond between generators n-1 and n.
CoxeterSystem type_B(std::size_t n);
CoxeterSystem type_H3();
/// I_2(m); m = kInfiniteBond gives the infinite dihedral group.
CoxeterSystem dihedral(BondOrder m);
/// Affine A~_2: three generators, all bonds 3.
CoxeterSystem affine_A2();
/// Universal Coxeter group of rank n: every bond infinite.
CoxeterSystem universal(std::size_t n);

}  // namespace coxeter::catalog
