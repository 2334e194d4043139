#pragma once

#include "cyclocover/chain_complex.hpp"
#include "cyclocover/smith.hpp"

#include <vector>

namespace cyclocover {

/// H_j(C) = ker d_j / im d_{j+1} as an F[t, 1/t]-module.
///
/// The kernel basis is read from the columns of V in SNF(d_j) that meet zero
/// diagonal entries; d_{j+1} is rewritten in that basis through V^{-1}, and the
/// SNF of the resulting presentation gives the divisors. Units are dropped.
/// Throws InputError when j exceeds the top degree.
ModuleDecomposition homology_module(const ChainComplexOverR& c, std::size_t j);

/// homology_module for every degree 0..top.
std::vector<ModuleDecomposition> homology_modules(const ChainComplexOverR& c);

/// The decomposition read off the diagonal of a presentation matrix R^cols -> R^rows.
ModuleDecomposition cokernel_decomposition(const RMatrix& presentation);

} // namespace cyclocover
