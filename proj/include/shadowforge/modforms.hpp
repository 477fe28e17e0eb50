#pragma once

#include "shadowforge/qseries.hpp"

namespace shadowforge {

/// The six generator series used throughout the library.  Each takes the
/// precision cutoff on the 1/48 grid (prec_48 >= 48, i.e. at least one full
/// q-order) and returns a series truncated exactly there.

/// Dedekind eta: q^(1/24) * prod_{n>=1} (1 - q^n), via the pentagonal
/// number expansion of the product.
QSeries eta(long prec_48);

/// Theta series of the integers (exponent = norm/2):
/// 1 + 2q^(1/2) + 2q^2 + 2q^(9/2) + ...
QSeries theta_z(long prec_48);

/// Theta series of the E8 root lattice: 1 + 240 sum sigma_3(n) q^n.
QSeries theta_e8(long prec_48);

/// Character of the free fermion: sqrt(theta_z / eta), leading term
/// q^(-1/48).
QSeries chi_half(long prec_48);

/// Character of the E8 lattice vertex algebra: theta_e8 / eta^8, leading
/// term q^(-1/3).
QSeries chi8(long prec_48);

/// Shadow character of the free fermion: q^(1/24) * prod_{n>=1} (1 + q^n).
QSeries chi_fermi_shadow(long prec_48);

}  // namespace shadowforge
