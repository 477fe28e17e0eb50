#pragma once

#include <string>
#include <vector>

#include "shadowforge/rational.hpp"

namespace shadowforge {

/// A simple (or abelian U1) Lie algebra factor with a display-only level and
/// a multiplicity, e.g. D_{4,2}^2 = {family D, rank 4, level 2, mult 2}.
struct LieLabel {
    char family;  // 'A'..'G', or 'U' for the abelian u(1)
    int rank;
    int level = 1;
    int multiplicity = 1;
};

/// multiplicity x dim of the adjoint: A_n -> n(n+2), B_n/C_n -> n(2n+1),
/// D_n -> n(2n-1), E6/E7/E8 -> 78/133/248, F4 -> 52, G2 -> 14, U1 -> 1.
long dim_simple(const LieLabel& label);

struct TableEntry {
    Rat c;                        ///< rank of the extremal SVOA
    long dim1;                    ///< dim V_1 as recorded
    std::vector<LieLabel> labels; ///< Lie algebra structure of V_1
    std::string display;
    bool lattice_candidate;       ///< integral rank, simply laced, level 1
};

/// The twenty extremal self-dual SVOAs with no weight-1/2 states,
/// 8 <= c <= 23 1/2.
const std::vector<TableEntry>& classification_table();

struct TableRowCheck {
    Rat c;
    long expected;  ///< recorded dim V_1
    long formula;   ///< 2c(23 1/2 - c)
    long lie_sum;   ///< sum over the labels
    bool pass;
};

/// Re-derives dim V_1 from the rank and from the Lie labels for every entry.
std::vector<TableRowCheck> verify_table();

std::string table_report_json(const std::vector<TableRowCheck>& rows);

}  // namespace shadowforge
