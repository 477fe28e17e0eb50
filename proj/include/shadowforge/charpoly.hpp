#pragma once

#include "shadowforge/qseries.hpp"

#include <string>
#include <utility>

namespace shadowforge {

/// Character polynomial of a self-dual vertex operator superalgebra of
/// central charge (rank) c:
///
///     P(x, y) = sum_{i=0}^{floor(c/8)} A_i x^(2c-16i) y^i
///
/// in the generators x = chi_half (free fermion) and y = chi8 (E8 lattice
/// vertex algebra).  The character of the algebra is P(chi_half, chi8).
/// Invariants: c is a nonnegative half-integer, A has exactly
/// floor(c/8)+1 entries, sum(A) = 1 (vacuum normalization), and is_voa
/// only for c divisible by 8.
struct CharacterPoly {
    Rat c;
    RatVec A;
    bool is_voa = false;
};

/// Number of coefficients of a rank-c polynomial: floor(c/8) + 1.
long poly_length(const Rat& c);

/// Throws std::invalid_argument if any structural invariant fails.
void validate(const CharacterPoly& p);

/// {"c":[num,den],"A":[[num,den],...],"is_voa":bool}
std::string poly_json(const CharacterPoly& p);

/// q-expansion of P(chi_half, chi8); leading term q^(-c/24).
QSeries character(const CharacterPoly& p, long prec_48);

/// Recovers the polynomial from leading character coefficients:
/// chi_prefix[k] is the coefficient of q^(-c/24 + k/2).  At least
/// floor(c/8)+1 entries are required; any extra entries are verified
/// against the reconstructed character (std::domain_error on mismatch).
CharacterPoly decompose(const Rat& c, const RatVec& chi_prefix, bool is_voa = false);

/// Closed-form decomposition from dim V_(1/2) = 0 and a given dim V_1,
/// for ranks 0 <= c < 24 (where at most three coefficients exist):
/// expressed in the alternative basis x^(2c-16j) (x^16 - y)^j the
/// coefficients are (1, -c/8, (dim_one - 2c(47/2 - c))/256).
CharacterPoly three_term(const Rat& c, const Rat& dim_one);

/// q-expansion of the shadow character: each monomial x^(2c-16i) y^i of P
/// contributes 2^(floor(c)-8i) * chi_fermi_shadow^(2c-16i) * chi8^i.  For
/// a vertex operator algebra the shadow is the algebra itself, so this
/// returns the plain character.
QSeries shadow_character(const CharacterPoly& p, long prec_48);

/// Minimal weight of a graded character whose grading starts at -c/24:
/// leading exponent plus c/24.  Throws std::domain_error when the series
/// is zero to its full precision.
Rat minimal_weight(const QSeries& chi, const Rat& c);

struct ShadowReport {
    Rat h;               // minimal weight of the shadow
    Rat dim_at_h;        // dimension of the minimal-weight subspace
    QSeries shadow_chi;  // the shadow character expansion
};

ShadowReport shadow_report(const CharacterPoly& p, long prec_48);

/// Verdict of the shadow minimal-weight bound h <= c/8: the bound itself,
/// the forced vanishing A_k = 0 for k > c/8 - h, and the statement that
/// h = c/8 holds exactly for A = (1, 0, ..., 0).
struct ShadowBoundVerdict {
    Rat h;
    bool bound_ok;
    bool vanishing_ok;
    bool extremal_iff_ok;
    bool pass() const { return bound_ok && vanishing_ok && extremal_iff_ok; }
};

ShadowBoundVerdict shadow_weight_bound_check(const CharacterPoly& p, long prec_48);

/// For shadows of the largest possible minimal weight at non-extremal
/// ranks: (smallest possible dim V_1, count of minimal-weight shadow
/// vectors) = (2c(47/2 - c), 2^(floor(c)-11) c).
std::pair<Rat, Rat> long_shadow_bounds(const Rat& c);

/// 2^(floor(c)-24) * (dim_one - 2c(47/2 - c)) for 0 <= c < 24: the
/// deviation of dim V_1 from its minimum, scaled to the dimension of the
/// shadow subspace two steps below c/8.
Rat shadow_deficit(const Rat& c, const Rat& dim_one);

/// Character polynomial of a tensor product: ranks add, coefficients
/// convolve.
CharacterPoly tensor(const CharacterPoly& p, const CharacterPoly& q);

/// Number of irreducible pieces the shadow of a tensor product splits
/// into: 2 when both ranks are half-integral (non-integer), 1 otherwise.
int tensor_shadow_multiplier(const Rat& c, const Rat& d);

/// Removes r free-fermion tensor factors: divides P by x^r, dropping the
/// rank by r/2 (shadow weights shift down by r/16).  Throws
/// std::domain_error when P is not divisible by x^r.
CharacterPoly strip_fermions(const CharacterPoly& p, long r);

}  // namespace shadowforge
