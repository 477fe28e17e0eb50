#pragma once

#include "shadowforge/rational.hpp"

#include <string>
#include <vector>

namespace shadowforge {

/// Truncated formal q-expansion with exact rational coefficients.
///
/// Exponents live on the grid (1/48)Z, which is fine enough for every series
/// this library manipulates: eta-quotients contribute multiples of 1/24 and
/// half-integral weights contribute multiples of 1/16.  A series stores the
/// coefficients of q^(e/48) for e in [min_exp_48, prec_48); everything at or
/// above prec_48 is unknown, everything below min_exp_48 is exactly zero.
///
/// Precision is part of the value: binary operations return a series whose
/// window is the largest one on which the result is determined by the
/// operands, and equality is only meaningful on the overlap of two windows
/// (see `agree`).  Leading zero coefficients are trimmed on construction, so
/// min_exp_48 points at a nonzero coefficient unless the series is zero to
/// its full precision.
class QSeries {
public:
    static constexpr long grid_den = 48;

    /// coeffs[k] is the coefficient of q^((min_exp_48 + k)/48); the vector
    /// must span the window exactly (size == prec_48 - min_exp_48 >= 1).
    QSeries(long min_exp_48, long prec_48, RatVec coeffs);

    /// 0 + O(q^(prec_48/48)).
    static QSeries zero(long prec_48);
    /// 1 + O(q^(prec_48/48)), prec_48 >= 1.
    static QSeries one(long prec_48);
    /// c*q^(exp_48/48) + O(q^(prec_48/48)).
    static QSeries monomial(const Rat& coeff, long exp_48, long prec_48);

    long min_exp48() const { return min_exp_; }
    long prec48() const { return prec_; }
    /// Number of stored grid slots (prec48 - min_exp48).
    long window() const { return prec_ - min_exp_; }
    /// True when every stored coefficient is zero.
    bool is_zero() const;

    /// Coefficient of q^(exp_48/48); zero below the window, error at or
    /// above the precision cutoff.
    const Rat& at48(long exp_48) const;
    /// Coefficient of q^e for a rational exponent e (must lie on the grid).
    const Rat& at_q(const Rat& exp) const;

    /// Same series truncated to a smaller precision cutoff.
    QSeries truncated(long prec_48) const;
    /// Multiplication by q^(delta_48/48): shifts the whole window.
    QSeries shifted(long delta_48) const;
    QSeries scaled(const Rat& factor) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Multiplicative inverse; the leading coefficient must be nonzero
    /// (throws std::domain_error("non-invertible series") otherwise).
    QSeries inverse() const;
    /// Square root with leading coefficient chosen positive.  Requires the
    /// leading exponent to be even on the grid and the leading coefficient
    /// to be the square of a rational (throws
    /// std::domain_error("no grid square root") otherwise).
    QSeries sqrt() const;
    /// Integer power; negative exponents invert first, f^0 is 1 with the
    /// same relative precision.
    QSeries pow(long k) const;

    /// True when the two series have equal coefficients on the overlap of
    /// their windows (the shared notion of equality for truncated series).
    static bool agree(const QSeries& a, const QSeries& b);
    bool agree(const QSeries& other) const { return agree(*this, other); }

    /// Human-readable form, e.g. "q^(-1/3) + 248*q^(2/3) + O(q^(2))".
    std::string str() const;
    /// {"den":48,"min_exp":...,"prec":...,"coeffs":[[num,den],...]} with
    /// arbitrary-precision integers emitted verbatim.
    std::string json() const;

private:
    long min_exp_;
    long prec_;
    RatVec coeffs_;

    void normalize();
};

}  // namespace shadowforge
