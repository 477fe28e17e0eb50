#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shadowforge/enum_kernel.hpp"
#include "shadowforge/qseries.hpp"

namespace shadowforge {

/// A positive-definite lattice given by its Gram matrix, optionally carrying
/// an explicit basis (rows are basis vectors; rectangular rows are allowed,
/// e.g. the root basis of A_n living in n+1 ambient coordinates).  All
/// arithmetic is exact; every operation that only needs inner products works
/// from the Gram matrix alone.
class Lattice {
public:
    static Lattice from_basis(const RatMat& basis);
    static Lattice from_gram(const RatMat& gram);

    int dim() const { return static_cast<int>(gram_.size()); }
    const RatMat& gram() const { return gram_; }
    bool has_basis() const { return has_basis_; }
    const RatMat& basis() const;

    /// Determinant of the Gram matrix (positive).
    Rat det() const;
    bool is_integral() const;
    bool is_even() const;
    bool is_self_dual() const;

private:
    Lattice() = default;
    RatMat gram_;
    RatMat basis_;
    bool has_basis_ = false;
};

/// A coset x + L with x expressed in lattice coordinates.
struct Coset {
    Lattice lattice;
    RatVec shift;
};

NormCounts enumerate_by_norm(const Coset& coset, const Rat& max_norm,
                             EnumKernel kernel = EnumKernel::Auto);

/// Theta series with the exponent convention exponent = norm / 2, so the
/// integer lattice Z gives 1 + 2q^{1/2} + 2q^2 + ...
QSeries theta(const Coset& coset, long prec48, EnumKernel kernel = EnumKernel::Auto);
QSeries theta(const Lattice& lattice, long prec48, EnumKernel kernel = EnumKernel::Auto);

/// theta(coset) / eta^n: the graded character of the associated module.
QSeries lattice_character(const Coset& coset, long prec48, EnumKernel kernel = EnumKernel::Auto);
QSeries lattice_character(const Lattice& lattice, long prec48, EnumKernel kernel = EnumKernel::Auto);

/// Index-2 sublattice of even-norm vectors of an odd integral lattice.
Lattice even_sublattice(const Lattice& lattice);

/// One characteristic vector w (entries 0/1 in lattice coordinates):
/// <w,x> = <x,x> (mod 2) for all lattice vectors x.  Requires self-dual.
RatVec characteristic_vector(const Lattice& lattice);

struct CharacteristicNorms {
    NormCounts counts;        ///< characteristic vectors by norm, up to the requested bound
    Rat min_norm;             ///< smallest characteristic norm (search grown until found)
    std::uint64_t min_count;  ///< number of characteristic vectors of minimal norm
};

CharacteristicNorms characteristic_vectors(const Lattice& lattice, const Rat& max_norm,
                                           EnumKernel kernel = EnumKernel::Auto);

/// Theta series of {w/2 : w characteristic}; equals theta(lattice) when the
/// lattice is even (its shadow is the lattice itself).
QSeries shadow_theta(const Lattice& lattice, long prec48, EnumKernel kernel = EnumKernel::Auto);

struct UnimodularShadowReport {
    long norm1 = 0;                 ///< vectors of norm 1
    long norm2 = 0;                 ///< vectors of norm 2
    Rat char_min;                   ///< minimal characteristic norm
    std::uint64_t char_count = 0;   ///< count at the minimal norm
    bool part1 = false;             ///< min norm = n exactly for the Z^n signature
    bool part2_applicable = false;  ///< no norm-1 vectors
    bool part2_bound = false;       ///< norm-2 count >= 2n(23-n), equality iff min >= n-8
    bool part2_count = false;       ///< at equality, count at n-8 equals 2^{n-11} n
    bool dim1_ok = false;           ///< degree-1 character coefficient equals n + norm2

    bool pass() const {
        return part1 && dim1_ok && (!part2_applicable || (part2_bound && part2_count));
    }
    std::string json() const;
};

UnimodularShadowReport unimodular_shadow_check(const Lattice& lattice,
                                               EnumKernel kernel = EnumKernel::Auto);

/// Text format: first line n, then n rows; rows are basis vectors, or the
/// Gram matrix when gram_only is set.
Lattice read_lattice_text(std::istream& in, bool gram_only = false);

/// Writes the basis when one is attached, otherwise the Gram matrix (reload
/// the latter with the gram flag).
void write_lattice_text(std::ostream& out, const Lattice& lattice);

/// Named lattices: z1..z24, a1..a24, d3..d24, d4plus/d8plus/... (n = 0 mod 4),
/// e7, e8.
Lattice builtin_lattice(const std::string& name);

}  // namespace shadowforge
