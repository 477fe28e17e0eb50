#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "shadowforge/lattice.hpp"

namespace shadowforge {

using WeightCounts = std::map<int, std::uint64_t>;

/// Binary linear code of length at most 64; generator rows are bit masks
/// (coordinate j at bit j) kept in reduced row-echelon form so equal codes
/// have equal representations.
class BinaryCode {
public:
    static BinaryCode make(int n, const std::vector<std::uint64_t>& generators);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::uint64_t>& generators() const { return rows_; }

    /// Dimension n/2 and every pair of rows (self-pairs included) meets in
    /// an even number of coordinates.
    bool is_self_dual() const;

private:
    BinaryCode() = default;
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Codeword counts by Hamming weight (full 2^k enumeration).
WeightCounts weight_enumerator(const BinaryCode& code);

/// Weights of the shadow {v : v.c = wt(c)/2 (mod 2) for all codewords c}.
WeightCounts code_shadow_weights(const BinaryCode& code);

/// The lattice {x/sqrt(2) : x in Z^n, x mod 2 in C}, as an exact Gram matrix.
Lattice construction_a(const BinaryCode& code);

/// Text format: first line "n k", then k rows of n bits.
BinaryCode read_code_text(std::istream& in);
void write_code_text(std::ostream& out, const BinaryCode& code);

/// Named codes: rep2 (repetition of length 2), e8code (extended Hamming).
BinaryCode builtin_code(const std::string& name);

std::string weights_json(const WeightCounts& weights);

}  // namespace shadowforge
