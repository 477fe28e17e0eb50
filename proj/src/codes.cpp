#include "shadowforge/codes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shadowforge {

namespace {

int lowest_bit(std::uint64_t v) { return std::countr_zero(v); }

void gray_enumerate(const std::vector<std::uint64_t>& rows, std::uint64_t start,
                    WeightCounts& counts) {
    if (rows.size() > 28) throw std::invalid_argument("code dimension too large to enumerate");
    std::uint64_t word = start;
    ++counts[std::popcount(word)];
    std::uint64_t total = std::uint64_t(1) << rows.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= rows[static_cast<std::size_t>(lowest_bit(i))];
        ++counts[std::popcount(word)];
    }
}

}  // namespace

BinaryCode BinaryCode::make(int n, const std::vector<std::uint64_t>& generators) {
    if (n < 0 || n > 64) throw std::invalid_argument("code length out of range");
    std::uint64_t mask = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    BinaryCode code;
    code.n_ = n;
    for (std::uint64_t row : generators) {
        if (row & ~mask) throw std::invalid_argument("generator exceeds code length");
        for (std::uint64_t existing : code.rows_)
            if (row >> lowest_bit(existing) & 1) row ^= existing;
        if (row == 0) throw std::invalid_argument("dependent generator rows");
        for (std::uint64_t& existing : code.rows_)
            if (existing >> lowest_bit(row) & 1) existing ^= row;
        code.rows_.push_back(row);
    }
    std::sort(code.rows_.begin(), code.rows_.end(),
              [](std::uint64_t a, std::uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
    return code;
}

bool BinaryCode::is_self_dual() const {
    if (2 * dimension() != n_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = i; j < rows_.size(); ++j)
            if (std::popcount(rows_[i] & rows_[j]) % 2 != 0) return false;
    return true;
}

WeightCounts weight_enumerator(const BinaryCode& code) {
    WeightCounts counts;
    gray_enumerate(code.generators(), 0, counts);
    return counts;
}

WeightCounts code_shadow_weights(const BinaryCode& code) {
    if (!code.is_self_dual())
        throw std::invalid_argument("code shadow requires a self-dual code");
    // Solve v.g = wt(g)/2 (mod 2) on the generators; since all intersections
    // are even the conditions extend to every codeword.  With generators in
    // echelon form the vector supported on the pivot coordinates of the
    // odd-defect rows is a solution, and the full shadow is its coset by the
    // dual code, which is the code itself.
    std::uint64_t v0 = 0;
    for (std::uint64_t row : code.generators())
        if ((std::popcount(row) / 2) % 2 != 0) v0 |= std::uint64_t(1) << lowest_bit(row);
    WeightCounts counts;
    gray_enumerate(code.generators(), v0, counts);
    return counts;
}

Lattice construction_a(const BinaryCode& code) {
    int n = code.length();
    std::uint64_t pivots = 0;
    std::vector<std::vector<long>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t g : code.generators()) {
        pivots |= std::uint64_t(1) << lowest_bit(g);
        std::vector<long> r(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = g >> j & 1;
        rows.push_back(std::move(r));
    }
    for (int j = 0; j < n; ++j) {
        if (pivots >> j & 1) continue;
        std::vector<long> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(j)] = 2;
        rows.push_back(std::move(r));
    }
    // Gram of the rows divided by sqrt(2): all inner products are even, so
    // the Gram matrix is integral exactly when the code is self-orthogonal.
    std::size_t k = rows.size();
    RatMat gram(k, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            long s = 0;
            for (int l = 0; l < n; ++l)
                s += rows[i][static_cast<std::size_t>(l)] * rows[j][static_cast<std::size_t>(l)];
            gram[i][j] = rat(s, 2);
            gram[j][i] = gram[i][j];
        }
    return Lattice::from_gram(gram);
}

BinaryCode read_code_text(std::istream& in) {
    long n, k;
    if (!(in >> n >> k) || n < 0 || n > 64 || k < 0 || k > n)
        throw std::invalid_argument("malformed code file");
    std::vector<std::uint64_t> rows;
    for (long i = 0; i < k; ++i) {
        std::string bits;
        if (!(in >> bits) || bits.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("malformed code file");
        std::uint64_t row = 0;
        for (long j = 0; j < n; ++j) {
            char ch = bits[static_cast<std::size_t>(j)];
            if (ch != '0' && ch != '1') throw std::invalid_argument("malformed code file");
            if (ch == '1') row |= std::uint64_t(1) << j;
        }
        rows.push_back(row);
    }
    return BinaryCode::make(static_cast<int>(n), rows);
}

void write_code_text(std::ostream& out, const BinaryCode& code) {
    out << code.length() << " " << code.dimension() << "\n";
    for (std::uint64_t row : code.generators()) {
        for (int j = 0; j < code.length(); ++j) out << (row >> j & 1 ? '1' : '0');
        out << "\n";
    }
}

BinaryCode builtin_code(const std::string& name) {
    if (name == "rep2") return BinaryCode::make(2, {0b11});
    // Extended Hamming code as a first-order Reed-Muller code: the all-ones
    // word plus the three coordinate-hyperplane indicators on 8 points.
    if (name == "e8code") return BinaryCode::make(8, {0xFF, 0xAA, 0xCC, 0xF0});
    throw std::invalid_argument("unknown builtin code: " + name);
}

std::string weights_json(const WeightCounts& weights) {
    std::ostringstream os;
    os << "{\"weights\":{";
    bool first = true;
    for (const auto& [w, count] : weights) {
        if (!first) os << ",";
        first = false;
        os << "\"" << w << "\":" << count;
    }
    os << "}}";
    return os.str();
}

}  // namespace shadowforge
