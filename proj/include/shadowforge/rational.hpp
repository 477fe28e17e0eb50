#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadowforge {

// All arithmetic in this library is exact.  Rat is an arbitrary-precision
// rational kept in lowest terms (GMP canonicalizes on construction and after
// every operation); Int is an arbitrary-precision integer.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

/// 2^e as an exact rational, for any sign of e.
inline Rat pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    Rat r(1, p);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return v.get_si();
}

/// "num/den", with "/den" omitted for integers.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// JSON pair [num,den] with both parts emitted as raw (arbitrary-precision)
/// integer tokens.
inline std::string rat_json(const Rat& r) {
    return "[" + r.get_num().get_str() + "," + r.get_den().get_str() + "]";
}

/// Parses "3", "-7/2", or decimal forms like "23.5".
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal: " + text);
        Int num(digits, 10);
        Rat r(num, int_pow(10, static_cast<unsigned long>(frac_len)));
        r.canonicalize();
        return r;
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

}  // namespace shadowforge
