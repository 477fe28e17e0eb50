#include "shadowforge/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace shadowforge {

namespace {

const Rat kZero = 0;

Int den_lcm(const RatVec& v) {
    Int l = 1;
    for (const Rat& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    return l;
}

/// Scales every coefficient by `scale` (an lcm of the denominators) into
/// plain integers, so convolutions can run in integer arithmetic and
/// canonicalize only once per output slot.
std::vector<Int> lift_to_int(const RatVec& v, const Int& scale) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int f;
        mpz_divexact(f.get_mpz_t(), scale.get_mpz_t(), v[i].get_den().get_mpz_t());
        out[i] = v[i].get_num() * f;
    }
    return out;
}

}  // namespace

QSeries::QSeries(long min_exp_48, long prec_48, RatVec coeffs)
    : min_exp_(min_exp_48), prec_(prec_48), coeffs_(std::move(coeffs)) {
    if (prec_ <= min_exp_)
        throw std::invalid_argument("series precision cutoff must exceed the leading exponent");
    if (static_cast<long>(coeffs_.size()) != prec_ - min_exp_)
        throw std::invalid_argument("coefficient count does not match the series window");
    normalize();
}

void QSeries::normalize() {
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<long>(lead);
    }
}

QSeries QSeries::zero(long prec_48) { return QSeries(prec_48 - 1, prec_48, {kZero}); }

QSeries QSeries::one(long prec_48) { return monomial(1, 0, prec_48); }

QSeries QSeries::monomial(const Rat& coeff, long exp_48, long prec_48) {
    RatVec c(static_cast<std::size_t>(prec_48 - exp_48), kZero);
    c.at(0) = coeff;
    return QSeries(exp_48, prec_48, std::move(c));
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r == 0; });
}

const Rat& QSeries::at48(long exp_48) const {
    if (exp_48 >= prec_) throw std::out_of_range("coefficient beyond series precision");
    if (exp_48 < min_exp_) return kZero;
    return coeffs_[static_cast<std::size_t>(exp_48 - min_exp_)];
}

const Rat& QSeries::at_q(const Rat& exp) const {
    Rat e48 = exp * grid_den;
    if (!is_integer(e48)) throw std::invalid_argument("exponent is not on the 1/48 grid");
    return at48(to_long(e48.get_num()));
}

QSeries QSeries::truncated(long prec_48) const {
    if (prec_48 > prec_) throw std::invalid_argument("cannot extend series precision");
    if (prec_48 <= min_exp_) return zero(prec_48);
    return QSeries(min_exp_, prec_48,
                   RatVec(coeffs_.begin(), coeffs_.begin() + (prec_48 - min_exp_)));
}

QSeries QSeries::shifted(long delta_48) const {
    return QSeries(min_exp_ + delta_48, prec_ + delta_48, coeffs_);
}

QSeries QSeries::scaled(const Rat& factor) const {
    RatVec c(coeffs_);
    for (Rat& r : c) r *= factor;
    return QSeries(min_exp_, prec_, std::move(c));
}

QSeries QSeries::operator-() const { return scaled(-1); }

QSeries operator+(const QSeries& a, const QSeries& b) {
    long min_r = std::min(a.min_exp_, b.min_exp_);
    long prec_r = std::min(a.prec_, b.prec_);
    if (prec_r <= min_r) return QSeries::zero(prec_r);
    RatVec c(static_cast<std::size_t>(prec_r - min_r), kZero);
    for (long e = min_r; e < prec_r; ++e) {
        Rat v = 0;
        if (e >= a.min_exp_ && e < a.prec_) v += a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
        if (e >= b.min_exp_ && e < b.prec_) v += b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
        c[static_cast<std::size_t>(e - min_r)] = v;
    }
    return QSeries(min_r, prec_r, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    // The product of the unknown tails starts at a.prec+b.min (resp.
    // b.prec+a.min), so the result is determined exactly below the smaller
    // of the two.
    long min_r = a.min_exp_ + b.min_exp_;
    long prec_r = std::min(a.prec_ + b.min_exp_, b.prec_ + a.min_exp_);
    long n = prec_r - min_r;
    Int da = den_lcm(a.coeffs_), db = den_lcm(b.coeffs_);
    std::vector<Int> ia = lift_to_int(a.coeffs_, da);
    std::vector<Int> ib = lift_to_int(b.coeffs_, db);
    std::vector<Int> acc(static_cast<std::size_t>(n), Int(0));
    for (std::size_t i = 0; i < ia.size() && static_cast<long>(i) < n; ++i) {
        if (ia[i] == 0) continue;
        std::size_t jmax = std::min(ib.size(), static_cast<std::size_t>(n - static_cast<long>(i)));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (ib[j] == 0) continue;
            mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    Int scale = da * db;
    RatVec c(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < c.size(); ++k) {
        Rat r(acc[k], scale);
        r.canonicalize();
        c[k] = r;
    }
    return QSeries(min_r, prec_r, std::move(c));
}

QSeries QSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("non-invertible series");
    long rel = window();
    // (sum a_j q^j)(sum b_k q^k) = 1 relative to the leading term: peel off
    // the k-th coefficient of the product.  Only nonzero a_j contribute.
    std::vector<long> support;
    for (long j = 1; j < rel; ++j)
        if (coeffs_[static_cast<std::size_t>(j)] != 0) support.push_back(j);
    RatVec b(static_cast<std::size_t>(rel), kZero);
    b[0] = Rat(1) / coeffs_[0];
    for (long k = 1; k < rel; ++k) {
        Rat s = 0;
        for (long j : support) {
            if (j > k) break;
            s += coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        }
        if (s != 0) b[static_cast<std::size_t>(k)] = -s / coeffs_[0];
    }
    return QSeries(-min_exp_, rel - min_exp_, std::move(b));
}

QSeries QSeries::sqrt() const {
    const Rat& lead = coeffs_[0];
    if (lead == 0 || min_exp_ % 2 != 0) throw std::domain_error("no grid square root");
    if (!mpz_perfect_square_p(lead.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(lead.get_den().get_mpz_t()) || lead < 0)
        throw std::domain_error("no grid square root");
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), lead.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), lead.get_den().get_mpz_t());
    Rat s0(rn, rd);
    s0.canonicalize();

    long rel = window();
    RatVec s(static_cast<std::size_t>(rel), kZero);
    s[0] = s0;
    Rat inv2s0 = Rat(1) / (2 * s0);
    // a_k = 2 s_0 s_k + sum_{i=1}^{k-1} s_i s_{k-i}; solve for s_k.  Track
    // the nonzero s_i seen so far to skip zero work.
    std::vector<long> support;
    for (long k = 1; k < rel; ++k) {
        Rat inner = 0;
        for (long i : support) {
            if (i >= k) break;
            inner += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
        }
        Rat v = (coeffs_[static_cast<std::size_t>(k)] - inner) * inv2s0;
        if (v != 0) {
            s[static_cast<std::size_t>(k)] = v;
            support.push_back(k);
        }
    }
    return QSeries(min_exp_ / 2, min_exp_ / 2 + rel, std::move(s));
}

QSeries QSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return one(window());
    QSeries result = *this;
    QSeries base = *this;
    k -= 1;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

bool QSeries::agree(const QSeries& a, const QSeries& b) {
    long lo = std::min(a.min_exp_, b.min_exp_);
    long hi = std::min(a.prec_, b.prec_);
    for (long e = lo; e < hi; ++e) {
        const Rat& ca = (e < a.min_exp_) ? kZero : a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
        const Rat& cb = (e < b.min_exp_) ? kZero : b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
        if (ca != cb) return false;
    }
    return true;
}

namespace {

std::string exp_str(long e48) {
    Rat e(e48, QSeries::grid_den);
    e.canonicalize();
    return rat_str(e);
}

}  // namespace

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (long e = min_exp_; e < prec_; ++e) {
        const Rat& c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << rat_str(a);
        } else {
            if (a != 1) out << rat_str(a) << "*";
            out << "q^(" << exp_str(e) << ")";
        }
    }
    if (first) out << "0";
    out << " + O(q^(" << exp_str(prec_) << "))";
    return out.str();
}

std::string QSeries::json() const {
    std::ostringstream out;
    out << "{\"den\":48,\"min_exp\":" << min_exp_ << ",\"prec\":" << prec_ << ",\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out << ",";
        out << rat_json(coeffs_[i]);
    }
    out << "]}";
    return out.str();
}

}  // namespace shadowforge
