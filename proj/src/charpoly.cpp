#include "shadowforge/charpoly.hpp"

#include "shadowforge/modforms.hpp"

#include <sstream>

namespace shadowforge {

namespace {

void require_rank(const Rat& c) {
    if (c < 0 || !is_integer(Rat(2 * c)))
        throw std::invalid_argument("rank must be a nonnegative half-integer");
}

long two_c(const Rat& c) { return to_long(Rat(2 * c).get_num()); }

/// Generator precision that leaves at least prec_48 of the result window
/// after multiplying powers with total x-degree up to 2c.
long gen_prec(const Rat& c, long prec_48) {
    return prec_48 + to_long(ceil_rat(2 * c)) + 48;
}

Int binom(long n, long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// Converts coefficients mu_j of the basis x^(2c-16j) (x^16 - y)^j into
/// the monomial coefficients A_i = (-1)^i sum_{j>=i} mu_j binom(j, i).
RatVec alt_basis_to_monomial(const RatVec& mu) {
    RatVec A(mu.size(), Rat(0));
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = i; j < mu.size(); ++j) s += mu[j] * Rat(binom(static_cast<long>(j), static_cast<long>(i)));
        A[i] = (i % 2 == 0) ? s : Rat(-s);
    }
    return A;
}

}  // namespace

long poly_length(const Rat& c) {
    require_rank(c);
    return to_long(floor_rat(c / 8)) + 1;
}

void validate(const CharacterPoly& p) {
    require_rank(p.c);
    if (static_cast<long>(p.A.size()) != poly_length(p.c))
        throw std::invalid_argument("coefficient count must be floor(c/8)+1");
    Rat sum = 0;
    for (const Rat& a : p.A) sum += a;
    if (sum != 1) throw std::invalid_argument("not a character normalization");
    if (p.is_voa && !is_integer(Rat(p.c / 8)))
        throw std::invalid_argument("vertex operator algebras require rank divisible by 8");
}

std::string poly_json(const CharacterPoly& p) {
    std::ostringstream out;
    out << "{\"c\":" << rat_json(p.c) << ",\"A\":[";
    for (std::size_t i = 0; i < p.A.size(); ++i) {
        if (i > 0) out << ",";
        out << rat_json(p.A[i]);
    }
    out << "],\"is_voa\":" << (p.is_voa ? "true" : "false") << "}";
    return out.str();
}

QSeries character(const CharacterPoly& p, long prec_48) {
    validate(p);
    long m = static_cast<long>(p.A.size()) - 1;
    long n2c = two_c(p.c);
    long pg = gen_prec(p.c, prec_48);
    QSeries x = chi_half(pg);
    QSeries y = chi8(pg);

    std::vector<QSeries> ypow;
    ypow.push_back(QSeries::one(pg + 16));
    for (long i = 1; i <= m; ++i) ypow.push_back(ypow.back() * y);

    // Walk i from m down to 0 so the x-power grows by x^16 per step.
    QSeries xp = x.pow(n2c - 16 * m);
    QSeries x16 = x.pow(16);
    QSeries sum = QSeries::zero(prec_48);
    for (long i = m; i >= 0; --i) {
        if (p.A[static_cast<std::size_t>(i)] != 0)
            sum = sum + (xp * ypow[static_cast<std::size_t>(i)]).scaled(p.A[static_cast<std::size_t>(i)]);
        if (i > 0) xp = xp * x16;
    }
    return sum.truncated(prec_48);
}

CharacterPoly decompose(const Rat& c, const RatVec& chi_prefix, bool is_voa) {
    require_rank(c);
    long m = poly_length(c) - 1;
    long len = static_cast<long>(chi_prefix.size());
    if (len < m + 1) throw std::invalid_argument("character prefix shorter than floor(c/8)+1");
    long n2c = two_c(c);

    // Build the alternative basis C_j = x^(2c-16j) (x^16 - y)^j, which is
    // triangular in half-integer q-steps: C_j leads at q^(-c/24 + j/2)
    // with coefficient 16^j.
    long pg = gen_prec(c, -n2c + 24 * len + 48);
    QSeries x = chi_half(pg);
    QSeries diff = x.pow(16) - chi8(pg);
    std::vector<QSeries> basis;
    QSeries xp = x.pow(n2c - 16 * m);
    QSeries x16 = x.pow(16);
    QSeries dp = QSeries::one(pg + 16);
    std::vector<QSeries> dpow;
    dpow.push_back(dp);
    for (long j = 1; j <= m; ++j) dpow.push_back(dpow.back() * diff);
    for (long j = m; j >= 0; --j) {
        basis.insert(basis.begin(), xp * dpow[static_cast<std::size_t>(j)]);
        if (j > 0) xp = xp * x16;
    }

    RatVec mu(static_cast<std::size_t>(m + 1), Rat(0));
    for (long k = 0; k <= m; ++k) {
        Rat rhs = chi_prefix[static_cast<std::size_t>(k)];
        for (long j = 0; j < k; ++j)
            rhs -= mu[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)].at48(-n2c + 24 * k);
        mu[static_cast<std::size_t>(k)] = rhs / basis[static_cast<std::size_t>(k)].at48(-n2c + 24 * k);
    }

    CharacterPoly p{c, alt_basis_to_monomial(mu), is_voa};
    validate(p);

    // Every supplied coefficient (including the ones beyond the solve) must
    // match the reconstructed character.
    QSeries chi = character(p, -n2c + 24 * len + 1);
    for (long k = 0; k < len; ++k)
        if (chi.at48(-n2c + 24 * k) != chi_prefix[static_cast<std::size_t>(k)])
            throw std::domain_error("character prefix does not match any character polynomial");
    return p;
}

CharacterPoly three_term(const Rat& c, const Rat& dim_one) {
    require_rank(c);
    if (c >= 24) throw std::domain_error("formula out of range");
    long m = poly_length(c) - 1;
    RatVec mu = {Rat(1), Rat(-c / 8), (dim_one - 2 * c * (Rat(47, 2) - c)) / 256};
    for (std::size_t j = static_cast<std::size_t>(m + 1); j < mu.size(); ++j)
        if (mu[j] != 0)
            throw std::domain_error("no three-term character polynomial for these parameters");
    mu.resize(static_cast<std::size_t>(m + 1));
    CharacterPoly p{c, alt_basis_to_monomial(mu), false};
    validate(p);
    return p;
}

QSeries shadow_character(const CharacterPoly& p, long prec_48) {
    validate(p);
    if (p.is_voa) return character(p, prec_48);
    long m = static_cast<long>(p.A.size()) - 1;
    long n2c = two_c(p.c);
    long fl = to_long(floor_rat(p.c));
    long pg = gen_prec(p.c, prec_48);
    QSeries f = chi_fermi_shadow(pg);
    QSeries y = chi8(pg);

    std::vector<QSeries> ypow;
    ypow.push_back(QSeries::one(pg + 16));
    for (long i = 1; i <= m; ++i) ypow.push_back(ypow.back() * y);

    QSeries fp = f.pow(n2c - 16 * m);
    QSeries f16 = f.pow(16);
    QSeries sum = QSeries::zero(prec_48);
    for (long i = m; i >= 0; --i) {
        if (p.A[static_cast<std::size_t>(i)] != 0) {
            Rat coeff = p.A[static_cast<std::size_t>(i)] * pow2(fl - 8 * i);
            sum = sum + (fp * ypow[static_cast<std::size_t>(i)]).scaled(coeff);
        }
        if (i > 0) fp = fp * f16;
    }
    return sum.truncated(prec_48);
}

Rat minimal_weight(const QSeries& chi, const Rat& c) {
    if (chi.is_zero()) throw std::domain_error("minimal weight exceeds precision");
    Rat h = Rat(chi.min_exp48(), QSeries::grid_den) + c / 24;
    h.canonicalize();
    return h;
}

ShadowReport shadow_report(const CharacterPoly& p, long prec_48) {
    QSeries s = shadow_character(p, prec_48);
    Rat h = minimal_weight(s, p.c);
    Rat d = s.at48(s.min_exp48());
    return ShadowReport{h, d, std::move(s)};
}

ShadowBoundVerdict shadow_weight_bound_check(const CharacterPoly& p, long prec_48) {
    QSeries s = shadow_character(p, prec_48);
    Rat h = minimal_weight(s, p.c);
    ShadowBoundVerdict v{h, true, true, true};
    v.bound_ok = h <= p.c / 8;
    Rat slack = p.c / 8 - h;
    bool extremal = p.A[0] == 1;
    for (std::size_t k = 1; k < p.A.size(); ++k)
        if (p.A[k] != 0) extremal = false;
    for (std::size_t k = 0; k < p.A.size(); ++k)
        if (Rat(static_cast<long>(k)) > slack && p.A[k] != 0) v.vanishing_ok = false;
    v.extremal_iff_ok = ((h == p.c / 8) == extremal);
    return v;
}

std::pair<Rat, Rat> long_shadow_bounds(const Rat& c) {
    require_rank(c);
    Rat dim_min = 2 * c * (Rat(47, 2) - c);
    dim_min.canonicalize();
    Rat count = pow2(to_long(floor_rat(c)) - 11) * c;
    count.canonicalize();
    return {dim_min, count};
}

Rat shadow_deficit(const Rat& c, const Rat& dim_one) {
    require_rank(c);
    if (c >= 24) throw std::invalid_argument("deficit is defined for ranks below 24");
    Rat d = pow2(to_long(floor_rat(c)) - 24) * (dim_one - 2 * c * (Rat(47, 2) - c));
    d.canonicalize();
    return d;
}

CharacterPoly tensor(const CharacterPoly& p, const CharacterPoly& q) {
    validate(p);
    validate(q);
    Rat c = p.c + q.c;
    RatVec A(static_cast<std::size_t>(poly_length(c)), Rat(0));
    for (std::size_t i = 0; i < p.A.size(); ++i)
        for (std::size_t j = 0; j < q.A.size(); ++j) A[i + j] += p.A[i] * q.A[j];
    return CharacterPoly{c, std::move(A), p.is_voa && q.is_voa};
}

int tensor_shadow_multiplier(const Rat& c, const Rat& d) {
    require_rank(c);
    require_rank(d);
    return (!is_integer(c) && !is_integer(d)) ? 2 : 1;
}

CharacterPoly strip_fermions(const CharacterPoly& p, long r) {
    validate(p);
    if (r < 0) throw std::invalid_argument("fermion count must be nonnegative");
    if (Rat(p.c - Rat(r, 2)) < 0) throw std::domain_error("fermion count exceeded");
    long n2c = two_c(p.c);
    for (std::size_t i = 0; i < p.A.size(); ++i)
        if (p.A[i] != 0 && n2c - 16 * static_cast<long>(i) < r)
            throw std::domain_error("fermion count exceeded");
    Rat c = p.c - Rat(r, 2);
    c.canonicalize();
    RatVec A(p.A.begin(), p.A.begin() + poly_length(c));
    CharacterPoly out{c, std::move(A), r == 0 && p.is_voa};
    validate(out);
    return out;
}

}  // namespace shadowforge
