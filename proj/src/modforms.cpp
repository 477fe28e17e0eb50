#include "shadowforge/modforms.hpp"

namespace shadowforge {

namespace {

void require_prec(long prec_48) {
    if (prec_48 < QSeries::grid_den)
        throw std::invalid_argument("precision must cover at least one q-order");
}

}  // namespace

QSeries eta(long prec_48) {
    require_prec(prec_48);
    // q^(1/24) sits at grid slot 2; the pentagonal term q^(k(3k-1)/2) adds
    // 24k(3k-1) slots.
    RatVec c(static_cast<std::size_t>(prec_48 - 2), Rat(0));
    for (long k = 0;; ++k) {
        long lo = 24 * k * (3 * k - 1);      // k >= 0
        long hi = 24 * k * (3 * k + 1);      // mirror term (-k)
        if (lo + 2 >= prec_48 && hi + 2 >= prec_48) break;
        Rat sign = (k % 2 == 0) ? 1 : -1;
        if (lo + 2 < prec_48) c[static_cast<std::size_t>(lo)] = sign;
        if (k > 0 && hi + 2 < prec_48) c[static_cast<std::size_t>(hi)] = sign;
    }
    return QSeries(2, prec_48, std::move(c));
}

QSeries theta_z(long prec_48) {
    require_prec(prec_48);
    RatVec c(static_cast<std::size_t>(prec_48), Rat(0));
    c[0] = 1;
    for (long n = 1; 24 * n * n < prec_48; ++n) c[static_cast<std::size_t>(24 * n * n)] = 2;
    return QSeries(0, prec_48, std::move(c));
}

QSeries theta_e8(long prec_48) {
    require_prec(prec_48);
    long orders = (prec_48 + 47) / 48;
    std::vector<Int> sigma3(static_cast<std::size_t>(orders), Int(0));
    for (long d = 1; d < orders; ++d) {
        Int d3 = Int(d) * d * d;
        for (long m = d; m < orders; m += d) sigma3[static_cast<std::size_t>(m)] += d3;
    }
    RatVec c(static_cast<std::size_t>(prec_48), Rat(0));
    c[0] = 1;
    for (long n = 1; n < orders && 48 * n < prec_48; ++n)
        c[static_cast<std::size_t>(48 * n)] = Rat(240 * sigma3[static_cast<std::size_t>(n)]);
    return QSeries(0, prec_48, std::move(c));
}

QSeries chi_half(long prec_48) {
    require_prec(prec_48);
    long p = prec_48 + 8;
    return (theta_z(p) * eta(p).inverse()).sqrt().truncated(prec_48);
}

QSeries chi8(long prec_48) {
    require_prec(prec_48);
    long p = prec_48 + 24;
    return (theta_e8(p) * eta(p).pow(-8)).truncated(prec_48);
}

QSeries chi_fermi_shadow(long prec_48) {
    require_prec(prec_48);
    // Partitions into distinct parts: prod (1 + q^n) on the integer grid,
    // then shift by q^(1/24).
    long orders = (prec_48 - 2 + 47) / 48;
    std::vector<Int> f(static_cast<std::size_t>(orders), Int(0));
    f[0] = 1;
    for (long n = 1; n < orders; ++n)
        for (long k = orders - 1; k >= n; --k)
            f[static_cast<std::size_t>(k)] += f[static_cast<std::size_t>(k - n)];
    RatVec c(static_cast<std::size_t>(prec_48 - 2), Rat(0));
    for (long m = 0; m < orders && 48 * m + 2 < prec_48; ++m)
        c[static_cast<std::size_t>(48 * m)] = Rat(f[static_cast<std::size_t>(m)]);
    return QSeries(2, prec_48, std::move(c));
}

}  // namespace shadowforge
