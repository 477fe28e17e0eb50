#include <random>

#include "doctest.h"
#include "shadowforge/qseries.hpp"

using namespace shadowforge;

namespace {

/// Series with the given values at integer q-powers starting at min48.
QSeries poly48(long min48, const std::vector<long>& values, long prec48) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec48 - min48), Rat(0));
    for (std::size_t i = 0; i < values.size(); ++i)
        coeffs.at(48 * i) = values[i];
    return QSeries(min48, prec48, coeffs);
}

QSeries random_series(std::mt19937& rng, bool invertible) {
    std::uniform_int_distribution<long> min_d(-4, 4), len_d(3, 12), coeff_d(-5, 5);
    long min = min_d(rng) * 48;
    long len = len_d(rng);
    std::vector<Rat> cs(static_cast<std::size_t>(len) * 48, Rat(0));
    for (long i = 0; i < len; ++i) {
        long c = coeff_d(rng);
        if (invertible && i == 0 && c == 0) c = 1;
        cs[static_cast<std::size_t>(48 * i)] = c;
    }
    return QSeries(min, min + 48 * len, cs);
}

}  // namespace

TEST_CASE("construction trims leading zeros without losing precision") {
    QSeries s = poly48(-48, {0, 0, 3, 5}, 144);
    CHECK(s.min_exp48() == 48);
    CHECK(s.prec48() == 144);
    CHECK(s.at48(48) == 3);
    CHECK(s.at48(96) == 5);
}

TEST_CASE("coefficient access outside the window") {
    QSeries s = poly48(0, {1, 2}, 96);
    CHECK(s.at48(-48) == 0);
    CHECK_THROWS_WITH_AS(s.at48(96), "coefficient beyond series precision", std::out_of_range);
}

TEST_CASE("addition keeps the smaller window") {
    QSeries a = poly48(0, {1, 1, 1}, 144);
    QSeries b = poly48(48, {2}, 96);
    QSeries s = a + b;
    CHECK(s.prec48() == 96);
    CHECK(s.at48(0) == 1);
    CHECK(s.at48(48) == 3);
}

TEST_CASE("multiplication obeys the truncation rule") {
    QSeries a = poly48(-48, {1, 1}, 48);   // 1/q + 1, window [-1, 1)
    QSeries b = poly48(48, {1, 1}, 144);   // q + q^2, window [1, 3)
    QSeries p = a * b;
    // prec = min(a.prec + b.min, b.prec + a.min) = 2 q-orders
    CHECK(p.min_exp48() == 0);
    CHECK(p.prec48() == 96);
    CHECK(p.at48(0) == 1);
    CHECK(p.at48(48) == 2);
}

TEST_CASE("geometric series inverse") {
    QSeries one_minus_q = poly48(0, {1, -1}, 480);
    QSeries inv = one_minus_q.inverse();
    for (long k = 0; k < 10; ++k) CHECK(inv.at48(48 * k) == 1);
    QSeries sq = inv * inv;
    for (long k = 0; k < 8; ++k) CHECK(sq.at48(48 * k) == k + 1);
}

TEST_CASE("inverse requires an invertible leading coefficient") {
    QSeries z = QSeries::zero(96);
    CHECK_THROWS_WITH_AS(z.inverse(), "non-invertible series", std::domain_error);
}

TEST_CASE("square roots on the grid") {
    QSeries s = poly48(0, {1, 2, 1}, 480);  // (1+q)^2
    QSeries r = s.sqrt();
    CHECK(r.at48(0) == 1);
    CHECK(r.at48(48) == 1);
    CHECK(r.at48(96) == 0);

    QSeries shifted = poly48(96, {4}, 480);  // 4 q^2
    QSeries rs = shifted.sqrt();
    CHECK(rs.min_exp48() == 48);
    CHECK(rs.at48(48) == 2);

    // odd leading slot: q^(25/48) has no square root on the 1/48 grid
    CHECK_THROWS_WITH_AS(poly48(25, {1}, 480).sqrt(), "no grid square root", std::domain_error);
    CHECK_THROWS_WITH_AS(poly48(0, {2}, 480).sqrt(), "no grid square root", std::domain_error);
}

TEST_CASE("powers") {
    QSeries b = poly48(0, {1, 1}, 480);
    QSeries p = b.pow(5);
    long binom[6] = {1, 5, 10, 10, 5, 1};
    for (long k = 0; k <= 5; ++k) CHECK(p.at48(48 * k) == binom[k]);
    QSeries inv2 = poly48(0, {1, -1}, 480).pow(-2);
    for (long k = 0; k < 9; ++k) CHECK(inv2.at48(48 * k) == k + 1);
    QSeries unit = b.pow(0);
    CHECK(unit.at48(0) == 1);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 40; ++iter) {
        QSeries a = random_series(rng, false);
        QSeries b = random_series(rng, false);
        QSeries c = random_series(rng, false);
        CHECK((a * b).agree(b * a));
        CHECK(((a + b) * c).agree(a * c + b * c));
        CHECK(((a * b) * c).agree(a * (b * c)));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("inverse and sqrt round-trips on random series") {
    std::mt19937 rng(987654321);
    for (int iter = 0; iter < 25; ++iter) {
        QSeries a = random_series(rng, true);
        CHECK((a * a.inverse()).agree(QSeries::one(48)));
        QSeries sq = a * a;
        QSeries r = sq.sqrt();
        CHECK((r * r).agree(sq));
    }
}

TEST_CASE("scalar and shift operations") {
    QSeries s = poly48(0, {1, 3}, 96);
    QSeries t = s.shifted(-24).scaled(Rat(2));
    CHECK(t.min_exp48() == -24);
    CHECK(t.at48(-24) == 2);
    CHECK(t.at48(24) == 6);
}

TEST_CASE("truncation can only shrink") {
    QSeries s = poly48(0, {1, 1, 1}, 144);
    CHECK(s.truncated(96).prec48() == 96);
    CHECK_THROWS_WITH_AS(s.truncated(192), "cannot extend series precision",
                         std::invalid_argument);
}

TEST_CASE("text rendering") {
    std::vector<Rat> coeffs(48, Rat(0));
    coeffs[0] = 1;
    coeffs[8] = -2;
    QSeries s(-16, 32, coeffs);
    CHECK(s.str() == "q^(-1/3) - 2*q^(-1/6) + O(q^(2/3))");
    CHECK(QSeries::zero(48).str() == "0 + O(q^(1))");
    CHECK(poly48(0, {5}, 48).str() == "5 + O(q^(1))");
}

TEST_CASE("json rendering") {
    QSeries s(-2, 1, {Rat(1), Rat(0), rat(3, 2)});
    CHECK(s.json() == "{\"den\":48,\"min_exp\":-2,\"prec\":1,\"coeffs\":[[1,1],[0,1],[3,2]]}");
}
