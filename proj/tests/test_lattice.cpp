#include <sstream>

#include "doctest.h"
#include "shadowforge/lattice.hpp"
#include "shadowforge/modforms.hpp"

using namespace shadowforge;

TEST_CASE("builtin lattices have the expected invariants") {
    CHECK(builtin_lattice("z4").det() == 1);
    CHECK(builtin_lattice("z4").is_self_dual());
    CHECK_FALSE(builtin_lattice("z4").is_even());
    CHECK(builtin_lattice("a2").det() == 3);
    CHECK(builtin_lattice("a15").det() == 16);
    CHECK(builtin_lattice("d4").det() == 4);
    CHECK(builtin_lattice("d12").det() == 4);
    CHECK(builtin_lattice("d12").is_even());
    CHECK(builtin_lattice("e7").det() == 2);
    Lattice e8 = builtin_lattice("e8");
    CHECK(e8.det() == 1);
    CHECK(e8.is_even());
    CHECK(e8.is_self_dual());
    Lattice d12p = builtin_lattice("d12plus");
    CHECK(d12p.det() == 1);
    CHECK(d12p.is_self_dual());
    CHECK_FALSE(d12p.is_even());
    CHECK_THROWS_AS(builtin_lattice("d10plus"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_lattice("q5"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_lattice("z25"), std::invalid_argument);
}

TEST_CASE("theta series match the closed forms") {
    long p = 48 * 9;
    CHECK(theta(builtin_lattice("z1"), p).agree(theta_z(p)));
    CHECK(theta(builtin_lattice("e8"), p).agree(theta_e8(p)));
    QSeries tz = theta_z(p);
    CHECK(theta(builtin_lattice("z2"), p).agree(tz * tz));
    // D4+ is isometric to Z^4
    CHECK(theta(builtin_lattice("d4plus"), p).agree(tz.pow(4)));
}

TEST_CASE("enumeration counts small shells") {
    Lattice z2 = builtin_lattice("z2");
    NormCounts c = enumerate_by_norm(Coset{z2, {Rat(0), Rat(0)}}, Rat(2));
    CHECK(c == NormCounts{{Rat(0), 1}, {Rat(1), 4}, {Rat(2), 4}});
    // the odd coset of the even sublattice of D12+ holds 2^11 norm-3 vectors
    NormCounts d = enumerate_by_norm(Coset{builtin_lattice("d12plus"),
                                           RatVec(12, Rat(0))}, Rat(3));
    CHECK(d.at(Rat(3)) == 2048);
    CHECK(enumerate_by_norm(Coset{builtin_lattice("d12"), RatVec(12, Rat(0))}, Rat(3))
              .count(Rat(3)) == 0);
}

TEST_CASE("even sublattice constructions") {
    Lattice two_z = even_sublattice(builtin_lattice("z1"));
    CHECK(two_z.det() == 4);
    CHECK(two_z.gram()[0][0] == 4);
    CHECK(two_z.basis()[0][0] == 2);

    Lattice d2 = even_sublattice(builtin_lattice("z2"));
    CHECK(d2.det() == 4);
    CHECK(d2.is_even());
    Lattice checker = Lattice::from_basis({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}});
    CHECK(theta(d2, 48 * 8).agree(theta(checker, 48 * 8)));

    Lattice d12 = even_sublattice(builtin_lattice("d12plus"));
    CHECK(d12.det() == 4);
    CHECK(theta(d12, 48 * 6).agree(theta(builtin_lattice("d12"), 48 * 6)));

    CHECK_THROWS_WITH_AS(even_sublattice(builtin_lattice("e8")), "lattice is even",
                         std::domain_error);
    CHECK_THROWS_AS(even_sublattice(Lattice::from_gram({{rat(1, 2)}})), std::invalid_argument);
}

TEST_CASE("characteristic vectors of the standard lattices") {
    for (int n : {1, 2, 3, 8}) {
        Lattice l = builtin_lattice("z" + std::to_string(n));
        CharacteristicNorms cn = characteristic_vectors(l, Rat(n));
        CHECK(cn.min_norm == n);
        CHECK(cn.min_count == (std::uint64_t(1) << n));
        for (const auto& [norm, count] : cn.counts) {
            CHECK(is_integer(norm));
            CHECK((to_long(norm.get_num()) - n) % 8 == 0);
        }
    }
    CharacteristicNorms e8 = characteristic_vectors(builtin_lattice("e8"), Rat(8));
    CHECK(e8.min_norm == 0);
    CHECK(e8.min_count == 1);
    CharacteristicNorms d12p = characteristic_vectors(builtin_lattice("d12plus"), Rat(12));
    CHECK(d12p.min_norm == 4);
    CHECK(d12p.min_count == 24);
    CHECK_THROWS_WITH_AS(characteristic_vector(builtin_lattice("e7")),
                         "characteristic vectors require a self-dual lattice",
                         std::invalid_argument);
}

TEST_CASE("shadow theta series") {
    QSeries z1 = shadow_theta(builtin_lattice("z1"), 48 * 6);
    CHECK(z1.min_exp48() == 6);  // 2 q^(1/8)
    CHECK(z1.at48(6) == 2);
    CHECK(z1.at48(54) == 2);  // 2 q^(9/8)
    CHECK(shadow_theta(builtin_lattice("e8"), 48 * 6).agree(theta_e8(48 * 6)));
    QSeries d12p = shadow_theta(builtin_lattice("d12plus"), 48 * 4);
    CHECK(d12p.min_exp48() == 24);  // 24 q^(1/2)
    CHECK(d12p.at48(24) == 24);
}

TEST_CASE("lattice characters match the algebra generators") {
    long p = 48 * 8;
    CHECK(lattice_character(builtin_lattice("e8"), p).agree(chi8(p)));
    QSeries xh = chi_half(p + 48);
    CHECK(lattice_character(builtin_lattice("z1"), p).agree((xh * xh).truncated(p)));
    CHECK(lattice_character(builtin_lattice("z2"), p).agree(xh.pow(4).truncated(p)));
}

TEST_CASE("self-dual norm bound reports") {
    UnimodularShadowReport e8 = unimodular_shadow_check(builtin_lattice("e8"));
    CHECK(e8.norm1 == 0);
    CHECK(e8.norm2 == 240);
    CHECK(e8.char_min == 0);
    CHECK(e8.char_count == 1);
    CHECK(e8.part2_applicable);
    CHECK(e8.pass());
    CHECK(e8.json() ==
          "{\"norm1\":0,\"norm2\":240,\"char_min\":[0,1],\"char_count\":1,\"part1\":true,"
          "\"part2\":{\"applicable\":true,\"bound_met\":true,\"count_ok\":true}}");

    UnimodularShadowReport d12p = unimodular_shadow_check(builtin_lattice("d12plus"));
    CHECK(d12p.norm2 == 264);
    CHECK(d12p.char_min == 4);
    CHECK(d12p.char_count == 24);
    CHECK(d12p.pass());

    UnimodularShadowReport z8 = unimodular_shadow_check(builtin_lattice("z8"));
    CHECK(z8.norm1 == 16);
    CHECK_FALSE(z8.part2_applicable);
    CHECK(z8.part1);
    CHECK(z8.pass());

    CHECK_THROWS_WITH_AS(unimodular_shadow_check(builtin_lattice("z24")),
                         "formula out of range", std::domain_error);
}

TEST_CASE("text round trips") {
    Lattice z2 = builtin_lattice("z2");
    std::stringstream buf;
    write_lattice_text(buf, z2);
    Lattice back = read_lattice_text(buf);
    CHECK(back.gram() == z2.gram());

    Lattice gram_only = Lattice::from_gram({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}});
    std::stringstream buf2;
    write_lattice_text(buf2, gram_only);
    CHECK(buf2.str() == "2\n1 1\n1 2\n");
    Lattice back2 = read_lattice_text(buf2, true);
    CHECK(back2.gram() == gram_only.gram());

    std::stringstream bad("2\n1 0\n");
    CHECK_THROWS_WITH_AS(read_lattice_text(bad), "malformed lattice file",
                         std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_WITH_AS(Lattice::from_gram({{Rat(0)}}), "non-positive-definite Gram",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(Lattice::from_gram({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}),
                         "non-positive-definite Gram", std::domain_error);
    // a norm that cannot land on the exponent grid
    Lattice fifth = Lattice::from_gram({{rat(1, 5)}});
    CHECK_THROWS_WITH_AS(theta(fifth, 96), "unsupported norm denominator", std::domain_error);
}
