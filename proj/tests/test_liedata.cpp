#include "doctest.h"
#include "oracles.hpp"
#include "shadowforge/liedata.hpp"

using namespace shadowforge;

TEST_CASE("adjoint dimensions") {
    CHECK(dim_simple({'E', 8}) == 248);
    CHECK(dim_simple({'E', 7}) == 133);
    CHECK(dim_simple({'E', 6}) == 78);
    CHECK(dim_simple({'F', 4}) == 52);
    CHECK(dim_simple({'G', 2}) == 14);
    CHECK(dim_simple({'C', 10}) == 210);
    CHECK(dim_simple({'B', 4}) == 36);
    CHECK(dim_simple({'D', 12}) == 276);
    CHECK(dim_simple({'A', 15}) == 255);
    CHECK(dim_simple({'A', 1, 2, 15}) == 45);
    CHECK(dim_simple({'U', 1, 1, 23}) == 23);
}

TEST_CASE("label validation") {
    CHECK_THROWS_AS(dim_simple({'E', 9}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'F', 5}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'G', 3}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'D', 2}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'B', 1}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'U', 2}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'A', 0}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'A', 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(dim_simple({'X', 1}), std::invalid_argument);
}

TEST_CASE("the classification passes both recomputations") {
    std::vector<TableRowCheck> rows = verify_table();
    REQUIRE(rows.size() == 20);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].pass);
        CHECK(rows[i].expected == rows[i].formula);
        CHECK(rows[i].expected == rows[i].lie_sum);
        CHECK(rows[i].c == rat(oracle::table[i].twice_c, 2));
        CHECK(rows[i].expected == oracle::table[i].dim1);
    }
    // dim V_1 decreases strictly with the rank from c = 12 on
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].expected < rows[i - 1].expected);
}

TEST_CASE("lattice candidates") {
    const std::vector<TableEntry>& table = classification_table();
    REQUIRE(table.size() == 20);
    for (const TableEntry& e : table) {
        CAPTURE(e.display);
        bool integral = is_integer(e.c);
        bool simply_laced = true;
        for (const LieLabel& l : e.labels)
            simply_laced = simply_laced && (l.family == 'A' || l.family == 'D' ||
                                            l.family == 'E' || l.family == 'U') && l.level == 1;
        CHECK(e.lattice_candidate == (integral && simply_laced));
    }
    // the two ends of the table
    CHECK(table.front().lattice_candidate);       // E8
    CHECK_FALSE(table.back().lattice_candidate);  // empty V_1 at c = 23 1/2
    CHECK(table.back().display == "(trivial)");
}

TEST_CASE("report json shape") {
    std::string s = table_report_json(verify_table());
    CHECK(s.substr(0, 1) == "[");
    CHECK(s.find("{\"c\":[8,1],\"expected\":248,") == 1);
    CHECK(s.find("\"pass\":true") != std::string::npos);
    CHECK(s.find("\"pass\":false") == std::string::npos);
}
