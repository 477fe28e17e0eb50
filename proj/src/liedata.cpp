#include "shadowforge/liedata.hpp"

#include <sstream>
#include <stdexcept>

namespace shadowforge {

long dim_simple(const LieLabel& label) {
    if (label.multiplicity < 1 || label.level < 1) throw std::invalid_argument("invalid Lie label");
    long n = label.rank;
    long dim = 0;
    switch (label.family) {
        case 'A':
            if (n < 1) throw std::invalid_argument("invalid Lie label");
            dim = n * (n + 2);
            break;
        case 'B':
        case 'C':
            if (n < 2) throw std::invalid_argument("invalid Lie label");
            dim = n * (2 * n + 1);
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("invalid Lie label");
            dim = n * (2 * n - 1);
            break;
        case 'E':
            if (n == 6) dim = 78;
            else if (n == 7) dim = 133;
            else if (n == 8) dim = 248;
            else throw std::invalid_argument("invalid Lie label");
            break;
        case 'F':
            if (n != 4) throw std::invalid_argument("invalid Lie label");
            dim = 52;
            break;
        case 'G':
            if (n != 2) throw std::invalid_argument("invalid Lie label");
            dim = 14;
            break;
        case 'U':
            if (n != 1) throw std::invalid_argument("invalid Lie label");
            dim = 1;
            break;
        default:
            throw std::invalid_argument("invalid Lie label");
    }
    return label.multiplicity * dim;
}

namespace {

bool candidate(const Rat& c, const std::vector<LieLabel>& labels) {
    if (!is_integer(c)) return false;
    for (const LieLabel& l : labels) {
        if (l.level != 1) return false;
        if (l.family != 'A' && l.family != 'D' && l.family != 'E' && l.family != 'U') return false;
    }
    return true;
}

TableEntry entry(const Rat& c, long dim1, std::vector<LieLabel> labels, std::string display) {
    TableEntry e{c, dim1, std::move(labels), std::move(display), false};
    e.lattice_candidate = candidate(e.c, e.labels);
    return e;
}

std::vector<TableEntry> build_table() {
    std::vector<TableEntry> t;
    t.push_back(entry(Rat(8), 248, {{'E', 8, 1, 1}}, "E8"));
    t.push_back(entry(Rat(12), 276, {{'D', 12, 1, 1}}, "D12"));
    t.push_back(entry(Rat(14), 266, {{'E', 7, 1, 2}}, "E7^2"));
    t.push_back(entry(Rat(15), 255, {{'A', 15, 1, 1}}, "A15"));
    t.push_back(entry(rat(31, 2), 248, {{'E', 8, 2, 1}}, "E8,2"));
    t.push_back(entry(Rat(16), 240, {{'D', 8, 1, 2}}, "D8^2"));
    t.push_back(entry(Rat(17), 221, {{'A', 11, 1, 1}, {'E', 6, 1, 1}}, "A11 E6"));
    t.push_back(entry(rat(35, 2), 210, {{'C', 10, 1, 1}}, "C10"));
    t.push_back(entry(Rat(18), 198, {{'D', 6, 1, 3}}, "D6^3"));
    t.push_back(entry(rat(37, 2), 185, {{'E', 7, 2, 1}, {'F', 4, 1, 1}}, "E7,2 F4"));
    t.push_back(entry(Rat(19), 171, {{'A', 7, 1, 2}, {'D', 5, 1, 1}}, "A7^2 D5"));
    t.push_back(entry(rat(39, 2), 156, {{'D', 8, 2, 1}, {'B', 4, 1, 1}}, "D8,2 B4"));
    t.push_back(entry(Rat(20), 140, {{'D', 4, 1, 5}}, "D4^5"));
    t.push_back(entry(rat(41, 2), 123, {{'A', 9, 2, 1}, {'A', 4, 1, 1}}, "A9,2 A4"));
    t.push_back(entry(Rat(21), 105, {{'A', 3, 1, 7}}, "A3^7"));
    t.push_back(entry(rat(43, 2), 86, {{'D', 4, 2, 2}, {'C', 2, 1, 3}}, "D4,2^2 C2^3"));
    t.push_back(entry(Rat(22), 66, {{'A', 1, 1, 22}}, "A1^22"));
    t.push_back(entry(rat(45, 2), 45, {{'A', 1, 2, 15}}, "A1,2^15"));
    t.push_back(entry(Rat(23), 23, {{'U', 1, 1, 23}}, "U1^23"));
    t.push_back(entry(rat(47, 2), 0, {}, "(trivial)"));
    return t;
}

}  // namespace

const std::vector<TableEntry>& classification_table() {
    static const std::vector<TableEntry> table = build_table();
    return table;
}

std::vector<TableRowCheck> verify_table() {
    std::vector<TableRowCheck> rows;
    for (const TableEntry& e : classification_table()) {
        Rat formula = 2 * e.c * (rat(47, 2) - e.c);
        if (!is_integer(formula)) throw std::logic_error("non-integral table bound");
        long f = to_long(formula.get_num());
        long sum = 0;
        for (const LieLabel& l : e.labels) sum += dim_simple(l);
        rows.push_back({e.c, e.dim1, f, sum, e.dim1 == f && sum == e.dim1});
    }
    return rows;
}

std::string table_report_json(const std::vector<TableRowCheck>& rows) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << "{\"c\":" << rat_json(rows[i].c) << ",\"expected\":" << rows[i].expected
           << ",\"lie_sum\":" << rows[i].lie_sum << ",\"pass\":"
           << (rows[i].pass ? "true" : "false") << "}";
    }
    os << "]";
    return os.str();
}

}  // namespace shadowforge
