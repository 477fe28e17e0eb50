#include "shadowforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "shadowforge/charpoly.hpp"
#include "shadowforge/codes.hpp"
#include "shadowforge/lattice.hpp"
#include "shadowforge/liedata.hpp"
#include "shadowforge/modforms.hpp"

namespace shadowforge {

namespace {

long env_orders() {
    if (const char* env = std::getenv("SHADOWFORGE_PREC")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1000) return v;
    }
    return 26;
}

RatVec parse_csv(const std::string& s) {
    RatVec out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_rat(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

Lattice load_lattice(const std::string& spec, bool gram_only) {
    std::ifstream in(spec);
    if (in) return read_lattice_text(in, gram_only);
    return builtin_lattice(spec);
}

BinaryCode load_code(const std::string& spec) {
    std::ifstream in(spec);
    if (in) return read_code_text(in);
    return builtin_code(spec);
}

const char* bstr(bool v) { return v ? "true" : "false"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact shadow characters of self-dual SVOAs, lattices, and binary codes"};
    app.require_subcommand(1);
    int status = 0;

    struct Options {
        long orders;
        bool json = false;
        bool gram = false;
        bool voa = false;
        std::string name, lattice, code, shift, rank, alist, dim1;
        EnumKernel kernel = EnumKernel::Auto;
    } o;
    o.orders = env_orders();

    const std::map<std::string, EnumKernel> kernel_names{{"auto", EnumKernel::Auto},
                                                         {"reference", EnumKernel::Reference},
                                                         {"scalar", EnumKernel::Scalar},
                                                         {"avx2", EnumKernel::Avx2},
                                                         {"box", EnumKernel::Box}};

    auto add_prec = [&](CLI::App* sub) {
        sub->add_option("--prec", o.orders, "number of q-expansion orders")
            ->check(CLI::Range(1l, 1000l))
            ->capture_default_str();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };
    auto add_kernel = [&](CLI::App* sub) {
        sub->add_option("--kernel", o.kernel, "enumeration kernel")
            ->transform(CLI::CheckedTransformer(kernel_names, CLI::ignore_case));
    };
    auto add_lattice = [&](CLI::App* sub) {
        sub->add_option("--lattice", o.lattice, "builtin name or lattice file")->required();
        sub->add_flag("--gram", o.gram, "file rows form a Gram matrix, not a basis");
    };
    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", o.code, "builtin name or code file")->required();
    };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("--rank", o.rank, "central charge (rational)")->required();
        auto* a = sub->add_option("--A", o.alist, "polynomial coefficients, comma-separated");
        auto* d = sub->add_option("--dim1", o.dim1, "dimension of the weight-1 space");
        a->excludes(d);
        d->excludes(a);
        sub->add_flag("--voa", o.voa, "mark the algebra as a plain VOA");
    };

    auto build_poly = [&]() -> CharacterPoly {
        Rat c = parse_rat(o.rank);
        if (!o.alist.empty()) {
            CharacterPoly p{c, parse_csv(o.alist), o.voa};
            validate(p);
            return p;
        }
        if (o.dim1.empty())
            throw CLI::RequiredError("one of --A or --dim1");
        CharacterPoly p = three_term(c, parse_rat(o.dim1));
        p.is_voa = o.voa;
        validate(p);
        return p;
    };

    CLI::App* qexp = app.add_subcommand("qexp", "print a named q-series");
    qexp->add_option("name", o.name, "eta | theta-z | theta-e8 | chi-half | chi8 | chi-fermi-shadow")
        ->required();
    add_prec(qexp);
    add_json(qexp);
    qexp->callback([&] {
        long p = 48 * o.orders;
        QSeries s = o.name == "eta"               ? eta(p)
                    : o.name == "theta-z"         ? theta_z(p)
                    : o.name == "theta-e8"        ? theta_e8(p)
                    : o.name == "chi-half"        ? chi_half(p)
                    : o.name == "chi8"            ? chi8(p)
                    : o.name == "chi-fermi-shadow"
                        ? chi_fermi_shadow(p)
                        : throw CLI::ValidationError("name", "unknown series: " + o.name);
        out << (o.json ? s.json() : s.str()) << "\n";
    });

    CLI::App* th = app.add_subcommand("theta", "theta series of a lattice or coset");
    add_lattice(th);
    th->add_option("--shift", o.shift, "coset shift in lattice coordinates, comma-separated");
    add_prec(th);
    add_json(th);
    add_kernel(th);
    th->callback([&] {
        Lattice l = load_lattice(o.lattice, o.gram);
        RatVec shift(static_cast<std::size_t>(l.dim()), Rat(0));
        if (!o.shift.empty()) shift = parse_csv(o.shift);
        QSeries s = theta(Coset{l, shift}, 48 * o.orders, o.kernel);
        out << (o.json ? s.json() : s.str()) << "\n";
    });

    CLI::App* sl = app.add_subcommand("shadow-lattice",
                                      "characteristic vectors and shadow theta of a self-dual lattice");
    add_lattice(sl);
    add_prec(sl);
    add_json(sl);
    add_kernel(sl);
    sl->callback([&] {
        Lattice l = load_lattice(o.lattice, o.gram);
        CharacteristicNorms cn = characteristic_vectors(l, Rat(l.dim()), o.kernel);
        QSeries s = shadow_theta(l, 48 * o.orders, o.kernel);
        if (o.json) {
            out << "{\"char_min\":" << rat_json(cn.min_norm) << ",\"char_count\":" << cn.min_count
                << ",\"counts\":{";
            bool first = true;
            for (const auto& [norm, count] : cn.counts) {
                if (!first) out << ",";
                first = false;
                out << "\"" << rat_str(norm) << "\":" << count;
            }
            out << "},\"theta\":" << s.json() << "}\n";
        } else {
            out << "char_min=" << rat_str(cn.min_norm) << " char_count=" << cn.min_count << "\n";
            out << "counts:";
            for (const auto& [norm, count] : cn.counts) out << " " << rat_str(norm) << ":" << count;
            out << "\n" << s.str() << "\n";
        }
    });

    CLI::App* ch = app.add_subcommand("char", "character of a self-dual SVOA");
    add_poly(ch);
    add_prec(ch);
    add_json(ch);
    ch->callback([&] {
        CharacterPoly p = build_poly();
        QSeries s = character(p, 48 * o.orders);
        if (o.json) {
            out << "{\"poly\":" << poly_json(p) << ",\"series\":" << s.json() << "}\n";
        } else {
            out << "A=";
            for (std::size_t i = 0; i < p.A.size(); ++i) out << (i ? "," : "") << rat_str(p.A[i]);
            out << "\n" << s.str() << "\n";
        }
    });

    CLI::App* sh = app.add_subcommand("shadow", "shadow character of a self-dual SVOA");
    add_poly(sh);
    add_prec(sh);
    add_json(sh);
    sh->callback([&] {
        CharacterPoly p = build_poly();
        ShadowReport rep = shadow_report(p, 48 * o.orders);
        if (o.json) {
            out << "{\"poly\":" << poly_json(p) << ",\"h\":" << rat_json(rep.h)
                << ",\"dim\":" << rat_json(rep.dim_at_h) << ",\"series\":" << rep.shadow_chi.json()
                << "}\n";
        } else {
            out << rep.shadow_chi.str() << "\n";
            out << "h=" << rat_str(rep.h) << " dim=" << rat_str(rep.dim_at_h) << "\n";
        }
    });

    CLI::App* bd = app.add_subcommand("bounds",
                                      "minimal dim V_1 and extremal shadow count for a rank");
    bd->add_option("--rank", o.rank, "central charge (rational)")->required();
    add_json(bd);
    bd->callback([&] {
        auto [dim1_min, count] = long_shadow_bounds(parse_rat(o.rank));
        if (o.json)
            out << "{\"dim1_min\":" << rat_json(dim1_min) << ",\"shadow_count\":" << rat_json(count)
                << "}\n";
        else
            out << "dim1_min=" << rat_str(dim1_min) << " shadow_count=" << rat_str(count) << "\n";
    });

    CLI::App* vt = app.add_subcommand("verify-table",
                                      "check the classification table of extremal SVOAs");
    add_json(vt);
    vt->callback([&] {
        std::vector<TableRowCheck> rows = verify_table();
        bool all = true;
        for (const TableRowCheck& r : rows) all = all && r.pass;
        if (o.json) {
            out << table_report_json(rows) << "\n";
        } else {
            for (const TableRowCheck& r : rows)
                out << (r.pass ? "PASS" : "FAIL") << " c=" << rat_str(r.c) << " dim1=" << r.expected
                    << " formula=" << r.formula << " lie_sum=" << r.lie_sum << "\n";
        }
        if (!all) status = 1;
    });

    CLI::App* co = app.add_subcommand("corollary",
                                      "norm bounds and characteristic-vector checks for a self-dual lattice");
    add_lattice(co);
    add_json(co);
    add_kernel(co);
    co->callback([&] {
        Lattice l = load_lattice(o.lattice, o.gram);
        UnimodularShadowReport rep = unimodular_shadow_check(l, o.kernel);
        if (o.json) {
            out << rep.json() << "\n";
        } else {
            out << "norm1=" << rep.norm1 << " norm2=" << rep.norm2 << "\n";
            out << "char_min=" << rat_str(rep.char_min) << " char_count=" << rep.char_count << "\n";
            out << "part1=" << bstr(rep.part1) << "\n";
            out << "part2: applicable=" << bstr(rep.part2_applicable)
                << " bound_met=" << bstr(rep.part2_bound) << " count_ok=" << bstr(rep.part2_count)
                << "\n";
            out << "dim1_check=" << bstr(rep.dim1_ok) << "\n";
            out << (rep.pass() ? "PASS" : "FAIL") << "\n";
        }
        if (!rep.pass()) status = 1;
    });

    CLI::App* ca = app.add_subcommand("construct-a",
                                      "lattice of a binary code (prints a Gram matrix; reload with --gram)");
    add_code(ca);
    ca->callback([&] {
        Lattice l = construction_a(load_code(o.code));
        write_lattice_text(out, l);
    });

    CLI::App* cs = app.add_subcommand("code-shadow", "shadow weights of a self-dual binary code");
    add_code(cs);
    add_json(cs);
    cs->callback([&] {
        WeightCounts w = code_shadow_weights(load_code(o.code));
        if (o.json) {
            out << weights_json(w) << "\n";
        } else {
            out << "weights:";
            for (const auto& [weight, count] : w) out << " " << weight << ":" << count;
            out << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

}  // namespace shadowforge
