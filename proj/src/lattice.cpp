#include "shadowforge/lattice.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "shadowforge/modforms.hpp"

namespace shadowforge {

namespace {

RatMat gram_of_basis(const RatMat& basis) {
    std::size_t k = basis.size();
    std::size_t m = k ? basis[0].size() : 0;
    for (const RatVec& row : basis)
        if (row.size() != m) throw std::invalid_argument("ragged basis matrix");
    if (m < k) throw std::invalid_argument("basis has more rows than coordinates");
    RatMat g(k, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Rat s = 0;
            for (std::size_t l = 0; l < m; ++l) s += basis[i][l] * basis[j][l];
            g[i][j] = s;
            g[j][i] = s;
        }
    return g;
}

void validate_gram(const RatMat& gram) {
    for (const RatVec& row : gram)
        if (row.size() != gram.size()) throw std::invalid_argument("Gram matrix must be square");
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = i + 1; j < gram.size(); ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
    if (!gram.empty()) ldl_decompose(gram);  // throws on non-positive-definite input
}

}  // namespace

Lattice Lattice::from_basis(const RatMat& basis) {
    Lattice l;
    l.gram_ = gram_of_basis(basis);
    validate_gram(l.gram_);
    l.basis_ = basis;
    l.has_basis_ = true;
    return l;
}

Lattice Lattice::from_gram(const RatMat& gram) {
    Lattice l;
    l.gram_ = gram;
    validate_gram(l.gram_);
    return l;
}

const RatMat& Lattice::basis() const {
    if (!has_basis_) throw std::logic_error("lattice has no explicit basis");
    return basis_;
}

Rat Lattice::det() const {
    if (gram_.empty()) return 1;
    LdlFactors f = ldl_decompose(gram_);
    Rat d = 1;
    for (const Rat& x : f.diag) d *= x;
    return d;
}

bool Lattice::is_integral() const {
    for (const RatVec& row : gram_)
        for (const Rat& x : row)
            if (x.get_den() != 1) return false;
    return true;
}

bool Lattice::is_even() const {
    if (!is_integral()) return false;
    for (std::size_t i = 0; i < gram_.size(); ++i)
        if (mpz_odd_p(gram_[i][i].get_num().get_mpz_t())) return false;
    return true;
}

bool Lattice::is_self_dual() const { return is_integral() && det() == 1; }

NormCounts enumerate_by_norm(const Coset& coset, const Rat& max_norm, EnumKernel kernel) {
    if (static_cast<int>(coset.shift.size()) != coset.lattice.dim())
        throw std::invalid_argument("shift length differs from lattice dimension");
    return enumerate_by_norm(coset.lattice.gram(), coset.shift, max_norm, kernel);
}

QSeries theta(const Coset& coset, long prec48, EnumKernel kernel) {
    if (prec48 < 1) throw std::invalid_argument("precision must be positive");
    Rat qmax(prec48 - 1, 24);
    qmax.canonicalize();
    NormCounts counts = enumerate_by_norm(coset, qmax, kernel);
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec48), Rat(0));
    for (const auto& [norm, count] : counts) {
        Rat slot = norm * 24;  // exponent norm/2 on the 1/48 grid
        if (slot.get_den() != 1) throw std::domain_error("unsupported norm denominator");
        long s = to_long(slot.get_num());
        coeffs[static_cast<std::size_t>(s)] = Rat(static_cast<unsigned long>(count));
    }
    return QSeries(0, prec48, coeffs);
}

QSeries theta(const Lattice& lattice, long prec48, EnumKernel kernel) {
    return theta(Coset{lattice, RatVec(static_cast<std::size_t>(lattice.dim()), Rat(0))}, prec48,
                 kernel);
}

QSeries lattice_character(const Coset& coset, long prec48, EnumKernel kernel) {
    long n = coset.lattice.dim();
    QSeries th = theta(coset, prec48 + 2 * n, kernel);
    QSeries dedekind = eta(prec48 + 6 * n + 48);
    return (th * dedekind.pow(-n)).truncated(prec48);
}

QSeries lattice_character(const Lattice& lattice, long prec48, EnumKernel kernel) {
    return lattice_character(
        Coset{lattice, RatVec(static_cast<std::size_t>(lattice.dim()), Rat(0))}, prec48, kernel);
}

Lattice even_sublattice(const Lattice& lattice) {
    if (!lattice.is_integral())
        throw std::invalid_argument("even sublattice requires an integral lattice");
    int n = lattice.dim();
    const RatMat& g = lattice.gram();
    int pivot = -1;
    std::vector<int> parity(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        parity[static_cast<std::size_t>(i)] =
            mpz_odd_p(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].get_num().get_mpz_t()) ? 1 : 0;
        if (pivot < 0 && parity[static_cast<std::size_t>(i)]) pivot = i;
    }
    if (pivot < 0) throw std::domain_error("lattice is even");

    // Rows of T are a basis, in the old coordinates, of the kernel of the
    // parity functional x -> <x,x> mod 2 (which is linear since the Gram
    // matrix is integral): row i = e_i + parity_i e_pivot for i != pivot,
    // row pivot = 2 e_pivot.  det T = 2, giving the index-2 sublattice.
    RatMat t(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (i == pivot) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        } else {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            if (parity[static_cast<std::size_t>(i)])
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivot)] = 1;
        }
    }
    RatMat new_gram(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int a = 0; a < n; ++a) {
                if (t[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] == 0) continue;
                for (int b = 0; b < n; ++b)
                    s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                         g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                         t[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
            }
            new_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
    if (!lattice.has_basis()) return Lattice::from_gram(new_gram);
    const RatMat& b = lattice.basis();
    std::size_t m = b.empty() ? 0 : b[0].size();
    RatMat new_basis(static_cast<std::size_t>(n), RatVec(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (std::size_t l = 0; l < m; ++l) {
            Rat s = 0;
            for (int a = 0; a < n; ++a)
                s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                     b[static_cast<std::size_t>(a)][l];
            new_basis[static_cast<std::size_t>(i)][l] = s;
        }
    return Lattice::from_basis(new_basis);
}

RatVec characteristic_vector(const Lattice& lattice) {
    if (!lattice.is_self_dual())
        throw std::invalid_argument("characteristic vectors require a self-dual lattice");
    int n = lattice.dim();
    if (n > 62) throw std::invalid_argument("dimension too large for characteristic solve");
    const RatMat& g = lattice.gram();
    // Solve G w = diag(G) over the two-element field; G is invertible mod 2
    // because det G = 1.  Row i packs the matrix bits plus the right-hand
    // side at bit n.
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (mpz_odd_p(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_num().get_mpz_t()))
                rows[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
        if (mpz_odd_p(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].get_num().get_mpz_t()))
            rows[static_cast<std::size_t>(i)] |= std::uint64_t(1) << n;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (rows[static_cast<std::size_t>(r)] >> col & 1) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("parity system unexpectedly singular");
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n; ++r)
            if (r != col && (rows[static_cast<std::size_t>(r)] >> col & 1))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(col)];
    }
    RatVec w(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        if (rows[static_cast<std::size_t>(i)] >> n & 1) w[static_cast<std::size_t>(i)] = 1;
    return w;
}

CharacteristicNorms characteristic_vectors(const Lattice& lattice, const Rat& max_norm,
                                           EnumKernel kernel) {
    RatVec half = characteristic_vector(lattice);
    for (Rat& x : half) x /= 2;
    // Characteristic vectors form the coset w0 + 2L; their norms are four
    // times the norms of the coset w0/2 + L.
    NormCounts raw = enumerate_by_norm(lattice.gram(), half, max_norm / 4, kernel);
    CharacteristicNorms out;
    out.min_count = 0;
    for (const auto& [norm, count] : raw) out.counts.emplace(norm * 4, count);
    if (!out.counts.empty()) {
        out.min_norm = out.counts.begin()->first;
        out.min_count = out.counts.begin()->second;
        return out;
    }
    // The minimal characteristic norm never exceeds the dimension, so one
    // enumeration at that radius is guaranteed to find it.
    NormCounts wide = enumerate_by_norm(lattice.gram(), half, rat(lattice.dim(), 4), kernel);
    if (wide.empty()) throw std::logic_error("characteristic search exhausted");
    out.min_norm = wide.begin()->first * 4;
    out.min_count = wide.begin()->second;
    return out;
}

QSeries shadow_theta(const Lattice& lattice, long prec48, EnumKernel kernel) {
    RatVec half = characteristic_vector(lattice);
    for (Rat& x : half) x /= 2;
    return theta(Coset{lattice, half}, prec48, kernel);
}

std::string UnimodularShadowReport::json() const {
    std::ostringstream os;
    auto b = [](bool v) { return v ? "true" : "false"; };
    os << "{\"norm1\":" << norm1 << ",\"norm2\":" << norm2 << ",\"char_min\":" << rat_json(char_min)
       << ",\"char_count\":" << char_count << ",\"part1\":" << b(part1)
       << ",\"part2\":{\"applicable\":" << b(part2_applicable)
       << ",\"bound_met\":" << b(part2_bound) << ",\"count_ok\":" << b(part2_count) << "}}";
    return os.str();
}

UnimodularShadowReport unimodular_shadow_check(const Lattice& lattice, EnumKernel kernel) {
    if (!lattice.is_self_dual())
        throw std::invalid_argument("characteristic vectors require a self-dual lattice");
    int n = lattice.dim();
    if (n >= 24) throw std::domain_error("formula out of range");

    UnimodularShadowReport rep;
    NormCounts low = enumerate_by_norm(
        Coset{lattice, RatVec(static_cast<std::size_t>(n), Rat(0))}, Rat(2), kernel);
    auto count_at = [](const NormCounts& c, const Rat& key) -> std::uint64_t {
        auto it = c.find(key);
        return it == c.end() ? 0 : it->second;
    };
    rep.norm1 = static_cast<long>(count_at(low, Rat(1)));
    rep.norm2 = static_cast<long>(count_at(low, Rat(2)));

    CharacteristicNorms chars = characteristic_vectors(lattice, Rat(n), kernel);
    rep.char_min = chars.min_norm;
    rep.char_count = chars.min_count;

    // Z^n is the unique self-dual lattice whose shortest characteristic
    // vector has norm n; its signature here is the 2n vectors of norm 1.
    rep.part1 = (rep.char_min == Rat(n)) == (rep.norm1 == 2 * n);
    rep.part2_applicable = rep.norm1 == 0;
    if (rep.part2_applicable) {
        long bound = 2 * n * (23 - n);
        bool equality = rep.norm2 == bound;
        rep.part2_bound = rep.norm2 >= bound && (equality == (rep.char_min >= Rat(n - 8)));
        rep.part2_count = true;
        if (equality)
            rep.part2_count =
                Rat(static_cast<unsigned long>(count_at(chars.counts, Rat(n - 8)))) ==
                pow2(n - 11) * Rat(n);
    }

    QSeries chi = lattice_character(lattice, 144, kernel);
    rep.dim1_ok = chi.at48(-2 * n + 48) == Rat(n + rep.norm2);
    return rep;
}

Lattice read_lattice_text(std::istream& in, bool gram_only) {
    long n;
    if (!(in >> n) || n < 0 || n > 1024) throw std::invalid_argument("malformed lattice file");
    RatMat m(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("malformed lattice file");
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = parse_rat(tok);
        }
    return gram_only ? Lattice::from_gram(m) : Lattice::from_basis(m);
}

void write_lattice_text(std::ostream& out, const Lattice& lattice) {
    const RatMat& m = lattice.has_basis() ? lattice.basis() : lattice.gram();
    out << lattice.dim() << "\n";
    for (const RatVec& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << rat_str(row[j]);
        out << "\n";
    }
}

namespace {

RatMat identity_basis(int n) {
    RatMat b(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return b;
}

Lattice make_a(int n) {
    RatMat b(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n) + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -1;
    }
    return Lattice::from_basis(b);
}

Lattice make_d(int n) {
    RatMat b(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    b[0][0] = 1;
    b[0][1] = 1;
    for (int i = 1; i < n; ++i) {
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1] = 1;
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    }
    return Lattice::from_basis(b);
}

Lattice make_d_plus(int n) {
    // D_n plus its glue vector (1/2, ..., 1/2).  The rows below are lower
    // triangular with diagonal (2, 1, ..., 1, 1/2), so the basis is
    // unimodular for every n divisible by 4.
    RatMat b(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    b[0][0] = 2;
    for (int i = 1; i + 1 < n; ++i) {
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1] = -1;
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(j)] = Rat(1, 2);
    return Lattice::from_basis(b);
}

Lattice make_e7() {
    // Cartan matrix with nodes numbered so that node 2 hangs off node 4.
    static const int edges[6][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
    RatMat g(7, RatVec(7, Rat(0)));
    for (int i = 0; i < 7; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (const auto& e : edges) {
        g[static_cast<std::size_t>(e[0] - 1)][static_cast<std::size_t>(e[1] - 1)] = -1;
        g[static_cast<std::size_t>(e[1] - 1)][static_cast<std::size_t>(e[0] - 1)] = -1;
    }
    return Lattice::from_gram(g);
}

}  // namespace

Lattice builtin_lattice(const std::string& name) {
    auto fail = [&]() -> Lattice {
        throw std::invalid_argument("unknown builtin lattice: " + name);
    };
    if (name == "e7") return make_e7();
    if (name == "e8") return make_d_plus(8);
    if (name.size() < 2) return fail();
    char family = name[0];
    std::string rest = name.substr(1);
    bool plus = false;
    if (rest.size() > 4 && rest.substr(rest.size() - 4) == "plus") {
        plus = true;
        rest = rest.substr(0, rest.size() - 4);
    }
    for (char ch : rest)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return fail();
    int n = std::stoi(rest);
    if (n < 1 || n > 24) return fail();
    switch (family) {
        case 'z':
            if (plus) return fail();
            return Lattice::from_basis(identity_basis(n));
        case 'a':
            if (plus) return fail();
            return make_a(n);
        case 'd':
            if (plus) {
                if (n % 4 != 0) return fail();
                return make_d_plus(n);
            }
            if (n < 3) return fail();
            return make_d(n);
        default:
            return fail();
    }
}

}  // namespace shadowforge
