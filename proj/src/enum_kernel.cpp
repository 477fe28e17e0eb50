#include "shadowforge/enum_kernel.hpp"

#include <cmath>
#include <cstdlib>

namespace shadowforge {

namespace {

void check_form(const RatMat& gram, const RatVec& shift) {
    std::size_t n = shift.size();
    if (gram.size() != n) throw std::invalid_argument("Gram matrix and shift sizes differ");
    for (const RatVec& row : gram)
        if (row.size() != n) throw std::invalid_argument("Gram matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
}

/// Integer range { t : (t + gamma)^2 <= bound }.
struct TRange {
    bool empty;
    Int lo, hi;
};

TRange solve_range(const Rat& gamma, const Rat& bound) {
    if (bound < 0) return {true, Int(0), Int(0)};
    // With gamma = p/q (q > 0), X = q t + p is an integer and the condition
    // reads X^2 <= bound q^2, i.e. X^2 <= floor(bound q^2).
    const Int& p = gamma.get_num();
    const Int& q = gamma.get_den();
    Int s = isqrt(floor_rat(bound * q * q));
    Rat lo(-s - p, q), hi(s - p, q);
    lo.canonicalize();
    hi.canonicalize();
    TRange r{false, ceil_rat(lo), floor_rat(hi)};
    r.empty = r.lo > r.hi;
    return r;
}

/// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
RatMat rat_inverse(const RatMat& m) {
    std::size_t n = m.size();
    RatMat a(m);
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Full-precision bounded depth-first search over the LDL^T levels; the
/// correctness baseline every other kernel is tested against.
class ReferenceSearch {
public:
    ReferenceSearch(const LdlFactors& f, const RatVec& shift, const Rat& max_norm)
        : f_(f), shift_(shift), qmax_(max_norm), n_(static_cast<int>(shift.size())), v_(shift.size()) {}

    NormCounts run() {
        descend(n_ - 1, Rat(0));
        return std::move(counts_);
    }

private:
    void descend(int i, const Rat& partial) {
        Rat offset = 0;
        for (int j = i + 1; j < n_; ++j)
            offset += v_[static_cast<std::size_t>(j)] * f_.lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        Rat gamma = shift_[static_cast<std::size_t>(i)] + offset;
        const Rat& d = f_.diag[static_cast<std::size_t>(i)];
        TRange r = solve_range(gamma, (qmax_ - partial) / d);
        if (r.empty) return;
        for (Int t = r.lo; t <= r.hi; ++t) {
            Rat w = gamma + Rat(t);
            Rat val = partial + d * w * w;
            if (i == 0) {
                ++counts_[val];
            } else {
                v_[static_cast<std::size_t>(i)] = shift_[static_cast<std::size_t>(i)] + Rat(t);
                descend(i - 1, val);
            }
        }
    }

    const LdlFactors& f_;
    const RatVec& shift_;
    Rat qmax_;
    int n_;
    RatVec v_;
    NormCounts counts_;
};

/// Independent oracle for small dimensions: rectangular bounds
/// v_i^2 <= max_norm * (gram^-1)_ii, full norm evaluated at each point.
class BoxSearch {
public:
    BoxSearch(const RatMat& gram, const RatVec& shift, const Rat& max_norm)
        : gram_(gram), shift_(shift), qmax_(max_norm), n_(static_cast<int>(shift.size())), v_(shift.size()) {
        inv_diag_.reserve(shift.size());
        RatMat inv = rat_inverse(gram);
        for (std::size_t i = 0; i < shift.size(); ++i) inv_diag_.push_back(inv[i][i]);
    }

    NormCounts run() {
        descend(0);
        return std::move(counts_);
    }

private:
    void descend(int idx) {
        if (idx == n_) {
            Rat norm = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    norm += gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            v_[static_cast<std::size_t>(i)] * v_[static_cast<std::size_t>(j)];
            if (norm <= qmax_) ++counts_[norm];
            return;
        }
        TRange r = solve_range(shift_[static_cast<std::size_t>(idx)],
                               qmax_ * inv_diag_[static_cast<std::size_t>(idx)]);
        if (r.empty) return;
        for (Int t = r.lo; t <= r.hi; ++t) {
            v_[static_cast<std::size_t>(idx)] = shift_[static_cast<std::size_t>(idx)] + Rat(t);
            descend(idx + 1);
        }
    }

    const RatMat& gram_;
    const RatVec& shift_;
    Rat qmax_;
    int n_;
    RatVec v_;
    RatVec inv_diag_;
    NormCounts counts_;
};

// ---------------------------------------------------------------------------
// Fast path: the same depth-first search with all state scaled to int64.
//
// Let W be a common denominator of the form values (so W*norm is an integer
// for every lattice/coset vector), NUM a common denominator of the LDL^T
// entries and the shift, and T = W * NUM^2 * lcm(diag denominators).  Then
//   - w'_i = NUM * w_i is an integer for the triangular coordinates w_i,
//   - M_i = T * diag_i / NUM^2 is an integer with T * diag_i w_i^2
//     = M_i w'_i^2,
//   - every full form value v satisfies (T*v) % (T/W) == 0, so the leaf
//     can emit exact W-scaled values.
// A preflight pass bounds every intermediate quantity with exact integer
// arithmetic; if anything could leave 59 bits the caller falls back to the
// reference kernel, so overflow is impossible rather than merely unlikely.
// ---------------------------------------------------------------------------

constexpr std::int64_t kHistCap = std::int64_t(1) << 22;

struct FastPlan {
    int n = 0;
    std::int64_t num_scale = 1;  // NUM
    std::int64_t budget = 0;     // floor(T * max_norm)
    std::int64_t t_over_w = 1;   // T / W
    std::int64_t hist_len = 0;   // floor(W * max_norm) + 1
    Int w_scale = 1;             // W
    std::vector<std::int64_t> mult;                  // M_i
    std::vector<std::int64_t> nshift;                // NUM * shift_i
    std::vector<std::vector<std::int64_t>> nl;       // NUM * L[i][k], k < i
    std::vector<std::vector<std::int64_t>> nlshift;  // shift_i * NUM * L[i][k]
};

const Int kLimit = Int(1) << 59;

bool fits(const Int& v) { return v < kLimit && v > -kLimit; }

/// Exact rational that must be an integer by construction.
Int exact_int(const Rat& r) {
    if (r.get_den() != 1) throw std::logic_error("scaled quantity is not integral");
    return r.get_num();
}

bool build_fast_plan(const RatMat& gram, const RatVec& shift, const Rat& qmax,
                     const LdlFactors& f, FastPlan& plan) {
    int n = static_cast<int>(shift.size());
    Int den_g = 1, den_s = 1, den_l = 1, den_d = 1;
    for (const RatVec& row : gram)
        for (const Rat& x : row) mpz_lcm(den_g.get_mpz_t(), den_g.get_mpz_t(), x.get_den().get_mpz_t());
    for (const Rat& x : shift) mpz_lcm(den_s.get_mpz_t(), den_s.get_mpz_t(), x.get_den().get_mpz_t());
    for (const RatVec& row : f.lower)
        for (const Rat& x : row) mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), x.get_den().get_mpz_t());
    for (const Rat& x : f.diag) mpz_lcm(den_d.get_mpz_t(), den_d.get_mpz_t(), x.get_den().get_mpz_t());

    Int W = den_g * den_s * den_s;
    Int bw = floor_rat(Rat(W) * qmax);
    if (bw >= kHistCap) return false;
    Int num = den_l * den_s;
    Int t_over_w = num * num * den_d;
    Int bt = floor_rat(Rat(W * t_over_w) * qmax);
    if (!fits(bt) || !fits(t_over_w) || !fits(num)) return false;

    // Per-coordinate bounds |v_j| <= sqrt(qmax * (gram^-1)_jj) feed the
    // offset-magnitude analysis below.
    RatMat inv = rat_inverse(gram);
    std::vector<Int> vbound(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        vbound[static_cast<std::size_t>(j)] = isqrt(floor_rat(qmax * inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)])) + 1;

    plan.n = n;
    plan.num_scale = to_long(num);
    plan.budget = to_long(bt);
    plan.t_over_w = to_long(t_over_w);
    plan.hist_len = to_long(bw) + 1;
    plan.w_scale = W;
    plan.mult.assign(static_cast<std::size_t>(n), 0);
    plan.nshift.assign(static_cast<std::size_t>(n), 0);
    plan.nl.assign(static_cast<std::size_t>(n), {});
    plan.nlshift.assign(static_cast<std::size_t>(n), {});

    for (int i = 0; i < n; ++i) {
        const Rat& d = f.diag[static_cast<std::size_t>(i)];
        Int dd_quot;
        mpz_divexact(dd_quot.get_mpz_t(), den_d.get_mpz_t(), d.get_den().get_mpz_t());
        Int mi = W * dd_quot * d.get_num();
        if (!fits(mi)) return false;
        plan.mult[static_cast<std::size_t>(i)] = to_long(mi);

        Int ns = exact_int(Rat(num) * shift[static_cast<std::size_t>(i)]);
        // Offset magnitude: |NUM * sum_{j>i} v_j L_{ji}| plus the shift term.
        Rat ob = 0;
        for (int j = i + 1; j < n; ++j)
            ob += Rat(vbound[static_cast<std::size_t>(j)]) * abs(f.lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        Int obnd = ceil_rat(Rat(num) * ob);
        if (!fits(abs(ns) + obnd)) return false;
        plan.nshift[static_cast<std::size_t>(i)] = to_long(ns);

        Int tbound = vbound[static_cast<std::size_t>(i)] + ceil_rat(abs(shift[static_cast<std::size_t>(i)])) + 1;
        auto& row_nl = plan.nl[static_cast<std::size_t>(i)];
        auto& row_nls = plan.nlshift[static_cast<std::size_t>(i)];
        row_nl.assign(static_cast<std::size_t>(i), 0);
        row_nls.assign(static_cast<std::size_t>(i), 0);
        for (int k = 0; k < i; ++k) {
            Int nl = exact_int(Rat(num) * f.lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            Int nls = exact_int(Rat(num) * shift[static_cast<std::size_t>(i)] *
                                f.lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            if (!fits(tbound * abs(nl)) || !fits(abs(nls))) return false;
            row_nl[static_cast<std::size_t>(k)] = to_long(nl);
            row_nls[static_cast<std::size_t>(k)] = to_long(nls);
        }
    }
    return true;
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }

std::int64_t isqrt64(std::int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

using LeafFn = void (*)(std::uint64_t*, std::int64_t, std::int64_t, std::int64_t, std::int64_t);

class FastSearch {
public:
    FastSearch(const FastPlan& plan, LeafFn leaf)
        : plan_(plan),
          leaf_(leaf),
          bufs_(static_cast<std::size_t>(plan.n), std::vector<std::int64_t>(static_cast<std::size_t>(plan.n), 0)),
          hist_(static_cast<std::size_t>(plan.hist_len), 0) {}

    NormCounts run() {
        std::vector<std::int64_t> top(static_cast<std::size_t>(plan_.n), 0);
        descend(plan_.n - 1, 0, top);
        NormCounts out;
        for (std::size_t idx = 0; idx < hist_.size(); ++idx) {
            if (hist_[idx] == 0) continue;
            Rat key(Int(static_cast<long>(idx)), plan_.w_scale);
            key.canonicalize();
            out.emplace(std::move(key), hist_[idx]);
        }
        return out;
    }

private:
    void descend(int i, std::int64_t partial, const std::vector<std::int64_t>& off) {
        const std::int64_t rem = plan_.budget - partial;
        const std::int64_t center = plan_.nshift[static_cast<std::size_t>(i)] + off[static_cast<std::size_t>(i)];
        const std::int64_t s = isqrt64(rem / plan_.mult[static_cast<std::size_t>(i)]);
        const std::int64_t tlo = ceil_div64(-s - center, plan_.num_scale);
        const std::int64_t thi = floor_div64(s - center, plan_.num_scale);
        if (tlo > thi) return;
        if (i == 0) {
            const std::int64_t m0 = plan_.mult[0];
            auto value = [&](std::int64_t t) {
                std::int64_t w = plan_.num_scale * t + center;
                return (partial + m0 * (w * w)) / plan_.t_over_w;
            };
            std::int64_t len = thi - tlo + 1;
            if (len < 3) {
                for (std::int64_t t = tlo; t <= thi; ++t) ++hist_[static_cast<std::size_t>(value(t))];
            } else {
                std::int64_t v0 = value(tlo), v1 = value(tlo + 1), v2 = value(tlo + 2);
                leaf_(hist_.data(), v0, v1 - v0, v2 - 2 * v1 + v0, len);
            }
            return;
        }
        const auto& nl = plan_.nl[static_cast<std::size_t>(i)];
        const auto& nls = plan_.nlshift[static_cast<std::size_t>(i)];
        auto& child = bufs_[static_cast<std::size_t>(i - 1)];
        for (std::int64_t t = tlo; t <= thi; ++t) {
            std::int64_t w = plan_.num_scale * t + center;
            std::int64_t next = partial + plan_.mult[static_cast<std::size_t>(i)] * (w * w);
            for (int k = 0; k < i; ++k)
                child[static_cast<std::size_t>(k)] =
                    off[static_cast<std::size_t>(k)] + nls[static_cast<std::size_t>(k)] + t * nl[static_cast<std::size_t>(k)];
            descend(i - 1, next, child);
        }
    }

    const FastPlan& plan_;
    LeafFn leaf_;
    std::vector<std::vector<std::int64_t>> bufs_;
    std::vector<std::uint64_t> hist_;
};

}  // namespace

bool avx2_available() {
#if defined(SHADOWFORGE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

LdlFactors ldl_decompose(const RatMat& gram) {
    std::size_t n = gram.size();
    LdlFactors f{RatMat(n, RatVec(n, Rat(0))), RatVec(n, Rat(0))};
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = gram[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
        if (d <= 0) throw std::domain_error("non-positive-definite Gram");
        f.diag[j] = d;
        f.lower[j][j] = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat v = gram[i][j];
            for (std::size_t k = 0; k < j; ++k) v -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
            f.lower[i][j] = v / d;
        }
    }
    return f;
}

void scalar_hist_quadratic(std::uint64_t* hist, std::int64_t v0, std::int64_t d0,
                           std::int64_t dd, std::int64_t len) {
    for (std::int64_t t = 0; t < len; ++t) {
        ++hist[v0];
        v0 += d0;
        d0 += dd;
    }
}

NormCounts enumerate_by_norm(const RatMat& gram, const RatVec& shift, const Rat& max_norm,
                             EnumKernel kernel) {
    check_form(gram, shift);
    if (max_norm < 0) return {};
    if (shift.empty()) return {{Rat(0), 1}};

    if (kernel == EnumKernel::Box) {
        if (shift.size() > 8) throw std::invalid_argument("box enumeration supports dimension at most 8");
        ldl_decompose(gram);  // positive-definiteness check
        return BoxSearch(gram, shift, max_norm).run();
    }

    LdlFactors f = ldl_decompose(gram);
    if (kernel == EnumKernel::Reference) return ReferenceSearch(f, shift, max_norm).run();
    if (kernel == EnumKernel::Avx2 && !avx2_available())
        throw std::invalid_argument("AVX2 kernel unavailable on this CPU");

    FastPlan plan;
    if (!build_fast_plan(gram, shift, max_norm, f, plan))
        return ReferenceSearch(f, shift, max_norm).run();

    LeafFn leaf = &scalar_hist_quadratic;
#if defined(SHADOWFORGE_HAVE_AVX2)
    if (kernel == EnumKernel::Avx2 || (kernel == EnumKernel::Auto && avx2_available()))
        leaf = &avx2_hist_quadratic;
#endif
    return FastSearch(plan, leaf).run();
}

}  // namespace shadowforge
