#include "exlie/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>

namespace exlie {

namespace {

const std::vector<std::string> kVars{"x1", "x2", "x3"};

std::vector<Rat> to_rat(const Coord& c) {
    std::vector<Rat> r;
    for (long x : c) r.emplace_back(x);
    return r;
}

Coord from_rat(const std::vector<Rat>& v) {
    Coord c;
    for (const auto& x : v) {
        if (x.get_den() != 1) throw std::logic_error("non-integral weight coordinate");
        c.push_back(x.get_num().get_si());
    }
    return c;
}

std::vector<Rat> mat_apply(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

std::vector<std::vector<Rat>> identity_mat(int n) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

// reflection in the root alpha for the given inner product
std::vector<std::vector<Rat>> reflection_mat(const RootSystem& rs, const Coord& alpha) {
    int n = rs.rank;
    Rat aa = rs.inner(alpha, alpha);
    std::vector<std::vector<Rat>> m = identity_mat(n);
    for (int j = 0; j < n; ++j) {
        Coord ej(n, 0);
        ej[j] = 1;
        Rat c = Rat(2) * rs.inner(ej, alpha) / aa;
        for (int i = 0; i < n; ++i) m[i][j] -= c * Rat(alpha[i]);
    }
    return m;
}

int count_inversions(const RootSystem& rs, const std::vector<std::vector<Rat>>& m) {
    int len = 0;
    for (const auto& alpha : rs.positive) {
        auto img = mat_apply(m, to_rat(alpha));
        // a root is positive here iff its pairing with rho is positive
        Rat p(0);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) p += img[i] * rs.gram[i][j] * Rat(rs.rho[j]);
        if (sgn(p) < 0) ++len;
    }
    return len;
}

}  // namespace

Coord WeylElt::apply(const Coord& x) const { return from_rat(mat_apply(rows, to_rat(x))); }

Rat RootSystem::inner(const Coord& x, const Coord& y) const {
    Rat acc(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) acc += Rat(x[i]) * gram[i][j] * Rat(y[j]);
    return acc;
}

bool RootSystem::dominant(const Coord& x) const {
    for (const auto& s : simple)
        if (sgn(inner(x, s)) < 0) return false;
    return true;
}

const RootSystem& c3_system() {
    static const RootSystem rs = [] {
        RootSystem r;
        r.kind = RootSystem::C3;
        r.rank = 3;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Coord diff(3, 0), sum(3, 0);
                diff[i] = 1;
                diff[j] = -1;
                sum[i] = 1;
                sum[j] = 1;
                r.positive.push_back(diff);
                r.positive.push_back(sum);
                r.compact_pos.push_back(diff);
            }
        for (int i = 0; i < 3; ++i) {
            Coord lng(3, 0);
            lng[i] = 2;
            r.positive.push_back(lng);
        }
        r.simple = {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}};
        r.rho = {3, 2, 1};
        r.rho_c = {1, 0, -1};
        r.gram = identity_mat(3);
        return r;
    }();
    return rs;
}

const RootSystem& g2_system() {
    static const RootSystem rs = [] {
        RootSystem r;
        r.kind = RootSystem::G2;
        r.rank = 2;
        // (eps1, eps2) coordinates: a = eps1 - 3 eps2 (long), b = 2 eps2 (short)
        Coord a{1, -3}, b{0, 2};
        auto add_root = [&](long ca, long cb) {
            r.positive.push_back({ca * a[0] + cb * b[0], ca * a[1] + cb * b[1]});
        };
        add_root(1, 0);
        add_root(0, 1);
        add_root(1, 1);
        add_root(1, 2);
        add_root(1, 3);
        add_root(2, 3);
        r.compact_pos = {{0, 2}, {2, 0}};  // b and 2a+3b
        r.simple = {a, b};
        r.rho = {3, 1};
        r.rho_c = {1, 1};
        r.gram = {{Rat(3), Rat(0)}, {Rat(0), Rat(1)}};
        return r;
    }();
    return rs;
}

const std::vector<WeylElt>& weyl_group(const RootSystem& rs) {
    static std::map<const RootSystem*, std::vector<WeylElt>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&rs);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<std::vector<Rat>>> gens;
    for (const auto& s : rs.simple) gens.push_back(reflection_mat(rs, s));
    std::set<std::vector<std::vector<Rat>>> seen;
    std::vector<std::vector<std::vector<Rat>>> frontier{identity_mat(rs.rank)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<std::vector<Rat>>> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                auto wg = mat_mul(g, w);
                if (seen.insert(wg).second) next.push_back(wg);
            }
        frontier = std::move(next);
    }
    std::vector<WeylElt> out;
    for (const auto& m : seen) out.push_back({m, count_inversions(rs, m)});
    std::sort(out.begin(), out.end(), [&](const WeylElt& x, const WeylElt& y) {
        if (x.length != y.length) return x.length < y.length;
        return x.apply(rs.rho) < y.apply(rs.rho);
    });
    return cache.emplace(&rs, std::move(out)).first->second;
}

const std::vector<WeylElt>& compact_coset_reps(const RootSystem& rs) {
    static std::map<const RootSystem*, std::vector<WeylElt>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&rs);
    if (it != cache.end()) return it->second;

    std::vector<WeylElt> reps;
    for (const auto& w : weyl_group(rs)) {
        Coord img = w.apply(rs.rho);
        bool kdom = true;
        for (const auto& c : rs.compact_pos) {
            Rat p(0);
            for (int i = 0; i < rs.rank; ++i)
                for (int j = 0; j < rs.rank; ++j)
                    p += Rat(img[i]) * rs.gram[i][j] * Rat(c[j]);
            kdom = kdom && sgn(p) > 0;
        }
        if (kdom) reps.push_back(w);
    }
    // weyl_group is already sorted by (length, rho-image)
    return cache.emplace(&rs, std::move(reps)).first->second;
}

Int weyl_dimension(const RootSystem& rs, const Coord& lam) {
    if (!rs.dominant(lam)) throw std::invalid_argument("weight is not dominant");
    Coord lr(lam);
    for (int i = 0; i < rs.rank; ++i) lr[i] += rs.rho[i];
    Rat num(1), den(1);
    for (const auto& alpha : rs.positive) {
        num *= rs.inner(lr, alpha);
        den *= rs.inner(rs.rho, alpha);
    }
    Rat d = num / den;
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not integral");
    return d.get_num();
}

namespace {
// number of ways to write v as a nonnegative combination of
// e1-e2, e1-e3, e2-e3
long kostant_partition3(const Coord& v) {
    if (v.size() != 3 || v[0] + v[1] + v[2] != 0) return 0;
    long count = 0;
    // alpha (e1-e2) + beta (e1-e3) + gamma (e2-e3) = (alpha+beta, gamma-alpha, -beta-gamma)
    for (long alpha = 0; alpha <= v[0]; ++alpha) {
        long beta = v[0] - alpha;
        long gamma = v[1] + alpha;
        if (beta >= 0 && gamma >= 0) ++count;
    }
    return count;
}

const std::vector<std::array<int, 3>>& s3_perms() {
    static const std::vector<std::array<int, 3>> p{{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                                   {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    return p;
}

int perm_sign(const std::array<int, 3>& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}
}  // namespace

long kostant_multiplicity(const Coord& lam, const Coord& mu) {
    if (lam.size() != 3 || mu.size() != 3) throw std::invalid_argument("rank-3 weights expected");
    if (!(lam[0] >= lam[1] && lam[1] >= lam[2]))
        throw std::invalid_argument("weight is not dominant for U(3)");
    const Coord rho_c{1, 0, -1};
    long acc = 0;
    for (const auto& p : s3_perms()) {
        // w(lam + rho_c) - rho_c - mu with w permuting coordinates
        Coord arg(3);
        for (int i = 0; i < 3; ++i) arg[i] = lam[p[i]] + rho_c[p[i]] - rho_c[i] - mu[i];
        acc += perm_sign(p) * kostant_partition3(arg);
    }
    return acc;
}

namespace {
LaurentPoly alternant_c3(const Coord& v) {
    LaurentPoly p(kVars);
    for (const auto& w : weyl_group(c3_system())) {
        Coord img = w.apply(v);
        int sign = w.length % 2 ? -1 : 1;
        p.add_term({(int)img[0], (int)img[1], (int)img[2]}, Scalar(sign));
    }
    return p;
}

LaurentPoly alternant_gl3(const Coord& v) {
    LaurentPoly p(kVars);
    for (const auto& perm : s3_perms()) {
        std::vector<int> e(3);
        for (int i = 0; i < 3; ++i) e[i] = (int)v[perm[i]];
        p.add_term(e, Scalar(perm_sign(perm)));
    }
    return p;
}
}  // namespace

const LaurentPoly& sp6_character(const Coord& lam) {
    if (lam.size() != 3 || !(lam[0] >= lam[1] && lam[1] >= lam[2] && lam[2] >= 0))
        throw std::invalid_argument("weight is not dominant for Sp6");
    if (lam[0] > desk_bound())
        throw std::invalid_argument("weight exceeds the desk-scale bound");
    static std::map<Coord, LaurentPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;

    const auto& rs = c3_system();
    Coord lr(lam);
    for (int i = 0; i < 3; ++i) lr[i] += rs.rho[i];
    LaurentPoly chi = alternant_c3(lr).exact_div(alternant_c3(rs.rho));
    return cache.emplace(lam, std::move(chi)).first->second;
}

LaurentPoly gl3_character(const Coord& lam) {
    if (!(lam[0] >= lam[1] && lam[1] >= lam[2]))
        throw std::invalid_argument("weight is not dominant for GL3");
    const Coord delta{1, 0, -1};
    Coord ld(3);
    for (int i = 0; i < 3; ++i) ld[i] = lam[i] + delta[i];
    return alternant_gl3(ld).exact_div(alternant_gl3(delta));
}

std::vector<std::pair<Coord, long>> branch_to_u3(const Coord& lam) {
    LaurentPoly rest = sp6_character(lam);
    std::vector<std::pair<Coord, long>> out;
    while (!rest.is_zero()) {
        // lex-greatest exponent is the highest weight of a remaining type
        const auto& [expo, coeff] = *rest.terms().rbegin();
        Coord hw{expo[0], expo[1], expo[2]};
        if (!(hw[0] >= hw[1] && hw[1] >= hw[2]))
            throw std::logic_error("branching produced a non-dominant leading weight");
        if (!coeff.is_rational() || coeff.re.get_den() != 1 || sgn(coeff.re) <= 0)
            throw std::logic_error("branching produced a non-positive multiplicity");
        long mult = coeff.re.get_num().get_si();
        rest = rest - gl3_character(hw).scaled(Scalar(Rat(mult)));
        out.emplace_back(hw, mult);
    }
    return out;
}

std::map<Coord, long> branch_to_sl2cubed(const Coord& lam) {
    const LaurentPoly& chi = sp6_character(lam);
    // m_k = sum over eps in {0,1}^3 of (-1)^|eps| [coeff at k + 2 eps]
    std::map<Coord, long> out;
    for (const auto& [expo, coeff] : chi.terms()) {
        (void)coeff;
        Coord k{expo[0], expo[1], expo[2]};
        if (k[0] < 0 || k[1] < 0 || k[2] < 0) continue;
        long m = 0;
        for (int eps = 0; eps < 8; ++eps) {
            LaurentPoly::Expo e{(int)k[0] + 2 * ((eps >> 0) & 1),
                                (int)k[1] + 2 * ((eps >> 1) & 1),
                                (int)k[2] + 2 * ((eps >> 2) & 1)};
            Scalar c = chi.coeff(e);
            long cv = c.is_zero() ? 0 : c.re.get_num().get_si();
            m += (__builtin_popcount(eps) % 2 ? -1 : 1) * cv;
        }
        if (m != 0) out[k] = m;
    }
    return out;
}

long sl2cubed_trivial_multiplicity(const Weight& lam) {
    if (lam.c.has_value() && *lam.c != 0) return 0;
    auto table = branch_to_sl2cubed(lam.v);
    auto it = table.find(Coord{0, 0, 0});
    return it == table.end() ? 0 : it->second;
}

namespace {
std::pair<int, int> hodge_type(const RootSystem& rs, const Coord& hc) {
    int p = 0, q = 0;
    for (const auto& alpha : rs.positive) {
        bool compact = false;
        for (const auto& c : rs.compact_pos) compact = compact || c == alpha;
        if (compact) continue;
        int s = sgn(rs.inner(alpha, hc));
        if (s == 0) throw std::invalid_argument("singular Harish-Chandra parameter");
        (s > 0 ? p : q)++;
    }
    return {p, q};
}

Coord add(const Coord& a, const Coord& b, long scale_b = 1) {
    Coord r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += scale_b * b[i];
    return r;
}
}  // namespace

std::vector<DiscreteSeriesDatum> enumerate_packet_sp6(const Coord& lam) {
    const auto& rs = c3_system();
    if (!(lam.size() == 3 && lam[0] >= lam[1] && lam[1] >= lam[2] && lam[2] >= 0))
        throw std::invalid_argument("weight is not dominant for Sp6");
    Coord lr = add(lam, rs.rho);
    std::vector<DiscreteSeriesDatum> out;
    int idx = 0;
    for (const auto& w : compact_coset_reps(rs)) {
        DiscreteSeriesDatum d;
        d.hc_param = w.apply(lr);
        // delta_G for the chamber of w is w(rho); delta_K is rho_c since the
        // parameter is strictly dominant for the compact roots
        d.min_k_type = add(add(d.hc_param, w.apply(rs.rho)), rs.rho_c, -2);
        d.hodge = hodge_type(rs, d.hc_param);
        d.chamber = "w" + std::to_string(++idx);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<DiscreteSeriesDatum> enumerate_packet_pgsp6(const Weight& lam) {
    if (lam.c.has_value() && *lam.c != 0)
        throw std::invalid_argument("PGSp6 weights have trivial central character");
    long sum = 0;
    for (long x : lam.v) sum += x;
    if (sum % 2 != 0)
        throw std::invalid_argument("PGSp6 parity: the weight coordinate sum must be even");
    auto full = enumerate_packet_sp6(lam.v);
    auto w8 = [](const Coord& mu) { return Coord{-mu[2], -mu[1], -mu[0]}; };
    std::vector<DiscreteSeriesDatum> out;
    for (const auto& d : full) {
        Coord other = w8(d.hc_param);
        if (d.hc_param < other) continue;  // keep the lexicographically larger
        out.push_back(d);
    }
    return out;
}

std::vector<DiscreteSeriesDatum> g2_packet(const Coord& gamma) {
    const auto& rs = g2_system();
    if (gamma.size() != 2 || !rs.dominant(gamma))
        throw std::invalid_argument("weight is not dominant for G2");
    if ((gamma[0] + gamma[1]) % 2 != 0)
        throw std::invalid_argument("G2 weights have even coordinate sum");
    static const char* chambers[3] = {"D3,1", "D2,4", "D1,5"};
    Coord lr = add(gamma, rs.rho);
    std::vector<DiscreteSeriesDatum> out;
    int idx = 0;
    for (const auto& w : compact_coset_reps(rs)) {
        DiscreteSeriesDatum d;
        d.hc_param = w.apply(lr);
        d.min_k_type = add(add(d.hc_param, w.apply(rs.rho)), rs.rho_c, -2);
        d.hodge = hodge_type(rs, d.hc_param);
        d.chamber = chambers[idx++];
        out.push_back(std::move(d));
    }
    return out;
}

ThetaParam theta_arch_param(long x, long y) {
    if (!(x - 3 >= y - 1 && y - 1 >= 0))
        throw std::invalid_argument("quaternionic parameter requires x-3 >= y-1 >= 0");
    if ((x - y) % 2 != 0) throw std::invalid_argument("x - y must be even");
    ThetaParam t;
    t.hc_param = {(x + y) / 2, (x - y) / 2, -x};
    t.lambda.v = {x - 3, (x + y - 4) / 2, (x - y - 2) / 2};
    t.lambda.c = 0;
    return t;
}

long desk_bound() {
    if (const char* env = std::getenv("EXLIE_MAX_LAMBDA1")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 6;
}

}  // namespace exlie
