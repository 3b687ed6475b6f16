#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlie/g2.hpp"
#include "exlie/upoly.hpp"

using namespace exlie;

using Oq = Octonion<Rat>;

namespace {
Oq b(int i) { return Oq::basis(i); }
Oq y0() { return b(S4) - b(T4); }

bool mat_is_zero(const SparseMat<Rat>& m) { return m.nnz() == 0; }
}  // namespace

TEST_CASE("kernel of the commutator map has dimension 14") {
    const auto& g2 = g2_rational();
    CHECK(g2.basis().size() == 14);
    // every basis element maps to zero
    for (const auto& w : g2.basis()) {
        auto img = g2.commutator_image(w);
        for (const auto& c : img) CHECK(c == Rat(0));
    }
}

TEST_CASE("bracket closure and Jacobi identity") {
    const auto& g2 = g2_rational();
    std::vector<G2Element<Rat>> basis;
    for (const auto& w : g2.basis()) basis.push_back(g2.element(w));

    RowReducer<Rat> span;
    for (const auto& w : g2.basis()) span.add(w);

    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto br = g2.bracket(basis[i], basis[j]);
            CHECK(span.contains(br.wedge));
        }

    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const auto& x = basis[rng() % 14];
        const auto& y = basis[rng() % 14];
        const auto& z = basis[rng() % 14];
        auto j1 = g2.bracket(g2.bracket(x, y), z);
        auto j2 = g2.bracket(g2.bracket(y, z), x);
        auto j3 = g2.bracket(g2.bracket(z, x), y);
        CHECK(mat_is_zero(j1.action + j2.action + j3.action));
    }
}

TEST_CASE("basis elements are derivations and kill 1") {
    const auto& g2 = g2_rational();
    std::mt19937_64 rng(9);
    for (const auto& w : g2.basis()) {
        auto X = g2.element(w);
        CHECK(g2.act(X, Oq::one()).is_zero());
        for (int t = 0; t < 6; ++t) {
            Oq u, v;
            for (int i = 0; i < 8; ++i) {
                u.c[i] = random_rat(rng);
                v.c[i] = random_rat(rng);
            }
            CHECK(g2.act(X, u * v) == g2.act(X, u) * v + u * g2.act(X, v));
        }
    }
}

TEST_CASE("action matrices are skew for the trace pairing") {
    const auto& g2 = g2_rational();
    for (const auto& w : g2.basis()) {
        auto m = g2.action_of(w);
        CHECK(mat_is_zero(g2.pairing() * m + (g2.pairing() * m).transpose()));
    }
}

TEST_CASE("root decomposition: cartan plus 12 root vectors") {
    const auto& g2 = g2_rational();
    CHECK(g2.root_vectors().size() == 12);

    // eigenvalue pattern: [h, X] = alpha(h) X with a(h1)=2, b(h1)=-1,
    // a(h2)=-1, b(h2)=1
    const long a_of[2] = {2, -1}, b_of[2] = {-1, 1};
    for (const auto& r : g2.root_vectors()) {
        for (int k = 0; k < 2; ++k) {
            auto br = g2.bracket(g2.cartan(k), r.elt);
            long ev = r.ca * a_of[k] + r.cb * b_of[k];
            CHECK(mat_is_zero(br.action - r.elt.action.scaled(Rat(ev))));
        }
    }

    // the 14 elements span: 2 cartan + 12 roots
    RowReducer<Rat> span;
    span.add(g2.cartan(0).wedge);
    span.add(g2.cartan(1).wedge);
    for (const auto& r : g2.root_vectors()) span.add(r.elt.wedge);
    CHECK(span.rank() == 14);
}

TEST_CASE("closed-orbit action displays hold for the kernel-normalized generators") {
    const auto& g2 = g2_rational();
    auto v1 = g2.element(G2Algebra<Rat>::v_kernel(1));
    auto d3 = g2.element(G2Algebra<Rat>::d_kernel(3));
    CHECK(g2.act(v1, y0()) == b(S1));
    CHECK(g2.act(d3, y0()) == b(T3));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) CHECK(g2.act(g2.element(G2Algebra<Rat>::sl3_unit(i, j)), y0()).is_zero());
}

TEST_CASE("open-orbit action displays hold for the recorded generators") {
    const auto& g2 = g2_rational();
    for (long dv : {2L, 3L, 5L}) {
        Oq x = b(S2) + b(T2).scaled(Rat(dv));
        CHECK(g2.act(g2.root("a").elt, x) == b(S1));
        CHECK(g2.act(g2.root("a+3b").elt, x) == b(T3).scaled(Rat(dv)));
        CHECK(g2.act(g2.root("2a+3b").elt, x).is_zero());
        CHECK(g2.act(g2.root("a+b").elt, x) == b(T3));
        CHECK(g2.act(g2.root("a+2b").elt, x) == -b(S1).scaled(Rat(dv)));
    }
    // recorded scale between the two generator conventions
    auto w = G2Algebra<Rat>::v_kernel(1);
    vec_scale(w, Rat(G2Algebra<Rat>::kStdScale));
    CHECK(g2.root("a+b").elt.wedge == w);
}

TEST_CASE("heisenberg nilradical structure") {
    const auto& g2 = g2_rational();
    std::vector<G2Element<Rat>> uh;
    for (const auto& lbl : g2.heisenberg_labels()) uh.push_back(g2.root(lbl).elt);
    CHECK(uh.size() == 5);

    // [u_H, u_H] is the line spanned by the 2a+3b root vector
    RowReducer<Rat> derived;
    for (size_t i = 0; i < uh.size(); ++i)
        for (size_t j = i + 1; j < uh.size(); ++j) {
            auto br = g2.bracket(uh[i], uh[j]);
            if (!br.wedge.empty()) derived.add(br.wedge);
        }
    CHECK(derived.rank() == 1);
    CHECK(derived.contains(g2.root("2a+3b").elt.wedge));
}

TEST_CASE("exponentials of nilpotent elements") {
    const auto& g2 = g2_rational();

    auto id = SparseMat<Rat>::identity(kV7Dim);
    CHECK(g2.exp_nilpotent(SparseMat<Rat>(kV7Dim, kV7Dim)) == id);

    // one-parameter subgroup law
    auto e1 = g2.exp_nilpotent(g2.root("a").elt.action.scaled(Rat(3)));
    auto e2 = g2.exp_nilpotent(g2.root("a").elt.action.scaled(Rat(-5)));
    CHECK(e1 * e2 == g2.exp_nilpotent(g2.root("a").elt.action.scaled(Rat(-2))));

    // exp of a root vector is an octonion automorphism fixing 1
    std::mt19937_64 rng(31);
    for (const auto& r : g2.root_vectors()) {
        auto ex = g2.exp_nilpotent(r.elt.action.scaled(random_rat(rng, 3, 2)));
        CHECK(g2.apply_v7_map(ex, Oq::one()) == Oq::one());
        for (int t = 0; t < 4; ++t) {
            Oq u, v;
            for (int i = 0; i < 8; ++i) {
                u.c[i] = random_rat(rng, 3, 2);
                v.c[i] = random_rat(rng, 3, 2);
            }
            CHECK(g2.apply_v7_map(ex, u * v) ==
                  g2.apply_v7_map(ex, u) * g2.apply_v7_map(ex, v));
            CHECK(g2.apply_v7_map(ex, u).norm() == u.norm());
            CHECK(g2.apply_v7_map(ex, u).trace() == u.trace());
        }
    }
    // cartan elements are not nilpotent
    CHECK_THROWS(g2.exp_nilpotent(g2.cartan(0).action));
}

TEST_CASE("stabilizer dimensions") {
    const auto& g2 = g2_rational();
    // stabilizer of s4 - t4 is sl3
    CHECK(g2.stabilizer_subalgebra({y0()}).size() == 8);

    // stabilizer of s2 + D t2, symbolic non-square D
    G2Algebra<RatFunc> g2s;
    RatFunc D = RatFunc::var();
    using Of = Octonion<RatFunc>;
    Of xs = Of::basis(S2) + Of::basis(T2).scaled(D);
    CHECK(g2s.stabilizer_subalgebra({xs}).size() == 8);

    // generic trace-zero vectors of nonzero norm have 8-dimensional stabilizer
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 5) {
        std::array<Rat, kV7Dim> coords;
        for (auto& c : coords) c = random_rat(rng);
        Oq v = v7_octonion(coords);
        if (v.norm() == Rat(0)) continue;
        CHECK(g2.stabilizer_subalgebra({v}).size() == 8);
        ++done;
    }
}
