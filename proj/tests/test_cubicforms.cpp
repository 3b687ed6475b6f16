#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlie/cubic.hpp"

using namespace exlie;

using Cubic = BinaryCubic<Rat>;
using Gl2 = std::array<std::array<Rat, 2>, 2>;

namespace {
Cubic random_cubic(std::mt19937_64& rng) {
    return {random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng)};
}
Gl2 random_gl2(std::mt19937_64& rng) {
    while (true) {
        Gl2 g{{{random_rat(rng), random_rat(rng)}, {random_rat(rng), random_rat(rng)}}};
        if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != Rat(0)) return g;
    }
}
}  // namespace

TEST_CASE("the two displayed cubic ring families") {
    // f = x^2 y - x y^2: i^2 = i, j^2 = j, ij = 0, so the ring is Q^3
    auto r1 = cubic_ring(Cubic{Rat(0), Rat(1), Rat(-1), Rat(0)});
    using Elt = CubicRing<Rat>::Elt;
    Elt i{Rat(0), Rat(1), Rat(0)}, j{Rat(0), Rat(0), Rat(1)};
    CHECK(r1.mul(i, i) == i);
    CHECK(r1.mul(j, j) == j);
    CHECK(r1.mul(i, j) == Elt{Rat(0), Rat(0), Rat(0)});

    // f = x^3 - D x y^2: ij = 0, i^2 = D - j, j^2 = D j
    for (long Dl : {2L, 3L, 5L}) {
        Rat D(Dl);
        auto r2 = cubic_ring(Cubic{Rat(1), Rat(0), -D, Rat(0)});
        CHECK(r2.mul(i, j) == Elt{Rat(0), Rat(0), Rat(0)});
        CHECK(r2.mul(i, i) == Elt{D, Rat(0), Rat(-1)});
        CHECK(r2.mul(j, j) == Elt{Rat(0), Rat(0), D});
    }

    // zero form: everything squares to zero
    auto r0 = cubic_ring(Cubic{Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(r0.mul(i, i) == Elt{Rat(0), Rat(0), Rat(0)});
    CHECK(r0.mul(j, j) == Elt{Rat(0), Rat(0), Rat(0)});
    CHECK(r0.mul(i, j) == Elt{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("associativity holds for random forms") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto r = cubic_ring(random_cubic(rng));
        CHECK(r.commutative_associative());
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(Cubic{Rat(0), Rat(1), Rat(-1), Rat(0)}) == Rat(1));
    for (long Dl : {2L, 5L}) {
        Rat D(Dl);
        CHECK(discriminant(Cubic{Rat(1), Rat(0), -D, Rat(0)}) == Rat(4) * D * D * D);
        CHECK(square_class_of_disc(Cubic{Rat(1), Rat(0), -D, Rat(0)}) == square_class(D));
    }
    CHECK(discriminant(Cubic{Rat(1), Rat(0), Rat(0), Rat(0)}) == Rat(0));
}

TEST_CASE("gl2 action") {
    // diag(2,-2) carries (1/2)(x^2 y + x y^2) to x^2 y - x y^2
    Cubic f{Rat(0), make_rat(1, 2), make_rat(1, 2), Rat(0)};
    Gl2 g{{{Rat(2), Rat(0)}, {Rat(0), Rat(-2)}}};
    CHECK(gl2_act(g, f) == Cubic{Rat(0), Rat(1), Rat(-1), Rat(0)});

    std::mt19937_64 rng(17);
    Gl2 id{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    for (int t = 0; t < 30; ++t) {
        auto h = random_cubic(rng);
        CHECK(gl2_act(id, h) == h);
    }
    CHECK_THROWS(gl2_act(Gl2{{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}}, f));
}

TEST_CASE("disc(g.f) = det(g)^2 disc(f), hence SL2-invariance") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
        auto f = random_cubic(rng);
        auto g = random_gl2(rng);
        Rat det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        CHECK(discriminant(gl2_act(g, f)) == det * det * discriminant(f));
    }
}

TEST_CASE("gl2 action is compatible with composition") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        auto f = random_cubic(rng);
        auto g = random_gl2(rng), h = random_gl2(rng);
        // g.(h.f) substitutes (x,y) -> (x,y) g h
        Gl2 gh;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                gh[i][j] = g[i][0] * h[0][j] + g[i][1] * h[1][j];
        CHECK(gl2_act(g, gl2_act(h, f)) == gl2_act(gh, f));
    }
}

TEST_CASE("ring transport: cubic_ring(g.f) isomorphic to cubic_ring(f)") {
    // explicit isomorphism through the root model: with theta a root of
    // f(T, 1), the ring has basis 1, i = -a theta, j = -(a theta^2 + b theta + c);
    // for g.f the same construction with theta_g = (s theta - r)/(p - q theta)
    // expresses the new basis rationally in the old one.
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 25) {
        auto f = random_cubic(rng);
        if (f.a == Rat(0) || discriminant(f) == Rat(0)) continue;
        auto g = random_gl2(rng);
        // f(p, q) != 0 keeps p - q theta invertible
        const Rat &p = g[0][0], &q = g[0][1], &r = g[1][0], &s = g[1][1];
        Rat fpq = f.a * p * p * p + f.b * p * p * q + f.c * p * q * q + f.d * q * q * q;
        if (fpq == Rat(0)) continue;
        auto fg = gl2_act(g, f);

        // arithmetic in B = Q[T]/(f(T,1))
        UPoly modp = UPoly::from({f.d, f.c, f.b, f.a});
        auto mul = [&](const UPoly& u, const UPoly& v) {
            return UPoly::divmod(u * v, modp).second;
        };
        auto inv = [&](const UPoly& u) {
            // extended euclid in Q[T] modulo modp
            UPoly r0 = modp, r1 = u, s0, s1(Rat(1));
            while (!(r1.degree() <= 0)) {
                auto [qq, rr] = UPoly::divmod(r0, r1);
                UPoly s2 = s0 - qq * s1;
                r0 = r1; r1 = rr; s0 = s1; s1 = s2;
            }
            REQUIRE(!r1.is_zero());
            Rat lead = r1.c[0];
            UPoly out = s1;
            for (auto& cc : out.c) cc /= lead;
            return out;
        };
        UPoly theta = UPoly::var();
        UPoly i_old = -(UPoly(f.a) * theta);
        UPoly j_old = -(UPoly(f.a) * theta * theta + UPoly(f.b) * theta + UPoly(f.c));
        UPoly theta_g = mul(UPoly(s) * theta - UPoly(r), inv(UPoly(p) - UPoly(q) * theta));
        UPoly i_new = -(UPoly(fg.a) * theta_g);
        UPoly j_new = -(UPoly(fg.a) * mul(theta_g, theta_g) + UPoly(fg.b) * theta_g +
                        UPoly(fg.c));

        // express the transported basis in terms of (1, i_old, j_old): solve
        // a 3x3 system over the power basis coordinates
        SparseMat<Rat> basis(3, 3);
        auto put = [&](int col, const UPoly& u) {
            for (int k = 0; k <= u.degree(); ++k)
                if (u.c[k] != Rat(0)) basis.set(k, col, u.c[k]);
        };
        put(0, UPoly(Rat(1)));
        put(1, i_old);
        put(2, j_old);
        auto column = [&](const UPoly& u) {
            SpVec<Rat> v;
            for (int k = 0; k <= u.degree(); ++k)
                if (u.c[k] != Rat(0)) v[k] = u.c[k];
            return v;
        };
        auto ci = solve_linear(basis, column(i_new));
        auto cj = solve_linear(basis, column(j_new));
        REQUIRE(ci.has_value());
        REQUIRE(cj.has_value());

        // transported multiplication must reproduce the structure constants
        auto rf = cubic_ring(f);
        auto rfg = cubic_ring(fg);
        using Elt = CubicRing<Rat>::Elt;
        auto lift = [&](const SpVec<Rat>& v) {
            return Elt{vec_get(v, 0), vec_get(v, 1), vec_get(v, 2)};
        };
        Elt I = lift(*ci), J = lift(*cj);
        auto phi = [&](const Elt& e) {
            Elt out{e[0], Rat(0), Rat(0)};
            for (int k = 0; k < 3; ++k) {
                out[k] += e[1] * I[k];
                out[k] += e[2] * J[k];
            }
            return out;
        };
        Elt bi{Rat(0), Rat(1), Rat(0)}, bj{Rat(0), Rat(0), Rat(1)};
        CHECK(phi(rfg.mul(bi, bi)) == rf.mul(I, I));
        CHECK(phi(rfg.mul(bi, bj)) == rf.mul(I, J));
        CHECK(phi(rfg.mul(bj, bj)) == rf.mul(J, J));
        ++done;
    }
}

TEST_CASE("vh pairing") {
    VHVector<Rat> v{Rat(1), Rat(0), Rat(0), Rat(0)}, w{Rat(0), Rat(0), Rat(0), Rat(1)};
    CHECK(vh_pairing(v, w) == Rat(1));
    CHECK(vh_pairing(v, v) == Rat(0));
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        VHVector<Rat> a{random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng)};
        VHVector<Rat> b{random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng)};
        CHECK(vh_pairing(a, b) == -vh_pairing(b, a));
    }
}

TEST_CASE("psi_D character data") {
    auto u3 = psi_D_data("U3", Rat(1));
    SparseMat<Rat> u(3, 3);
    u.set(1, 1, Rat(1));
    u.set(2, 2, Rat(1));
    CHECK(u3.eval_u3(u) == Rat(0));  // u_33 - D u_22 at D = 1
    CHECK(rank(u3.sym_coeffs) == 2);

    auto up = psi_D_data("UP", Rat(1));
    CHECK(up.v_coeffs[0] == Rat(1));
    CHECK(up.eval_u3(SparseMat<Rat>(3, 3)) == Rat(0));  // v1 term carried separately

    CHECK_THROWS(psi_D_data("U3", Rat(0)));
    CHECK_THROWS(psi_D_data("bogus", Rat(1)));
}

TEST_CASE("nondegeneracy of psi_v matches disc != 0 via the ring trace form") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
        auto f = random_cubic(rng);
        auto ring = cubic_ring(f);
        bool etale = det3(ring.trace_gram()) != Rat(0);
        CHECK(etale == (discriminant(f) != Rat(0)));
    }
    // and the trace-form determinant lies in the same square class as disc
    int done = 0;
    while (done < 30) {
        auto f = random_cubic(rng);
        if (discriminant(f) == Rat(0)) continue;
        CHECK(square_class(det3(cubic_ring(f).trace_gram())) ==
              square_class(discriminant(f)));
        ++done;
    }
}
