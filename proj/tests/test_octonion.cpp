#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exlie/octonion.hpp"
#include "exlie/upoly.hpp"

using namespace exlie;

using Oq = Octonion<Rat>;

namespace {
Oq b(int i) { return Oq::basis(i); }

Oq random_oct(std::mt19937_64& rng) {
    Oq x;
    for (int i = 0; i < 8; ++i) x.c[i] = random_rat(rng, 5, 3);
    return x;
}
}  // namespace

TEST_CASE("table products") {
    CHECK(b(S1) * b(S2) == -b(T3));
    CHECK(b(T1) * b(S1) == b(T4));
    CHECK(b(S4) * b(T4) == Oq());
    CHECK(b(S1) * b(T1) == b(S4));
    CHECK(b(T2) * b(T3) == b(S1));
    CHECK(b(S4) * b(S1) == b(S1));
    CHECK(b(S1) * b(S4) == Oq());
}

TEST_CASE("identity element") {
    std::mt19937_64 rng(3);
    Oq one = Oq::one();
    for (int t = 0; t < 10; ++t) {
        Oq x = random_oct(rng);
        CHECK(one * x == x);
        CHECK(x * one == x);
    }
}

TEST_CASE("conjugation, trace, norm") {
    CHECK(b(S1).conj() == -b(S1));
    CHECK(b(S4).conj() == b(T4));
    CHECK(b(S4).trace() == Rat(1));
    CHECK((b(S4) - b(T4)).trace() == Rat(0));
    CHECK((b(S4) - b(T4)).norm() == Rat(-1));

    // N(s2 + D t2) = -D, rational and symbolic
    for (long d : {1L, 2L, 3L, 5L, -1L}) {
        Oq x = b(S2) + b(T2).scaled(Rat(d));
        CHECK(x.norm() == Rat(-d));
        CHECK(x.trace() == Rat(0));
    }
    using Of = Octonion<RatFunc>;
    RatFunc D = RatFunc::var();
    Of xs = Of::basis(S2) + Of::basis(T2).scaled(D);
    CHECK(xs.norm() == -D);
}

TEST_CASE("trace pairing values") {
    CHECK(trace_pairing(b(S1), b(T1)) == Rat(-1));
    CHECK(trace_pairing(b(S1), b(S2)) == Rat(0));
    for (long d : {1L, 2L, 7L}) {
        Oq x = b(S2) + b(T2).scaled(Rat(d));
        CHECK(trace_pairing(b(T3), x) == Rat(0));
    }
}

TEST_CASE("composition, alternativity, trace identities on random octonions") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        Oq x = random_oct(rng), y = random_oct(rng), z = random_oct(rng);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x * (x * y) == (x * x) * y);
        CHECK((x * y) * y == x * (y * y));
        CHECK((x * y).trace() == (y * x).trace());
        CHECK((x * (y * z)).trace() == ((x * y) * z).trace());
        CHECK((x * y).conj() == y.conj() * x.conj());
        CHECK(x + x.conj() == Oq::scalar(x.trace()));
    }
}

TEST_CASE("perp test matches pairing") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        Oq x = random_oct(rng), y = random_oct(rng);
        bool perp = (x * y.conj() + y * x.conj()).is_zero();
        CHECK(perp == (trace_pairing(x, y) == Rat(0) &&
                       (x * y.conj() + y * x.conj()).is_zero()));
        // Tr(x conj(y)) 1 = x conj(y) + y conj(x) for the symmetrized product
        Oq sym = x * y.conj() + y * x.conj();
        CHECK(sym == Oq::scalar(trace_pairing(x, y)));
    }
}

TEST_CASE("v7 coordinates round-trip") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        std::array<Rat, kV7Dim> v;
        for (auto& c : v) c = random_rat(rng);
        Oq x = v7_octonion(v);
        CHECK(x.trace() == Rat(0));
        CHECK(v7_coords(x) == v);
    }
    CHECK_THROWS(v7_coords(b(S4)));
}
