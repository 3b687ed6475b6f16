#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exlie/repspaces.hpp"

using namespace exlie;
using namespace exlie::reps;

namespace {
bool in_span(const AmbPtr& amb, const std::vector<SVec>& basis, const SVec& v) {
    RowReducer<Scalar> rr;
    for (const auto& b : basis) rr.add(b);
    (void)amb;
    return rr.contains(v);
}
}  // namespace

TEST_CASE("bracket fidelity of the generator matrices") {
    // action([X,Y]) = [action(X), action(Y)] on wedge2, a few pairs
    const auto& amb = wedge2_prim().amb;
    std::vector<std::pair<Gen, Gen>> pairs{{E12, E21}, {E12, E23}, {P11, M11}, {P12, M13}};
    for (auto [a, b] : pairs) {
        SMat br = gen6(a) * gen6(b) - gen6(b) * gen6(a);
        for (int idx = 0; idx < amb_dim(amb); ++idx) {
            SVec unit{{idx, Scalar(1)}};
            SVec lhs = apply6(amb, br, unit);
            SVec r1 = apply6(amb, gen6(a), apply6(amb, gen6(b), unit));
            SVec r2 = apply6(amb, gen6(b), apply6(amb, gen6(a), unit));
            vec_add_scaled(r1, r2, Scalar(-1));
            CHECK(lhs == r1);
        }
    }
}

TEST_CASE("fundamental representations") {
    CHECK(wedge2_prim().dim() == 14);
    CHECK(wedge3_prim().dim() == 14);
    CHECK(rep_v211().dim() == 70);
    // e1^e2 is a highest weight vector of wedge2
    const auto& w2 = wedge2_prim();
    SVec hwv;
    hwv[0] = Scalar(1);  // monomial (0,1) = e1^e2 is first in lex order
    CHECK(in_span(w2.amb, w2.basis, hwv));
    for (Gen g : {E12, E23, P33}) CHECK(apply6(w2.amb, gen6(g), hwv).empty());
    // e1^e2^e3 is a highest weight vector of wedge3
    const auto& w3 = wedge3_prim();
    SVec hwv3;
    hwv3[0] = Scalar(1);
    CHECK(in_span(w3.amb, w3.basis, hwv3));
    for (Gen g : {E12, E23, P33}) CHECK(apply6(w3.amb, gen6(g), hwv3).empty());
}

TEST_CASE("casimir constants match the operator") {
    // apply the Casimir to highest weight vectors of known representations
    const auto& V = standard_rep();
    SVec e1{{0, Scalar(1)}};
    SVec ce = sp6_casimir_apply(V.amb, e1);
    CHECK(ce == [&] {
        SVec x = e1;
        vec_scale(x, Scalar(sp6_casimir_const({1, 0, 0})));
        return x;
    }());
    const auto& w2 = wedge2_prim();
    SVec h2{{0, Scalar(1)}};
    SVec ch = sp6_casimir_apply(w2.amb, h2);
    CHECK(ch == [&] {
        SVec x = h2;
        vec_scale(x, Scalar(sp6_casimir_const({1, 1, 0})));
        return x;
    }());
}

TEST_CASE("invariant vectors are SL2-cubed invariant and weight zero") {
    const auto& w2 = wedge2_prim();
    SVec v = vec_v(), w = vec_w();
    CHECK(in_span(w2.amb, w2.basis, v));
    CHECK(in_span(w2.amb, w2.basis, w));
    CHECK(sl2cubed_annihilates(w2.amb, v));
    CHECK(sl2cubed_annihilates(w2.amb, w));

    const auto& z211 = rep_v211();
    SVec z = vec_z();
    CHECK(!z.empty());
    CHECK(in_span(z211.amb, z211.basis, z));
    CHECK(sl2cubed_annihilates(z211.amb, z));

    // compact weight (0,0,0): every coordinate of the conjugated vector
    for (const auto& [amb, vec] :
         std::vector<std::pair<AmbPtr, SVec>>{{w2.amb, v}, {w2.amb, w}, {z211.amb, z}}) {
        SVec c = to_compact(amb, vec);
        for (const auto& [idx, val] : c) CHECK(index_weight(amb, idx) == Coord{0, 0, 0});
    }
}

TEST_CASE("cartan product of highest weight vectors is nonzero") {
    const auto& V = standard_rep();
    const auto& W3 = wedge3_prim();
    SVec e1{{0, Scalar(1)}}, hw3{{0, Scalar(1)}};
    SVec prod = cartan_product(V, e1, W3, hw3);
    CHECK(!prod.empty());
    // z1 is nonzero in V^(2,1,1)
    SVec z = vec_z();
    CHECK(!z.empty());
}

TEST_CASE("k-type decomposition of the fundamental representations") {
    // V = tau_(1,0,0) + tau_(0,0,-1)
    const auto& V = standard_rep();
    auto kV = k_decompose(V.amb, V.basis);
    REQUIRE(kV.size() == 2);
    std::map<Coord, int> types;
    for (const auto& c : kV) types[c.hw] = c.multiplicity;
    CHECK(types[Coord{1, 0, 0}] == 1);
    CHECK(types[Coord{0, 0, -1}] == 1);

    // V^(1,1,0) = tau_(1,1,0) + tau_(1,0,-1) + tau_(0,-1,-1)
    const auto& w2 = wedge2_prim();
    auto kW2 = k_decompose(w2.amb, w2.basis);
    REQUIRE(kW2.size() == 3);
    types.clear();
    for (const auto& c : kW2) types[c.hw] = c.multiplicity;
    CHECK(types[Coord{1, 1, 0}] == 1);
    CHECK(types[Coord{1, 0, -1}] == 1);
    CHECK(types[Coord{0, -1, -1}] == 1);

    // v and w span the (0,0,0) weight space of tau_(1,0,-1)
    SVec vc = to_compact(w2.amb, vec_v());
    SVec wc = to_compact(w2.amb, vec_w());
    SVec pv = k_project(w2.amb, kW2, {1, 0, -1}, vc);
    SVec pw = k_project(w2.amb, kW2, {1, 0, -1}, wc);
    CHECK(pv == vc);  // the projection leaves them unchanged: they lie inside
    CHECK(pw == wc);
    RowReducer<Scalar> rr;
    rr.add(pv);
    rr.add(pw);
    CHECK(rr.rank() == 2);
    const KComponent* c101 = nullptr;
    for (const auto& c : kW2)
        if (c.hw == Coord{1, 0, -1}) c101 = &c;
    REQUIRE(c101 != nullptr);
    CHECK(k_weight_space_dim(w2.amb, *c101, {0, 0, 0}) == 2);

    // V^(2,1,1) has the nine displayed types; z lies in
    // tau_(1,1,-2) + tau_(2,-1,-1) and misses tau_(1,0,-1)
    const auto& z211 = rep_v211();
    auto kZ = k_decompose(z211.amb, z211.basis);
    CHECK(kZ.size() == 9);
    long total = 0;
    for (const auto& c : kZ) total += c.multiplicity * gl3_dim(c.hw).get_si();
    CHECK(total == 70);
    SVec zc = to_compact(z211.amb, vec_z());
    CHECK(k_project(z211.amb, kZ, {1, 0, -1}, zc).empty());
    SVec za = k_project(z211.amb, kZ, {1, 1, -2}, zc);
    SVec zb = k_project(z211.amb, kZ, {2, -1, -1}, zc);
    CHECK(!za.empty());
    CHECK(!zb.empty());
    // and these two projections exhaust z
    vec_add_scaled(za, zb, Scalar(1));
    CHECK(za == zc);
}

TEST_CASE("x0 and its k-types") {
    const auto& d = x0_data();
    CHECK(amb_dim(d.amb) == 400);
    long total = 0;
    bool has224 = false, has422 = false;
    for (const auto& c : d.ktypes) {
        total += c.multiplicity * gl3_dim(c.hw).get_si();
        if (c.hw == Coord{2, 2, -4}) {
            has224 = true;
            CHECK(c.multiplicity == 1);
        }
        if (c.hw == Coord{4, -2, -2}) {
            has422 = true;
            CHECK(c.multiplicity == 1);
        }
    }
    CHECK(total == 400);
    CHECK(has224);
    CHECK(has422);
    CHECK(x0_ktype_check());
}

TEST_CASE("theorem nonvanishing at the degenerate and first levels") {
    auto r0 = theorem41_check({0, 0, 0}, 0);
    CHECK(r0.x0_nonzero);
    CHECK(r0.vproj_nonzero);
    CHECK(r0.cartan_nonzero);

    for (long mu : {0L, 1L}) {
        auto r = theorem41_check({1, 1, 0}, mu);
        CHECK(r.x0_nonzero);
        CHECK(r.vproj_nonzero);
        CHECK(r.cartan_nonzero);
        CHECK(r.basis_rank == 2);
    }
    auto p = prop46_check({1, 1, 0});
    CHECK(p.ok);
    CHECK(p.rank_lambda_prime == 2);
    CHECK(p.rank_lambda_bar == 2);
}

TEST_CASE("theorem nonvanishing for the quaternionic n=3 case") {
    auto r = theorem41_check({2, 1, 1}, 1);
    CHECK(r.x0_nonzero);
    CHECK(r.vproj_nonzero);
    CHECK(r.cartan_nonzero);
    CHECK(r.basis_rank == 1);
    CHECK(prop46_check({2, 1, 1}).ok);
}
