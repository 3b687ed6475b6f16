#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exlie/laurent.hpp"
#include "exlie/scalar.hpp"

namespace exlie {

using Coord = std::vector<long>;

// integer weight with an optional central character (GSp6 weights)
struct Weight {
    Coord v;
    std::optional<long> c;
};

struct WeylElt {
    std::vector<std::vector<Rat>> rows;  // matrix acting on coordinates
    int length = 0;

    Coord apply(const Coord& x) const;
};

struct RootSystem {
    enum Kind { C3, G2 } kind;
    int rank;
    std::vector<Coord> positive;     // positive roots
    std::vector<Coord> compact_pos;  // positive compact roots
    std::vector<Coord> simple;
    Coord rho, rho_c;
    std::vector<std::vector<Rat>> gram;  // invariant inner product

    Rat inner(const Coord& x, const Coord& y) const;
    bool dominant(const Coord& x) const;
};

const RootSystem& c3_system();
const RootSystem& g2_system();

// full Weyl group, generated by the simple reflections; lengths attached
const std::vector<WeylElt>& weyl_group(const RootSystem& rs);

// coset representatives w_i with w_i(rho) dominant for the compact subgroup,
// ordered by length (ties by lexicographic rho-image)
const std::vector<WeylElt>& compact_coset_reps(const RootSystem& rs);

// exact Weyl dimension of the irreducible with highest weight lam
Int weyl_dimension(const RootSystem& rs, const Coord& lam);

// Kostant weight multiplicity for U(3): partition function over
// {e1-e2, e1-e3, e2-e3} alternated over the compact Weyl group
long kostant_multiplicity(const Coord& lam, const Coord& mu);

// characters as Laurent polynomials in (x1, x2, x3)
const LaurentPoly& sp6_character(const Coord& lam);
LaurentPoly gl3_character(const Coord& lam);

// restriction to the Siegel Levi GL3: list of (highest weight, multiplicity)
std::vector<std::pair<Coord, long>> branch_to_u3(const Coord& lam);

// restriction to the plane-wise SL2 x SL2 x SL2: multiplicity table keyed by
// the triple of symmetric-power degrees
std::map<Coord, long> branch_to_sl2cubed(const Coord& lam);
long sl2cubed_trivial_multiplicity(const Weight& lam);

struct DiscreteSeriesDatum {
    Coord hc_param;
    Coord min_k_type;
    std::pair<int, int> hodge;
    std::string chamber;
};

// Sp6 packets have 8 members; PGSp6 packets identify mu with
// w8 mu = (-mu3, -mu2, -mu1) and have 4
std::vector<DiscreteSeriesDatum> enumerate_packet_sp6(const Coord& lam);
std::vector<DiscreteSeriesDatum> enumerate_packet_pgsp6(const Weight& lam);

// quaternionic-chamber packets for G2; chambers D3,1 / D2,4 / D1,5
std::vector<DiscreteSeriesDatum> g2_packet(const Coord& gamma);

struct ThetaParam {
    Coord hc_param;  // length 3
    Weight lambda;   // 4-tuple with c = 0
};
ThetaParam theta_arch_param(long x, long y);

// desk-scale bound on lambda_1 for symbolic characters (environment
// override EXLIE_MAX_LAMBDA1)
long desk_bound();

}  // namespace exlie
