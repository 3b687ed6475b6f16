#pragma once

#include <map>
#include <memory>
#include <vector>

#include "exlie/matrix.hpp"
#include "exlie/rootdata.hpp"
#include "exlie/scalar.hpp"

// Exact models of Sp6-representations over the Gaussian rationals: the
// standard, wedge-primitive and Cartan-product modules, the SL2^3-invariant
// vectors, compact-group (U(3)) decompositions, and the wedge^6 p_H vector
// with its K-type projections.
//
// Convention: representations are built in the split model (the symplectic
// basis e1,e2,e3,f1,f2,f3).  The compact-group analysis conjugates vectors by
// the Cayley element; in the conjugated coordinates the complexified maximal
// compact acts by the block-diagonal gl3 with integer matrices, and its torus
// weights are read off coordinates directly.

namespace exlie::reps {

using SVec = SpVec<Scalar>;
using SMat = SparseMat<Scalar>;

enum Gen : int {
    // sp6 Chevalley basis
    H1, H2, H3,
    E12, E13, E23, E21, E31, E32,   // eps_i - eps_j
    P12, P13, P23,                  // eps_i + eps_j
    M12, M13, M23,
    P11, P22, P33,                  // 2 eps_i
    M11, M22, M33,
    GEN_COUNT
};

// 6x6 matrix in the standard model
const SMat& gen6(Gen g);
const std::vector<Gen>& sp6_basis();       // all 21
const std::vector<Gen>& sl2cubed_gens();   // h_r, X_{2 eps_r}, X_{-2 eps_r}
const std::vector<Gen>& sp6_lowerings();   // E21, E32, M33

// ambient tensor/wedge spaces
struct Ambient;
using AmbPtr = std::shared_ptr<const Ambient>;

AmbPtr amb_vec6();
AmbPtr amb_wedge(AmbPtr base, int k);
AmbPtr amb_tensor(AmbPtr a, AmbPtr b);
AmbPtr amb_pspace(int sign);  // 6-dim p^{+-} with the adjoint K-action
int amb_dim(const AmbPtr&);

// derivation action of a 6x6 matrix through the ambient structure
SVec apply6(const AmbPtr&, const SMat& g, const SVec& v);
SVec apply6_left(const AmbPtr& tensor, const SMat& g, const SVec& v);
SVec apply6_right(const AmbPtr& tensor, const SMat& g, const SVec& v);

// conjugation into compact coordinates and back
SVec to_compact(const AmbPtr&, const SVec& v);
SVec from_compact(const AmbPtr&, const SVec& v);

// weight of a flat ambient index for the (compact-coordinate) torus
Coord index_weight(const AmbPtr&, int idx);

struct Rep {
    AmbPtr amb;
    std::vector<SVec> basis;  // in standard coordinates
    Coord hw;                 // sp6 highest weight when irreducible
    int dim() const { return (int)basis.size(); }
};

const Rep& standard_rep();
const Rep& wedge2_prim();   // kernel of wedge^2 V -> Q, highest weight (1,1,0)
const Rep& wedge3_prim();   // kernel of wedge^3 V -> V, highest weight (1,1,1)
const Rep& rep_v211();      // Cartan component of V (x) wedge3_prim

// the H-invariant generators
SVec vec_v();  // e2^f2 - e3^f3 in wedge2
SVec vec_w();  // e2^f2 + e3^f3 - 2 e1^f1
SVec vec_z();  // z1 - z2 in the rep_v211 ambient

// Cartan product: isotypic projection of u (x) v onto the top component,
// computed by exact Casimir-eigenvalue filtration
SVec cartan_product(const Rep& A, const SVec& u, const Rep& B, const SVec& v);

// sp6 Casimir scalar of the irreducible with highest weight lam
Rat sp6_casimir_const(const Coord& lam);
// apply the Casimir to a vector (for verification)
SVec sp6_casimir_apply(const AmbPtr&, const SVec& v);

// the representation carrying the invariant vectors for
// lam = (lam2+lam3, lam2, lam3); factors W2^(lam2-lam3) (x) Z^(lam3)
const Rep& rep_for_lambda(const Coord& lam);
// v^{lam2-mu} w^{mu-lam3} z^{lam3} inside rep_for_lambda(lam).amb
SVec invariant_vector(const Coord& lam, long mu);

bool sl2cubed_annihilates(const AmbPtr&, const SVec& v);

// ---- compact-group decomposition ----------------------------------------

struct KComponent {
    Coord hw;                 // compact highest weight
    int multiplicity;
    std::vector<SVec> basis;  // compact coordinates; multiplicity * dim tau vectors
};

// complete U(3)-isotypic decomposition; input vectors in standard
// coordinates unless already_compact
std::vector<KComponent> k_decompose(const AmbPtr&, const std::vector<SVec>& basis,
                                    bool already_compact = false);

// projection of v onto the tau_hw isotypic piece along the others
// (compact coordinates in, compact coordinates out)
SVec k_project(const AmbPtr&, const std::vector<KComponent>&, const Coord& hw,
               const SVec& v_compact);

// weight-w subspace dimension of one copy of the component
int k_weight_space_dim(const AmbPtr&, const KComponent&, const Coord& w);

Int gl3_dim(const Coord& hw);

// compact Cartan product nonvanishing: project ca (x) cb onto the top
// K-type of tau_A (x) tau_B; vectors in compact coordinates of their spaces
bool k_cartan_pair_nonzero(const AmbPtr& ambA, const std::vector<SVec>& basisA,
                           const Coord& hwA, const SVec& ca, const AmbPtr& ambB,
                           const std::vector<SVec>& basisB, const Coord& hwB,
                           const SVec& cb);

// ---- wedge^6 p_H ---------------------------------------------------------

struct X0Data {
    AmbPtr amb;                      // wedge^3 p+ (x) wedge^3 p-
    SVec x0;                         // compact coordinates
    std::vector<KComponent> ktypes;
};
const X0Data& x0_data();
bool x0_ktype_check();

// ---- theorem-level checks -------------------------------------------------

struct InvariantReport {
    Coord lambda;  // (lam1, lam2, lam3)
    long mu;
    bool x0_nonzero = false;
    bool vproj_nonzero = false;
    bool cartan_nonzero = false;
    int basis_rank = 0;  // rank of the mu-indexed projections
};

InvariantReport theorem41_check(const Coord& lam, long mu);

struct Prop46Report {
    Coord lambda;
    bool ok = false;
    int rank_lambda_prime = 0;
    int rank_lambda_bar = 0;
    int expected = 0;
};
Prop46Report prop46_check(const Coord& lam);

}  // namespace exlie::reps
