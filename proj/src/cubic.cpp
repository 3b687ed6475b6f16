#include "exlie/cubic.hpp"

namespace exlie {

UnipotentCharacterData psi_D_data(const std::string& group, const Rat& D) {
    if (sgn(D) == 0) throw std::invalid_argument("psi_D requires D != 0");
    UnipotentCharacterData data;
    data.group = group;
    data.D = D;
    data.sym_coeffs = SparseMat<Rat>(3, 3);
    if (group == "U3" || group == "UP") {
        // alpha_D = diag(0, -D, 1): n(u) -> u_33 - D u_22
        data.sym_coeffs.set(1, 1, -D);
        data.sym_coeffs.set(2, 2, Rat(1));
        data.v_coeffs = {Rat(group == "UP" ? 1 : 0), Rat(0)};
    } else if (group == "UH") {
        // pairing vector of the binary cubic attached to Q x Q(sqrt(D))
        if (rat_is_square(D)) data.vh = {Rat(0), Rat(1), Rat(-1), Rat(0)};
        else data.vh = {Rat(0), D, Rat(0), Rat(-1)};
    } else {
        throw std::invalid_argument("unknown unipotent group: " + group);
    }
    return data;
}

}  // namespace exlie
