#pragma once

#include <cstdint>
#include <vector>

#include "qstab/quiver.hpp"
#include "qstab/stability.hpp"

namespace qstab {
namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // entries reduced mod p

/// Explicit matrix representation over a prime field: one (d_target x
/// d_source) matrix per arrow, in the quiver's arrow order.
struct ExplicitRep {
    std::vector<std::pair<int, int>> arrows;
    int p = 0;
    DimVector dim;
    std::vector<Matrix> matrices;
};

/// Uniform random representation, deterministic per seed.
ExplicitRep random_rep(const Quiver& q, const DimVector& d, int p, std::uint64_t seed);

/// dim Hom as the kernel dimension of the standard linear map
/// (phi_i) -> (phi_j M_a - N_a phi_i), by exact rank over F_p.
long long hom_dim(const ExplicitRep& M, const ExplicitRep& N);

long long end_dim(const ExplicitRep& M);

/// Draws seeded random representations until End has dimension 1 (which
/// certifies genericity for rigid dimension vectors) and, for d = delta,
/// Hom vanishes to and from every non-homogeneous quasi-simple (which pins
/// the homogeneous regular generic); fails with GenericityNotFound after
/// `attempts` draws.
ExplicitRep verify_generic(const Quiver& q, const DimVector& d, int p, int attempts,
                           std::uint64_t seed0 = 1);

/// Dimension vectors of all submodules, by exhaustive subspace enumeration.
/// Guarded: total dimension <= 8 and p in {2, 3}.
std::vector<DimVector> subdims_bruteforce(const ExplicitRep& M);

/// Direct slope test over subdims_bruteforce, cross-checked against the
/// quotient-side test on the transposed opposite representation.
StabilityVerdict semistable_bruteforce(const ExplicitRep& M, const Weight& theta);

/// Transposed representation over the opposite quiver (the duality D).
ExplicitRep transpose_rep(const ExplicitRep& M);

}  // namespace oracle
}  // namespace qstab
