#pragma once

#include <vector>

#include "qstab/quiver.hpp"
#include "qstab/root_system.hpp"

namespace qstab {

/// Non-homogeneous tube: rank r >= 2 and the r quasi-simple dimension
/// vectors, cyclically ordered so that the Coxeter transform (tau) maps
/// position i to position i+1 mod r. The quasi-simples sum to delta.
struct Tube {
    int rank = 0;
    std::vector<DimVector> quasi_simples;
};

/// All non-homogeneous tubes, sorted by lexicographically smallest
/// quasi-simple; each tube rotated so that quasi-simple comes first.
struct TubeSystem {
    std::vector<Tube> tubes;
};

/// Reconstructs the non-homogeneous tubes from the regular base roots by
/// peel-off: a componentwise-minimal regular root below delta is
/// quasi-simple; its Phi-orbit closes into a tube whose rank is the first
/// partial orbit sum hitting delta.
TubeSystem tube_system(const Quiver& q);

/// Dimension vector of the regular indecomposable at position (i, j) of a
/// tube: sum of j consecutive quasi-simples starting at position i
/// (1-based), wrapping; full wraps contribute delta each.
DimVector regular_dim(const TubeSystem& ts, int tube_index, int i, long long j);

/// Known AR position of an indecomposable, as far as the caller can certify
/// it: class, ladder level (preprojective/preinjective, -1 if unknown) and
/// tube index (regular, -1 if unknown or homogeneous).
struct ArPos {
    RootClass cls;
    long long level = -1;
    int tube = -1;
};

/// Certified lower bound for dim Hom between indecomposables with the given
/// AR positions and dimension vectors. Uses that hom - ext = <src,tgt>, so
/// the Euler form bounds hom from below whenever Ext^1 is forced to vanish
/// by directedness; returns 0 (no information) otherwise. Never
/// overestimates.
long long guaranteed_hom(const Quiver& q, const ArPos& src_pos, const DimVector& src,
                         const ArPos& tgt_pos, const DimVector& tgt);

}  // namespace qstab
