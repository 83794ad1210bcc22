#pragma once

#include <optional>
#include <vector>

#include "qstab/quiver.hpp"
#include "qstab/rational.hpp"

namespace qstab {

/// Integer weight theta, one entry per vertex.
using Weight = std::vector<long long>;

enum class Stability { Stable, Semistable, Unstable };

const char* stability_name(Stability s);

/// Verdict for the generic representation of a dimension vector.
/// `violator` is a generic subdimension vector of strictly larger slope
/// (present iff Unstable); `equal_slope_witness` is a proper nonzero generic
/// subdimension vector of equal slope and distinguishes Semistable from
/// Stable.
struct StabilityVerdict {
    Stability status;
    Rational slope;
    std::optional<DimVector> violator;
    std::optional<DimVector> equal_slope_witness;
};

/// mu(d) = (theta . d) / (sum d_i), exact.
Rational slope(const Weight& theta, const DimVector& d);

/// The linear form d -> theta(d) - a * (sum d_i), as rational entries
/// theta_i - a. mu(d) = a iff the form vanishes on d; mu(d) <= a iff it is
/// <= 0 on d.
std::vector<Rational> theta_shift(const Weight& theta, const Rational& a);

/// All e such that every representation of dimension d has a
/// subrepresentation of dimension e, by the recursive Euler-form criterion:
/// e generically embeds into d iff <e', d - e> >= 0 for every generic
/// subdimension vector e' of e. Includes 0 and d. Sorted lexicographically.
std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& d);

/// Semistability of the generic representation of dimension d, decided over
/// the generic subdimension vectors. Valid for real Schur roots (ladder
/// positions and tube positions of quasi-length below the rank) and for
/// d = delta, where the verdict refers to the generic homogeneous regular
/// representation; other inputs raise NotSupportedDim.
StabilityVerdict is_semistable_dim(const Quiver& q, const Weight& theta, const DimVector& d);

/// Strict version: every proper nonzero generic subdimension vector has
/// strictly smaller slope.
bool is_stable_dim(const Quiver& q, const Weight& theta, const DimVector& d);

}  // namespace qstab
