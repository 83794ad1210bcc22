#pragma once

#include <vector>

#include "qstab/quiver.hpp"

namespace qstab {

/// AR class of a root of a Euclidean quiver, determined by the sign of the
/// defect: negative / zero / positive.
enum class RootClass { Preprojective, Regular, Preinjective };

const char* root_class_name(RootClass c);

/// The real roots strictly between 0 and delta, partitioned by RootClass.
/// The preprojective list is the alpha_i base of the ladder alpha_i + n*delta;
/// the preinjective list is the dual base.
struct BaseRoots {
    std::vector<DimVector> preprojective;
    std::vector<DimVector> regular;
    std::vector<DimVector> preinjective;
};

/// All d with 0 < d <= delta componentwise, d != delta, and tits_form(d) = 1,
/// in lexicographic order. Requires Euclidean type.
std::vector<DimVector> real_roots_below_delta(const Quiver& q);

/// Positive d is a real root iff q(d) = 1 (sufficient for Euclidean type).
bool is_real_root(const Quiver& q, const DimVector& d);

/// Positive d is imaginary iff d = m*delta for some m >= 1.
bool is_imaginary_root(const Quiver& q, const DimVector& d);

/// Sign of the defect; imaginary roots are Regular. Errors with NotARoot on
/// vectors that are neither real nor imaginary roots.
RootClass classify_root(const Quiver& q, const DimVector& d);

/// Partition of real_roots_below_delta by RootClass, each list lexicographic.
BaseRoots base_roots(const Quiver& q);

/// base + n*delta. Errors with NotABaseRoot unless base is a real root
/// strictly below delta.
DimVector ladder_dim(const Quiver& q, const DimVector& base, long long n);

}  // namespace qstab
