#include "qstab/root_system.hpp"

#include <algorithm>

namespace qstab {

const char* root_class_name(RootClass c) {
    switch (c) {
        case RootClass::Preprojective: return "Preprojective";
        case RootClass::Regular: return "Regular";
        case RootClass::Preinjective: return "Preinjective";
    }
    return "?";
}

std::vector<DimVector> real_roots_below_delta(const Quiver& q) {
    const DimVector& delta = q.delta();
    int n = q.size();
    std::vector<DimVector> roots;
    DimVector d(n, 0);
    // odometer scan of the box [0, delta]; delta itself has q = 0
    for (;;) {
        int i = 0;
        while (i < n && d[i] == delta[i]) d[i++] = 0;
        if (i == n) break;
        ++d[i];
        if (!is_zero(d) && d != delta && q.tits_form(d) == 1) roots.push_back(d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_real_root(const Quiver& q, const DimVector& d) {
    if (!is_nonnegative(d) || is_zero(d))
        throw Error(Errc::NegativeEntry, "root test needs a positive nonzero vector");
    if (!q.type().is_euclidean() && !q.type().is_dynkin())
        throw Error(Errc::NotTame, "root test requires Dynkin or Euclidean type");
    return q.tits_form(d) == 1;
}

bool is_imaginary_root(const Quiver& q, const DimVector& d) {
    if (!is_nonnegative(d) || is_zero(d))
        throw Error(Errc::NegativeEntry, "root test needs a positive nonzero vector");
    const DimVector& delta = q.delta();
    long long m = 0;
    for (size_t i = 0; i < d.size(); ++i)
        if (delta[i] == 1) { m = d[i]; break; }
    if (m < 1) return false;
    return d == m * delta;
}

RootClass classify_root(const Quiver& q, const DimVector& d) {
    if (is_imaginary_root(q, d)) return RootClass::Regular;
    if (!is_real_root(q, d))
        throw Error(Errc::NotARoot, dim_to_string(d) + " is neither a real nor an imaginary root");
    long long def = q.defect(d);
    if (def < 0) return RootClass::Preprojective;
    if (def > 0) return RootClass::Preinjective;
    return RootClass::Regular;
}

BaseRoots base_roots(const Quiver& q) {
    BaseRoots br;
    for (const auto& d : real_roots_below_delta(q)) {
        long long def = q.defect(d);
        if (def < 0)
            br.preprojective.push_back(d);
        else if (def > 0)
            br.preinjective.push_back(d);
        else
            br.regular.push_back(d);
    }
    return br;
}

DimVector ladder_dim(const Quiver& q, const DimVector& base, long long n) {
    const DimVector& delta = q.delta();
    if (static_cast<int>(base.size()) != q.size())
        throw Error(Errc::DimensionMismatch, "base length does not match quiver");
    bool below = !is_zero(base) && base != delta;
    for (size_t i = 0; below && i < base.size(); ++i)
        if (base[i] < 0 || base[i] > delta[i]) below = false;
    if (!below || q.tits_form(base) != 1)
        throw Error(Errc::NotABaseRoot, dim_to_string(base) + " is not a real root below delta");
    if (n < 0) throw Error(Errc::IndexOutOfRange, "ladder level must be nonnegative");
    return base + n * delta;
}

}  // namespace qstab
