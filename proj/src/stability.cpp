#include "qstab/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace qstab {

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::Semistable: return "Semistable";
        case Stability::Unstable: return "Unstable";
    }
    return "?";
}

Rational slope(const Weight& theta, const DimVector& d) {
    if (theta.size() != d.size())
        throw Error(Errc::DimensionMismatch, "weight length does not match dimension vector");
    if (!is_nonnegative(d) || is_zero(d))
        throw Error(Errc::ZeroDimVector, "slope needs a nonzero nonnegative vector");
    long long num = 0, den = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        num += theta[i] * d[i];
        den += d[i];
    }
    return Rational(num, den);
}

std::vector<Rational> theta_shift(const Weight& theta, const Rational& a) {
    std::vector<Rational> form;
    form.reserve(theta.size());
    for (long long t : theta) form.push_back(Rational(t) - a);
    return form;
}

namespace {

long long max_box_volume() {
    static long long cached = [] {
        if (const char* env = std::getenv("QSTAB_MAX_BOX")) {
            long long v = std::atoll(env);
            if (v > 0) return v;
        }
        return 5000000LL;
    }();
    return cached;
}

// Memoized generic-subdimension computation; the memo lives per top-level
// call so concurrent evaluations never share mutable state.
class SubdimSolver {
public:
    SubdimSolver(const Quiver& q, long long budget) : q_(q), budget_(budget) {}

    const std::vector<DimVector>& get(const DimVector& d) {
        auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;

        long long volume = 1;
        for (long long x : d) {
            volume *= x + 1;
            if (volume > budget_)
                throw Error(Errc::ResourceLimit,
                            "generic subdimension box for " + dim_to_string(d) +
                                " exceeds QSTAB_MAX_BOX");
        }
        budget_ -= volume;
        if (budget_ < 0)
            throw Error(Errc::ResourceLimit, "generic subdimension budget exhausted");

        int n = q_.size();
        std::vector<DimVector> result;
        DimVector e(n, 0);
        for (;;) {
            if (admits(e, d)) result.push_back(e);
            int i = 0;
            while (i < n && e[i] == d[i]) e[i++] = 0;
            if (i == n) break;
            ++e[i];
        }
        std::sort(result.begin(), result.end());
        return memo_.emplace(d, std::move(result)).first->second;
    }

private:
    bool admits(const DimVector& e, const DimVector& d) {
        if (is_zero(e) || e == d) return true;
        DimVector quot = d - e;
        // cache C * quot once, then test <e', quot> for each e' of gen(e)
        int n = q_.size();
        DimVector cq(n, 0);
        const IntMat& c = q_.euler_matrix();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cq[i] += c[i][j] * quot[j];
        for (const auto& sub : get(e)) {
            long long v = 0;
            for (int i = 0; i < n; ++i) v += sub[i] * cq[i];
            if (v < 0) return false;
        }
        return true;
    }

    const Quiver& q_;
    long long budget_;
    std::map<DimVector, std::vector<DimVector>> memo_;
};

// Supported inputs: real Schur roots reachable in this artifact, plus delta.
void check_supported(const Quiver& q, const DimVector& d) {
    if (!is_nonnegative(d))
        throw Error(Errc::NegativeEntry, "dimension vector must be nonnegative");
    if (is_zero(d)) throw Error(Errc::ZeroDimVector, "dimension vector must be nonzero");
    const QuiverType& t = q.type();
    if (t.is_dynkin()) {
        if (q.tits_form(d) != 1)
            throw Error(Errc::NotSupportedDim, dim_to_string(d) + " is not a real root");
        return;
    }
    if (t.is_euclidean()) {
        const DimVector& delta = q.delta();
        if (d == delta) return;
        if (q.tits_form(d) != 1)
            throw Error(Errc::NotSupportedDim,
                        dim_to_string(d) + " is neither a real root nor delta");
        if (q.defect(d) == 0) {
            // regular real roots are rigid only at quasi-length below the
            // tube rank, i.e. while some entry stays below delta
            bool below = false;
            for (size_t i = 0; i < d.size(); ++i)
                if (d[i] < delta[i]) { below = true; break; }
            if (!below)
                throw Error(Errc::NotSupportedDim,
                            dim_to_string(d) + " is a regular root of quasi-length >= rank");
        }
        return;
    }
    throw Error(Errc::NotSupportedDim, "stability decision requires Dynkin or Euclidean type");
}

}  // namespace

std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.size())
        throw Error(Errc::DimensionMismatch, "vector length does not match quiver");
    if (!is_nonnegative(d))
        throw Error(Errc::NegativeEntry, "dimension vector must be nonnegative");
    SubdimSolver solver(q, max_box_volume());
    return solver.get(d);
}

StabilityVerdict is_semistable_dim(const Quiver& q, const Weight& theta, const DimVector& d) {
    check_supported(q, d);
    Rational mu = slope(theta, d);

    StabilityVerdict verdict{Stability::Stable, mu, std::nullopt, std::nullopt};
    for (const auto& e : generic_subdims(q, d)) {
        if (is_zero(e) || e == d) continue;
        Rational se = slope(theta, e);
        if (se > mu) {
            // maximal slope first; ties resolved to the largest subdimension
            // vector, matching the maximal destabilizing submodule
            if (!verdict.violator) {
                verdict.violator = e;
            } else {
                Rational sv = slope(theta, *verdict.violator);
                if (se > sv || (se == sv && *verdict.violator < e)) verdict.violator = e;
            }
            verdict.status = Stability::Unstable;
        } else if (se == mu) {
            if (!verdict.equal_slope_witness) verdict.equal_slope_witness = e;
            if (verdict.status == Stability::Stable) verdict.status = Stability::Semistable;
        }
    }
    if (verdict.status != Stability::Unstable) verdict.violator.reset();
    return verdict;
}

bool is_stable_dim(const Quiver& q, const Weight& theta, const DimVector& d) {
    return is_semistable_dim(q, theta, d).status == Stability::Stable;
}

}  // namespace qstab
