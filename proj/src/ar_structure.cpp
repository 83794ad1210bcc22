#include "qstab/ar_structure.hpp"

#include <algorithm>
#include <set>

namespace qstab {

namespace {

bool leq_componentwise(const DimVector& a, const DimVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

TubeSystem tube_system(const Quiver& q) {
    const DimVector& delta = q.delta();
    std::set<DimVector> pool;
    for (const auto& r : base_roots(q).regular) pool.insert(r);

    TubeSystem ts;
    int max_rank = q.size();  // ranks are at most |Q_0| - 1
    while (!pool.empty()) {
        // componentwise-minimal elements are quasi-simple; take the lex
        // smallest of those (the pool is ordered, so scan in lex order)
        DimVector seed;
        for (const auto& cand : pool) {
            bool minimal = true;
            for (const auto& other : pool)
                if (other != cand && leq_componentwise(other, cand)) {
                    minimal = false;
                    break;
                }
            if (minimal) { seed = cand; break; }
        }
        if (seed.empty())
            throw Error(Errc::InternalInconsistency, "no minimal regular root in pool");

        Tube tube;
        DimVector cur = seed;
        DimVector sum(q.size(), 0);
        for (;;) {
            tube.quasi_simples.push_back(cur);
            sum = sum + cur;
            if (sum == delta) break;
            if (static_cast<int>(tube.quasi_simples.size()) > max_rank)
                throw Error(Errc::InternalInconsistency,
                            "Phi-orbit of " + dim_to_string(seed) + " does not close into a tube");
            cur = q.coxeter(cur);
        }
        tube.rank = static_cast<int>(tube.quasi_simples.size());
        if (q.coxeter(tube.quasi_simples.back()) != tube.quasi_simples.front())
            throw Error(Errc::InternalInconsistency, "tube orbit is not Phi-periodic");

        // every consecutive sum of length < rank is a regular root below
        // delta and must still be in the pool
        for (int i = 0; i < tube.rank; ++i) {
            DimVector acc(q.size(), 0);
            for (int j = 0; j < tube.rank - 1; ++j) {
                acc = acc + tube.quasi_simples[(i + j) % tube.rank];
                if (pool.erase(acc) == 0)
                    throw Error(Errc::InternalInconsistency,
                                "peel-off missed regular root " + dim_to_string(acc));
            }
        }

        // rotate the lex-smallest quasi-simple to the front
        auto best = std::min_element(tube.quasi_simples.begin(), tube.quasi_simples.end());
        std::rotate(tube.quasi_simples.begin(), best, tube.quasi_simples.end());
        ts.tubes.push_back(std::move(tube));
    }

    std::sort(ts.tubes.begin(), ts.tubes.end(),
              [](const Tube& a, const Tube& b) { return a.quasi_simples[0] < b.quasi_simples[0]; });
    return ts;
}

DimVector regular_dim(const TubeSystem& ts, int tube_index, int i, long long j) {
    if (tube_index < 0 || tube_index >= static_cast<int>(ts.tubes.size()))
        throw Error(Errc::IndexOutOfRange, "tube index " + std::to_string(tube_index));
    const Tube& t = ts.tubes[tube_index];
    if (i < 1 || i > t.rank)
        throw Error(Errc::IndexOutOfRange, "quasi-simple position " + std::to_string(i));
    if (j < 1) throw Error(Errc::IndexOutOfRange, "quasi-length must be >= 1");

    DimVector delta(t.quasi_simples[0].size(), 0);
    for (const auto& qs : t.quasi_simples) delta = delta + qs;

    long long wraps = (j - 1) / t.rank;
    int part = static_cast<int>((j - 1) % t.rank) + 1;
    DimVector r = wraps * delta;
    for (int s = 0; s < part; ++s) r = r + t.quasi_simples[(i - 1 + s) % t.rank];
    return r;
}

long long guaranteed_hom(const Quiver& q, const ArPos& src_pos, const DimVector& src,
                         const ArPos& tgt_pos, const DimVector& tgt) {
    auto euler_bound = [&]() { return std::max(q.euler_form(src, tgt), 0LL); };

    switch (src_pos.cls) {
        case RootClass::Preprojective:
            switch (tgt_pos.cls) {
                case RootClass::Preprojective:
                    // same module, or strictly earlier in the knitting order
                    if (src == tgt && src_pos.level == tgt_pos.level) return euler_bound();
                    if (src_pos.level >= 0 && tgt_pos.level >= 0 && src_pos.level < tgt_pos.level)
                        return euler_bound();
                    return 0;
                case RootClass::Regular:
                case RootClass::Preinjective:
                    // Ext^1(P, R) = D Hom(R, tau P) = 0, and likewise for I
                    return euler_bound();
            }
            break;
        case RootClass::Regular:
            switch (tgt_pos.cls) {
                case RootClass::Preinjective:
                    return euler_bound();
                case RootClass::Regular:
                    if (src_pos.tube >= 0 && src_pos.tube == tgt_pos.tube) return euler_bound();
                    return 0;  // Hom between distinct tubes vanishes
                case RootClass::Preprojective:
                    return 0;  // Hom(R, P) = 0
            }
            break;
        case RootClass::Preinjective:
            switch (tgt_pos.cls) {
                case RootClass::Preinjective:
                    if (src == tgt && src_pos.level == tgt_pos.level) return euler_bound();
                    if (src_pos.level >= 0 && tgt_pos.level >= 0 && src_pos.level > tgt_pos.level)
                        return euler_bound();
                    return 0;
                default:
                    return 0;  // Hom(I, P union R) = 0
            }
    }
    throw Error(Errc::UnknownClass, "unrecognized AR class combination");
}

}  // namespace qstab
