#include "qstab/slope_set.hpp"

#include <algorithm>
#include <optional>

#include "qstab/root_system.hpp"

namespace qstab {

const char* mu_delta_tag_name(MuDeltaTag t) {
    switch (t) {
        case MuDeltaTag::DynkinCategory: return "DynkinCategory";
        case MuDeltaTag::TameCategory: return "TameCategory";
        case MuDeltaTag::RegularCategory: return "RegularCategory";
        case MuDeltaTag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

TrivialCardinality trivial_cardinality(const Quiver& q, const Weight& theta) {
    if (static_cast<int>(theta.size()) != q.size())
        throw Error(Errc::DimensionMismatch, "weight length does not match quiver");
    long long lo = *std::min_element(theta.begin(), theta.end());
    long long hi = *std::max_element(theta.begin(), theta.end());
    if (lo == hi) return {TrivialCardinality::One, Rational(lo), Rational(lo)};

    bool two_values = std::all_of(theta.begin(), theta.end(),
                                  [&](long long t) { return t == lo || t == hi; });
    if (two_values) {
        bool no_back_arrows = true;
        for (auto [s, t] : q.arrows())
            if (theta[s] == hi && theta[t] == lo) { no_back_arrows = false; break; }
        if (no_back_arrows) return {TrivialCardinality::Two, Rational(lo), Rational(hi)};
    }
    return {TrivialCardinality::More, Rational(0), Rational(0)};
}

namespace {

struct Killer {
    ArPos pos;
    DimVector dim;
    Rational slope_value;
    std::string label;
};

Rational ladder_slope(const Weight& th, const DimVector& base, const DimVector& delta,
                      long long n) {
    return slope(th, base + n * delta);
}

// Earliest level from which `killer` certifiably kills every remaining
// ladder position of `base`; nullopt when no such level exists.
std::optional<long long> certificate_level(const Quiver& q, const Weight& th,
                                           const DimVector& base, const Rational& base_slope,
                                           const Rational& mu_delta, const Killer& k,
                                           long long bound) {
    const DimVector& delta = q.delta();
    if (k.pos.cls == RootClass::Preprojective) {
        // sub-kill: hom(k, base + n delta) >= <k, base> + n * (-defect(k)),
        // increasing; slope(k) must dominate the whole tail of the ladder
        long long n_slope = 0;
        if (base_slope < mu_delta) {
            if (k.slope_value < mu_delta) return std::nullopt;
        } else if (base_slope == mu_delta) {
            if (!(k.slope_value > mu_delta)) return std::nullopt;
        } else {
            if (!(k.slope_value > mu_delta)) return std::nullopt;
            while (n_slope <= bound && !(k.slope_value > ladder_slope(th, base, delta, n_slope)))
                ++n_slope;
            if (n_slope > bound) return std::nullopt;
        }
        long long h0 = q.euler_form(k.dim, base);
        long long growth = -q.defect(k.dim);  // >= 1 for preprojectives
        long long n_hom = 0;
        while (n_hom <= bound && h0 + n_hom * growth < 1) ++n_hom;
        if (n_hom > bound) return std::nullopt;
        long long n_knit = k.pos.level + 1;
        return std::max({n_slope, n_hom, n_knit});
    }
    // quot-kill: hom(base + n delta, k) >= <base, k> + n * defect(k) with
    // defect(k) = 0 for regulars and > 0 for preinjectives
    long long n_slope = 0;
    if (base_slope > mu_delta) {
        if (!(k.slope_value <= mu_delta)) return std::nullopt;
    } else if (base_slope == mu_delta) {
        if (!(k.slope_value < mu_delta)) return std::nullopt;
    } else {
        if (!(k.slope_value < mu_delta)) return std::nullopt;
        while (n_slope <= bound && !(k.slope_value < ladder_slope(th, base, delta, n_slope)))
            ++n_slope;
        if (n_slope > bound) return std::nullopt;
    }
    long long h0 = q.euler_form(base, k.dim);
    long long growth = q.euler_form(delta, k.dim);  // defect of the killer
    long long n_hom = 0;
    while (n_hom <= bound && h0 + n_hom * growth < 1) {
        if (growth <= 0) return std::nullopt;
        ++n_hom;
    }
    if (n_hom > bound) return std::nullopt;
    return std::max(n_slope, n_hom);
}

struct EngineOut {
    // slope, dimension vector, ladder level of every certified semistable
    std::vector<std::tuple<Rational, DimVector, long long>> semistables;
    bool closed = false;
};

// Level-by-level enumeration of the preprojective ladders with sound kill
// rules and per-base termination certificates.
EngineOut run_preprojective_engine(const Quiver& q, const Weight& th, long long bound,
                                   std::vector<Killer> killers, bool mu_delta_present,
                                   const Rational& mu_delta, const std::string& side,
                                   std::vector<std::string>& certs) {
    const DimVector& delta = q.delta();
    const auto bases = base_roots(q).preprojective;
    EngineOut out;

    std::vector<std::optional<long long>> closed_from(bases.size());
    std::vector<Rational> base_slopes;
    base_slopes.reserve(bases.size());
    for (const auto& a : bases) base_slopes.push_back(slope(th, a));

    auto refresh = [&](long long processed_up_to) {
        for (size_t i = 0; i < bases.size(); ++i) {
            if (closed_from[i]) continue;
            if (base_slopes[i] == mu_delta && mu_delta_present) {
                closed_from[i] = 0;
                certs.push_back(side + "base " + dim_to_string(bases[i]) +
                                ": ladder slope is constantly mu(delta), already in the set");
                continue;
            }
            std::optional<long long> best;
            const Killer* best_killer = nullptr;
            for (const auto& k : killers) {
                auto n0 = certificate_level(q, th, bases[i], base_slopes[i], mu_delta, k, bound);
                if (n0 && (!best || *n0 < *best)) { best = n0; best_killer = &k; }
            }
            if (best && *best <= processed_up_to + 1) {
                closed_from[i] = *best;
                certs.push_back(side + "base " + dim_to_string(bases[i]) + ": levels >= " +
                                std::to_string(*best) + " killed by " + best_killer->label + " " +
                                dim_to_string(best_killer->dim) + " of slope " +
                                best_killer->slope_value.str());
            }
        }
    };

    refresh(-1);
    long long n = 0;
    for (; n <= bound; ++n) {
        std::vector<size_t> active;
        for (size_t i = 0; i < bases.size(); ++i)
            if (!closed_from[i] || *closed_from[i] > n) active.push_back(i);
        if (active.empty()) break;

        for (size_t i : active) {
            DimVector x = bases[i] + n * delta;
            Rational sx = slope(th, x);
            ArPos xpos{RootClass::Preprojective, n, -1};

            bool killed = false;
            for (const auto& k : killers) {
                if (k.slope_value < sx && guaranteed_hom(q, xpos, x, k.pos, k.dim) >= 1) {
                    certs.push_back(side + dim_to_string(x) + " at level " + std::to_string(n) +
                                    " killed: maps onto " + k.label + " " + dim_to_string(k.dim) +
                                    " of smaller slope " + k.slope_value.str());
                    killed = true;
                    break;
                }
                if (k.slope_value > sx && guaranteed_hom(q, k.pos, k.dim, xpos, x) >= 1) {
                    certs.push_back(side + dim_to_string(x) + " at level " + std::to_string(n) +
                                    " killed: receives " + k.label + " " + dim_to_string(k.dim) +
                                    " of larger slope " + k.slope_value.str());
                    killed = true;
                    break;
                }
            }
            if (killed) continue;

            StabilityVerdict v = is_semistable_dim(q, th, x);
            if (v.status != Stability::Unstable) {
                out.semistables.emplace_back(sx, x, n);
                killers.push_back({xpos, x, sx, "semistable preprojective"});
            }
        }
        refresh(n);
    }

    out.closed = std::all_of(closed_from.begin(), closed_from.end(),
                             [&](const std::optional<long long>& c) { return c && *c <= n; });
    return out;
}

DimVector argmax_slope_base(const Quiver& q, const Weight& th,
                            const std::vector<DimVector>& bases) {
    DimVector best;
    Rational best_slope(0);
    for (const auto& a : bases) {
        Rational s = slope(th, a);
        if (best.empty() || s > best_slope || (s == best_slope && a < best)) {
            best = a;
            best_slope = s;
        }
    }
    return best;
}

void add_witness(std::map<Rational, DimVector>& witnesses, const Rational& s,
                 const DimVector& d) {
    auto it = witnesses.find(s);
    if (it == witnesses.end())
        witnesses.emplace(s, d);
    else if (d < it->second)
        it->second = d;
}

}  // namespace

MuDeltaCase classify_mu_delta(const Quiver& q, const Weight& theta, long long bound) {
    const DimVector& delta = q.delta();
    Rational mu_delta = slope(theta, delta);

    if (is_semistable_dim(q, theta, delta).status == Stability::Unstable)
        return {MuDeltaTag::DynkinCategory, bound};

    BaseRoots br = base_roots(q);
    std::vector<DimVector> at_mu;
    for (const auto& a : br.preprojective)
        if (slope(theta, a) == mu_delta) at_mu.push_back(a);
    for (const auto& a : br.preinjective)
        if (slope(theta, a) == mu_delta) at_mu.push_back(a);
    for (long long n = 0; n <= bound; ++n)
        for (const auto& a : at_mu)
            if (is_semistable_dim(q, theta, a + n * delta).status != Stability::Unstable)
                return {MuDeltaTag::TameCategory, bound};

    bool regular_cert = true;
    for (const auto& a : br.preprojective)
        if (!(slope(theta, a) < mu_delta)) { regular_cert = false; break; }
    if (regular_cert)
        for (const auto& a : br.preinjective)
            if (!(slope(theta, a) > mu_delta)) { regular_cert = false; break; }
    if (regular_cert) return {MuDeltaTag::RegularCategory, bound};

    return {MuDeltaTag::Inconclusive, bound};
}

SlopeSetReport compute_slope_set(const Quiver& q, const Weight& theta, long long bound) {
    const DimVector& delta = q.delta();
    SlopeSetReport report;
    report.bound = bound;
    report.mu_delta = slope(theta, delta);
    report.mdc = classify_mu_delta(q, theta, bound);

    TrivialCardinality tc = trivial_cardinality(q, theta);
    if (tc.kind != TrivialCardinality::More) {
        report.verdict = SlopeSetReport::Verdict::Finite;
        int n = q.size();
        auto unit = [&](long long value) {
            // lexicographically smallest semistable witness of that slope is
            // the simple at the last vertex carrying the value
            for (int i = n - 1; i >= 0; --i)
                if (theta[i] == value) {
                    DimVector e(n, 0);
                    e[i] = 1;
                    return e;
                }
            throw Error(Errc::InternalInconsistency, "weight value vanished");
        };
        report.slopes.push_back(tc.a);
        report.witnesses.emplace(tc.a, unit(tc.a.num()));
        if (tc.kind == TrivialCardinality::Two) {
            report.slopes.push_back(tc.b);
            report.witnesses.emplace(tc.b, unit(tc.b.num()));
            report.certificates.push_back(
                "trivial cardinality: weight takes two values with no arrows from the high part "
                "to the low part");
        } else {
            report.certificates.push_back("trivial cardinality: constant weight");
        }
        return report;
    }

    bool mu_present = report.mdc.tag != MuDeltaTag::DynkinCategory;

    // regular slopes from tube positions of quasi-length below the rank
    std::map<Rational, DimVector> witnesses;
    std::vector<Killer> killers;
    TubeSystem ts = tube_system(q);
    for (size_t t = 0; t < ts.tubes.size(); ++t) {
        const Tube& tube = ts.tubes[t];
        for (int i = 1; i <= tube.rank; ++i)
            for (int j = 1; j < tube.rank; ++j) {
                DimVector d = regular_dim(ts, static_cast<int>(t), i, j);
                StabilityVerdict v = is_semistable_dim(q, theta, d);
                if (v.status != Stability::Unstable) {
                    add_witness(witnesses, v.slope, d);
                    killers.push_back({ArPos{RootClass::Regular, -1, static_cast<int>(t)}, d,
                                       v.slope, "semistable tube position"});
                }
            }
    }
    if (mu_present) {
        add_witness(witnesses, report.mu_delta, delta);
        killers.push_back(
            {ArPos{RootClass::Regular, -1, -1}, delta, report.mu_delta, "generic delta witness"});
        report.certificates.push_back(
            "generic representation of delta is semistable at slope " + report.mu_delta.str());
    }

    if (report.mdc.tag == MuDeltaTag::RegularCategory) {
        report.verdict = SlopeSetReport::Verdict::Infinite;
        report.family_base = argmax_slope_base(q, theta, base_roots(q).preprojective);
        for (long long n = 0; n < 3; ++n)
            report.family_slopes.push_back(ladder_slope(theta, report.family_base, delta, n));
        report.certificates.push_back(
            "infinite family: ladder of maximal-slope preprojective base root " +
            dim_to_string(report.family_base) +
            "; every level is semistable (submodules stay on lower levels) and the slopes " +
            "strictly increase toward mu(delta) = " + report.mu_delta.str());
        return report;
    }

    // preinjective side: preprojective engine on the opposite quiver with
    // the negated weight; slopes come back negated
    Quiver qop = q.opposite();
    Weight thn(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) thn[i] = -theta[i];

    std::vector<Killer> killers_op;
    TubeSystem tsop = tube_system(qop);
    for (size_t t = 0; t < tsop.tubes.size(); ++t) {
        const Tube& tube = tsop.tubes[t];
        for (int i = 1; i <= tube.rank; ++i)
            for (int j = 1; j < tube.rank; ++j) {
                DimVector d = regular_dim(tsop, static_cast<int>(t), i, j);
                StabilityVerdict v = is_semistable_dim(qop, thn, d);
                if (v.status != Stability::Unstable)
                    killers_op.push_back({ArPos{RootClass::Regular, -1, static_cast<int>(t)}, d,
                                          v.slope, "semistable tube position"});
            }
    }
    bool mu_present_op = is_semistable_dim(qop, thn, delta).status != Stability::Unstable;
    if (mu_present_op)
        killers_op.push_back(
            {ArPos{RootClass::Regular, -1, -1}, delta, -report.mu_delta, "generic delta witness"});

    EngineOut op = run_preprojective_engine(qop, thn, bound, killers_op, mu_present_op,
                                            -report.mu_delta, "[preinjective side] ",
                                            report.certificates);
    for (const auto& [s, d, lvl] : op.semistables) {
        add_witness(witnesses, -s, d);
        // dual modules act as preinjective quot-killers on the main side
        killers.push_back({ArPos{RootClass::Preinjective, lvl, -1}, d, -s,
                           "semistable preinjective"});
    }

    EngineOut main = run_preprojective_engine(q, theta, bound, killers, mu_present,
                                              report.mu_delta, "", report.certificates);
    for (const auto& [s, d, lvl] : main.semistables) add_witness(witnesses, s, d);

    for (const auto& [s, d] : witnesses) report.slopes.push_back(s);
    report.witnesses = std::move(witnesses);

    if (report.mdc.tag == MuDeltaTag::Inconclusive || !main.closed || !op.closed) {
        report.verdict = SlopeSetReport::Verdict::Inconclusive;
        report.certificates.push_back("search bound " + std::to_string(bound) +
                                      " exhausted before every ladder was certified");
    } else {
        report.verdict = SlopeSetReport::Verdict::Finite;
    }
    return report;
}

std::vector<std::pair<DimVector, Rational>> infinite_family(const Quiver& q, const Weight& theta,
                                                            long long count) {
    if (count < 0) throw Error(Errc::IndexOutOfRange, "count must be nonnegative");
    MuDeltaCase mdc = classify_mu_delta(q, theta, 50);
    if (mdc.tag != MuDeltaTag::RegularCategory)
        throw Error(Errc::NotRegularCase,
                    std::string("infinite family requires RegularCategory, got ") +
                        mu_delta_tag_name(mdc.tag));
    const DimVector& delta = q.delta();
    DimVector base = argmax_slope_base(q, theta, base_roots(q).preprojective);
    std::vector<std::pair<DimVector, Rational>> family;
    for (long long n = 0; n < count; ++n) {
        DimVector d = base + n * delta;
        family.emplace_back(d, slope(theta, d));
    }
    return family;
}

}  // namespace qstab
