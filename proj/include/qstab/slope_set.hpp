#pragma once

#include <map>
#include <string>
#include <vector>

#include "qstab/ar_structure.hpp"
#include "qstab/quiver.hpp"
#include "qstab/rational.hpp"
#include "qstab/stability.hpp"

namespace qstab {

/// Structure of the category of semistable modules at slope mu(delta).
enum class MuDeltaTag { DynkinCategory, TameCategory, RegularCategory, Inconclusive };

const char* mu_delta_tag_name(MuDeltaTag t);

struct MuDeltaCase {
    MuDeltaTag tag;
    long long bound = 0;  // the search bound, relevant when Inconclusive
};

/// Shortcut cardinality of the slope set readable directly off the weight.
struct TrivialCardinality {
    enum Kind { One, Two, More } kind;
    Rational a;  // One: the slope; Two: the smaller slope
    Rational b;  // Two: the larger slope
};

struct SlopeSetReport {
    enum class Verdict { Finite, Infinite, Inconclusive };

    Rational mu_delta;
    MuDeltaCase mdc{MuDeltaTag::Inconclusive, 0};
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Rational> slopes;          // finite verdict, sorted ascending
    std::map<Rational, DimVector> witnesses;
    DimVector family_base;                 // infinite verdict
    std::vector<Rational> family_slopes;   // first members, strictly increasing
    long long bound = 0;
    std::vector<std::string> certificates;
};

/// One(c) iff theta is constant c. Two(a, b) iff the vertex set splits by
/// theta value into a low part and a high part with no arrows from high to
/// low. More otherwise.
TrivialCardinality trivial_cardinality(const Quiver& q, const Weight& theta);

/// Decides which structural case mod^{mu(delta)} falls into:
/// the generic delta representation unstable -> DynkinCategory; a semistable
/// preprojective/preinjective ladder position at slope mu(delta) within
/// `bound` levels -> TameCategory; all preprojective base slopes strictly
/// below and all preinjective base slopes strictly above mu(delta)
/// -> RegularCategory; otherwise Inconclusive(bound).
MuDeltaCase classify_mu_delta(const Quiver& q, const Weight& theta, long long bound);

/// The slope set engine: either the exact finite set of slopes with one
/// witness per slope, or a certified infinite verdict with an explicit
/// preprojective slope family, or an honest Inconclusive(bound).
SlopeSetReport compute_slope_set(const Quiver& q, const Weight& theta, long long bound);

/// First `count` members (alpha* + n*delta, slope) of the certified
/// infinite family; requires classify_mu_delta = RegularCategory.
std::vector<std::pair<DimVector, Rational>> infinite_family(const Quiver& q, const Weight& theta,
                                                            long long count);

}  // namespace qstab
