#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "qstab/root_system.hpp"
#include "qstab/stability.hpp"

using namespace qstab;

TEST_CASE("slope arithmetic") {
    Quiver q = fixtures::a3tilde();
    CHECK(slope({1, 1, 2, 0}, q.delta()) == Rational(1));
    CHECK(slope({1, 1, 2, 0}, {0, 0, 0, 1}) == Rational(0));
    for (long long n = 0; n <= 6; ++n) {
        DimVector d = DimVector{0, 1, 1, 1} + n * q.delta();
        CHECK(slope({3, 2, 2, 1}, d) == Rational(8 * n + 5, 4 * n + 3));
    }
    CHECK_THROWS_AS((void)slope({1, 1}, {0, 0}), Error);
    CHECK_THROWS_AS((void)slope({1, 1, 1}, {1, 1}), Error);
}

TEST_CASE("theta_shift") {
    std::vector<Rational> form = theta_shift({3, 2, 2, 1}, Rational(2));
    CHECK(form == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(-1)});
    CHECK(theta_shift({3, 2, 2, 1}, Rational(0)) ==
          std::vector<Rational>{Rational(3), Rational(2), Rational(2), Rational(1)});
    // the shifted form vanishes on delta when a = mu(delta)
    Quiver q = fixtures::a3tilde();
    Weight th{1, 1, 2, 0};
    auto shifted = theta_shift(th, slope(th, q.delta()));
    Rational acc(0);
    for (size_t i = 0; i < shifted.size(); ++i) acc = acc + shifted[i] * Rational(q.delta()[i]);
    CHECK(acc == Rational(0));
}

TEST_CASE("generic_subdims base examples") {
    CHECK(generic_subdims(fixtures::a2(), {1, 1}) ==
          std::vector<DimVector>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(generic_subdims(fixtures::kronecker(), {1, 1}) ==
          std::vector<DimVector>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(generic_subdims(fixtures::a3tilde(), {0, 0, 1, 0}) ==
          std::vector<DimVector>{{0, 0, 0, 0}, {0, 0, 1, 0}});
    // the uniserial module over 3 -> 4
    CHECK(generic_subdims(fixtures::a3tilde(), {0, 0, 1, 1}) ==
          std::vector<DimVector>{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
    CHECK_THROWS_AS((void)generic_subdims(fixtures::a2(), {1, -1}), Error);
}

TEST_CASE("seesaw over generic subdimension vectors") {
    Quiver q = fixtures::a3tilde();
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<long long> wdist(-2, 2);
    std::vector<DimVector> dims = {{1, 1, 1, 1}, {0, 1, 1, 1}, {1, 2, 2, 2}, {1, 1, 0, 1}};
    for (const auto& d : dims) {
        for (int trial = 0; trial < 10; ++trial) {
            Weight th(4);
            for (auto& x : th) x = wdist(gen);
            Rational mu = slope(th, d);
            for (const auto& e : generic_subdims(q, d)) {
                if (is_zero(e) || e == d) continue;
                Rational a = slope(th, e), b = slope(th, d - e);
                CHECK(std::min(a, b) <= mu);
                CHECK(mu <= std::max(a, b));
            }
        }
    }
}

TEST_CASE("is_semistable_dim on the paper fixtures") {
    Quiver q = fixtures::a3tilde();

    // semistable at slope 1 (in fact stable: the only proper subdim has slope 0)
    StabilityVerdict v1 = is_semistable_dim(q, {1, 1, 2, 0}, {0, 0, 1, 1});
    CHECK(v1.status != Stability::Unstable);
    CHECK(v1.slope == Rational(1));

    StabilityVerdict v2 = is_semistable_dim(q, {1, 2, 3, 2}, {1, 1, 0, 1});
    CHECK(v2.status == Stability::Unstable);
    CHECK(v2.slope == Rational(5, 3));
    REQUIRE(v2.violator.has_value());
    CHECK(*v2.violator == DimVector{0, 1, 0, 1});

    StabilityVerdict v3 = is_semistable_dim(q, {1, 1, 2, 0}, q.delta());
    CHECK(v3.status != Stability::Unstable);

    StabilityVerdict v4 = is_semistable_dim(q, {1, 2, 3, 2}, q.delta());
    CHECK(v4.status == Stability::Unstable);
}

TEST_CASE("is_stable_dim") {
    CHECK(is_stable_dim(fixtures::a2(), {1, 0}, {1, 1}));
    CHECK(is_stable_dim(fixtures::a3tilde(), {5, -1, 2, 0}, {0, 0, 1, 0}));
    // all slopes zero: semistable but not stable
    Quiver q = fixtures::a3tilde();
    CHECK_FALSE(is_stable_dim(q, {0, 0, 0, 0}, {0, 0, 1, 1}));
    CHECK(is_semistable_dim(q, {0, 0, 0, 0}, {0, 0, 1, 1}).status == Stability::Semistable);
}

TEST_CASE("supported-input guard") {
    Quiver q = fixtures::a3tilde();
    auto code_of = [&](const DimVector& d) {
        try {
            (void)is_semistable_dim(q, {1, 1, 2, 0}, d);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InternalInconsistency;
    };
    CHECK(code_of({1, 0, 0, 1}) == Errc::NotSupportedDim);     // not a root
    CHECK(code_of({1, 2, 1, 1}) == Errc::NotSupportedDim);     // quasi-length >= rank
    CHECK(code_of({2, 2, 2, 2}) == Errc::NotSupportedDim);     // 2 delta
    CHECK(code_of({0, 0, 0, 0}) == Errc::ZeroDimVector);
    CHECK(code_of({-1, 0, 0, 0}) == Errc::NegativeEntry);
    CHECK_THROWS_AS((void)is_semistable_dim(fixtures::wild_kronecker(), {1, 0}, {1, 1}), Error);
}

TEST_CASE("theta translation and scaling invariance") {
    Quiver q = fixtures::a3tilde();
    std::vector<Weight> weights = {{1, 1, 2, 0}, {1, 2, 3, 2}, {3, 2, 2, 1}, {0, 0, 1, 1}};
    std::vector<DimVector> dims = {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0},
                                   {1, 1, 1, 2},  {1, 1, 1, 1}};
    for (const auto& th : weights)
        for (const auto& d : dims) {
            StabilityVerdict base = is_semistable_dim(q, th, d);
            for (long long c : {-3LL, 2LL}) {
                Weight shifted(4), scaled(4);
                for (int i = 0; i < 4; ++i) {
                    shifted[i] = th[i] + c;
                    scaled[i] = 2 * th[i];
                }
                StabilityVerdict vs = is_semistable_dim(q, shifted, d);
                CHECK(vs.status == base.status);
                CHECK(vs.slope == base.slope + Rational(c));
                StabilityVerdict vc = is_semistable_dim(q, scaled, d);
                CHECK(vc.status == base.status);
                CHECK(vc.slope == Rational(2) * base.slope);
            }
        }
}

TEST_CASE("monotone slope ladder") {
    Quiver q = fixtures::a3tilde();
    for (const Weight& th : std::vector<Weight>{{1, 1, 2, 0}, {1, 2, 3, 2}, {3, 2, 2, 1}}) {
        Rational mu = slope(th, q.delta());
        for (const auto& a : real_roots_below_delta(q)) {
            Rational prev = slope(th, a);
            if (prev == mu) {
                for (long long n = 1; n <= 8; ++n)
                    CHECK(slope(th, ladder_dim(q, a, n)) == mu);
                continue;
            }
            for (long long n = 1; n <= 8; ++n) {
                Rational cur = slope(th, ladder_dim(q, a, n));
                if (prev < mu) {
                    CHECK(prev < cur);
                    CHECK(cur < mu);
                } else {
                    CHECK(cur < prev);
                    CHECK(mu < cur);
                }
                prev = cur;
            }
        }
    }
}
