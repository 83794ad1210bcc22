#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qstab/root_system.hpp"

using namespace qstab;

namespace {

// independent box scan used to cross-check real_roots_below_delta
std::vector<DimVector> box_scan(const Quiver& q) {
    const DimVector& delta = q.delta();
    int n = q.size();
    std::vector<DimVector> out;
    DimVector d(n, 0);
    for (;;) {
        if (!is_zero(d) && d != delta && q.tits_form(d) == 1) out.push_back(d);
        int i = 0;
        while (i < n && d[i] == delta[i]) d[i++] = 0;
        if (i == n) break;
        ++d[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("roots below delta on A3~") {
    Quiver q = fixtures::a3tilde();
    auto roots = real_roots_below_delta(q);
    CHECK(roots.size() == 12);
    CHECK(roots == box_scan(q));
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    // the two excluded 0/1 vectors
    CHECK(!std::binary_search(roots.begin(), roots.end(), DimVector{1, 0, 0, 1}));
    CHECK(!std::binary_search(roots.begin(), roots.end(), DimVector{0, 1, 1, 0}));
    CHECK(!std::binary_search(roots.begin(), roots.end(), DimVector{1, 1, 1, 1}));
}

TEST_CASE("roots below delta on Kronecker") {
    auto roots = real_roots_below_delta(fixtures::kronecker());
    CHECK(roots == std::vector<DimVector>{{0, 1}, {1, 0}});
}

TEST_CASE("box scan agreement on larger fixtures") {
    for (const Quiver& q : {fixtures::a2tilde(), fixtures::d4tilde(), fixtures::e6tilde()})
        CHECK(real_roots_below_delta(q) == box_scan(q));
}

TEST_CASE("real and imaginary roots") {
    Quiver q = fixtures::a3tilde();
    CHECK(is_real_root(q, {2, 3, 3, 3}));  // (0,1,1,1) + 2 delta
    CHECK(!is_real_root(q, {3, 3, 3, 3}));
    CHECK(is_imaginary_root(q, {3, 3, 3, 3}));
    CHECK(is_imaginary_root(q, {1, 1, 1, 1}));
    CHECK(!is_imaginary_root(q, {2, 3, 3, 3}));
    CHECK(!is_real_root(q, {1, 0, 0, 1}));
    CHECK(!is_imaginary_root(q, {1, 0, 0, 1}));
}

TEST_CASE("classify_root") {
    Quiver q = fixtures::a3tilde();
    CHECK(classify_root(q, {0, 0, 0, 1}) == RootClass::Preprojective);
    CHECK(classify_root(q, {0, 1, 0, 0}) == RootClass::Regular);
    CHECK(classify_root(q, {1, 1, 1, 0}) == RootClass::Preinjective);
    CHECK(classify_root(q, {2, 2, 2, 2}) == RootClass::Regular);
    CHECK_THROWS_AS((void)classify_root(q, {1, 0, 0, 1}), Error);
}

TEST_CASE("base roots partition") {
    Quiver q = fixtures::a3tilde();
    BaseRoots br = base_roots(q);
    CHECK(br.preprojective ==
          std::vector<DimVector>{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 1}});
    CHECK(br.regular ==
          std::vector<DimVector>{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}});
    CHECK(br.preinjective ==
          std::vector<DimVector>{{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}});

    BaseRoots kr = base_roots(fixtures::kronecker());
    CHECK(kr.preprojective == std::vector<DimVector>{{0, 1}});
    CHECK(kr.preinjective == std::vector<DimVector>{{1, 0}});
    CHECK(kr.regular.empty());

    for (const Quiver& e : {fixtures::a2tilde(), fixtures::d4tilde(), fixtures::e6tilde()}) {
        BaseRoots b = base_roots(e);
        auto all = real_roots_below_delta(e);
        CHECK(b.preprojective.size() + b.regular.size() + b.preinjective.size() == all.size());
        CHECK(b.preprojective.size() == b.preinjective.size());
    }
}

TEST_CASE("delta minus alpha pairing") {
    for (const Quiver& q :
         {fixtures::a3tilde(), fixtures::a2tilde(), fixtures::d4tilde(), fixtures::e6tilde()}) {
        const DimVector& delta = q.delta();
        for (const auto& a : real_roots_below_delta(q)) {
            DimVector b = delta - a;
            CHECK(is_real_root(q, b));
            RootClass ca = classify_root(q, a);
            RootClass cb = classify_root(q, b);
            if (ca == RootClass::Regular)
                CHECK(cb == RootClass::Regular);
            else
                CHECK(cb == (ca == RootClass::Preprojective ? RootClass::Preinjective
                                                            : RootClass::Preprojective));
        }
    }
}

TEST_CASE("coxeter permutes the regular base roots") {
    for (const Quiver& q :
         {fixtures::a3tilde(), fixtures::a2tilde(), fixtures::d4tilde(), fixtures::e6tilde()}) {
        auto reg = base_roots(q).regular;
        std::set<DimVector> pool(reg.begin(), reg.end());
        for (const auto& r : reg) CHECK(pool.count(q.coxeter(r)) == 1);
    }
}

TEST_CASE("ladder_dim") {
    Quiver q = fixtures::a3tilde();
    CHECK(ladder_dim(q, {0, 1, 1, 1}, 1) == DimVector{1, 2, 2, 2});
    CHECK(ladder_dim(q, {0, 1, 1, 1}, 0) == DimVector{0, 1, 1, 1});
    for (long long n = 0; n <= 5; ++n)
        CHECK(q.defect(ladder_dim(q, {0, 0, 0, 1}, n)) == q.defect(DimVector{0, 0, 0, 1}));
    CHECK_THROWS_AS((void)ladder_dim(q, {1, 1, 1, 1}, 1), Error);
    CHECK_THROWS_AS((void)ladder_dim(q, {1, 0, 0, 1}, 1), Error);
    CHECK_THROWS_AS((void)ladder_dim(q, {0, 0, 0, 1}, -1), Error);

    // ladder values stay real roots
    for (const auto& base : real_roots_below_delta(q))
        for (long long n = 0; n <= 10; ++n) CHECK(is_real_root(q, ladder_dim(q, base, n)));
}
