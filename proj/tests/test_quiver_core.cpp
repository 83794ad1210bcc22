#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qstab/quiver.hpp"

using namespace qstab;

namespace {

DimVector random_vec(std::mt19937_64& gen, int n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    DimVector v(n);
    for (auto& x : v) x = dist(gen);
    return v;
}

}  // namespace

TEST_CASE("parse canonical document") {
    Quiver q = Quiver::parse(fixtures::a3tilde_json());
    CHECK(q.size() == 4);
    CHECK(q.vertex_names() == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(q.arrows() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(q.connected());
}

TEST_CASE("parse rejections") {
    auto code_of = [](const std::string& text) {
        try {
            Quiver::parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InternalInconsistency;
    };
    CHECK(code_of("not json at all") == Errc::MalformedInput);
    CHECK(code_of(R"({"vertices":["1","1"],"arrows":[]})") == Errc::DuplicateVertex);
    CHECK(code_of(R"({"vertices":["1","2"],"arrows":[["1","2"],["2","1"]]})") ==
          Errc::CyclicQuiver);
    CHECK(code_of(R"({"vertices":["1","2"],"arrows":[["1","3"]]})") == Errc::MalformedInput);
    CHECK(code_of(R"({"vertices":["1"],"arrows":[["1","1"]]})") == Errc::CyclicQuiver);
    CHECK(code_of(R"({"vertices":["1","2","3"],"arrows":[["1","2"]]})") ==
          Errc::DisconnectedQuiver);
    CHECK(code_of(R"({"vertices":[],"arrows":[]})") == Errc::MalformedInput);
    CHECK(code_of(R"([1,2,3])") == Errc::MalformedInput);
}

TEST_CASE("euler matrix and form on A3~") {
    Quiver q = fixtures::a3tilde();
    IntMat expected = {{1, -1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}, {0, 0, 0, 1}};
    CHECK(q.euler_matrix() == expected);
    CHECK(q.tits_form({1, 1, 1, 1}) == 0);
    CHECK(q.tits_form({1, 0, 0, 1}) == 2);
    CHECK(q.tits_form({0, 1, 0, 0}) == 1);
    CHECK(q.euler_form({0, 0, 0, 1}, {1, 1, 1, 1}) == 1);
}

TEST_CASE("euler form bilinearity") {
    std::mt19937_64 gen(7);
    for (const Quiver& q : {fixtures::a3tilde(), fixtures::d4tilde(), fixtures::a3()}) {
        int n = q.size();
        for (int trial = 0; trial < 20; ++trial) {
            DimVector x = random_vec(gen, n, -3, 3);
            DimVector y = random_vec(gen, n, -3, 3);
            DimVector z = random_vec(gen, n, -3, 3);
            CHECK(q.euler_form(x + y, z) == q.euler_form(x, z) + q.euler_form(y, z));
            CHECK(q.euler_form(x, y + z) == q.euler_form(x, y) + q.euler_form(x, z));
            CHECK(q.euler_form(2 * x, y) == 2 * q.euler_form(x, y));
        }
    }
}

TEST_CASE("type gate over the diagram lists") {
    CHECK(fixtures::a2().type().str() == "Dynkin(A,2)");
    CHECK(fixtures::a3().type().str() == "Dynkin(A,3)");
    CHECK(fixtures::d4().type().str() == "Dynkin(D,4)");
    CHECK(fixtures::e6().type().str() == "Dynkin(E,6)");
    CHECK(fixtures::kronecker().type().str() == "Euclidean(A~,1)");
    CHECK(fixtures::a2tilde().type().str() == "Euclidean(A~,2)");
    CHECK(fixtures::a3tilde().type().str() == "Euclidean(A~,3)");
    CHECK(fixtures::d4tilde().type().str() == "Euclidean(D~,4)");
    CHECK(fixtures::e6tilde().type().str() == "Euclidean(E~,6)");
    CHECK(fixtures::wild_kronecker().type().is_wild());
    CHECK(fixtures::wild_star().type().is_wild());
}

TEST_CASE("delta of the fixtures") {
    CHECK(fixtures::a3tilde().delta() == DimVector{1, 1, 1, 1});
    CHECK(fixtures::a2tilde().delta() == DimVector{1, 1, 1});
    CHECK(fixtures::kronecker().delta() == DimVector{1, 1});
    CHECK(fixtures::d4tilde().delta() == DimVector{2, 1, 1, 1, 1});
    CHECK(fixtures::e6tilde().delta() == DimVector{3, 2, 1, 2, 1, 2, 1});
    CHECK_THROWS_AS((void)fixtures::a3().delta(), Error);
    CHECK_THROWS_AS((void)fixtures::wild_kronecker().delta(), Error);
}

TEST_CASE("defect closed form and radical identity") {
    Quiver q = fixtures::a3tilde();
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 30; ++trial) {
        DimVector x = random_vec(gen, 4, -4, 4);
        CHECK(q.defect(x) == x[0] - x[3]);
        // delta is radical for the symmetrized form
        CHECK(q.euler_form(q.delta(), x) + q.euler_form(x, q.delta()) == 0);
        CHECK(q.euler_form(x, q.delta()) == -q.defect(x));
    }
    CHECK(q.defect(q.delta()) == 0);
}

TEST_CASE("coxeter transform") {
    Quiver q = fixtures::a3tilde();
    CHECK(q.coxeter({0, 1, 0, 0}) == DimVector{1, 0, 1, 1});
    CHECK(q.coxeter({1, 0, 1, 1}) == DimVector{0, 1, 0, 0});
    CHECK(q.coxeter(q.delta()) == q.delta());

    std::mt19937_64 gen(13);
    for (const Quiver& e : {fixtures::a3tilde(), fixtures::d4tilde(), fixtures::e6tilde()}) {
        for (int trial = 0; trial < 20; ++trial) {
            DimVector x = random_vec(gen, e.size(), -3, 3);
            DimVector y = random_vec(gen, e.size(), -3, 3);
            CHECK(e.coxeter(e.coxeter(x), true) == x);
            CHECK(e.coxeter(e.coxeter(x, true)) == x);
            CHECK(e.euler_form(e.coxeter(x), e.coxeter(y)) == e.euler_form(x, y));
            CHECK(e.defect(e.coxeter(x)) == e.defect(x));
        }
        CHECK(e.coxeter(e.delta()) == e.delta());
    }
}

TEST_CASE("opposite quiver") {
    Quiver q = fixtures::a3tilde();
    Quiver op = q.opposite();
    CHECK(op.arrows() == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 1}, {3, 2}});
    CHECK(op.type().str() == "Euclidean(A~,3)");
    CHECK(op.delta() == q.delta());
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        DimVector x = random_vec(gen, 4, -3, 3);
        DimVector y = random_vec(gen, 4, -3, 3);
        CHECK(op.euler_form(x, y) == q.euler_form(y, x));
    }
}
