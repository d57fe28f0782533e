#include <doctest.h>

#include <random>

#include "gysin/linalg.hpp"

using namespace gysin;

namespace {

SparseMatrix from_rows(int rows, int cols, const std::vector<std::vector<long>>& data) {
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, Rational(data[i][j]));
    return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> v(-4, 4), keep(0, 2);
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (keep(rng)) m.set(i, j, Rational(v(rng)));
    return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).num() == -1);
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational("6/8").str() == "3/4");
    CHECK(Rational("-5").str() == "-5");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational("x"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("rref examples") {
    auto id2 = SparseMatrix::identity(2);
    auto r1 = rref(id2);
    CHECK(r1.mat == id2);
    CHECK(r1.pivots == std::vector<int>{0, 1});

    auto r2 = rref(from_rows(2, 2, {{1, 2}, {2, 4}}));
    CHECK(r2.mat == from_rows(2, 2, {{1, 2}, {0, 0}}));
    CHECK(r2.pivots == std::vector<int>{0});

    auto r3 = rref(from_rows(2, 2, {{0, 1}, {1, 0}}));
    CHECK(r3.mat == id2);
    CHECK(r3.pivots == std::vector<int>{0, 1});
}

TEST_CASE("kernel examples") {
    CHECK(kernel(SparseMatrix::identity(2)).dim() == 0);
    CHECK(kernel(SparseMatrix(3, 3)).dim() == 3);

    auto k = kernel(from_rows(2, 2, {{1, 2}, {2, 4}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis.get(0, 0) == Rational(-2));
    CHECK(k.basis.get(1, 0) == Rational(1));
}

TEST_CASE("image examples") {
    CHECK(image(SparseMatrix::identity(3)).dim() == 3);
    CHECK(image(SparseMatrix(3, 3)).dim() == 0);

    auto im = image(from_rows(2, 1, {{1}, {2}}));
    REQUIRE(im.dim() == 1);
    CHECK(im.basis.get(0, 0) == Rational(1));
    CHECK(im.basis.get(1, 0) == Rational(2));
}

TEST_CASE("quotient complement") {
    SubspaceBasis full{2, SparseMatrix::identity(2)};
    CHECK(quotient_complement(full, full).dim == 0);

    SubspaceBasis zero{2, SparseMatrix(2, 0)};
    CHECK(quotient_complement(zero, full).dim == 2);

    SubspaceBasis line{2, from_rows(2, 1, {{1}, {2}})};
    auto q = quotient_complement(line, full);
    CHECK(q.dim == 1);
    REQUIRE(q.complement.dim() == 1);
    CHECK(q.complement.basis.get(0, 0) == Rational(1));
    CHECK(q.complement.basis.get(1, 0) == Rational(0));

    SubspaceBasis other{2, from_rows(2, 1, {{0}, {1}})};
    SubspaceBasis not_inside{2, from_rows(2, 1, {{1}, {0}})};
    CHECK_THROWS_WITH_AS(quotient_complement(not_inside, other), "not a subspace", Error);
}

TEST_CASE("solve examples") {
    std::vector<Rational> b{Rational(3), Rational(-1)};
    auto x = solve(SparseMatrix::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve(SparseMatrix(2, 2), b));

    auto y = solve(from_rows(1, 2, {{1, 2}}), {Rational(3)});
    REQUIRE(y);
    CHECK((*y)[0] == Rational(3));
    CHECK((*y)[1] == Rational(0));
}

TEST_CASE("rank-nullity, idempotence and exact solves on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        SparseMatrix m = random_matrix(rng, dim(rng), dim(rng));
        int r = rank(m);
        CHECK(r + kernel(m).dim() == m.cols());
        CHECK(image(m).dim() == r);

        auto rr = rref(m);
        auto rr2 = rref(rr.mat);
        CHECK(rr.mat == rr2.mat);
        CHECK(rr.pivots == rr2.pivots);

        // consistent system: b = m * x0 must be solved exactly
        std::uniform_int_distribution<int> v(-3, 3);
        std::vector<Rational> x0(m.cols());
        for (auto& c : x0) c = Rational(v(rng));
        std::vector<Rational> b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("intersection and sum of subspaces") {
    // span{(1,0,0),(0,1,0)} and span{(0,1,0),(0,0,1)} meet in span{(0,1,0)}
    SubspaceBasis a{3, from_rows(3, 2, {{1, 0}, {0, 1}, {0, 0}})};
    SubspaceBasis b{3, from_rows(3, 2, {{0, 0}, {1, 0}, {0, 1}})};
    auto meet = intersect(a, b);
    REQUIRE(meet.dim() == 1);
    CHECK(meet.basis.get(1, 0) != Rational(0));
    CHECK(meet.basis.get(0, 0) == Rational(0));
    CHECK(meet.basis.get(2, 0) == Rational(0));
    CHECK(span_sum(a, b).dim() == 3);
    CHECK(contains(a, meet.basis));
    CHECK(contains(b, meet.basis));
}
