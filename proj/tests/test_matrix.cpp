#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsq/matrix.hpp"
#include "fsq/sampler.hpp"

using namespace fsq;

namespace {

RationalMatrix m22(long a, long b, long c, long d) {
    return RationalMatrix::from_longs(2, 2, {a, b, c, d});
}

std::vector<Scalar> mat_vec(const RationalMatrix& m, const std::vector<Scalar>& x) {
    std::vector<Scalar> out(m.rows(), Scalar(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * x[c];
    return out;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix::identity(2)) == 2);
    CHECK(rank(RationalMatrix(0, 5)) == 0);
    CHECK(rank(m22(1, 2, 2, 4)) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
    CHECK(kernel_basis(RationalMatrix(2, 3)).size() == 3);

    auto basis = kernel_basis(m22(1, 2, 2, 4));
    REQUIRE(basis.size() == 1);
    // proportional to (2,-1)
    CHECK(basis[0][0] * Scalar(-1) == basis[0][1] * Scalar(2));
}

TEST_CASE("solve basics") {
    auto x = solve(RationalMatrix::identity(2), {Scalar(3), Scalar(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 5);

    CHECK(!solve(m22(1, 2, 2, 4), {Scalar(1), Scalar(3)}).has_value());

    auto zero = solve(RationalMatrix(2, 2), {Scalar(0), Scalar(0)});
    REQUIRE(zero.has_value());
    CHECK((*zero)[0] == 0);
}

TEST_CASE("subspace basics") {
    std::vector<Scalar> e1{Scalar(1), Scalar(0)};
    std::vector<Scalar> e2{Scalar(0), Scalar(1)};
    CHECK(intersect_subspaces({e1}, {e2}, 2).empty());
    CHECK(sum_subspaces({e1}, {e2}, 2).size() == 2);

    std::vector<Scalar> v{Scalar(1), Scalar(1)};
    std::vector<Scalar> w{Scalar(2), Scalar(2)};
    CHECK(intersect_subspaces({v}, {w}, 2).size() == 1);
}

TEST_CASE("rank-nullity and transpose invariance on random matrices") {
    SeededSampler sampler(1);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = static_cast<std::size_t>(sampler.next_int(0, 8));
        std::size_t cols = static_cast<std::size_t>(sampler.next_int(0, 8));
        RationalMatrix m = sampler.next_matrix(rows, cols);
        std::size_t r = rank(m);
        CHECK(r + kernel_basis(m).size() == cols);
        CHECK(rank(m.transpose()) == r);
    }
}

TEST_CASE("solve returns exact solutions on random systems") {
    SeededSampler sampler(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = static_cast<std::size_t>(sampler.next_int(1, 6));
        std::size_t cols = static_cast<std::size_t>(sampler.next_int(1, 6));
        RationalMatrix m = sampler.next_matrix(rows, cols);
        std::vector<Scalar> b(rows);
        for (auto& v : b) v = sampler.next_scalar();
        auto x = solve(m, b);
        if (!x.has_value()) continue;
        auto mx = mat_vec(m, *x);
        for (std::size_t r = 0; r < rows; ++r) CHECK(mx[r] == b[r]);
    }
}

TEST_CASE("kernel vectors are exact null vectors") {
    SeededSampler sampler(3);
    for (int trial = 0; trial < 30; ++trial) {
        RationalMatrix m = sampler.next_matrix(4, 6);
        for (const auto& v : kernel_basis(m)) {
            auto mv = mat_vec(m, v);
            for (const auto& entry : mv) CHECK(entry == 0);
        }
    }
}

TEST_CASE("inverse") {
    SeededSampler sampler(4);
    RationalMatrix g = sampler.next_invertible_matrix(3);
    auto inv = inverse(g);
    REQUIRE(inv.has_value());
    CHECK(g * *inv == RationalMatrix::identity(3));
    CHECK(!inverse(m22(1, 2, 2, 4)).has_value());
}
