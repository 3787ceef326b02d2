#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sseq/qlinalg.hpp"

using namespace sseq;

namespace {

RatMatrix to_mat(const oracle::Mat& m, std::size_t cols)
{
    return RatMatrix::from_rows(cols, m);
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("rref of a rank one matrix")
{
    auto m = RatMatrix::from_ints({{1, 2, 3}, {2, 4, 6}});
    CHECK(rref(m) == RatMatrix::from_ints({{1, 2, 3}, {0, 0, 0}}));
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel and image of a rank one map")
{
    LinearMap f(RatMatrix::from_ints({{1, 2, 3}}));
    Subspace k = kernel(f);
    CHECK(k.dim() == 2);
    CHECK(k == Subspace::span(3, RatMatrix::from_ints({{-2, 1, 0}, {-3, 0, 1}})));
    CHECK(image(f) == Subspace::full(1));
}

TEST_CASE("lattice of two planes in Q^3")
{
    auto a = Subspace::span(3, RatMatrix::from_ints({{1, 0, 0}, {0, 1, 0}}));
    auto b = Subspace::span(3, RatMatrix::from_ints({{0, 1, 0}, {0, 0, 1}}));
    Lattice l = lattice(a, b);
    CHECK(l.sum == Subspace::full(3));
    CHECK(l.intersection == Subspace::span(3, RatMatrix::from_ints({{0, 1, 0}})));
}

TEST_CASE("quotient coordinates split the projection")
{
    auto v = Subspace::full(3);
    auto u = Subspace::span(3, RatMatrix::from_ints({{1, 1, 0}}));
    Quotient q = quotient(v, u);
    CHECK(q.dim == 2);
    CHECK(compose(q.projection, q.section) == LinearMap::identity(2));
    CHECK(q.projection.apply_rows(u.basis()).is_zero());
}

TEST_CASE("preimage of the zero subspace is the kernel")
{
    LinearMap f(RatMatrix::from_ints({{1, 2, 3}, {0, 1, 1}}));
    CHECK(preimage(f, Subspace::zero(2)) == kernel(f));
    CHECK(preimage(f, Subspace::full(2)) == Subspace::full(3));
}

TEST_CASE("dimension errors")
{
    LinearMap f(RatMatrix::from_ints({{1, 2}}));
    CHECK_THROWS_AS(preimage(f, Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(compose(f, f), DimensionError);
    CHECK_THROWS_AS(lattice(Subspace::zero(2), Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(Subquotient(Subspace::zero(2), Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("zero-dimensional edge cases")
{
    LinearMap z = LinearMap::zero(0, 3);
    CHECK(image(z).dim() == 0);
    CHECK(kernel(LinearMap::zero(3, 0)) == Subspace::full(3));
    Subquotient s(Subspace::zero(0), Subspace::zero(0));
    CHECK(s.dim() == 0);
    CHECK(rank(RatMatrix(0, 0)) == 0);
}

TEST_CASE("elimination agrees with the naive reference on random matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        auto m = oracle::random_mat(rng, r, c, -4, 4, 0.5);
        if (trial % 3 == 0)
            m[r - 1][0] = Rational(1, 1 + static_cast<long>(rng() % 5));
        RatMatrix rm = to_mat(m, c);
        RatMatrix expect = to_mat(oracle::naive_rref(m, c), c);
        CHECK(rref(rm) == expect);
        Echelon par = echelon(rm), ser = echelon_serial(rm);
        CHECK(par.basis == ser.basis);
        CHECK(par.pivots == ser.pivots);
    }
}

TEST_CASE("wide matrices take the parallel path and still match the serial reference")
{
    std::mt19937_64 rng(5);
    auto m = oracle::random_mat(rng, 60, 120, -9, 9, 0.3);
    RatMatrix rm = to_mat(m, 120);
    Echelon par = echelon(rm), ser = echelon_serial(rm);
    CHECK(par.basis == ser.basis);
    CHECK(par.pivots.size() == oracle::naive_rank(m, 120));
}

TEST_CASE("lattice dimensions satisfy Grassmann's formula against the oracle")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 7;
        auto ga = oracle::random_mat(rng, rng() % (n + 1), n);
        auto gb = oracle::random_mat(rng, rng() % (n + 1), n);
        Subspace a = Subspace::span(n, to_mat(ga, n));
        Subspace b = Subspace::span(n, to_mat(gb, n));
        Lattice l = lattice(a, b);
        std::size_t sum_dim = oracle::span_dim({ga, gb}, n);
        CHECK(l.sum.dim() == sum_dim);
        CHECK(l.intersection.dim() + sum_dim == a.dim() + b.dim());
        CHECK(a.contains(l.intersection));
        CHECK(b.contains(l.intersection));
        CHECK(l.sum.contains(a));
    }
}

TEST_CASE("preimage is characterised by membership")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
        auto fm = oracle::random_mat(rng, m, n);
        LinearMap f(to_mat(fm, n));
        Subspace u = Subspace::span(m, to_mat(oracle::random_mat(rng, rng() % (m + 1), m), m));
        Subspace pre = preimage(f, u);
        CHECK(u.contains(image(f, pre)));
        // dimension: dim ker f + dim(u cap im f)
        CHECK(pre.dim() == kernel(f).dim() + intersection(u, image(f)).dim());
    }
}

TEST_CASE("solve and inverse")
{
    auto a = RatMatrix::from_ints({{2, 1}, {1, 1}});
    CHECK(a * inverse(a) == RatMatrix::identity(2));
    auto x = solve(RatMatrix::from_ints({{1, 1}, {1, 1}}), RatMatrix::from_ints({{1}, {2}}));
    CHECK_FALSE(x.has_value());
    CHECK_THROWS(inverse(RatMatrix::from_ints({{1, 2}, {2, 4}})));
}
