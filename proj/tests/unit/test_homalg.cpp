#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sseq/homalg.hpp"

using namespace sseq;

namespace {

// random complex in degrees lo..lo+len-1 with d^{n+1} d^n = 0 built from
// factorizations through a smaller space
CochainComplex random_complex(std::mt19937_64& rng, int lo, int len)
{
    std::vector<std::size_t> dims;
    for (int i = 0; i < len; ++i)
        dims.push_back(1 + rng() % 4);
    std::vector<LinearMap> diffs;
    for (int i = 0; i + 1 < len; ++i) {
        const std::size_t s = dims[i], t = dims[i + 1];
        RatMatrix m(t, s);
        if (i == 0 || rng() % 3 != 0) {
            // pick d^i killing the image of d^{i-1}
            RatMatrix raw = RatMatrix::from_rows(s, oracle::random_mat(rng, t, s));
            if (i > 0) {
                Subquotient q(Subspace::full(s), image(diffs.back()));
                raw = raw * q.section().matrix() * q.projection().matrix();
            }
            m = raw;
        }
        diffs.emplace_back(s, t, m);
    }
    return CochainComplex(lo, dims, diffs);
}

std::size_t naive_h(const CochainComplex& c, int n)
{
    auto r = [](const LinearMap& f) {
        if (f.source_dim() == 0 || f.target_dim() == 0)
            return std::size_t{0};
        oracle::Mat m(f.target_dim(), std::vector<oracle::Q>(f.source_dim()));
        for (std::size_t i = 0; i < f.target_dim(); ++i)
            for (std::size_t j = 0; j < f.source_dim(); ++j)
                m[i][j] = f.matrix()(i, j);
        return oracle::naive_rank(m, f.source_dim());
    };
    return c.dim(n) - r(c.d(n)) - r(c.d(n - 1));
}

}  // namespace

TEST_CASE("cohomology matches rank arithmetic")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        CochainComplex c = random_complex(rng, -1, 4);
        for (int n = -2; n <= 3; ++n)
            CHECK(cohomology(c, n).dim() == naive_h(c, n));
    }
}

TEST_CASE("d squared must vanish")
{
    LinearMap d0(RatMatrix::from_ints({{1}}));
    CHECK_THROWS_AS(CochainComplex(0, {1, 1, 1}, {d0, d0}), std::invalid_argument);
    CHECK_THROWS_AS(CochainComplex(0, {1, 2}, {d0}), DimensionError);
}

TEST_CASE("shift negates the differential in odd steps")
{
    LinearMap d0(RatMatrix::from_ints({{2}}));
    CochainComplex c(0, {1, 1}, {d0});
    CochainComplex s = shift(c, 1);
    CHECK(s.lo() == -1);
    CHECK(s.d(-1).matrix() == RatMatrix::from_ints({{-2}}));
    CHECK(shift(shift(c, 1), -1) == c);
}

TEST_CASE("cone sequence is exact in cohomology")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CochainComplex a = random_complex(rng, 0, 3);
        // a chain map a -> a: multiplication by a scalar
        Rational s = static_cast<long>(rng() % 3);
        std::map<int, LinearMap> comp;
        for (int n = a.lo(); n <= a.hi(); ++n)
            comp[n] = s * LinearMap::identity(a.dim(n));
        ChainMap f(a, a, comp);
        Cone k = cone(f);
        for (int n = -2; n <= 3; ++n) {
            LinearMap hf = cohomology_map(f, n);
            LinearMap hi = cohomology_map(k.inclusion, n);
            LinearMap hp = cohomology_map(k.projection, n);
            LinearMap hf1 = cohomology_map(f, n + 1);
            CHECK(exact_at(hf, hi));
            CHECK(exact_at(hi, hp));
            CHECK(exact_at(hp, hf1));
        }
    }
}

TEST_CASE("truncations keep cohomology on their side")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        CochainComplex c = random_complex(rng, -1, 4);
        for (int a = -2; a <= 3; ++a) {
            Subcomplex le = truncate_le(c, a);
            QuotientComplex ge = truncate_ge(c, a);
            for (int n = -2; n <= 3; ++n) {
                CHECK(cohomology(le.sub.complex, n).dim() == (n <= a ? naive_h(c, n) : 0));
                CHECK(cohomology(ge.quot.complex, n).dim() == (n >= a ? naive_h(c, n) : 0));
                if (n <= a)
                    CHECK(cohomology_map(le.inclusion, n).is_iso());
                if (n >= a)
                    CHECK(cohomology_map(ge.projection, n).is_iso());
            }
        }
    }
}

TEST_CASE("filtered complexes validate their steps")
{
    LinearMap d0(RatMatrix::from_ints({{1}}));
    CochainComplex c(0, {1, 1}, {d0});
    // F^1 = degree 0 only is not d-stable
    CHECK_THROWS(make_filtered(c, 0, 1, [&](int p, int n) {
        if (p <= 0)
            return Subspace::full(1);
        return n == 0 ? Subspace::full(1) : Subspace::zero(1);
    }));
    FilteredComplex ok = make_filtered(c, 0, 1, [&](int p, int n) {
        if (p <= 0)
            return Subspace::full(1);
        return n == 1 ? Subspace::full(1) : Subspace::zero(1);
    });
    CHECK(ok.type_lo() == 0);
    CHECK(ok.type_hi() == 1);
    CHECK(ok.step(2, 1).is_zero());
    CHECK(ok.step(-5, 0).is_full());
    FilteredComplex t = translate_filtration(ok, 2);
    CHECK(t.type_lo() == -2);
    CHECK(t.step(-1, 1) == ok.step(1, 1));
}

TEST_CASE("truncation filtration has the expected type")
{
    LinearMap d0(RatMatrix::from_ints({{1}, {0}}));
    CochainComplex c(-1, {1, 2}, {d0});
    FilteredComplex f = truncation_filtration(c, 0);
    CHECK(f.type_lo() == 0);
    CHECK(f.type_hi() == 1);
    FilteredComplex g = truncation_filtration(c, 1);
    CHECK(g.type_lo() == -1);
    CHECK(g.step(0, -1) == f.step(1, -1));
}

TEST_CASE("Zassenhaus worked example")
{
    BifilteredSpace v;
    v.dim = 3;
    v.f_start = 0;
    v.f = {Subspace::full(3), Subspace::span(3, RatMatrix::from_ints({{1, 0, 0}, {0, 1, 0}}))};
    v.g_start = 0;
    v.g = {Subspace::full(3), Subspace::span(3, RatMatrix::from_ints({{0, 1, 0}, {0, 0, 1}}))};
    std::map<std::pair<int, int>, std::size_t> dims;
    for (const auto& piece : zassenhaus(v)) {
        CHECK(check_zassenhaus(v, piece));
        dims[{piece.a, piece.c}] = piece.fg.dim();
    }
    CHECK(dims[{0, 0}] == 0);
    CHECK(dims[{0, 1}] == 1);
    CHECK(dims[{1, 0}] == 1);
    CHECK(dims[{1, 1}] == 1);
}

TEST_CASE("Zassenhaus pieces add up to the whole space")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        BifilteredSpace v;
        v.dim = 1 + rng() % 5;
        auto chain = [&](std::vector<Subspace>& steps) {
            Subspace cur = Subspace::full(v.dim);
            steps.push_back(cur);
            for (int k = 0; k < 3; ++k) {
                // random subspace of cur
                auto coeffs = RatMatrix::from_rows(cur.dim(), oracle::random_mat(rng, rng() % (cur.dim() + 1), cur.dim()));
                cur = Subspace::span(v.dim, coeffs.rows() ? coeffs * cur.basis() : RatMatrix(0, v.dim));
                steps.push_back(cur);
            }
        };
        chain(v.f);
        chain(v.g);
        std::size_t total = 0;
        for (const auto& piece : zassenhaus(v)) {
            CHECK(check_zassenhaus(v, piece));
            total += piece.fg.dim();
        }
        CHECK(total == v.dim);
    }
}
