#include "sseq/qlinalg.hpp"

#include <cstddef>

namespace sseq {

namespace {

using IntRow = std::vector<mpz_class>;

// below this many entry updates per pivot the parallel region costs more than it saves
constexpr std::size_t kParallelWork = 4096;

IntRow clear_denominators(std::span<const Rational> r)
{
    mpz_class l = 1;
    for (const auto& x : r)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntRow out(r.size());
    for (std::size_t j = 0; j < r.size(); ++j)
        if (sgn(r[j]) != 0)
            out[j] = r[j].get_num() * (l / r[j].get_den());
    return out;
}

void make_primitive(IntRow& row)
{
    mpz_class g = 0;
    for (const auto& x : row) {
        if (sgn(x) == 0)
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g <= 1)
        return;
    for (auto& x : row)
        if (sgn(x) != 0)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot_row, where pivot_row vanishes left of column c
void eliminate(IntRow& row, const IntRow& prow, std::size_t c)
{
    mpz_class a = prow[c];
    mpz_class b = row[c];
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    const std::size_t n = row.size();
    if (a != 1)
        for (std::size_t j = 0; j < c; ++j)
            if (sgn(row[j]) != 0)
                row[j] *= a;
    for (std::size_t j = c; j < n; ++j) {
        if (a != 1 && sgn(row[j]) != 0)
            row[j] *= a;
        if (sgn(prow[j]) != 0)
            row[j] -= b * prow[j];
    }
    make_primitive(row);
}

template <bool Parallel>
Echelon echelon_impl(const RatMatrix& m)
{
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<IntRow> rows(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        rows[i] = clear_denominators(m.row(i));
        make_primitive(rows[i]);
    }

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        // smallest nonzero entry keeps coefficient growth down
        std::size_t best = nr;
        for (std::size_t i = rank; i < nr; ++i)
            if (sgn(rows[i][c]) != 0 && (best == nr || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0))
                best = i;
        if (best == nr)
            continue;
        std::swap(rows[rank], rows[best]);
        const IntRow& prow = rows[rank];
        const std::size_t pr = rank;

        if constexpr (Parallel) {
            const bool wide = nr * (nc - c) > kParallelWork;
            const auto n = static_cast<std::ptrdiff_t>(nr);
#pragma omp parallel for schedule(dynamic, 1) if (wide)
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                auto k = static_cast<std::size_t>(i);
                if (k != pr && sgn(rows[k][c]) != 0)
                    eliminate(rows[k], prow, c);
            }
        } else {
            for (std::size_t k = 0; k < nr; ++k)
                if (k != pr && sgn(rows[k][c]) != 0)
                    eliminate(rows[k], prow, c);
        }
        pivots.push_back(c);
        ++rank;
    }

    Echelon e{RatMatrix(rank, nc), pivots};
    for (std::size_t k = 0; k < rank; ++k) {
        const mpz_class& p = rows[k][pivots[k]];
        for (std::size_t j = 0; j < nc; ++j) {
            if (sgn(rows[k][j]) == 0)
                continue;
            Rational q(rows[k][j], p);
            q.canonicalize();
            e.basis(k, j) = q;
        }
    }
    return e;
}

}  // namespace

Echelon echelon(const RatMatrix& m)
{
    return echelon_impl<true>(m);
}

Echelon echelon_serial(const RatMatrix& m)
{
    return echelon_impl<false>(m);
}

RatMatrix rref(const RatMatrix& m)
{
    Echelon e = echelon(m);
    RatMatrix out(m.rows(), m.cols());
    out.set_block(0, 0, e.basis);
    return out;
}

std::size_t rank(const RatMatrix& m)
{
    return echelon(m).pivots.size();
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("solve: row counts differ");
    const std::size_t n = a.cols();
    Echelon e = echelon(RatMatrix::hstack(a, b));
    RatMatrix x(n, b.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[k], j) = e.basis(k, n + j);
    }
    return x;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("inverse of a non-square matrix");
    auto x = solve(m, RatMatrix::identity(m.rows()));
    if (!x || rank(m) != m.rows())
        throw std::domain_error("matrix is singular");
    return *x;
}

}  // namespace sseq
