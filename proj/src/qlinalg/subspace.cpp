#include "sseq/qlinalg.hpp"

namespace sseq {

Subspace Subspace::zero(std::size_t n)
{
    Subspace s;
    s.n_ = n;
    s.basis_ = RatMatrix(0, n);
    return s;
}

Subspace Subspace::full(std::size_t n)
{
    Subspace s;
    s.n_ = n;
    s.basis_ = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(std::size_t n, const RatMatrix& generators)
{
    if (generators.rows() == 0)
        return zero(n);
    if (generators.cols() != n)
        throw DimensionError("span: generators of length " + std::to_string(generators.cols()) + " in Q^" +
                             std::to_string(n));
    Echelon e = echelon(generators);
    Subspace s;
    s.n_ = n;
    s.basis_ = std::move(e.basis);
    s.pivots_ = std::move(e.pivots);
    return s;
}

RatMatrix Subspace::reduce(const RatMatrix& rows) const
{
    if (rows.rows() == 0)
        return RatMatrix(0, n_);
    if (rows.cols() != n_)
        throw DimensionError("reduce: vectors of length " + std::to_string(rows.cols()) + " in Q^" +
                             std::to_string(n_));
    RatMatrix r = rows;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t k = 0; k < basis_.rows(); ++k) {
            Rational f = r(i, pivots_[k]);
            if (sgn(f) == 0)
                continue;
            for (std::size_t j = pivots_[k]; j < n_; ++j)
                if (sgn(basis_(k, j)) != 0)
                    r(i, j) -= f * basis_(k, j);
        }
    return r;
}

bool Subspace::contains(std::span<const Rational> v) const
{
    RatMatrix m(0, n_);
    m.append_row(v);
    return reduce(m).is_zero();
}

bool Subspace::contains(const Subspace& u) const
{
    if (u.n_ != n_)
        throw DimensionError("contains: ambient dimensions differ");
    return reduce(u.basis_).is_zero();
}

Subspace kernel(const LinearMap& f)
{
    const std::size_t n = f.source_dim();
    Echelon e = echelon(f.matrix());
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    RatMatrix gens(0, n);
    std::vector<Rational> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        std::fill(v.begin(), v.end(), Rational(0));
        v[j] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            v[e.pivots[k]] = -e.basis(k, j);
        gens.append_row(v);
    }
    return Subspace::span(n, gens);
}

Subspace image(const LinearMap& f)
{
    return Subspace::span(f.target_dim(), f.matrix().transpose());
}

Subspace image(const LinearMap& f, const Subspace& u)
{
    if (u.ambient_dim() != f.source_dim())
        throw DimensionError("image: subspace not in the source");
    return Subspace::span(f.target_dim(), f.apply_rows(u.basis()));
}

Lattice lattice(const Subspace& a, const Subspace& b)
{
    const std::size_t n = a.ambient_dim();
    if (b.ambient_dim() != n)
        throw DimensionError("lattice: ambient dimensions differ");
    // Zassenhaus: rows [a | a] and [b | 0]
    RatMatrix m(a.dim() + b.dim(), 2 * n);
    m.set_block(0, 0, a.basis());
    m.set_block(0, n, a.basis());
    m.set_block(a.dim(), 0, b.basis());
    Echelon e = echelon(m);
    RatMatrix s(0, n), i(0, n);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] < n)
            s.append_row(e.basis.row(k).subspan(0, n));
        else
            i.append_row(e.basis.row(k).subspan(n, n));
    }
    return {Subspace::span(n, s), Subspace::span(n, i)};
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("sum: ambient dimensions differ");
    return Subspace::span(a.ambient_dim(), RatMatrix::vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b)
{
    if (a.is_full())
        return b;
    if (b.is_full())
        return a;
    return lattice(a, b).intersection;
}

Subspace preimage(const LinearMap& f, const Subspace& u)
{
    if (u.ambient_dim() != f.target_dim())
        throw DimensionError("preimage: subspace not in the target");
    if (u.is_full())
        return Subspace::full(f.source_dim());
    Subquotient q(Subspace::full(f.target_dim()), u);
    return kernel(compose(q.projection(), f));
}

Subquotient::Subquotient(Subspace numerator, Subspace denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.ambient_dim() != den_.ambient_dim())
        throw DimensionError("subquotient: ambient dimensions differ");
    if (!num_.contains(den_))
        throw std::invalid_argument("subquotient: denominator is not contained in numerator");
    Echelon e = echelon(den_.reduce(num_.basis()));
    complement_ = std::move(e.basis);
    if (complement_.rows() == 0)
        complement_ = RatMatrix(0, num_.ambient_dim());
    cpivots_ = std::move(e.pivots);
}

RatMatrix Subquotient::coordinates(const RatMatrix& rows) const
{
    RatMatrix r = den_.reduce(rows);
    return r.select_cols(cpivots_);
}

RatMatrix Subquotient::lift(const RatMatrix& coords) const
{
    if (coords.rows() == 0)
        return RatMatrix(0, ambient_dim());
    return coords * complement_;
}

LinearMap Subquotient::projection() const
{
    const std::size_t n = ambient_dim();
    return LinearMap(n, dim(), coordinates(RatMatrix::identity(n)).transpose());
}

LinearMap Subquotient::section() const
{
    return LinearMap(dim(), ambient_dim(), complement_.transpose());
}

Quotient quotient(const Subspace& v, const Subspace& u)
{
    Subquotient q(v, u);
    return {q.dim(), q.projection(), q.section()};
}

}  // namespace sseq
