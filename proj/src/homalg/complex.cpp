#include "sseq/homalg.hpp"

#include <algorithm>

namespace sseq {

CochainComplex::CochainComplex(int lo, std::vector<std::size_t> dims, std::vector<LinearMap> diffs)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs))
{
    if (dims_.empty()) {
        if (!diffs_.empty())
            throw DimensionError("complex without terms has differentials");
        return;
    }
    if (diffs_.size() + 1 != dims_.size())
        throw DimensionError("complex needs one differential between consecutive terms");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].source_dim() != dims_[i] || diffs_[i].target_dim() != dims_[i + 1])
            throw DimensionError("differential in degree " + std::to_string(lo_ + static_cast<int>(i)) +
                                 " has the wrong shape");
        if (i > 0 && !compose(diffs_[i], diffs_[i - 1]).is_zero())
            throw std::invalid_argument("d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(i) - 1));
    }
}

std::size_t CochainComplex::total_dim() const
{
    std::size_t s = 0;
    for (auto x : dims_)
        s += x;
    return s;
}

std::size_t CochainComplex::dim(int n) const
{
    if (n < lo_ || n > hi())
        return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
}

LinearMap CochainComplex::d(int n) const
{
    if (n < lo_ || n >= hi())
        return LinearMap::zero(dim(n), dim(n + 1));
    return diffs_[static_cast<std::size_t>(n - lo_)];
}

ChainMap::ChainMap(CochainComplex source, CochainComplex target, std::map<int, LinearMap> components)
    : src_(std::move(source)), tgt_(std::move(target)), comp_(std::move(components))
{
    for (const auto& [n, f] : comp_)
        if (f.source_dim() != src_.dim(n) || f.target_dim() != tgt_.dim(n))
            throw DimensionError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
    const int lo = std::min(src_.lo(), tgt_.lo()) - 1;
    const int hi = std::max(src_.hi(), tgt_.hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (compose(tgt_.d(n), at(n)) != compose(at(n + 1), src_.d(n)))
            throw std::invalid_argument("chain map does not commute with d in degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const CochainComplex& c)
{
    std::map<int, LinearMap> comp;
    for (int n = c.lo(); n <= c.hi(); ++n)
        comp[n] = LinearMap::identity(c.dim(n));
    return ChainMap(c, c, std::move(comp));
}

ChainMap ChainMap::zero(const CochainComplex& source, const CochainComplex& target)
{
    return ChainMap(source, target, {});
}

LinearMap ChainMap::at(int n) const
{
    auto it = comp_.find(n);
    if (it != comp_.end())
        return it->second;
    return LinearMap::zero(src_.dim(n), tgt_.dim(n));
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(g.source() == f.target()))
        throw DimensionError("compose: chain maps are not composable");
    std::map<int, LinearMap> comp;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n)
        comp[n] = compose(g.at(n), f.at(n));
    return ChainMap(f.source(), g.target(), std::move(comp));
}

Cohomology cohomology(const CochainComplex& c, int n)
{
    Subspace z = kernel(c.d(n));
    Subspace b = image(c.d(n - 1));
    Subquotient q(z, b);
    return {std::move(z), std::move(b), std::move(q)};
}

std::map<int, std::size_t> betti_numbers(const CochainComplex& c)
{
    std::map<int, std::size_t> out;
    for (int n = c.lo(); n <= c.hi(); ++n)
        out[n] = cohomology(c, n).dim();
    return out;
}

LinearMap cohomology_map(const ChainMap& f, int n)
{
    Cohomology hs = cohomology(f.source(), n);
    Cohomology ht = cohomology(f.target(), n);
    RatMatrix reps = hs.classes.complement();
    RatMatrix imgs = f.at(n).apply_rows(reps);
    return LinearMap(hs.dim(), ht.dim(), ht.classes.coordinates(imgs).transpose());
}

CochainComplex shift(const CochainComplex& c, int d)
{
    if (c.empty())
        return c;
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    const Rational sign = (d % 2 == 0) ? 1 : -1;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        dims.push_back(c.dim(n));
        if (n < c.hi())
            diffs.push_back(sign * c.d(n));
    }
    return CochainComplex(c.lo() - d, std::move(dims), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int d)
{
    std::map<int, LinearMap> comp;
    for (int n = f.source().lo(); n <= f.source().hi(); ++n)
        comp[n - d] = f.at(n);
    return ChainMap(shift(f.source(), d), shift(f.target(), d), std::move(comp));
}

Cone cone(const ChainMap& f)
{
    const CochainComplex& a = f.source();
    const CochainComplex& b = f.target();
    const int lo = std::min(a.empty() ? b.lo() : a.lo() - 1, b.empty() ? a.lo() - 1 : b.lo());
    const int hi = std::max(a.empty() ? b.hi() : a.hi() - 1, b.empty() ? a.hi() - 1 : b.hi());
    if (a.empty() && b.empty())
        return {CochainComplex(), ChainMap(), ChainMap()};
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(a.dim(n + 1) + b.dim(n));
    for (int n = lo; n < hi; ++n) {
        // (x, y) -> (-dx, f x + dy)
        const std::size_t an = a.dim(n + 1), bn = b.dim(n), an1 = a.dim(n + 2), bn1 = b.dim(n + 1);
        RatMatrix m(an1 + bn1, an + bn);
        m.set_block(0, 0, -a.d(n + 1).matrix());
        m.set_block(an1, 0, f.at(n + 1).matrix());
        m.set_block(an1, an, b.d(n).matrix());
        diffs.emplace_back(an + bn, an1 + bn1, std::move(m));
    }
    CochainComplex c(lo, std::move(dims), std::move(diffs));
    std::map<int, LinearMap> inc, proj;
    for (int n = lo; n <= hi; ++n) {
        const std::size_t an = a.dim(n + 1), bn = b.dim(n);
        RatMatrix i(an + bn, bn);
        i.set_block(an, 0, RatMatrix::identity(bn));
        inc[n] = LinearMap(bn, an + bn, std::move(i));
        RatMatrix p(an, an + bn);
        p.set_block(0, 0, RatMatrix::identity(an));
        proj[n] = LinearMap(an + bn, an, std::move(p));
    }
    CochainComplex a1 = shift(a, 1);
    return {c, ChainMap(b, c, std::move(inc)), ChainMap(c, a1, std::move(proj))};
}

LinearMap SubquotientComplex::projection(int n) const
{
    auto it = pieces.find(n);
    if (it == pieces.end())
        return LinearMap::zero(0, 0);
    return it->second.projection();
}

LinearMap SubquotientComplex::section(int n) const
{
    auto it = pieces.find(n);
    if (it == pieces.end())
        return LinearMap::zero(0, 0);
    return it->second.section();
}

SubquotientComplex subquotient_complex(const CochainComplex& c, const DegreeSubspaces& num,
                                       const DegreeSubspaces& den)
{
    SubquotientComplex out;
    if (c.empty())
        return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        Subspace nn = num(n), dd = den(n);
        if (nn.ambient_dim() != c.dim(n) || dd.ambient_dim() != c.dim(n))
            throw DimensionError("subquotient complex: subspace in degree " + std::to_string(n) +
                                 " lives in the wrong space");
        out.pieces.emplace(n, Subquotient(std::move(nn), std::move(dd)));
    }
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const Subquotient& q = out.pieces.at(n);
        dims.push_back(q.dim());
        if (n == c.hi())
            break;
        const Subquotient& q1 = out.pieces.at(n + 1);
        LinearMap dn = c.d(n);
        if (!q1.numerator().contains(image(dn, q.numerator())) ||
            !q1.denominator().contains(image(dn, q.denominator())))
            throw std::invalid_argument("subquotient complex: subspaces are not stable under d in degree " +
                                        std::to_string(n));
        RatMatrix img = dn.apply_rows(q.complement());
        diffs.emplace_back(q.dim(), q1.dim(), q1.coordinates(img).transpose());
    }
    out.complex = CochainComplex(c.lo(), std::move(dims), std::move(diffs));
    return out;
}

Subcomplex subcomplex(const CochainComplex& c, const DegreeSubspaces& s)
{
    SubquotientComplex sq = subquotient_complex(c, s, [&](int n) { return Subspace::zero(c.dim(n)); });
    std::map<int, LinearMap> comp;
    for (int n = c.lo(); n <= c.hi(); ++n)
        comp[n] = sq.section(n);
    ChainMap inc(sq.complex, c, std::move(comp));
    return {std::move(sq), std::move(inc)};
}

QuotientComplex quotient_complex(const CochainComplex& c, const DegreeSubspaces& s)
{
    SubquotientComplex sq = subquotient_complex(c, [&](int n) { return Subspace::full(c.dim(n)); }, s);
    std::map<int, LinearMap> comp;
    for (int n = c.lo(); n <= c.hi(); ++n)
        comp[n] = sq.projection(n);
    ChainMap proj(c, sq.complex, std::move(comp));
    return {std::move(sq), std::move(proj)};
}

Subcomplex truncate_le(const CochainComplex& c, int a)
{
    return subcomplex(c, [&](int n) {
        if (n < a)
            return Subspace::full(c.dim(n));
        if (n == a)
            return kernel(c.d(n));
        return Subspace::zero(c.dim(n));
    });
}

QuotientComplex truncate_ge(const CochainComplex& c, int b)
{
    return quotient_complex(c, [&](int n) {
        if (n < b)
            return Subspace::full(c.dim(n));
        if (n == b)
            return image(c.d(n - 1));
        return Subspace::zero(c.dim(n));
    });
}

bool exact_at(const LinearMap& in, const LinearMap& out)
{
    if (in.target_dim() != out.source_dim())
        throw DimensionError("exact_at: maps are not composable");
    return image(in) == kernel(out);
}

}  // namespace sseq
