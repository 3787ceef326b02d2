#include "sseq/homalg.hpp"

namespace sseq {

FilteredComplex::FilteredComplex(CochainComplex total, int a, std::vector<std::vector<Subspace>> steps)
    : total_(std::move(total)), a_(a), steps_(std::move(steps))
{
    if (steps_.empty())
        throw std::invalid_argument("filtration needs at least one step");
    const std::size_t len = total_.empty() ? 0 : static_cast<std::size_t>(total_.hi() - total_.lo() + 1);
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (steps_[k].size() != len)
            throw DimensionError("filtration step " + std::to_string(a_ + static_cast<int>(k)) +
                                 " does not cover every degree");
        for (std::size_t i = 0; i < len; ++i) {
            const int n = total_.lo() + static_cast<int>(i);
            const int p = a_ + static_cast<int>(k);
            const Subspace& s = steps_[k][i];
            if (s.ambient_dim() != total_.dim(n))
                throw DimensionError("F^" + std::to_string(p) + " in degree " + std::to_string(n) +
                                     " lives in the wrong space");
            if (k == 0 && !s.is_full())
                throw std::invalid_argument("F^" + std::to_string(p) + " must be the whole complex");
            if (k > 0 && !steps_[k - 1][i].contains(s))
                throw std::invalid_argument("filtration is not decreasing at F^" + std::to_string(p) +
                                            ", degree " + std::to_string(n));
            if (n < total_.hi() && !steps_[k][i + 1].contains(image(total_.d(n), s)))
                throw std::invalid_argument("F^" + std::to_string(p) + " is not a subcomplex (degree " +
                                            std::to_string(n) + ")");
        }
    }
}

Subspace FilteredComplex::step(int p, int n) const
{
    const std::size_t dn = total_.dim(n);
    if (n < total_.lo() || n > total_.hi() || p > type_hi())
        return Subspace::zero(dn);
    if (p <= a_)
        return Subspace::full(dn);
    return steps_[static_cast<std::size_t>(p - a_)][static_cast<std::size_t>(n - total_.lo())];
}

DegreeSubspaces FilteredComplex::step_fn(int p) const
{
    return [this, p](int n) { return step(p, n); };
}

FilteredComplex make_filtered(const CochainComplex& total, int a, int b,
                              const std::function<Subspace(int p, int n)>& step)
{
    if (b < a)
        b = a;
    std::vector<std::vector<Subspace>> steps;
    for (int p = a; p <= b; ++p) {
        std::vector<Subspace> row;
        if (!total.empty())
            for (int n = total.lo(); n <= total.hi(); ++n)
                row.push_back(step(p, n));
        steps.push_back(std::move(row));
    }
    return FilteredComplex(total, a, std::move(steps));
}

FilteredComplex translate_filtration(const FilteredComplex& fc, int l)
{
    return make_filtered(fc.total(), fc.type_lo() - l, fc.type_hi() - l,
                         [&](int p, int n) { return fc.step(p + l, n); });
}

FilteredComplex shift_filtered(const FilteredComplex& fc, int d)
{
    // same subspaces, reindexed: degree n of X[d] is degree n+d of X
    return make_filtered(shift(fc.total(), d), fc.type_lo() + d, fc.type_hi() + d,
                         [&](int p, int n) { return fc.step(p - d, n + d); });
}

FilteredComplex truncation_filtration(const CochainComplex& c, int k)
{
    if (c.empty())
        return make_filtered(c, 0, 0, [](int, int) { return Subspace(); });
    const int a = -c.hi() - k;
    const int b = -c.lo() - k;
    return make_filtered(c, a, b, [&](int p, int n) {
        const int t = -p - k;
        if (n < t)
            return Subspace::full(c.dim(n));
        if (n == t)
            return kernel(c.d(n));
        return Subspace::zero(c.dim(n));
    });
}

void require_filtered(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt)
{
    const int plo = std::min(src.type_lo(), tgt.type_lo());
    const int phi = std::max(src.type_hi(), tgt.type_hi()) + 1;
    const CochainComplex& c = f.source();
    if (c.empty())
        return;
    for (int p = plo; p <= phi; ++p)
        for (int n = c.lo(); n <= c.hi(); ++n)
            if (!tgt.step(p, n).contains(image(f.at(n), src.step(p, n))))
                throw std::invalid_argument("map is not filtered: F^" + std::to_string(p) + " in degree " +
                                            std::to_string(n) + " leaves the target step");
}

}  // namespace sseq
