#include "sseq/cellsheaf.hpp"

namespace sseq {

const CellSet& Flag::Y(int p) const
{
    if (p > 0)
        p = 0;
    if (p < -n - 1)
        p = -n - 1;
    return levels[static_cast<std::size_t>(-p)];
}

void Flag::validate(const FacePoset& y) const
{
    if (n < 0 || levels.size() != static_cast<std::size_t>(n + 2))
        throw std::invalid_argument("flag needs levels Y_0 .. Y_{-n-1}");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const CellSet& s = levels[k];
        if (s.size() != y.size())
            throw std::invalid_argument("flag level " + std::to_string(-static_cast<int>(k)) + " has the wrong size");
        if (!y.is_down_closed(s))
            throw std::invalid_argument("flag level " + std::to_string(-static_cast<int>(k)) + " is not closed");
        if (k > 0)
            for (CellId c = 0; c < y.size(); ++c)
                if (s[c] && !levels[k - 1][c])
                    throw std::invalid_argument("flag levels are not nested at " + std::to_string(-static_cast<int>(k)));
    }
    for (CellId c = 0; c < y.size(); ++c) {
        if (!levels.front()[c])
            throw std::invalid_argument("flag level 0 must be every cell");
        if (levels.back()[c])
            throw std::invalid_argument("flag level -n-1 must be empty");
    }
}

FilteredComplex flag_filtered_complex(const FlatComplex& fc, const Flag& flag)
{
    flag.validate(*fc.base);
    return make_filtered(fc.complex, -flag.n, 0, [&](int p, int n) {
        const CellSet& closed = flag.Y(p - 1);
        return fc.select(n, [&](const FlatBlock& b) { return !closed[b.coefficient()]; });
    });
}

FilteredComplex gamma_flag_filtered_complex(const InjectiveResolution& res, const Flag& flag)
{
    flag.validate(*res.sections.base);
    return make_filtered(res.sections.complex, 0, flag.n, [&](int p, int n) {
        const CellSet& z = flag.Y(-p);
        return res.sections.select(n, [&](const FlatBlock& b) { return static_cast<bool>(z[b.support()]); });
    });
}

FilteredComplex truncation_filtered_complex(const FlatComplex& fc, const SheafComplex& k, int tshift)
{
    const CochainComplex& c = fc.complex;
    if (k.empty() || c.empty())
        return make_filtered(c, 0, 0, [&](int, int n) { return Subspace::full(c.dim(n)); });
    std::map<std::pair<int, CellId>, Subspace> ker;
    auto kernel_at = [&](int t, CellId cell) -> const Subspace& {
        auto key = std::make_pair(t, cell);
        auto it = ker.find(key);
        if (it == ker.end())
            it = ker.emplace(key, kernel(k.d(t).stalk[cell])).first;
        return it->second;
    };
    return make_filtered(c, -k.hi() - tshift, -k.lo() - tshift, [&](int p, int n) {
        const int a = -p - tshift;
        const std::size_t dim = c.dim(n);
        auto it = fc.blocks.find(n);
        if (it == fc.blocks.end())
            return Subspace::zero(dim);
        RatMatrix gens(0, dim);
        for (const FlatBlock& b : it->second) {
            if (b.t < a) {
                for (std::size_t i = 0; i < b.size; ++i) {
                    RatMatrix row(1, dim);
                    row(0, b.offset + i) = 1;
                    gens = RatMatrix::vstack(gens, row);
                }
            } else if (b.t == a) {
                const Subspace& kv = kernel_at(b.t, b.coefficient());
                RatMatrix rows(kv.dim(), dim);
                rows.set_block(0, b.offset, kv.basis());
                gens = RatMatrix::vstack(gens, rows);
            }
        }
        return Subspace::span(dim, gens);
    });
}

}  // namespace sseq
