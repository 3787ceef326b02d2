#include "sseq/cellsheaf.hpp"

#include <algorithm>

namespace sseq {

namespace {

using BlockKey = std::pair<int, std::vector<CellId>>;

struct Layout {
    std::map<int, std::vector<FlatBlock>> blocks;
    std::map<BlockKey, std::pair<int, std::size_t>> where;  // key -> (degree, index)
    std::map<int, std::size_t> dims;
};

Layout layout(const SheafComplex& k, CochainModel model)
{
    Layout out;
    if (k.empty())
        return out;
    const FacePoset& y = *k.base();
    std::vector<std::vector<CellId>> chains;
    if (model == CochainModel::cellular) {
        for (CellId c = 0; c < y.size(); ++c)
            chains.push_back({c});
    } else {
        for (std::size_t len = 1;; ++len) {
            auto cs = y.chains(len);
            if (cs.empty())
                break;
            chains.insert(chains.end(), cs.begin(), cs.end());
        }
    }
    for (int t = k.lo(); t <= k.hi(); ++t)
        for (const auto& ch : chains) {
            const int k_deg = model == CochainModel::cellular ? y.dim(ch.front()) : static_cast<int>(ch.size()) - 1;
            const std::size_t sz = k.term(t).stalk(ch.back());
            if (sz == 0)
                continue;
            const int n = t + k_deg;
            auto& v = out.blocks[n];
            FlatBlock b{t, ch, out.dims[n], sz};
            out.dims[n] += sz;
            out.where[{t, ch}] = {n, v.size()};
            v.push_back(std::move(b));
        }
    return out;
}

void add_block(RatMatrix& m, std::size_t row, std::size_t col, const LinearMap& f, int sign)
{
    for (std::size_t i = 0; i < f.target_dim(); ++i)
        for (std::size_t j = 0; j < f.source_dim(); ++j)
            m(row + i, col + j) += sign * f.matrix()(i, j);
}

}  // namespace

CochainModel resolve_model(const FacePoset& y, CochainModel m)
{
    if (m != CochainModel::automatic)
        return m;
    return y.is_closed_complex() ? CochainModel::cellular : CochainModel::resolution;
}

Subspace FlatComplex::select(int n, const std::function<bool(const FlatBlock&)>& keep) const
{
    const std::size_t dim = complex.dim(n);
    auto it = blocks.find(n);
    if (it == blocks.end())
        return Subspace::zero(dim);
    std::size_t count = 0;
    for (const auto& b : it->second)
        if (keep(b))
            count += b.size;
    RatMatrix gens(count, dim);
    std::size_t row = 0;
    for (const auto& b : it->second)
        if (keep(b))
            for (std::size_t i = 0; i < b.size; ++i)
                gens(row++, b.offset + i) = 1;
    return Subspace::span(dim, gens);
}

DegreeSubspaces FlatComplex::select_fn(std::function<bool(const FlatBlock&)> keep) const
{
    return [self = *this, keep = std::move(keep)](int n) { return self.select(n, keep); };
}

FlatComplex flatten(const SheafComplex& k, CochainModel model)
{
    FlatComplex out;
    out.base = k.base();
    out.model = resolve_model(*k.base(), model);
    Layout lay = layout(k, out.model);
    out.blocks = lay.blocks;
    if (lay.dims.empty()) {
        out.complex = CochainComplex();
        return out;
    }
    const FacePoset& y = *k.base();
    const int lo = lay.dims.begin()->first, hi = lay.dims.rbegin()->first;
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(lay.dims.count(n) ? lay.dims.at(n) : 0);
    std::vector<RatMatrix> mats;
    for (int n = lo; n < hi; ++n)
        mats.emplace_back(dims[static_cast<std::size_t>(n + 1 - lo)], dims[static_cast<std::size_t>(n - lo)]);

    auto target = [&](int t, const std::vector<CellId>& ch) -> const FlatBlock* {
        auto it = lay.where.find({t, ch});
        if (it == lay.where.end())
            return nullptr;
        return &lay.blocks.at(it->second.first)[it->second.second];
    };
    for (const auto& [n, bl] : lay.blocks) {
        if (n >= hi)
            continue;
        RatMatrix& m = mats[static_cast<std::size_t>(n - lo)];
        for (const FlatBlock& b : bl) {
            const CellularSheaf& f = k.term(b.t);
            const CellId coef = b.coefficient();
            int kdeg;
            if (out.model == CochainModel::cellular) {
                kdeg = y.dim(coef);
                for (CellId up : y.up(coef))
                    if (const FlatBlock* tb = target(b.t, {up}))
                        add_block(m, tb->offset, b.offset, f.map(coef, up), y.incidence(coef, up));
            } else {
                kdeg = static_cast<int>(b.chain.size()) - 1;
                const std::size_t len = b.chain.size();
                // insert one cell at position i, i = 0..len
                for (std::size_t i = 0; i <= len; ++i)
                    for (CellId c = 0; c < y.size(); ++c) {
                        if (i > 0 && (c == b.chain[i - 1] || !y.leq(b.chain[i - 1], c)))
                            continue;
                        if (i < len && (c == b.chain[i] || !y.leq(c, b.chain[i])))
                            continue;
                        std::vector<CellId> ch = b.chain;
                        ch.insert(ch.begin() + static_cast<std::ptrdiff_t>(i), c);
                        const FlatBlock* tb = target(b.t, ch);
                        if (!tb)
                            continue;
                        const int sign = (i % 2 == 0) ? 1 : -1;
                        if (i < len)
                            add_block(m, tb->offset, b.offset, LinearMap::identity(b.size), sign);
                        else
                            add_block(m, tb->offset, b.offset, f.map(coef, c), sign);
                    }
            }
            if (const FlatBlock* tb = target(b.t + 1, b.chain))
                add_block(m, tb->offset, b.offset, k.d(b.t).stalk[coef], kdeg % 2 == 0 ? 1 : -1);
        }
    }
    std::vector<LinearMap> diffs;
    for (std::size_t i = 0; i < mats.size(); ++i)
        diffs.emplace_back(dims[i], dims[i + 1], std::move(mats[i]));
    out.complex = CochainComplex(lo, std::move(dims), std::move(diffs));
    return out;
}

ChainMap flatten_map(const SheafComplexMap& f, const FlatComplex& src, const FlatComplex& tgt)
{
    if (src.model != tgt.model)
        throw std::invalid_argument("flatten_map: complexes use different cochain models");
    std::map<BlockKey, const FlatBlock*> index;
    for (const auto& [n, bl] : tgt.blocks)
        for (const auto& b : bl)
            index[{b.t, b.chain}] = &b;
    std::map<int, LinearMap> comp;
    for (const auto& [n, bl] : src.blocks) {
        RatMatrix m(tgt.complex.dim(n), src.complex.dim(n));
        for (const auto& b : bl) {
            auto it = index.find({b.t, b.chain});
            if (it == index.end())
                continue;
            add_block(m, it->second->offset, b.offset, f.at(b.t).stalk[b.coefficient()], 1);
        }
        comp[n] = LinearMap(src.complex.dim(n), tgt.complex.dim(n), std::move(m));
    }
    return ChainMap(src.complex, tgt.complex, std::move(comp));
}

CochainComplex sheaf_cochains(const FacePoset& y, const CellularSheaf& f)
{
    if (f.base()->size() != y.size())
        throw DimensionError("sheaf lives on a different poset");
    return flatten(SheafComplex::single(f), CochainModel::automatic).complex;
}

CochainComplex sheaf_cochains(const CellularSheaf& f)
{
    return sheaf_cochains(*f.base(), f);
}

ChainMap restriction_chain_map(const FlatComplex& whole, const FlatComplex& part, const CellSet& z)
{
    if (whole.model != part.model)
        throw std::invalid_argument("restriction_chain_map: complexes use different cochain models");
    auto idmap = whole.base->induced(z).second;
    std::map<BlockKey, const FlatBlock*> index;
    for (const auto& [n, bl] : part.blocks)
        for (const auto& b : bl)
            index[{b.t, b.chain}] = &b;
    std::map<int, LinearMap> comp;
    for (const auto& [n, bl] : whole.blocks) {
        RatMatrix m(part.complex.dim(n), whole.complex.dim(n));
        for (const auto& b : bl) {
            std::vector<CellId> ch;
            bool inside = true;
            for (CellId c : b.chain) {
                if (idmap[c] == FacePoset::npos) {
                    inside = false;
                    break;
                }
                ch.push_back(idmap[c]);
            }
            if (!inside)
                continue;
            auto it = index.find({b.t, ch});
            if (it == index.end())
                continue;
            add_block(m, it->second->offset, b.offset, LinearMap::identity(b.size), 1);
        }
        comp[n] = LinearMap(whole.complex.dim(n), part.complex.dim(n), std::move(m));
    }
    return ChainMap(whole.complex, part.complex, std::move(comp));
}

std::map<int, LinearMap> restriction_map(const SheafComplex& k, const CellSet& z, CochainModel model)
{
    model = resolve_model(*k.base(), model);
    FlatComplex whole = flatten(k, model);
    FlatComplex part = flatten(restrict(k, z), model);
    ChainMap r = restriction_chain_map(whole, part, z);
    std::map<int, LinearMap> out;
    if (whole.complex.empty())
        return out;
    for (int n = whole.complex.lo(); n <= whole.complex.hi(); ++n)
        out[n] = cohomology_map(r, n);
    return out;
}

OpenSplit open_section_subcomplex(const FlatComplex& fc, const CellSet& u)
{
    if (!fc.base->is_up_closed(u))
        throw std::invalid_argument("cell set is not open (closed under passing to cofaces)");
    auto in_u = [u](const FlatBlock& b) { return static_cast<bool>(u[b.coefficient()]); };
    return {subcomplex(fc.complex, fc.select_fn(in_u)), quotient_complex(fc.complex, fc.select_fn(in_u))};
}

OpenSplit open_section_subcomplex(const CellularSheaf& f, const CellSet& u)
{
    return open_section_subcomplex(flatten(SheafComplex::single(f)), u);
}

}  // namespace sseq
