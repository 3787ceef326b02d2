#include "sseq/cellsheaf.hpp"

namespace sseq {

namespace {

CochainModel model_of(const SheafTObject& x)
{
    return resolve_model(*x.k->base(), x.model);
}

FlatComplex flat_of(const SheafTObject& x)
{
    return flatten(*x.k, model_of(x));
}

// coordinate inclusion of the blocks of the restricted complex, as a degreewise map
std::map<int, LinearMap> block_section(const FlatComplex& whole, const FlatComplex& part, const CellSet& z)
{
    ChainMap r = restriction_chain_map(whole, part, z);
    std::map<int, LinearMap> out;
    if (whole.complex.empty() && part.complex.empty())
        return out;
    const int lo = std::min(whole.complex.lo(), part.complex.lo());
    const int hi = std::max(whole.complex.hi(), part.complex.hi());
    for (int n = lo; n <= hi; ++n) {
        const LinearMap& p = r.at(n);
        out[n] = LinearMap(p.target_dim(), p.source_dim(), p.matrix().transpose());
    }
    return out;
}

}  // namespace

FilteredComplex t_view(const SheafTObject& x)
{
    return truncation_filtered_complex(flat_of(x), *x.k, x.tshift);
}

SheafTObject truncate_le(const SheafTObject& x, int a)
{
    auto k = std::make_shared<const SheafComplex>(truncation_le(*x.k, a - x.tshift).source);
    return {std::move(k), x.tshift, model_of(x)};
}

ChainMap truncation_inclusion(const SheafTObject& x, int a)
{
    SheafComplexMap m = truncation_le(*x.k, a - x.tshift);
    const CochainModel model = model_of(x);
    return flatten_map(m, flatten(m.source, model), flatten(*x.k, model));
}

ShiftExactFunctor<SheafTObject> restriction_functor(const CellSet& z, int d)
{
    ShiftExactFunctor<SheafTObject> u;
    u.d = d;
    u.action = [z, d](const SheafTObject& x) {
        return SheafTObject{std::make_shared<const SheafComplex>(restrict(*x.k, z)), x.tshift + d, model_of(x)};
    };
    auto act = u.action;
    u.unit = [act, z](const SheafTObject& x) {
        return restriction_chain_map(flat_of(x), flat_of(act(x)), z);
    };
    u.truncation_comparison = [z](const SheafTObject& x, int a) {
        const CochainModel model = model_of(x);
        SheafComplexMap m = restrict(truncation_le(*x.k, a - x.tshift), z);
        return flatten_map(m, flatten(m.source, model), flatten(m.target, model));
    };
    u.on_map = [act, z](const SheafTObject& x, const SheafTObject& y, const ChainMap& f) {
        const FlatComplex fx = flat_of(x), fy = flat_of(y);
        const FlatComplex ux = flat_of(act(x)), uy = flat_of(act(y));
        auto sec = block_section(fx, ux, z);
        ChainMap proj = restriction_chain_map(fy, uy, z);
        std::map<int, LinearMap> comp;
        for (const auto& [n, s] : sec)
            comp[n] = compose(proj.at(n), compose(f.at(n), s));
        return ChainMap(ux.complex, uy.complex, std::move(comp));
    };
    return u;
}

}  // namespace sseq
