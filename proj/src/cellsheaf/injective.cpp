#include "sseq/cellsheaf.hpp"

namespace sseq {

namespace {

struct Summand {
    CellId cell;
    std::size_t dim;
};

// Sum of elementary injectives: the stalk at c lists the summands over cells >= c in order.
struct InjSum {
    std::vector<Summand> parts;
    CellularSheaf sheaf;
    std::vector<std::vector<std::size_t>> offset;  // offset[c][i]: position of part i in the stalk at c
};

InjSum injective_sum(const PosetPtr& y, std::vector<Summand> parts)
{
    InjSum s;
    s.parts = std::move(parts);
    const std::size_t n = y->size();
    std::vector<std::size_t> stalks(n, 0);
    s.offset.assign(n, std::vector<std::size_t>(s.parts.size(), FacePoset::npos));
    for (CellId c = 0; c < n; ++c)
        for (std::size_t i = 0; i < s.parts.size(); ++i)
            if (y->leq(c, s.parts[i].cell)) {
                s.offset[c][i] = stalks[c];
                stalks[c] += s.parts[i].dim;
            }
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (const Cover& cv : y->covers()) {
        RatMatrix m(stalks[cv.cell], stalks[cv.face]);
        for (std::size_t i = 0; i < s.parts.size(); ++i)
            if (s.offset[cv.cell][i] != FacePoset::npos)
                for (std::size_t j = 0; j < s.parts[i].dim; ++j)
                    m(s.offset[cv.cell][i] + j, s.offset[cv.face][i] + j) = 1;
        res.emplace(std::make_pair(cv.face, cv.cell), LinearMap(stalks[cv.face], stalks[cv.cell], std::move(m)));
    }
    s.sheaf = CellularSheaf(y, std::move(stalks), std::move(res));
    return s;
}

// Injective hull: at each cell keep the part of the stalk that dies on every coface.
std::pair<InjSum, SheafMap> hull(const CellularSheaf& g)
{
    const PosetPtr& y = g.base();
    std::vector<Summand> parts;
    std::vector<RatMatrix> retract(y->size());  // retract[c]: socle coordinates, rows x stalk
    for (CellId c = 0; c < y->size(); ++c) {
        Subspace soc = Subspace::full(g.stalk(c));
        for (CellId u : y->up(c))
            soc = intersection(soc, kernel(g.map(c, u)));
        if (soc.dim() == 0)
            continue;
        // basis = socle rows then a complement; invert and keep the socle coordinates
        Subquotient rest(Subspace::full(g.stalk(c)), soc);
        RatMatrix inv = inverse(RatMatrix::vstack(soc.basis(), rest.complement()));
        retract[c] = inv.block(0, 0, inv.rows(), soc.dim()).transpose();
        parts.push_back({c, soc.dim()});
    }
    InjSum sum = injective_sum(y, parts);
    std::vector<LinearMap> maps;
    for (CellId c = 0; c < y->size(); ++c) {
        RatMatrix m(sum.sheaf.stalk(c), g.stalk(c));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::size_t off = sum.offset[c][i];
            if (off == FacePoset::npos)
                continue;
            RatMatrix comp = retract[parts[i].cell] * g.map(c, parts[i].cell).matrix();
            m.set_block(off, 0, comp);
        }
        maps.emplace_back(g.stalk(c), sum.sheaf.stalk(c), std::move(m));
    }
    SheafMap f(g, sum.sheaf, std::move(maps));
    return {std::move(sum), std::move(f)};
}

// Stalkwise cokernel in canonical quotient coordinates.
std::pair<CellularSheaf, SheafMap> cokernel(const SheafMap& f)
{
    const CellularSheaf& t = f.target;
    const PosetPtr& y = t.base();
    std::vector<Subquotient> q;
    std::vector<std::size_t> stalks;
    for (CellId c = 0; c < y->size(); ++c) {
        q.emplace_back(Subspace::full(t.stalk(c)), image(f.stalk[c]));
        stalks.push_back(q.back().dim());
    }
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (const Cover& cv : y->covers()) {
        RatMatrix img = t.map(cv.face, cv.cell).apply_rows(q[cv.face].complement());
        res.emplace(std::make_pair(cv.face, cv.cell),
                    LinearMap(stalks[cv.face], stalks[cv.cell], q[cv.cell].coordinates(img).transpose()));
    }
    CellularSheaf c(y, std::move(stalks), std::move(res));
    std::vector<LinearMap> proj;
    for (CellId x = 0; x < y->size(); ++x)
        proj.push_back(q[x].projection());
    SheafMap p(t, c, std::move(proj));
    return {std::move(c), std::move(p)};
}

CochainComplex stalk_of(const FlatComplex& fc, CellId c)
{
    const CochainComplex& tot = fc.complex;
    if (tot.empty())
        return tot;
    const FacePoset& y = *fc.base;
    std::map<int, std::vector<std::size_t>> keep;
    for (int n = tot.lo(); n <= tot.hi(); ++n) {
        auto& idx = keep[n];
        auto it = fc.blocks.find(n);
        if (it == fc.blocks.end())
            continue;
        for (const auto& b : it->second)
            if (y.leq(c, b.support()))
                for (std::size_t i = 0; i < b.size; ++i)
                    idx.push_back(b.offset + i);
    }
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    for (int n = tot.lo(); n <= tot.hi(); ++n) {
        dims.push_back(keep[n].size());
        if (n < tot.hi()) {
            RatMatrix m = tot.d(n).matrix().select_rows(keep[n + 1]).select_cols(keep[n]);
            diffs.emplace_back(keep[n].size(), keep[n + 1].size(), std::move(m));
        }
    }
    return CochainComplex(tot.lo(), std::move(dims), std::move(diffs));
}

}  // namespace

CochainComplex InjectiveResolution::stalk(CellId c) const
{
    return stalk_of(sections, c);
}

bool InjectiveResolution::stalkwise_exact() const
{
    for (const ChainMap& aug : augmentation) {
        const int lo = std::min(aug.source().lo(), aug.target().lo());
        const int hi = std::max(aug.source().hi(), aug.target().hi());
        for (int n = lo; n <= hi; ++n)
            if (!cohomology_map(aug, n).is_iso())
                return false;
    }
    return true;
}

InjectiveResolution injective_resolution(const CellularSheaf& f)
{
    const PosetPtr& y = f.base();
    InjectiveResolution res;
    res.sections.base = y;
    res.sections.model = CochainModel::resolution;

    std::vector<InjSum> terms;
    std::vector<SheafMap> diffs;  // terms[k] -> terms[k+1]
    auto [i0, aug] = hull(f);
    terms.push_back(i0);
    auto [coker, proj] = cokernel(aug);
    const std::size_t bound = y->size() + 2;
    while (!coker.is_zero()) {
        if (terms.size() > bound)
            throw std::logic_error("injective resolution does not terminate");
        auto [next, emb] = hull(coker);
        diffs.push_back(compose(emb, proj));
        terms.push_back(next);
        auto [c2, p2] = cokernel(diffs.back());
        coker = std::move(c2);
        proj = std::move(p2);
    }

    // global sections: one block per summand; the component from part j to part i is read at cell(i)
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::size_t off = 0;
        auto& bl = res.sections.blocks[static_cast<int>(k)];
        for (const auto& p : terms[k].parts) {
            bl.push_back(FlatBlock{0, {p.cell}, off, p.dim});
            off += p.dim;
        }
        dims.push_back(off);
    }
    std::vector<LinearMap> gd;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        const InjSum& a = terms[k];
        const InjSum& b = terms[k + 1];
        const auto& ba = res.sections.blocks.at(static_cast<int>(k));
        const auto& bb = res.sections.blocks.at(static_cast<int>(k + 1));
        RatMatrix m(dims[k + 1], dims[k]);
        for (std::size_t i = 0; i < b.parts.size(); ++i) {
            const CellId c = b.parts[i].cell;
            const RatMatrix& st = diffs[k].stalk[c].matrix();
            for (std::size_t j = 0; j < a.parts.size(); ++j) {
                const std::size_t oa = a.offset[c][j];
                if (oa == FacePoset::npos)
                    continue;
                const std::size_t ob = b.offset[c][i];
                for (std::size_t r = 0; r < b.parts[i].dim; ++r)
                    for (std::size_t s = 0; s < a.parts[j].dim; ++s)
                        m(bb[i].offset + r, ba[j].offset + s) = st(ob + r, oa + s);
            }
        }
        gd.emplace_back(dims[k], dims[k + 1], std::move(m));
    }
    res.sections.complex = CochainComplex(0, std::move(dims), std::move(gd));

    std::vector<CellularSheaf> sheaves;
    for (const auto& t : terms)
        sheaves.push_back(t.sheaf);
    res.terms = SheafComplex(y, 0, std::move(sheaves), diffs);

    SheafComplex single = SheafComplex::single(f);
    for (CellId c = 0; c < y->size(); ++c) {
        CochainComplex st = res.stalk(c);
        res.augmentation.emplace_back(single.stalk_complex(c), st, std::map<int, LinearMap>{{0, aug.stalk[c]}});
    }
    return res;
}

InjectiveResolution injective_resolution(const SheafComplex& k)
{
    InjectiveResolution res;
    res.sections = flatten(k, CochainModel::resolution);
    const FacePoset& y = *k.base();
    for (CellId c = 0; c < y.size(); ++c) {
        CochainComplex st = res.stalk(c);
        CochainComplex src = k.stalk_complex(c);
        // positions of the blocks with support >= c inside the stalk
        std::map<int, std::map<std::pair<int, CellId>, std::size_t>> pos;
        for (const auto& [n, bl] : res.sections.blocks) {
            std::size_t off = 0;
            for (const auto& b : bl)
                if (y.leq(c, b.support())) {
                    if (b.chain.size() == 1)
                        pos[n][{b.t, b.support()}] = off;
                    off += b.size;
                }
        }
        std::map<int, LinearMap> comp;
        if (!src.empty())
            for (int t = k.lo(); t <= k.hi(); ++t) {
                RatMatrix m(st.dim(t), src.dim(t));
                for (CellId u = 0; u < y.size(); ++u) {
                    if (!y.leq(c, u))
                        continue;
                    auto it = pos[t].find({t, u});
                    if (it == pos[t].end())
                        continue;
                    m.set_block(it->second, 0, k.term(t).map(c, u).matrix());
                }
                comp[t] = LinearMap(src.dim(t), st.dim(t), std::move(m));
            }
        res.augmentation.emplace_back(src, st, std::move(comp));
    }
    return res;
}

Subcomplex supported_sections(const InjectiveResolution& res, const CellSet& z)
{
    if (!res.sections.base->is_down_closed(z))
        throw std::invalid_argument("support must be a closed cell set");
    return subcomplex(res.sections.complex,
                      res.sections.select_fn([z](const FlatBlock& b) { return static_cast<bool>(z[b.support()]); }));
}

QuotientComplex rj_star(const InjectiveResolution& res, const CellSet& u)
{
    if (!res.sections.base->is_up_closed(u))
        throw std::invalid_argument("cell set is not open (closed under passing to cofaces)");
    return quotient_complex(res.sections.complex,
                            res.sections.select_fn([u](const FlatBlock& b) { return !u[b.support()]; }));
}

}  // namespace sseq
