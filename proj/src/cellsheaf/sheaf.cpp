#include "sseq/cellsheaf.hpp"

#include <algorithm>
#include <numeric>

namespace sseq {

namespace {

std::string cell_pair(const FacePoset& y, CellId a, CellId b)
{
    return y.cell(a).name + " < " + y.cell(b).name;
}

}  // namespace

CellularSheaf::CellularSheaf(PosetPtr base, std::vector<std::size_t> stalks,
                             std::map<std::pair<CellId, CellId>, LinearMap> restrictions)
    : base_(std::move(base)), stalks_(std::move(stalks)), res_(std::move(restrictions))
{
    const FacePoset& y = *base_;
    if (stalks_.size() != y.size())
        throw DimensionError("sheaf needs one stalk per cell");
    for (const auto& [k, f] : res_) {
        if (y.incidence(k.first, k.second) == 0)
            throw std::invalid_argument("restriction given along a non-cover " + cell_pair(y, k.first, k.second));
        if (f.source_dim() != stalks_[k.first] || f.target_dim() != stalks_[k.second])
            throw DimensionError("restriction along " + cell_pair(y, k.first, k.second) + " has the wrong shape");
    }
    for (const Cover& c : y.covers())
        res_.try_emplace({c.face, c.cell}, LinearMap::zero(stalks_[c.face], stalks_[c.cell]));

    const std::size_t n = y.size();
    std::vector<CellId> order(n);
    std::iota(order.begin(), order.end(), CellId{0});
    std::stable_sort(order.begin(), order.end(), [&](CellId a, CellId b) { return y.dim(a) < y.dim(b); });
    composite_.assign(n, std::vector<LinearMap>(n));
    for (CellId b : order)
        for (CellId a = 0; a < n; ++a) {
            if (!y.leq(a, b))
                continue;
            if (a == b) {
                composite_[a][b] = LinearMap::identity(stalks_[a]);
                continue;
            }
            bool first = true;
            for (CellId c : y.down(b)) {
                if (!y.leq(a, c))
                    continue;
                LinearMap f = compose(res_.at({c, b}), composite_[a][c]);
                if (first) {
                    composite_[a][b] = std::move(f);
                    first = false;
                } else if (f != composite_[a][b]) {
                    throw std::invalid_argument("sheaf is not functorial between " + cell_pair(y, a, b));
                }
            }
        }
}

CellularSheaf CellularSheaf::constant(PosetPtr base, std::size_t m)
{
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (const Cover& c : base->covers())
        res.emplace(std::make_pair(c.face, c.cell), LinearMap::identity(m));
    std::vector<std::size_t> stalks(base->size(), m);
    return CellularSheaf(std::move(base), std::move(stalks), std::move(res));
}

CellularSheaf CellularSheaf::zero(PosetPtr base)
{
    std::vector<std::size_t> stalks(base->size(), 0);
    return CellularSheaf(std::move(base), std::move(stalks), {});
}

CellularSheaf CellularSheaf::elementary(PosetPtr base, CellId tau, std::size_t v)
{
    std::vector<std::size_t> stalks(base->size(), 0);
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (CellId c = 0; c < base->size(); ++c)
        if (base->leq(c, tau))
            stalks[c] = v;
    for (const Cover& c : base->covers())
        if (base->leq(c.cell, tau))
            res.emplace(std::make_pair(c.face, c.cell), LinearMap::identity(v));
    return CellularSheaf(std::move(base), std::move(stalks), std::move(res));
}

LinearMap CellularSheaf::map(CellId a, CellId b) const
{
    if (!base_->leq(a, b))
        throw std::invalid_argument("no restriction between incomparable cells " + cell_pair(*base_, a, b));
    return composite_[a][b];
}

bool CellularSheaf::is_zero() const
{
    return std::all_of(stalks_.begin(), stalks_.end(), [](std::size_t s) { return s == 0; });
}

SheafMap::SheafMap(CellularSheaf s, CellularSheaf t, std::vector<LinearMap> maps)
    : source(std::move(s)), target(std::move(t)), stalk(std::move(maps))
{
    const FacePoset& y = *source.base();
    if (target.base()->size() != y.size() || stalk.size() != y.size())
        throw DimensionError("sheaf map needs one stalk map per cell");
    for (CellId c = 0; c < y.size(); ++c)
        if (stalk[c].source_dim() != source.stalk(c) || stalk[c].target_dim() != target.stalk(c))
            throw DimensionError("stalk map at " + y.cell(c).name + " has the wrong shape");
    for (const Cover& c : y.covers())
        if (compose(target.map(c.face, c.cell), stalk[c.face]) != compose(stalk[c.cell], source.map(c.face, c.cell)))
            throw std::invalid_argument("sheaf map does not commute with restriction " + cell_pair(y, c.face, c.cell));
}

SheafMap SheafMap::zero(const CellularSheaf& s, const CellularSheaf& t)
{
    std::vector<LinearMap> maps;
    for (CellId c = 0; c < s.base()->size(); ++c)
        maps.push_back(LinearMap::zero(s.stalk(c), t.stalk(c)));
    return SheafMap(s, t, std::move(maps));
}

SheafMap SheafMap::identity(const CellularSheaf& s)
{
    std::vector<LinearMap> maps;
    for (CellId c = 0; c < s.base()->size(); ++c)
        maps.push_back(LinearMap::identity(s.stalk(c)));
    return SheafMap(s, s, std::move(maps));
}

SheafMap compose(const SheafMap& g, const SheafMap& f)
{
    std::vector<LinearMap> maps;
    for (std::size_t c = 0; c < f.stalk.size(); ++c)
        maps.push_back(compose(g.stalk[c], f.stalk[c]));
    return SheafMap(f.source, g.target, std::move(maps));
}

SheafComplex::SheafComplex(PosetPtr base, int lo, std::vector<CellularSheaf> terms, std::vector<SheafMap> diffs)
    : base_(std::move(base)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)),
      zero_(CellularSheaf::zero(base_))
{
    if (!terms_.empty() && diffs_.size() + 1 != terms_.size())
        throw DimensionError("sheaf complex needs one differential between consecutive terms");
    for (const auto& t : terms_)
        if (t.base()->size() != base_->size())
            throw DimensionError("sheaf complex terms live on different posets");
    for (std::size_t i = 0; i < diffs_.size(); ++i)
        for (CellId c = 0; c < base_->size(); ++c) {
            const LinearMap& f = diffs_[i].stalk[c];
            if (f.source_dim() != terms_[i].stalk(c) || f.target_dim() != terms_[i + 1].stalk(c))
                throw DimensionError("sheaf differential in degree " + std::to_string(lo_ + static_cast<int>(i)) +
                                     " has the wrong shape");
            if (i > 0 && !compose(f, diffs_[i - 1].stalk[c]).is_zero())
                throw std::invalid_argument("d^2 != 0 at cell " + base_->cell(c).name + " in degree " +
                                            std::to_string(lo_ + static_cast<int>(i) - 1));
        }
}

SheafComplex SheafComplex::single(const CellularSheaf& f, int degree)
{
    return SheafComplex(f.base(), degree, {f}, {});
}

const CellularSheaf& SheafComplex::term(int t) const
{
    if (t < lo_ || t > hi())
        return zero_;
    return terms_[static_cast<std::size_t>(t - lo_)];
}

SheafMap SheafComplex::d(int t) const
{
    if (t < lo_ || t >= hi())
        return SheafMap::zero(term(t), term(t + 1));
    return diffs_[static_cast<std::size_t>(t - lo_)];
}

CochainComplex SheafComplex::stalk_complex(CellId c) const
{
    if (terms_.empty())
        return CochainComplex();
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    for (int t = lo_; t <= hi(); ++t) {
        dims.push_back(term(t).stalk(c));
        if (t < hi())
            diffs.push_back(d(t).stalk[c]);
    }
    return CochainComplex(lo_, std::move(dims), std::move(diffs));
}

SheafMap SheafComplexMap::at(int t) const
{
    auto it = components.find(t);
    if (it != components.end())
        return it->second;
    return SheafMap::zero(source.term(t), target.term(t));
}

namespace {

CellularSheaf restrict_on(const CellularSheaf& f, PosetPtr sub, const std::vector<CellId>& idmap)
{
    std::vector<std::size_t> stalks(sub->size());
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (CellId c = 0; c < idmap.size(); ++c)
        if (idmap[c] != FacePoset::npos)
            stalks[idmap[c]] = f.stalk(c);
    for (const auto& [k, m] : f.restrictions())
        if (idmap[k.first] != FacePoset::npos && idmap[k.second] != FacePoset::npos)
            res.emplace(std::make_pair(idmap[k.first], idmap[k.second]), m);
    return CellularSheaf(std::move(sub), std::move(stalks), std::move(res));
}

SheafMap restrict_map_on(const SheafMap& f, const CellularSheaf& s, const CellularSheaf& t,
                         const std::vector<CellId>& idmap)
{
    std::vector<LinearMap> maps(s.base()->size());
    for (CellId c = 0; c < idmap.size(); ++c)
        if (idmap[c] != FacePoset::npos)
            maps[idmap[c]] = f.stalk[c];
    return SheafMap(s, t, std::move(maps));
}

SheafComplex restrict_complex_on(const SheafComplex& k, PosetPtr sub, const std::vector<CellId>& idmap)
{
    std::vector<CellularSheaf> terms;
    std::vector<SheafMap> diffs;
    if (k.empty())
        return SheafComplex(sub, k.lo(), {}, {});
    for (int t = k.lo(); t <= k.hi(); ++t)
        terms.push_back(restrict_on(k.term(t), sub, idmap));
    for (int t = k.lo(); t < k.hi(); ++t)
        diffs.push_back(restrict_map_on(k.d(t), terms[static_cast<std::size_t>(t - k.lo())],
                                        terms[static_cast<std::size_t>(t - k.lo() + 1)], idmap));
    return SheafComplex(sub, k.lo(), std::move(terms), std::move(diffs));
}

void require_closed(const FacePoset& y, const CellSet& z)
{
    if (!y.is_down_closed(z))
        throw std::invalid_argument("cell set is not closed under taking faces");
}

}  // namespace

CellularSheaf restrict(const CellularSheaf& f, const CellSet& z)
{
    require_closed(*f.base(), z);
    auto [sub, idmap] = f.base()->induced(z);
    return restrict_on(f, std::make_shared<const FacePoset>(std::move(sub)), idmap);
}

SheafComplex restrict(const SheafComplex& k, const CellSet& z)
{
    require_closed(*k.base(), z);
    auto [sub, idmap] = k.base()->induced(z);
    return restrict_complex_on(k, std::make_shared<const FacePoset>(std::move(sub)), idmap);
}

SheafComplexMap restrict(const SheafComplexMap& f, const CellSet& z)
{
    const FacePoset& y = *f.source.base();
    require_closed(y, z);
    auto [sub, idmap] = y.induced(z);
    auto ptr = std::make_shared<const FacePoset>(std::move(sub));
    SheafComplexMap out;
    out.source = restrict_complex_on(f.source, ptr, idmap);
    out.target = restrict_complex_on(f.target, ptr, idmap);
    for (const auto& [t, m] : f.components)
        out.components.emplace(t, restrict_map_on(m, out.source.term(t), out.target.term(t), idmap));
    return out;
}

CellularSheaf extend_by_zero(const CellularSheaf& f, const CellSet& s)
{
    const FacePoset& y = *f.base();
    if (!y.is_convex(s))
        throw std::invalid_argument("extension by zero needs a locally closed cell set");
    std::vector<std::size_t> stalks(y.size(), 0);
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (CellId c = 0; c < y.size(); ++c)
        if (s[c])
            stalks[c] = f.stalk(c);
    for (const auto& [k, m] : f.restrictions())
        if (s[k.first] && s[k.second])
            res.emplace(k, m);
    return CellularSheaf(f.base(), std::move(stalks), std::move(res));
}

SheafComplex extend_by_zero(const SheafComplex& k, const CellSet& s)
{
    if (k.empty())
        return k;
    std::vector<CellularSheaf> terms;
    for (int t = k.lo(); t <= k.hi(); ++t)
        terms.push_back(extend_by_zero(k.term(t), s));
    std::vector<SheafMap> diffs;
    for (int t = k.lo(); t < k.hi(); ++t) {
        std::vector<LinearMap> maps;
        const SheafMap d = k.d(t);
        for (CellId c = 0; c < s.size(); ++c)
            maps.push_back(s[c] ? d.stalk[c] : LinearMap::zero(0, 0));
        diffs.emplace_back(terms[static_cast<std::size_t>(t - k.lo())], terms[static_cast<std::size_t>(t - k.lo() + 1)],
                           std::move(maps));
    }
    return SheafComplex(k.base(), k.lo(), std::move(terms), std::move(diffs));
}

CellularSheaf cohomology_sheaf(const SheafComplex& k, int t)
{
    const FacePoset& y = *k.base();
    std::vector<Cohomology> h;
    std::vector<std::size_t> stalks;
    for (CellId c = 0; c < y.size(); ++c) {
        h.push_back(cohomology(k.stalk_complex(c), t));
        stalks.push_back(h.back().dim());
    }
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    const CellularSheaf& f = k.term(t);
    for (const Cover& c : y.covers()) {
        RatMatrix img = f.map(c.face, c.cell).apply_rows(h[c.face].classes.complement());
        res.emplace(std::make_pair(c.face, c.cell),
                    LinearMap(stalks[c.face], stalks[c.cell], h[c.cell].classes.coordinates(img).transpose()));
    }
    return CellularSheaf(k.base(), std::move(stalks), std::move(res));
}

SheafComplexMap truncation_le(const SheafComplex& k, int a)
{
    SheafComplexMap out;
    out.target = k;
    const FacePoset& y = *k.base();
    if (k.empty() || a < k.lo()) {
        out.source = SheafComplex(k.base(), k.lo(), {}, {});
        return out;
    }
    if (a >= k.hi()) {
        out.source = k;
        for (int t = k.lo(); t <= k.hi(); ++t)
            out.components.emplace(t, SheafMap::identity(k.term(t)));
        return out;
    }
    // kernel sheaf of d^a in reduced-basis coordinates
    std::vector<Subspace> ker;
    std::vector<std::size_t> stalks;
    const SheafMap da = k.d(a);
    for (CellId c = 0; c < y.size(); ++c) {
        ker.push_back(kernel(da.stalk[c]));
        stalks.push_back(ker.back().dim());
    }
    const CellularSheaf& fa = k.term(a);
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (const Cover& c : y.covers()) {
        RatMatrix img = fa.map(c.face, c.cell).apply_rows(ker[c.face].basis());
        Subquotient coords(ker[c.cell], Subspace::zero(fa.stalk(c.cell)));
        res.emplace(std::make_pair(c.face, c.cell),
                    LinearMap(stalks[c.face], stalks[c.cell], coords.coordinates(img).transpose()));
    }
    CellularSheaf top(k.base(), std::move(stalks), std::move(res));
    std::vector<LinearMap> inc;
    for (CellId c = 0; c < y.size(); ++c)
        inc.emplace_back(ker[c].dim(), fa.stalk(c), ker[c].basis().transpose());

    std::vector<CellularSheaf> terms;
    std::vector<SheafMap> diffs;
    for (int t = k.lo(); t < a; ++t)
        terms.push_back(k.term(t));
    terms.push_back(top);
    for (int t = k.lo(); t + 1 < a; ++t)
        diffs.push_back(k.d(t));
    if (a > k.lo()) {
        // d^{a-1} lands in the kernel
        const SheafMap prev = k.d(a - 1);
        std::vector<LinearMap> maps;
        for (CellId c = 0; c < y.size(); ++c) {
            Subquotient coords(ker[c], Subspace::zero(fa.stalk(c)));
            RatMatrix img = prev.stalk[c].matrix().transpose();
            maps.emplace_back(k.term(a - 1).stalk(c), ker[c].dim(), coords.coordinates(img).transpose());
        }
        diffs.emplace_back(k.term(a - 1), top, std::move(maps));
    }
    out.source = SheafComplex(k.base(), k.lo(), std::move(terms), std::move(diffs));
    for (int t = k.lo(); t < a; ++t)
        out.components.emplace(t, SheafMap::identity(k.term(t)));
    out.components.emplace(a, SheafMap(top, fa, std::move(inc)));
    return out;
}

}  // namespace sseq
