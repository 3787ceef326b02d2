#include "sseq/specseq.hpp"

#include <algorithm>

namespace sseq {

namespace {

std::string where(int r, Slot s)
{
    return "page " + std::to_string(r) + " slot (" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

const std::map<Slot, Subquotient>& reps_at(const SpectralSequence& ss, int r)
{
    if (ss.reps.empty())
        throw std::invalid_argument("spectral sequence carries no chain-level presentation");
    const int k = std::min(r, ss.last_page()) - ss.first_page();
    return ss.reps.at(static_cast<std::size_t>(k));
}

std::pair<int, int> degree_range(const Abutment& a, const Abutment& b)
{
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto* ab : {&a, &b})
        for (const auto& [u, deg] : ab->degrees) {
            lo = any ? std::min(lo, u) : u;
            hi = any ? std::max(hi, u) : u;
            any = true;
        }
    return {lo, hi};
}

}  // namespace

LinearMap SSMorphism::at(int r, Slot s) const
{
    const std::size_t sd = source->dim(r, s), td = target->dim(r, s);
    if (!components.empty()) {
        const int k = std::clamp(r, first_page, last_page()) - first_page;
        const auto& comp = components[static_cast<std::size_t>(k)];
        auto it = comp.find(s);
        if (it != comp.end())
            return it->second;
    }
    return LinearMap::zero(sd, td);
}

LinearMap SSMorphism::on_abutment(int u) const
{
    auto it = abutment.find(u);
    if (it != abutment.end())
        return it->second;
    return LinearMap::zero(source->abutment.dim(u), target->abutment.dim(u));
}

SSMorphism induced_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt)
{
    auto a = std::make_shared<const SpectralSequence>(compute_ss(src));
    auto b = std::make_shared<const SpectralSequence>(compute_ss(tgt));
    return induced_map(f, src, tgt, a, b);
}

SSMorphism induced_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt, SSPtr src_ss,
                       SSPtr tgt_ss)
{
    if (!(f.source() == src.total()) || !(f.target() == tgt.total()))
        throw std::invalid_argument("induced_map: chain map does not connect the filtered complexes");
    require_filtered(f, src, tgt);
    SSMorphism m;
    m.source = src_ss;
    m.target = tgt_ss;
    m.first_page = src_ss->first_page();
    const int last = std::max(src_ss->last_page(), tgt_ss->last_page());
    for (int r = m.first_page; r <= last; ++r) {
        const auto& ra = reps_at(*src_ss, r);
        const auto& rb = reps_at(*tgt_ss, r);
        std::map<Slot, LinearMap> comp;
        for (const auto& [s, qa] : ra) {
            auto it = rb.find(s);
            if (it == rb.end())
                continue;
            const int n = s.first + s.second;
            RatMatrix img = f.at(n).apply_rows(qa.complement());
            comp[s] = LinearMap(qa.dim(), it->second.dim(), it->second.coordinates(img).transpose());
        }
        m.components.push_back(std::move(comp));
    }
    auto [lo, hi] = degree_range(src_ss->abutment, tgt_ss->abutment);
    for (int u = lo; u <= hi; ++u)
        m.abutment[u] = cohomology_map(f, u);
    return m;
}

SSMorphism zero_morphism(SSPtr source, SSPtr target)
{
    SSMorphism m;
    m.first_page = source->first_page();
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

SSMorphism compose(const SSMorphism& g, const SSMorphism& f)
{
    if (f.target != g.source && !same_data(*f.target, *g.source))
        throw std::invalid_argument("compose: morphisms are not composable");
    if (f.first_page != g.first_page)
        throw std::invalid_argument("compose: first pages differ");
    SSMorphism m;
    m.source = f.source;
    m.target = g.target;
    m.first_page = f.first_page;
    const int last = std::max({f.last_page(), g.last_page(), f.source->last_page(), g.target->last_page()});
    for (int r = m.first_page; r <= last; ++r) {
        std::map<Slot, LinearMap> comp;
        for (const auto& [s, n] : f.source->page(r).dims) {
            if (g.target->dim(r, s) == 0 || f.target->dim(r, s) == 0)
                continue;
            comp[s] = compose(g.at(r, s), f.at(r, s));
        }
        m.components.push_back(std::move(comp));
    }
    auto [lo, hi] = degree_range(f.source->abutment, g.target->abutment);
    for (int u = lo; u <= hi; ++u)
        m.abutment[u] = compose(g.on_abutment(u), f.on_abutment(u));
    return m;
}

SSMorphism renumber(const SSMorphism& m)
{
    SSMorphism out;
    out.source = std::make_shared<const SpectralSequence>(renumber(*m.source));
    out.target = std::make_shared<const SpectralSequence>(renumber(*m.target));
    out.first_page = m.first_page + 1;
    for (const auto& comp : m.components) {
        std::map<Slot, LinearMap> c;
        for (const auto& [s, f] : comp)
            c[{s.second + 2 * s.first, -s.first}] = f;
        out.components.push_back(std::move(c));
    }
    out.abutment = m.abutment;
    return out;
}

SSMorphism translate(const SSMorphism& m, int l)
{
    SSMorphism out;
    out.source = std::make_shared<const SpectralSequence>(translate(*m.source, l));
    out.target = std::make_shared<const SpectralSequence>(translate(*m.target, l));
    out.first_page = m.first_page;
    for (const auto& comp : m.components) {
        std::map<Slot, LinearMap> c;
        for (const auto& [s, f] : comp)
            c[{s.first - l, s.second + l}] = f;
        out.components.push_back(std::move(c));
    }
    out.abutment = m.abutment;
    return out;
}

std::vector<std::string> check_morphism(const SSMorphism& m)
{
    std::vector<std::string> bad;
    const SpectralSequence& a = *m.source;
    const SpectralSequence& b = *m.target;
    const int first = m.first_page;
    const int last = std::max({a.last_page(), b.last_page(), m.last_page()});
    for (int r = first; r <= last; ++r) {
        for (const auto& [s, n] : a.page(r).dims) {
            const Slot t = SpectralSequence::d_target(r, s);
            LinearMap lhs = compose(b.d(r, s), m.at(r, s));
            LinearMap rhs = compose(m.at(r, t), a.d(r, s));
            if (lhs != rhs)
                bad.push_back("does not commute with d_r at " + where(r, s));
            if (r == last || a.dim(r + 1, s) == 0)
                continue;
            // phi_r o pass - pass o phi_{r+1} must land in the image of the incoming d_r
            LinearMap diff = compose(m.at(r, s), a.passage(r, s)) - compose(b.passage(r, s), m.at(r + 1, s));
            Subspace incoming = image(b.d(r, SpectralSequence::d_source(r, s)));
            if (!incoming.contains(image(diff)))
                bad.push_back("page r+1 component is not induced by page r at " + where(r, s));
        }
    }
    auto [lo, hi] = degree_range(a.abutment, b.abutment);
    for (int u = lo; u <= hi; ++u) {
        LinearMap h = m.on_abutment(u);
        const int clo = std::min(a.abutment.lo_step(u), b.abutment.lo_step(u)) - 1;
        const int chi = std::max(a.abutment.hi_step(u), b.abutment.hi_step(u)) + 1;
        for (int c = clo; c <= chi; ++c) {
            if (!b.abutment.column_step(u, c).contains(image(h, a.abutment.column_step(u, c))))
                bad.push_back("abutment map is not filtered in degree " + std::to_string(u) + ", step " +
                              std::to_string(c));
            Slot s{c, u - c};
            auto la = a.limit.find(s), lb = b.limit.find(s);
            if (la == a.limit.end())
                continue;
            LinearMap lim_b = lb == b.limit.end() ? LinearMap::zero(b.dim(last, s), b.abutment.dim(u)) : lb->second;
            LinearMap diff = compose(h, la->second) - compose(lim_b, m.at(last, s));
            if (!b.abutment.column_step(u, c + 1).contains(image(diff)))
                bad.push_back("abutment map does not induce the E_infinity component at " + where(last, s));
        }
    }
    return bad;
}

}  // namespace sseq
