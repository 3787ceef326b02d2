#include "sseq/specseq.hpp"

#include <set>

namespace sseq {

namespace {

std::string slot_str(Slot s)
{
    return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

std::set<Slot> nonzero_slots(const SpectralSequence& a, const SpectralSequence& b, int r)
{
    std::set<Slot> out;
    for (const auto& [s, n] : a.page(r).dims)
        out.insert(s);
    for (const auto& [s, n] : b.page(r).dims)
        out.insert(s);
    return out;
}

std::set<int> degrees_of(const Abutment& a)
{
    std::set<int> out;
    for (const auto& [u, deg] : a.degrees)
        out.insert(u);
    return out;
}

void require_renumbered(const SSMorphism& m)
{
    if (m.source->indexing != Indexing::renumbered || m.target->indexing != Indexing::renumbered)
        throw std::invalid_argument("verifier expects renumbered spectral sequences");
}

}  // namespace

PippaResult check_pippa(const PippaDiagram& g)
{
    if (!compose(g.dE2, g.dE1).is_zero() || !compose(g.dF2, g.dF1).is_zero())
        throw std::invalid_argument("pippa: rows do not compose to zero");
    if (compose(g.dF1, g.phi1) != compose(g.phi, g.dE1) || compose(g.dF2, g.phi) != compose(g.phi2, g.dE2))
        throw std::invalid_argument("pippa: squares do not commute");
    PippaResult res;
    Subquotient he(kernel(g.dE2), image(g.dE1));
    Subquotient hf(kernel(g.dF2), image(g.dF1));
    res.induced = LinearMap(he.dim(), hf.dim(), hf.coordinates(g.phi.apply_rows(he.complement())).transpose());
    const bool monic = g.phi1.is_surjective() && g.phi.is_injective();
    const bool epic = g.phi2.is_injective() && g.phi.is_surjective();
    if (monic && epic)
        res.fired = PippaCase::both;
    else if (monic)
        res.fired = PippaCase::monic;
    else if (epic)
        res.fired = PippaCase::epic;
    res.conclusion_holds = (!monic || res.induced.is_injective()) && (!epic || res.induced.is_surjective());
    return res;
}

VerifierReport check_ssis(const SSMorphism& m, int variant)
{
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("ssis variant must be 1 or 2");
    require_renumbered(m);
    VerifierReport rep;
    const SpectralSequence& a = *m.source;
    const SpectralSequence& b = *m.target;
    const int r2 = 2;
    for (Slot s : nonzero_slots(a, b, r2)) {
        const int p = s.first;
        if ((variant == 1 && p > 0) || (variant == 2 && p < 0))
            rep.violations.push_back("slot " + slot_str(s) + " outside the quadrants");
        LinearMap f = m.at(r2, s);
        bool ok = true;
        if (variant == 1) {
            if (p <= -2)
                ok = f.is_iso();
            else if (p == -1)
                ok = f.is_injective();
            else if (p == 0)
                ok = f.is_zero();
        } else {
            if (p >= 2)
                ok = f.is_iso();
            else if (p == 1)
                ok = f.is_surjective();
            else if (p == 0)
                ok = f.is_zero();
        }
        if (!ok)
            rep.violations.push_back("page-2 hypothesis fails at " + slot_str(s));
    }
    rep.hypotheses_hold = rep.violations.empty();
    if (!rep.hypotheses_hold)
        return rep;

    rep.conclusion_holds = true;
    const int inf = std::max({a.last_page(), b.last_page(), m.last_page()});
    auto fail = [&](std::string what) {
        rep.conclusion_holds = false;
        rep.violations.push_back(std::move(what));
    };
    for (Slot s : nonzero_slots(a, b, inf)) {
        LinearMap f = m.at(inf, s);
        if (variant == 1 && s.first <= -1 && !f.is_injective())
            fail("E_infinity component not injective at " + slot_str(s));
        if (variant == 2 && s.first >= 1 && !f.is_surjective())
            fail("E_infinity component not surjective at " + slot_str(s));
    }
    std::set<int> degs = degrees_of(a.abutment);
    for (int u : degrees_of(b.abutment))
        degs.insert(u);
    for (int u : degs) {
        LinearMap h = m.on_abutment(u);
        if (variant == 1 && !(kernel(h) == a.abutment.L(u, 0)))
            fail("Ker H(phi) != L^0 in degree " + std::to_string(u));
        if (variant == 2 && !(image(h) == b.abutment.L(u, 1)))
            fail("L^1 != Im H(phi) in degree " + std::to_string(u));
    }
    return rep;
}

LinearMap SSSystem::abutment_composite(int i, int u) const
{
    const std::size_t h0 = members.front()->abutment.dim(u);
    if (variant == 1) {
        if (i >= n)
            return LinearMap::zero(h0, 0);
        LinearMap acc = LinearMap::identity(h0);
        for (int k = 0; k <= i; ++k)
            acc = compose(maps[static_cast<std::size_t>(k)].on_abutment(u), acc);
        return acc;
    }
    if (i == 0)
        return LinearMap::identity(h0);
    LinearMap acc = maps[static_cast<std::size_t>(i - 1)].on_abutment(u);
    for (int k = i - 2; k >= 0; --k)
        acc = compose(maps[static_cast<std::size_t>(k)].on_abutment(u), acc);
    return acc;
}

VerifierReport verify_descrfiltr(const SSSystem& sys, int variant)
{
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("descrfiltr variant must be 1 or 2");
    if (sys.members.size() != static_cast<std::size_t>(sys.n + 1) ||
        sys.maps.size() != static_cast<std::size_t>(sys.n))
        throw std::invalid_argument("system does not have n+1 members and n maps");
    VerifierReport rep;
    const int n = sys.n;
    for (int i = 0; i <= n; ++i) {
        const SpectralSequence& e = *sys.members[static_cast<std::size_t>(i)];
        if (e.indexing != Indexing::renumbered)
            throw std::invalid_argument("verifier expects renumbered spectral sequences");
        const int lo = variant == 1 ? -n : i;
        const int hi = variant == 1 ? -i : n;
        for (const auto& [s, d] : e.page(2).dims)
            if (s.first < lo || s.first > hi)
                rep.violations.push_back("(a) fails: member " + std::to_string(variant == 1 ? -i : i) +
                                         " has slot " + slot_str(s));
    }
    for (int k = 0; k < n; ++k) {
        const SSMorphism& m = sys.maps[static_cast<std::size_t>(k)];
        for (Slot s : nonzero_slots(*m.source, *m.target, 2)) {
            LinearMap f = m.at(2, s);
            const int p = s.first;
            bool ok = true;
            if (variant == 1) {
                const int i = k;  // E_{-i} -> E_{-i-1}
                if (p <= -i - 2)
                    ok = f.is_iso();
                else if (p == -i - 1)
                    ok = f.is_injective();
            } else {
                const int i = k + 1;  // E_i -> E_{i-1}
                if (p >= i + 1)
                    ok = f.is_iso();
                else if (p == i)
                    ok = f.is_surjective();
            }
            if (!ok)
                rep.violations.push_back("(b) fails for map " + std::to_string(k) + " at " + slot_str(s));
        }
    }
    rep.hypotheses_hold = rep.violations.empty();
    if (!rep.hypotheses_hold)
        return rep;

    rep.conclusion_holds = true;
    const SpectralSequence& e0 = *sys.members.front();
    for (int i = 0; i <= n; ++i)
        for (const auto& [u, deg] : e0.abutment.degrees) {
            LinearMap phi = sys.abutment_composite(i, u);
            const bool ok = variant == 1 ? kernel(phi) == e0.abutment.L(u, -i) : image(phi) == e0.abutment.L(u, i);
            if (!ok) {
                rep.conclusion_holds = false;
                rep.violations.push_back("conclusion fails for i=" + std::to_string(i) + " in degree " +
                                         std::to_string(u));
            }
        }
    return rep;
}

}  // namespace sseq
