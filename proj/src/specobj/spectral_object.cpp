#include "sseq/specobj.hpp"

#include <algorithm>

namespace sseq {

namespace {

LinearMap sq_map(const Subquotient& from, const Subquotient& to)
{
    return LinearMap(from.dim(), to.dim(), to.coordinates(from.complement()).transpose());
}

LinearMap in_cohomology(const LinearMap& f, const Cohomology& hs, const Cohomology& ht)
{
    return LinearMap(hs.dim(), ht.dim(), ht.classes.coordinates(f.apply_rows(hs.classes.complement())).transpose());
}

std::string triple(int p, int q, int r)
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

// Coordinates of rows lying in a subspace, read against its reduced basis.
RatMatrix coords_in(const Subspace& s, const RatMatrix& rows)
{
    return Subquotient(s, Subspace::zero(s.ambient_dim())).coordinates(rows);
}

}  // namespace

std::pair<int, int> SpectralObject::clamp(int p, int q) const
{
    p = std::clamp(p, lo, hi);
    q = std::clamp(q, lo, hi);
    if (p > q)
        throw std::invalid_argument("spectral object index (p,q) needs p <= q");
    return {p, q};
}

const CochainComplex& SpectralObject::X(int p, int q) const
{
    return objects.at(clamp(p, q));
}

const ChainMap& SpectralObject::map(int p, int q, int p2, int q2) const
{
    auto [a, b] = clamp(p, q);
    auto [c, d] = clamp(p2, q2);
    return structure.at({a, b, c, d});
}

const ChainMap& SpectralObject::del(int p, int q, int r) const
{
    auto [a, b] = clamp(p, q);
    auto [b2, c] = clamp(q, r);
    return boundary.at({a, b2, c});
}

SpectralObject so_from_filtered(const FilteredComplex& fc)
{
    SpectralObject so;
    so.lo = fc.type_lo();
    so.hi = fc.type_hi() + 1;
    const CochainComplex& c = fc.total();
    std::map<std::pair<int, int>, SubquotientComplex> sq;
    for (int p = so.lo; p <= so.hi; ++p)
        for (int q = p; q <= so.hi; ++q) {
            SubquotientComplex x = subquotient_complex(c, fc.step_fn(p), fc.step_fn(q));
            so.objects[{p, q}] = x.complex;
            sq.emplace(std::make_pair(p, q), std::move(x));
        }
    const int nlo = c.lo(), nhi = c.hi();
    for (const auto& [src, x] : sq)
        for (const auto& [tgt, y] : sq) {
            if (tgt.first > src.first || tgt.second > src.second)
                continue;
            std::map<int, LinearMap> comp;
            for (int n = nlo; n <= nhi; ++n)
                comp[n] = sq_map(x.pieces.at(n), y.pieces.at(n));
            so.structure.emplace(std::make_tuple(src.first, src.second, tgt.first, tgt.second),
                                 ChainMap(x.complex, y.complex, std::move(comp)));
        }
    for (int p = so.lo; p <= so.hi; ++p)
        for (int q = p; q <= so.hi; ++q)
            for (int r = q; r <= so.hi; ++r) {
                const SubquotientComplex& x = sq.at({p, q});
                const SubquotientComplex& y = sq.at({q, r});
                std::map<int, LinearMap> comp;
                for (int n = nlo; n < nhi; ++n) {
                    const Subquotient& e = x.pieces.at(n);
                    if (e.dim() == 0)
                        continue;
                    RatMatrix dv = c.d(n).apply_rows(e.complement());
                    const Subquotient& up = x.pieces.at(n + 1);
                    RatMatrix residual = dv - up.lift(up.coordinates(dv));
                    comp[n] = LinearMap(e.dim(), y.pieces.at(n + 1).dim(),
                                        y.pieces.at(n + 1).coordinates(residual).transpose());
                }
                so.boundary.emplace(std::make_tuple(p, q, r), ChainMap(x.complex, shift(y.complex, 1), std::move(comp)));
            }
    return so;
}

SpectralObject so_from_truncation(const CochainComplex& c, int tshift)
{
    return so_from_filtered(truncation_filtration(c, tshift));
}

SpectralObject translate_so(const SpectralObject& so, int l)
{
    SpectralObject out;
    out.lo = so.lo - l;
    out.hi = so.hi - l;
    for (const auto& [k, x] : so.objects)
        out.objects.emplace(std::make_pair(k.first - l, k.second - l), x);
    for (const auto& [k, f] : so.structure) {
        auto [p, q, p2, q2] = k;
        out.structure.emplace(std::make_tuple(p - l, q - l, p2 - l, q2 - l), f);
    }
    for (const auto& [k, f] : so.boundary) {
        auto [p, q, r] = k;
        out.boundary.emplace(std::make_tuple(p - l, q - l, r - l), f);
    }
    return out;
}

namespace {

GradedSpectralObject apply_H(const SpectralObject& so)
{
    GradedSpectralObject g;
    g.lo = so.lo;
    g.hi = so.hi;
    bool any = false;
    for (const auto& [k, x] : so.objects)
        if (!x.empty()) {
            g.deg_lo = any ? std::min(g.deg_lo, x.lo()) : x.lo();
            g.deg_hi = any ? std::max(g.deg_hi, x.hi()) : x.hi();
            any = true;
        }
    if (!any)
        return g;
    for (int n = g.deg_lo - 1; n <= g.deg_hi + 1; ++n)
        for (const auto& [k, x] : so.objects)
            g.objects.emplace(std::make_tuple(n, k.first, k.second), cohomology(x, n));
    for (int n = g.deg_lo - 1; n <= g.deg_hi + 1; ++n) {
        for (const auto& [k, f] : so.structure) {
            auto [p, q, p2, q2] = k;
            g.maps.emplace(std::make_tuple(n, p, q, p2, q2),
                           in_cohomology(f.at(n), g.objects.at({n, p, q}), g.objects.at({n, p2, q2})));
        }
        if (n > g.deg_hi)
            continue;
        for (const auto& [k, f] : so.boundary) {
            auto [p, q, r] = k;
            g.boundary.emplace(std::make_tuple(n, p, q, r),
                               in_cohomology(f.at(n), g.objects.at({n, p, q}), g.objects.at({n + 1, q, r})));
        }
    }
    return g;
}

}  // namespace

std::size_t GradedSpectralObject::dim(int n, int p, int q) const
{
    p = std::clamp(p, lo, hi);
    q = std::clamp(q, lo, hi);
    auto it = objects.find({n, p, q});
    return it == objects.end() ? 0 : it->second.dim();
}

LinearMap GradedSpectralObject::map(int n, int p, int q, int p2, int q2) const
{
    p = std::clamp(p, lo, hi);
    q = std::clamp(q, lo, hi);
    p2 = std::clamp(p2, lo, hi);
    q2 = std::clamp(q2, lo, hi);
    auto it = maps.find({n, p, q, p2, q2});
    if (it != maps.end())
        return it->second;
    return LinearMap::zero(dim(n, p, q), dim(n, p2, q2));
}

LinearMap GradedSpectralObject::del(int n, int p, int q, int r) const
{
    p = std::clamp(p, lo, hi);
    q = std::clamp(q, lo, hi);
    r = std::clamp(r, lo, hi);
    auto it = boundary.find({n, p, q, r});
    if (it != boundary.end())
        return it->second;
    return LinearMap::zero(dim(n, p, q), dim(n + 1, q, r));
}

Report check_long_exact(const GradedSpectralObject& g)
{
    Report rep;
    for (int p = g.lo; p <= g.hi; ++p)
        for (int q = p; q <= g.hi; ++q)
            for (int r = q; r <= g.hi; ++r)
                for (int n = g.deg_lo - 1; n <= g.deg_hi + 1; ++n) {
                    const LinearMap a = g.map(n, q, r, p, r);
                    const LinearMap b = g.map(n, p, r, p, q);
                    const LinearMap c = g.del(n, p, q, r);
                    const LinearMap c_prev = g.del(n - 1, p, q, r);
                    const std::string at = " for " + triple(p, q, r) + " in degree " + std::to_string(n);
                    if (!exact_at(c_prev, a))
                        rep.fail("long exact sequence not exact at T(X_qr)" + at);
                    if (!exact_at(a, b))
                        rep.fail("long exact sequence not exact at T(X_pr)" + at);
                    if (!exact_at(b, c))
                        rep.fail("long exact sequence not exact at T(X_pq)" + at);
                }
    return rep;
}

Report check_axioms(const SpectralObject& so)
{
    Report rep;
    for (int p = so.lo; p <= so.hi; ++p)
        if (so.X(p, p).total_dim() != 0)
            rep.fail("X_pp is not zero for p=" + std::to_string(p));
    // (a) functoriality at chain level
    for (const auto& [k1, f] : so.structure) {
        auto [p, q, p1, q1] = k1;
        if (p == p1 && q == q1 && !(f.source().empty())) {
            for (int n = f.source().lo(); n <= f.source().hi(); ++n)
                if (f.at(n) != LinearMap::identity(f.source().dim(n))) {
                    rep.fail("structure map of (" + std::to_string(p) + "," + std::to_string(q) + ") is not the identity");
                    break;
                }
        }
        for (int p2 = so.lo; p2 <= p1; ++p2)
            for (int q2 = std::max(p2, so.lo); q2 <= q1; ++q2) {
                const ChainMap& g = so.map(p1, q1, p2, q2);
                const ChainMap& h = so.map(p, q, p2, q2);
                const CochainComplex& s = f.source();
                if (s.empty())
                    continue;
                for (int n = s.lo(); n <= s.hi(); ++n)
                    if (compose(g.at(n), f.at(n)) != h.at(n)) {
                        rep.fail("structure maps do not compose at (" + std::to_string(p) + "," + std::to_string(q) +
                                 ") -> (" + std::to_string(p1) + "," + std::to_string(q1) + ") -> (" +
                                 std::to_string(p2) + "," + std::to_string(q2) + ")");
                        break;
                    }
            }
    }
    GradedSpectralObject g = apply_H(so);
    // (b) boundary squares, read in cohomology
    for (const auto& [k, f] : so.boundary) {
        auto [p, q, r] = k;
        for (int p1 = so.lo; p1 <= p; ++p1)
            for (int q1 = p1; q1 <= q; ++q1)
                for (int r1 = q1; r1 <= r; ++r1) {
                    if (p1 == p && q1 == q && r1 == r)
                        continue;
                    for (int n = g.deg_lo; n <= g.deg_hi; ++n) {
                        LinearMap left = compose(g.map(n + 1, q, r, q1, r1), g.del(n, p, q, r));
                        LinearMap right = compose(g.del(n, p1, q1, r1), g.map(n, p, q, p1, q1));
                        if (left != right) {
                            rep.fail("boundary square fails between " + triple(p, q, r) + " and " +
                                     triple(p1, q1, r1) + " in degree " + std::to_string(n));
                            break;
                        }
                    }
                }
    }
    Report les = check_long_exact(g);
    for (auto& v : les.violations)
        rep.fail(std::move(v));
    return rep;
}

AppliedT apply_T(const SpectralObject& so)
{
    AppliedT out;
    out.gso = apply_H(so);
    const GradedSpectralObject& g = out.gso;
    SpectralSequence& ss = out.ss;
    ss.indexing = Indexing::standard;
    const int last = std::max(1, so.hi - so.lo);
    const bool any = g.deg_lo <= g.deg_hi;

    // E_r^{p} in degree n as a subspace of T^n X_{p-r+1,p+1}
    auto page_space = [&](int r, int p, int n) {
        return image(g.map(n, p, p + r, p - r + 1, p + 1));
    };
    for (int r = 1; r <= last; ++r) {
        Page pg;
        pg.r = r;
        std::map<Slot, Subspace> spaces;
        if (any)
            for (int p = so.lo; p < so.hi; ++p)
                for (int n = g.deg_lo; n <= g.deg_hi; ++n) {
                    Subspace e = page_space(r, p, n);
                    if (e.dim() == 0)
                        continue;
                    pg.dims[{p, n - p}] = e.dim();
                    spaces.emplace(Slot{p, n - p}, std::move(e));
                }
        for (const auto& [s, e] : spaces) {
            const Slot t = SpectralSequence::d_target(r, s);
            auto it = spaces.find(t);
            if (it == spaces.end())
                continue;
            const int p = s.first, n = s.first + s.second;
            const LinearMap a = g.map(n, p, p + r, p - r + 1, p + 1);
            auto lifts = solve(a.matrix(), e.basis().transpose());
            if (!lifts)
                throw std::logic_error("apply_T: page element without a lift");
            const LinearMap b = compose(g.map(n + 1, p + r, p + 2 * r, p + 1, p + r + 1), g.del(n, p, p + r, p + 2 * r));
            RatMatrix img = b.apply_rows(lifts->transpose());
            pg.d[s] = LinearMap(e.dim(), it->second.dim(), coords_in(it->second, img).transpose());
        }
        if (r == last && any) {
            for (const auto& [s, e] : spaces) {
                const int p = s.first, n = s.first + s.second;
                const LinearMap a = g.map(n, p, p + r, p - r + 1, p + 1);
                auto lifts = solve(a.matrix(), e.basis().transpose());
                if (!lifts)
                    throw std::logic_error("apply_T: limit element without a lift");
                const LinearMap to_h = g.map(n, p, so.hi, so.lo, so.hi);
                ss.limit[s] = LinearMap(e.dim(), to_h.target_dim(), to_h.apply_rows(lifts->transpose()).transpose());
            }
        }
        ss.pages.push_back(std::move(pg));
    }
    ss.abutment.column = Indexing::standard;
    if (any)
        for (int n = g.deg_lo; n <= g.deg_hi; ++n) {
            AbutmentDegree deg;
            deg.dim = g.dim(n, so.lo, so.hi);
            deg.start = so.lo;
            for (int p = so.lo; p < so.hi; ++p)
                deg.steps.push_back(image(g.map(n, p, so.hi, so.lo, so.hi)));
            ss.abutment.degrees[n] = std::move(deg);
        }
    return out;
}

FilteredComplex t_view(const TComplex& x)
{
    return truncation_filtration(x.c, x.tshift);
}

TComplex truncate_le(const TComplex& x, int a)
{
    return {truncate_le(x.c, a - x.tshift).sub.complex, x.tshift};
}

ChainMap truncation_inclusion(const TComplex& x, int a)
{
    return truncate_le(x.c, a - x.tshift).inclusion;
}

ShiftExactFunctor<TComplex> shift_functor(int d_prime)
{
    ShiftExactFunctor<TComplex> u;
    u.d = -d_prime;
    u.action = [d_prime](const TComplex& x) { return TComplex{x.c, x.tshift - d_prime}; };
    u.unit = [](const TComplex& x) { return ChainMap::identity(x.c); };
    u.truncation_comparison = [](const TComplex& x, int a) { return truncation_inclusion(x, a); };
    u.on_map = [](const TComplex&, const TComplex&, const ChainMap& f) { return f; };
    return u;
}

}  // namespace sseq
