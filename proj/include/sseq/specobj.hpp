#pragma once

#include "sseq/specseq.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace sseq {

// Spectral object with indices in [lo, hi]; X_{pq} for lo <= p <= q <= hi. Indices
// outside the range are clamped, so X_{p,hi} plays the role of X_{p,infinity}.
struct SpectralObject {
    int lo = 0;
    int hi = 0;
    std::map<std::pair<int, int>, CochainComplex> objects;
    // (p,q,p',q') with p' <= p, q' <= q: X_{pq} -> X_{p'q'}
    std::map<std::tuple<int, int, int, int>, ChainMap> structure;
    // (p,q,r): X_{pq} -> X_{qr}[1]
    std::map<std::tuple<int, int, int>, ChainMap> boundary;

    int amplitude_lo() const { return lo; }
    int amplitude_hi() const { return hi - 1; }
    std::pair<int, int> clamp(int p, int q) const;
    const CochainComplex& X(int p, int q) const;
    const ChainMap& map(int p, int q, int p2, int q2) const;
    const ChainMap& del(int p, int q, int r) const;
};

// X_{pq} = F^p / F^q, d-boundary from the canonical splitting of F^q/F^r -> F^p/F^r -> F^p/F^q.
SpectralObject so_from_filtered(const FilteredComplex& fc);
// Bi-truncations tau_{>=-q+1} tau_{<=-p} c, modelled by the truncation filtration.
SpectralObject so_from_truncation(const CochainComplex& c, int tshift = 0);
SpectralObject translate_so(const SpectralObject& so, int l);

Report check_axioms(const SpectralObject& so);

// T^n = H^n applied to every object, map and boundary.
struct GradedSpectralObject {
    int lo = 0;
    int hi = 0;
    int deg_lo = 0;
    int deg_hi = -1;
    std::map<std::tuple<int, int, int>, Cohomology> objects;  // (n, p, q)
    std::map<std::tuple<int, int, int, int, int>, LinearMap> maps;  // (n, p, q, p', q')
    std::map<std::tuple<int, int, int, int>, LinearMap> boundary;   // (n, p, q, r): T^n X_pq -> T^{n+1} X_qr

    std::size_t dim(int n, int p, int q) const;
    LinearMap map(int n, int p, int q, int p2, int q2) const;
    LinearMap del(int n, int p, int q, int r) const;
};

struct AppliedT {
    GradedSpectralObject gso;
    SpectralSequence ss;  // E_1 onwards with abutment
};

AppliedT apply_T(const SpectralObject& so);
// exactness of ... -> T^n X_qr -> T^n X_pr -> T^n X_pq -> T^{n+1} X_qr -> ...
Report check_long_exact(const GradedSpectralObject& gso);

// Complex together with a uniformly shifted standard t-structure: tau'_{<=a} = tau_{<=a-tshift}.
struct TComplex {
    CochainComplex c;
    int tshift = 0;
};

FilteredComplex t_view(const TComplex& x);
TComplex truncate_le(const TComplex& x, int a);
ChainMap truncation_inclusion(const TComplex& x, int a);

// Functor that is t-exact up to the shift d, with explicit witnesses:
//   unit(X): t_view(X).total -> t_view(action X).total
//   truncation_comparison(X, a): t_view(action(tau_{<=a} X)).total -> t_view(action X).total
//   on_map(X, Y, f): action on a map f: t_view(X).total -> t_view(Y).total
template <class Obj>
struct ShiftExactFunctor {
    int d = 0;
    std::function<Obj(const Obj&)> action;
    std::function<ChainMap(const Obj&)> unit;
    std::function<ChainMap(const Obj&, int)> truncation_comparison;
    std::function<ChainMap(const Obj&, const Obj&, const ChainMap&)> on_map;
};

// The shift [d'] acting on the t-structure only; d = -d'.
ShiftExactFunctor<TComplex> shift_functor(int d_prime);

class RealignError : public std::runtime_error {
public:
    RealignError(const std::string& what, int level) : std::runtime_error(what), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

namespace detail {

inline std::pair<int, int> truncation_levels(const FilteredComplex& f)
{
    return {-f.type_hi() - 1, -f.type_lo() + 1};
}

inline bool cohomology_iso_onto(const ChainMap& c, const FilteredComplex& g, int step)
{
    const CochainComplex& tgt = c.target();
    Subcomplex sub = subcomplex(tgt, g.step_fn(step));
    const CochainComplex& src = c.source();
    const int lo = std::min(src.lo(), tgt.lo()) - 1, hi = std::max(src.hi(), tgt.hi()) + 1;
    std::map<int, LinearMap> comp;
    for (int n = lo; n <= hi; ++n) {
        if (!g.step(step, n).contains(image(c.at(n))))
            return false;
        auto it = sub.sub.pieces.find(n);
        if (it == sub.sub.pieces.end())
            continue;
        RatMatrix img = c.at(n).matrix().transpose();
        comp[n] = LinearMap(src.dim(n), it->second.dim(), it->second.coordinates(img).transpose());
    }
    ChainMap factored(src, sub.sub.complex, std::move(comp));
    for (int n = lo; n <= hi; ++n)
        if (!cohomology_map(factored, n).is_iso())
            return false;
    return true;
}

}  // namespace detail

template <class Obj>
Report check_shift_exact(const ShiftExactFunctor<Obj>& u, const Obj& x)
{
    Report rep;
    const FilteredComplex fx = t_view(x);
    const Obj ux = u.action(x);
    const FilteredComplex fu = t_view(ux);
    const ChainMap unit = u.unit(x);
    auto [alo, ahi] = detail::truncation_levels(fx);
    for (int a = alo; a <= ahi; ++a) {
        const std::string at = " at truncation level a=" + std::to_string(a);
        const ChainMap ca = u.truncation_comparison(x, a);
        if (!detail::cohomology_iso_onto(ca, fu, -(a + u.d)))
            rep.fail("t-exactness witness fails" + at);
        const Obj xa = truncate_le(x, a);
        const ChainMap ia = truncation_inclusion(x, a);
        const ChainMap left = compose(unit, ia);
        const ChainMap right = compose(ca, u.unit(xa));
        const CochainComplex& src = left.source();
        if (!src.empty())
            for (int n = src.lo(); n <= src.hi(); ++n)
                if (cohomology_map(left, n) != cohomology_map(right, n)) {
                    rep.fail("unit is not natural" + at + ", degree " + std::to_string(n));
                    break;
                }
    }
    try {
        require_filtered(unit, fx, translate_filtration(fu, -u.d));
    } catch (const std::invalid_argument& e) {
        rep.fail(std::string("unit does not shift the filtration by d: ") + e.what());
    }
    return rep;
}

// The morphism E_1(T(X)) -> E_1(T(uX))(-d): the functorial map with the target reindexed by the shift.
template <class Obj>
SSMorphism realign(const ShiftExactFunctor<Obj>& u, const Obj& x)
{
    Report rep = check_shift_exact(u, x);
    if (!rep.ok) {
        const std::string& msg = rep.violations.front();
        int level = 0;
        auto pos = msg.find("a=");
        if (pos != std::string::npos)
            level = std::stoi(msg.substr(pos + 2));
        throw RealignError(msg, level);
    }
    return induced_map(u.unit(x), t_view(x), translate_filtration(t_view(u.action(x)), -u.d));
}

// Plain functoriality E_1(T(X)) -> E_1(T(uX)), without moving the target.
template <class Obj>
SSMorphism functorial_map(const ShiftExactFunctor<Obj>& u, const Obj& x)
{
    return induced_map(u.unit(x), t_view(x), t_view(u.action(x)));
}

template <class Obj>
ShiftExactFunctor<Obj> compose(const ShiftExactFunctor<Obj>& u2, const ShiftExactFunctor<Obj>& u1)
{
    ShiftExactFunctor<Obj> c;
    c.d = u1.d + u2.d;
    c.action = [u1, u2](const Obj& x) { return u2.action(u1.action(x)); };
    c.unit = [u1, u2](const Obj& x) { return compose(u2.unit(u1.action(x)), u1.unit(x)); };
    c.truncation_comparison = [u1, u2](const Obj& x, int a) {
        const Obj y = u1.action(truncate_le(x, a));
        const Obj ux = u1.action(x);
        return u2.on_map(y, ux, u1.truncation_comparison(x, a));
    };
    c.on_map = [u1, u2](const Obj& x, const Obj& y, const ChainMap& f) {
        return u2.on_map(u1.action(x), u1.action(y), u1.on_map(x, y, f));
    };
    return c;
}

}  // namespace sseq
