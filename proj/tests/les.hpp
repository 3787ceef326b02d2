#pragma once

// Long exact sequence of 0 -> A -> B -> C -> 0, where A is a subcomplex of B and
// C the quotient by a (possibly different) subcomplex; the connecting map is
// computed by lifting along the section.

#include "sseq/homalg.hpp"

#include <string>
#include <vector>

namespace les {

using namespace sseq;

inline LinearMap connecting(const Subcomplex& a, const QuotientComplex& c, int n)
{
    const CochainComplex& b = a.inclusion.target();
    Cohomology hc = cohomology(c.quot.complex, n);
    Cohomology ha = cohomology(a.sub.complex, n + 1);
    if (hc.dim() == 0 || ha.dim() == 0)
        return LinearMap::zero(hc.dim(), ha.dim());
    RatMatrix lifted = c.quot.section(n).apply_rows(hc.classes.complement());
    RatMatrix db = b.d(n).apply_rows(lifted);
    RatMatrix in_a = a.sub.pieces.at(n + 1).coordinates(db);
    return LinearMap(hc.dim(), ha.dim(), ha.classes.coordinates(in_a).transpose());
}

// empty on success, otherwise the places where exactness fails
inline std::vector<std::string> check(const Subcomplex& a, const QuotientComplex& c)
{
    std::vector<std::string> bad;
    const CochainComplex& b = a.inclusion.target();
    if (b.empty())
        return bad;
    ChainMap g = compose(c.projection, a.inclusion);
    for (int n = b.lo(); n <= b.hi(); ++n)
        if (!cohomology_map(g, n).is_zero())
            bad.push_back("composite is not zero in degree " + std::to_string(n));
    for (int n = b.lo() - 1; n <= b.hi() + 1; ++n) {
        LinearMap i = cohomology_map(a.inclusion, n);
        LinearMap p = cohomology_map(c.projection, n);
        LinearMap delta = connecting(a, c, n);
        LinearMap prev = connecting(a, c, n - 1);
        if (!exact_at(prev, i))
            bad.push_back("not exact at H(A) in degree " + std::to_string(n));
        if (!exact_at(i, p))
            bad.push_back("not exact at H(B) in degree " + std::to_string(n));
        if (!exact_at(p, delta))
            bad.push_back("not exact at H(C) in degree " + std::to_string(n));
    }
    return bad;
}

}  // namespace les
