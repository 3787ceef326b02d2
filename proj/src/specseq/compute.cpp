#include "sseq/specseq.hpp"

#include <map>
#include <tuple>

namespace sseq {

namespace {

// Z_r^p = F^p cap d^{-1}(F^{p+r}),  D_r^p = Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}, in degree n
class Cycles {
public:
    explicit Cycles(const FilteredComplex& fc) : fc_(fc) {}

    const Subspace& z(int r, int p, int n)
    {
        auto key = std::make_tuple(r, p, n);
        auto it = z_.find(key);
        if (it != z_.end())
            return it->second;
        const CochainComplex& c = fc_.total();
        Subspace v;
        if (p > fc_.type_hi())
            v = Subspace::zero(c.dim(n));
        else if (r == 0)
            v = fc_.step(p, n);
        else
            v = intersection(fc_.step(p, n), preimage(c.d(n), fc_.step(p + r, n + 1)));
        return z_.emplace(key, std::move(v)).first->second;
    }

    Subspace b(int r, int p, int n)
    {
        const CochainComplex& c = fc_.total();
        return sum(z(r - 1, p + 1, n), image(c.d(n - 1), z(r - 1, p - r + 1, n - 1)));
    }

private:
    const FilteredComplex& fc_;
    std::map<std::tuple<int, int, int>, Subspace> z_;
};

}  // namespace

SpectralSequence compute_ss(const FilteredComplex& fc)
{
    const CochainComplex& c = fc.total();
    const int a = fc.type_lo(), b = fc.type_hi();
    const int last = std::max(1, b - a + 1);
    Cycles cyc(fc);

    SpectralSequence ss;
    ss.indexing = Indexing::standard;
    for (int r = 1; r <= last; ++r) {
        Page pg;
        pg.r = r;
        std::map<Slot, Subquotient> reps;
        if (!c.empty())
            for (int p = a; p <= b; ++p)
                for (int n = c.lo(); n <= c.hi(); ++n) {
                    Subquotient q(cyc.z(r, p, n), cyc.b(r, p, n));
                    if (q.dim() == 0)
                        continue;
                    Slot s{p, n - p};
                    pg.dims[s] = q.dim();
                    reps.emplace(s, std::move(q));
                }
        for (const auto& [s, q] : reps) {
            auto t = reps.find(SpectralSequence::d_target(r, s));
            if (t == reps.end())
                continue;
            const int n = s.first + s.second;
            RatMatrix img = c.d(n).apply_rows(q.complement());
            pg.d[s] = LinearMap(q.dim(), t->second.dim(), t->second.coordinates(img).transpose());
        }
        ss.pages.push_back(std::move(pg));
        ss.reps.push_back(std::move(reps));
    }
    for (std::size_t k = 0; k + 1 < ss.pages.size(); ++k) {
        std::map<Slot, LinearMap> pass;
        for (const auto& [s, q] : ss.reps[k + 1]) {
            const Subquotient& lower = ss.reps[k].at(s);
            pass[s] = LinearMap(q.dim(), lower.dim(), lower.coordinates(q.complement()).transpose());
        }
        ss.passages.push_back(std::move(pass));
    }

    ss.abutment.column = Indexing::standard;
    if (!c.empty())
        for (int n = c.lo(); n <= c.hi(); ++n) {
            Cohomology h = cohomology(c, n);
            AbutmentDegree deg;
            deg.dim = h.dim();
            deg.start = a;
            for (int p = a; p <= b; ++p) {
                Subspace cyc_p = intersection(fc.step(p, n), h.cocycles);
                deg.steps.push_back(Subspace::span(h.dim(), h.classes.coordinates(cyc_p.basis())));
            }
            ss.abutment.degrees[n] = std::move(deg);
        }
    for (const auto& [s, q] : ss.reps.back()) {
        const int n = s.first + s.second;
        Cohomology h = cohomology(c, n);
        ss.limit[s] = LinearMap(q.dim(), h.dim(), h.classes.coordinates(q.complement()).transpose());
    }
    return ss;
}

Report shift_compat_check(const FilteredComplex& fc, int d)
{
    Report rep;
    SpectralSequence base = compute_ss(fc);
    SpectralSequence shifted = compute_ss(shift_filtered(fc, d));
    const CochainComplex& c = fc.total();
    if (c.empty())
        return rep;
    const int plo = std::min(fc.type_lo(), fc.type_lo() + d) - 1;
    const int phi = std::max(fc.type_hi(), fc.type_hi() + d) + 1;
    for (int u = c.lo() - d; u <= c.hi() - d; ++u)
        for (int p = plo; p <= phi; ++p) {
            auto tag = "(p=" + std::to_string(p) + ", u=" + std::to_string(u) + ")";
            if (!(shifted.abutment.F(u, p) == base.abutment.F(u + d, p - d)))
                rep.fail("F^p T^u(X[d]) != F^{p-d} T^{u+d}(X) at " + tag);
            if (!(shifted.abutment.L(u, p) == base.abutment.L(u + d, p)))
                rep.fail("L^p T^u(X[d]) != L^p T^{u+d}(X) at " + tag);
        }
    return rep;
}

}  // namespace sseq
