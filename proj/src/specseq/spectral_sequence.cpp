#include "sseq/specseq.hpp"

#include <algorithm>

namespace sseq {

std::size_t Page::dim(Slot s) const
{
    auto it = dims.find(s);
    return it == dims.end() ? 0 : it->second;
}

long Page::euler() const
{
    long e = 0;
    for (const auto& [s, n] : dims)
        e += ((s.first + s.second) % 2 == 0 ? 1 : -1) * static_cast<long>(n);
    return e;
}

Subspace AbutmentDegree::F(int p) const
{
    if (p <= start)
        return Subspace::full(dim);
    const auto k = static_cast<std::size_t>(p - start);
    if (k >= steps.size())
        return Subspace::zero(dim);
    return steps[k];
}

std::size_t Abutment::dim(int u) const
{
    auto it = degrees.find(u);
    return it == degrees.end() ? 0 : it->second.dim;
}

Subspace Abutment::F(int u, int p) const
{
    auto it = degrees.find(u);
    if (it == degrees.end())
        return Subspace::zero(0);
    return it->second.F(p);
}

std::size_t Abutment::graded_dim(int u, int c) const
{
    return column_step(u, c).dim() - column_step(u, c + 1).dim();
}

int Abutment::lo_step(int u) const
{
    auto it = degrees.find(u);
    if (it == degrees.end())
        return 0;
    return column == Indexing::standard ? it->second.start : it->second.start + u;
}

int Abutment::hi_step(int u) const
{
    auto it = degrees.find(u);
    if (it == degrees.end())
        return 0;
    return lo_step(u) + static_cast<int>(it->second.steps.size());
}

const Page& SpectralSequence::page(int r) const
{
    if (pages.empty())
        throw std::logic_error("spectral sequence has no pages");
    if (r < first_page())
        throw std::out_of_range("page " + std::to_string(r) + " precedes the first page");
    if (r >= last_page())
        return pages.back();
    return pages[static_cast<std::size_t>(r - first_page())];
}

LinearMap SpectralSequence::d(int r, Slot s) const
{
    const Page& pg = page(r);
    auto it = pg.d.find(s);
    if (it != pg.d.end() && r <= last_page())
        return it->second;
    return LinearMap::zero(dim(r, s), dim(r, d_target(r, s)));
}

LinearMap SpectralSequence::passage(int r, Slot s) const
{
    if (r >= last_page())
        return LinearMap::identity(dim(r, s));
    const auto k = static_cast<std::size_t>(r - first_page());
    if (k < passages.size()) {
        auto it = passages[k].find(s);
        if (it != passages[k].end())
            return it->second;
    }
    return LinearMap::zero(dim(r + 1, s), dim(r, s));
}

int SpectralSequence::turning_page() const
{
    int t = first_page();
    for (const auto& pg : pages)
        for (const auto& [s, m] : pg.d)
            if (!m.is_zero())
                t = std::max(t, pg.r + 1);
    return t;
}

bool SpectralSequence::is_zero() const
{
    for (const auto& pg : pages)
        if (!pg.dims.empty())
            return false;
    return true;
}

namespace {

template <class F>
SpectralSequence reindex(const SpectralSequence& ss, F slot_map, int page_shift, Indexing indexing)
{
    SpectralSequence out;
    out.indexing = indexing;
    for (const auto& pg : ss.pages) {
        Page np;
        np.r = pg.r + page_shift;
        for (const auto& [s, n] : pg.dims)
            np.dims[slot_map(s)] = n;
        for (const auto& [s, m] : pg.d)
            np.d[slot_map(s)] = m;
        out.pages.push_back(std::move(np));
    }
    for (const auto& ps : ss.passages) {
        std::map<Slot, LinearMap> m;
        for (const auto& [s, f] : ps)
            m[slot_map(s)] = f;
        out.passages.push_back(std::move(m));
    }
    for (const auto& rs : ss.reps) {
        std::map<Slot, Subquotient> m;
        for (const auto& [s, q] : rs)
            m.emplace(slot_map(s), q);
        out.reps.push_back(std::move(m));
    }
    for (const auto& [s, f] : ss.limit)
        out.limit[slot_map(s)] = f;
    out.abutment = ss.abutment;
    out.abutment.column = indexing;
    return out;
}

}  // namespace

SpectralSequence renumber(const SpectralSequence& ss)
{
    if (ss.indexing != Indexing::standard)
        throw std::invalid_argument("renumber: sequence is already renumbered");
    return reindex(ss, [](Slot s) { return Slot{s.second + 2 * s.first, -s.first}; }, 1, Indexing::renumbered);
}

SpectralSequence unrenumber(const SpectralSequence& ss)
{
    if (ss.indexing != Indexing::renumbered)
        throw std::invalid_argument("unrenumber: sequence is in standard indexing");
    return reindex(ss, [](Slot s) { return Slot{-s.second, s.first + 2 * s.second}; }, -1, Indexing::standard);
}

SpectralSequence translate(const SpectralSequence& ss, int l)
{
    SpectralSequence out =
        reindex(ss, [l](Slot s) { return Slot{s.first - l, s.second + l}; }, 0, ss.indexing);
    for (auto& [u, deg] : out.abutment.degrees)
        deg.start -= l;
    return out;
}

bool same_data(const SpectralSequence& a, const SpectralSequence& b)
{
    if (a.indexing != b.indexing || a.pages.size() != b.pages.size())
        return false;
    for (std::size_t k = 0; k < a.pages.size(); ++k)
        if (a.pages[k].r != b.pages[k].r || a.pages[k].dims != b.pages[k].dims || a.pages[k].d != b.pages[k].d)
            return false;
    if (a.passages != b.passages || a.limit != b.limit)
        return false;
    if (a.abutment.degrees.size() != b.abutment.degrees.size())
        return false;
    for (const auto& [u, da] : a.abutment.degrees) {
        auto it = b.abutment.degrees.find(u);
        if (it == b.abutment.degrees.end())
            return false;
        const auto& db = it->second;
        if (da.dim != db.dim || da.start != db.start || da.steps != db.steps)
            return false;
    }
    if (a.reps.size() != b.reps.size())
        return false;
    for (std::size_t k = 0; k < a.reps.size(); ++k) {
        if (a.reps[k].size() != b.reps[k].size())
            return false;
        for (const auto& [s, q] : a.reps[k]) {
            auto it = b.reps[k].find(s);
            if (it == b.reps[k].end() || !(it->second.numerator() == q.numerator()) ||
                !(it->second.denominator() == q.denominator()))
                return false;
        }
    }
    return true;
}

std::vector<std::string> check_invariants(const SpectralSequence& ss)
{
    std::vector<std::string> bad;
    auto where = [](int r, Slot s) {
        return "page " + std::to_string(r) + " slot (" + std::to_string(s.first) + "," + std::to_string(s.second) +
               ")";
    };
    if (ss.pages.empty())
        return {"no pages"};
    const long chi = ss.pages.front().euler();
    for (std::size_t k = 0; k < ss.pages.size(); ++k) {
        const Page& pg = ss.pages[k];
        const int r = pg.r;
        if (pg.euler() != chi)
            bad.push_back("Euler characteristic changes on page " + std::to_string(r));
        for (const auto& [s, n] : pg.dims) {
            LinearMap out = ss.d(r, s);
            LinearMap in = ss.d(r, SpectralSequence::d_source(r, s));
            if (!compose(ss.d(r, SpectralSequence::d_target(r, s)), out).is_zero())
                bad.push_back("d_r^2 != 0 at " + where(r, s));
            if (k + 1 == ss.pages.size()) {
                if (!out.is_zero())
                    bad.push_back("nonzero differential on the limit page at " + where(r, s));
                continue;
            }
            const std::size_t next = ss.pages[k + 1].dim(s);
            const std::size_t homology = n - out.rank() - in.rank();
            if (next != homology)
                bad.push_back("page passage fails at " + where(r, s));
            if (k < ss.passages.size() && next > 0) {
                LinearMap p = ss.passage(r, s);
                if (!compose(out, p).is_zero())
                    bad.push_back("passage leaves ker d_r at " + where(r, s));
                Subspace both = sum(image(p), image(in));
                if (both.dim() != next + in.rank())
                    bad.push_back("passage is not injective modulo im d_r at " + where(r, s));
            }
        }
    }
    const Page& inf = ss.infinity();
    const Abutment& ab = ss.abutment;
    for (const auto& [u, deg] : ab.degrees) {
        for (int c = ab.lo_step(u) - 1; c <= ab.hi_step(u) + 1; ++c) {
            Slot s{c, u - c};
            if (ab.graded_dim(u, c) != inf.dim(s))
                bad.push_back("E_infinity does not match the graded abutment at " + where(inf.r, s));
        }
    }
    for (const auto& [s, n] : inf.dims) {
        const int u = s.first + s.second;
        if (ab.dim(u) == 0 && n > 0) {
            bad.push_back("E_infinity slot without abutment at " + where(inf.r, s));
            continue;
        }
        auto it = ss.limit.find(s);
        if (it == ss.limit.end())
            continue;
        Subspace img = image(it->second);
        Subspace here = ab.column_step(u, s.first), next = ab.column_step(u, s.first + 1);
        if (!here.contains(img) || sum(img, next).dim() != n + next.dim())
            bad.push_back("limit identification fails at " + where(inf.r, s));
    }
    return bad;
}

std::string to_string(PippaCase c)
{
    switch (c) {
    case PippaCase::hypotheses_fail:
        return "hypotheses-fail";
    case PippaCase::monic:
        return "monic";
    case PippaCase::epic:
        return "epic";
    case PippaCase::both:
        return "monic+epic";
    }
    return "?";
}

}  // namespace sseq
