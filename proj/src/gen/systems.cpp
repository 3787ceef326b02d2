#include "sseq/gen.hpp"

namespace sseq::gen {

namespace {

using Dims = std::map<std::pair<int, int>, std::size_t>;  // (p, u) -> size

struct GradedMember {
    Dims dims;
    FilteredComplex fc;
};

// offset of block (p, u) inside degree u
std::size_t block_offset(const Dims& dims, int p, int u)
{
    std::size_t off = 0;
    for (const auto& [pu, k] : dims)
        if (pu.second == u && pu.first < p)
            off += k;
    return off;
}

// filtered map between graded members; diag(s, rows, cols) gives the block on column s
ChainMap graded_map(Rng& rng, const GradedMember& src, const GradedMember& tgt,
                    const std::function<RatMatrix(int, std::size_t, std::size_t)>& diag)
{
    const CochainComplex& s = src.fc.total();
    const CochainComplex& t = tgt.fc.total();
    std::map<int, LinearMap> comp;
    if (s.empty() || t.empty())
        return ChainMap(s, t, {});
    for (int u = std::max(s.lo(), t.lo()); u <= std::min(s.hi(), t.hi()); ++u) {
        RatMatrix m(t.dim(u), s.dim(u));
        for (const auto& [pu, ks] : src.dims) {
            if (pu.second != u || ks == 0)
                continue;
            const int p = pu.first;
            for (const auto& [pu2, kt] : tgt.dims) {
                if (pu2.second != u || pu2.first < p || kt == 0)
                    continue;
                // column s = u + p in the renumbered picture
                RatMatrix b = pu2.first == p ? diag(u + p, kt, ks) : random_matrix(rng, kt, ks, 2, 0.4);
                m.set_block(block_offset(tgt.dims, pu2.first, u), block_offset(src.dims, p, u), b);
            }
        }
        comp[u] = LinearMap(s.dim(u), t.dim(u), std::move(m));
    }
    return ChainMap(s, t, std::move(comp));
}

std::size_t at(const std::map<int, std::size_t>& col, int t)
{
    auto it = col.find(t);
    return it == col.end() ? 0 : it->second;
}

SSSystem assemble(int n, int variant, const std::vector<FilteredComplex>& fcs, const std::vector<ChainMap>& maps)
{
    SSSystem sys;
    sys.variant = variant;
    sys.n = n;
    std::vector<SSPtr> standard;
    for (const auto& fc : fcs) {
        standard.push_back(std::make_shared<const SpectralSequence>(compute_ss(fc)));
        sys.members.push_back(std::make_shared<const SpectralSequence>(renumber(*standard.back())));
    }
    for (std::size_t k = 0; k < maps.size(); ++k) {
        // variant 1: E_{-k} -> E_{-k-1}; variant 2: E_{k+1} -> E_k
        const std::size_t from = variant == 1 ? k : k + 1;
        const std::size_t to = variant == 1 ? k + 1 : k;
        SSMorphism m = renumber(induced_map(maps[k], fcs[from], fcs[to], standard[from], standard[to]));
        m.source = sys.members[from];
        m.target = sys.members[to];
        sys.maps.push_back(std::move(m));
    }
    return sys;
}

// E_2-degenerate system: zero differentials, column maps iso / monic (or iso / epic) by construction
SSSystem degenerate_system(Rng& rng, int n, int variant)
{
    const int t_lo = uniform(rng, -1, 1);
    const int t_hi = t_lo + uniform(rng, 0, 1);
    // cols[i][s][t]: dims of calE_2^{s,t} of member i
    using Cols = std::map<int, std::map<int, std::size_t>>;
    std::vector<Cols> cols(static_cast<std::size_t>(n + 1));
    auto rand_col = [&](Cols& c, int s) {
        for (int t = t_lo; t <= t_hi; ++t)
            c[s][t] = static_cast<std::size_t>(uniform(rng, 0, 2));
    };
    if (variant == 1) {
        for (int s = -n; s <= 0; ++s)
            rand_col(cols[0], s);
        for (int i = 0; i < n; ++i) {
            Cols& next = cols[static_cast<std::size_t>(i + 1)];
            const Cols& cur = cols[static_cast<std::size_t>(i)];
            for (int s = -n; s <= -i - 2; ++s)
                next[s] = cur.count(s) ? cur.at(s) : std::map<int, std::size_t>{};
            for (int t = t_lo; t <= t_hi; ++t)
                next[-i - 1][t] = at(cur.count(-i - 1) ? cur.at(-i - 1) : std::map<int, std::size_t>{}, t) +
                                  static_cast<std::size_t>(uniform(rng, 0, 1));
        }
    } else {
        // built from E_n down to E_0
        for (int s = n; s <= n; ++s)
            rand_col(cols[static_cast<std::size_t>(n)], s);
        for (int i = n; i >= 1; --i) {
            Cols& next = cols[static_cast<std::size_t>(i - 1)];
            const Cols& cur = cols[static_cast<std::size_t>(i)];
            for (int s = i + 1; s <= n; ++s)
                next[s] = cur.count(s) ? cur.at(s) : std::map<int, std::size_t>{};
            for (int t = t_lo; t <= t_hi; ++t) {
                const std::size_t c = at(cur.count(i) ? cur.at(i) : std::map<int, std::size_t>{}, t);
                next[i][t] = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(c)));
            }
            rand_col(next, i - 1);
        }
    }
    std::vector<GradedMember> members;
    std::vector<FilteredComplex> fcs;
    for (const Cols& c : cols) {
        Dims d;
        for (const auto& [s, col] : c)
            for (const auto& [t, k] : col)
                if (k > 0)
                    d[{-t, s + t}] = k;
        FilteredComplex fc = graded_filtered(d, -t_hi, -t_lo);
        members.push_back({d, fc});
        fcs.push_back(fc);
    }
    std::vector<ChainMap> maps;
    for (int k = 0; k < n; ++k) {
        if (variant == 1) {
            const int i = k;
            maps.push_back(graded_map(rng, members[static_cast<std::size_t>(k)], members[static_cast<std::size_t>(k + 1)],
                                      [&](int s, std::size_t rows, std::size_t c) {
                                          if (s <= -i - 2)
                                              return random_unimodular(rng, rows);
                                          if (s == -i - 1)
                                              return random_injective(rng, rows, c);
                                          return RatMatrix(rows, c);
                                      }));
        } else {
            const int i = k + 1;
            maps.push_back(graded_map(rng, members[static_cast<std::size_t>(k + 1)], members[static_cast<std::size_t>(k)],
                                      [&](int s, std::size_t rows, std::size_t c) {
                                          if (s >= i + 1)
                                              return random_unimodular(rng, rows);
                                          if (s == i)
                                              return random_surjective(rng, rows, c);
                                          return random_matrix(rng, rows, c);
                                      }));
        }
    }
    return assemble(n, variant, fcs, maps);
}

CellSet skeleton(const FacePoset& y, int k)
{
    CellSet s = y.none();
    for (CellId c = 0; c < y.size(); ++c)
        s[c] = y.dim(c) <= k;
    return s;
}

// restriction to the skeleta Y_{-i} of dimension n-i, sometimes losing a top cell
SSSystem skeleton_system(Rng& rng, int n)
{
    const FacePoset y = random_simplicial(rng, uniform(rng, n + 1, n + 2), n);
    const SheafComplex k =
        uniform(rng, 0, 3) != 0 ? random_twisted_complex(rng, y)
                                : random_sheaf_complex(rng, y, 0, uniform(rng, 1, 2), 2);
    std::vector<SheafComplex> ks{k};
    std::vector<CellSet> cuts;
    std::bernoulli_distribution drop(0.25);
    for (int i = 0; i < n; ++i) {
        const FacePoset& cur = *ks.back().base();
        CellSet z = skeleton(cur, n - i - 1);
        if (drop(rng)) {
            std::vector<CellId> top;
            for (CellId c = 0; c < cur.size(); ++c)
                if (z[c] && cur.dim(c) == n - i - 1)
                    top.push_back(c);
            if (!top.empty())
                z[top[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(top.size()) - 1))]] = false;
        }
        cuts.push_back(z);
        ks.push_back(restrict(ks.back(), z));
    }
    std::vector<FlatComplex> flats;
    std::vector<FilteredComplex> fcs;
    for (const auto& ki : ks) {
        flats.push_back(flatten(ki, CochainModel::cellular));
        fcs.push_back(truncation_filtered_complex(flats.back(), ki, n));
    }
    std::vector<ChainMap> maps;
    for (int i = 0; i < n; ++i)
        maps.push_back(restriction_chain_map(flats[static_cast<std::size_t>(i)], flats[static_cast<std::size_t>(i + 1)],
                                             cuts[static_cast<std::size_t>(i)]));
    return assemble(n, 1, fcs, maps);
}

// K_{U_i} for the open sets U_i of cells of dimension >= i, sometimes missing a cell of dimension i
SSSystem open_system(Rng& rng, int n)
{
    const FacePoset y = random_simplicial(rng, uniform(rng, n + 1, n + 2), n);
    const SheafComplex k =
        uniform(rng, 0, 3) != 0 ? random_twisted_complex(rng, y)
                                : random_sheaf_complex(rng, y, 0, uniform(rng, 1, 2), 2);
    std::bernoulli_distribution drop(0.25);
    std::vector<SheafComplex> ks;
    for (int i = 0; i <= n; ++i) {
        CellSet u = y.none();
        for (CellId c = 0; c < y.size(); ++c)
            u[c] = y.dim(c) >= i;
        if (i > 0 && drop(rng)) {
            std::vector<CellId> low;
            for (CellId c = 0; c < y.size(); ++c)
                if (y.dim(c) == i)
                    low.push_back(c);
            if (!low.empty())
                u[low[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(low.size()) - 1))]] = false;
        }
        ks.push_back(i == 0 ? k : extend_by_zero(k, u));
    }
    std::vector<FlatComplex> flats;
    std::vector<FilteredComplex> fcs;
    for (const auto& ki : ks) {
        flats.push_back(flatten(ki, CochainModel::cellular));
        fcs.push_back(truncation_filtered_complex(flats.back(), ki, 0));
    }
    std::vector<ChainMap> maps;
    for (int i = 0; i < n; ++i) {
        // inclusion K_{U_{i+1}} -> K_{U_i}
        const SheafComplex& s = ks[static_cast<std::size_t>(i + 1)];
        const SheafComplex& t = ks[static_cast<std::size_t>(i)];
        SheafComplexMap f{s, t, {}};
        if (!s.empty())
            for (int d = s.lo(); d <= s.hi(); ++d) {
                std::vector<LinearMap> stalk;
                for (CellId c = 0; c < y.size(); ++c) {
                    const std::size_t a = s.term(d).stalk(c), b = t.term(d).stalk(c);
                    stalk.push_back(a == 0 ? LinearMap::zero(0, b) : LinearMap::identity(a));
                }
                f.components.emplace(d, SheafMap(s.term(d), t.term(d), std::move(stalk)));
            }
        maps.push_back(flatten_map(f, flats[static_cast<std::size_t>(i + 1)], flats[static_cast<std::size_t>(i)]));
    }
    return assemble(n, 2, fcs, maps);
}

}  // namespace

SSSystem make_system(std::uint64_t seed, int n, int variant, bool degenerate, int max_retries)
{
    if (n < 0)
        throw std::invalid_argument("make_system needs n >= 0");
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("make_system variant must be 1 or 2");
    for (int k = 0; k < max_retries; ++k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        SSSystem sys = degenerate ? degenerate_system(rng, n, variant)
                                  : (variant == 1 ? skeleton_system(rng, n) : open_system(rng, n));
        if (verify_descrfiltr(sys, variant).hypotheses_hold)
            return sys;
    }
    throw GenerationExhausted("no system satisfying the hypotheses after " + std::to_string(max_retries) +
                              " attempts (seed " + std::to_string(seed) + ")");
}

SSMorphism random_ssis(std::uint64_t seed, int variant)
{
    const int n = 1 + static_cast<int>(seed % 3);
    SSSystem sys = make_system(seed, n, variant, seed % 2 == 1);
    return sys.maps.front();
}

}  // namespace sseq::gen
