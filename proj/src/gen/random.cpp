#include "sseq/gen.hpp"

#include <algorithm>
#include <set>

namespace sseq::gen {

namespace {

Subspace rows_with(const RatMatrix& basis, const std::vector<int>& weight, int p)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (weight[i] >= p)
            idx.push_back(i);
    return Subspace::span(basis.cols(), basis.select_rows(idx));
}

// (A 0; 0 B) on row spaces
Subspace direct_sum(const Subspace& a, const Subspace& b)
{
    RatMatrix m(a.dim() + b.dim(), a.ambient_dim() + b.ambient_dim());
    m.set_block(0, 0, a.basis());
    m.set_block(a.dim(), a.ambient_dim(), b.basis());
    return Subspace::span(a.ambient_dim() + b.ambient_dim(), m);
}

// maps from v -> w, expressed after changes of basis g_v, g_w
LinearMap conjugate(const LinearMap& f, const RatMatrix& gs, const RatMatrix& gt)
{
    return LinearMap(f.source_dim(), f.target_dim(), gt * f.matrix() * inverse(gs));
}

CellSet down_closure(const FacePoset& y, CellSet s)
{
    for (bool grew = true; grew;) {
        grew = false;
        for (CellId c = 0; c < y.size(); ++c)
            if (s[c])
                for (CellId f : y.down(c))
                    if (!s[f]) {
                        s[f] = true;
                        grew = true;
                    }
    }
    return s;
}

// cells ordered so that faces come before cofaces
std::vector<CellId> by_dimension(const FacePoset& y)
{
    std::vector<CellId> order(y.size());
    for (CellId c = 0; c < y.size(); ++c)
        order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](CellId a, CellId b) { return y.dim(a) < y.dim(b); });
    return order;
}

// random subspaces W_c of Q^m, growing along the order, containing extra[c]
std::vector<Subspace> growing_family(Rng& rng, const FacePoset& y, std::size_t m, const std::vector<Subspace>& extra)
{
    std::vector<Subspace> w(y.size(), Subspace::zero(m));
    std::bernoulli_distribution add(0.35);
    for (CellId c : by_dimension(y)) {
        Subspace s = extra.empty() ? Subspace::zero(m) : extra[c];
        for (CellId f : y.down(c))
            s = sum(s, w[f]);
        if (add(rng))
            s = sum(s, Subspace::span(m, random_matrix(rng, 1, m)));
        w[c] = s;
    }
    return w;
}

// restriction maps of the quotient sheaf Q^m / W
std::map<std::pair<CellId, CellId>, LinearMap> quotient_restrictions(const FacePoset& y,
                                                                     const std::vector<Subquotient>& q)
{
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    for (const Cover& cv : y.covers()) {
        const Subquotient& a = q[cv.face];
        const Subquotient& b = q[cv.cell];
        RatMatrix m = a.dim() == 0 ? RatMatrix(b.dim(), 0) : b.coordinates(a.complement()).transpose();
        res.emplace(std::make_pair(cv.face, cv.cell), LinearMap(a.dim(), b.dim(), std::move(m)));
    }
    return res;
}

}  // namespace

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound, double density)
{
    std::uniform_int_distribution<int> val(-bound, bound);
    std::bernoulli_distribution keep(density);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng))
                m(i, j) = val(rng);
    return m;
}

RatMatrix random_unimodular(Rng& rng, std::size_t n)
{
    // product of a unit lower and a unit upper triangular integer matrix, rows permuted
    RatMatrix lower = RatMatrix::identity(n), upper = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = uniform(rng, -1, 1);
            upper(j, i) = uniform(rng, -1, 1);
        }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return (lower * upper).select_rows(perm);
}

RatMatrix random_injective(Rng& rng, std::size_t rows, std::size_t cols)
{
    if (cols > rows)
        throw std::invalid_argument("no injective map into a smaller space");
    RatMatrix m(rows, cols);
    m.set_block(0, 0, RatMatrix::identity(cols));
    m.set_block(cols, 0, random_matrix(rng, rows - cols, cols));
    return random_unimodular(rng, rows) * m * random_unimodular(rng, cols);
}

RatMatrix random_surjective(Rng& rng, std::size_t rows, std::size_t cols)
{
    return random_injective(rng, cols, rows).transpose();
}

FilteredComplex random_filtered_complex(Rng& rng, const FilteredShape& shape)
{
    const int lo = shape.lo;
    const int hi = shape.lo + std::max(1, shape.degrees) - 1;
    const int a = shape.a;
    const int b = shape.a + std::max(1, shape.length) - 1;
    const std::size_t nd = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<int>> weight(nd);
    struct Pair {
        int n;
        std::size_t x, y;
        int c;
    };
    std::vector<Pair> pairs;
    for (int k = 0; k < shape.pieces; ++k) {
        const int n = uniform(rng, lo, hi);
        const std::size_t i = static_cast<std::size_t>(n - lo);
        const int w1 = uniform(rng, a, b);
        if (n < hi && uniform(rng, 0, 2) > 0) {
            if (weight[i].size() >= shape.max_dim || weight[i + 1].size() >= shape.max_dim)
                continue;
            const int w2 = uniform(rng, w1, b);
            pairs.push_back({n, weight[i].size(), weight[i + 1].size(), uniform(rng, 0, 1) ? 1 : -2});
            weight[i].push_back(w1);
            weight[i + 1].push_back(w2);
        } else {
            if (weight[i].size() >= shape.max_dim)
                continue;
            weight[i].push_back(w1);
        }
    }
    std::vector<std::size_t> dims(nd);
    std::vector<RatMatrix> g(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        dims[i] = weight[i].size();
        g[i] = random_unimodular(rng, dims[i]);
    }
    std::vector<LinearMap> diffs;
    for (std::size_t i = 0; i + 1 < nd; ++i) {
        RatMatrix d(dims[i + 1], dims[i]);
        for (const Pair& p : pairs)
            if (static_cast<std::size_t>(p.n - lo) == i)
                d(p.y, p.x) = p.c;
        // basis vector j of degree n is row j of g[n]
        RatMatrix m = g[i + 1].transpose() * d * inverse(g[i].transpose());
        diffs.emplace_back(dims[i], dims[i + 1], std::move(m));
    }
    CochainComplex total(lo, dims, std::move(diffs));
    return make_filtered(total, a, b, [&](int p, int n) {
        const std::size_t i = static_cast<std::size_t>(n - lo);
        return rows_with(g[i], weight[i], p);
    });
}

FilteredComplex random_filtered_complex(std::uint64_t seed)
{
    Rng rng(seed);
    FilteredShape shape;
    shape.lo = uniform(rng, -2, 1);
    shape.degrees = uniform(rng, 1, 4);
    shape.max_dim = static_cast<std::size_t>(uniform(rng, 1, 12));
    shape.a = uniform(rng, -2, 2);
    shape.length = uniform(rng, 1, 5);
    shape.pieces = uniform(rng, 0, 14);
    return random_filtered_complex(rng, shape);
}

FilteredComplex direct_sum(const FilteredComplex& x, const FilteredComplex& y)
{
    const CochainComplex& cx = x.total();
    const CochainComplex& cy = y.total();
    if (cx.empty())
        return make_filtered(cy, std::min(x.type_lo(), y.type_lo()), std::max(x.type_hi(), y.type_hi()),
                             [&](int p, int n) { return y.step(p, n); });
    if (cy.empty())
        return direct_sum(y, x);
    const int lo = std::min(cx.lo(), cy.lo()), hi = std::max(cx.hi(), cy.hi());
    std::vector<std::size_t> dims;
    std::vector<LinearMap> diffs;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(cx.dim(n) + cy.dim(n));
        if (n < hi)
            diffs.push_back(sseq::direct_sum(cx.d(n), cy.d(n)));
    }
    CochainComplex total(lo, std::move(dims), std::move(diffs));
    return make_filtered(total, std::min(x.type_lo(), y.type_lo()), std::max(x.type_hi(), y.type_hi()),
                         [&](int p, int n) { return direct_sum(x.step(p, n), y.step(p, n)); });
}

FilteredMap random_filtered_map(Rng& rng, const FilteredShape& shape)
{
    FilteredComplex x = random_filtered_complex(rng, shape);
    FilteredComplex y = random_filtered_complex(rng, shape);
    FilteredComplex z = random_filtered_complex(rng, shape);
    FilteredMap out{direct_sum(x, y), direct_sum(y, z), {}};
    std::map<int, LinearMap> comp;
    const CochainComplex& s = out.source.total();
    const CochainComplex& t = out.target.total();
    if (!s.empty() && !t.empty()) {
        const int sc = uniform(rng, 0, 1) ? 1 : -1;
        for (int n = std::max(s.lo(), t.lo()); n <= std::min(s.hi(), t.hi()); ++n) {
            // (x, y) -> (sc * y, 0)
            RatMatrix m(t.dim(n), s.dim(n));
            const std::size_t xd = x.total().empty() ? 0 : x.total().dim(n);
            m.set_block(0, xd, Rational(sc) * RatMatrix::identity(y.total().dim(n)));
            comp[n] = LinearMap(s.dim(n), t.dim(n), std::move(m));
        }
    }
    out.map = ChainMap(s, t, std::move(comp));
    return out;
}

FilteredComplex graded_filtered(const std::map<std::pair<int, int>, std::size_t>& dims, int a, int b)
{
    std::map<int, std::size_t> tot;
    for (const auto& [pu, k] : dims) {
        if (pu.first < a || pu.first > b)
            throw std::invalid_argument("graded block outside the filtration range");
        tot[pu.second] += k;
    }
    if (tot.empty())
        return make_filtered(CochainComplex(), a, b, [](int, int) { return Subspace(); });
    const int lo = tot.begin()->first, hi = tot.rbegin()->first;
    std::vector<std::size_t> d;
    std::vector<LinearMap> diffs;
    for (int n = lo; n <= hi; ++n) {
        d.push_back(tot.count(n) ? tot[n] : 0);
        if (n > lo)
            diffs.push_back(LinearMap::zero(d[d.size() - 2], d.back()));
    }
    CochainComplex total(lo, d, std::move(diffs));
    // blocks ordered by p within each degree
    return make_filtered(total, a, b, [&](int p, int n) {
        const std::size_t dim = total.dim(n);
        std::size_t off = 0, start = dim;
        for (const auto& [pu, k] : dims)
            if (pu.second == n) {
                if (pu.first >= p) {
                    start = off;
                    break;
                }
                off += k;
            }
        RatMatrix gens(dim - start, dim);
        for (std::size_t i = start; i < dim; ++i)
            gens(i - start, i) = 1;
        return Subspace::span(dim, gens);
    });
}

PippaDiagram random_pippa(Rng& rng, int variant)
{
    auto dim = [&] { return static_cast<std::size_t>(uniform(rng, 0, 4)); };
    // a random three-term complex A' -> A -> A''
    auto row = [&](std::size_t a1, std::size_t a, std::size_t a2) {
        LinearMap d1(a1, a, random_matrix(rng, a, a1));
        Subquotient q(Subspace::full(a), image(d1));
        LinearMap d2(a, a2, random_matrix(rng, a2, q.dim()) * q.projection().matrix());
        return std::make_pair(d1, d2);
    };
    PippaDiagram g;
    if (variant == 1) {
        const std::size_t e1 = dim(), e = dim(), e2 = dim(), x = dim(), y = dim();
        auto [dE1, dE2] = row(e1, e, e2);
        // F' = E'/K' with K' inside ker dE1
        Subspace ker = kernel(dE1);
        RatMatrix kgen = ker.dim() == 0 ? RatMatrix(0, e1) : random_matrix(rng, uniform(rng, 0, 2), ker.dim()) * ker.basis();
        Subquotient fq(Subspace::full(e1), Subspace::span(e1, kgen));
        const std::size_t f1 = fq.dim();
        LinearMap phi1 = fq.projection();
        RatMatrix df1(e + x, f1);
        if (f1 > 0)
            df1.set_block(0, 0, dE1.apply_rows(fq.complement()).transpose());
        RatMatrix phi(e + x, e);
        phi.set_block(0, 0, RatMatrix::identity(e));
        RatMatrix phi2(e2 + y, e2);
        phi2.set_block(0, 0, RatMatrix::identity(e2));
        RatMatrix df2(e2 + y, e + x);
        df2.set_block(0, 0, dE2.matrix());
        df2.set_block(0, e, random_matrix(rng, e2, x));
        df2.set_block(e2, e, random_matrix(rng, y, x));
        // dF2 dF1 = 0 needs nothing more: dF1 lands in E and dE2 dE1 = 0
        g = {dE1, dE2, LinearMap(f1, e + x, df1), LinearMap(e + x, e2 + y, df2), phi1, LinearMap(e, e + x, phi),
             LinearMap(e2, e2 + y, phi2)};
    } else {
        const std::size_t f1 = dim(), f = dim(), f2 = dim(), x = dim(), x1 = dim();
        auto [dF1, dF2] = row(f1, f, f2);
        // E'' inside F'' containing the image of dF2
        Subspace ein = sum(image(dF2), Subspace::span(f2, random_matrix(rng, uniform(rng, 0, 1), f2)));
        const std::size_t e2 = ein.dim();
        Subquotient eq(ein, Subspace::zero(f2));
        LinearMap phi2(e2, f2, eq.complement().transpose());
        RatMatrix de2(e2, f + x);
        if (f > 0 && e2 > 0) {
            RatMatrix imgs = dF2.apply_rows(RatMatrix::identity(f));
            de2.set_block(0, 0, eq.coordinates(imgs).transpose());
        }
        RatMatrix phi(f, f + x);
        phi.set_block(0, 0, RatMatrix::identity(f));
        RatMatrix phi1(f1, f1 + x1);
        phi1.set_block(0, 0, RatMatrix::identity(f1));
        // dE1 = (dF1 0; H K)
        RatMatrix de1(f + x, f1 + x1);
        de1.set_block(0, 0, dF1.matrix());
        de1.set_block(f, 0, random_matrix(rng, x, f1));
        de1.set_block(f, f1, random_matrix(rng, x, x1));
        g = {LinearMap(f1 + x1, f + x, de1), LinearMap(f + x, e2, de2), dF1, dF2, LinearMap(f1 + x1, f1, phi1),
             LinearMap(f + x, f, phi), phi2};
    }
    // general position in every space
    const RatMatrix ge1 = random_unimodular(rng, g.dE1.source_dim()), ge = random_unimodular(rng, g.dE1.target_dim()),
                    ge2 = random_unimodular(rng, g.dE2.target_dim()), gf1 = random_unimodular(rng, g.dF1.source_dim()),
                    gf = random_unimodular(rng, g.dF1.target_dim()), gf2 = random_unimodular(rng, g.dF2.target_dim());
    g.dE1 = conjugate(g.dE1, ge1, ge);
    g.dE2 = conjugate(g.dE2, ge, ge2);
    g.dF1 = conjugate(g.dF1, gf1, gf);
    g.dF2 = conjugate(g.dF2, gf, gf2);
    g.phi1 = conjugate(g.phi1, ge1, gf1);
    g.phi = conjugate(g.phi, ge, gf);
    g.phi2 = conjugate(g.phi2, ge2, gf2);
    return g;
}

BifilteredSpace random_bifiltered(Rng& rng, std::size_t max_dim, int length)
{
    BifilteredSpace v;
    v.dim = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_dim)));
    auto filtration = [&](int& start, std::vector<Subspace>& steps) {
        start = uniform(rng, -2, 2);
        const RatMatrix basis = random_unimodular(rng, v.dim);
        std::vector<int> w(v.dim);
        for (auto& x : w)
            x = uniform(rng, start, start + length - 1);
        for (int k = 0; k < length; ++k)
            steps.push_back(k == 0 ? Subspace::full(v.dim) : rows_with(basis, w, start + k));
    };
    filtration(v.f_start, v.f);
    filtration(v.g_start, v.g);
    return v;
}

FacePoset random_simplicial(Rng& rng, int vertices, int max_dim)
{
    std::set<std::vector<int>> simplices;
    for (int v = 0; v < vertices; ++v)
        simplices.insert({v});
    const int facets = vertices < 2 || max_dim < 1 ? 0 : uniform(rng, 1, std::max(1, vertices - 1));
    for (int f = 0; f < facets; ++f) {
        const int size = uniform(rng, 2, std::min(vertices, max_dim + 1));
        std::vector<int> all(static_cast<std::size_t>(vertices));
        for (int v = 0; v < vertices; ++v)
            all[static_cast<std::size_t>(v)] = v;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> s(all.begin(), all.begin() + size);
        std::sort(s.begin(), s.end());
        // every nonempty subset
        for (unsigned mask = 1; mask < (1u << size); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < size; ++i)
                if (mask & (1u << i))
                    face.push_back(s[static_cast<std::size_t>(i)]);
            simplices.insert(face);
        }
    }
    std::vector<std::vector<int>> ordered(simplices.begin(), simplices.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::vector<int>, CellId> id;
    std::vector<Cell> cells;
    for (const auto& s : ordered) {
        std::string name;
        for (int v : s)
            name += (name.empty() ? "" : "-") + std::to_string(v);
        id[s] = cells.size();
        cells.push_back({name, static_cast<int>(s.size()) - 1});
    }
    std::vector<Cover> covers;
    for (const auto& s : ordered)
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                covers.push_back({id[face], id[s], i % 2 == 0 ? 1 : -1});
            }
    return FacePoset(std::move(cells), std::move(covers));
}

CellularSheaf random_sheaf(Rng& rng, const FacePoset& y, std::size_t m)
{
    auto base = std::make_shared<const FacePoset>(y);
    std::vector<Subspace> w = growing_family(rng, y, m, {});
    std::vector<Subquotient> q;
    std::vector<std::size_t> stalks;
    for (CellId c = 0; c < y.size(); ++c) {
        q.emplace_back(Subspace::full(m), w[c]);
        stalks.push_back(q.back().dim());
    }
    return CellularSheaf(base, std::move(stalks), quotient_restrictions(y, q));
}

SheafComplex random_sheaf_complex(Rng& rng, const FacePoset& y, int lo, int length, std::size_t m)
{
    auto base = std::make_shared<const FacePoset>(y);
    // global differentials on Q^m with M_{t+1} M_t = 0
    std::vector<LinearMap> mt;
    for (int k = 0; k + 1 < length; ++k) {
        Subquotient q(Subspace::full(m), mt.empty() ? Subspace::zero(m) : image(mt.back()));
        RatMatrix r = uniform(rng, 0, 3) == 0 ? RatMatrix(m, q.dim()) : random_matrix(rng, m, q.dim(), 2, 0.4);
        mt.emplace_back(m, m, r * q.projection().matrix());
    }
    std::vector<std::vector<Subquotient>> q(static_cast<std::size_t>(length));
    std::vector<CellularSheaf> terms;
    for (int k = 0; k < length; ++k) {
        std::vector<Subspace> extra;
        if (k > 0)
            for (CellId c = 0; c < y.size(); ++c)
                extra.push_back(image(mt[static_cast<std::size_t>(k - 1)], q[static_cast<std::size_t>(k - 1)][c].denominator()));
        std::vector<Subspace> w = growing_family(rng, y, m, extra);
        std::vector<std::size_t> stalks;
        for (CellId c = 0; c < y.size(); ++c) {
            q[static_cast<std::size_t>(k)].emplace_back(Subspace::full(m), w[c]);
            stalks.push_back(q[static_cast<std::size_t>(k)].back().dim());
        }
        terms.emplace_back(base, std::move(stalks), quotient_restrictions(y, q[static_cast<std::size_t>(k)]));
    }
    std::vector<SheafMap> diffs;
    for (int k = 0; k + 1 < length; ++k) {
        const auto& qs = q[static_cast<std::size_t>(k)];
        const auto& qt = q[static_cast<std::size_t>(k + 1)];
        std::vector<LinearMap> stalk;
        for (CellId c = 0; c < y.size(); ++c) {
            RatMatrix m2 = qs[c].dim() == 0
                               ? RatMatrix(qt[c].dim(), 0)
                               : qt[c].coordinates(mt[static_cast<std::size_t>(k)].apply_rows(qs[c].complement())).transpose();
            stalk.emplace_back(qs[c].dim(), qt[c].dim(), std::move(m2));
        }
        diffs.emplace_back(terms[static_cast<std::size_t>(k)], terms[static_cast<std::size_t>(k + 1)], std::move(stalk));
    }
    return SheafComplex(base, lo, std::move(terms), std::move(diffs));
}

SheafComplex random_twisted_complex(Rng& rng, const FacePoset& y, std::size_t m)
{
    // extension by zero from a random open set, so compactly supported classes show up
    CellSet u = y.none();
    std::bernoulli_distribution pick(0.15);
    for (CellId c = 0; c < y.size(); ++c)
        if (y.dim(c) == y.max_dim() || pick(rng))
            u[c] = true;
    for (CellId c : by_dimension(y))
        for (CellId d : y.up(c))
            if (u[c])
                u[d] = true;
    CellularSheaf g = uniform(rng, 0, 1) ? CellularSheaf::constant(std::make_shared<const FacePoset>(y), m)
                                         : random_sheaf(rng, y, m);
    CellularSheaf f = extend_by_zero(g, u);
    InjectiveResolution res = injective_resolution(f);
    const SheafComplex& t = res.terms;
    if (t.hi() < 1)
        return t;
    return SheafComplex(t.base(), 0, {t.term(0), t.term(1)}, {t.d(0)});
}

Flag random_flag(Rng& rng, const FacePoset& y)
{
    Flag f;
    f.n = uniform(rng, 1, std::min(3, y.max_dim() + 1));
    CellSet cur = y.all();
    f.levels.push_back(cur);
    std::bernoulli_distribution keep(0.5);
    for (int k = 1; k <= f.n; ++k) {
        CellSet pick = y.none();
        for (CellId c = 0; c < y.size(); ++c)
            pick[c] = cur[c] && keep(rng);
        cur = down_closure(y, pick);
        f.levels.push_back(cur);
    }
    f.levels.push_back(y.none());
    return f;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k)
{
    return seed + k;
}

}  // namespace sseq::gen
