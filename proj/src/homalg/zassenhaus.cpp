#include "sseq/homalg.hpp"

namespace sseq {

namespace {

Subspace filtration_step(const std::vector<Subspace>& steps, int start, int p, std::size_t dim)
{
    if (p <= start)
        return Subspace::full(dim);
    if (p >= start + static_cast<int>(steps.size()))
        return Subspace::zero(dim);
    return steps[static_cast<std::size_t>(p - start)];
}

// Gr_a^X Gr_c^Y = (X^a cap Y^c + Y^{c+1}) / (X^{a+1} cap Y^c + Y^{c+1})
Subquotient graded_piece(const Subspace& xa, const Subspace& xa1, const Subspace& yc, const Subspace& yc1)
{
    return Subquotient(sum(intersection(xa, yc), yc1), sum(intersection(xa1, yc), yc1));
}

// rows of w pushed into the coordinates of q
RatMatrix project_rows(const Subquotient& q, const RatMatrix& w)
{
    return q.coordinates(w);
}

}  // namespace

Subspace BifilteredSpace::F(int a) const
{
    return filtration_step(f, f_start, a, dim);
}

Subspace BifilteredSpace::G(int c) const
{
    return filtration_step(g, g_start, c, dim);
}

std::vector<ZassenhausPiece> zassenhaus(const BifilteredSpace& v)
{
    for (std::size_t k = 0; k < v.f.size(); ++k)
        if (v.f[k].ambient_dim() != v.dim || (k > 0 && !v.f[k - 1].contains(v.f[k])))
            throw std::invalid_argument("first filtration is not a decreasing chain in Q^" + std::to_string(v.dim));
    for (std::size_t k = 0; k < v.g.size(); ++k)
        if (v.g[k].ambient_dim() != v.dim || (k > 0 && !v.g[k - 1].contains(v.g[k])))
            throw std::invalid_argument("second filtration is not a decreasing chain in Q^" + std::to_string(v.dim));

    std::vector<ZassenhausPiece> out;
    const int alo = v.f_start - 1, ahi = v.f_start + static_cast<int>(v.f.size());
    const int clo = v.g_start - 1, chi = v.g_start + static_cast<int>(v.g.size());
    for (int a = alo; a <= ahi; ++a)
        for (int c = clo; c <= chi; ++c) {
            Subspace fa = v.F(a), fa1 = v.F(a + 1), gc = v.G(c), gc1 = v.G(c + 1);
            ZassenhausPiece piece;
            piece.a = a;
            piece.c = c;
            piece.fg = graded_piece(fa, fa1, gc, gc1);
            piece.gf = graded_piece(gc, gc1, fa, fa1);
            if (piece.fg.dim() == 0 && piece.gf.dim() == 0)
                continue;
            // both pieces are quotients of W = F^a cap G^c; M p1 = p2
            Subspace w = intersection(fa, gc);
            RatMatrix p1 = project_rows(piece.fg, w.basis()).transpose();
            RatMatrix p2 = project_rows(piece.gf, w.basis()).transpose();
            auto y = solve(p1, RatMatrix::identity(piece.fg.dim()));
            if (!y)
                throw std::logic_error("projection onto a Zassenhaus piece is not surjective");
            piece.iso = p2 * *y;
            out.push_back(std::move(piece));
        }
    return out;
}

bool check_zassenhaus(const BifilteredSpace& v, const ZassenhausPiece& piece)
{
    if (piece.fg.dim() != piece.gf.dim())
        return false;
    Subspace w = intersection(v.F(piece.a), v.G(piece.c));
    RatMatrix p1 = project_rows(piece.fg, w.basis()).transpose();
    RatMatrix p2 = project_rows(piece.gf, w.basis()).transpose();
    if (piece.fg.dim() == 0)
        return true;
    return piece.iso * p1 == p2 && rank(piece.iso) == piece.fg.dim();
}

}  // namespace sseq
