#include "sseq/cellsheaf.hpp"

#include <algorithm>
#include <functional>

namespace sseq {

FacePoset::FacePoset(std::vector<Cell> cells, std::vector<Cover> covers)
    : cells_(std::move(cells)), covers_(std::move(covers))
{
    const std::size_t n = cells_.size();
    up_.assign(n, {});
    down_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (cells_[i].name == cells_[j].name)
                throw std::invalid_argument("duplicate cell name '" + cells_[i].name + "'");
    for (const Cover& c : covers_) {
        if (c.face >= n || c.cell >= n)
            throw std::invalid_argument("cover refers to an unknown cell");
        if (cells_[c.cell].dim != cells_[c.face].dim + 1)
            throw std::invalid_argument("cover " + cells_[c.face].name + " < " + cells_[c.cell].name +
                                        " does not raise dimension by one");
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("incidence of " + cells_[c.face].name + " < " + cells_[c.cell].name +
                                        " must be +1 or -1");
        if (!sign_.emplace(std::make_pair(c.face, c.cell), c.sign).second)
            throw std::invalid_argument("repeated cover " + cells_[c.face].name + " < " + cells_[c.cell].name);
        up_[c.face].push_back(c.cell);
        down_[c.cell].push_back(c.face);
    }
    for (auto& v : up_)
        std::sort(v.begin(), v.end());
    for (auto& v : down_)
        std::sort(v.begin(), v.end());

    // covers raise dimension, so sweeping by dimension closes the order
    std::vector<CellId> by_dim(n);
    for (std::size_t i = 0; i < n; ++i)
        by_dim[i] = i;
    std::stable_sort(by_dim.begin(), by_dim.end(), [&](CellId a, CellId b) { return cells_[a].dim < cells_[b].dim; });
    leq_.assign(n, std::vector<bool>(n, false));
    for (CellId b : by_dim) {
        leq_[b][b] = true;
        for (CellId c : down_[b])
            for (std::size_t a = 0; a < n; ++a)
                if (leq_[a][c])
                    leq_[a][b] = true;
    }

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u) {
            if (cells_[u].dim != cells_[s].dim + 2 || !leq_[s][u])
                continue;
            int total = 0;
            for (CellId t : up_[s])
                if (leq_[t][u])
                    total += sign_.at({s, t}) * sign_.at({t, u});
            if (total != 0)
                throw std::invalid_argument("boundary of boundary is nonzero between " + cells_[s].name + " and " +
                                            cells_[u].name);
        }
}

int FacePoset::max_dim() const
{
    int m = -1;
    for (const Cell& c : cells_)
        m = std::max(m, c.dim);
    return m;
}

CellId FacePoset::id(const std::string& name) const
{
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].name == name)
            return i;
    throw std::invalid_argument("unknown cell '" + name + "'");
}

int FacePoset::incidence(CellId face, CellId cell) const
{
    auto it = sign_.find({face, cell});
    return it == sign_.end() ? 0 : it->second;
}

std::vector<std::vector<CellId>> FacePoset::chains(std::size_t length) const
{
    std::vector<std::vector<CellId>> out;
    if (length == 0)
        return out;
    std::vector<CellId> cur;
    std::function<void()> grow = [&]() {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (CellId c = 0; c < size(); ++c)
            if (cur.empty() || (c != cur.back() && leq(cur.back(), c))) {
                cur.push_back(c);
                grow();
                cur.pop_back();
            }
    };
    grow();
    return out;
}

bool FacePoset::is_closed_complex() const
{
    for (CellId t = 0; t < size(); ++t) {
        const int k = dim(t);
        if (k == 0)
            continue;
        int chi = 0;
        for (CellId s = 0; s < size(); ++s)
            if (s != t && leq(s, t))
                chi += dim(s) % 2 == 0 ? 1 : -1;
        if (chi != (k % 2 == 0 ? 0 : 2))
            return false;
    }
    return true;
}

bool FacePoset::is_down_closed(const CellSet& s) const
{
    if (s.size() != size())
        return false;
    for (const Cover& c : covers_)
        if (s[c.cell] && !s[c.face])
            return false;
    return true;
}

bool FacePoset::is_up_closed(const CellSet& s) const
{
    if (s.size() != size())
        return false;
    for (const Cover& c : covers_)
        if (s[c.face] && !s[c.cell])
            return false;
    return true;
}

bool FacePoset::is_convex(const CellSet& s) const
{
    if (s.size() != size())
        return false;
    for (CellId a = 0; a < size(); ++a)
        for (CellId b = 0; b < size(); ++b)
            for (CellId m = 0; m < size(); ++m)
                if (s[a] && s[b] && !s[m] && leq(a, m) && leq(m, b))
                    return false;
    return true;
}

CellSet FacePoset::complement(const CellSet& s) const
{
    CellSet out(size());
    for (CellId c = 0; c < size(); ++c)
        out[c] = !s[c];
    return out;
}

CellSet FacePoset::from_names(const std::vector<std::string>& names) const
{
    CellSet out = none();
    for (const auto& n : names)
        out[id(n)] = true;
    return out;
}

std::pair<FacePoset, std::vector<CellId>> FacePoset::induced(const CellSet& s) const
{
    std::vector<CellId> idmap(size(), npos);
    std::vector<Cell> cells;
    for (CellId c = 0; c < size(); ++c)
        if (s[c]) {
            idmap[c] = cells.size();
            cells.push_back(cells_[c]);
        }
    std::vector<Cover> covers;
    for (const Cover& c : covers_)
        if (s[c.face] && s[c.cell])
            covers.push_back({idmap[c.face], idmap[c.cell], c.sign});
    return {FacePoset(std::move(cells), std::move(covers)), std::move(idmap)};
}

}  // namespace sseq
