#include "sseq/io.hpp"

#include <fstream>

namespace sseq::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where, "expected an integer");
    return j.get<int>();
}

std::size_t as_size(const Json& j, const std::string& where)
{
    const int v = as_int(j, where);
    if (v < 0)
        throw ParseError(where, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

int degree_key(const std::string& key, const std::string& where)
{
    try {
        std::size_t used = 0;
        const int n = std::stoi(key, &used);
        if (used == key.size())
            return n;
    } catch (const std::exception&) {
    }
    throw ParseError(where, "degree key \"" + key + "\" is not an integer");
}

Rational entry(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where, e.what());
        }
    }
    throw ParseError(where, "matrix entries must be integers or \"num/den\" strings");
}

CellSet cell_set(const Json& j, const FacePoset& y, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where, "expected a list of cell names");
    CellSet s = y.none();
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        if (!j[i].is_string())
            throw ParseError(at, "expected a cell name");
        try {
            s[y.id(j[i].get<std::string>())] = true;
        } catch (const std::exception& e) {
            throw ParseError(at, e.what());
        }
    }
    return s;
}

Json names(const CellSet& s, const FacePoset& y)
{
    Json out = Json::array();
    for (CellId c = 0; c < y.size(); ++c)
        if (s[c])
            out.push_back(y.cell(c).name);
    return out;
}

CellularSheaf sheaf_from_json(const Json& j, const PosetPtr& y, const std::string& where)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "constant")
            return CellularSheaf::constant(y);
        if (j.get<std::string>() == "zero")
            return CellularSheaf::zero(y);
        throw ParseError(where, "unknown sheaf shorthand \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("constant"))
        return CellularSheaf::constant(y, as_size(j["constant"], where + "/constant"));
    const Json& st = field(j, "stalks", where);
    if (!st.is_object())
        throw ParseError(where + "/stalks", "expected an object keyed by cell name");
    std::vector<std::size_t> stalks(y->size(), 0);
    for (const auto& [name, v] : st.items()) {
        const std::string at = where + "/stalks/" + name;
        try {
            stalks[y->id(name)] = as_size(v, at);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(at, e.what());
        }
    }
    std::map<std::pair<CellId, CellId>, LinearMap> res;
    if (j.contains("restrictions")) {
        const Json& rs = j["restrictions"];
        if (!rs.is_array())
            throw ParseError(where + "/restrictions", "expected a list");
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const std::string at = where + "/restrictions/" + std::to_string(i);
            CellId a = 0, b = 0;
            try {
                a = y->id(field(rs[i], "face", at).get<std::string>());
                b = y->id(field(rs[i], "cell", at).get<std::string>());
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(at, e.what());
            }
            if (y->incidence(a, b) == 0)
                throw ParseError(at, "restrictions are given along covers only");
            RatMatrix m = matrix_from_json(field(rs[i], "matrix", at), stalks[b], stalks[a], at + "/matrix");
            res.emplace(std::make_pair(a, b), LinearMap(stalks[a], stalks[b], std::move(m)));
        }
    }
    try {
        return CellularSheaf(y, std::move(stalks), std::move(res));
    } catch (const std::exception& e) {
        throw ParseError(where, e.what());
    }
}

Json sheaf_to_json(const CellularSheaf& f)
{
    const FacePoset& y = *f.base();
    Json st = Json::object();
    for (CellId c = 0; c < y.size(); ++c)
        st[y.cell(c).name] = f.stalk(c);
    Json rs = Json::array();
    for (const auto& [key, m] : f.restrictions()) {
        if (m.is_zero())
            continue;
        rs.push_back({{"face", y.cell(key.first).name}, {"cell", y.cell(key.second).name},
                      {"matrix", matrix_to_json(m.matrix())}});
    }
    return {{"stalks", st}, {"restrictions", rs}};
}

Json slot_rows(const Page& page)
{
    Json slots = Json::array();
    for (const auto& [s, d] : page.dims)
        slots.push_back({{"p", s.first}, {"q", s.second}, {"dim", d}});
    return slots;
}

}  // namespace

Json rational_to_json(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return Json(q.get_num().get_si());
    return Json(format_rational(q));
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where, "expected a list of rows");
    // an empty list stands for any matrix with no rows or no columns
    if (j.empty() && (rows == 0 || cols == 0))
        return RatMatrix(rows, cols);
    if (j.size() != rows)
        throw ParseError(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string at = where + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError(at, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = entry(j[r][c], at + "/" + std::to_string(c));
    }
    return m;
}

Json matrix_to_json(const RatMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(rational_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

FilteredComplex filtered_from_json(const Json& j)
{
    const Json& support = field(j, "support", "");
    if (!support.is_array() || support.size() != 2)
        throw ParseError("/support", "expected [lo, hi]");
    const int lo = as_int(support[0], "/support/0");
    const int hi = as_int(support[1], "/support/1");
    if (hi < lo - 1)
        throw ParseError("/support", "hi is below lo - 1");
    const Json& dims_j = field(j, "dims", "");
    std::vector<std::size_t> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    if (!dims_j.is_object())
        throw ParseError("/dims", "expected an object keyed by degree");
    for (const auto& [key, v] : dims_j.items()) {
        const int n = degree_key(key, "/dims/" + key);
        if (n < lo || n > hi)
            throw ParseError("/dims/" + key, "degree outside the support");
        dims[static_cast<std::size_t>(n - lo)] = as_size(v, "/dims/" + key);
    }
    auto dim = [&](int n) { return n < lo || n > hi ? 0 : dims[static_cast<std::size_t>(n - lo)]; };
    std::vector<LinearMap> diffs;
    for (int n = lo; n < hi; ++n)
        diffs.push_back(LinearMap::zero(dim(n), dim(n + 1)));
    if (j.contains("diff")) {
        if (!j["diff"].is_object())
            throw ParseError("/diff", "expected an object keyed by degree");
        for (const auto& [key, v] : j["diff"].items()) {
            const std::string at = "/diff/" + key;
            const int n = degree_key(key, at);
            if (n < lo || n >= hi)
                throw ParseError(at, "differential leaves the support");
            diffs[static_cast<std::size_t>(n - lo)] =
                LinearMap(dim(n), dim(n + 1), matrix_from_json(v, dim(n + 1), dim(n), at));
        }
    }
    CochainComplex c;
    try {
        c = hi < lo ? CochainComplex() : CochainComplex(lo, dims, diffs);
    } catch (const std::exception& e) {
        throw ParseError("/diff", e.what());
    }
    if (!j.contains("filtration"))
        return make_filtered(c, 0, 0, [&](int, int n) { return Subspace::full(c.dim(n)); });
    const Json& filt = j["filtration"];
    const int a = as_int(field(filt, "start", "/filtration"), "/filtration/start");
    const Json& steps_j = field(filt, "steps", "/filtration");
    if (!steps_j.is_array() || steps_j.empty())
        throw ParseError("/filtration/steps", "expected a non-empty list of steps");
    std::vector<std::map<int, Subspace>> steps(steps_j.size());
    for (std::size_t k = 0; k < steps_j.size(); ++k) {
        const std::string at = "/filtration/steps/" + std::to_string(k);
        if (!steps_j[k].is_object())
            throw ParseError(at, "expected an object keyed by degree");
        for (const auto& [key, v] : steps_j[k].items()) {
            const int n = degree_key(key, at + "/" + key);
            if (n < lo || n > hi)
                throw ParseError(at + "/" + key, "degree outside the support");
            const std::size_t rows = v.is_array() ? v.size() : 0;
            steps[k][n] = Subspace::span(dim(n), matrix_from_json(v, rows, dim(n), at + "/" + key));
        }
    }
    try {
        return make_filtered(c, a, a + static_cast<int>(steps.size()) - 1, [&](int p, int n) {
            const auto& st = steps[static_cast<std::size_t>(p - a)];
            auto it = st.find(n);
            return it == st.end() ? Subspace::zero(c.dim(n)) : it->second;
        });
    } catch (const std::exception& e) {
        throw ParseError("/filtration", e.what());
    }
}

Json filtered_to_json(const FilteredComplex& fc)
{
    const CochainComplex& c = fc.total();
    Json dims = Json::object(), diff = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        dims[std::to_string(n)] = c.dim(n);
        if (n < c.hi())
            diff[std::to_string(n)] = matrix_to_json(c.d(n).matrix());
    }
    Json steps = Json::array();
    for (int p = fc.type_lo(); p <= fc.type_hi(); ++p) {
        Json st = Json::object();
        for (int n = c.lo(); n <= c.hi(); ++n) {
            Subspace s = fc.step(p, n);
            if (!s.is_zero())
                st[std::to_string(n)] = matrix_to_json(s.basis());
        }
        steps.push_back(std::move(st));
    }
    return {{"support", {c.lo(), c.hi()}},
            {"dims", dims},
            {"diff", diff},
            {"filtration", {{"start", fc.type_lo()}, {"steps", steps}}}};
}

Geometry geometry_from_json(const Json& j)
{
    Geometry g;
    const Json& cells_j = field(j, "cells", "");
    if (!cells_j.is_array())
        throw ParseError("/cells", "expected a list");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < cells_j.size(); ++i) {
        const std::string at = "/cells/" + std::to_string(i);
        const Json& name = field(cells_j[i], "name", at);
        if (!name.is_string())
            throw ParseError(at + "/name", "expected a string");
        cells.push_back({name.get<std::string>(), as_int(field(cells_j[i], "dim", at), at + "/dim")});
    }
    std::map<std::string, CellId> ids;
    for (CellId c = 0; c < cells.size(); ++c)
        ids.emplace(cells[c].name, c);
    std::vector<Cover> covers;
    if (j.contains("covers")) {
        const Json& cov = j["covers"];
        if (!cov.is_array())
            throw ParseError("/covers", "expected a list");
        for (std::size_t i = 0; i < cov.size(); ++i) {
            const std::string at = "/covers/" + std::to_string(i);
            auto lookup = [&](const char* key) {
                const Json& v = field(cov[i], key, at);
                auto it = v.is_string() ? ids.find(v.get<std::string>()) : ids.end();
                if (it == ids.end())
                    throw ParseError(at + "/" + key, "unknown cell");
                return it->second;
            };
            covers.push_back({lookup("face"), lookup("cell"), as_int(field(cov[i], "sign", at), at + "/sign")});
        }
    }
    try {
        g.poset = std::make_shared<const FacePoset>(std::move(cells), std::move(covers));
    } catch (const std::exception& e) {
        throw ParseError("/covers", e.what());
    }
    const FacePoset& y = *g.poset;

    if (j.contains("complex")) {
        const Json& cx = j["complex"];
        const int lo = as_int(field(cx, "lo", "/complex"), "/complex/lo");
        const Json& terms_j = field(cx, "terms", "/complex");
        if (!terms_j.is_array())
            throw ParseError("/complex/terms", "expected a list");
        std::vector<CellularSheaf> terms;
        for (std::size_t i = 0; i < terms_j.size(); ++i)
            terms.push_back(sheaf_from_json(terms_j[i], g.poset, "/complex/terms/" + std::to_string(i)));
        std::vector<SheafMap> diffs;
        for (std::size_t i = 0; i + 1 < terms.size(); ++i)
            diffs.push_back(SheafMap::zero(terms[i], terms[i + 1]));
        if (cx.contains("diffs")) {
            const Json& ds = cx["diffs"];
            if (!ds.is_array() || ds.size() + 1 > std::max<std::size_t>(terms.size(), 1))
                throw ParseError("/complex/diffs", "expected one map per pair of consecutive terms");
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const std::string at = "/complex/diffs/" + std::to_string(i);
                if (!ds[i].is_object())
                    throw ParseError(at, "expected an object keyed by cell name");
                std::vector<LinearMap> stalk = diffs[i].stalk;
                for (const auto& [name, m] : ds[i].items()) {
                    auto it = ids.find(name);
                    if (it == ids.end())
                        throw ParseError(at + "/" + name, "unknown cell");
                    const CellId c = it->second;
                    const std::size_t s = terms[i].stalk(c), t = terms[i + 1].stalk(c);
                    stalk[c] = LinearMap(s, t, matrix_from_json(m, t, s, at + "/" + name));
                }
                try {
                    diffs[i] = SheafMap(terms[i], terms[i + 1], std::move(stalk));
                } catch (const std::exception& e) {
                    throw ParseError(at, e.what());
                }
            }
        }
        try {
            g.complex = SheafComplex(g.poset, lo, std::move(terms), std::move(diffs));
        } catch (const std::exception& e) {
            throw ParseError("/complex", e.what());
        }
    } else {
        const int degree = j.contains("degree") ? as_int(j["degree"], "/degree") : 0;
        g.complex = SheafComplex::single(sheaf_from_json(field(j, "sheaf", ""), g.poset, "/sheaf"), degree);
    }

    if (j.contains("flag")) {
        const Json& fl = j["flag"];
        if (!fl.is_array() || fl.size() < 2)
            throw ParseError("/flag", "expected the levels Y_0, Y_-1, ..., Y_-n-1 as cell-name lists");
        Flag flag;
        flag.n = static_cast<int>(fl.size()) - 2;
        for (std::size_t k = 0; k < fl.size(); ++k)
            flag.levels.push_back(cell_set(fl[k], y, "/flag/" + std::to_string(k)));
        try {
            flag.validate(y);
        } catch (const std::exception& e) {
            throw ParseError("/flag", e.what());
        }
        g.flag = std::move(flag);
    }
    if (j.contains("tshift"))
        g.tshift = as_int(j["tshift"], "/tshift");
    if (j.contains("restrict_to")) {
        CellSet z = cell_set(j["restrict_to"], y, "/restrict_to");
        if (!y.is_down_closed(z))
            throw ParseError("/restrict_to", "the set is not closed");
        g.restrict_to = std::move(z);
    }
    if (j.contains("d"))
        g.d = as_int(j["d"], "/d");
    return g;
}

Json geometry_to_json(const Geometry& g)
{
    const FacePoset& y = *g.poset;
    Json cells = Json::array(), covers = Json::array();
    for (CellId c = 0; c < y.size(); ++c)
        cells.push_back({{"name", y.cell(c).name}, {"dim", y.dim(c)}});
    for (const Cover& c : y.covers())
        covers.push_back({{"face", y.cell(c.face).name}, {"cell", y.cell(c.cell).name}, {"sign", c.sign}});
    Json terms = Json::array(), diffs = Json::array();
    for (int t = g.complex.lo(); t <= g.complex.hi(); ++t) {
        terms.push_back(sheaf_to_json(g.complex.term(t)));
        if (t == g.complex.hi())
            continue;
        Json d = Json::object();
        SheafMap m = g.complex.d(t);
        for (CellId c = 0; c < y.size(); ++c)
            if (!m.stalk[c].is_zero())
                d[y.cell(c).name] = matrix_to_json(m.stalk[c].matrix());
        diffs.push_back(std::move(d));
    }
    Json out = {{"cells", cells},
                {"covers", covers},
                {"complex", {{"lo", g.complex.lo()}, {"terms", terms}, {"diffs", diffs}}},
                {"tshift", g.tshift}};
    if (g.flag) {
        Json levels = Json::array();
        for (const CellSet& s : g.flag->levels)
            levels.push_back(names(s, y));
        out["flag"] = levels;
    }
    if (g.restrict_to) {
        out["restrict_to"] = names(*g.restrict_to, y);
        out["d"] = g.d;
    }
    return out;
}

Input input_from_json(const Json& j)
{
    Input in;
    if (j.is_object() && j.contains("cells"))
        in.geometry = geometry_from_json(j);
    else
        in.filtered = filtered_from_json(j);
    return in;
}

Input read_input(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError(path, "cannot open file");
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw ParseError(path, e.what());
    }
    try {
        return input_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

Json pages_to_json(const SpectralSequence& ss)
{
    Json pages = Json::array();
    for (const Page& page : ss.pages) {
        Json d = Json::array();
        for (const auto& [s, m] : page.d)
            d.push_back({{"p", s.first}, {"q", s.second}, {"rank", m.rank()}, {"matrix", matrix_to_json(m.matrix())}});
        pages.push_back({{"r", page.r}, {"slots", slot_rows(page)}, {"d", d}});
    }
    return {{"indexing", ss.indexing == Indexing::standard ? "standard" : "renumbered"}, {"pages", pages}};
}

Json abutment_to_json(const Abutment& ab)
{
    Json degrees = Json::array();
    for (const auto& [u, deg] : ab.degrees) {
        Json steps = Json::array();
        for (int c = ab.lo_step(u); c <= ab.hi_step(u); ++c)
            steps.push_back({{"step", c}, {"dim", ab.column_step(u, c).dim()}, {"graded", ab.graded_dim(u, c)}});
        degrees.push_back({{"degree", u}, {"dim", deg.dim}, {"steps", steps}});
    }
    return {{"filtration", ab.column == Indexing::standard ? "F" : "L"}, {"degrees", degrees}};
}

Json morphism_to_json(const SSMorphism& m)
{
    Json pages = Json::array();
    for (int r = m.first_page; r <= m.last_page(); ++r) {
        Json comps = Json::array();
        for (const auto& [s, f] : m.components[static_cast<std::size_t>(r - m.first_page)])
            comps.push_back({{"p", s.first},
                             {"q", s.second},
                             {"source_dim", f.source_dim()},
                             {"target_dim", f.target_dim()},
                             {"rank", f.rank()},
                             {"matrix", matrix_to_json(f.matrix())}});
        pages.push_back({{"r", r}, {"components", comps}});
    }
    Json ab = Json::array();
    for (const auto& [u, f] : m.abutment)
        ab.push_back({{"degree", u}, {"rank", f.rank()}, {"matrix", matrix_to_json(f.matrix())}});
    return {{"first_page", m.first_page}, {"pages", pages}, {"abutment", ab}};
}

Json spectral_object_to_json(const SpectralObject& so)
{
    auto complex_json = [](const CochainComplex& c) {
        Json dims = Json::object(), diff = Json::object();
        for (int n = c.lo(); n <= c.hi(); ++n) {
            dims[std::to_string(n)] = c.dim(n);
            if (n < c.hi())
                diff[std::to_string(n)] = matrix_to_json(c.d(n).matrix());
        }
        return Json{{"support", {c.lo(), c.hi()}}, {"dims", dims}, {"diff", diff}};
    };
    auto map_json = [](const ChainMap& f) {
        Json comps = Json::object();
        const int lo = std::min(f.source().lo(), f.target().lo());
        const int hi = std::max(f.source().hi(), f.target().hi());
        for (int n = lo; n <= hi; ++n) {
            LinearMap m = f.at(n);
            if (!m.is_zero())
                comps[std::to_string(n)] = matrix_to_json(m.matrix());
        }
        return comps;
    };
    Json objects = Json::array(), maps = Json::array(), del = Json::array();
    for (const auto& [pq, c] : so.objects)
        objects.push_back({{"p", pq.first}, {"q", pq.second}, {"complex", complex_json(c)}});
    for (const auto& [k, f] : so.structure) {
        const auto [p, q, p2, q2] = k;
        maps.push_back({{"from", {p, q}}, {"to", {p2, q2}}, {"components", map_json(f)}});
    }
    for (const auto& [k, f] : so.boundary) {
        const auto [p, q, r] = k;
        del.push_back({{"p", p}, {"q", q}, {"r", r}, {"components", map_json(f)}});
    }
    return {{"lo", so.lo}, {"hi", so.hi}, {"objects", objects}, {"maps", maps}, {"boundary", del}};
}

}  // namespace sseq::io
