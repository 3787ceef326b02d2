#pragma once

#include "sseq/specobj.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sseq {

using CellId = std::size_t;
using CellSet = std::vector<bool>;

struct Cell {
    std::string name;
    int dim = 0;
};

struct Cover {
    CellId face;
    CellId cell;
    int sign = 1;  // incidence number [face : cell]
};

// Finite poset of cells; the order is generated by the covers.
class FacePoset {
public:
    FacePoset() = default;
    FacePoset(std::vector<Cell> cells, std::vector<Cover> covers);

    std::size_t size() const { return cells_.size(); }
    const Cell& cell(CellId c) const { return cells_[c]; }
    int dim(CellId c) const { return cells_[c].dim; }
    int max_dim() const;
    CellId id(const std::string& name) const;
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<CellId>& up(CellId c) const { return up_[c]; }      // cells covering c
    const std::vector<CellId>& down(CellId c) const { return down_[c]; }  // faces covered by c
    int incidence(CellId face, CellId cell) const;

    bool leq(CellId a, CellId b) const { return leq_[a][b]; }
    // strictly increasing chains, in a fixed order (by length, then lexicographic)
    std::vector<std::vector<CellId>> chains(std::size_t length) const;
    // every cell's faces form a sphere in the Euler characteristic sense
    bool is_closed_complex() const;

    CellSet all() const { return CellSet(size(), true); }
    CellSet none() const { return CellSet(size(), false); }
    bool is_down_closed(const CellSet& s) const;
    bool is_up_closed(const CellSet& s) const;
    bool is_convex(const CellSet& s) const;
    CellSet complement(const CellSet& s) const;
    CellSet from_names(const std::vector<std::string>& names) const;

    // induced subposet on s, with the map old id -> new id (npos outside s)
    std::pair<FacePoset, std::vector<CellId>> induced(const CellSet& s) const;

    static constexpr CellId npos = static_cast<CellId>(-1);

private:
    std::vector<Cell> cells_;
    std::vector<Cover> covers_;
    std::vector<std::vector<CellId>> up_, down_;
    std::vector<std::vector<bool>> leq_;
    std::map<std::pair<CellId, CellId>, int> sign_;
};

using PosetPtr = std::shared_ptr<const FacePoset>;

class CellularSheaf {
public:
    CellularSheaf() = default;
    // restrictions keyed by covers (face, cell); missing ones are zero; throws on non-functoriality
    CellularSheaf(PosetPtr base, std::vector<std::size_t> stalks,
                  std::map<std::pair<CellId, CellId>, LinearMap> restrictions);

    static CellularSheaf constant(PosetPtr base, std::size_t m = 1);
    static CellularSheaf zero(PosetPtr base);
    // value v on the closure of tau, identity restrictions there
    static CellularSheaf elementary(PosetPtr base, CellId tau, std::size_t v);

    const PosetPtr& base() const { return base_; }
    std::size_t stalk(CellId c) const { return stalks_[c]; }
    const std::vector<std::size_t>& stalks() const { return stalks_; }
    // F(a -> b) for a <= b
    LinearMap map(CellId a, CellId b) const;
    const std::map<std::pair<CellId, CellId>, LinearMap>& restrictions() const { return res_; }
    bool is_zero() const;

private:
    PosetPtr base_;
    std::vector<std::size_t> stalks_;
    std::map<std::pair<CellId, CellId>, LinearMap> res_;
    std::vector<std::vector<LinearMap>> composite_;
};

// Stalkwise maps commuting with restrictions.
struct SheafMap {
    CellularSheaf source;
    CellularSheaf target;
    std::vector<LinearMap> stalk;

    SheafMap() = default;
    SheafMap(CellularSheaf source, CellularSheaf target, std::vector<LinearMap> stalk);
    static SheafMap zero(const CellularSheaf& s, const CellularSheaf& t);
    static SheafMap identity(const CellularSheaf& s);
};

SheafMap compose(const SheafMap& g, const SheafMap& f);

class SheafComplex {
public:
    SheafComplex() = default;
    // terms in degrees lo .. lo+terms.size()-1; diffs[i]: term i -> term i+1
    SheafComplex(PosetPtr base, int lo, std::vector<CellularSheaf> terms, std::vector<SheafMap> diffs);
    static SheafComplex single(const CellularSheaf& f, int degree = 0);

    const PosetPtr& base() const { return base_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool empty() const { return terms_.empty(); }
    const CellularSheaf& term(int t) const;
    SheafMap d(int t) const;
    CochainComplex stalk_complex(CellId c) const;

private:
    PosetPtr base_;
    int lo_ = 0;
    std::vector<CellularSheaf> terms_;
    std::vector<SheafMap> diffs_;
    CellularSheaf zero_;
};

struct SheafComplexMap {
    SheafComplex source;
    SheafComplex target;
    std::map<int, SheafMap> components;

    SheafMap at(int t) const;
};

enum class CochainModel { automatic, cellular, resolution };

// cellular cochains need every cell to have a sphere of faces; otherwise the resolution is used
CochainModel resolve_model(const FacePoset& y, CochainModel m);

struct FlatBlock {
    int t = 0;                   // sheaf degree
    std::vector<CellId> chain;   // single cell for the cellular model
    std::size_t offset = 0;
    std::size_t size = 0;

    CellId support() const { return chain.front(); }
    CellId coefficient() const { return chain.back(); }
};

// Global sections of a flattened sheaf complex, with its block structure.
struct FlatComplex {
    PosetPtr base;
    CochainModel model = CochainModel::cellular;
    CochainComplex complex;
    std::map<int, std::vector<FlatBlock>> blocks;  // total degree -> blocks

    Subspace select(int n, const std::function<bool(const FlatBlock&)>& keep) const;
    DegreeSubspaces select_fn(std::function<bool(const FlatBlock&)> keep) const;
};

FlatComplex flatten(const SheafComplex& k, CochainModel model = CochainModel::automatic);
// Both complexes must be flattened with the same model.
ChainMap flatten_map(const SheafComplexMap& f, const FlatComplex& src, const FlatComplex& tgt);

CochainComplex sheaf_cochains(const FacePoset& y, const CellularSheaf& f);
CochainComplex sheaf_cochains(const CellularSheaf& f);

struct InjectiveResolution {
    FlatComplex sections;  // each block is an elementary injective [support]_V
    // stalk complex of the resolved object at c -> stalk of the resolution at c
    std::vector<ChainMap> augmentation;
    // the resolving sheaves themselves; filled for single sheaves only
    SheafComplex terms;

    CochainComplex stalk(CellId c) const;
    bool stalkwise_exact() const;
};

// Minimal resolution of a single sheaf by successive injective hulls.
InjectiveResolution injective_resolution(const CellularSheaf& f);
// Canonical chain resolution of every term, totalized.
InjectiveResolution injective_resolution(const SheafComplex& k);

Subcomplex supported_sections(const InjectiveResolution& res, const CellSet& z);
QuotientComplex rj_star(const InjectiveResolution& res, const CellSet& u);

struct OpenSplit {
    Subcomplex sub;
    QuotientComplex quotient;
};
OpenSplit open_section_subcomplex(const FlatComplex& fc, const CellSet& u);
OpenSplit open_section_subcomplex(const CellularSheaf& f, const CellSet& u);

// restriction of sheaves and complexes to the induced subposet on a closed set
CellularSheaf restrict(const CellularSheaf& f, const CellSet& z);
SheafComplex restrict(const SheafComplex& k, const CellSet& z);
SheafComplexMap restrict(const SheafComplexMap& f, const CellSet& z);
// value zero outside a locally closed set
CellularSheaf extend_by_zero(const CellularSheaf& f, const CellSet& s);
SheafComplex extend_by_zero(const SheafComplex& k, const CellSet& s);

// block projection flatten(K) -> flatten(K|Z)
ChainMap restriction_chain_map(const FlatComplex& whole, const FlatComplex& part, const CellSet& z);
std::map<int, LinearMap> restriction_map(const SheafComplex& k, const CellSet& z,
                                         CochainModel model = CochainModel::automatic);

CellularSheaf cohomology_sheaf(const SheafComplex& k, int t);
// tau_{<=a} at sheaf level, with its inclusion
SheafComplexMap truncation_le(const SheafComplex& k, int a);

// Y_0 = Y, Y_{-1}, ..., Y_{-n}, Y_{-n-1} = empty; all closed and nested.
struct Flag {
    int n = 0;
    std::vector<CellSet> levels;  // levels[k] = Y_{-k}, k = 0..n+1

    const CellSet& Y(int p) const;
    void validate(const FacePoset& y) const;
};

// F^p = sections with coefficients on Y - Y_{p-1}; type [-n, 0]
FilteredComplex flag_filtered_complex(const FlatComplex& fc, const Flag& flag);
// G^p = sections supported on Y_{-p}; type [0, n]
FilteredComplex gamma_flag_filtered_complex(const InjectiveResolution& res, const Flag& flag);
// F^p = tau_{<=-p-tshift}
FilteredComplex truncation_filtered_complex(const FlatComplex& fc, const SheafComplex& k, int tshift = 0);

// Sheaf complex with a shifted standard t-structure, seen through its cochain model.
struct SheafTObject {
    std::shared_ptr<const SheafComplex> k;
    int tshift = 0;
    CochainModel model = CochainModel::automatic;

    FlatComplex flat() const { return flatten(*k, model); }
};

FilteredComplex t_view(const SheafTObject& x);
SheafTObject truncate_le(const SheafTObject& x, int a);
ChainMap truncation_inclusion(const SheafTObject& x, int a);

// i^* for a closed z, with the target t-structure moved by d.
ShiftExactFunctor<SheafTObject> restriction_functor(const CellSet& z, int d);

}  // namespace sseq
