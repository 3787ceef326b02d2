#pragma once

#include "sseq/qlinalg.hpp"

#include <functional>
#include <map>
#include <vector>

namespace sseq {

// Bounded cochain complex of finite-dimensional Q-spaces, degrees lo()..hi().
class CochainComplex {
public:
    CochainComplex() = default;
    // diffs[i] : degree lo+i -> lo+i+1; diffs.size() == dims.size() - 1
    CochainComplex(int lo, std::vector<std::size_t> dims, std::vector<LinearMap> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    std::size_t total_dim() const;

    std::size_t dim(int n) const;
    LinearMap d(int n) const;

    friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<LinearMap> diffs_;
};

class ChainMap {
public:
    ChainMap() = default;
    // missing components are zero; throws if the map does not commute with d
    ChainMap(CochainComplex source, CochainComplex target, std::map<int, LinearMap> components);

    static ChainMap identity(const CochainComplex& c);
    static ChainMap zero(const CochainComplex& source, const CochainComplex& target);

    const CochainComplex& source() const { return src_; }
    const CochainComplex& target() const { return tgt_; }
    LinearMap at(int n) const;

private:
    CochainComplex src_;
    CochainComplex tgt_;
    std::map<int, LinearMap> comp_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

struct Cohomology {
    Subspace cocycles;
    Subspace coboundaries;
    Subquotient classes;
    std::size_t dim() const { return classes.dim(); }
};

Cohomology cohomology(const CochainComplex& c, int n);
std::map<int, std::size_t> betti_numbers(const CochainComplex& c);
LinearMap cohomology_map(const ChainMap& f, int n);

// C[d]^n = C^{n+d} with differential (-1)^d d.
CochainComplex shift(const CochainComplex& c, int d);
ChainMap shift(const ChainMap& f, int d);

struct Cone {
    CochainComplex complex;  // degree n: A^{n+1} + B^n
    ChainMap inclusion;      // B -> cone
    ChainMap projection;     // cone -> A[1]
};
Cone cone(const ChainMap& f);

// Complex of subquotients num(n)/den(n) of an ambient complex, in canonical coordinates.
struct SubquotientComplex {
    CochainComplex complex;
    std::map<int, Subquotient> pieces;

    LinearMap projection(int n) const;
    LinearMap section(int n) const;
};

using DegreeSubspaces = std::function<Subspace(int)>;

SubquotientComplex subquotient_complex(const CochainComplex& c, const DegreeSubspaces& num,
                                       const DegreeSubspaces& den);

struct Subcomplex {
    SubquotientComplex sub;
    ChainMap inclusion;
};
struct QuotientComplex {
    SubquotientComplex quot;
    ChainMap projection;
};

Subcomplex subcomplex(const CochainComplex& c, const DegreeSubspaces& s);
QuotientComplex quotient_complex(const CochainComplex& c, const DegreeSubspaces& s);

// tau_{<=a} as a subcomplex (kernel of d^a in degree a), tau_{>=b} as a quotient.
Subcomplex truncate_le(const CochainComplex& c, int a);
QuotientComplex truncate_ge(const CochainComplex& c, int b);

// Is image(in) == kernel(out)?
bool exact_at(const LinearMap& in, const LinearMap& out);

// Decreasing filtration by subcomplexes with F^a = C and F^{b+1} = 0; type [a, b].
class FilteredComplex {
public:
    FilteredComplex() = default;
    // steps[k][n - total.lo()] is F^{a+k} in degree n
    FilteredComplex(CochainComplex total, int a, std::vector<std::vector<Subspace>> steps);

    const CochainComplex& total() const { return total_; }
    int type_lo() const { return a_; }
    int type_hi() const { return a_ + static_cast<int>(steps_.size()) - 1; }

    Subspace step(int p, int n) const;
    DegreeSubspaces step_fn(int p) const;

private:
    CochainComplex total_;
    int a_ = 0;
    std::vector<std::vector<Subspace>> steps_;
};

// Builds a filtered complex from per-degree steps given as functions of (p, n).
FilteredComplex make_filtered(const CochainComplex& total, int a, int b,
                              const std::function<Subspace(int p, int n)>& step);

// F'^p = F^{p+l}.
FilteredComplex translate_filtration(const FilteredComplex& fc, int l);
// Filtration on X[d] with F'^p(X[d]) = F^{p-d}(X)[d].
FilteredComplex shift_filtered(const FilteredComplex& fc, int d);
// F^p = tau_{<=-p-k} (kernel model).
FilteredComplex truncation_filtration(const CochainComplex& c, int k = 0);

// Throws std::invalid_argument naming the offending step and degree unless f(F^p) lies in G^p.
void require_filtered(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt);

// Finite-dimensional space with two decreasing filtrations.
struct BifilteredSpace {
    std::size_t dim = 0;
    int f_start = 0;
    std::vector<Subspace> f;  // f[k] = F^{f_start + k}; F below start is everything, above is zero
    int g_start = 0;
    std::vector<Subspace> g;

    Subspace F(int a) const;
    Subspace G(int c) const;
};

struct ZassenhausPiece {
    int a = 0;
    int c = 0;
    Subquotient fg;  // Gr^F_a Gr^G_c
    Subquotient gf;  // Gr^G_c Gr^F_a
    RatMatrix iso;   // fg coordinates -> gf coordinates
};

std::vector<ZassenhausPiece> zassenhaus(const BifilteredSpace& v);
// Verifies that iso is invertible and intertwines the projections from F^a cap G^c.
bool check_zassenhaus(const BifilteredSpace& v, const ZassenhausPiece& piece);

}  // namespace sseq
