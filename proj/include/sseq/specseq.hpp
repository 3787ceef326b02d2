#pragma once

#include "sseq/homalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sseq {

using Slot = std::pair<int, int>;

// standard: E_r^{pq}, abutment filtered by F.  renumbered: calE_r^{st} with
// calE_{r+1}^{st} = E_r^{-t,s+2t}, abutment filtered by L^s H^u = F^{s-u} H^u.
enum class Indexing { standard, renumbered };

struct Page {
    int r = 1;
    std::map<Slot, std::size_t> dims;  // nonzero slots only
    std::map<Slot, LinearMap> d;       // d_r, present when source and target are nonzero

    std::size_t dim(Slot s) const;
    long euler() const;
};

struct AbutmentDegree {
    std::size_t dim = 0;
    int start = 0;               // F^p = H for p <= start
    std::vector<Subspace> steps; // steps[k] = F^{start+k}; F^p = 0 past the end

    Subspace F(int p) const;
};

struct Abutment {
    Indexing column = Indexing::standard;
    std::map<int, AbutmentDegree> degrees;

    std::size_t dim(int u) const;
    Subspace F(int u, int p) const;
    Subspace L(int u, int s) const { return F(u, s - u); }
    // the filtration whose graded pieces match the E_infinity columns
    Subspace column_step(int u, int c) const { return column == Indexing::standard ? F(u, c) : L(u, c); }
    std::size_t graded_dim(int u, int c) const;
    int lo_step(int u) const;
    int hi_step(int u) const;
};

class SpectralSequence {
public:
    Indexing indexing = Indexing::standard;
    std::vector<Page> pages;  // consecutive page numbers; the last page is E_infinity
    // passages[k]: E_{r+1} -> E_r for r = pages[k].r, through canonical lifts; lands in ker d_r
    std::vector<std::map<Slot, LinearMap>> passages;
    // chain-level presentation of each nonzero slot (kept for induced maps)
    std::vector<std::map<Slot, Subquotient>> reps;
    Abutment abutment;
    // E_infinity slot -> H^{total degree}; lands in the column step and is injective modulo the next one
    std::map<Slot, LinearMap> limit;

    int first_page() const { return pages.empty() ? 1 : pages.front().r; }
    int last_page() const { return pages.empty() ? 1 : pages.back().r; }
    // pages past the end repeat E_infinity
    const Page& page(int r) const;
    const Page& infinity() const { return pages.back(); }
    std::size_t dim(int r, Slot s) const { return page(r).dim(s); }
    LinearMap d(int r, Slot s) const;
    LinearMap passage(int r, Slot s) const;
    static Slot d_target(int r, Slot s) { return {s.first + r, s.second - r + 1}; }
    static Slot d_source(int r, Slot s) { return {s.first - r, s.second + r - 1}; }
    int turning_page() const;
    bool is_zero() const;
};

// Classical spectral sequence of a filtered complex, pages E_1 .. E_{b-a+1} = E_infinity.
SpectralSequence compute_ss(const FilteredComplex& fc);

SpectralSequence renumber(const SpectralSequence& ss);
SpectralSequence unrenumber(const SpectralSequence& ss);
// slot (p,q) of the result is slot (p+l, q-l) of the input; F(l)^s = F^{l+s}
SpectralSequence translate(const SpectralSequence& ss, int l);

bool same_data(const SpectralSequence& a, const SpectralSequence& b);

// Internal consistency: d^2 = 0, page passage, E_infinity against the abutment.
std::vector<std::string> check_invariants(const SpectralSequence& ss);

struct Report {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string what)
    {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// F^p(T^u(X[d])) = F^{p-d}(T^{u+d}(X)) and the matching L statement.
Report shift_compat_check(const FilteredComplex& fc, int d);

using SSPtr = std::shared_ptr<const SpectralSequence>;

struct SSMorphism {
    SSPtr source;
    SSPtr target;
    int first_page = 1;
    std::vector<std::map<Slot, LinearMap>> components;  // components[r - first_page]
    std::map<int, LinearMap> abutment;

    int last_page() const { return first_page + static_cast<int>(components.size()) - 1; }
    LinearMap at(int r, Slot s) const;
    LinearMap on_abutment(int u) const;
};

SSMorphism induced_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt);
SSMorphism induced_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& tgt, SSPtr src_ss,
                       SSPtr tgt_ss);
SSMorphism compose(const SSMorphism& g, const SSMorphism& f);
SSMorphism zero_morphism(SSPtr source, SSPtr target);
SSMorphism renumber(const SSMorphism& m);
SSMorphism translate(const SSMorphism& m, int l);

std::vector<std::string> check_morphism(const SSMorphism& m);

// Two rows of three-term complexes with vertical maps; the criterion is about the induced map in the middle.
struct PippaDiagram {
    LinearMap dE1, dE2;  // E' -> E -> E''
    LinearMap dF1, dF2;  // F' -> F -> F''
    LinearMap phi1, phi, phi2;
};

enum class PippaCase { hypotheses_fail, monic, epic, both };

struct PippaResult {
    PippaCase fired = PippaCase::hypotheses_fail;
    bool conclusion_holds = false;
    LinearMap induced;  // H_E -> H_F
};

PippaResult check_pippa(const PippaDiagram& diag);

struct VerifierReport {
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    std::vector<std::string> violations;
};

// m must be a morphism of renumbered sequences; hypotheses are read on page 2.
VerifierReport check_ssis(const SSMorphism& m, int variant);

// variant 1: members E_0, E_{-1}, ..., E_{-n} with maps[k]: E_{-k} -> E_{-k-1}
// variant 2: members E_0, E_1, ..., E_n with maps[k]: E_{k+1} -> E_k
struct SSSystem {
    int variant = 1;
    int n = 0;
    std::vector<SSPtr> members;
    std::vector<SSMorphism> maps;

    // phi(0,-i-1) (variant 1) or phi(i,0) (variant 2) on H^u
    LinearMap abutment_composite(int i, int u) const;
};

VerifierReport verify_descrfiltr(const SSSystem& sys, int variant);

std::string to_string(PippaCase c);

}  // namespace sseq
