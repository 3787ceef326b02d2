#pragma once

#include "sseq/cellsheaf.hpp"
#include "sseq/specseq.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace sseq::gen {

using Rng = std::mt19937_64;

class GenerationExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int uniform(Rng& rng, int lo, int hi);
RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3, double density = 0.6);
// integer matrix with integer inverse
RatMatrix random_unimodular(Rng& rng, std::size_t n);
RatMatrix random_injective(Rng& rng, std::size_t rows, std::size_t cols);
RatMatrix random_surjective(Rng& rng, std::size_t rows, std::size_t cols);

struct FilteredShape {
    int lo = 0;
    int degrees = 3;
    std::size_t max_dim = 6;
    int a = 0;
    int length = 3;  // number of steps b - a + 1
    int pieces = 6;
};

// Direct sum of elementary filtered pieces (a class, or x -> y with filtration jump),
// moved into general position by a random change of basis in each degree.
FilteredComplex random_filtered_complex(Rng& rng, const FilteredShape& shape);
FilteredComplex random_filtered_complex(std::uint64_t seed);

FilteredComplex direct_sum(const FilteredComplex& x, const FilteredComplex& y);

struct FilteredMap {
    FilteredComplex source;
    FilteredComplex target;
    ChainMap map;
};
// projections and inclusions between direct sums, possibly composed
FilteredMap random_filtered_map(Rng& rng, const FilteredShape& shape);

// Graded space with zero differential; dims[(p, u)] is the size of block p in degree u.
FilteredComplex graded_filtered(const std::map<std::pair<int, int>, std::size_t>& dims, int a, int b);

PippaDiagram random_pippa(Rng& rng, int variant);
BifilteredSpace random_bifiltered(Rng& rng, std::size_t max_dim = 6, int length = 3);

// Small random simplicial complex of dimension <= max_dim.
FacePoset random_simplicial(Rng& rng, int vertices, int max_dim);
// Quotient of a constant sheaf Q^m by a family of subspaces growing along the order.
CellularSheaf random_sheaf(Rng& rng, const FacePoset& y, std::size_t m);
// Complex of such quotients with terms in degrees lo .. lo+length-1.
SheafComplex random_sheaf_complex(Rng& rng, const FacePoset& y, int lo, int length, std::size_t m = 3);
// First two terms of the injective resolution of a sheaf with cohomology in high degrees;
// its truncation spectral sequence has nonzero d_2 whenever H^2 of that sheaf is nonzero.
SheafComplex random_twisted_complex(Rng& rng, const FacePoset& y, std::size_t m = 2);
Flag random_flag(Rng& rng, const FacePoset& y);

// Systems of morphisms whose abutment maps describe the L filtration. Geometric systems come from
// skeleta (variant 1) or from open pieces cut by dimension (variant 2) of a random complex.
SSSystem make_system(std::uint64_t seed, int n, int variant, bool degenerate, int max_retries = 64);
// First map of a generated system; satisfies the hypotheses of the matching ssis variant.
SSMorphism random_ssis(std::uint64_t seed, int variant);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

// Small fixed geometries.
PosetPtr point();
PosetPtr half_open_interval();  // v < e, the other end of e missing
PosetPtr closed_interval();
PosetPtr circle();              // two vertices, two edges
Flag vertex_flag(const FacePoset& y, const std::string& vertex);  // Y_{-1} = {vertex}

// Constant coefficients shifted by one on the half-open interval, restricted to its vertex.
struct HalfOpenExample {
    SheafTObject source;
    CellSet point;
    int d = -1;
};
HalfOpenExample half_open_example(int source_tshift = 1, int d = -1);

}  // namespace sseq::gen
