#pragma once

#include "sseq/cellsheaf.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace sseq::io {

using Json = nlohmann::ordered_json;

// Carries a JSON-pointer-like location, e.g. "/diff/0/1/2".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where)
    {
    }
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Rows of entries; each entry an integer or a "num/den" string.
RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json matrix_to_json(const RatMatrix& m);
Json rational_to_json(const Rational& q);

// {"support": [lo, hi], "dims": {"n": dim}, "diff": {"n": matrix},
//  "filtration": {"start": a, "steps": [{"n": basis rows}, ...]}}
// steps[k] is F^{a+k}; a degree missing from a step is the zero subspace.
FilteredComplex filtered_from_json(const Json& j);
Json filtered_to_json(const FilteredComplex& fc);

// Cells, covers with incidence signs, a sheaf complex and optional flag and restriction data.
struct Geometry {
    PosetPtr poset;
    SheafComplex complex;
    std::optional<Flag> flag;
    int tshift = 0;
    std::optional<CellSet> restrict_to;  // closed set for the restriction functor
    int d = 0;                           // its t-structure shift
};

Geometry geometry_from_json(const Json& j);
Json geometry_to_json(const Geometry& g);

struct Input {
    std::optional<FilteredComplex> filtered;
    std::optional<Geometry> geometry;
};

// Geometry when the document has "cells", otherwise a filtered complex.
Input input_from_json(const Json& j);
Input read_input(const std::string& path);

Json pages_to_json(const SpectralSequence& ss);
Json abutment_to_json(const Abutment& ab);
Json morphism_to_json(const SSMorphism& m);
Json spectral_object_to_json(const SpectralObject& so);

}  // namespace sseq::io
