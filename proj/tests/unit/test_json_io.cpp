#include <catch2/catch_amalgamated.hpp>

#include "sseq/gen.hpp"
#include "sseq/io.hpp"

using namespace sseq;
using io::Json;

namespace {

std::string where_of(const std::string& text)
{
    try {
        io::input_from_json(Json::parse(text));
    } catch (const io::ParseError& e) {
        return e.where();
    }
    return "no error";
}

}  // namespace

TEST_CASE("matrix entries are integers or exact fractions")
{
    RatMatrix m = io::matrix_from_json(Json::parse(R"([[1, "-2/4"], ["3", 0]])"), 2, 2, "");
    CHECK(m(0, 1) == Rational(-1, 2));
    CHECK(m(1, 0) == 3);
    Json back = io::matrix_to_json(m);
    CHECK(back.dump() == R"([[1,"-1/2"],[3,0]])");
    CHECK(io::matrix_from_json(Json::array(), 0, 3, "").rows() == 0);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1.5]]"), 1, 1, ""), io::ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1/0"]])"), 1, 1, ""), io::ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1, 2]]"), 1, 1, ""), io::ParseError);
    // big entries stay exact
    Rational big = parse_rational("123456789012345678901234567891/7");
    RatMatrix b(1, 1);
    b(0, 0) = big;
    CHECK(io::matrix_from_json(io::matrix_to_json(b), 1, 1, "")(0, 0) == big);
}

TEST_CASE("filtered complexes survive a round trip")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        FilteredComplex fc = gen::random_filtered_complex(seed);
        Json j = io::filtered_to_json(fc);
        FilteredComplex back = io::filtered_from_json(Json::parse(j.dump()));
        CHECK(back.total() == fc.total());
        CHECK(back.type_lo() == fc.type_lo());
        CHECK(back.type_hi() == fc.type_hi());
        const CochainComplex& c = fc.total();
        for (int p = fc.type_lo(); p <= fc.type_hi(); ++p)
            for (int n = c.lo(); n <= c.hi(); ++n)
                CHECK(back.step(p, n) == fc.step(p, n));
        CHECK(same_data(compute_ss(back), compute_ss(fc)));
    }
}

TEST_CASE("a small hand-written filtered complex")
{
    const char* text = R"({
        "support": [0, 1],
        "dims": {"0": 1, "1": 1},
        "diff": {"0": [[1]]},
        "filtration": {"start": 0, "steps": [{"0": [[1]], "1": [[1]]}, {"1": [[1]]}, {"1": [[1]]}]}
    })";
    io::Input in = io::input_from_json(Json::parse(text));
    REQUIRE(in.filtered);
    SpectralSequence ss = compute_ss(*in.filtered);
    CHECK(ss.dim(1, {0, 0}) == 1);
    CHECK(ss.dim(1, {2, -1}) == 1);
    CHECK(ss.dim(2, {0, 0}) == 1);
    CHECK(ss.infinity().dims.empty());
}

TEST_CASE("parse errors carry their location")
{
    CHECK(where_of(R"({"dims": {}})") == "");
    CHECK(where_of(R"({"support": [0, 0], "dims": {"x": 1}})") == "/dims/x");
    CHECK(where_of(R"({"support": [0, 1], "dims": {"0": 1, "1": 1}, "diff": {"0": [[1, 2]]}})") == "/diff/0/0");
    CHECK(where_of(R"({"support": [0, 1], "dims": {"0": 1, "1": 1}, "diff": {"1": [[1]]}})") == "/diff/1");
    // d^2 != 0
    CHECK(where_of(R"({"support": [0, 2], "dims": {"0": 1, "1": 1, "2": 1},
                       "diff": {"0": [[1]], "1": [[1]]}})") == "/diff");
    // a filtration that is not a subcomplex
    CHECK(where_of(R"({"support": [0, 1], "dims": {"0": 1, "1": 1}, "diff": {"0": [[1]]},
                       "filtration": {"start": 0, "steps": [{"0": [[1]], "1": [[1]]}, {"0": [[1]]}]}})") ==
          "/filtration");
    CHECK(where_of(R"({"cells": [{"name": "v", "dim": 0}], "covers": [{"face": "v", "cell": "w", "sign": 1}]})") ==
          "/covers/0/cell");
    CHECK(where_of(R"({"cells": [{"name": "v", "dim": 0}, {"name": "e", "dim": 1}],
                       "covers": [{"face": "v", "cell": "e", "sign": 1}],
                       "sheaf": "constant", "flag": [["v", "e"], ["e"], []]})") == "/flag");
    CHECK(where_of(R"({"cells": [{"name": "v", "dim": 0}, {"name": "e", "dim": 1}],
                       "covers": [{"face": "v", "cell": "e", "sign": 1}],
                       "sheaf": {"stalks": {"v": 1, "e": 1},
                                 "restrictions": [{"face": "v", "cell": "e", "matrix": [[1, 0]]}]}})") ==
          "/sheaf/restrictions/0/matrix/0");
    CHECK_THROWS_AS(io::read_input("/nonexistent/input.json"), io::ParseError);
}

TEST_CASE("geometry with a flag and a restriction")
{
    const char* text = R"({
        "cells": [{"name": "v0", "dim": 0}, {"name": "v1", "dim": 0},
                  {"name": "e0", "dim": 1}, {"name": "e1", "dim": 1}],
        "covers": [{"face": "v0", "cell": "e0", "sign": -1}, {"face": "v1", "cell": "e0", "sign": 1},
                   {"face": "v1", "cell": "e1", "sign": -1}, {"face": "v0", "cell": "e1", "sign": 1}],
        "sheaf": {"constant": 2},
        "degree": 1,
        "flag": [["v0", "v1", "e0", "e1"], ["v0"], []],
        "restrict_to": ["v0"],
        "d": -1
    })";
    io::Input in = io::input_from_json(Json::parse(text));
    REQUIRE(in.geometry);
    const io::Geometry& g = *in.geometry;
    CHECK(g.poset->is_closed_complex());
    CHECK(g.complex.lo() == 1);
    REQUIRE(g.flag);
    CHECK(g.flag->n == 1);
    CHECK(g.d == -1);
    CochainComplex c = flatten(g.complex).complex;
    CHECK(cohomology(c, 1).dim() == 2);
    CHECK(cohomology(c, 2).dim() == 2);

    io::Geometry back = io::geometry_from_json(Json::parse(io::geometry_to_json(g).dump()));
    CHECK(flatten(back.complex).complex == c);
    CHECK(back.flag->levels == g.flag->levels);
    CHECK(*back.restrict_to == *g.restrict_to);
}

TEST_CASE("random sheaf complexes survive a round trip")
{
    gen::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        FacePoset y = gen::random_simplicial(rng, gen::uniform(rng, 2, 4), 2);
        io::Geometry g;
        g.complex = gen::random_sheaf_complex(rng, y, -1, gen::uniform(rng, 1, 3), 2);
        g.poset = g.complex.base();
        g.flag = gen::random_flag(rng, *g.poset);
        io::Geometry back = io::geometry_from_json(Json::parse(io::geometry_to_json(g).dump()));
        CHECK(flatten(back.complex).complex == flatten(g.complex).complex);
        CHECK(back.flag->levels == g.flag->levels);
        for (CellId c = 0; c < y.size(); ++c)
            CHECK(back.complex.stalk_complex(c) == g.complex.stalk_complex(c));
    }
}

TEST_CASE("dumps")
{
    FilteredComplex fc = gen::random_filtered_complex(11);
    SpectralSequence ss = compute_ss(fc);
    Json pages = io::pages_to_json(ss);
    CHECK(pages["pages"].size() == ss.pages.size());
    std::size_t slots = 0;
    for (const auto& p : pages["pages"])
        slots += p["slots"].size();
    std::size_t expected = 0;
    for (const Page& p : ss.pages)
        expected += p.dims.size();
    CHECK(slots == expected);

    Json ab = io::abutment_to_json(ss.abutment);
    CHECK(ab["filtration"] == "F");
    CHECK(ab["degrees"].size() == ss.abutment.degrees.size());

    SpectralObject so = so_from_filtered(fc);
    Json sj = io::spectral_object_to_json(so);
    CHECK(sj["objects"].size() == so.objects.size());
    CHECK(sj["boundary"].size() == so.boundary.size());

    gen::HalfOpenExample ex = gen::half_open_example();
    SSMorphism m = realign(restriction_functor(ex.point, ex.d), ex.source);
    Json mj = io::morphism_to_json(m);
    CHECK(mj["first_page"] == 1);
    CHECK(mj["pages"][0]["components"][0]["rank"] == 1);
}
