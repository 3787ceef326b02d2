#include "sseq/gen.hpp"
#include "sseq/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace sseq;
using io::Json;

namespace {

enum Exit { ok = 0, usage = 1, verification = 2 };

struct Options {
    std::string input;
    std::string output;
    std::string format = "tsv";
    bool renumber = false;
    int translate = 0;
    int page = 0;  // 0 = every page
    std::uint64_t seed = 0;
    std::size_t count = 1;
    int n = -1;  // -1 = vary with the seed
    std::string mode = "mixed";
    std::string which;
    std::string kind = "filtered";
    bool plain = false;
    int shift = 1;
    bool quiet = false;
};

// The filtered complex an input describes, with what is needed for the cross-checks.
struct Computation {
    FilteredComplex fc;
    std::optional<io::Geometry> geometry;
};

Computation load(const Options& o)
{
    io::Input in = io::read_input(o.input);
    Computation c;
    if (in.filtered) {
        c.fc = *in.filtered;
        return c;
    }
    c.geometry = in.geometry;
    const io::Geometry& g = *in.geometry;
    FlatComplex flat = flatten(g.complex);
    c.fc = g.flag ? flag_filtered_complex(flat, *g.flag) : truncation_filtered_complex(flat, g.complex, g.tshift);
    return c;
}

SpectralSequence sequence(const Options& o, const FilteredComplex& fc)
{
    SpectralSequence ss = compute_ss(fc);
    if (o.translate != 0)
        ss = translate(ss, o.translate);
    if (o.renumber)
        ss = renumber(ss);
    return ss;
}

void emit(const Options& o, const Json& j)
{
    if (o.output.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(o.output);
    if (!f)
        throw io::ParseError(o.output, "cannot write file");
    f << j.dump(2) << '\n';
}

int cmd_page(const Options& o)
{
    Computation c = load(o);
    SpectralSequence ss = sequence(o, c.fc);
    if (o.format == "json") {
        emit(o, io::pages_to_json(ss));
        return ok;
    }
    for (const Page& page : ss.pages) {
        if (o.page != 0 && page.r != o.page)
            continue;
        for (const auto& [s, d] : page.dims)
            std::cout << page.r << '\t' << s.first << '\t' << s.second << '\t' << d << '\n';
    }
    return ok;
}

std::string jumps(const Abutment& ab, int u, Indexing column)
{
    Abutment view = ab;
    view.column = column;
    std::ostringstream out;
    for (int c = view.lo_step(u); c <= view.hi_step(u); ++c)
        out << (c == view.lo_step(u) ? "" : ",") << c << ':' << view.graded_dim(u, c);
    return out.str();
}

int cmd_abutment(const Options& o)
{
    Computation c = load(o);
    SpectralSequence ss = sequence(o, c.fc);
    const Abutment& ab = ss.abutment;
    const bool consistent = check_invariants(ss).empty();

    // for flag inputs, F^p H^u must be the kernel of restriction to Y_{p-1}
    std::map<int, bool> flag_ok;
    if (c.geometry && c.geometry->flag && !o.renumber && o.translate == 0) {
        const Flag& flag = *c.geometry->flag;
        for (int p = -flag.n; p <= 1; ++p)
            for (const auto& [u, map] : restriction_map(c.geometry->complex, flag.Y(p - 1))) {
                auto it = flag_ok.emplace(u, true).first;
                it->second = it->second && ab.F(u, p) == kernel(map);
            }
    }
    auto check = [&](int u) {
        auto it = flag_ok.find(u);
        return consistent && (it == flag_ok.end() || it->second);
    };

    bool all = true;
    for (const auto& [u, deg] : ab.degrees)
        all = all && check(u);
    if (o.format == "json") {
        Json j = io::abutment_to_json(ab);
        for (auto& d : j["degrees"])
            d["check"] = check(d["degree"].get<int>()) ? "OK" : "MISMATCH";
        emit(o, j);
        return all ? ok : verification;
    }
    for (const auto& [u, deg] : ab.degrees) {
        if (deg.dim == 0)
            continue;
        const Indexing f_col = Indexing::standard, l_col = Indexing::renumbered;
        std::cout << u << '\t' << jumps(ab, u, ab.column == Indexing::standard ? f_col : l_col) << '\t'
                  << jumps(ab, u, ab.column == Indexing::standard ? l_col : f_col) << '\t' << deg.dim << '\t'
                  << (check(u) ? "OK" : "MISMATCH") << '\n';
    }
    return all ? ok : verification;
}

void print_morphism(const Options& o, const SSMorphism& m)
{
    if (o.format == "json") {
        emit(o, io::morphism_to_json(m));
        return;
    }
    for (int r = m.first_page; r <= m.last_page(); ++r) {
        std::set<Slot> slots;
        for (const auto& [s, d] : m.source->page(r).dims)
            slots.insert(s);
        for (const auto& [s, d] : m.target->page(r).dims)
            slots.insert(s);
        for (const Slot& s : slots) {
            LinearMap f = m.at(r, s);
            std::cout << r << '\t' << s.first << '\t' << s.second << '\t' << f.source_dim() << '\t' << f.target_dim()
                      << '\t' << f.rank() << '\n';
        }
    }
}

int cmd_realign(const Options& o)
{
    io::Input in = io::read_input(o.input);
    SSMorphism m;
    if (in.geometry) {
        const io::Geometry& g = *in.geometry;
        if (!g.restrict_to)
            throw io::ParseError(o.input, "realign needs \"restrict_to\" and \"d\"");
        SheafTObject x{std::make_shared<const SheafComplex>(g.complex), g.tshift, CochainModel::automatic};
        auto u = restriction_functor(*g.restrict_to, g.d);
        m = o.plain ? functorial_map(u, x) : realign(u, x);
    } else {
        TComplex x{in.filtered->total(), 0};
        auto u = shift_functor(o.shift);
        m = o.plain ? functorial_map(u, x) : realign(u, x);
    }
    print_morphism(o, m);
    return check_morphism(m).empty() ? ok : verification;
}

// equal page dims, differential ranks and abutment step dims
bool same_shape(const SpectralSequence& a, const SpectralSequence& b)
{
    const int last = std::max(a.last_page(), b.last_page());
    for (int r = std::min(a.first_page(), b.first_page()); r <= last; ++r) {
        if (a.page(r).dims != b.page(r).dims)
            return false;
        for (const auto& [s, d] : a.page(r).d)
            if (d.rank() != b.d(r, s).rank())
                return false;
    }
    for (const auto& [u, deg] : a.abutment.degrees)
        for (int p = a.abutment.lo_step(u) - 1; p <= a.abutment.hi_step(u) + 1; ++p)
            if (a.abutment.F(u, p).dim() != b.abutment.F(u, p).dim())
                return false;
    return true;
}

struct Outcome {
    bool exhausted = false;
    bool hypotheses = false;
    bool conclusion = false;
    std::string note;
};

Outcome verify_one(const Options& o, std::uint64_t seed)
{
    Outcome out;
    const std::string& w = o.which;
    try {
        if (w == "pippa") {
            gen::Rng rng(seed);
            PippaResult r = check_pippa(gen::random_pippa(rng, 1 + static_cast<int>(seed % 2)));
            out.hypotheses = r.fired != PippaCase::hypotheses_fail;
            out.conclusion = r.conclusion_holds;
            out.note = to_string(r.fired);
        } else if (w == "ssis1" || w == "ssis2") {
            const int v = w == "ssis1" ? 1 : 2;
            VerifierReport r = check_ssis(gen::random_ssis(seed, v), v);
            out.hypotheses = r.hypotheses_hold;
            out.conclusion = r.conclusion_holds;
            if (!r.violations.empty())
                out.note = r.violations.front();
        } else if (w == "descrfiltr" || w == "descrfiltr2") {
            const int v = w == "descrfiltr" ? 1 : 2;
            const int n = o.n >= 0 ? o.n : static_cast<int>(seed % 5);
            const bool degenerate = o.mode == "degenerate" || (o.mode == "mixed" && seed % 2 == 0);
            VerifierReport r = verify_descrfiltr(gen::make_system(seed, n, v, degenerate), v);
            out.hypotheses = r.hypotheses_hold;
            out.conclusion = r.conclusion_holds;
            out.note = "n=" + std::to_string(n) + (degenerate ? " degenerate" : " geometric");
            if (!r.violations.empty())
                out.note += " " + r.violations.front();
        } else if (w == "axioms") {
            FilteredComplex fc = gen::random_filtered_complex(seed);
            SpectralObject so = so_from_filtered(fc);
            Report rep = check_axioms(so);
            AppliedT t = apply_T(so);
            out.hypotheses = true;
            out.conclusion = rep.ok && check_long_exact(t.gso).ok && same_shape(t.ss, compute_ss(fc));
            if (!rep.violations.empty())
                out.note = rep.violations.front();
        } else if (w == "realign") {
            FilteredComplex fc = gen::random_filtered_complex(seed);
            TComplex x{fc.total(), static_cast<int>(seed % 3) - 1};
            const int dp = static_cast<int>(seed % 5) - 2;
            auto u = shift_functor(dp);
            out.hypotheses = check_shift_exact(u, x).ok;
            out.note = "shift " + std::to_string(dp);
            if (out.hypotheses) {
                SSMorphism m = realign(u, x);
                bool iso = check_morphism(m).empty();
                for (int r = m.first_page; r <= m.last_page(); ++r)
                    for (const auto& [s, d] : m.source->page(r).dims)
                        iso = iso && m.at(r, s).is_iso();
                out.conclusion = iso;
            }
        } else {
            throw CLI::ValidationError("verify", "unknown verifier " + w);
        }
    } catch (const gen::GenerationExhausted& e) {
        out.exhausted = true;
        out.note = e.what();
    }
    return out;
}

int cmd_verify(const Options& o)
{
    std::vector<Outcome> results(o.count);
    std::string fatal;
    const auto count = static_cast<long>(o.count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = verify_one(o, o.seed + static_cast<std::uint64_t>(i));
        } catch (const std::exception& e) {
#pragma omp critical
            if (fatal.empty())
                fatal = e.what();
        }
    }
    if (!fatal.empty())
        throw std::runtime_error(fatal);

    std::size_t total = 0, hyp = 0, concl = 0;
    Json rows = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Outcome& r = results[i];
        const std::uint64_t seed = o.seed + i;
        if (!r.exhausted) {
            ++total;
            hyp += r.hypotheses;
            concl += r.hypotheses && r.conclusion;
        }
        const char* status = r.exhausted ? "exhausted" : !r.hypotheses ? "skipped" : r.conclusion ? "pass" : "FAIL";
        if (o.format == "json")
            rows.push_back({{"seed", seed}, {"status", status}, {"note", r.note}});
        else if (!o.quiet)
            std::cout << seed << '\t' << status << '\t' << r.note << '\n';
    }
    const bool failed = concl != hyp;
    if (o.format == "json") {
        emit(o, {{"verifier", o.which},
                 {"instances", total},
                 {"hypotheses_pass", hyp},
                 {"conclusion_pass", concl},
                 {"results", rows}});
        return failed ? verification : ok;
    }
    auto rate = [](std::size_t k, std::size_t n) {
        std::ostringstream s;
        s << k << '/' << n;
        if (n > 0)
            s << " (" << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(k) / static_cast<double>(n)
              << "%)";
        return s.str();
    };
    std::cout << "# " << o.which << " hypotheses " << rate(hyp, total) << " conclusions " << rate(concl, hyp) << '\n';
    return failed ? verification : ok;
}

int cmd_gen(const Options& o)
{
    gen::Rng rng(o.seed);
    if (o.kind == "filtered") {
        emit(o, io::filtered_to_json(gen::random_filtered_complex(o.seed)));
        return ok;
    }
    if (o.kind != "geometry")
        throw CLI::ValidationError("gen", "kind must be filtered or geometry");
    FacePoset y = gen::random_simplicial(rng, gen::uniform(rng, 2, 4), 2);
    io::Geometry g;
    g.complex = gen::random_sheaf_complex(rng, y, 0, gen::uniform(rng, 1, 2), 2);
    g.poset = g.complex.base();
    g.flag = gen::random_flag(rng, *g.poset);
    emit(o, io::geometry_to_json(g));
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral sequences of filtered complexes and cellular sheaves"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    };
    auto add_sequence = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "Filtered complex or geometry JSON")->required();
        sub->add_flag("--renumber", o.renumber, "Use the renumbered sequence");
        sub->add_option("--translate", o.translate, "Translate the filtration by L");
        sub->add_option("--output", o.output, "Write JSON output to this file");
        add_format(sub);
    };

    auto* page = app.add_subcommand("page", "Dump the pages");
    add_sequence(page);
    page->add_option("--page", o.page, "Only this page");

    auto* abutment = app.add_subcommand("abutment", "Dump the abutment filtration with cross-checks");
    add_sequence(abutment);

    auto* realign = app.add_subcommand("realign", "Dump the realigned morphism of a shift-exact functor");
    realign->add_option("--input", o.input, "Geometry with restrict_to and d, or a filtered complex")->required();
    realign->add_flag("--plain", o.plain, "Dump the unrealigned functorial map instead");
    realign->add_option("--shift", o.shift, "Shift functor [d'] applied to a filtered complex input");
    realign->add_option("--output", o.output, "Write JSON output to this file");
    add_format(realign);

    auto* verify = app.add_subcommand("verify", "Run a verifier over seeded instances");
    verify->add_option("which", o.which, "Verifier")
        ->required()
        ->check(CLI::IsMember({"pippa", "ssis1", "ssis2", "descrfiltr", "descrfiltr2", "axioms", "realign"}));
    verify->add_option("--seed", o.seed, "First seed");
    verify->add_option("--count", o.count, "Number of seeds");
    verify->add_option("--n", o.n, "System length for descrfiltr")->check(CLI::Range(0, 8));
    verify->add_option("--mode", o.mode, "Systems to generate")
        ->check(CLI::IsMember({"degenerate", "geometric", "mixed"}));
    verify->add_flag("-q,--quiet", o.quiet, "Print only the summary line");
    verify->add_option("--output", o.output, "Write JSON output to this file");
    add_format(verify);

    auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded instance as JSON");
    gen_cmd->add_option("kind", o.kind, "filtered or geometry")->check(CLI::IsMember({"filtered", "geometry"}));
    gen_cmd->add_option("--seed", o.seed, "Seed");
    gen_cmd->add_option("--output", o.output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*page)
            return cmd_page(o);
        if (*abutment)
            return cmd_abutment(o);
        if (*realign)
            return cmd_realign(o);
        if (*verify)
            return cmd_verify(o);
        return cmd_gen(o);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const RealignError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return verification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return verification;
    }
}
