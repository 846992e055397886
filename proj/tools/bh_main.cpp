#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bh/json_io.hpp"
#include "bh/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 10;
constexpr int kExitInconclusive = 20;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bh::Error(bh::errc::bad_input, "cannot open file: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void emit(const bh::json& j, const std::string& out_path) {
    std::string text = bh::pretty(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw bh::Error(bh::errc::bad_input, "cannot write file: " + out_path);
        out << text;
    }
}

// braid half-twists for genus 0; a user-supplied file otherwise (or on request)
std::vector<bh::Automorphism> resolve_generators(const bh::MonodromyCover& cover,
                                                 const std::string& gens_path) {
    if (!gens_path.empty())
        return bh::automorphisms_from_json(bh::load_json_file(gens_path), cover.sig());
    if (cover.sig().genus == 0 && cover.sig().branch_count >= 2)
        return bh::braid_generators(cover.sig());
    return {};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"branched-cover analyzer: monodromy covers, curve lifting, Birman-Hilden verdicts"};
    app.require_subcommand(1);

    std::string cover_path, graph_path, out_path, gens_path;
    std::size_t limit = 100000;
    int threads = 1;
    int m = 2;
    int gi = 1, gj = 2;

    auto add_common = [&](CLI::App* sub, bool with_gens) {
        sub->add_option("--out", out_path, "write the JSON result to a file instead of stdout");
        if (with_gens) {
            sub->add_option("--gens", gens_path,
                            "automorphism file (required for positive-genus orbit searches)");
            sub->add_option("--limit", limit, "orbit class limit")->capture_default_str();
            sub->add_option("--threads", threads, "worker threads for orbit/WCL search")
                ->capture_default_str();
        }
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full property/fiber/verdict report");
    analyze->add_option("cover", cover_path, "cover JSON file")->required();
    add_common(analyze, true);

    CLI::App* lift = app.add_subcommand("lift", "lift the standard curve around the first m branch points");
    lift->add_option("cover", cover_path, "cover JSON file")->required();
    lift->add_option("--m", m, "number of enclosed branch points")->required();
    add_common(lift, false);

    CLI::App* wcl = app.add_subcommand("wcl", "decide the weak curve lifting property");
    wcl->add_option("cover", cover_path, "cover JSON file")->required();
    add_common(wcl, true);

    CLI::App* verdict = app.add_subcommand("verdict", "Birman-Hilden verdict with certificate");
    verdict->add_option("cover", cover_path, "cover JSON file")->required();
    add_common(verdict, true);

    CLI::App* orbit = app.add_subcommand("orbit", "mapping-class-group orbit of the cover class");
    orbit->add_option("cover", cover_path, "cover JSON file")->required();
    add_common(orbit, true);

    CLI::App* gamma = app.add_subcommand("gamma", "bipartite coloring graph for two branch points");
    gamma->add_option("cover", cover_path, "cover JSON file")->required();
    gamma->add_option("--i", gi, "first branch index (1-based)")->required();
    gamma->add_option("--j", gj, "second branch index (1-based)")->required();
    add_common(gamma, false);

    CLI::App* from_graph = app.add_subcommand("from-graph", "build the torus cover attached to a graph");
    from_graph->add_option("graph", graph_path, "graph JSON file")->required();
    from_graph->add_option("-o,--out", out_path, "output cover file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (from_graph->parsed()) {
            bh::CoverGraph g = bh::graph_from_json(bh::load_json_file(graph_path));
            emit(bh::cover_to_json(bh::build_cover(g)), out_path);
            return kExitOk;
        }

        bh::MonodromyCover cover = bh::load_cover_file(cover_path);

        if (analyze->parsed()) {
            std::string digest = bh::fnv1a_digest(read_file(cover_path));
            auto gens = resolve_generators(cover, gens_path);
            emit(bh::build_report(cover, gens, limit, digest, threads), out_path);
            return kExitOk;
        }
        if (lift->parsed()) {
            bh::CutPresentation cut = bh::standard_cut(cover.sig(), m);
            bh::json j;
            j["format"] = 1;
            j["m"] = m;
            j["boundary_word"] = bh::word_to_string(cut.boundary_word, cover.sig());
            j["components"] = bh::multicurve_to_json(bh::essential_flags(cover, cut));
            j["region_graph"] = bh::region_graph_to_json(bh::region_graph(cover, cut));
            emit(j, out_path);
            return kExitOk;
        }
        if (wcl->parsed()) {
            auto gens = resolve_generators(cover, gens_path);
            bh::WclResult r = bh::wcl_decision(cover, gens, limit, threads);
            emit(bh::wcl_to_json(r), out_path);
            return r.holds ? kExitOk : kExitFails;
        }
        if (verdict->parsed()) {
            auto gens = resolve_generators(cover, gens_path);
            bh::Verdict v = bh::bh_verdict(cover, gens, limit, threads);
            emit(bh::verdict_to_json(v), out_path);
            switch (v.status) {
                case bh::BHStatus::HOLDS: return kExitOk;
                case bh::BHStatus::FAILS: return kExitFails;
                case bh::BHStatus::INCONCLUSIVE: return kExitInconclusive;
            }
        }
        if (orbit->parsed()) {
            auto gens = resolve_generators(cover, gens_path);
            emit(bh::orbit_to_json(bh::mcg_orbit(cover, gens, limit, threads)), out_path);
            return kExitOk;
        }
        if (gamma->parsed()) {
            emit(bh::gamma_to_json(bh::gamma_graph(cover, gi, gj)), out_path);
            return kExitOk;
        }
    } catch (const bh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
