// dcdkit command-line tool. Exit 0 on success, 1 when a verification fails,
// 2 on usage errors.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/euclid.hpp"
#include "dcdkit/io.hpp"
#include "dcdkit/projgeom.hpp"
#include "dcdkit/rot_search.hpp"
#include "dcdkit/voltage.hpp"

#ifndef DCDKIT_VERSION
#define DCDKIT_VERSION "0.0.0"
#endif

using namespace dcdkit;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

// Collects everything written so the manifest can record digests.
struct Session {
    std::string format = "text";
    std::string out_path;
    std::string manifest_path;
    std::uint64_t seed = 1;
    std::string command;
    json parameters = json::object();
    json digests = json::object();
    std::string text;

    void print(const std::string& s) { text += s; }
    void line(const std::string& s) { text += s + "\n"; }

    void flush() {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + out_path);
            f << text;
        }
        digests[out_path.empty() ? "stdout" : out_path] = sha256_hex(text);
        if (!manifest_path.empty()) {
            const json m = {{"command", command}, {"seed", seed},       {"parameters", parameters},
                            {"tool", "dcdkit"},   {"version", DCDKIT_VERSION}, {"outputs", digests}};
            std::ofstream f(manifest_path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + manifest_path);
            f << m.dump(2) << "\n";
        }
    }
};

Session session;

void require_format(std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (session.format == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("format '" + session.format + "' not available here (choose " + list + ")");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + ": '" + s + "'");
}

// Graph sources: danzer, coxeter, petersen, odd:N, kneser:M:K, levi:N,
// cover:<source>, or a file holding an edge list (JSON if it ends in .json).
Graph graph_source(const std::string& name) {
    if (name == "danzer") return levi_graph(dcd_build(4).structure).graph.without_colors();
    if (name == "coxeter") return coxeter_graph();
    if (name == "petersen") return odd_graph(3);
    if (name.rfind("cover:", 0) == 0) return kronecker_cover(graph_source(name.substr(6))).graph.without_colors();
    if (name.rfind("odd:", 0) == 0) return odd_graph(parse_int(name.substr(4), "odd graph order"));
    if (name.rfind("levi:", 0) == 0) return levi_graph(dcd_build(parse_int(name.substr(5), "DCD order")).structure).graph;
    if (name.rfind("kneser:", 0) == 0) {
        const auto rest = name.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw UsageError("expected kneser:M:K");
        return kneser_graph(parse_int(rest.substr(0, colon), "M"), parse_int(rest.substr(colon + 1), "K"));
    }
    if (std::filesystem::exists(name)) {
        const auto text = read_file(name);
        if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
            try {
                return graph_from_json(json::parse(text));
            } catch (const json::exception& e) {
                throw Error(ErrorKind::ParseError, e.what());
            }
        }
        return graph_from_edgelist(text);
    }
    throw UsageError("unknown graph source '" + name + "'");
}

void emit_graph(const Graph& g) {
    require_format({"text", "edgelist", "json"});
    if (session.format == "json")
        session.line(to_json(g).dump(2));
    else
        session.print(to_edgelist(g));
}

void emit_structure_json(const IncidenceStructure& s, const ConfigSignature& sig) {
    json j = to_json(s);
    j["signature"] = sig.to_string();
    session.line(j.dump(2));
}

// ---------------------------------------------------------------- dcd

int dcd_build_cmd(int n, bool verify) {
    session.parameters = {{"n", n}, {"verify", verify}};
    const auto d = dcd_build(n);
    const auto sig = validate_configuration(d.structure);
    const auto want = static_cast<int>(binomial(2 * n - 1, n - 1));
    const bool ok = sig.balanced && sig.p == want && sig.k == n;
    require_format({"text", "json"});
    if (session.format == "json") {
        emit_structure_json(d.structure, sig);
    } else {
        session.line(sig.to_string());
        if (verify) session.line(ok ? "balanced, matches C(2n-1, n-1) = " + std::to_string(want) : "signature mismatch");
    }
    return verify && !ok ? kVerifyFailed : kOk;
}

int dcd_decompose_cmd(int n, int h) {
    session.parameters = {{"n", n}, {"h", h}};
    const auto d = dcd_build(n);
    const auto dec = decompose(d, h);
    const bool duality = delta_is_duality(dec);
    const bool round = same_labelled_structure(reassemble(dec), d.structure);
    const auto s1 = validate_configuration(dec.c1), s2 = validate_configuration(dec.c2);
    require_format({"text", "json"});
    if (session.format == "json") {
        json cross = json::array();
        for (const auto& c : dec.cross)
            cross.push_back({{"point_side", c.point_side == Summand::First ? 1 : 2}, {"point", c.point}, {"block", c.block}});
        session.line(json{{"c1", to_json(dec.c1)},
                          {"c2", to_json(dec.c2)},
                          {"c1_signature", s1.to_string()},
                          {"c2_signature", s2.to_string()},
                          {"cross", cross},
                          {"duality", duality},
                          {"round_trip", round}}
                         .dump(2));
    } else {
        session.line("c1 " + s1.to_string());
        session.line("c2 " + s2.to_string());
        session.line("cross incidences " + std::to_string(dec.cross.size()));
        session.line(std::string("complement duality ") + (duality ? "certified" : "FAILED"));
        session.line(std::string("sum reassembles DCD(") + std::to_string(n) + ") " + (round ? "yes" : "NO"));
    }
    return duality && round ? kOk : kVerifyFailed;
}

int dcd_polarity_cmd(int n) {
    session.parameters = {{"n", n}};
    const auto d = dcd_build(n);
    const auto pol = polarity(d);
    const auto levi = levi_graph(d.structure);
    bool swaps = true;
    for (int v = 0; v < levi.graph.vertex_count(); ++v) swaps = swaps && levi.coloring[pol.levi_map[v]] != levi.coloring[v];
    const bool ok = swaps && permutation_order(pol.levi_map) == 2 && is_polarity(d.structure, pol.levi_map);
    require_format({"text", "json"});
    if (session.format == "json") {
        json pairs = json::object();
        for (int p = 0; p < d.structure.point_count(); ++p)
            pairs[d.structure.point_labels()[p]] = d.structure.block_labels()[pol.point_to_block[p]];
        session.line(json{{"polarity", ok}, {"point_to_block", pairs}}.dump(2));
    } else {
        session.line(ok ? "complementation is a polarity of order 2" : "complementation is NOT a polarity");
    }
    return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- graph

int graph_aut_cmd(const Graph& g) {
    const auto group = automorphism_group(g);
    const bool et = edge_transitive(g, group);
    const auto orbits = group.orbits();
    require_format({"text", "json"});
    if (session.format == "json") {
        session.line(json{{"order", group.order().get_str()},
                          {"generators", group.generators()},
                          {"vertex_orbits", orbits.size()},
                          {"edge_transitive", et}}
                         .dump(2));
    } else {
        session.line("order " + group.order().get_str());
        session.line("vertex orbits " + std::to_string(orbits.size()));
        session.line(std::string("edge-transitive ") + (et ? "yes" : "no"));
    }
    return kOk;
}

int graph_hamilton_cmd(const Graph& g, double budget) {
    HamiltonOptions opt;
    opt.node_budget = static_cast<std::uint64_t>(budget);
    const auto c = hamilton_cycle(g, opt);
    require_format({"text", "json"});
    if (session.format == "json") {
        session.line(json{{"found", c.has_value()}, {"cycle", c ? json(*c) : json(nullptr)}}.dump(2));
    } else if (c) {
        std::string s;
        for (int v : *c) s += (s.empty() ? "" : " ") + std::to_string(v);
        session.line("hamilton cycle of length " + std::to_string(c->size()));
        session.line(s);
    } else {
        session.line("no hamilton cycle");
    }
    return c ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- realize

json rat_vector(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

int realize_lines_cmd(int n) {
    session.parameters = {{"n", n}};
    const auto arr = random_arrangement(n, 2 * n - 1, session.seed);
    const auto r = realize_dcd(n, arr);
    const auto expected = r.structure.incidences().size();
    require_format({"text", "json"});
    if (session.format == "json") {
        json hs = json::array();
        for (const auto& h : arr.hyperplanes) hs.push_back(rat_vector(h.coeffs));
        json pts = json::object(), lines = json::object();
        for (std::size_t i = 0; i < r.points.size(); ++i) pts[r.structure.point_labels()[i]] = rat_vector(r.points[i].basis.front());
        for (std::size_t i = 0; i < r.lines.size(); ++i) {
            json basis = json::array();
            for (const auto& b : r.lines[i].basis) basis.push_back(rat_vector(b));
            lines[r.structure.block_labels()[i]] = basis;
        }
        session.line(json{{"dimension", n},
                          {"seed", session.seed},
                          {"attempts", arr.attempts},
                          {"hyperplanes", hs},
                          {"points", pts},
                          {"lines", lines},
                          {"verified_incidences", r.verified_incidences}}
                         .dump(2));
    } else {
        session.line(std::to_string(arr.hyperplanes.size()) + " hyperplanes in general position in P^" + std::to_string(n) +
                     " (" + std::to_string(arr.certificate.subsets_checked) + " subsets certified)");
        session.line(std::to_string(r.points.size()) + " points, " + std::to_string(r.lines.size()) + " lines");
        session.line("incidences " + std::to_string(r.verified_incidences) + "/" + std::to_string(expected));
    }
    return r.verified_incidences == expected ? kOk : kVerifyFailed;
}

int realize_project_cmd(int n) {
    session.parameters = {{"n", n}};
    const auto arr = random_arrangement(n, 2 * n - 1, session.seed);
    const auto r = realize_dcd(n, arr);
    const auto proj = find_projection(r, session.seed);
    const auto kept = verify_planar_incidences(proj.planar);
    const auto expected = r.structure.incidences().size();
    const bool ok = kept == expected && proj.scan.clean();
    require_format({"text", "json", "svg"});
    if (session.format == "json") {
        session.line(to_json(proj.planar).dump(2));
    } else if (session.format == "svg") {
        session.print(to_svg(proj.planar));
    } else {
        session.line("incidences preserved " + std::to_string(kept) + "/" + std::to_string(expected));
        session.line("triples scanned " + std::to_string(proj.scan.triples_checked) + ", collinear " +
                     std::to_string(proj.scan.collinear_triples));
        session.line("unexpected collinear sets " + std::to_string(proj.scan.unexpected_sets.size()) +
                     ", coincident points " + std::to_string(proj.scan.coincident_points.size()));
    }
    return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- steiner

std::string point_text(const Point2& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

int steiner_quad_cmd() {
    const auto ls = random_certified_lines(4, session.seed);
    const auto r = steiner_quadrilateral<Rat>({ls[0], ls[1], ls[2], ls[3]});
    require_format({"text", "json"});
    if (session.format == "json") {
        json hs = json::array();
        for (const auto& h : r.orthocenters) hs.push_back({h.x.get_str(), h.y.get_str()});
        session.line(json{{"wallace_point", {r.wallace_point.x.get_str(), r.wallace_point.y.get_str()}},
                          {"circles_concurrent", r.circles_concurrent},
                          {"centers_concyclic", r.centers_concyclic},
                          {"orthocenters_collinear", r.orthocenters_collinear},
                          {"orthocenters", hs}}
                         .dump(2));
    } else {
        session.line("Wallace point " + point_text(r.wallace_point));
        session.line(std::string("circumcircles concurrent ") + (r.circles_concurrent ? "yes" : "no"));
        session.line(std::string("circumcenters concyclic ") + (r.centers_concyclic ? "yes" : "no"));
        session.line(std::string("orthocenters collinear ") + (r.orthocenters_collinear ? "yes" : "no"));
    }
    return r.holds() ? kOk : kVerifyFailed;
}

void report_lines(const CoincidenceReport& rep) {
    session.line("coincident points " + std::to_string(rep.coincident_points.size()) + ", coincident blocks " +
                 std::to_string(rep.coincident_blocks.size()) + ", spurious incidences " +
                 std::to_string(rep.extra_incidences.size()) + ", missing incidences " +
                 std::to_string(rep.missing_incidences.size()));
}

int steiner_construct2_cmd() {
    const auto ls = random_certified_lines(7, session.seed);
    const auto r = construction2_report<Rat>(ls);
    const auto sig = validate_configuration(r.configuration.structure);
    const bool iso = isomorphic_structures(r.configuration.structure, dcd_build(4).structure);
    require_format({"text", "json", "svg"});
    if (session.format == "json") {
        session.line(to_json(r.configuration).dump(2));
    } else if (session.format == "svg") {
        session.print(to_svg(to_planar(r.configuration)));
    } else {
        session.line("orthocenter configuration " + sig.to_string());
        session.line(std::string("isomorphic to DCD(4) ") + (iso ? "yes" : "no"));
        report_lines(r.report);
    }
    return r.report.clean() && iso ? kOk : kVerifyFailed;
}

int steiner_circles_cmd(bool centers) {
    session.parameters = {{"centers", centers}};
    const auto ls = random_certified_lines(7, session.seed);
    const auto r = centers ? point_circle_centers_report<Rat>(ls) : point_circle_wallace_report<Rat>(ls);
    const auto sig = validate_configuration(r.configuration.structure);
    const bool iso = isomorphic_structures(r.configuration.structure, dcd_build(4).structure);
    require_format({"text", "json", "svg"});
    if (session.format == "json") {
        session.line(to_json(r.configuration).dump(2));
    } else if (session.format == "svg") {
        session.print(to_svg(r.configuration));
    } else {
        session.line(std::string(centers ? "circumcenter" : "Wallace") + " point-circle configuration " + sig.to_string());
        session.line(std::string("isomorphic to DCD(4) ") + (iso ? "yes" : "no"));
        report_lines(r.report);
    }
    return r.report.clean() && iso ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- voltage

int voltage_quotient_cmd(const Graph& g, int k, int index) {
    session.parameters["k"] = k;
    session.parameters["index"] = index;
    const auto found = semiregular_cyclic(g, k, {1000000, static_cast<std::size_t>(index + 1)});
    if (static_cast<int>(found.size()) <= index) {
        std::cerr << "no semiregular automorphism of order " << k << " found\n";
        return kVerifyFailed;
    }
    const auto& a = found[index];
    const auto vg = quotient(g, a);
    const bool round = quotient_round_trip(g, a);
    require_format({"text", "json"});
    if (session.format == "json")
        session.line(to_json(vg).dump(2));
    else
        session.print(to_text(vg));
    if (!round) std::cerr << "cover of the quotient is not isomorphic to the input\n";
    return round ? kOk : kVerifyFailed;
}

int voltage_cover_cmd(const std::string& path) {
    const auto text = read_file(path);
    VoltageGraph vg;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        try {
            vg = voltage_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
    } else {
        vg = voltage_from_text(text);
    }
    emit_graph(cover(vg).graph);
    return kOk;
}

// ---------------------------------------------------------------- rotsearch

RotationalSystem rot_system(int k, bool coxeter) {
    return coxeter ? RotationalSystem(coxeter_rotational_quotient()) : RotationalSystem(danzer_rotational_quotient(k));
}

int rotsearch_cmd(int k, int seeds, bool coxeter, double budget, double epsilon) {
    if (coxeter) k = 7;
    session.parameters = {{"k", k}, {"seeds", seeds}, {"coxeter", coxeter}, {"time_budget", budget}, {"epsilon", epsilon}};
    const auto sys = rot_system(k, coxeter);
    SearchOptions opt;
    opt.seeds = seeds;
    opt.base_seed = session.seed;
    opt.time_budget_seconds = budget;
    const auto report = search(sys, opt);
    require_format({"text", "json", "svg"});
    if (session.format == "json") {
        session.line(report.to_json().dump(2));
    } else if (session.format == "svg") {
        const auto& b = report.best();
        session.print(to_svg(perturb_export(sys, b.params, b.multiplier, epsilon, session.seed).drawing));
    } else {
        session.line("k " + std::to_string(k) + ", " + std::to_string(sys.point_orbit_count()) + " point orbits, " +
                     std::to_string(sys.term_count()) + " terms");
        session.line("realization " + std::to_string(report.count(Classification::Realization)));
        session.line("degenerate " + std::to_string(report.count(Classification::Degenerate)));
        session.line("floor " + std::to_string(report.count(Classification::Floor)));
        if (!report.runs.empty()) {
            char buf[96];
            const auto& b = report.best();
            std::snprintf(buf, sizeof buf, "best residual %.3e (seed %d, %s)", b.residual, b.seed, to_string(b.classification).c_str());
            session.line(buf);
        }
        session.line(report.summary());
    }
    return kOk;
}

// ---------------------------------------------------------------- export

int export_cmd(const std::string& fmt, const std::string& object, int k, double epsilon) {
    session.format = fmt;
    session.parameters = {{"object", object}};
    if (object == "project") return realize_project_cmd(4);
    if (object == "construct2") return steiner_construct2_cmd();
    if (object == "circles") return steiner_circles_cmd(false);
    if (object == "centers") return steiner_circles_cmd(true);
    if (object == "dcd") {
        if (fmt != "json") throw UsageError("dcd exports only as json");
        return dcd_build_cmd(k, false);
    }
    if (object == "rotational" || object == "coxeter") {
        const bool cox = object == "coxeter";
        session.parameters["k"] = cox ? 7 : k;
        session.parameters["epsilon"] = epsilon;
        const auto sys = rot_system(k, cox);
        SearchOptions opt;
        opt.seeds = 20;
        opt.base_seed = session.seed;
        const auto report = search(sys, opt);
        const auto& b = report.best();
        const auto d = perturb_export(sys, b.params, b.multiplier, epsilon, session.seed);
        if (fmt == "svg")
            session.print(to_svg(d.drawing));
        else
            session.line(to_json(d.drawing).dump(2));
        return kOk;
    }
    throw UsageError("unknown export object '" + object + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dcdkit: Desargues-Cayley-Danzer configurations, their realizations and symmetries"};
    app.set_version_flag("--version", DCDKIT_VERSION);
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "svg", "edgelist"}));
    app.add_option("--seed", session.seed, "Seed for every random choice");
    app.add_option("-o,--out", session.out_path, "Write the artifact to a file instead of stdout");
    app.add_option("--manifest", session.manifest_path, "Write a JSON run manifest with output digests");

    std::function<int()> action;

    // dcd
    auto* dcd = app.add_subcommand("dcd", "Desargues-Cayley-Danzer configurations");
    dcd->require_subcommand(1);
    int n = 4, h = 0;
    bool verify = false;
    auto* dcd_build_sc = dcd->add_subcommand("build", "Build DCD(n) and report its type");
    dcd_build_sc->add_option("n", n)->required()->check(CLI::Range(2, 12));
    dcd_build_sc->add_flag("--verify", verify, "Check the type against C(2n-1, n-1)");
    dcd_build_sc->callback([&] { action = [&] { return dcd_build_cmd(n, verify); }; });
    auto* dcd_dec = dcd->add_subcommand("decompose", "Split DCD(n) along a ground element");
    dcd_dec->add_option("n", n)->required()->check(CLI::Range(2, 12));
    dcd_dec->add_option("--element", h, "Ground element 0..2n-2");
    dcd_dec->callback([&] { action = [&] { return dcd_decompose_cmd(n, h); }; });
    auto* dcd_pol = dcd->add_subcommand("polarity", "Check the complementation polarity");
    dcd_pol->add_option("n", n)->required()->check(CLI::Range(2, 12));
    dcd_pol->callback([&] { action = [&] { return dcd_polarity_cmd(n); }; });

    // graph
    auto* graph = app.add_subcommand("graph", "Graph constructions and invariants");
    graph->require_subcommand(1);
    std::string source, source2;
    bool danzer = false;
    int m = 7, kk = 3;
    double node_budget = 1e8;
    auto add_source = [&](CLI::App* sc) {
        sc->add_option("source", source, "danzer, coxeter, petersen, odd:N, kneser:M:K, levi:N, cover:<source> or a file");
        sc->add_flag("--danzer", danzer, "Use the Danzer graph");
    };
    auto resolve = [&]() -> Graph {
        if (danzer) return graph_source("danzer");
        if (source.empty()) throw UsageError("a graph source or --danzer is required");
        return graph_source(source);
    };
    auto* g_odd = graph->add_subcommand("odd", "Odd graph O_n");
    g_odd->add_option("n", n)->required()->check(CLI::Range(2, 8));
    g_odd->callback([&] { action = [&] { emit_graph(odd_graph(n)); return kOk; }; });
    auto* g_kneser = graph->add_subcommand("kneser", "Kneser graph K(m, k)");
    g_kneser->add_option("m", m)->required();
    g_kneser->add_option("k", kk)->required();
    g_kneser->callback([&] { action = [&] { emit_graph(kneser_graph(m, kk)); return kOk; }; });
    auto* g_cox = graph->add_subcommand("coxeter", "Coxeter graph on the antiflags of the Fano plane");
    g_cox->callback([&] { action = [&] { emit_graph(coxeter_graph()); return kOk; }; });
    auto* g_cover = graph->add_subcommand("cover", "Kronecker cover of a graph");
    add_source(g_cover);
    g_cover->callback([&] { action = [&] { emit_graph(kronecker_cover(resolve()).graph.without_colors()); return kOk; }; });
    auto* g_aut = graph->add_subcommand("aut", "Automorphism group order and edge transitivity");
    add_source(g_aut);
    g_aut->callback([&] { action = [&] { return graph_aut_cmd(resolve()); }; });
    auto* g_girth = graph->add_subcommand("girth", "Girth");
    add_source(g_girth);
    g_girth->callback([&] {
        action = [&] {
            const auto gi = girth(resolve());
            session.line(gi ? "girth " + std::to_string(*gi) : "acyclic");
            return kOk;
        };
    });
    auto* g_ham = graph->add_subcommand("hamilton", "Search for a Hamilton cycle");
    add_source(g_ham);
    g_ham->add_option("--budget", node_budget, "Search node budget");
    g_ham->callback([&] { action = [&] { return graph_hamilton_cmd(resolve(), node_budget); }; });
    auto* g_iso = graph->add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
    g_iso->add_option("first", source)->required();
    g_iso->add_option("second", source2)->required();
    g_iso->callback([&] {
        action = [&] {
            const Graph a = graph_source(source), b = graph_source(source2);
            const bool iso = isomorphic(a, b).has_value();
            session.line(iso ? "isomorphic" : "not isomorphic");
            session.line("canonical " + canonical_form_hex(a).substr(0, 16) + " " + canonical_form_hex(b).substr(0, 16));
            return iso ? kOk : kVerifyFailed;
        };
    });

    // realize
    auto* realize = app.add_subcommand("realize", "Exact realizations from hyperplane arrangements");
    realize->require_subcommand(1);
    int rn = 4;
    auto* r_lines = realize->add_subcommand("lines", "Points and lines of DCD(n) in projective n-space");
    r_lines->add_option("--n", rn)->check(CLI::Range(2, 6));
    r_lines->callback([&] { action = [&] { return realize_lines_cmd(rn); }; });
    auto* r_proj = realize->add_subcommand("project", "Project the realization to a plane");
    r_proj->add_option("--n", rn)->check(CLI::Range(2, 6));
    r_proj->callback([&] { action = [&] { return realize_project_cmd(rn); }; });
    for (auto* sc : {r_lines, r_proj}) sc->add_option("--seed", session.seed, "Arrangement seed");

    // steiner
    auto* steiner = app.add_subcommand("steiner", "Planar constructions from lines in general position");
    steiner->require_subcommand(1);
    bool centers = false;
    auto* s_quad = steiner->add_subcommand("quad", "Steiner's theorem on four random lines");
    s_quad->callback([&] { action = [&] { return steiner_quad_cmd(); }; });
    auto* s_c2 = steiner->add_subcommand("construct2", "Orthocenter (35_4) from seven lines");
    s_c2->callback([&] { action = [&] { return steiner_construct2_cmd(); }; });
    auto* s_circ = steiner->add_subcommand("circles", "Point-circle (35_4) from seven lines");
    s_circ->add_flag("--centers", centers, "Circumcenters and center circles instead of Wallace points");
    s_circ->callback([&] { action = [&] { return steiner_circles_cmd(centers); }; });
    for (auto* sc : {s_quad, s_c2, s_circ}) sc->add_option("--seed", session.seed, "Line seed");

    // voltage
    auto* voltage = app.add_subcommand("voltage", "Cyclic voltage graphs");
    voltage->require_subcommand(1);
    int vk = 7, vindex = 0;
    std::string vpath;
    auto* v_quot = voltage->add_subcommand("quotient", "Quotient by a semiregular automorphism of order k");
    add_source(v_quot);
    v_quot->add_option("--k", vk, "Order of the automorphism")->required();
    v_quot->add_option("--index", vindex, "Which automorphism in enumeration order");
    v_quot->callback([&] { action = [&] { return voltage_quotient_cmd(resolve(), vk, vindex); }; });
    auto* v_cover = voltage->add_subcommand("cover", "Derived cover of a voltage graph file");
    v_cover->add_option("file", vpath)->required();
    v_cover->callback([&] { action = [&] { return voltage_cover_cmd(vpath); }; });

    // rotsearch
    int rk = 7, seeds = 200;
    bool coxeter = false;
    double budget = 0, epsilon = 0;
    auto* rot = app.add_subcommand("rotsearch", "Multi-start search for rotational realizations");
    rot->add_option("--k", rk, "Rotation order (5, 7, 10 or 14 on DCD(4))");
    rot->add_option("--seeds", seeds, "Number of starts")->check(CLI::PositiveNumber);
    rot->add_option("--seed", session.seed, "Base seed");
    rot->add_flag("--coxeter", coxeter, "Search the Coxeter (28_3) quotient instead");
    rot->add_option("--time-budget", budget, "Seconds; 0 means unlimited");
    rot->add_option("--epsilon", epsilon, "Perturbation for the SVG export of the best run");
    rot->callback([&] { action = [&] { return rotsearch_cmd(rk, seeds, coxeter, budget, epsilon); }; });

    // export
    auto* exp = app.add_subcommand("export", "Export a drawing");
    std::string exp_format, object = "project";
    int ek = 7;
    exp->add_option("format", exp_format)->required()->check(CLI::IsMember({"svg", "json"}));
    exp->add_option("object", object, "project, construct2, circles, centers, rotational, coxeter or dcd");
    exp->add_option("--seed", session.seed, "Seed");
    exp->add_option("--k", ek, "Rotation order, or n for dcd");
    exp->add_option("--epsilon", epsilon, "Perturbation for rotational drawings");
    exp->callback([&] { action = [&] { return export_cmd(exp_format, object, ek, epsilon); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    session.format = format;
    for (int i = 1; i < argc; ++i) session.command += (i > 1 ? " " : "") + std::string(argv[i]);
    try {
        const int code = action();
        session.flush();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::InvalidArgument:
            case ErrorKind::IndexOutOfRange:
            case ErrorKind::ParseError: return kUsage;
            default: return kVerifyFailed;
        }
    }
}
