// radmoore: bounds, constructions, verification and search for radial Moore
// graphs, exposed as scriptable subcommands.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage or domain
// error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <radmoore/automorphisms.hpp>
#include <radmoore/bounds.hpp>
#include <radmoore/census.hpp>
#include <radmoore/cubic_roots.hpp>
#include <radmoore/edge_swap.hpp>
#include <radmoore/enumerate.hpp>
#include <radmoore/gd_family.hpp>
#include <radmoore/graph6.hpp>
#include <radmoore/hoffman_singleton.hpp>
#include <radmoore/recurrence.hpp>

using json = nlohmann::ordered_json;
using namespace radmoore;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::istream& open_input(const std::string& path, std::ifstream& storage) {
    if (path == "-") return std::cin;
    storage.open(path);
    if (!storage) throw std::invalid_argument("cannot open input file: " + path);
    return storage;
}

json status_vector_json(const StatusVector& sv) {
    json entries = json::array();
    for (auto [value, mult] : sv.entries) entries.push_back({value, mult});
    return entries;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- bounds ----------------------------------------------------------------

int run_bounds(int d, int k, const std::string& format) {
    BoundsReport r = make_bounds_report(d, k);
    if (format == "json") {
        json doc;
        doc["d"] = r.d;
        doc["k"] = r.k;
        doc["moore_bound"] = r.moore_bound.to_string();
        doc["moore_status"] = r.moore_status.to_string();
        doc["gamma2_lower"] = r.gamma2_lower;
        doc["gamma2_lower_central_neighbor"] = r.gamma2_lower_central_neighbor;
        doc["min_attach"] = r.min_attach;
        doc["vertex_status_upper"] = r.vertex_status_upper;
        doc["central_neighbor_status_upper"] = r.central_neighbor_status_upper;
        doc["total_status_upper_ceiling"] = r.total_status_upper_ceiling.to_string();
        doc["total_status_upper_consistent"] = r.total_status_upper_consistent.to_string();
        emit_json(doc);
    } else if (format == "csv") {
        std::cout << "d,k,moore_bound,moore_status,gamma2_lower,gamma2_lower_central_neighbor,"
                     "min_attach,vertex_status_upper,central_neighbor_status_upper,"
                     "total_status_upper_ceiling,total_status_upper_consistent\n";
        std::cout << r.d << "," << r.k << "," << r.moore_bound.to_string() << ","
                  << r.moore_status.to_string() << "," << r.gamma2_lower << ","
                  << r.gamma2_lower_central_neighbor << "," << r.min_attach << ","
                  << r.vertex_status_upper << "," << r.central_neighbor_status_upper << ","
                  << r.total_status_upper_ceiling.to_string() << ","
                  << r.total_status_upper_consistent.to_string() << "\n";
    } else {
        std::cout << "d: " << r.d << "\n";
        std::cout << "k: " << r.k << "\n";
        std::cout << "moore_bound: " << r.moore_bound.to_string() << "\n";
        std::cout << "moore_status: " << r.moore_status.to_string() << "\n";
        std::cout << "diameter-3 bounds (apply to k = 2):\n";
        std::cout << "  gamma2_lower: " << r.gamma2_lower << "\n";
        std::cout << "  gamma2_lower_central_neighbor: " << r.gamma2_lower_central_neighbor << "\n";
        std::cout << "  min_attach: " << r.min_attach << "\n";
        std::cout << "  vertex_status_upper: " << r.vertex_status_upper << "\n";
        std::cout << "  central_neighbor_status_upper: " << r.central_neighbor_status_upper << "\n";
        std::cout << "  total_status_upper_ceiling: " << r.total_status_upper_ceiling.to_string()
                  << "\n";
        std::cout << "  total_status_upper_consistent: "
                  << r.total_status_upper_consistent.to_string() << "\n";
    }
    return 0;
}

// ---- table -----------------------------------------------------------------

int run_table(std::vector<int> d_range, std::vector<int> k_range, const std::string& format) {
    if (d_range.size() != 2 || k_range.size() != 2 || d_range[0] > d_range[1] ||
        k_range[0] > k_range[1])
        throw std::invalid_argument("table: ranges must be two ascending integers");
    if (d_range[0] < 4)
        throw std::domain_error("table: the central-vertex recurrence needs d > 3");
    if (k_range[0] < 2) throw std::domain_error("table: need k >= 2");

    struct Cell {
        int d, k;
        BigInt bound, moore;
    };
    std::vector<Cell> cells;
    for (int k = k_range[0]; k <= k_range[1]; ++k)
        for (int d = d_range[0]; d <= d_range[1]; ++d)
            cells.push_back({d, k, central_upper_bound(d, k), moore_bound(d, k)});

    if (format == "json") {
        json doc;
        doc["d_range"] = {d_range[0], d_range[1]};
        doc["k_range"] = {k_range[0], k_range[1]};
        json entries = json::array();
        for (const Cell& c : cells)
            entries.push_back({{"d", c.d},
                               {"k", c.k},
                               {"bound", c.bound.to_string()},
                               {"moore", c.moore.to_string()}});
        doc["entries"] = entries;
        emit_json(doc);
    } else if (format == "csv") {
        std::cout << "d,k,bound,moore\n";
        for (const Cell& c : cells)
            std::cout << c.d << "," << c.k << "," << c.bound.to_string() << ","
                      << c.moore.to_string() << "\n";
    } else {
        std::size_t width = 8;
        for (const Cell& c : cells)
            width = std::max(width, c.bound.to_string().size() + c.moore.to_string().size() + 4);
        std::cout << "k\\d";
        for (int d = d_range[0]; d <= d_range[1]; ++d)
            std::cout << std::string(width - std::to_string(d).size(), ' ') << d;
        std::cout << "\n";
        std::size_t at = 0;
        for (int k = k_range[0]; k <= k_range[1]; ++k) {
            std::cout << k << std::string(3 - std::to_string(k).size(), ' ');
            for (int d = d_range[0]; d <= d_range[1]; ++d, ++at) {
                std::string cell = cells[at].bound.to_string() + " (" +
                                   cells[at].moore.to_string() + ")";
                std::cout << std::string(width - cell.size(), ' ') << cell;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- construct ---------------------------------------------------------------

int run_construct(const std::string& family, int d, bool verify, const std::string& format) {
    if (format != "graph6")
        throw std::invalid_argument("construct: only graph6 output is supported");
    if (family == "gd") {
        GdGraph gd = build_gd(d);
        std::cout << graph6_encode(gd.graph) << "\n";
        if (verify) {
            GdVerification v = verify_gd(d);
            std::cerr << "G_" << d << ": order " << gd.graph.order() << ", " << d
                      << "-regular, radius " << v.radius << ", diameter " << v.diameter
                      << ", central " << v.central.size() << ", status vector "
                      << v.sv.to_string() << ", total " << v.total_status.to_string()
                      << (v.ok ? "" : "  [VERIFICATION FAILED]") << "\n";
            if (!v.ok) return kExitVerification;
        }
    } else if (family == "hoffman-singleton") {
        Graph hs = hoffman_singleton();
        std::cout << graph6_encode(hs) << "\n";
        if (verify) {
            bool ok = hs.order() == 50 && hs.regular_degree() == 7 &&
                      radius_diameter(hs) == std::pair(2, 2) && girth(hs) == 5;
            long long st = status(hs, 0);
            for (int v = 0; ok && v < hs.order(); ++v) ok = status(hs, v) == 91;
            std::cerr << "hoffman-singleton: order 50, 7-regular, radius 2, diameter 2, girth "
                      << girth(hs) << ", all statuses " << st
                      << (ok ? " (Moore graph)" : "  [VERIFICATION FAILED]") << "\n";
            if (!ok) return kExitVerification;
        }
    } else {
        throw std::invalid_argument("construct: unknown family '" + family +
                                    "' (expected gd or hoffman-singleton)");
    }
    return 0;
}

// ---- verify ------------------------------------------------------------------

int run_verify(int d, int k, const std::string& input, const std::string& format) {
    std::ifstream storage;
    std::istream& in = open_input(input, storage);

    struct Line {
        std::size_t no;
        bool parsed = false;
        std::string error;
        bool radial_moore = false;
        std::string reason;
        int central = 0;
        StatusVector sv;
        bool props_ok = true;
    };
    std::vector<Line> lines;
    std::string text;
    std::size_t line_no = 0;
    long long ok_count = 0, parse_errors = 0;
    while (std::getline(in, text)) {
        ++line_no;
        if (text.empty()) continue;
        Line entry;
        entry.no = line_no;
        try {
            Graph g = graph6_decode(text);
            entry.parsed = true;
            RadialMooreReport rep = verify_radial_moore(g, d, k);
            entry.radial_moore = rep.is_radial_moore;
            entry.central = static_cast<int>(rep.central_vertices.size());
            if (rep.is_radial_moore) {
                entry.sv = status_vector(g);
                entry.props_ok = check_structural_props(g, k).empty();
                ++ok_count;
            } else if (!rep.order_ok) {
                entry.reason = "order " + std::to_string(g.order()) + " != " +
                               moore_bound(d, k).to_string();
            } else if (!rep.regular_ok) {
                entry.reason = "not " + std::to_string(d) + "-regular";
            } else if (!rep.connected) {
                entry.reason = "disconnected";
            } else if (rep.radius != k) {
                entry.reason = "radius " + std::to_string(rep.radius) + " != " + std::to_string(k);
            } else {
                entry.reason = "diameter " + std::to_string(rep.diameter) + " != " +
                               std::to_string(k + 1);
            }
        } catch (const Graph6Error& e) {
            entry.error = e.what();
            ++parse_errors;
        }
        lines.push_back(std::move(entry));
    }

    if (format == "json") {
        json doc;
        doc["d"] = d;
        doc["k"] = k;
        json graphs = json::array();
        for (const Line& l : lines) {
            json o;
            o["line"] = l.no;
            if (!l.parsed) {
                o["error"] = l.error;
            } else {
                o["radial_moore"] = l.radial_moore;
                o["central"] = l.central;
                if (l.radial_moore) {
                    o["status_vector"] = status_vector_json(l.sv);
                    o["total_status"] = l.sv.total;
                    o["props_ok"] = l.props_ok;
                } else {
                    o["reason"] = l.reason;
                }
            }
            graphs.push_back(o);
        }
        doc["graphs"] = graphs;
        doc["summary"] = {{"graphs", lines.size()},
                          {"radial_moore", ok_count},
                          {"parse_errors", parse_errors}};
        emit_json(doc);
    } else {
        for (const Line& l : lines) {
            std::cout << "line " << l.no << ": ";
            if (!l.parsed) {
                std::cout << "parse error: " << l.error << "\n";
            } else if (l.radial_moore) {
                std::cout << "radial-moore d=" << d << " k=" << k << " central=" << l.central
                          << " status=" << l.sv.to_string()
                          << (l.props_ok ? "" : " [neighborhood constraints violated]") << "\n";
            } else {
                std::cout << "not radial-moore (" << l.reason << ")\n";
            }
        }
        std::cout << "summary: " << lines.size() << " graphs, " << ok_count << " radial Moore, "
                  << parse_errors << " parse errors\n";
    }
    bool all_ok = parse_errors == 0 && ok_count == static_cast<long long>(lines.size());
    return all_ok ? 0 : kExitVerification;
}

// ---- census / rank -----------------------------------------------------------

void print_ranking_text(const std::vector<RankedGraph>& ranking) {
    std::size_t place = 1;
    for (const RankedGraph& rg : ranking) {
        std::cout << "  " << place++ << ". " << rg.graph6 << "  status=" << rg.sv.to_string()
                  << " total=" << rg.sv.total << " central=" << rg.central_count << "\n";
    }
}

json ranking_json(const std::vector<RankedGraph>& ranking) {
    json arr = json::array();
    for (const RankedGraph& rg : ranking)
        arr.push_back({{"graph6", rg.graph6},
                       {"total_status", std::to_string(rg.sv.total)},
                       {"central", rg.central_count},
                       {"status_vector", status_vector_json(rg.sv)}});
    return arr;
}

void print_ranking_csv(const std::vector<RankedGraph>& ranking) {
    std::cout << "rank,graph6,total_status,central,status_vector\n";
    std::size_t place = 1;
    for (const RankedGraph& rg : ranking) {
        std::string sv;
        for (auto [value, mult] : rg.sv.entries) {
            if (!sv.empty()) sv += " ";
            sv += std::to_string(value) + "^" + std::to_string(mult);
        }
        std::cout << place++ << "," << rg.graph6 << "," << rg.sv.total << ","
                  << rg.central_count << "," << sv << "\n";
    }
}

int run_census(int d, int k, const std::string& input, const std::string& format) {
    CensusResult result;
    if (input.empty()) {
        result = census(d, k);
    } else {
        std::ifstream storage;
        std::istream& in = open_input(input, storage);
        std::size_t line_no = 0;
        result = census_stream(d, k, [&]() -> std::optional<Graph> {
            std::string text;
            while (std::getline(in, text)) {
                ++line_no;
                if (text.empty()) continue;
                try {
                    return graph6_decode(text);
                } catch (const Graph6Error& e) {
                    throw std::invalid_argument("census: line " + std::to_string(line_no) + ": " +
                                                e.what());
                }
            }
            return std::nullopt;
        });
    }

    if (format == "json") {
        json doc;
        doc["d"] = result.d;
        doc["k"] = result.k;
        doc["total_regular"] = result.total_regular;
        doc["radial_moore"] = result.radial_moore;
        doc["max_central"] = result.max_central;
        doc["ranking"] = ranking_json(result.ranking);
        emit_json(doc);
    } else if (format == "csv") {
        print_ranking_csv(result.ranking);
    } else {
        std::cout << "census d=" << result.d << " k=" << result.k << "\n";
        std::cout << "total connected " << d << "-regular graphs of order "
                  << moore_bound(d, k).to_string() << ": " << result.total_regular << "\n";
        std::cout << "radial Moore graphs: " << result.radial_moore << "\n";
        std::cout << "max central vertices: " << result.max_central << "\n";
        std::cout << "ranking (total status ascending):\n";
        print_ranking_text(result.ranking);
    }
    return 0;
}

int run_rank(const std::string& input, const std::string& format) {
    std::ifstream storage;
    std::istream& in = open_input(input, storage);
    std::vector<Graph> graphs;
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        if (text.empty()) continue;
        try {
            graphs.push_back(graph6_decode(text));
        } catch (const Graph6Error& e) {
            throw std::invalid_argument("rank: line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    std::vector<RankedGraph> ranking = rank_by_status(graphs);
    if (format == "json") {
        json doc;
        doc["ranking"] = ranking_json(ranking);
        emit_json(doc);
    } else if (format == "csv") {
        print_ranking_csv(ranking);
    } else {
        print_ranking_text(ranking);
    }
    return 0;
}

// ---- aut ---------------------------------------------------------------------

int run_aut(const std::string& family, int d, const std::string& input,
            const std::string& format) {
    Graph target(1);
    json doc;
    std::string label;
    int generators_verified = -1;
    if (family.empty() && input.empty())
        throw std::invalid_argument("aut: need --family gd --d N, or --input with a graph6 line");
    if (!family.empty()) {
        if (family != "gd")
            throw std::invalid_argument("aut: unknown family '" + family + "'");
        GdGraph gd = build_gd(d);
        target = gd.graph;
        label = "G_" + std::to_string(d);
        generators_verified = 0;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                if (!is_automorphism(gd.graph, transposition_map(d, i, j)))
                    throw std::logic_error("aut: transposition map failed verification");
                ++generators_verified;
            }
        doc["family"] = "gd";
        doc["d"] = d;
    } else {
        std::ifstream storage;
        std::istream& in = open_input(input, storage);
        std::string text;
        if (!std::getline(in, text) || text.empty())
            throw std::invalid_argument("aut: no graph6 line on input");
        target = graph6_decode(text);
        label = text;
        doc["graph6"] = text;
    }
    std::uint64_t order = automorphism_group_order(target);
    doc["group_order"] = std::to_string(order);
    if (generators_verified >= 0) doc["generators_verified"] = generators_verified;

    if (format == "json") {
        emit_json(doc);
    } else {
        std::cout << label << ": automorphism group order " << order;
        if (generators_verified >= 0)
            std::cout << " (" << generators_verified << " transposition maps verified)";
        std::cout << "\n";
    }
    return 0;
}

// ---- roots -------------------------------------------------------------------

int run_roots(int d, const std::string& format) {
    CubicRoots r = cubic_roots(d);
    CharacteristicPolynomial p = characteristic_polynomial(d);
    std::string delta = r.discriminant_numerator.to_string() + "/27";

    auto fmt = [](double x) {
        std::ostringstream os;
        os.precision(12);
        os << x;
        return os.str();
    };

    if (format == "json") {
        json doc;
        doc["d"] = d;
        doc["cubic"] = p.cubic;
        doc["quartic"] = p.quartic;
        doc["discriminant"] = delta;
        doc["real_roots"] = r.real_roots;
        if (r.complex_pair)
            doc["complex_pair"] = {{"re", r.complex_pair->real()}, {"im", r.complex_pair->imag()}};
        if (d <= 16) doc["cauchy_ok"] = cauchy_bound_check(d);
        if (d >= 17) {
            auto [lo, hi] = laguerre_interval(d);
            doc["laguerre_interval"] = {lo, hi};
            AsymptoticRatios ratios = asymptotic_ratios(d);
            doc["asymptotic_ratios"] = {{"alpha_over_sqrt_d", ratios.r_alpha},
                                        {"beta_over_neg_sqrt_d", ratios.r_beta},
                                        {"gamma", ratios.gamma_val}};
        }
        emit_json(doc);
    } else {
        std::cout << "q(x) = x^3 - x^2 - " << (d - 3) << "x - " << (d - 1) << "\n";
        std::cout << "discriminant: " << delta << "\n";
        std::cout << "real:";
        for (double x : r.real_roots) std::cout << " " << fmt(x);
        std::cout << "\n";
        if (r.complex_pair)
            std::cout << "complex: " << fmt(r.complex_pair->real()) << " +- "
                      << fmt(r.complex_pair->imag()) << "i\n";
        if (d <= 16)
            std::cout << "cauchy bound |z| <= 2: " << (cauchy_bound_check(d) ? "ok" : "FAILED")
                      << "\n";
        if (d >= 17) {
            auto [lo, hi] = laguerre_interval(d);
            std::cout << "laguerre interval: [" << fmt(lo) << ", " << fmt(hi) << "]\n";
            AsymptoticRatios ratios = asymptotic_ratios(d);
            std::cout << "asymptotics: alpha/sqrt(d)=" << fmt(ratios.r_alpha)
                      << " beta/(-sqrt(d))=" << fmt(ratios.r_beta)
                      << " gamma=" << fmt(ratios.gamma_val) << "\n";
        }
    }
    return 0;
}

// ---- swap-search ---------------------------------------------------------------

json swap_result_json(const SwapResult& r) {
    return {{"removed", {{r.removed1.first, r.removed1.second},
                         {r.removed2.first, r.removed2.second}}},
            {"added", {{r.added1.first, r.added1.second}, {r.added2.first, r.added2.second}}},
            {"central", r.central_count},
            {"radial_moore", r.is_radial_moore}};
}

int run_swap_search(const std::string& family, const std::string& input, int d, int k, bool all,
                    const std::string& format) {
    Graph g(1);
    if (!input.empty()) {
        std::ifstream storage;
        std::istream& in = open_input(input, storage);
        std::string text;
        if (!std::getline(in, text) || text.empty())
            throw std::invalid_argument("swap-search: no graph6 line on input");
        g = graph6_decode(text);
    } else if (family == "hoffman-singleton") {
        g = hoffman_singleton();
    } else {
        throw std::invalid_argument("swap-search: unknown family '" + family + "'");
    }

    std::vector<SwapResult> rm_results;
    SwapSummary sum;
    if (all) {
        sum = edge_swap_experiment(g, d, k, [&](const SwapResult& r) {
            if (r.is_radial_moore) rm_results.push_back(r);
        });
    } else {
        sum = swap_search(g, d, k);
    }

    if (format == "json") {
        json doc;
        doc["d"] = d;
        doc["k"] = k;
        doc["order"] = g.order();
        doc["edges"] = g.edge_count();
        doc["pairs_scanned"] = sum.pairs_scanned;
        doc["rewirings_valid"] = sum.rewirings_valid;
        doc["radial_moore"] = sum.radial_moore;
        doc["max_central"] = sum.max_central;
        if (sum.best) doc["best"] = swap_result_json(*sum.best);
        if (all) {
            json arr = json::array();
            for (const SwapResult& r : rm_results) arr.push_back(swap_result_json(r));
            doc["radial_moore_results"] = arr;
        }
        emit_json(doc);
    } else {
        std::cout << "swap search on " << g.order() << " vertices, " << g.edge_count()
                  << " edges (d=" << d << " k=" << k << ")\n";
        std::cout << "disjoint edge pairs scanned: " << sum.pairs_scanned << "\n";
        std::cout << "valid rewirings: " << sum.rewirings_valid << "\n";
        std::cout << "radial Moore results: " << sum.radial_moore << "\n";
        std::cout << "max central vertices: " << sum.max_central << "\n";
        if (sum.best) {
            std::cout << "best swap: remove {" << sum.best->removed1.first << ","
                      << sum.best->removed1.second << "},{" << sum.best->removed2.first << ","
                      << sum.best->removed2.second << "} add {" << sum.best->added1.first << ","
                      << sum.best->added1.second << "},{" << sum.best->added2.first << ","
                      << sum.best->added2.second << "} -> " << sum.best->central_count
                      << " central\n";
        }
        if (all)
            for (const SwapResult& r : rm_results)
                std::cout << "  rm {" << r.removed1.first << "," << r.removed1.second << "},{"
                          << r.removed2.first << "," << r.removed2.second << "} add {"
                          << r.added1.first << "," << r.added1.second << "},{" << r.added2.first
                          << "," << r.added2.second << "} central=" << r.central_count << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial Moore graph toolkit: bounds, constructions, verification, search"};
    app.require_subcommand(1);

    std::string format = "text";

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bounds for one (d,k) pair");
    int b_d = 0, b_k = 0;
    std::string b_format = "text";
    cmd_bounds->add_option("--d,-d", b_d, "degree")->required();
    cmd_bounds->add_option("--k,-k", b_k, "radius")->required();
    cmd_bounds->add_option("--format", b_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // table
    auto* cmd_table = app.add_subcommand("table", "grid of central-vertex bounds with Moore bounds");
    std::vector<int> t_drange{4, 7}, t_krange{3, 7};
    std::string t_format = "text";
    cmd_table->add_option("--d-range", t_drange, "degree range (two values)")->expected(2);
    cmd_table->add_option("--k-range", t_krange, "radius range (two values)")->expected(2);
    cmd_table->add_option("--format", t_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "emit a named graph family as graph6");
    std::string c_family;
    int c_d = 0;
    bool c_verify = false;
    std::string c_format = "graph6";
    cmd_construct->add_option("family", c_family, "gd or hoffman-singleton")->required();
    cmd_construct->add_option("--d,-d", c_d, "degree (gd family)");
    cmd_construct->add_flag("--verify", c_verify, "verify the construction and report");
    cmd_construct->add_option("--format", c_format)->check(CLI::IsMember({"graph6"}));

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a graph6 stream for the radial Moore property");
    int v_d = 0, v_k = 0;
    std::string v_input = "-", v_format = "text";
    cmd_verify->add_option("--d,-d", v_d, "degree")->required();
    cmd_verify->add_option("--k,-k", v_k, "radius")->required();
    cmd_verify->add_option("--input,-i", v_input, "graph6 file, or - for stdin");
    cmd_verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

    // census
    auto* cmd_census = app.add_subcommand("census", "radial Moore census with status ranking");
    int n_d = 0, n_k = 0;
    std::string n_input, n_format = "text";
    cmd_census->add_option("--d,-d", n_d, "degree")->required();
    cmd_census->add_option("--k,-k", n_k, "radius")->required();
    cmd_census->add_option("--input,-i", n_input, "external graph6 stream (required beyond (3,2))");
    cmd_census->add_option("--format", n_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "order graphs by status vector");
    std::string r_input = "-", r_format = "text";
    cmd_rank->add_option("--input,-i", r_input, "graph6 file, or - for stdin");
    cmd_rank->add_option("--format", r_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // aut
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group order");
    std::string a_family, a_input;
    int a_d = 0;
    std::string a_format = "text";
    cmd_aut->add_option("--family", a_family, "gd");
    cmd_aut->add_option("--d,-d", a_d, "degree (gd family)");
    cmd_aut->add_option("--input,-i", a_input, "graph6 file, or - for stdin");
    cmd_aut->add_option("--format", a_format)->check(CLI::IsMember({"text", "json"}));

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "cubic eigenvalue analysis of the recurrence");
    int o_d = 0;
    std::string o_format = "text";
    cmd_roots->add_option("--d,-d", o_d, "degree")->required();
    cmd_roots->add_option("--format", o_format)->check(CLI::IsMember({"text", "json"}));

    // swap-search
    auto* cmd_swap = app.add_subcommand("swap-search", "two-edge swap scan for radial Moore rewirings");
    std::string s_family = "hoffman-singleton", s_input;
    int s_d = 7, s_k = 2;
    bool s_all = false;
    std::string s_format = "text";
    cmd_swap->add_option("--family", s_family, "hoffman-singleton (default)");
    cmd_swap->add_option("--input,-i", s_input, "graph6 file with the base graph");
    cmd_swap->add_option("--d,-d", s_d, "degree");
    cmd_swap->add_option("--k,-k", s_k, "radius");
    cmd_swap->add_flag("--all", s_all, "list every radial Moore rewiring");
    cmd_swap->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));

    (void)format;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_bounds) return run_bounds(b_d, b_k, b_format);
        if (*cmd_table) return run_table(t_drange, t_krange, t_format);
        if (*cmd_construct) return run_construct(c_family, c_d, c_verify, c_format);
        if (*cmd_verify) return run_verify(v_d, v_k, v_input, v_format);
        if (*cmd_census) return run_census(n_d, n_k, n_input, n_format);
        if (*cmd_rank) return run_rank(r_input, r_format);
        if (*cmd_aut) return run_aut(a_family, a_d, a_input, a_format);
        if (*cmd_roots) return run_roots(o_d, o_format);
        if (*cmd_swap) return run_swap_search(s_family, s_input, s_d, s_k, s_all, s_format);
    } catch (const CensusNeedsStream& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return 0;
}
