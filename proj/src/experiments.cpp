#include "magcodec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "magcodec/codec.hpp"
#include "magcodec/textio.hpp"

namespace magcodec {

BitBuffer sample_worst_case_w(std::uint64_t seed, std::uint32_t p, std::uint32_t ones_cap) {
    if (p < 1) throw ValidationError("order p must be >= 1");
    ChaChaBits rng(seed, p);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        BitBuffer w = rng.next_bits(p);
        const std::uint64_t ones = w.count_ones();
        if (ones >= 1 && ones <= ones_cap) return w;
    }
    throw ValidationError("rejection sampling failed to find w with 1 <= ones <= " +
                          std::to_string(ones_cap));
}

BitBuffer trivial_characteristic(std::uint64_t length) {
    if (length < 1) throw ValidationError("trivial characteristic string needs length >= 1");
    BitBuffer x(length);
    x.set(0);
    return x;
}

WorstCase build_worst_case_from_w(const BitBuffer& w) {
    if (w.count_ones() == 0)
        throw ValidationError("degenerate w (all zeros): single composite vertex, "
                              "no possible edges to carry a topology");
    CompanionTuple tau = tau_from_bitstring(w);
    SimpleMag mag(tau, trivial_characteristic(tau.num_possible_edges()));
    ClassicalGraph graph = mag_to_graph(mag);
    return WorstCase{std::move(mag), std::move(graph), w};
}

WorstCase build_worst_case(std::uint64_t seed, std::uint32_t p, std::uint32_t ones_cap) {
    return build_worst_case_from_w(sample_worst_case_w(seed, p, ones_cap));
}

namespace {

BitBuffer random_characteristic(ChaChaBits& rng, std::uint64_t length, double density) {
    BitBuffer x(length);
    for (std::uint64_t j = 0; j < length; ++j)
        if (rng.next_unit() < density) x.set(j);
    return x;
}

WorstCase build_case(const ExperimentConfig& cfg, std::uint32_t p, bool uniform) {
    ChaChaBits rng(cfg.seed, p);
    BitBuffer w;
    if (uniform) {
        w = BitBuffer(p);
        for (std::uint32_t i = 0; i < p; ++i) w.set(i);
    } else {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 4096)
                throw ValidationError("rejection sampling failed for p = " + std::to_string(p));
            w = rng.next_bits(p);
            const std::uint64_t ones = w.count_ones();
            if (ones >= 1 && ones <= cfg.ones_cap) break;
        }
    }
    CompanionTuple tau = tau_from_bitstring(w);
    BitBuffer x = cfg.topology.kind == Topology::Kind::kTrivial
                      ? trivial_characteristic(tau.num_possible_edges())
                      : random_characteristic(rng, tau.num_possible_edges(),
                                              cfg.topology.density);
    SimpleMag mag(tau, std::move(x));
    ClassicalGraph graph = mag_to_graph(mag);
    return WorstCase{std::move(mag), std::move(graph), std::move(w)};
}

} // namespace

DistortionRow measure_row(const SimpleMag& mag, const ClassicalGraph& graph, const BitBuffer& w,
                          const Compressor& c) {
    // The MAG and its graph must share one characteristic string; asserted
    // before any measurement.
    if (!(encode_characteristic(mag) == graph.edges()))
        throw ValidationError("MAG and its isomorphic graph disagree on the characteristic string");

    DistortionRow row;
    row.p = std::uint32_t(w.size());
    row.ones = std::uint32_t(w.count_ones());
    row.n_vertices = mag.tau().num_composite_vertices();
    row.n_possible_edges = mag.tau().num_possible_edges();
    if (row.n_vertices != (std::uint64_t(1) << row.ones))
        throw ValidationError("row invariant violated: |V| != 2^ones(w)");
    if (row.n_possible_edges != row.n_vertices * (row.n_vertices - 1) / 2)
        throw ValidationError("row invariant violated: |E_c| != n(n-1)/2");

    const BitBuffer x = encode_characteristic(mag);
    const EncodedTau tau_bits = encode_tau(mag.tau());
    row.c_x = estimate(c, x.bytes()).compressed_bits;
    row.c_tau = estimate(c, tau_bits.bytes()).compressed_bits;
    {
        const EdgeSetString es = encode_edge_set_string(mag);
        row.c_edgeset = estimate(c, es.bytes()).compressed_bits;
        row.c_edgeset_given_x = estimate_conditional(c, es.bytes(), x.bytes());
    }
    {
        const EdgeSetString graph_es = encode_edge_set_string(graph.as_mag());
        row.c_graph_edgeset = estimate(c, graph_es.bytes()).compressed_bits;
    }
    return row;
}

namespace {

std::vector<DistortionRow> run_sweep(const ExperimentConfig& cfg, bool uniform,
                                     const std::string& basename) {
    if (cfg.p_values.empty()) throw ValidationError("no p values configured");
    const Compressor& c = get_compressor(cfg.compressor);
    std::vector<DistortionRow> rows;
    try {
        for (std::uint32_t p : cfg.p_values) {
            const WorstCase wc = build_case(cfg, p, uniform);
            rows.push_back(measure_row(wc.mag, wc.graph, wc.w, c));
        }
    } catch (const std::exception& e) {
        // Flush whatever finished, with a failure marker, then propagate.
        if (!cfg.out_dir.empty() && !rows.empty()) {
            std::filesystem::create_directories(cfg.out_dir);
            write_text_file(cfg.out_dir / (basename + ".partial.csv"),
                            rows_to_csv(rows) + "# FAILED: " + e.what() + "\n");
        }
        throw;
    }
    return rows;
}

} // namespace

std::vector<DistortionRow> run_distortion_sweep(const ExperimentConfig& cfg) {
    return run_sweep(cfg, /*uniform=*/false, "sweep");
}

std::vector<DistortionRow> run_uniform_control(const ExperimentConfig& cfg) {
    return run_sweep(cfg, /*uniform=*/true, "control");
}

std::string rows_to_csv(const std::vector<DistortionRow>& rows) {
    std::string out =
        "p,ones,n_vertices,n_possible_edges,c_x,c_edgeset,c_tau,c_edgeset_given_x,"
        "c_graph_edgeset\n";
    for (const DistortionRow& r : rows) {
        out += std::to_string(r.p) + "," + std::to_string(r.ones) + "," +
               std::to_string(r.n_vertices) + "," + std::to_string(r.n_possible_edges) + "," +
               std::to_string(r.c_x) + "," + std::to_string(r.c_edgeset) + "," +
               std::to_string(r.c_tau) + "," + std::to_string(r.c_edgeset_given_x) + "," +
               std::to_string(r.c_graph_edgeset) + "\n";
    }
    return out;
}

nlohmann::ordered_json report_json(const ExperimentConfig& cfg,
                                   const std::vector<DistortionRow>& rows) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"seed", cfg.seed},
        {"p_values", cfg.p_values},
        {"topology", cfg.topology.kind == Topology::Kind::kTrivial ? "trivial" : "random_density"},
        {"density", cfg.topology.density},
        {"compressor", cfg.compressor},
        {"ones_cap", cfg.ones_cap},
        {"format_version", 1},
    };
    j["rows"] = nlohmann::ordered_json::array();
    for (const DistortionRow& r : rows) {
        j["rows"].push_back({
            {"p", r.p},
            {"ones", r.ones},
            {"n_vertices", r.n_vertices},
            {"n_possible_edges", r.n_possible_edges},
            {"c_x", r.c_x},
            {"c_edgeset", r.c_edgeset},
            {"c_tau", r.c_tau},
            {"c_edgeset_given_x", r.c_edgeset_given_x},
            {"c_graph_edgeset", r.c_graph_edgeset},
        });
    }
    return j;
}

bool validate_report_json(const nlohmann::json& j, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (!j.is_object()) return fail("report must be an object");
    if (!j.contains("config") || !j["config"].is_object()) return fail("missing config object");
    const auto& cfg = j["config"];
    for (const char* key : {"seed", "ones_cap", "format_version"})
        if (!cfg.contains(key) || !cfg[key].is_number_unsigned())
            return fail(std::string("config.") + key + " must be an unsigned integer");
    if (!cfg.contains("p_values") || !cfg["p_values"].is_array())
        return fail("config.p_values must be an array");
    for (const char* key : {"topology", "compressor"})
        if (!cfg.contains(key) || !cfg[key].is_string())
            return fail(std::string("config.") + key + " must be a string");
    if (!cfg.contains("density") || !cfg["density"].is_number())
        return fail("config.density must be a number");
    if (!j.contains("rows") || !j["rows"].is_array()) return fail("missing rows array");
    for (const auto& r : j["rows"]) {
        if (!r.is_object()) return fail("each row must be an object");
        for (const char* key : {"p", "ones", "n_vertices", "n_possible_edges", "c_x",
                                "c_edgeset", "c_tau", "c_edgeset_given_x", "c_graph_edgeset"})
            if (!r.contains(key) || !r[key].is_number_unsigned())
                return fail(std::string("row field ") + key + " must be an unsigned integer");
    }
    return true;
}

std::string rows_to_svg(const std::vector<DistortionRow>& rows) {
    if (rows.empty()) throw ValidationError("cannot plot an empty report");
    struct Series {
        const char* label;
        const char* color;
        std::vector<double> values;
    };
    std::vector<Series> series = {
        {"c_x", "#1f77b4", {}},
        {"c_edgeset", "#d62728", {}},
        {"c_tau", "#2ca02c", {}},
        {"c_graph_edgeset", "#9467bd", {}},
    };
    std::vector<double> ps;
    for (const DistortionRow& r : rows) {
        ps.push_back(double(r.p));
        series[0].values.push_back(double(r.c_x));
        series[1].values.push_back(double(r.c_edgeset));
        series[2].values.push_back(double(r.c_tau));
        series[3].values.push_back(double(r.c_graph_edgeset));
    }
    // log10 scale on y; every measured value is at least a header byte
    double ymax = 1.0;
    for (const auto& s : series)
        for (double v : s.values) ymax = std::max(ymax, std::log10(std::max(v, 1.0)));
    const double x0 = 60, x1 = 760, y0 = 440, y1 = 40;
    const double pmin = ps.front(), pmax = std::max(ps.back(), pmin + 1);
    auto sx = [&](double p) { return x0 + (p - pmin) / (pmax - pmin) * (x1 - x0); };
    auto sy = [&](double v) {
        return y0 - std::log10(std::max(v, 1.0)) / ymax * (y0 - y1);
    };
    char buf[256];
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\">\n"
        "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n"
        "<line x1=\"60\" y1=\"440\" x2=\"760\" y2=\"440\" stroke=\"black\"/>\n"
        "<line x1=\"60\" y1=\"40\" x2=\"60\" y2=\"440\" stroke=\"black\"/>\n"
        "<text x=\"400\" y=\"480\" text-anchor=\"middle\">p</text>\n"
        "<text x=\"20\" y=\"240\" transform=\"rotate(-90 20 240)\" "
        "text-anchor=\"middle\">log10(bits)</text>\n";
    int legend_y = 60;
    for (const auto& s : series) {
        std::string points;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(ps[i]), sy(s.values[i]));
            points += buf;
        }
        std::snprintf(buf, sizeof buf,
                      "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"2\" points=\"%s\"/>\n",
                      s.color, points.c_str());
        svg += buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"640\" y=\"%d\" fill=\"%s\">%s</text>\n", legend_y, s.color,
                      s.label);
        svg += buf;
        legend_y += 20;
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::filesystem::path> emit_report(const ExperimentConfig& cfg,
                                               const std::vector<DistortionRow>& rows,
                                               const std::string& basename,
                                               const std::vector<ReportFormat>& formats) {
    if (rows.empty()) throw ValidationError("cannot emit an empty report");
    if (cfg.out_dir.empty()) throw ValidationError("no output directory configured");
    std::filesystem::create_directories(cfg.out_dir);
    std::vector<std::filesystem::path> written;
    for (ReportFormat f : formats) {
        switch (f) {
            case ReportFormat::kCsv: {
                auto path = cfg.out_dir / (basename + ".csv");
                write_text_file(path, rows_to_csv(rows));
                written.push_back(path);
                break;
            }
            case ReportFormat::kJson: {
                auto path = cfg.out_dir / (basename + ".json");
                write_text_file(path, report_json(cfg, rows).dump(2) + "\n");
                written.push_back(path);
                break;
            }
            case ReportFormat::kSvg: {
                auto path = cfg.out_dir / (basename + ".svg");
                write_text_file(path, rows_to_svg(rows));
                written.push_back(path);
                break;
            }
        }
    }
    return written;
}

namespace {

std::vector<double> ranks(const std::vector<double>& xs) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> r(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double avg = (double(i) + double(j)) / 2.0 + 1.0; // average rank for ties
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / double(n);
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / double(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0 || syy == 0) return 0;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ValidationError("rank correlation needs two equal-length series");
    return pearson(ranks(xs), ranks(ys));
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ValidationError("slope needs two equal-length series");
    const std::size_t n = xs.size();
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / double(n);
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / double(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0) throw ValidationError("slope undefined for constant x");
    return sxy / sxx;
}

} // namespace magcodec
