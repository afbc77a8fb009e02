#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magcodec/codec.hpp"
#include "magcodec/experiments.hpp"
#include "magcodec/recovery.hpp"
#include "magcodec/textio.hpp"

namespace {

using namespace magcodec;

Topology parse_topology(const std::string& name, double density) {
    if (name == "trivial") return Topology::trivial();
    if (name == "random") return Topology::random_density(density);
    throw ValidationError("unknown topology '" + name + "' (expected trivial|random)");
}

void print_rows(const std::vector<DistortionRow>& rows) { std::cout << rows_to_csv(rows); }

int run_recover(const std::string& file) {
    const RecoveryResult r = recover_signature(read_bitstream(file));
    std::cout << "p: " << r.sizes.size() << "\n";
    std::cout << "sizes:";
    for (auto z : r.sizes) std::cout << " " << z;
    std::cout << "\n";
    std::cout << "signature: " << r.signature.to_string() << "\n";
    if (r.degenerate)
        std::cout << "warning: zero records; signature is the all-zero convention\n";
    return 0;
}

int run_encode(const std::string& format, const std::string& input, const std::string& output) {
    const SimpleMag mag = from_magtxt(read_text_file(input));
    if (format == "char") {
        write_charbits(output, encode_characteristic(mag));
    } else if (format == "edgeset") {
        write_bitstream(output, encode_edge_set_string(mag));
    } else if (format == "tau") {
        write_bitstream(output, encode_tau(mag.tau()));
    } else {
        throw ValidationError("unknown format '" + format + "'");
    }
    return 0;
}

int run_decode(const std::string& format, const std::string& input, const std::string& output,
               const std::vector<std::uint64_t>& tau_sizes) {
    if (format == "char") {
        if (tau_sizes.empty())
            throw ValidationError(
                "decoding a characteristic string requires --tau (the string alone "
                "does not determine the space)");
        const SimpleMag mag =
            decode_characteristic(CompanionTuple(tau_sizes), read_charbits(input));
        write_text_file(output, to_magtxt(mag));
    } else if (format == "edgeset") {
        const SimpleMag mag = decode_edge_set_string(read_bitstream(input));
        write_text_file(output, to_magtxt(mag));
    } else if (format == "tau") {
        const CompanionTuple tau = decode_tau(read_bitstream(input));
        std::string line = "tau:";
        for (auto s : tau.sizes()) line += " " + std::to_string(s);
        write_text_file(output, line + "\n");
    } else {
        throw ValidationError("unknown format '" + format + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiaspect-graph encodings and compression-distortion experiments"};
    app.require_subcommand(1);

    // sweep / control-uniform
    ExperimentConfig cfg;
    cfg.p_values = {8, 12, 16, 20, 24};
    std::string topology_name = "trivial";
    double density = 0.5;
    std::string out_dir;

    auto add_sweep_options = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "PRNG seed (recorded in every report)");
        sub->add_option("--p", cfg.p_values, "orders to measure")->delimiter(',');
        sub->add_option("--compressor", cfg.compressor, "compressor name (lz|rle)");
        sub->add_option("--topology", topology_name, "trivial|random");
        sub->add_option("--density", density, "edge density for random topology");
        sub->add_option("--ones-cap", cfg.ones_cap, "rejection bound on ones(w)");
        sub->add_option("--out", out_dir, "output directory")->required();
    };

    auto* sweep = app.add_subcommand("sweep", "worst-case distortion sweep");
    add_sweep_options(sweep);

    auto* control = app.add_subcommand("control-uniform", "uniform-space control sweep");
    add_sweep_options(control);

    auto* recover = app.add_subcommand("recover", "recover the companion-tuple signature "
                                                  "from an edge set string");
    std::string recover_file;
    recover->add_option("file", recover_file, ".mages input")->required();

    std::string format, input, output;
    std::vector<std::uint64_t> tau_sizes;
    auto* encode = app.add_subcommand("encode", "encode a .magtxt file");
    encode->add_option("--format", format, "char|edgeset|tau")->required();
    encode->add_option("input", input, ".magtxt input")->required();
    encode->add_option("output", output, "output file")->required();

    auto* decode = app.add_subcommand("decode", "decode back to .magtxt");
    decode->add_option("--format", format, "char|edgeset|tau")->required();
    decode->add_option("input", input, "encoded input")->required();
    decode->add_option("output", output, "output file")->required();
    decode->add_option("--tau", tau_sizes, "aspect sizes (required for --format char)")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep || *control) {
            cfg.topology = parse_topology(topology_name, density);
            cfg.out_dir = out_dir;
            if (*control && !control->count("--p")) cfg.p_values = {4, 5, 6, 7, 8};
            const auto rows = *sweep ? run_distortion_sweep(cfg) : run_uniform_control(cfg);
            emit_report(cfg, rows, *sweep ? "sweep" : "control",
                        {ReportFormat::kCsv, ReportFormat::kJson, ReportFormat::kSvg});
            print_rows(rows);
            return 0;
        }
        if (*recover) return run_recover(recover_file);
        if (*encode) return run_encode(format, input, output);
        if (*decode) return run_decode(format, input, output, tau_sizes);
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
