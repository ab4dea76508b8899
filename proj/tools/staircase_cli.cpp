#include "staircase/channel.hpp"
#include "staircase/config.hpp"
#include "staircase/decoder.hpp"
#include "staircase/encoder.hpp"
#include "staircase/sim.hpp"
#include "staircase/wire.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;  // validation failure / residual decode errors
constexpr int kExitUsage = 2;   // config, format or I/O problems

staircase::Config load(const std::string& path) { return staircase::parse_config_file(path); }

int cmd_verify(const std::string& config_path, int intersection_limit) {
    staircase::Config cfg = load(config_path);
    staircase::Code code(cfg.code);
    staircase::ValidationReport rep = code.validate();
    std::cout << rep.to_string();
    bool ok = rep.ok();
    if (code.S() <= intersection_limit) {
        bool inter = staircase::verify_intersection(code);
        std::cout << (inter ? "pass" : "FAIL")
                  << "  pairwise codeword intersection <= 1 (exhaustive, "
                  << (2 * code.d_max() + 1) << " blocks)\n";
        ok = ok && inter;
    } else {
        std::cout << "skip  pairwise codeword intersection (S > " << intersection_limit
                  << "; rely on ruler/net checks)\n";
    }
    return ok ? kExitOk : kExitFailed;
}

int cmd_info(const std::string& config_path) {
    staircase::Config cfg = load(config_path);
    staircase::Code code(cfg.code);
    auto [num, den] = code.block_rate_ratio();
    std::printf("S                  %d\n", code.S());
    std::printf("M                  %d\n", code.M());
    std::printf("ruler              ");
    for (size_t i = 0; i < code.marks().size(); ++i)
        std::printf("%s%d", i ? "," : "", code.marks()[i]);
    std::printf("\n");
    std::printf("perm family        %s\n", to_string(code.params().perm_kind));
    std::printf("component length   %d\n", code.n());
    std::printf("parity bits r      %d\n", code.r());
    std::printf("F                  %lld\n", (long long)code.F());
    std::printf("W (blocks)         %lld\n", (long long)code.W());
    std::printf("W (Mbits)          %.3f\n", code.window_mbits());
    std::printf("iterations         %d\n", code.iterations());
    std::printf("R nominal          %.5f\n", code.nominal_rate());
    std::printf("R block            %.5f  (= %lld/%lld)\n", code.block_rate(), (long long)num,
                (long long)den);
    std::printf("info bits/frame    %lld\n", (long long)code.info_bits_per_frame());
    std::printf("tx bits/frame      %lld\n", (long long)code.transmitted_bits_per_frame());
    std::printf("shannon limit      %.4f dB (Eb/N0 at R block)\n",
                staircase::shannon_limit_ebn0_db(code.block_rate()));
    return kExitOk;
}

int cmd_encode(const std::string& config_path, const std::string& in, const std::string& out) {
    staircase::Config cfg = load(config_path);
    staircase::Code code = staircase::make_validated(cfg.code);
    staircase::encode_file(code, in, out);
    return kExitOk;
}

int cmd_decode(const std::string& config_path, const std::string& in, const std::string& out) {
    staircase::Config cfg = load(config_path);
    staircase::Code code = staircase::make_validated(cfg.code);
    staircase::DecodeFileResult res = staircase::decode_file(code, in, out);
    std::fprintf(stderr, "decoded %llu frame(s), %lld correction(s), %lld residual constraint(s)\n",
                 (unsigned long long)res.frames, (long long)res.flips,
                 (long long)res.residual_constraints);
    return res.residual_constraints == 0 ? kExitOk : kExitFailed;
}

int cmd_sweep(const std::string& config_path, std::string out_csv, int threads,
              bool zero_timing) {
    staircase::Config cfg = load(config_path);
    if (!cfg.has_sweep)
        throw std::invalid_argument("config has no [sweep] section");
    staircase::Code code = staircase::make_validated(cfg.code);
    staircase::resolve_points(code.block_rate(), cfg.sweep.gaps_db, cfg.sweep.crossovers);
    if (out_csv.empty())
        out_csv = cfg.io_csv;
    if (out_csv.empty())
        throw std::invalid_argument("no output CSV path (give --out or set [io] csv)");

    staircase::SimResult result = staircase::run_sweep(code, cfg.sweep, threads);
    for (const auto& pt : result.points) {
        if (!pt.error.empty()) {
            std::fprintf(stderr, "point p=%g failed: %s\n", pt.crossover_p, pt.error.c_str());
            continue;
        }
        std::fprintf(stderr,
                     "p=%.6g gap=%.3fdB: ber=%.4g (%llu errs / %llu bits, %llu frames) "
                     "%.1fs %.3g bit/s\n",
                     pt.crossover_p, pt.gap_db, pt.ber, (unsigned long long)pt.bit_errors,
                     (unsigned long long)pt.info_bits, (unsigned long long)pt.frames, pt.seconds,
                     pt.bits_per_sec);
    }

    std::ofstream csv(out_csv, std::ios::binary | std::ios::trunc);
    if (!csv)
        throw std::runtime_error("cannot write CSV: " + out_csv);
    csv << staircase::to_csv(code, result, zero_timing);
    csv.close();

    std::string manifest_path = cfg.io_manifest.empty() ? out_csv + ".manifest.json"
                                                        : cfg.io_manifest;
    std::ofstream mf(manifest_path, std::ios::binary | std::ios::trunc);
    if (!mf)
        throw std::runtime_error("cannot write manifest: " + manifest_path);
    mf << staircase::manifest_json(cfg);

    for (const auto& pt : result.points)
        if (!pt.error.empty())
            return kExitFailed;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized staircase FEC: construction checks, encoding, "
                 "decoding and BSC Monte-Carlo sweeps"};
    app.require_subcommand(1);

    std::string config_path, in_path, out_path;
    int threads = int(std::thread::hardware_concurrency());
    if (threads < 1)
        threads = 1;
    int intersection_limit = 64;
    bool zero_timing = false;

    CLI::App* verify = app.add_subcommand("verify", "validate code structure from a config");
    verify->add_option("--config", config_path, "config file")->required();
    verify->add_option("--intersection-limit", intersection_limit,
                       "largest S for the exhaustive intersection check");

    CLI::App* info = app.add_subcommand("info", "print derived code parameters");
    info->add_option("--config", config_path, "config file")->required();

    CLI::App* encode = app.add_subcommand("encode", "encode a binary file into a framed stream");
    encode->add_option("--config", config_path, "config file")->required();
    encode->add_option("--in", in_path, "input file (raw bytes)")->required();
    encode->add_option("--out", out_path, "output framed stream")->required();

    CLI::App* decode = app.add_subcommand("decode", "decode a framed stream back to bytes");
    decode->add_option("--config", config_path, "config file")->required();
    decode->add_option("--in", in_path, "input framed stream")->required();
    decode->add_option("--out", out_path, "output file")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run a Monte-Carlo BER sweep");
    sweep->add_option("--config", config_path, "config file")->required();
    sweep->add_option("--out", out_path, "output CSV path");
    sweep->add_option("--threads", threads, "worker threads");
    sweep->add_flag("--zero-timing", zero_timing,
                    "write zeros for the wall-time CSV columns (reproducible output)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(config_path, intersection_limit);
        if (info->parsed())
            return cmd_info(config_path);
        if (encode->parsed())
            return cmd_encode(config_path, in_path, out_path);
        if (decode->parsed())
            return cmd_decode(config_path, in_path, out_path);
        if (sweep->parsed())
            return cmd_sweep(config_path, out_path, threads, zero_timing);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
