#include "staircase/sim.hpp"

#include "staircase/channel.hpp"
#include "staircase/decoder.hpp"
#include "staircase/encoder.hpp"
#include "staircase/philox.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace staircase {

namespace {

constexpr uint32_t kInfoStream = 0;
constexpr uint32_t kNoiseStream = 1;

struct FrameOutcome {
    uint64_t info_bits = 0;
    uint64_t bit_errors = 0;
};

struct Aggregator {
    std::mutex mu;
    std::map<uint64_t, FrameOutcome> pending;
    uint64_t next = 0; // next frame index to fold into the prefix
    uint64_t info_bits = 0, bit_errors = 0, frames = 0, frame_errors = 0;
    std::atomic<bool> stop{false};

    bool tripped(const StopRules& s) const {
        if (s.min_bit_errors && bit_errors >= s.min_bit_errors)
            return true;
        if (s.max_bits && info_bits >= s.max_bits)
            return true;
        if (s.max_frames && frames >= s.max_frames)
            return true;
        return false;
    }

    // Returns true if this submission finalized the stop decision.
    void submit(uint64_t frame, const FrameOutcome& oc, const StopRules& rules) {
        std::lock_guard<std::mutex> lock(mu);
        if (stop.load(std::memory_order_relaxed))
            return;
        pending.emplace(frame, oc);
        while (!pending.empty() && pending.begin()->first == next) {
            const FrameOutcome& f = pending.begin()->second;
            info_bits += f.info_bits;
            bit_errors += f.bit_errors;
            frame_errors += f.bit_errors > 0;
            frames += 1;
            pending.erase(pending.begin());
            ++next;
            if (tripped(rules)) {
                stop.store(true, std::memory_order_relaxed);
                pending.clear();
                break;
            }
        }
    }
};

// Draws BSC flip positions over [0, nbits) using geometric gaps.
void sample_flips(Philox4x32& rng, double p, int64_t nbits, std::vector<int64_t>& out) {
    out.clear();
    if (p <= 0.0)
        return;
    const double log1m = std::log1p(-p);
    int64_t pos = -1;
    for (;;) {
        pos += 1 + rng.next_geometric(log1m);
        if (pos >= nbits)
            return;
        out.push_back(pos);
    }
}

struct WorkerScratch {
    explicit WorkerScratch(const Code& code)
        : enc(code), dec(code),
          info_words(size_t((enc.layout().info_bits() + 63) / 64)),
          out_words(info_words.size()) {}

    FrameEncoder enc;
    FrameDecoder dec;
    std::vector<uint64_t> info_words;
    std::vector<uint64_t> out_words;
    std::vector<int64_t> flips;
};

FrameOutcome run_one_frame(const Code& code, const SweepSpec& spec, int point_index,
                           uint64_t frame, double p, WorkerScratch& ws) {
    const FrameLayout& layout = ws.enc.layout();
    FrameOutcome oc;
    oc.info_bits = uint64_t(layout.info_bits());

    if (!spec.scripted_noise.empty()) {
        ws.flips = spec.scripted_noise[frame % spec.scripted_noise.size()];
    } else {
        Philox4x32 noise = make_stream(spec.base_seed, uint32_t(point_index), frame, kNoiseStream);
        sample_flips(noise, p, layout.transmitted_bits(), ws.flips);
    }

    if (spec.mode == InfoMode::Zero) {
        SparseDecodeResult r = ws.dec.decode_sparse(ws.flips);
        oc.bit_errors = uint64_t(r.info_bit_errors);
        return oc;
    }

    Philox4x32 info = make_stream(spec.base_seed, uint32_t(point_index), frame, kInfoStream);
    for (auto& w : ws.info_words)
        w = info.next_u64();
    ws.enc.encode_frame(ws.info_words.data(), ws.dec.frame());
    for (int64_t t : ws.flips) {
        BitCoord bc = layout.transmitted_coord(t);
        ws.dec.frame().flip(bc.block, bc.row, bc.col);
    }
    ws.dec.init_syndromes();
    ws.dec.decode();
    ws.dec.extract_info(ws.out_words.data());

    const int64_t nbits = layout.info_bits();
    uint64_t errors = 0;
    for (size_t i = 0; i < ws.info_words.size(); ++i) {
        uint64_t diff = ws.info_words[i] ^ ws.out_words[i];
        if (int64_t(i) == int64_t(ws.info_words.size()) - 1 && (nbits & 63))
            diff &= (uint64_t(1) << (nbits & 63)) - 1; // mask tail past the frame
        errors += uint64_t(std::popcount(diff));
    }
    oc.bit_errors = errors;
    return oc;
}

void append_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

} // namespace

void resolve_points(double rate, std::vector<double>& gaps_db, std::vector<double>& crossovers) {
    if (!gaps_db.empty() && crossovers.empty()) {
        for (double g : gaps_db)
            crossovers.push_back(gap_to_crossover(rate, g));
    } else if (gaps_db.empty() && !crossovers.empty()) {
        for (double p : crossovers)
            gaps_db.push_back(p == 0.0 ? std::numeric_limits<double>::infinity()
                                       : crossover_to_gap(rate, p));
    }
    if (gaps_db.size() != crossovers.size())
        throw std::invalid_argument("sweep points: gap and crossover lists disagree");
}

PointResult run_point(const Code& code, const SweepSpec& spec, int point_index, int threads) {
    PointResult pr;
    pr.rate = code.block_rate();
    pr.gap_db = spec.gaps_db[point_index];
    pr.crossover_p = spec.crossovers[point_index];
    const double p = pr.crossover_p;
    if (p < 0.0 || p >= 0.5) {
        pr.error = "crossover probability out of range";
        return pr;
    }
    if (threads < 1)
        threads = 1;

    auto t0 = std::chrono::steady_clock::now();
    Aggregator agg;
    std::atomic<uint64_t> next_frame{0};

    auto work = [&]() {
        WorkerScratch ws(code);
        while (!agg.stop.load(std::memory_order_relaxed)) {
            uint64_t f = next_frame.fetch_add(1, std::memory_order_relaxed);
            FrameOutcome oc = run_one_frame(code, spec, point_index, f, p, ws);
            agg.submit(f, oc, spec.stop);
        }
    };

    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    pr.info_bits = agg.info_bits;
    pr.bit_errors = agg.bit_errors;
    pr.frames = agg.frames;
    pr.frame_errors = agg.frame_errors;
    pr.ber = agg.info_bits ? double(agg.bit_errors) / double(agg.info_bits) : 0.0;
    if (agg.info_bits) {
        double n = double(agg.info_bits);
        if (agg.bit_errors == 0) {
            pr.ci_low = 0.0;
            pr.ci_high = 3.0 / n; // exact 95% bound for zero observed errors
        } else {
            double half = 1.96 * std::sqrt(pr.ber * (1.0 - pr.ber) / n);
            pr.ci_low = std::max(0.0, pr.ber - half);
            pr.ci_high = pr.ber + half;
        }
    }
    pr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pr.bits_per_sec = pr.seconds > 0 ? double(pr.info_bits) / pr.seconds : 0.0;
    return pr;
}

SimResult run_sweep(const Code& code, const SweepSpec& spec, int threads) {
    if (spec.gaps_db.size() != spec.crossovers.size())
        throw std::invalid_argument("run_sweep: unresolved point list");
    SimResult result;
    for (int i = 0; i < int(spec.gaps_db.size()); ++i) {
        try {
            result.points.push_back(run_point(code, spec, i, threads));
        } catch (const std::exception& e) {
            PointResult pr;
            pr.gap_db = spec.gaps_db[i];
            pr.crossover_p = spec.crossovers[i];
            pr.error = e.what();
            result.points.push_back(pr);
        }
    }
    return result;
}

std::string to_csv(const Code& code, const SimResult& result, bool zero_timing) {
    std::string out = "S,M,r,F,W,iterations,rate,gap_db,crossover_p,info_bits,bit_errors,"
                      "frames,frame_errors,ber,ci_low,ci_high,seconds,bits_per_sec\n";
    for (const PointResult& pr : result.points) {
        if (!pr.error.empty())
            continue;
        out += std::to_string(code.S()) + "," + std::to_string(code.M()) + "," +
               std::to_string(code.r()) + "," + std::to_string(code.F()) + "," +
               std::to_string(code.W()) + "," + std::to_string(code.iterations()) + ",";
        append_double(out, pr.rate);
        out += ",";
        append_double(out, pr.gap_db);
        out += ",";
        append_double(out, pr.crossover_p);
        out += "," + std::to_string(pr.info_bits) + "," + std::to_string(pr.bit_errors) + "," +
               std::to_string(pr.frames) + "," + std::to_string(pr.frame_errors) + ",";
        append_double(out, pr.ber);
        out += ",";
        append_double(out, pr.ci_low);
        out += ",";
        append_double(out, pr.ci_high);
        out += ",";
        append_double(out, zero_timing ? 0.0 : pr.seconds);
        out += ",";
        append_double(out, zero_timing ? 0.0 : pr.bits_per_sec);
        out += "\n";
    }
    return out;
}

} // namespace staircase
