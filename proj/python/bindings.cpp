#include "staircase/channel.hpp"
#include "staircase/config.hpp"
#include "staircase/decoder.hpp"
#include "staircase/encoder.hpp"
#include "staircase/sim.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

namespace py = pybind11;
using namespace staircase;

namespace {

CodeParams make_params(int S, int M, int64_t F, int64_t W, int iterations,
                       const std::vector<int>& ruler, const std::string& perm_family) {
    CodeParams p;
    p.S = S;
    p.M = M;
    p.F = F;
    p.W = W;
    p.iterations = iterations;
    p.ruler = ruler.empty() ? optimal_ruler(M + 1) : GolombRuler{ruler};
    if (perm_family == "involution")
        p.perm_kind = PermKind::Involution;
    else if (perm_family == "shift")
        p.perm_kind = PermKind::Shift;
    else
        throw std::invalid_argument("perm_family must be 'involution' or 'shift'");
    return p;
}

// bytes are most-significant-bit first, as in the framed stream file format
std::vector<uint64_t> unpack_bits(const py::bytes& data, int64_t nbits, const char* what) {
    std::string s = data;
    if (int64_t(s.size()) != (nbits + 7) / 8)
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string((nbits + 7) / 8) + " bytes, got " +
                                    std::to_string(s.size()));
    std::vector<uint64_t> words(size_t((nbits + 63) / 64), 0);
    for (int64_t t = 0; t < nbits; ++t)
        if ((uint8_t(s[t >> 3]) >> (7 - (t & 7))) & 1)
            words[t >> 6] |= uint64_t(1) << (t & 63);
    return words;
}

py::bytes pack_bits(const std::vector<uint64_t>& words, int64_t nbits) {
    std::string s(size_t((nbits + 7) / 8), '\0');
    for (int64_t t = 0; t < nbits; ++t)
        if ((words[t >> 6] >> (t & 63)) & 1)
            s[t >> 3] |= char(0x80u >> (t & 7));
    return py::bytes(s);
}

} // namespace

PYBIND11_MODULE(staircase_fec, m) {
    m.doc() = "Staircase codes with configurable bit degree: construction, codec, BER simulation";

    m.def("optimal_ruler", [](int order) { return optimal_ruler(order).marks; }, py::arg("order"));
    m.def("verify_ruler", [](const std::vector<int>& marks) {
        return verify_ruler(std::span<const int>(marks));
    });
    m.def("lpf", [](int64_t v) { return lpf(v); });

    m.def("entropy2", &entropy2);
    m.def("entropy2_inv", &entropy2_inv);
    m.def("qfunc", &qfunc);
    m.def("qfunc_inv", &qfunc_inv);
    m.def("shannon_limit_ebn0_db", &shannon_limit_ebn0_db);
    m.def("shannon_limit_crossover", &shannon_limit_crossover);
    m.def("gap_to_crossover", &gap_to_crossover, py::arg("rate"), py::arg("gap_db"));
    m.def("crossover_to_gap", &crossover_to_gap, py::arg("rate"), py::arg("p"));

    py::class_<Code>(m, "Code")
        .def(py::init([](int S, int M, int64_t F, int64_t W, int iterations,
                         const std::vector<int>& ruler, const std::string& perm_family) {
                 return Code(make_params(S, M, F, W, iterations, ruler, perm_family));
             }),
             py::arg("S"), py::arg("M"), py::arg("F"), py::arg("W"), py::arg("iterations") = 1,
             py::arg("ruler") = std::vector<int>{}, py::arg("perm_family") = "involution")
        .def_property_readonly("S", &Code::S)
        .def_property_readonly("M", &Code::M)
        .def_property_readonly("F", &Code::F)
        .def_property_readonly("W", &Code::W)
        .def_property_readonly("r", &Code::r)
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("ruler", [](const Code& c) { return c.marks(); })
        .def_property_readonly("block_rate", &Code::block_rate)
        .def_property_readonly("nominal_rate", &Code::nominal_rate)
        .def_property_readonly("window_mbits", &Code::window_mbits)
        .def_property_readonly("info_bits_per_frame", &Code::info_bits_per_frame)
        .def_property_readonly("transmitted_bits_per_frame", &Code::transmitted_bits_per_frame)
        .def("validate",
             [](const Code& c) {
                 py::list out;
                 for (const auto& item : c.validate().items)
                     out.append(py::make_tuple(item.name, item.pass, item.detail));
                 return out;
             })
        .def("is_valid", [](const Code& c) { return c.validate().ok(); })
        .def("verify_intersection",
             [](const Code& c, int64_t span) { return verify_intersection(c, span); },
             py::arg("block_span") = 0)
        .def("locate", [](const Code& c, int64_t block, int row, int col) {
            py::list out;
            for (const auto& s : c.locate({block, row, col}))
                out.append(py::make_tuple(s.constraint, s.row, s.pos));
            return out;
        });

    m.def(
        "encode_frame",
        [](const Code& code, const py::bytes& info) {
            FrameEncoder enc(code);
            const FrameLayout& layout = enc.layout();
            auto words = unpack_bits(info, layout.info_bits(), "info");
            BlockRun frame(code.S(), code.d_max(), code.F());
            enc.encode_frame(words.data(), frame);
            const int64_t tbits = layout.transmitted_bits();
            std::vector<uint64_t> out(size_t((tbits + 63) / 64), 0);
            for (int64_t t = 0; t < tbits; ++t) {
                BitCoord bc = layout.transmitted_coord(t);
                if (frame.get(bc.block, bc.row, bc.col))
                    out[t >> 6] |= uint64_t(1) << (t & 63);
            }
            return pack_bits(out, tbits);
        },
        py::arg("code"), py::arg("info"),
        "Encode one frame; info/transmitted bits are packed MSB-first.");

    m.def(
        "decode_frame",
        [](const Code& code, const py::bytes& received) {
            FrameDecoder dec(code);
            const FrameLayout& layout = dec.layout();
            auto words = unpack_bits(received, layout.transmitted_bits(), "received");
            dec.frame().clear();
            for (int64_t t = 0; t < layout.transmitted_bits(); ++t) {
                if ((words[t >> 6] >> (t & 63)) & 1) {
                    BitCoord bc = layout.transmitted_coord(t);
                    dec.frame().set(bc.block, bc.row, bc.col);
                }
            }
            dec.init_syndromes();
            DecodeStats st = dec.decode();
            std::vector<uint64_t> info(size_t((layout.info_bits() + 63) / 64), 0);
            dec.extract_info(info.data());
            py::dict stats;
            stats["flips"] = st.flips;
            stats["detected"] = st.detected;
            stats["pinned_suppressed"] = st.pinned_suppressed;
            stats["iterations"] = st.iterations;
            stats["residual_constraints"] = st.residual_constraints;
            return py::make_tuple(pack_bits(info, layout.info_bits()), stats);
        },
        py::arg("code"), py::arg("received"));

    m.def(
        "sweep",
        [](const std::string& config_text, int threads, bool zero_timing) {
            Config cfg = parse_config_text(config_text);
            if (!cfg.has_sweep)
                throw std::invalid_argument("config has no [sweep] section");
            Code code = make_validated(cfg.code);
            resolve_points(code.block_rate(), cfg.sweep.gaps_db, cfg.sweep.crossovers);
            SimResult result = run_sweep(code, cfg.sweep, threads);
            return to_csv(code, result, zero_timing);
        },
        py::arg("config_text"), py::arg("threads") = 1, py::arg("zero_timing") = false,
        "Run a Monte-Carlo sweep from config text and return the CSV.");
}
