#include "staircase/wire.hpp"

#include "staircase/decoder.hpp"
#include "staircase/encoder.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace staircase {

namespace {

std::vector<uint8_t> read_all(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open file: " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(f),
                                std::istreambuf_iterator<char>());
}

void write_all(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open file for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

void put_u64le(std::vector<uint8_t>& v, uint64_t x) {
    for (int i = 0; i < 8; ++i)
        v.push_back(uint8_t(x >> (8 * i)));
}

void put_u32le(std::vector<uint8_t>& v, uint32_t x) {
    for (int i = 0; i < 4; ++i)
        v.push_back(uint8_t(x >> (8 * i)));
}

} // namespace

void encode_file(const Code& code, const std::string& in_path, const std::string& out_path) {
    std::vector<uint8_t> input = read_all(in_path);
    FrameEncoder enc(code);
    const FrameLayout& layout = enc.layout();
    const uint64_t ibpf = uint64_t(layout.info_bits());
    const uint64_t total_bits = uint64_t(input.size()) * 8;
    const uint64_t frames = (total_bits + ibpf - 1) / ibpf;
    const uint64_t pad = frames * ibpf - total_bits;
    if (pad > UINT32_MAX)
        throw std::runtime_error("encode_file: frame too large for trailer pad field");

    BitReader in_bits(input.data(), total_bits);
    std::vector<uint64_t> info_words((ibpf + 63) / 64);
    BlockRun frame(code.S(), code.d_max(), code.F());
    BitWriter out_bits;

    for (uint64_t f = 0; f < frames; ++f) {
        std::memset(info_words.data(), 0, info_words.size() * sizeof(uint64_t));
        for (uint64_t t = 0; t < ibpf && in_bits.remaining(); ++t)
            if (in_bits.next())
                info_words[t >> 6] |= uint64_t(1) << (t & 63);
        enc.encode_frame(info_words.data(), frame);
        const int64_t tbits = layout.transmitted_bits();
        for (int64_t t = 0; t < tbits; ++t) {
            BitCoord bc = layout.transmitted_coord(t);
            out_bits.push(frame.get(bc.block, bc.row, bc.col));
        }
    }

    std::vector<uint8_t> out = out_bits.take();
    out.insert(out.end(), StreamTrailer::kMagic, StreamTrailer::kMagic + 4);
    put_u64le(out, frames);
    put_u32le(out, uint32_t(pad));
    write_all(out_path, out);
}

DecodeFileResult decode_file(const Code& code, const std::string& in_path,
                             const std::string& out_path) {
    std::vector<uint8_t> input = read_all(in_path);
    if (input.size() < 16)
        throw std::runtime_error("decode_file: input shorter than the stream trailer");
    const uint8_t* tail = input.data() + input.size() - 16;
    if (std::memcmp(tail, StreamTrailer::kMagic, 4) != 0)
        throw std::runtime_error("decode_file: bad magic; not a framed stream");
    uint64_t frames = 0;
    for (int i = 0; i < 8; ++i)
        frames |= uint64_t(tail[4 + i]) << (8 * i);
    uint32_t pad = 0;
    for (int i = 0; i < 4; ++i)
        pad |= uint32_t(tail[12 + i]) << (8 * i);

    FrameDecoder dec(code);
    const FrameLayout& layout = dec.layout();
    const uint64_t tbits = uint64_t(layout.transmitted_bits());
    const uint64_t ibpf = uint64_t(layout.info_bits());
    const uint64_t payload_bytes = (frames * tbits + 7) / 8;
    if (input.size() != payload_bytes + 16)
        throw std::runtime_error("decode_file: truncated or oversized stream (expected " +
                                 std::to_string(payload_bytes + 16) + " bytes, got " +
                                 std::to_string(input.size()) + ")");
    if (pad >= ibpf && frames > 0)
        throw std::runtime_error("decode_file: pad bit count exceeds a frame");

    BitReader in_bits(input.data(), frames * tbits);
    std::vector<uint64_t> info_words((ibpf + 63) / 64, 0);
    BitWriter out_bits;
    DecodeFileResult res;
    res.frames = frames;

    for (uint64_t f = 0; f < frames; ++f) {
        dec.frame().clear();
        for (uint64_t t = 0; t < tbits; ++t) {
            if (in_bits.next()) {
                BitCoord bc = layout.transmitted_coord(int64_t(t));
                dec.frame().set(bc.block, bc.row, bc.col);
            }
        }
        dec.init_syndromes();
        DecodeStats st = dec.decode();
        res.residual_constraints += st.residual_constraints;
        res.flips += st.flips;
        dec.extract_info(info_words.data());
        uint64_t emit = (f + 1 == frames) ? ibpf - pad : ibpf;
        for (uint64_t t = 0; t < emit; ++t)
            out_bits.push((info_words[t >> 6] >> (t & 63)) & 1);
    }

    write_all(out_path, out_bits.bytes());
    return res;
}

} // namespace staircase
