#include "staircase/code.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace staircase {

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "pass" : "FAIL") << "  " << it.name;
        if (!it.detail.empty())
            os << " (" << it.detail << ")";
        os << "\n";
    }
    return os.str();
}

Code::Code(CodeParams params)
    : p_(std::move(params)), perms_(p_.S, p_.M, p_.perm_kind), component_(p_.S, p_.M) {
    if (int(p_.ruler.marks.size()) != p_.M + 1)
        throw std::invalid_argument("Code: ruler order must be M+1");
    if (p_.ruler.marks.empty() || p_.ruler.marks[0] != 0)
        throw std::invalid_argument("Code: ruler must start at 0");
    for (size_t i = 1; i < p_.ruler.marks.size(); ++i)
        if (p_.ruler.marks[i] <= p_.ruler.marks[i - 1])
            throw std::invalid_argument("Code: ruler marks must strictly increase");
    if (p_.F <= 0 || p_.W <= 0 || p_.iterations < 0)
        throw std::invalid_argument("Code: F, W must be positive");
}

std::vector<CodewordSlot> Code::locate(const BitCoord& bit) const {
    std::vector<CodewordSlot> slots(p_.M + 1);
    for (int k = 0; k <= p_.M; ++k) {
        auto [i, j] = perms_.inv(k, bit.row, bit.col);
        slots[k] = {bit.block + p_.ruler.marks[k], int32_t(i),
                    int32_t((p_.M - k) * p_.S + j)};
    }
    return slots;
}

BitCoord Code::member(int64_t m, int row, int pos) const {
    int seg = pos / p_.S;
    int k = p_.M - seg;
    int j = pos % p_.S;
    auto [x, y] = perms_.map(k, row, j);
    return {m - p_.ruler.marks[k], int32_t(x), int32_t(y)};
}

std::vector<BitCoord> Code::constraint_members(int64_t m, int row) const {
    std::vector<BitCoord> bits(size_t(p_.M + 1) * p_.S);
    for (int pos = 0; pos < int(bits.size()); ++pos)
        bits[pos] = member(m, row, pos);
    return bits;
}

std::pair<int64_t, int64_t> Code::block_rate_ratio() const {
    int64_t S = p_.S, rr = r();
    int64_t num = (S - rr) * (p_.F - p_.W);
    int64_t den = S * (p_.F - p_.W) + p_.W * rr;
    return {num, den};
}

double Code::block_rate() const {
    auto [num, den] = block_rate_ratio();
    return double(num) / double(den);
}

ValidationReport Code::validate(int net_exhaustive_limit) const {
    ValidationReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.items.push_back({std::move(name), pass, std::move(detail)});
    };

    bool golomb = verify_ruler(p_.ruler);
    add("ruler is a Golomb ruler", golomb, golomb ? "" : "a positive difference repeats");

    int64_t least = lpf(p_.S);
    add("M <= lpf(S)", p_.M <= least,
        "M=" + std::to_string(p_.M) + ", lpf(" + std::to_string(p_.S) + ")=" +
            std::to_string(least));

    NetCheck net = check_net(perms_, net_exhaustive_limit);
    add(net.exhaustive ? "net property (exhaustive)" : "net property (sampled)", net.ok,
        net.detail);

    int derived = r();
    bool r_ok = p_.r_explicit < 0 || p_.r_explicit == derived;
    add("r consistency", r_ok,
        r_ok ? "r=" + std::to_string(derived)
             : "explicit r=" + std::to_string(p_.r_explicit) + " but ceil(log2((M+1)S))+1=" +
                   std::to_string(derived));

    add("W > d_M", p_.W > d_max(),
        "W=" + std::to_string(p_.W) + ", d_M=" + std::to_string(d_max()));
    add("F > W", p_.F > p_.W, "F=" + std::to_string(p_.F) + ", W=" + std::to_string(p_.W));
    return rep;
}

Code make_validated(const CodeParams& params, int net_exhaustive_limit) {
    Code code(params);
    ValidationReport rep = code.validate(net_exhaustive_limit);
    if (!rep.ok()) {
        std::string msg = "invalid code parameters:\n" + rep.to_string();
        throw std::invalid_argument(msg);
    }
    return code;
}

bool verify_intersection(const Code& code, int64_t block_span) {
    const int S = code.S();
    const int M = code.M();
    const int64_t dM = code.d_max();
    if (block_span <= 0)
        block_span = 2 * dM + 1;
    // Hash each bit's covering codewords pairwise; two distinct codewords
    // sharing two bits show up as a repeated (codeword, codeword) key.
    std::unordered_map<uint64_t, int> pair_count;
    pair_count.reserve(size_t(block_span) * S * S * M);
    for (int64_t c = dM; c < dM + block_span; ++c) {
        for (int a = 0; a < S; ++a) {
            for (int b = 0; b < S; ++b) {
                auto slots = code.locate({c, a, b});
                for (size_t u = 0; u < slots.size(); ++u) {
                    for (size_t v = u + 1; v < slots.size(); ++v) {
                        uint64_t id1 = uint64_t(slots[u].constraint) * S + slots[u].row;
                        uint64_t id2 = uint64_t(slots[v].constraint) * S + slots[v].row;
                        if (++pair_count[(id1 << 32) | id2] > 1)
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace staircase
