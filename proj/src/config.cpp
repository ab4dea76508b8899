#include "staircase/config.hpp"

#include "staircase/channel.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

struct Line {
    int number;
    std::string section;
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
}

int64_t parse_int(const Line& ln, const std::string& origin) {
    int64_t v = 0;
    auto res = std::from_chars(ln.value.data(), ln.value.data() + ln.value.size(), v);
    if (res.ec != std::errc() || res.ptr != ln.value.data() + ln.value.size())
        fail(origin, ln.number, "expected integer for '" + ln.key + "'");
    return v;
}

uint64_t parse_u64(const Line& ln, const std::string& origin) {
    uint64_t v = 0;
    auto res = std::from_chars(ln.value.data(), ln.value.data() + ln.value.size(), v);
    if (res.ec != std::errc() || res.ptr != ln.value.data() + ln.value.size())
        fail(origin, ln.number, "expected unsigned integer for '" + ln.key + "'");
    return v;
}

std::vector<double> parse_double_list(const Line& ln, const std::string& origin) {
    std::vector<double> out;
    std::stringstream ss(ln.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            fail(origin, ln.number, "empty entry in list '" + ln.key + "'");
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            fail(origin, ln.number, "expected number in list '" + ln.key + "'");
        }
    }
    if (out.empty())
        fail(origin, ln.number, "list '" + ln.key + "' is empty");
    return out;
}

std::vector<int> parse_int_list(const Line& ln, const std::string& origin) {
    std::vector<int> out;
    for (double d : parse_double_list(ln, origin)) {
        if (d != int64_t(d))
            fail(origin, ln.number, "expected integer list for '" + ln.key + "'");
        out.push_back(int(d));
    }
    return out;
}

void append_double_shortest(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

} // namespace

Config parse_config_text(const std::string& text, const std::string& origin) {
    Config cfg;
    bool have_S = false, have_M = false, have_F = false, have_W = false, have_iters = false;
    std::string ruler_spec = "optimal";
    std::vector<double> gaps, crossovers;
    bool max_bits_set = false;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t cpos = line.find_first_of("#;");
        if (cpos != std::string::npos)
            line = line.substr(0, cpos);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(origin, lineno, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "code" && section != "frame" && section != "sweep" && section != "io")
                fail(origin, lineno, "unknown section '" + section + "'");
            if (section == "sweep")
                cfg.has_sweep = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, lineno, "expected 'key = value'");
        Line ln{lineno, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
        if (ln.key.empty() || ln.value.empty())
            fail(origin, lineno, "expected 'key = value'");

        if (section == "code") {
            if (ln.key == "S") {
                cfg.code.S = int(parse_int(ln, origin));
                have_S = true;
            } else if (ln.key == "M") {
                cfg.code.M = int(parse_int(ln, origin));
                have_M = true;
            } else if (ln.key == "r") {
                cfg.code.r_explicit = int(parse_int(ln, origin));
            } else if (ln.key == "ruler") {
                ruler_spec = ln.value;
            } else if (ln.key == "perm_family") {
                if (ln.value == "involution")
                    cfg.code.perm_kind = PermKind::Involution;
                else if (ln.value == "shift")
                    cfg.code.perm_kind = PermKind::Shift;
                else
                    fail(origin, lineno, "perm_family must be 'involution' or 'shift'");
            } else {
                fail(origin, lineno, "unknown key '" + ln.key + "' in [code]");
            }
        } else if (section == "frame") {
            if (ln.key == "F") {
                cfg.code.F = parse_int(ln, origin);
                have_F = true;
            } else if (ln.key == "W") {
                cfg.code.W = parse_int(ln, origin);
                have_W = true;
            } else if (ln.key == "iterations") {
                cfg.code.iterations = int(parse_int(ln, origin));
                have_iters = true;
            } else {
                fail(origin, lineno, "unknown key '" + ln.key + "' in [frame]");
            }
        } else if (section == "sweep") {
            if (ln.key == "gap_db") {
                gaps = parse_double_list(ln, origin);
            } else if (ln.key == "p") {
                crossovers = parse_double_list(ln, origin);
            } else if (ln.key == "max_frames") {
                cfg.sweep.stop.max_frames = parse_u64(ln, origin);
            } else if (ln.key == "max_bits") {
                cfg.sweep.stop.max_bits = parse_u64(ln, origin);
                max_bits_set = true;
            } else if (ln.key == "min_bit_errors") {
                cfg.sweep.stop.min_bit_errors = parse_u64(ln, origin);
            } else if (ln.key == "base_seed") {
                cfg.sweep.base_seed = parse_u64(ln, origin);
            } else if (ln.key == "mode") {
                if (ln.value == "random")
                    cfg.sweep.mode = InfoMode::Random;
                else if (ln.value == "zero")
                    cfg.sweep.mode = InfoMode::Zero;
                else
                    fail(origin, lineno, "mode must be 'random' or 'zero'");
            } else {
                fail(origin, lineno, "unknown key '" + ln.key + "' in [sweep]");
            }
        } else if (section == "io") {
            if (ln.key == "csv")
                cfg.io_csv = ln.value;
            else if (ln.key == "manifest")
                cfg.io_manifest = ln.value;
            else
                fail(origin, lineno, "unknown key '" + ln.key + "' in [io]");
        } else {
            fail(origin, lineno, "key outside any section");
        }
    }

    if (!have_S || !have_M)
        throw std::invalid_argument(origin + ": [code] must set S and M");
    if (!have_F || !have_W || !have_iters)
        throw std::invalid_argument(origin + ": [frame] must set F, W and iterations");

    if (ruler_spec == "optimal") {
        cfg.code.ruler = optimal_ruler(cfg.code.M + 1);
    } else {
        Line ln{0, "code", "ruler", ruler_spec};
        cfg.code.ruler = GolombRuler{parse_int_list(ln, origin)};
    }

    if (cfg.has_sweep) {
        if (!gaps.empty() && !crossovers.empty())
            throw std::invalid_argument(origin + ": [sweep] sets both gap_db and p");
        if (gaps.empty() && crossovers.empty())
            throw std::invalid_argument(origin + ": [sweep] needs gap_db or p");
        cfg.sweep.gaps_db = std::move(gaps);
        cfg.sweep.crossovers = std::move(crossovers);
        if (cfg.sweep.stop.max_bits == 0 && cfg.sweep.stop.max_frames == 0 && !max_bits_set)
            cfg.sweep.stop.max_bits = StopRules{}.max_bits;
        if (cfg.sweep.stop.max_bits == 0 && cfg.sweep.stop.max_frames == 0)
            throw std::invalid_argument(origin +
                                        ": [sweep] needs a finite max_bits or max_frames");
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

std::string canonical_config(const Config& cfg) {
    std::string out;
    out += "S=" + std::to_string(cfg.code.S) + "\n";
    out += "M=" + std::to_string(cfg.code.M) + "\n";
    out += "ruler=";
    for (size_t i = 0; i < cfg.code.ruler.marks.size(); ++i)
        out += (i ? "," : "") + std::to_string(cfg.code.ruler.marks[i]);
    out += "\n";
    out += std::string("perm_family=") + to_string(cfg.code.perm_kind) + "\n";
    out += "F=" + std::to_string(cfg.code.F) + "\n";
    out += "W=" + std::to_string(cfg.code.W) + "\n";
    out += "iterations=" + std::to_string(cfg.code.iterations) + "\n";
    if (cfg.has_sweep) {
        out += "points_gap_db=";
        for (size_t i = 0; i < cfg.sweep.gaps_db.size(); ++i) {
            if (i)
                out += ",";
            append_double_shortest(out, cfg.sweep.gaps_db[i]);
        }
        out += "\n";
        out += "points_p=";
        for (size_t i = 0; i < cfg.sweep.crossovers.size(); ++i) {
            if (i)
                out += ",";
            append_double_shortest(out, cfg.sweep.crossovers[i]);
        }
        out += "\n";
        out += "max_frames=" + std::to_string(cfg.sweep.stop.max_frames) + "\n";
        out += "max_bits=" + std::to_string(cfg.sweep.stop.max_bits) + "\n";
        out += "min_bit_errors=" + std::to_string(cfg.sweep.stop.min_bit_errors) + "\n";
        out += "base_seed=" + std::to_string(cfg.sweep.base_seed) + "\n";
        out += std::string("mode=") + (cfg.sweep.mode == InfoMode::Zero ? "zero" : "random") +
               "\n";
    }
    return out;
}

uint64_t config_hash(const Config& cfg) {
    std::string s = canonical_config(cfg);
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string manifest_json(const Config& cfg) {
    nlohmann::json j;
    j["code"]["S"] = cfg.code.S;
    j["code"]["M"] = cfg.code.M;
    j["code"]["ruler"] = cfg.code.ruler.marks;
    j["code"]["perm_family"] = to_string(cfg.code.perm_kind);
    j["frame"]["F"] = cfg.code.F;
    j["frame"]["W"] = cfg.code.W;
    j["frame"]["iterations"] = cfg.code.iterations;
    if (cfg.has_sweep) {
        j["sweep"]["gap_db"] = cfg.sweep.gaps_db;
        j["sweep"]["p"] = cfg.sweep.crossovers;
        j["sweep"]["max_frames"] = cfg.sweep.stop.max_frames;
        j["sweep"]["max_bits"] = cfg.sweep.stop.max_bits;
        j["sweep"]["min_bit_errors"] = cfg.sweep.stop.min_bit_errors;
        j["sweep"]["base_seed"] = cfg.sweep.base_seed;
        j["sweep"]["mode"] = cfg.sweep.mode == InfoMode::Zero ? "zero" : "random";
    }
    char hex[19];
    std::snprintf(hex, sizeof hex, "0x%016llx", (unsigned long long)config_hash(cfg));
    j["param_hash"] = hex;
    return j.dump(2) + "\n";
}

} // namespace staircase
