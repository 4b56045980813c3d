#pragma once

// On-disk formats: field elements as hex integer reprs, words as digit
// strings over F_q in coordinate order, matrices as row bitmask hex strings
// (q = 2) or digit strings (q > 2), and the JSON code cache with an FNV-1a
// checksum.

#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "decoder.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "linear_code.hpp"
#include "orbits.hpp"

namespace grasscode {

// I/O and format violations map to their own CLI exit code.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr char kDigitChars[] = "0123456789abc";  // q <= 13

inline std::string to_hex(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::uint64_t parse_hex(const std::string& s) {
    std::size_t pos = s.rfind("0x", 0) == 0 ? 2 : 0;
    if (pos >= s.size()) throw FormatError("empty hex value");
    std::uint64_t v = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        std::uint64_t d;
        if (c >= '0' && c <= '9')
            d = static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            d = static_cast<std::uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            d = static_cast<std::uint64_t>(c - 'A' + 10);
        else
            throw FormatError(std::string("invalid hex character '") + c + "'");
        if (v >> 60) throw FormatError("hex value out of range");
        v = v << 4 | d;
    }
    return v;
}

inline std::string word_to_string(const Field& F, std::span<const Fe> word) {
    std::string s;
    s.reserve(word.size());
    for (auto e : word) s.push_back(kDigitChars[F.digit_of(e)]);
    return s;
}

inline std::vector<Fe> word_from_string(const Field& F, const std::string& s) {
    std::vector<Fe> out;
    out.reserve(s.size());
    for (char c : s) {
        std::uint32_t d;
        if (c >= '0' && c <= '9')
            d = static_cast<std::uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'c')
            d = static_cast<std::uint32_t>(c - 'a' + 10);
        else
            throw FormatError(std::string("invalid word character '") + c + "'");
        if (d >= F.q()) throw FormatError("digit out of alphabet for this field");
        out.push_back(F.digit_element(d));
    }
    return out;
}

// Row over F_q: bitmask rendered in hex for q = 2 (bit i <-> column i), digit
// string otherwise.
inline std::string row_to_string(const Field& F, std::span<const Fe> row) {
    if (F.q() != 2) return word_to_string(F, row);
    std::string hex;
    std::uint32_t nibble = 0;
    for (std::size_t i = 0; i < row.size(); i += 4) {
        nibble = 0;
        for (std::size_t b = 0; b < 4 && i + b < row.size(); ++b)
            if (row[i + b] != Fe{0}) nibble |= 1u << b;
        hex.push_back("0123456789abcdef"[nibble]);
    }
    return "0x" + hex;  // little-endian nibbles: first nibble covers columns 0-3
}

inline std::vector<Fe> row_from_string(const Field& F, const std::string& s, std::size_t cols) {
    if (F.q() != 2) {
        auto row = word_from_string(F, s);
        if (row.size() != cols) throw FormatError("matrix row has wrong length");
        return row;
    }
    if (s.rfind("0x", 0) != 0) throw FormatError("binary matrix row must be a hex bitmask");
    std::vector<Fe> row(cols, Fe{0});
    for (std::size_t i = 2; i < s.size(); ++i) {
        char c = s[i];
        std::uint32_t nibble;
        if (c >= '0' && c <= '9')
            nibble = static_cast<std::uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<std::uint32_t>(c - 'a' + 10);
        else
            throw FormatError("invalid hex bitmask character");
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t col = (i - 2) * 4 + b;
            if (nibble >> b & 1) {
                if (col >= cols) throw FormatError("matrix row bitmask longer than row");
                row[col] = Fe{1};
            }
        }
    }
    return row;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline constexpr char kCacheFormat[] = "grasscode-cache-v1";

inline nlohmann::json cache_to_json(const Field& F, const LinearCode& code, const std::vector<Orbit>& orbits,
                                    const DecoderPlan& plan) {
    nlohmann::json j;
    j["format"] = kCacheFormat;
    j["q"] = F.q();
    j["m"] = F.m();
    j["p"] = F.p();
    j["modulus"] = to_hex(F.modulus());
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.d;
    j["radius"] = plan.radius;
    j["per_orbit_t"] = plan.per_orbit_t;
    j["closure_holds"] = plan.closure_holds;

    nlohmann::json jorbits = nlohmann::json::array();
    for (std::size_t idx = 0; idx < orbits.size(); ++idx) {
        const Orbit& o = orbits[idx];
        const OrbitPlan& op = plan.orbits[idx];
        nlohmann::json jo;
        jo["rep_log"] = o.delta_log;
        jo["size"] = o.size();
        jo["subfield_degree"] = o.d;
        jo["offset"] = op.oc.offset;
        jo["dim"] = op.oc.dim;
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& P : o.points) pts.push_back({to_hex(P.key0), to_hex(P.key1)});
        jo["points"] = std::move(pts);
        jo["allowed_exponents"] = op.oc.allowed_exponents;
        nlohmann::json proj = nlohmann::json::array();
        for (std::size_t r = 0; r < op.oc.Gproj.rows; ++r) proj.push_back(row_to_string(F, op.oc.Gproj.row(r)));
        jo["projected_generator"] = std::move(proj);
        if (op.info_set)
            jo["info_set"] = *op.info_set;
        else
            jo["info_set"] = nullptr;
        jorbits.push_back(std::move(jo));
    }
    j["orbits"] = std::move(jorbits);

    nlohmann::json gen = nlohmann::json::array();
    for (std::size_t r = 0; r < code.G.rows; ++r) gen.push_back(row_to_string(F, code.G.row(r)));
    j["generator"] = std::move(gen);
    nlohmann::json par = nlohmann::json::array();
    for (std::size_t r = 0; r < code.parity.rows; ++r) par.push_back(row_to_string(F, code.parity.row(r)));
    j["parity"] = std::move(par);

    j["checksum"] = "";
    j["checksum"] = to_hex(fnv1a64(j.dump()));
    return j;
}

struct CodeCache {
    std::vector<Orbit> orbits;
    LinearCode code;
    std::vector<std::optional<std::vector<std::size_t>>> info_sets;
    std::vector<std::vector<std::uint64_t>> allowed_exponents;
};

inline CodeCache cache_from_json(const Field& F, const nlohmann::json& j) {
    try {
        if (j.at("format").get<std::string>() != kCacheFormat) throw FormatError("unknown cache format");
        if (j.at("q").get<std::uint32_t>() != F.q() || j.at("m").get<std::uint32_t>() != F.m())
            throw FormatError("cache was built for different (q, m)");
        if (parse_hex(j.at("modulus").get<std::string>()) != F.modulus())
            throw FormatError("cache was built with a different modulus");

        nlohmann::json copy = j;
        std::string stored = copy.at("checksum").get<std::string>();
        copy["checksum"] = "";
        if (to_hex(fnv1a64(copy.dump())) != stored) throw FormatError("cache checksum mismatch");

        CodeCache cache;
        cache.code.q = F.q();
        cache.code.m = F.m();
        cache.code.n = j.at("n").get<std::size_t>();
        cache.code.k = j.at("k").get<std::size_t>();
        cache.code.d = j.at("d").get<std::uint64_t>();

        for (const auto& jo : j.at("orbits")) {
            Orbit o;
            o.delta_log = jo.at("rep_log").get<std::int64_t>();
            o.delta = F.exp(o.delta_log);
            o.d = jo.at("subfield_degree").get<std::uint32_t>();
            for (const auto& pk : jo.at("points")) {
                std::uint64_t k0 = parse_hex(pk.at(0).get<std::string>());
                std::uint64_t k1 = parse_hex(pk.at(1).get<std::string>());
                std::vector<Fe> r0(F.m()), r1(F.m());
                std::uint64_t x0 = k0, x1 = k1;
                for (std::uint32_t c = 0; c < F.m(); ++c) {
                    r0[c] = F.digit_element(static_cast<std::uint32_t>(x0 % F.q()));
                    r1[c] = F.digit_element(static_cast<std::uint32_t>(x1 % F.q()));
                    x0 /= F.q();
                    x1 /= F.q();
                }
                Plane P;
                P.alpha = F.from_coordinates(r0);
                P.beta = F.from_coordinates(r1);
                P.key0 = k0;
                P.key1 = k1;
                o.points.push_back(P);
            }
            cache.code.orbit_offset.push_back(cache.code.coordinate_index.size());
            cache.code.coordinate_index.insert(cache.code.coordinate_index.end(), o.points.begin(),
                                               o.points.end());
            cache.orbits.push_back(std::move(o));

            if (jo.at("info_set").is_null())
                cache.info_sets.push_back(std::nullopt);
            else
                cache.info_sets.push_back(jo.at("info_set").get<std::vector<std::size_t>>());
            cache.allowed_exponents.push_back(jo.at("allowed_exponents").get<std::vector<std::uint64_t>>());
        }
        cache.code.orbit_offset.push_back(cache.code.coordinate_index.size());
        if (cache.code.coordinate_index.size() != cache.code.n) throw FormatError("cache column count mismatch");

        const auto& gen = j.at("generator");
        cache.code.G = Mat(cache.code.k, cache.code.n);
        if (gen.size() != cache.code.k) throw FormatError("cache generator row count mismatch");
        for (std::size_t r = 0; r < cache.code.k; ++r) {
            auto row = row_from_string(F, gen.at(r).get<std::string>(), cache.code.n);
            for (std::size_t c = 0; c < cache.code.n; ++c) cache.code.G.at(r, c) = row[c];
        }
        const auto& par = j.at("parity");
        cache.code.parity = Mat(par.size(), cache.code.n);
        for (std::size_t r = 0; r < par.size(); ++r) {
            auto row = row_from_string(F, par.at(r).get<std::string>(), cache.code.n);
            for (std::size_t c = 0; c < cache.code.n; ++c) cache.code.parity.at(r, c) = row[c];
        }
        return cache;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed cache: ") + e.what());
    }
}

inline void save_cache_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open cache file for writing: " + path);
    out << j.dump(2) << "\n";
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

}  // namespace grasscode
