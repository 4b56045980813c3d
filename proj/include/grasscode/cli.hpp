#pragma once

// Command line front end.  Exit codes: 0 success, 2 decode failure,
// 3 unsupported parameters (including decoder refusal), 4 I/O or format
// errors.  All commands are deterministic for a fixed seed; the only
// nondeterministic output field is the wall_ms timing column of `simulate`.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decoder.hpp"
#include "field.hpp"
#include "linear_code.hpp"
#include "orbit_code.hpp"
#include "orbit_list_decoder.hpp"
#include "orbits.hpp"
#include "rng.hpp"
#include "rs_decoder.hpp"
#include "serialize.hpp"
#include "simulate.hpp"
#include "sparse_poly.hpp"

namespace grasscode::cli {

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitFormat = 4;

struct Built {
    Field F;
    std::vector<Orbit> orbits;
    LinearCode code;
    DecoderPlan plan;
};

inline Built build_all(std::uint32_t q, std::uint32_t m, const std::string& cache_path) {
    Built b{Field(q, m), {}, {}, {}};
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        auto cache = cache_from_json(b.F, load_json_file(cache_path));
        b.orbits = std::move(cache.orbits);
        b.code = std::move(cache.code);
    } else {
        b.orbits = orbit_decompose(b.F);
        b.code = build_code(b.F, b.orbits);
    }
    b.plan = plan_decoder(b.F, b.code, b.orbits);
    return b;
}

inline std::string read_word_token(const std::string& path, std::istream& stdin_stream) {
    std::string tok;
    if (path.empty() || path == "-") {
        stdin_stream >> tok;
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open input file: " + path);
        in >> tok;
    }
    if (tok.empty()) throw FormatError("empty input word");
    return tok;
}

inline void write_text(const std::string& path, std::ostream& stdout_stream, const std::string& text) {
    if (path.empty() || path == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    out << text;
}

inline nlohmann::json plan_to_json(const Built& b) {
    nlohmann::json j;
    j["q"] = b.F.q();
    j["m"] = b.F.m();
    j["modulus"] = to_hex(b.F.modulus());
    j["n"] = b.code.n;
    j["k"] = b.code.k;
    j["d"] = b.code.d;
    j["radius"] = b.plan.radius;
    j["full_orbit_t"] = b.plan.per_orbit_t;
    j["decodable_orbits"] = b.plan.decodable_orbits;
    j["closure_holds"] = b.plan.closure_holds;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < b.orbits.size(); ++i) {
        const auto& op = b.plan.orbits[i];
        nlohmann::json jo;
        jo["index"] = i;
        jo["rep_log"] = b.orbits[i].delta_log;
        jo["size"] = b.orbits[i].size();
        jo["subfield_degree"] = b.orbits[i].d;
        jo["dim"] = op.oc.dim;
        jo["has_info_set"] = op.info_set.has_value();
        jo["decodable"] = op.decodable;
        arr.push_back(std::move(jo));
    }
    j["orbits"] = std::move(arr);
    return j;
}

inline int cmd_params(const Built& b, bool json, std::ostream& out) {
    if (json) {
        out << plan_to_json(b).dump(2) << "\n";
        return kExitOk;
    }
    out << "q=" << b.F.q() << " m=" << b.F.m() << " field_size=" << b.F.size() << " modulus="
        << to_hex(b.F.modulus()) << "\n";
    out << "n=" << b.code.n << " k=" << b.code.k << " d=" << b.code.d << " radius=" << b.plan.radius << "\n";
    out << "orbits=" << b.orbits.size() << " sizes=[";
    for (std::size_t i = 0; i < b.orbits.size(); ++i) out << (i ? "," : "") << b.orbits[i].size();
    out << "]\n";
    out << "decodable_orbits=" << b.plan.decodable_orbits << " full_orbit_t=" << b.plan.per_orbit_t
        << " closure=" << (b.plan.closure_holds ? "ok" : "FAILS") << " (need more than floor("
        << b.plan.radius << "/" << b.plan.per_orbit_t + 1 << ")="
        << b.plan.radius / (b.plan.per_orbit_t + 1) << ")\n";
    return kExitOk;
}

inline int cmd_orbits(const Built& b, bool json, std::ostream& out) {
    if (json) {
        out << plan_to_json(b)["orbits"].dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < b.orbits.size(); ++i) {
        const auto& o = b.orbits[i];
        const auto& op = b.plan.orbits[i];
        out << "orbit " << i << ": rep=g^" << o.delta_log << " size=" << o.size() << " subfield_degree="
            << o.d << " dim=" << op.oc.dim << " info_set=" << (op.info_set ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

inline int cmd_build(const Built& b, const std::string& cache_path, std::ostream& out) {
    save_cache_file(cache_path, cache_to_json(b.F, b.code, b.orbits, b.plan));
    out << "wrote " << cache_path << " (n=" << b.code.n << ", k=" << b.code.k << ", orbits="
        << b.orbits.size() << ")\n";
    return kExitOk;
}

inline int cmd_encode(const Built& b, const std::string& in_path, const std::string& out_path,
                      std::istream& in, std::ostream& out) {
    auto msg = word_from_string(b.F, read_word_token(in_path, in));
    if (msg.size() != b.code.k)
        throw FormatError("message must have exactly k=" + std::to_string(b.code.k) + " digits");
    write_text(out_path, out, word_to_string(b.F, encode(b.F, b.code, msg)) + "\n");
    return kExitOk;
}

inline int cmd_corrupt(const Built& b, std::uint64_t seed, std::size_t weight, const std::string& in_path,
                       const std::string& out_path, std::istream& in, std::ostream& out) {
    auto word = word_from_string(b.F, read_word_token(in_path, in));
    if (word.size() != b.code.n)
        throw FormatError("word must have exactly n=" + std::to_string(b.code.n) + " digits");
    if (weight > b.code.n) throw FormatError("weight exceeds the code length");
    SplitMix64 rng = trial_stream(seed, 0);
    apply_random_error(b.F, rng, word, weight);
    write_text(out_path, out, word_to_string(b.F, word) + "\n");
    return kExitOk;
}

inline nlohmann::json decode_diag_json(const Built& b, const DecodeResult& res) {
    nlohmann::json j;
    j["success"] = res.success;
    j["distance"] = res.distance;
    j["radius"] = b.plan.radius;
    j["winner_orbit"] = res.winner_orbit;
    j["winner_b"] = to_hex(res.winner_b);
    j["total_candidates"] = res.total_candidates;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& d : res.per_orbit) {
        per.push_back({{"orbit", d.orbit_index},
                       {"list_size", d.list_size},
                       {"rs_successes", d.rs_successes},
                       {"residual_errors", d.residual_errors}});
    }
    j["per_orbit"] = std::move(per);
    if (!res.success) {
        nlohmann::json cands = nlohmann::json::array();
        for (const auto& c : res.all_candidates) cands.push_back(word_to_string(b.F, c));
        j["candidates"] = std::move(cands);
    }
    return j;
}

inline int cmd_decode(Built& b, const std::string& in_path, const std::string& out_path,
                      const std::string& diag_path, bool fast, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    auto word = word_from_string(b.F, read_word_token(in_path, in));
    if (word.size() != b.code.n)
        throw FormatError("word must have exactly n=" + std::to_string(b.code.n) + " digits");
    auto ctx = build_decoder(b.F, std::move(b.code), std::move(b.orbits));
    auto res = decode(b.F, ctx, word, fast);
    if (!diag_path.empty()) {
        std::ofstream dout(diag_path);
        if (!dout) throw FormatError("cannot open diagnostics file: " + diag_path);
        dout << decode_diag_json(b, res).dump(2) << "\n";
    }
    if (!res.success) {
        err << "decode failure: no codeword within radius " << ctx.plan.radius << " (closest candidate at "
            << (res.codeword.empty() ? std::string("none") : std::to_string(res.distance)) << ")\n";
        return kExitDecodeFailure;
    }
    write_text(out_path, out, word_to_string(b.F, res.codeword) + "\n");
    return kExitOk;
}

inline int cmd_simulate(Built& b, std::uint64_t seed, std::uint64_t trials, std::size_t weight,
                        unsigned threads, bool fast, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
    if (weight > b.code.n) throw FormatError("weight exceeds the code length");
    auto ctx = build_decoder(b.F, std::move(b.code), std::move(b.orbits));
    auto results = simulate(b.F, ctx, seed, trials, weight, fast, threads);

    std::ostringstream csv;
    csv << "trial,weight,success,winner_orbit,winner_b,total_candidates,wall_ms\n";
    std::size_t successes = 0;
    double cand_sum = 0, ms_sum = 0;
    for (const auto& r : results) {
        successes += r.success;
        cand_sum += static_cast<double>(r.total_candidates);
        ms_sum += r.wall_ms;
        csv << r.trial << "," << r.weight << "," << (r.success ? 1 : 0) << "," << r.winner_orbit << ","
            << to_hex(r.winner_b) << "," << r.total_candidates << "," << std::fixed << std::setprecision(3)
            << r.wall_ms << "\n";
    }
    write_text(out_path, out, csv.str());
    err << "trials=" << trials << " weight=" << weight << " success_rate="
        << (trials ? static_cast<double>(successes) / static_cast<double>(trials) : 1.0)
        << " mean_candidates=" << (trials ? cand_sum / static_cast<double>(trials) : 0.0)
        << " mean_wall_ms=" << (trials ? ms_sum / static_cast<double>(trials) : 0.0) << "\n";
    return kExitOk;
}

// Re-derives the structural facts the library relies on for one (q, m):
// orbit counts and sizes, projected dimensions, trace properties, minimum
// distance, and the error-budget closure arithmetic.
inline int cmd_selftest(Built& b, std::ostream& out) {
    const Field& F = b.F;
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "ok:   " : "FAIL: ") << name << "\n";
        all_ok &= ok;
    };

    // orbit structure against the counting formulas
    {
        std::uint64_t full = static_cast<std::uint64_t>(F.order()) / (F.q() - 1);
        std::uint64_t qq = F.q();
        std::uint64_t qm1 = 1, qm2 = 1;
        for (std::uint32_t i = 0; i + 1 < F.m(); ++i) qm1 *= qq;
        for (std::uint32_t i = 0; i + 2 < F.m(); ++i) qm2 *= qq;
        std::size_t full_count = 0, deficient_count = 0;
        bool sizes_ok = true;
        for (const auto& o : b.orbits) {
            if (o.size() == full)
                ++full_count;
            else if (F.m() % 2 == 0 && o.size() == F.order() / (qq * qq - 1))
                ++deficient_count;
            else
                sizes_ok = false;
        }
        check("orbit sizes take only the two lemma values", sizes_ok);
        if (F.m() % 2 == 1) {
            check("odd m: orbit count (q^{m-1}-1)/(q^2-1)",
                  full_count == (qm1 - 1) / (qq * qq - 1) && deficient_count == 0);
        } else {
            check("even m: full orbit count q(q^{m-2}-1)/(q^2-1) plus one deficient",
                  full_count == qq * (qm2 - 1) / (qq * qq - 1) && deficient_count == 1);
        }
        std::uint64_t total = 0;
        for (const auto& o : b.orbits) total += o.size();
        check("orbits partition the Grassmannian", total == grassmannian_size(F.q(), F.m()));
    }

    // projected dimensions
    {
        bool ok = true;
        for (const auto& op : b.plan.orbits)
            ok &= op.oc.dim == orbit_dimension_formula(F.m(), op.oc.d);
        check("projected dimension formula C(m,2) - C(m/d,2)d on every orbit", ok);
    }

    // trace properties (exhaustive on desk-scale fields, sampled otherwise)
    {
        bool fq_ok = true, nondeg_ok = true;
        if (F.size() <= 4096) {
            for (std::uint64_t v = 0; v < F.size(); ++v) {
                Fe a = F.element(v);
                fq_ok &= F.in_base(F.trace(a));
                if (v) {
                    bool hit = false;
                    for (std::uint64_t w = 0; w < F.size() && !hit; ++w)
                        hit = F.trace(F.mul(a, F.element(w))) != Fe{0};
                    nondeg_ok &= hit;
                }
            }
        } else {
            SplitMix64 rng(12345);
            for (int i = 0; i < 256; ++i) {
                Fe a = F.element(rng.below(F.size()));
                fq_ok &= F.in_base(F.trace(a));
            }
        }
        check("trace lands in F_q", fq_ok);
        check("trace pairing is nondegenerate", nondeg_ok);
    }

    // minimum distance
    {
        double logsize = static_cast<double>(b.code.k) * std::log2(static_cast<double>(F.q()));
        if (logsize <= 20.0) {
            check("brute-force minimum distance equals q^{2(m-2)}",
                  brute_force_min_distance(F, b.code) == b.code.d);
        } else {
            out << "skip: minimum distance enumeration (q^k too large)\n";
        }
    }

    // closure arithmetic and decoder construction behavior
    {
        bool expect = b.plan.decodable_orbits > b.plan.radius / (b.plan.per_orbit_t + 1);
        check("closure flag matches the recomputed arithmetic", expect == b.plan.closure_holds);
        bool behaves = true;
        std::vector<Orbit> orbits_copy = b.orbits;
        LinearCode code_copy = b.code;
        try {
            auto ctx = build_decoder(F, std::move(code_copy), std::move(orbits_copy));
            behaves = b.plan.closure_holds;
            if (b.plan.closure_holds) {
                for (std::uint64_t tr = 0; tr < 5 && behaves; ++tr) {
                    auto o = run_trial(F, ctx, 2024, tr, ctx.plan.radius, false);
                    behaves &= o.success;
                }
            }
        } catch (const UnsupportedError&) {
            behaves = !b.plan.closure_holds;
        }
        check(b.plan.closure_holds ? "decoder builds and corrects radius-weight errors"
                                   : "decoder construction refuses (guarantee does not close)",
              behaves);
    }

    return all_ok ? kExitOk : 1;
}

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plane-subspace evaluation codes with an orbit projection decoder"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand name

    std::uint32_t q = 2, m = 4;
    std::uint64_t seed = 0;
    bool json = false, fast = false;
    std::string cache_path;

    app.add_option("--q", q, "subfield order (prime power)")->capture_default_str();
    app.add_option("--m", m, "extension degree")->capture_default_str();
    app.add_option("--seed", seed, "64-bit seed for all randomness")->capture_default_str();
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--cache", cache_path, "code cache file (read if present, written by `build`)");
    app.add_flag("--fast", fast, "stop decoding at the first candidate inside the radius");

    auto* sub_params = app.add_subcommand("params", "print code and decoder parameters");
    auto* sub_build = app.add_subcommand("build", "build the code and write the cache file");
    auto* sub_orbits = app.add_subcommand("orbits", "print the orbit table");
    auto* sub_encode = app.add_subcommand("encode", "encode a message digit string");
    auto* sub_corrupt = app.add_subcommand("corrupt", "add a seeded error of given weight");
    auto* sub_decode = app.add_subcommand("decode", "decode a received word");
    auto* sub_simulate = app.add_subcommand("simulate", "run seeded decoding trials, emit CSV");
    auto* sub_selftest = app.add_subcommand("selftest", "run structural assertions for (q, m)");

    std::string in_path, out_path, diag_path;
    std::size_t weight = 0;
    std::uint64_t trials = 100;
    unsigned threads = 1;
    for (auto* s : {sub_encode, sub_corrupt, sub_decode}) {
        s->add_option("--in", in_path, "input file ('-' or omit for stdin)");
        s->add_option("--out", out_path, "output file ('-' or omit for stdout)");
    }
    sub_corrupt->add_option("--weight", weight, "error weight")->required();
    sub_decode->add_option("--diag", diag_path, "write decode diagnostics JSON here");
    sub_simulate->add_option("--trials", trials, "number of trials")->capture_default_str();
    sub_simulate->add_option("--weight", weight, "error weight per trial")->required();
    sub_simulate->add_option("--threads", threads, "worker threads (results are thread-count invariant)")
        ->capture_default_str();
    sub_simulate->add_option("--out", out_path, "CSV output file ('-' or omit for stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }

    try {
        Built b = build_all(q, m, cache_path);
        if (sub_params->parsed()) return cmd_params(b, json, out);
        if (sub_orbits->parsed()) return cmd_orbits(b, json, out);
        if (sub_build->parsed()) {
            if (cache_path.empty()) throw FormatError("build requires --cache <path>");
            return cmd_build(b, cache_path, out);
        }
        if (sub_encode->parsed()) return cmd_encode(b, in_path, out_path, in, out);
        if (sub_corrupt->parsed()) return cmd_corrupt(b, seed, weight, in_path, out_path, in, out);
        if (sub_decode->parsed()) return cmd_decode(b, in_path, out_path, diag_path, fast, in, out, err);
        if (sub_simulate->parsed())
            return cmd_simulate(b, seed, trials, weight, threads, fast, out_path, out, err);
        if (sub_selftest->parsed()) return cmd_selftest(b, out);
        err << "error: no command\n";
        return kExitUnsupported;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace grasscode::cli
