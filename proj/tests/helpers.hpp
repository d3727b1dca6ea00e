#pragma once

// Shared fixtures for the unit and acceptance suites: small table
// builders, deterministic spec drawing, independent mini-oracles, and a
// subprocess runner for the CLI binary (path injected via MBMOD_CLI_PATH).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <unistd.h>
#include <vector>

#include "mbmod/decompose.hpp"
#include "mbmod/gen.hpp"
#include "mbmod/io.hpp"

namespace mbt {

using namespace mbmod;

struct RatEntry {
    Index i, j, k;
    long long num;
    long long den = 1;
};

inline ActionTable rat_table(std::size_t v, std::size_t w, const std::vector<RatEntry>& raw,
                             std::optional<std::vector<std::string>> v_labels = std::nullopt,
                             std::optional<std::vector<std::string>> w_labels = std::nullopt) {
    std::vector<Entry> es;
    es.reserve(raw.size());
    for (const RatEntry& r : raw)
        es.push_back({r.i, r.j, r.k, Scalar::from_fraction(r.num, r.den)});
    return build_table(std::move(es), v, w, FieldSpec::rationals(), std::move(v_labels),
                       std::move(w_labels));
}

struct GfEntry {
    Index i, j, k;
    std::uint64_t c;
};

inline ActionTable gf_table(std::uint64_t p, std::size_t v, std::size_t w,
                            const std::vector<GfEntry>& raw) {
    FieldSpec fs = FieldSpec::gf(p);
    std::vector<Entry> es;
    es.reserve(raw.size());
    for (const GfEntry& r : raw)
        es.push_back({r.i, r.j, r.k, Scalar::parse(std::to_string(r.c), fs)});
    return build_table(std::move(es), v, w, fs);
}

/// The running example: v_0 w_0 = v_1 and v_2 w_0 = v_2 over the rationals.
inline ActionTable e1() { return rat_table(3, 1, {{0, 0, 1, 1}, {2, 0, 2, 1}}); }

/// Two-column, four-index instance whose chain 0 -> 1 -> 2 leaves 3 isolated
/// apart from its self-loop.
inline ActionTable chain4() {
    return rat_table(4, 2, {{0, 0, 1, 1}, {1, 1, 2, 1}, {3, 0, 3, 1}});
}

/// Deterministic spec stream for property sweeps.
inline GenSpec draw_spec(SplitMix64& meta, std::size_t v_max, std::size_t w_max,
                         std::initializer_list<double> densities, bool star_mult = false,
                         bool mix_fields = true) {
    GenSpec s;
    s.v_size = 1 + meta.below(v_max);
    s.w_size = 1 + meta.below(w_max);
    s.density = densities.begin()[meta.below(densities.size())];
    s.seed = meta.next();
    s.star_multiplicative = star_mult;
    if (mix_fields && meta.below(4) == 0) s.field = FieldSpec::gf(10007);
    return s;
}

/// Least closed superset by powerset intersection -- an implementation
/// independent of the worklist in forward_closure.  v_size <= 16 only.
/// Closed sets are intersection-stable and the full set is closed, so the
/// least closed superset is the AND over all closed supersets.
inline IndexSet powerset_closure(const ActionTable& t, const IndexSet& seed) {
    const std::size_t n = t.v_size();
    if (n > 16) throw std::runtime_error("powerset_closure is a small-instance helper");
    std::uint32_t seed_mask = 0;
    for (Index s : seed) seed_mask |= 1u << s;
    std::uint32_t best = (1u << n) - 1;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if ((m & seed_mask) != seed_mask) continue;
        IndexSet s;
        for (std::size_t b = 0; b < n; ++b)
            if (m & (1u << b)) s.push_back(static_cast<Index>(b));
        if (is_closed_subset(t, s)) best &= m;
    }
    IndexSet out;
    for (std::size_t b = 0; b < n; ++b)
        if (best & (1u << b)) out.push_back(static_cast<Index>(b));
    return out;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline const std::string& scratch_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/mbmod-tests-XXXXXX";
        if (!mkdtemp(tmpl)) throw std::runtime_error("mkdtemp failed");
        return std::string(tmpl);
    }();
    return dir;
}

inline std::string scratch_path(const std::string& name) {
    static int serial = 0;
    return scratch_dir() + "/" + std::to_string(serial++) + "-" + name;
}

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s)
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    return q + "'";
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs the built CLI with the given arguments; env_prefix can inject
/// e.g. "MBMOD_THREADS=2".
inline CliResult run_cli(const std::vector<std::string>& args,
                         const std::string& env_prefix = std::string()) {
    std::string out = scratch_path("stdout");
    std::string err = scratch_path("stderr");
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += shell_quote(MBMOD_CLI_PATH);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out) + " 2> " + shell_quote(err);
    int status = std::system(cmd.c_str());
    if (status < 0) throw std::runtime_error("system() failed");
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace mbt
