#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mbmod/decompose.hpp"
#include "mbmod/error.hpp"
#include "mbmod/gen.hpp"
#include "mbmod/io.hpp"
#include "mbmod/minimal.hpp"
#include "mbmod/oracle.hpp"

namespace {

using namespace mbmod;

void report(const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
}

// Exit contract: 0 success, 1 invalid instance, 2 query/size/usage, 3 I/O.
int load_failure_code(const Error& e) { return e.code() == errc::io_error ? 3 : 1; }
int query_failure_code(const Error& e) { return e.code() == errc::io_error ? 3 : 2; }

std::string render_v(const ActionTable& t, Index i) {
    return t.v_labels() ? (*t.v_labels())[i] : std::to_string(i);
}

std::string render_wlabel(const ActionTable& t, WLabel x) {
    std::string s = t.w_labels() ? (*t.w_labels())[x.j] : "w" + std::to_string(x.j);
    return x.barred ? s + "~" : s;
}

std::string render_steps(const ActionTable& t, const std::vector<WLabel>& steps) {
    if (steps.empty()) return "(empty)";
    std::string out;
    for (const WLabel& x : steps) {
        if (!out.empty()) out += ' ';
        out += render_wlabel(t, x);
    }
    return out;
}

std::string summary_line(const ActionTable& t) {
    std::ostringstream os;
    os << t.v_size() << "×" << t.w_size() << ", " << t.entries().size() << " entries, "
       << t.field().str();
    return os.str();
}

/// Loads the instance (failures: invalid file 1, unreadable 3), then runs
/// the command body (failures: query errors 2, output I/O 3).
template <typename Fn>
int with_instance(const std::string& path, Fn&& body) {
    std::optional<ActionTable> t;
    try {
        t.emplace(load_instance(path));
    } catch (const Error& e) {
        report(e);
        return load_failure_code(e);
    }
    try {
        return body(*t);
    } catch (const Error& e) {
        report(e);
        return query_failure_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

void guard_oracle_size(const ActionTable& t, std::size_t v_cap, std::size_t w_cap) {
    if (t.v_size() > v_cap || (w_cap && t.w_size() > w_cap))
        fail(errc::size_limit_exceeded,
             "--oracle is limited to v_size <= " + std::to_string(v_cap) +
                 (w_cap ? " and w_size <= " + std::to_string(w_cap) : std::string()) +
                 "; this instance is " + std::to_string(t.v_size()) + "×" +
                 std::to_string(t.w_size()));
}

int cmd_validate(const std::string& path) {
    try {
        ActionTable t = load_instance(path);
        std::cout << "ok: " << summary_line(t) << "\n";
        return 0;
    } catch (const Error& e) {
        report(e);
        return load_failure_code(e);
    }
}

int cmd_decompose(const std::string& path, const std::string& format, bool oracle) {
    return with_instance(path, [&](const ActionTable& t) {
        std::vector<ComponentModule> parts = decompose(t);
        bool agree = true;
        if (oracle) {
            guard_oracle_size(t, 12, 6);
            Decomposition fast = components(t);
            agree = oracle_components(t) == fast;
        }
        if (format == "json") {
            nlohmann::json blocks = nlohmann::json::array();
            for (const ComponentModule& p : parts)
                blocks.push_back({{"entries", p.entry_count()},
                                  {"members", p.component()},
                                  {"representative", p.component().front()}});
            nlohmann::json j{{"blocks", std::move(blocks)}, {"components", parts.size()}};
            if (oracle) j["oracle_agreement"] = agree;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "components: " << parts.size() << "\n";
            for (std::size_t b = 0; b < parts.size(); ++b) {
                const ComponentModule& p = parts[b];
                std::cout << "block " << b << ": representative "
                          << render_v(t, p.component().front()) << ", size "
                          << p.component().size() << ", entries " << p.entry_count()
                          << ", members";
                for (Index m : p.component()) std::cout << ' ' << render_v(t, m);
                std::cout << "\n";
            }
            if (oracle) std::cout << "oracle agreement: " << (agree ? "true" : "false") << "\n";
        }
        return agree ? 0 : 2;
    });
}

int cmd_witness(const std::string& path, const std::string& from, const std::string& to) {
    return with_instance(path, [&](const ActionTable& t) {
        Index a = resolve_v_index(t, from);
        Index b = resolve_v_index(t, to);
        std::optional<ConnectionWitness> w = find_witness(t, a, b);
        if (!w)
            fail(errc::not_connected,
                 render_v(t, a) + " and " + render_v(t, b) + " lie in different components");
        ConnectionWitness rev = reverse_witness(*w);
        if (!verify_witness(t, *w) || !verify_witness(t, rev))
            fail(errc::unsatisfiable, "internal: produced witness failed verification");
        std::cout << "witness " << render_v(t, a) << " -> " << render_v(t, b) << ": "
                  << render_steps(t, w->steps) << "\n";
        std::cout << "reverse " << render_v(t, b) << " -> " << render_v(t, a) << ": "
                  << render_steps(t, rev.steps) << "\n";
        return 0;
    });
}

int cmd_minimal(const std::string& path, bool oracle) {
    return with_instance(path, [&](const ActionTable& t) {
        MinimalityReport rep = is_minimal(t);
        std::cout << "minimal: " << (rep.minimal ? "true" : "false") << "\n";
        std::cout << "method: "
                  << (rep.method == MinimalityMethod::star_mult_shortcut
                          ? "star-multiplicative shortcut"
                          : "closure scan")
                  << "\n";
        if (oracle) {
            guard_oracle_size(t, 12, 0);
            bool agree = minimal_closed_subsets(t) == oracle_minimal_closed(t);
            std::cout << "oracle agreement: " << (agree ? "true" : "false") << "\n";
            if (!agree) return 2;
        }
        return 0;
    });
}

int cmd_check_star(const std::string& path) {
    return with_instance(path, [&](const ActionTable& t) {
        StarMultReport rep = check_star_multiplicative(t);
        std::cout << "star-multiplicative: " << (rep.holds ? "true" : "false") << "\n";
        std::cout << "violations: " << rep.violations.size() << "\n";
        for (const StarMultViolation& v : rep.violations)
            std::cout << "violation: a=" << render_v(t, v.a) << ", b=" << render_v(t, v.b)
                      << ", x=" << render_wlabel(t, v.x) << "\n";
        return 0;
    });
}

int cmd_closure(const std::string& path, const std::string& seed_csv) {
    return with_instance(path, [&](const ActionTable& t) {
        IndexSet seed;
        std::stringstream ss(seed_csv);
        std::string token;
        while (std::getline(ss, token, ','))
            if (!token.empty()) seed.push_back(resolve_v_index(t, token));
        ClosureReport rep = forward_closure(t, seed);
        std::cout << "seed:";
        for (Index s : rep.seed) std::cout << ' ' << render_v(t, s);
        std::cout << "\nclosure:";
        for (Index m : rep.closure) std::cout << ' ' << render_v(t, m);
        std::cout << "\nsize: " << rep.closure.size() << "\n";
        return 0;
    });
}

struct GenerateArgs {
    std::uint64_t v = 0, w = 0;
    double density = 0.0;
    std::uint64_t seed = 0;
    std::string field = "rational";
    std::int64_t target = -1;
    bool star_mult = false;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    try {
        GenSpec spec;
        spec.v_size = args.v;
        spec.w_size = args.w;
        spec.density = args.density;
        spec.seed = args.seed;
        if (args.field == "rational") {
            spec.field = FieldSpec::rationals();
        } else if (args.field.rfind("gf:", 0) == 0) {
            spec.field = FieldSpec::gf(std::stoull(args.field.substr(3)));
        } else {
            fail(errc::parse_error, "--field must be \"rational\" or \"gf:<prime>\"");
        }
        if (args.target >= 0) spec.target_components = static_cast<std::size_t>(args.target);
        spec.star_multiplicative = args.star_mult;

        ActionTable t = generate(spec);
        save_instance(args.out, t);
        std::cout << "generated: " << summary_line(t) << "\n";
        std::cout << "wrote: " << args.out << "\n";
        return 0;
    } catch (const Error& e) {
        report(e);
        return query_failure_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mbmod: connection components, closures, and minimality of sparse "
                 "multiplicative action tables"};
    app.require_subcommand(1);

    std::string path, format = "text", from, to, seed_csv;
    bool oracle = false;
    GenerateArgs gen_args;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate an instance file");
    validate->add_option("path", path, "instance file")->required();

    CLI::App* decomp = app.add_subcommand("decompose", "split into connection components");
    decomp->add_option("path", path, "instance file")->required();
    decomp->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    decomp->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

    CLI::App* witness = app.add_subcommand("witness", "find a connection between two indices");
    witness->add_option("path", path, "instance file")->required();
    witness->add_option("--from", from, "source index or label")->required();
    witness->add_option("--to", to, "target index or label")->required();

    CLI::App* minimal = app.add_subcommand("minimal", "test minimality");
    minimal->add_option("path", path, "instance file")->required();
    minimal->add_flag("--oracle", oracle, "cross-check against the powerset oracle");

    CLI::App* check_star = app.add_subcommand("check-star", "check star-multiplicativity");
    check_star->add_option("path", path, "instance file")->required();

    CLI::App* closure = app.add_subcommand("closure", "forward closure of a seed set");
    closure->add_option("path", path, "instance file")->required();
    closure->add_option("--seed-set", seed_csv, "comma-separated indices or labels")->required();

    CLI::App* generate = app.add_subcommand("generate", "write a pseudo-random instance");
    generate->add_option("--v", gen_args.v, "V-basis size")->required();
    generate->add_option("--w", gen_args.w, "W-basis size")->required();
    generate->add_option("--density", gen_args.density, "pair fill probability in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen_args.seed, "64-bit seed");
    generate->add_option("--field", gen_args.field, "rational (default) or gf:<prime>");
    generate->add_option("--target-components", gen_args.target, "exact component count");
    generate->add_flag("--star-multiplicative", gen_args.star_mult,
                       "symmetrize the result into a star-multiplicative table");
    generate->add_option("--out", gen_args.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are query-class failures
    }

    if (app.got_subcommand(validate)) return cmd_validate(path);
    if (app.got_subcommand(decomp)) return cmd_decompose(path, format, oracle);
    if (app.got_subcommand(witness)) return cmd_witness(path, from, to);
    if (app.got_subcommand(minimal)) return cmd_minimal(path, oracle);
    if (app.got_subcommand(check_star)) return cmd_check_star(path);
    if (app.got_subcommand(closure)) return cmd_closure(path, seed_csv);
    if (app.got_subcommand(generate)) return cmd_generate(gen_args);
    return 2;
}
