// Command-line front end: reads a JSON run configuration, executes one of the
// audit/verdict commands, writes a machine report (JSON) to stdout or --out
// and a one-line human summary to stderr.
//
// Exit codes: 0 all checks pass, 1 violation found, 2 invalid configuration.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "nonarch/json_io.hpp"
#include "nonarch/pingpong.hpp"
#include "nonarch/words.hpp"

using namespace nonarch;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    std::string field_kind = "padic";  // padic | function | trivial
    long long p = 2;                   // prime (padic) or coefficient characteristic (function)
    long long characteristic = 0;      // field characteristic (trivial case)
    bool locally_finite = false;
    std::size_t n = 2;
    std::optional<NormSpec> norm = NormSpec::max();
    std::optional<TrivialNormDesc> trivial;
    long long s = 1, t = 2;
    std::optional<Rat> eps;  // defaults depend on the field kind
    std::size_t depth = 8;
    std::size_t pair_depth = 4;
    long long grid_degree = 1;
    long long grid_coeff = 1;
    std::size_t grid_budget = 3000;
    std::size_t grid_random = 10000;
    std::size_t samples = 100;  // isometry audit: elements and vectors per run
    std::optional<std::uint64_t> seed;
    std::vector<std::string> base{"1", "0"};
    std::string fixture;

    Rat eps_or_default() const {
        if (eps) return *eps;
        return field_kind == "padic" ? Rat(1, rat_num(Rat(p))) : Rat(1);
    }
};

RunConfig load_config(const std::string& path) {
    RunConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    Json j = Json::parse(in);
    if (j.contains("field")) {
        const auto& f = j["field"];
        cfg.field_kind = f.value("kind", cfg.field_kind);
        cfg.p = f.value("p", cfg.p);
        cfg.characteristic = f.value("characteristic", cfg.characteristic);
        cfg.locally_finite = f.value("locally_finite", cfg.locally_finite);
    }
    cfg.n = j.value("n", cfg.n);
    if (j.contains("norm")) cfg.norm = norm_spec_from_json(j["norm"]);
    if (j.contains("trivial_norm")) {
        TrivialNormDesc d;
        for (const auto& v : j["trivial_norm"].at("values"))
            d.values.push_back(parse_rat(v.get<std::string>()));
        for (const auto& v : j["trivial_norm"].at("dims")) d.dims.push_back(v.get<std::size_t>());
        cfg.trivial = d;
        cfg.norm.reset();
    }
    if (j.contains("construction")) {
        const auto& c = j["construction"];
        cfg.s = c.value("s", cfg.s);
        cfg.t = c.value("t", cfg.t);
        if (c.contains("eps")) cfg.eps = parse_rat(c["eps"].get<std::string>());
    }
    cfg.depth = j.value("depth", cfg.depth);
    cfg.pair_depth = j.value("pair_depth", cfg.pair_depth);
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.grid_degree = g.value("degree", cfg.grid_degree);
        cfg.grid_coeff = g.value("coeff_range", cfg.grid_coeff);
        cfg.grid_budget = g.value("budget", cfg.grid_budget);
        cfg.grid_random = g.value("random", cfg.grid_random);
    }
    cfg.samples = j.value("samples", cfg.samples);
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("base")) {
        cfg.base.clear();
        for (const auto& v : j["base"]) cfg.base.push_back(v.get<std::string>());
    }
    return cfg;
}

Json resolved_config_json(const RunConfig& cfg) {
    Json j;
    j["field"] = {{"kind", cfg.field_kind},
                  {"p", cfg.p},
                  {"characteristic", cfg.characteristic},
                  {"locally_finite", cfg.locally_finite}};
    j["n"] = cfg.n;
    if (cfg.norm) j["norm"] = json_of(*cfg.norm);
    if (cfg.trivial) {
        Json t;
        t["values"] = Json::array();
        for (const auto& v : cfg.trivial->values) t["values"].push_back(format_rat(v));
        t["dims"] = cfg.trivial->dims;
        j["trivial_norm"] = t;
    }
    j["construction"] = {{"s", cfg.s}, {"t", cfg.t}, {"eps", format_rat(cfg.eps_or_default())}};
    j["depth"] = cfg.depth;
    j["pair_depth"] = cfg.pair_depth;
    j["grid"] = {{"degree", cfg.grid_degree},
                 {"coeff_range", cfg.grid_coeff},
                 {"budget", cfg.grid_budget},
                 {"random", cfg.grid_random}};
    j["samples"] = cfg.samples;
    if (cfg.seed) j["seed"] = *cfg.seed;
    j["base"] = cfg.base;
    if (!cfg.fixture.empty()) j["fixture"] = cfg.fixture;
    return j;
}

struct Outcome {
    int exit_code = 0;
    Json body;          // command-specific payload
    std::string summary;
};

void require_seed(const RunConfig& cfg) {
    if (!cfg.seed) throw PreconditionViolated("randomized sampling requires an explicit --seed");
}

std::string summary_of(const AuditReport& rep) {
    std::ostringstream os;
    os << rep.name << ": checked " << rep.checked << ", violations " << rep.violations.size()
       << (rep.ok() ? " -> PASS" : " -> FAIL");
    return os.str();
}

Outcome from_report(const AuditReport& rep) {
    Outcome out;
    out.body["report"] = json_of(rep);
    out.exit_code = rep.ok() ? 0 : 1;
    out.summary = summary_of(rep);
    return out;
}

GeneratorCertificate<PAdicCtx> magnus_cert(const RunConfig& cfg) {
    if (cfg.field_kind != "padic")
        throw UnsupportedDescriptor("this command needs a p-adic field configuration");
    PAdicCtx ctx{Int(cfg.p)};
    return build_magnus(ctx, cfg.s, cfg.t, cfg.eps_or_default());
}

// equal-char certificate with optional fixture mutations applied
template <class Base>
GeneratorCertificate<FuncCtx<Base>> equal_char_cert(const FuncCtx<Base>& ctx,
                                                    const RunConfig& cfg) {
    auto cert = build_equal_char(ctx, cfg.eps_or_default());
    if (cfg.fixture == "mutated-tau") {
        auto t2 = ctx.var() * ctx.var();
        cert.h->tau[0] = ctx.zero() - t2;
        (*cert.aux)[4] = ctx.zero() - t2;
        cert.b = compose(compose(*cert.h, cert.a), inverse(ctx, *cert.h));
    } else if (cfg.fixture == "lambda-one") {
        (*cert.aux)[6] = ctx.one();
    } else if (!cfg.fixture.empty() && cfg.fixture != "degenerate-pair") {
        throw UnsupportedDescriptor("unknown fixture: " + cfg.fixture);
    }
    return cert;
}

template <class Fn>
Outcome with_function_field(const RunConfig& cfg, Fn&& fn) {
    if (cfg.field_kind != "function")
        throw UnsupportedDescriptor("this command needs a function-field configuration");
    if (cfg.p == 0) {
        FuncQCtx ctx(FFValuation::TAdic);
        return fn(ctx);
    }
    FuncFpCtx ctx(FFValuation::TAdic, cfg.p);
    return fn(ctx);
}

Outcome cmd_verdict(const RunConfig& cfg) {
    FieldDescriptor field;
    if (cfg.field_kind == "padic")
        field.kind = FieldDescriptor::Kind::PAdicRationals;
    else if (cfg.field_kind == "function")
        field.kind = FieldDescriptor::Kind::FunctionFieldTAdic;
    else if (cfg.field_kind == "trivial")
        field.kind = FieldDescriptor::Kind::TriviallyValued;
    else
        throw UnsupportedDescriptor("unknown field kind: " + cfg.field_kind);
    field.p = cfg.p;
    field.characteristic = cfg.characteristic;
    field.locally_finite = cfg.locally_finite;

    Verdict v = verdict(field, cfg.n, cfg.norm, cfg.trivial);
    Outcome out;
    out.body["result"] = json_of(v);
    if (v.paradoxical) {
        if (v.construction == Construction::MagnusDifferentChar && cfg.field_kind == "padic")
            out.body["certificate"] = json_of_cert(magnus_cert(cfg));
        else if (v.construction == Construction::EqualChar && cfg.field_kind == "function") {
            auto inner = with_function_field(cfg, [&](const auto& ctx) {
                Outcome o;
                o.body = json_of_cert(equal_char_cert(ctx, cfg));
                return o;
            });
            out.body["certificate"] = inner.body;
        }
    }
    out.summary = std::string("verdict: ") + out.body["result"]["verdict"].get<std::string>();
    return out;
}

Outcome cmd_audit_pingpong(const RunConfig& cfg) {
    if (cfg.grid_random > 0) require_seed(cfg);
    return with_function_field(cfg, [&](const auto& ctx) {
        auto cert = equal_char_cert(ctx, cfg);
        auto rep = verify_aux_conditions(cert);
        if (rep.ok()) {
            auto cfg_pp = make_pingpong(cert);
            auto grid = default_grid(ctx, cfg.grid_degree, cfg.grid_coeff, cfg.grid_budget,
                                     cfg.grid_random, cfg.seed.value_or(0));
            auto pp = pingpong_audit(cfg_pp, grid);
            rep.merge(pp);
            rep.name = "pingpong";
            rep.checked = pp.checked + 10;
        }
        auto out = from_report(rep);
        out.body["certificate"] = json_of_cert(cert);
        return out;
    });
}

Outcome cmd_audit_freeness(const RunConfig& cfg) {
    auto run = [&](const auto& ctx, const auto& a, const auto& b) {
        auto offenders = relation_audit(ctx, a, b, cfg.depth);
        AuditReport rep;
        rep.name = "freeness";
        rep.checked = enumerate_words(cfg.depth).size() - 1;
        for (const auto& w : offenders) rep.flag("nontrivial relation", word_str(w));
        return from_report(rep);
    };
    if (cfg.field_kind == "padic") {
        auto cert = magnus_cert(cfg);
        auto b = cfg.fixture == "degenerate-pair" ? cert.a : cert.b;
        return run(cert.ctx, cert.a, b);
    }
    return with_function_field(cfg, [&](const auto& ctx) {
        auto cert = equal_char_cert(ctx, cfg);
        auto b = cfg.fixture == "degenerate-pair" ? cert.a : cert.b;
        return run(ctx, cert.a, b);
    });
}

Outcome cmd_audit_nonparabolic(const RunConfig& cfg) {
    return from_report(nonparabolic_audit(magnus_cert(cfg), cfg.depth));
}

Outcome cmd_audit_localcomm(const RunConfig& cfg) {
    if (cfg.field_kind == "padic") {
        auto cert = magnus_cert(cfg);
        return from_report(local_commutativity_audit(cert.ctx, cert.a, cert.b, cfg.pair_depth));
    }
    return with_function_field(cfg, [&](const auto& ctx) {
        auto cert = equal_char_cert(ctx, cfg);
        return from_report(local_commutativity_audit(ctx, cert.a, cert.b, cfg.pair_depth));
    });
}

Outcome cmd_audit_paradox_words(const RunConfig& cfg) {
    auto rep = verify_group_paradox(cfg.depth);
    auto out = from_report(rep);
    out.body["counts"] = {{"words", rep.checked}, {"violations", rep.violations.size()}};
    return out;
}

Outcome cmd_audit_orbit(const RunConfig& cfg) {
    auto run = [&](const auto& ctx, const auto& a, const auto& b) {
        using Elem = std::decay_t<decltype(ctx.one())>;
        Vec<Elem> base;
        for (const auto& s : cfg.base) base.push_back(parse_elem(ctx, s));
        if (base.size() != 2) throw UnsupportedDescriptor("orbit base point must have 2 entries");
        try {
            auto orb = build_orbit_decomposition(ctx, a, b, base, cfg.depth);
            auto out = from_report(orb.report);
            out.body["injectivity_ok"] = orb.injectivity_ok;
            out.body["orbit_size"] = orb.assignment.size();
            if (!orb.injectivity_ok) out.exit_code = 1;
            return out;
        } catch (const StabilizedBasePoint& e) {
            AuditReport rep;
            rep.name = "orbit-decomposition";
            rep.flag("stabilized base point", e.word);
            auto out = from_report(rep);
            out.body["stabilizing_word"] = e.word;
            return out;
        }
    };
    if (cfg.field_kind == "padic") {
        auto cert = magnus_cert(cfg);
        return run(cert.ctx, cert.a, cert.b);
    }
    return with_function_field(cfg, [&](const auto& ctx) {
        auto cert = equal_char_cert(ctx, cfg);
        return run(ctx, cert.a, cert.b);
    });
}

Outcome cmd_audit_isometry(const RunConfig& cfg) {
    require_seed(cfg);
    if (!cfg.norm) throw UnsupportedDescriptor("isometry audit needs a norm spec");
    auto cert = magnus_cert(cfg);
    const PAdicCtx& ctx = cert.ctx;
    const Rat eps = isometry_epsilon(*cfg.norm);

    std::mt19937_64 rng(*cfg.seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<long long> coord(-10000, 10000);
    auto gens = generator_table(ctx, cert.a, cert.b);

    std::vector<Vec<Rat>> samples;
    for (std::size_t i = 0; i < cfg.samples; ++i)
        samples.push_back({Rat(coord(rng)), Rat(coord(rng))});

    AuditReport rep;
    rep.name = "isometry";
    rep.checked = 0;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto g = identity_map(ctx, 2);
        std::size_t k = len(rng);
        for (std::size_t j = 0; j < k; ++j) g = compose(g, gens[pick(rng)]);
        rep.merge(isometry_audit(ctx, *cfg.norm, g.L, samples));
    }
    auto out = from_report(rep);
    out.body["epsilon"] = format_rat(eps);
    return out;
}

Outcome cmd_fixed_points(const RunConfig& cfg) {
    auto cert = magnus_cert(cfg);
    const PAdicCtx& ctx = cert.ctx;
    Outcome out;
    auto emit = [&](const char* name, const AffineMap<Rat>& g) {
        auto f = fixed_point(ctx, g);
        if (f) {
            Json arr = Json::array();
            for (const auto& c : *f) arr.push_back(format_rat(c));
            out.body[name] = arr;
        } else {
            out.body[name] = nullptr;
        }
    };
    emit("fix_a", cert.a);
    emit("fix_b", cert.b);
    out.summary = "fixed-points: " + out.body.dump();
    return out;
}

int run(const std::string& command, const RunConfig& cfg, const std::string& out_path) {
    Outcome out;
    try {
        if (command == "verdict") out = cmd_verdict(cfg);
        else if (command == "audit-pingpong") out = cmd_audit_pingpong(cfg);
        else if (command == "audit-freeness") out = cmd_audit_freeness(cfg);
        else if (command == "audit-nonparabolic") out = cmd_audit_nonparabolic(cfg);
        else if (command == "audit-localcomm") out = cmd_audit_localcomm(cfg);
        else if (command == "audit-paradox-words") out = cmd_audit_paradox_words(cfg);
        else if (command == "audit-orbit") out = cmd_audit_orbit(cfg);
        else if (command == "audit-isometry") out = cmd_audit_isometry(cfg);
        else if (command == "fixed-points") out = cmd_fixed_points(cfg);
        else throw UnsupportedDescriptor("unknown command: " + command);
    } catch (const std::exception& e) {
        Json err;
        err["command"] = command;
        err["version"] = kVersion;
        err["error"] = e.what();
        err["exit"] = 2;
        std::cout << err.dump(2) << "\n";
        std::cerr << command << ": invalid configuration: " << e.what() << "\n";
        return 2;
    }

    Json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["config"] = resolved_config_json(cfg);
    for (auto& [key, value] : out.body.items()) report[key] = value;
    report["exit"] = out.exit_code;

    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    if (out.summary.empty()) out.summary = command + ": done";
    std::cerr << out.summary << "\n";
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Audits for four-piece paradoxical decompositions of non-Archimedean "
                 "normed affine spaces"};
    app.require_subcommand(1);

    std::string config_path, out_path, fixture;
    std::optional<std::size_t> depth;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "JSON run configuration file");
    app.add_option("--depth", depth, "override the audit word depth");
    app.add_option("--seed", seed, "seed for randomized sampling");
    app.add_option("--out", out_path, "write the JSON report to this path instead of stdout");
    app.add_option("--fixture", fixture,
                   "negative-control fixture: mutated-tau, lambda-one, degenerate-pair");

    const char* commands[] = {"verdict",         "audit-pingpong", "audit-freeness",
                              "audit-nonparabolic", "audit-localcomm", "audit-paradox-words",
                              "audit-orbit",     "audit-isometry", "fixed-points"};
    for (const char* c : commands) app.add_subcommand(c)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    RunConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    }
    if (depth) cfg.depth = *depth;
    if (seed) cfg.seed = *seed;
    if (!fixture.empty()) cfg.fixture = fixture;

    return run(app.get_subcommands().front()->get_name(), cfg, out_path);
}
