// ellcob: exact Chern-number / elliptic-genus calculator.
//
// Commands: variety, genus, sn, generators, flop, adams, koszul, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal/calibration defect.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ellcob/adams.hpp"
#include "ellcob/flops.hpp"
#include "ellcob/genus.hpp"
#include "ellcob/lazard.hpp"
#include "ellcob/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ellcob;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int N = 12;                           // series truncation order
    std::vector<long> primes = {3, 5, 7};  // l values for adams commands
    long p = 1;                            // exponential characteristic
    unsigned seed = 20260826;
    std::string cache_dir;  // default from ELLCOB_CACHE_DIR
    std::string format = "text";
};

void apply_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config file not readable: " + path);
    json j = json::parse(in);
    if (j.contains("N")) cfg.N = j["N"].get<int>();
    if (j.contains("primes")) cfg.primes = j["primes"].get<std::vector<long>>();
    if (j.contains("p")) cfg.p = j["p"].get<long>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
    if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

void validate_config(const Config& cfg) {
    if (cfg.N < 4) throw UsageError("config: N must be >= 4");
    if (cfg.format != "text" && cfg.format != "json")
        throw UsageError("config: format must be text or json");
    for (long l : cfg.primes) {
        if (l < 3 || l % 2 == 0) throw UsageError("config: primes must be odd primes");
        for (long d = 3; d * d <= l; d += 2)
            if (l % d == 0) throw UsageError("config: primes must be odd primes");
        if (l == cfg.p) throw UsageError("config: l must differ from p");
    }
}

// Inline JSON if the argument starts with '{' or '[', else a file path.
json load_json(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open " + arg);
    return json::parse(in);
}

Partition parse_partition(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

Rational parse_rational(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad rational: " + s);
    }
}

VarietyData parse_variety(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw UsageError("variety descriptor needs a \"kind\" field");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "projective_space") {
        int n = j.at("n").get<int>();
        std::string var = j.value("var", std::string("x"));
        return projective_space(n, var);
    }
    if (kind == "multiproj_hypersurface") {
        return multiproj_hypersurface(j.at("n").get<std::vector<int>>(),
                                      j.at("d").get<std::vector<int>>());
    }
    if (kind == "product") {
        const json& factors = j.at("factors");
        if (!factors.is_array() || factors.empty())
            throw UsageError("product needs a nonempty \"factors\" array");
        VarietyData x = parse_variety(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            x = product(x, parse_variety(factors[i]));
        return x;
    }
    if (kind == "projective_bundle") {
        VarietyData base = parse_variety(j.at("base"));
        BundleData v;
        v.rank = j.at("rank").get<int>();
        for (const auto& s : j.at("chern"))
            v.chern.push_back(
                MultiPoly::from_string(base.ring.context(), s.get<std::string>()));
        return projective_bundle(base, v, j.value("zeta", std::string("")));
    }
    throw UsageError("unknown variety kind: " + kind);
}

CobClass parse_cobclass(const json& j) {
    CobClass c;
    int degree = j.at("degree").get<int>();
    for (const auto& [key, val] : j.at("entries").items()) {
        Partition I = parse_partition(key);
        if (I.weight() != degree) throw UsageError("entry " + key + " has wrong weight");
        c.set(degree, I, parse_rational(val.get<std::string>()));
    }
    return c;
}

FlopDatum parse_flop(const json& j) {
    VarietyData z = parse_variety(j.at("base"));
    auto roots = [&](const char* key) {
        const json& arr = j.at(key);
        if (!arr.is_array() || arr.size() != 2)
            throw UsageError(std::string(key) + " must list exactly two roots");
        std::vector<MultiPoly> out;
        for (const auto& s : arr)
            out.push_back(MultiPoly::from_string(z.ring.context(), s.get<std::string>()));
        return out;
    };
    auto a = roots("rootsA"), b = roots("rootsB");
    return make_flop_datum(z, a[0], a[1], b[0], b[1]);
}

GenusSeries build_genus(const Config& cfg, int min_order) {
    return curve_log(krichever_curve(), std::max(cfg.N, min_order), cfg.cache_dir);
}

void emit(const Config& cfg, const json& out) {
    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // Text rendering: stable key order, one "key: value" line per scalar.
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (const auto& [k, v] : node.items())
                    walk(v, prefix.empty() ? k : prefix + "." + k);
            } else if (node.is_array()) {
                for (std::size_t i = 0; i < node.size(); ++i)
                    walk(node[i], prefix + "[" + std::to_string(i) + "]");
            } else {
                std::cout << prefix << ": "
                          << (node.is_string() ? node.get<std::string>() : node.dump())
                          << "\n";
            }
        };
    walk(out, "");
}

json ell_report(const EllElement& e, long p) {
    json out;
    out["value"] = e.value.str();
    out["degree"] = e.degree;
    bool member = image_membership(e, p);
    out["in_image_ring"] = member;
    if (member && !e.value.is_zero()) out["image_ring_form"] = image_ring_form(e);
    return out;
}

int cmd_variety(const Config& cfg, const std::string& desc) {
    VarietyData x = parse_variety(load_json(desc));
    json out;
    out["command"] = "variety";
    out["dimension"] = x.dimension;
    json table = json::object();
    for (const Partition& I : partitions_of(x.dimension))
        table[I.str()] = tangent_chern_number(x, I).str();
    out["tangent_chern_numbers"] = table;
    out["s_n"] = s_n(x).str();
    out["calabi_yau"] = is_calabi_yau(x);
    emit(cfg, out);
    return 0;
}

int cmd_genus(const Config& cfg, const std::string& desc, bool as_class) {
    json j = load_json(desc);
    const bool class_input = as_class || (j.is_object() && j.contains("entries"));
    CobClass c = class_input ? parse_cobclass(j) : CobClass();
    int deg = 0;
    if (class_input) {
        deg = c.components().empty() ? 0 : c.components().rbegin()->first;
    } else {
        deg = parse_variety(j).dimension;
    }
    GenusSeries g = build_genus(cfg, std::max(4, deg));
    EllElement e = class_input ? genus_of_class(c, g)
                               : genus_of_variety(parse_variety(j), g);
    json out = ell_report(e, cfg.p);
    out["command"] = "genus";
    out["convention"] = g.convention;
    emit(cfg, out);
    return 0;
}

int cmd_sn(const Config& cfg, const std::string& desc) {
    VarietyData x = parse_variety(load_json(desc));
    Rational s = s_n(x);
    json out;
    out["command"] = "sn";
    out["n"] = x.dimension;
    out["s_n"] = s.str();
    out["star_condition"] = star_condition(x.dimension, s, cfg.p);
    emit(cfg, out);
    return 0;
}

int cmd_generators(const Config& cfg, int from, int to) {
    if (from < 1 || to < from) throw UsageError("generators: need 1 <= from <= to");
    json out;
    out["command"] = "generators";
    json list = json::array();
    bool all = true;
    for (int n = from; n <= to; ++n) {
        GeneratorReport rep = generator_search(n, cfg.p);
        json r;
        r["degree"] = n;
        r["s_n"] = rep.s.str();
        r["required_form"] = rep.required_form;
        r["passes"] = rep.passes;
        json w = json::array();
        for (const WitnessTerm& t : rep.witness) {
            json wt;
            wt["coeff"] = t.coeff;
            wt["kind"] = t.kind;
            wt["n"] = t.n;
            wt["d"] = t.d;
            w.push_back(wt);
        }
        r["witness"] = w;
        list.push_back(r);
        all = all && rep.passes;
    }
    out["reports"] = list;
    out["all_pass"] = all;
    emit(cfg, out);
    return all ? 0 : 1;
}

int cmd_flop(const Config& cfg, const std::string& desc, int n) {
    FlopDatum f = parse_flop(load_json(desc));
    if (n == 0) n = f.total_dimension();
    json out;
    out["command"] = "flop";
    out["n"] = n;
    out["total_dimension"] = f.total_dimension();
    out["formula"] = s_n_flop_formula(f, n).str();
    out["geometric"] = s_n_flop_geometric(f, n).str();
    GenusSeries g = build_genus(cfg, f.total_dimension());
    EllElement probe = flop_ideal_probe(f, g);
    out["genus_difference"] = probe.value.str();
    emit(cfg, out);
    return 0;
}

int cmd_adams(const Config& cfg, const std::string& theory, long l, int max_weight,
              const std::string& format) {
    Theory th;
    if (theory == "MGL")
        th = Theory::MGL;
    else if (theory == "MSL")
        th = Theory::MSL;
    else
        throw UsageError("adams: theory must be MGL or MSL");
    GeneratorTable t = e2_generators(th, l, max_weight);
    if (format == "tsv") {
        std::cout << "name\ts\tp\tq\tweight\n";
        for (const E2Generator& g : t.generators)
            std::cout << g.name << "\t" << g.bidegree.s << "\t" << g.bidegree.p << "\t"
                      << g.bidegree.q << "\t" << g.weight << "\n";
        return 0;
    }
    json out;
    out["command"] = "adams";
    out["theory"] = theory;
    out["l"] = l;
    out["max_weight"] = max_weight;
    json gens = json::array();
    for (const E2Generator& g : t.generators) {
        json e;
        e["name"] = g.name;
        e["bidegree"] = {g.bidegree.s, g.bidegree.p, g.bidegree.q};
        e["weight"] = g.weight;
        gens.push_back(e);
    }
    out["generators"] = gens;
    json counts = json::object();
    for (int u = 0; u <= max_weight; ++u)
        counts[std::to_string(u)] = poincare_count(t, u);
    out["poincare_counts"] = counts;
    emit(cfg, out);
    return 0;
}

int cmd_koszul(const Config& cfg, long l, int m, int max_s, int max_u) {
    KoszulComplex k{l, m, max_s, max_u};
    auto dims = koszul_ext_dims(k);
    json out;
    out["command"] = "koszul";
    out["l"] = l;
    out["m"] = m;
    json entries = json::array();
    for (const auto& [bd, n] : dims) {
        json e;
        e["s"] = bd.s;
        e["p"] = bd.p;
        e["q"] = bd.q;
        e["dim"] = n;
        entries.push_back(e);
    }
    out["entries"] = entries;
    emit(cfg, out);
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
    std::vector<verify::CheckResult> results;
    auto need_genus = [&](int order) { return build_genus(cfg, order); };
    if (suite == "genus-anchors") {
        results.push_back(verify::genus_anchors(need_genus(4)));
    } else if (suite == "star") {
        results.push_back(verify::star_values(cfg.p));
    } else if (suite == "flops") {
        auto data = verify::flop_test_data(cfg.seed, 20);
        results.push_back(verify::flop_formula(data));
        results.push_back(verify::flop_kernel(data, need_genus(7), 7));
    } else if (suite == "adams") {
        results.push_back(verify::e2_poincare());
        results.push_back(verify::msl_degrees());
    } else if (suite == "koszul") {
        results.push_back(verify::koszul_dims());
    } else if (suite == "pushforward") {
        results.push_back(verify::pushforward_oracle());
    } else {
        throw UsageError("unknown suite: " + suite +
                         " (expected genus-anchors|star|flops|adams|koszul|pushforward)");
    }
    bool all = true;
    json out;
    out["command"] = "verify";
    out["suite"] = suite;
    json list = json::array();
    for (const auto& r : results) {
        json e;
        e["check"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        list.push_back(e);
        all = all && r.pass;
    }
    out["checks"] = list;
    out["pass"] = all;
    emit(cfg, out);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chern-number calculus and Krichever elliptic genus"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("ELLCOB_CACHE_DIR")) cfg.cache_dir = env;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");
    auto* optN = app.add_option("-N,--order", cfg.N, "series truncation order (>= 4)");
    auto* optP = app.add_option("-p,--char", cfg.p, "exponential characteristic");
    auto* optSeed = app.add_option("--seed", cfg.seed, "seed for randomized suites");
    auto* optCache = app.add_option("--cache-dir", cfg.cache_dir,
                                    "series cache directory (env ELLCOB_CACHE_DIR)");
    auto* optFormat = app.add_option("--format", cfg.format, "text | json");
    auto* optPrimes = app.add_option("--primes", cfg.primes, "odd primes l");

    std::string desc, theory = "MGL", suite, adams_format = "json";
    bool as_class = false;
    int gen_from = 2, gen_to = 10, flop_n = 0, max_weight = 20, kz_m = 2, kz_s = 4, kz_u = 20;
    long adams_l = 3;

    auto* c_variety = app.add_subcommand("variety", "Chern numbers, s_n, CY flag");
    c_variety->add_option("descriptor", desc, "JSON descriptor (inline or file)")->required();
    auto* c_genus = app.add_subcommand("genus", "elliptic genus of a variety or class");
    c_genus->add_option("descriptor", desc, "variety or cobordism-class JSON")->required();
    c_genus->add_flag("--class", as_class, "treat the input as a cobordism class");
    auto* c_sn = app.add_subcommand("sn", "s_n Chern number and condition (*)");
    c_sn->add_option("descriptor", desc)->required();
    auto* c_gen = app.add_subcommand("generators", "polynomial-generator search");
    c_gen->add_option("--from", gen_from, "first degree (default 2)");
    c_gen->add_option("--to", gen_to, "last degree (default 10)");
    auto* c_flop = app.add_subcommand("flop", "classical-flop s_n and genus difference");
    c_flop->add_option("datum", desc, "flop datum JSON")->required();
    c_flop->add_option("-n", flop_n, "degree (default: total dimension)");
    auto* c_adams = app.add_subcommand("adams", "E2 generator table");
    c_adams->add_option("--theory", theory, "MGL | MSL");
    c_adams->add_option("--prime", adams_l, "odd prime l (default 3)");
    c_adams->add_option("--max-weight", max_weight, "weight bound (default 20)");
    c_adams->add_option("--table-format", adams_format, "json | tsv");
    auto* c_koszul = app.add_subcommand("koszul", "Koszul Ext dimension table");
    c_koszul->add_option("--prime", adams_l, "odd prime l (default 3)");
    c_koszul->add_option("-m", kz_m, "number of Q-generators");
    c_koszul->add_option("--max-s", kz_s, "homological bound");
    c_koszul->add_option("--max-u", kz_u, "weight bound");
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite,
                         "genus-anchors | star | flops | adams | koszul | pushforward")
        ->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            // Flags win over the config file: reapply any flag the user set.
            Config from_file = cfg;
            apply_config_file(from_file, config_path);
            if (optN->count() == 0) cfg.N = from_file.N;
            if (optP->count() == 0) cfg.p = from_file.p;
            if (optSeed->count() == 0) cfg.seed = from_file.seed;
            if (optCache->count() == 0) cfg.cache_dir = from_file.cache_dir;
            if (optFormat->count() == 0) cfg.format = from_file.format;
            if (optPrimes->count() == 0) cfg.primes = from_file.primes;
        }
        validate_config(cfg);

        if (c_variety->parsed()) return cmd_variety(cfg, desc);
        if (c_genus->parsed()) return cmd_genus(cfg, desc, as_class);
        if (c_sn->parsed()) return cmd_sn(cfg, desc);
        if (c_gen->parsed()) return cmd_generators(cfg, gen_from, gen_to);
        if (c_flop->parsed()) return cmd_flop(cfg, desc, flop_n);
        if (c_adams->parsed()) return cmd_adams(cfg, theory, adams_l, max_weight, adams_format);
        if (c_koszul->parsed()) return cmd_koszul(cfg, adams_l, kz_m, kz_s, kz_u);
        if (c_verify->parsed()) return cmd_verify(cfg, suite);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
