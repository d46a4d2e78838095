#include <iostream>

#include <CLI11.hpp>

#include "multigrad/corpus.hpp"

namespace {

using namespace multigrad;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Multidegree parse_degree_list(const std::string& text, std::size_t n, const char* what) {
    std::vector<int> entries;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty()) throw ParseError(std::string("empty entry in ") + what);
            try {
                entries.push_back(std::stoi(cur));
            } catch (const std::exception&) {
                throw ParseError(std::string("bad integer '") + cur + "' in " + what);
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (entries.size() != n)
        throw ParseError(std::string(what) + " needs " + std::to_string(n) + " entries");
    return Multidegree(entries);
}

void emit_json(const std::string& path, const nlohmann::json& j) {
    if (!path.empty()) write_text_file(path, canonical_json_text(j));
}

struct BettiArgs {
    std::string input, field = "gf:32003", json_path, cache_dir;
};

int cmd_betti(const BettiArgs& args) {
    ModuleInput in = parse_module_file(args.input);
    Field field(parse_field(args.field));
    std::unique_ptr<StrandDimsCache> cache;
    if (!args.cache_dir.empty()) cache = std::make_unique<StrandDimsCache>(args.cache_dir);
    KoszulPolyseq inst(in.module, field, cache.get());
    BettiTable table = betti_table(inst);
    StrandReport sr = strand_report(table);
    std::cout << "betti table over " << field.name() << "\n\n"
              << render_betti_text(table, sr);
    emit_json(args.json_path, betti_report_json(in, table, sr));
    return kExitOk;
}

struct TorArgs {
    std::string m_path, n_path, field = "gf:32003", json_path, box;
    std::vector<std::string> at;
};

int cmd_tor(const TorArgs& args) {
    ModuleInput m = parse_module_file(args.m_path);
    ModuleInput n = parse_module_file(args.n_path);
    if (m.var_names != n.var_names)
        throw ParseError("tor: the two modules live over different variable lists");
    Field field(parse_field(args.field));
    const std::size_t nv = m.var_names.size();

    std::vector<Multidegree> degrees;
    if (!args.box.empty()) {
        for (const Multidegree& a : degrees_in_box(parse_degree_list(args.box, nv, "--box")))
            degrees.push_back(a);
    }
    for (const std::string& at : args.at) degrees.push_back(parse_degree_list(at, nv, "--at"));
    if (degrees.empty()) throw ParseError("tor: give --box or at least one --at");

    std::cout << "tor dims over " << field.name() << "\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const Multidegree& a : degrees) {
        const auto dims = tor_dims(m.module, n.module, a, field);
        bool any = false;
        for (std::size_t d : dims) any = any || d != 0;
        std::cout << "  a=" << a.to_string() << ":";
        for (std::size_t d : dims) std::cout << " " << d;
        std::cout << (any ? "" : "  (zero)") << "\n";
        nlohmann::json row;
        row["a"] = multidegree_to_json(a);
        row["dims"] = dims;
        rows.push_back(row);
    }
    nlohmann::json j;
    j["schema"] = "multigrad/tor-report/1";
    j["field"] = field.name();
    j["m"] = module_to_json(m);
    j["n"] = module_to_json(n);
    j["dims"] = rows;
    emit_json(args.json_path, j);
    return kExitOk;
}

struct WitnessArgs {
    std::string input, field = "gf:32003", json_path, cache_dir, a;
    int p = -1;
    bool auto_top = false;
};

int cmd_witness(const WitnessArgs& args) {
    ModuleInput in = parse_module_file(args.input);
    Field field(parse_field(args.field));
    std::unique_ptr<StrandDimsCache> cache;
    if (!args.cache_dir.empty()) cache = std::make_unique<StrandDimsCache>(args.cache_dir);
    KoszulPolyseq inst(in.module, field, cache.get());
    BettiTable table = betti_table(inst);

    int p = args.p;
    Multidegree a;
    if (args.auto_top) {
        p = table.projdim();
        for (const auto& [key, dim] : table.entries)
            if (key.first == p) a = key.second;  // lex-largest, entries sorted
    } else {
        if (p < 0 || args.a.empty())
            throw ParseError("witness: give --auto-top or both --p and --a");
        a = parse_degree_list(args.a, in.var_names.size(), "--a");
        if (table.at(p, a) == 0) {
            std::cout << "beta_{" << p << "," << a.to_string()
                      << "} = 0: nothing to certify\n";
            return kExitCheckFailed;
        }
    }

    const GroupKey seed_key{VarSet::full(inst.vars()), p, a};
    std::vector<Scalar> coords(inst.group_dim(seed_key), field.zero());
    coords.at(0) = field.one();
    HomologyClass seed = inst.class_from_coordinates(seed_key, std::move(coords));
    WitnessCertificate cert = full_certificate(inst, p, a, seed);
    ValidationReport val = validate(inst, cert);

    std::cout << "witness certificate at p=" << p << " a=" << a.to_string() << " over "
              << field.name() << "\n";
    for (std::size_t i = 0; i < cert.per_i.size(); ++i) {
        std::cout << "  i=" << i << ": " << cert.per_i[i].size()
                  << " witnesses (bound C(" << p << "," << i << ") = "
                  << binomial(static_cast<std::uint64_t>(p), i) << ") degrees";
        for (const Witness& w : cert.per_i[i]) std::cout << " " << (cert.a - w.b).to_string();
        std::cout << "\n";
    }
    std::cout << "validation: " << (val.pass ? "pass" : "FAIL " + val.first_violation) << "\n";
    emit_json(args.json_path, witness_report_json(in, inst, cert, val));
    return val.pass ? kExitOk : kExitCheckFailed;
}

struct CheckArgs {
    std::string input, m_path, n_path, field = "gf:32003", json_path, cache_dir;
    std::string suite = "all";
};

int cmd_check(const CheckArgs& args) {
    Field field(parse_field(args.field));
    nlohmann::json j;
    j["schema"] = "multigrad/check-report/1";
    j["field"] = field.name();
    bool all_pass = true;

    if (!args.input.empty()) {
        ModuleInput in = parse_module_file(args.input);
        std::unique_ptr<StrandDimsCache> cache;
        if (!args.cache_dir.empty()) cache = std::make_unique<StrandDimsCache>(args.cache_dir);
        KoszulPolyseq inst(in.module, field, cache.get());
        BettiTable table = betti_table(inst);
        j["module"] = module_to_json(in);

        if (args.suite == "all" || args.suite == "betti") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [key, dim] : table.entries) {
                BettiBoundsReport rep = check_betti_bounds(table, key.first, key.second);
                all_pass = all_pass && rep.pass;
                std::cout << (rep.pass ? "PASS" : "FAIL") << " betti bounds at p=" << key.first
                          << " a=" << key.second.to_string() << "\n";
                arr.push_back(betti_bounds_json(rep));
            }
            j["betti_bounds"] = arr;
        }
        if (args.suite == "all" || args.suite == "strand") {
            nlohmann::json arr = nlohmann::json::array();
            for (int k = 0; k <= table.projdim(); ++k) {
                StrandBoundsReport rep = check_strand_bounds(table, k);
                all_pass = all_pass && rep.pass;
                std::cout << (rep.pass ? "PASS" : "FAIL") << " strand bounds at k=" << k
                          << (rep.hypothesis_holds ? "" : " (vacuous)") << "\n";
                arr.push_back(strand_bounds_json(rep));
            }
            j["strand_bounds"] = arr;
        }
    } else if (!args.m_path.empty() && !args.n_path.empty()) {
        ModuleInput m = parse_module_file(args.m_path);
        ModuleInput n = parse_module_file(args.n_path);
        if (m.var_names != n.var_names)
            throw ParseError("check: the two modules live over different variable lists");
        j["m"] = module_to_json(m);
        j["n"] = module_to_json(n);
        TorScanner scanner(m.module, n.module, field);
        nlohmann::json arr = nlohmann::json::array();
        for (const Multidegree& a : degrees_in_box(scanner.scan_bound())) {
            const auto dims = scanner.dims_at(a);
            for (std::size_t p = 0; p < dims.size(); ++p) {
                if (dims[p] == 0) continue;
                TorBoundsReport rep = check_tor_bounds(scanner, static_cast<int>(p), a);
                all_pass = all_pass && rep.pass;
                std::cout << (rep.pass ? "PASS" : "FAIL") << " tor bounds at p=" << p
                          << " a=" << a.to_string() << "\n";
                arr.push_back(tor_bounds_json(rep));
            }
        }
        j["tor_bounds"] = arr;
    } else {
        throw ParseError("check: give --input, or --m and --n");
    }

    j["pass"] = all_pass;
    emit_json(args.json_path, j);
    std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES") << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

struct CorpusArgs {
    CorpusParams params;
    std::string fields = "gf:2,gf:32003";
    std::string json_path;
};

int cmd_corpus(CorpusArgs& args) {
    args.params.fields.clear();
    std::string cur;
    for (char c : args.fields + ",") {
        if (c == ',') {
            if (!cur.empty()) args.params.fields.push_back(parse_field(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    CorpusOutcome out = run_corpus(args.params);
    std::cout << "corpus seed=" << args.params.seed << " n=" << args.params.n
              << " count=" << args.params.count << "\n"
              << "  exactness sequences " << out.exactness_sequences << ", violations "
              << out.exactness_violations << "\n"
              << "  vanishing samples " << out.vanishing_samples << ", violations "
              << out.vanishing_violations << "\n"
              << "  betti bound checks " << out.betti_bound_checks << ", violations "
              << out.betti_bound_violations << "\n"
              << "  certificates " << out.certificates << ", violations "
              << out.certificate_violations << "\n"
              << "  hilbert identities " << out.hilbert_checks << ", violations "
              << out.hilbert_violations << "\n"
              << "  koszul/taylor checks " << out.cross_oracle_checks << ", violations "
              << out.cross_oracle_violations << "\n"
              << "  tor pairs " << out.pair_count << ": symmetry samples "
              << out.symmetry_samples << " (violations " << out.symmetry_violations
              << "), bound checks " << out.tor_bound_checks << " (violations "
              << out.tor_bound_violations << ")\n"
              << "total: " << (out.checks - out.violations) << "/" << out.checks
              << " checks passed\n";
    for (const std::string& r : out.reproducers) std::cout << "REPRODUCER " << r << "\n";
    emit_json(args.json_path, out.report);
    return out.violations == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multigraded Betti/Tor tables with machine-checkable witness "
                 "certificates for the binomial lower bounds"};
    app.require_subcommand(1);

    BettiArgs betti_args;
    CLI::App* betti = app.add_subcommand("betti", "Betti table and strand report of a module");
    betti->add_option("--input", betti_args.input, "module JSON file")->required();
    betti->add_option("--field", betti_args.field, "gf:<p> or rationals");
    betti->add_option("--json", betti_args.json_path, "write the JSON report here");
    betti->add_option("--cache", betti_args.cache_dir, "strand-dimension disk cache directory");

    TorArgs tor_args;
    CLI::App* tor = app.add_subcommand("tor", "Tor dimensions of a module pair");
    tor->add_option("--m", tor_args.m_path, "left module JSON file")->required();
    tor->add_option("--n", tor_args.n_path, "right module JSON file")->required();
    tor->add_option("--box", tor_args.box, "scan the box [0, b], comma-separated");
    tor->add_option("--at", tor_args.at, "single degree, comma-separated (repeatable)");
    tor->add_option("--field", tor_args.field, "gf:<p> or rationals");
    tor->add_option("--json", tor_args.json_path, "write the JSON report here");

    WitnessArgs witness_args;
    CLI::App* witness =
        app.add_subcommand("witness", "extract and validate a witness certificate");
    witness->add_option("--input", witness_args.input, "module JSON file")->required();
    witness->add_option("--p", witness_args.p, "homological degree of the seed");
    witness->add_option("--a", witness_args.a, "multidegree of the seed, comma-separated");
    witness->add_flag("--auto-top", witness_args.auto_top,
                      "seed at maximal p, lex-largest a");
    witness->add_option("--field", witness_args.field, "gf:<p> or rationals");
    witness->add_option("--json", witness_args.json_path, "write the JSON report here");
    witness->add_option("--cache", witness_args.cache_dir, "strand-dimension cache directory");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "run the lower-bound suites");
    check->add_option("--input", check_args.input, "module JSON file (betti/strand suites)");
    check->add_option("--m", check_args.m_path, "left module (tor suite)");
    check->add_option("--n", check_args.n_path, "right module (tor suite)");
    check->add_option("--suite", check_args.suite, "betti | strand | tor | all");
    check->add_option("--field", check_args.field, "gf:<p> or rationals");
    check->add_option("--json", check_args.json_path, "write the JSON report here");
    check->add_option("--cache", check_args.cache_dir, "strand-dimension cache directory");

    CorpusArgs corpus_args;
    CLI::App* corpus = app.add_subcommand("corpus", "randomized check harness");
    corpus->add_option("--seed", corpus_args.params.seed, "stream seed");
    corpus->add_option("--count", corpus_args.params.count, "number of ideals");
    corpus->add_option("--n", corpus_args.params.n, "number of variables (<= 5)");
    corpus->add_option("--max-gens", corpus_args.params.max_gens, "generator cap (<= 8)");
    corpus->add_option("--max-exp", corpus_args.params.max_exp, "exponent cap (<= 4)");
    corpus->add_option("--fields", corpus_args.fields, "comma-separated field list");
    corpus->add_option("--threads", corpus_args.params.threads,
                       "worker threads (default: MULTIGRAD_THREADS or hardware)");
    corpus->add_option("--cache", corpus_args.params.cache_dir, "strand-dimension cache dir");
    corpus->add_option("--json", corpus_args.json_path, "write the JSON report here");
    corpus->add_flag("--self-test-corrupt", corpus_args.params.corrupt_self_test,
                     "flip one bound to verify the harness reports failures")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (betti->parsed()) return cmd_betti(betti_args);
        if (tor->parsed()) return cmd_tor(tor_args);
        if (witness->parsed()) return cmd_witness(witness_args);
        if (check->parsed()) return cmd_check(check_args);
        if (corpus->parsed()) return cmd_corpus(corpus_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const exactness_error& e) {
        std::cerr << "internal exactness failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
