#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "multigrad/corpus.hpp"
#include "oracle.hpp"

using namespace multigrad;

namespace {

const Field kF = Field::prime(32003);

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("multigrad-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("field spec parsing") {
    CHECK(parse_field("gf:2") == FieldSpec{FieldKind::prime_field, 2});
    CHECK(parse_field("gf:32003") == FieldSpec{FieldKind::prime_field, 32003});
    CHECK(parse_field("rationals").kind == FieldKind::rationals);
    CHECK_THROWS_AS(parse_field("gf:32004"), ParseError);  // not prime
    CHECK_THROWS_AS(parse_field("gf:"), ParseError);
    CHECK_THROWS_AS(parse_field("float"), ParseError);
}

TEST_CASE("module parsing on the stated cases") {
    ModuleInput a = parse_module(R"({"vars":["x","y"],"ideal":["x^2","x*y"]})");
    CHECK(a.var_names == std::vector<std::string>{"x", "y"});
    REQUIRE(a.module.summands().size() == 1);
    REQUIRE(a.module.summands()[0].ideal.generators().size() == 2);
    CHECK(a.module.summands()[0].ideal.generators()[0].deg == Multidegree({1, 1}));
    CHECK(a.module.summands()[0].ideal.generators()[1].deg == Multidegree({2, 0}));

    ModuleInput b = parse_module(
        R"({"vars":["x"],"summands":[{"shift":[0],"ideal":["x"]},{"shift":[1],"ideal":["x"]}]})");
    REQUIRE(b.module.summands().size() == 2);
    CHECK(b.module.summands()[0].shift == Multidegree({0}));
    CHECK(b.module.summands()[1].shift == Multidegree({1}));

    // a unit generator collapses the module: rejected explicitly
    CHECK_THROWS_WITH_AS(parse_module(R"({"vars":["x"],"ideal":["x^0"]})"),
                         doctest::Contains("unit generator"), ParseError);
}

TEST_CASE("module parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_module(R"({"vars":["x"],"ideal":["z"]})"), ParseError);
    CHECK_THROWS_AS(parse_module(R"({"vars":["x","x"],"ideal":[]})"), ParseError);
    CHECK_THROWS_AS(parse_module(R"({"vars":[],"ideal":[]})"), ParseError);
    CHECK_THROWS_AS(parse_module(R"({"vars":["x"]})"), ParseError);
    CHECK_THROWS_AS(parse_module(R"({"vars":["x"],"ideal":["x^"]})"), ParseError);
    CHECK_THROWS_AS(parse_module(R"({"vars":["x"],"ideal":["x*"]})"), ParseError);
    CHECK_THROWS_AS(
        parse_module(R"({"vars":["x","y"],"summands":[{"shift":[0],"ideal":["x"]}]})"),
        ParseError);

    try {
        parse_module("{\"vars\":[\"x\"],\n  \"ideal\": [}");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);  // the offending byte sits on line 2
        CHECK(e.column > 0);
    }
}

TEST_CASE("negative shifts are translated into N^n") {
    ModuleInput m = parse_module(
        R"({"vars":["x","y"],"summands":[{"shift":[-1,0],"ideal":["x"]},{"shift":[0,-2],"ideal":["y"]}]})");
    CHECK(m.module.summands()[0].shift == Multidegree({0, 2}));
    CHECK(m.module.summands()[1].shift == Multidegree({1, 0}));
}

TEST_CASE("canonical writer round-trips") {
    for (const char* text :
         {R"({"vars":["x","y"],"ideal":["x^2","x*y","x^2*y"]})",
          R"({"vars":["x"],"summands":[{"shift":[0],"ideal":["x"]},{"shift":[1],"ideal":["x"]}]})",
          R"({"vars":["u","v","w"],"ideal":["u^2*v","w"]})"}) {
        ModuleInput parsed = parse_module(text);
        std::string canonical = write_module(parsed);
        ModuleInput reparsed = parse_module(canonical);
        CHECK(write_module(reparsed) == canonical);
        CHECK(reparsed.module.canonical_key() == parsed.module.canonical_key());
    }

    std::mt19937_64 eng(139);
    for (int trial = 0; trial < 10; ++trial) {
        ModuleInput in{corpus_var_names(3),
                       ModulePresentation::quotient(oracle::random_ideal(eng, 3, 6, 3))};
        ModuleInput re = parse_module(write_module(in));
        CHECK(write_module(re) == write_module(in));
    }
}

TEST_CASE("monomial rendering") {
    std::vector<std::string> vars{"x", "y"};
    CHECK(monomial_to_string(Monomial(Multidegree({2, 1})), vars) == "x^2*y");
    CHECK(monomial_to_string(Monomial(Multidegree({0, 0})), vars) == "1");
    CHECK(monomial_to_string(Monomial(Multidegree({0, 3})), vars) == "y^3");
}

TEST_CASE("betti text layout is frozen") {
    ModuleInput in = parse_module(R"({"vars":["x","y"],"ideal":["x^2","x*y"]})");
    KoszulPolyseq inst(in.module, kF);
    BettiTable t = betti_table(inst);
    const std::string expect =
        "       0 1 2\n"
        "total: 1 2 1\n"
        "    0: 1 . .\n"
        "    1: . 2 1\n"
        "\n"
        "multigraded:\n"
        "  i=0 a=(0,0) dim=1\n"
        "  i=1 a=(1,1) dim=1\n"
        "  i=1 a=(2,0) dim=1\n"
        "  i=2 a=(2,1) dim=1\n"
        "\n"
        "projdim 2  reg 1\n"
        "d: 0 1 1\n"
        "lin[k=0]: 1 0 0\n"
        "lin[k=1]: 2 1\n"
        "lin[k=2]: 1\n";
    CHECK(render_betti_text(t, strand_report(t)) == expect);
}

TEST_CASE("json reports carry sorted keys and string scalars") {
    ModuleInput in = parse_module(R"({"vars":["x","y"],"ideal":["x^2","x*y"]})");
    KoszulPolyseq inst(in.module, kF);
    BettiTable t = betti_table(inst);
    nlohmann::json j = betti_report_json(in, t, strand_report(t));
    CHECK(j["schema"] == "multigrad/betti-report/1");
    std::string dumped = canonical_json_text(j);
    CHECK(dumped.find("\"entries\"") < dumped.find("\"field\""));
    CHECK(dumped.find("\"field\"") < dumped.find("\"schema\""));

    HomologyClass seed = inst.class_from_coordinates({VarSet::full(2), 2, Multidegree({2, 1})},
                                                     {kF.one()});
    WitnessCertificate cert = full_certificate(inst, 2, Multidegree({2, 1}), seed);
    nlohmann::json w = witness_report_json(in, inst, cert, validate(inst, cert));
    CHECK(w["validation"]["pass"] == true);
    CHECK(w["certificate"][1]["witnesses"][0]["coords"][0].is_string());
}

TEST_CASE("strand dims cache stores and reloads") {
    TempDir tmp;
    StrandDimsCache cache(tmp.path);
    CHECK_FALSE(cache.load("some-key").has_value());
    cache.store("some-key", {1, 2, 0});
    auto hit = cache.load("some-key");
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<std::size_t>{1, 2, 0});
    CHECK_FALSE(cache.load("other-key").has_value());

    // a damaged cache entry is a miss, never an error
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a("broken-key")));
        write_text_file((tmp.path / (std::string(buf) + ".json")).string(), "{not json");
        CHECK_FALSE(cache.load("broken-key").has_value());
    }

    // results must be identical with and without the cache
    ModuleInput in = parse_module(R"({"vars":["x","y"],"ideal":["x^2","x*y","y^3"]})");
    KoszulPolyseq plain(in.module, kF);
    BettiTable expect = betti_table(plain);
    for (int round = 0; round < 2; ++round) {  // second round reads the cache back
        KoszulPolyseq cached(in.module, kF, &cache);
        CHECK(betti_table(cached).entries == expect.entries);
    }
}

TEST_CASE("corpus reports are byte-identical across threads and cache modes") {
    CorpusParams base;
    base.seed = 42;
    base.n = 2;
    base.count = 8;
    base.max_gens = 4;
    base.max_exp = 2;
    base.fields = {FieldSpec{FieldKind::prime_field, 2},
                   FieldSpec{FieldKind::prime_field, 32003}};

    CorpusParams threaded = base;
    threaded.threads = 4;
    CorpusParams single = base;
    single.threads = 1;
    TempDir tmp;
    CorpusParams cached = base;
    cached.threads = 2;
    cached.cache_dir = tmp.path.string();

    const std::string a = canonical_json_text(run_corpus(single).report);
    const std::string b = canonical_json_text(run_corpus(threaded).report);
    const std::string c = canonical_json_text(run_corpus(cached).report);
    const std::string d = canonical_json_text(run_corpus(cached).report);  // warm cache
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == d);
}

TEST_CASE("small corpus runs clean") {
    CorpusParams params;
    params.seed = 7;
    params.n = 2;
    params.count = 6;
    params.max_gens = 4;
    params.max_exp = 2;
    params.threads = 2;
    CorpusOutcome out = run_corpus(params);
    CHECK(out.violations == 0);
    CHECK(out.checks > 0);
    CHECK(out.reproducers.empty());
    CHECK(out.report["aggregate"]["violations"] == 0);
}

TEST_CASE("corpus self-test hook reports a reproducer") {
    CorpusParams params;
    params.seed = 7;
    params.n = 2;
    params.count = 2;
    params.max_gens = 3;
    params.max_exp = 2;
    params.threads = 1;
    params.corrupt_self_test = true;
    CorpusOutcome out = run_corpus(params);
    CHECK(out.violations >= 1);
    REQUIRE_FALSE(out.reproducers.empty());
    CHECK(out.reproducers[0].find("index=0") != std::string::npos);
    CHECK(out.reproducers[0].find("seed=7") != std::string::npos);
}

TEST_CASE("rationals in the corpus are compared against GF(32003)") {
    CorpusParams params;
    params.seed = 9;
    params.n = 2;
    params.count = 3;
    params.max_gens = 3;
    params.max_exp = 2;
    params.threads = 1;
    params.fields = {FieldSpec{FieldKind::prime_field, 32003},
                     FieldSpec{FieldKind::rationals, 0}};
    CorpusOutcome out = run_corpus(params);
    CHECK(out.rational_compare_checks == 3);
    CHECK(out.rational_compare_violations == 0);
    CHECK(out.violations == 0);
}

TEST_CASE("corpus parameter bounds are enforced") {
    CorpusParams params;
    params.n = 6;
    CHECK_THROWS_AS(run_corpus(params), std::invalid_argument);
    params.n = 3;
    params.max_gens = 9;
    CHECK_THROWS_AS(run_corpus(params), std::invalid_argument);
    params.max_gens = 4;
    params.max_exp = 5;
    CHECK_THROWS_AS(run_corpus(params), std::invalid_argument);
}
