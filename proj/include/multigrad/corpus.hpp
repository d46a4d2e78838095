#pragma once

#include <cstdint>

#include "multigrad/io.hpp"

namespace multigrad {

// Randomized harness: a seeded stream of monomial quotients, each run through
// the exactness fuzzer, the degreewise Betti bound scan, witness extraction
// with validation, the Hilbert-series identity and the Koszul/Taylor cross
// check; consecutive ideals are paired for Tor symmetry and Tor bound scans.
struct CorpusParams {
    std::uint64_t seed = 1;
    int n = 3;           // <= 5
    int count = 100;
    int max_gens = 6;    // <= 8
    int max_exp = 3;     // <= 4
    std::vector<FieldSpec> fields{FieldSpec{FieldKind::prime_field, 2},
                                  FieldSpec{FieldKind::prime_field, 32003}};
    int fuzz_samples = 6;
    int vanish_samples = 4;
    int pair_degree_samples = 5;
    int threads = 0;            // 0: hardware default / MULTIGRAD_THREADS
    std::string cache_dir;      // empty: no disk cache
    bool corrupt_self_test = false;  // harness self-test hook: flips one bound
};

struct CorpusOutcome {
    nlohmann::json report;  // canonical; independent of threads/cache
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::vector<std::string> reproducers;

    // aggregate counters, per check family
    std::size_t exactness_sequences = 0, exactness_violations = 0;
    std::size_t vanishing_samples = 0, vanishing_violations = 0;
    std::size_t betti_bound_checks = 0, betti_bound_violations = 0;
    std::size_t certificates = 0, certificate_violations = 0;
    std::size_t hilbert_checks = 0, hilbert_violations = 0;
    std::size_t cross_oracle_checks = 0, cross_oracle_violations = 0;
    std::size_t rational_compare_checks = 0, rational_compare_violations = 0;
    std::size_t pair_count = 0;
    std::size_t symmetry_samples = 0, symmetry_violations = 0;
    std::size_t tor_bound_checks = 0, tor_bound_violations = 0;
};

CorpusOutcome run_corpus(const CorpusParams& params);

// Deterministic ideal stream (index -> minimal monomial ideal), exposed for
// tests that want corpus modules without the harness.
std::vector<MonomialIdeal> corpus_ideals(std::uint64_t seed, int n, int count, int max_gens,
                                         int max_exp);

std::vector<std::string> corpus_var_names(int n);

int default_thread_count();

}  // namespace multigrad
