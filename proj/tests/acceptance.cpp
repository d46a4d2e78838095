// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL line;
// the process exits nonzero when any of them fails. Everything is exact, so
// every comparison below is an equality or an integer inequality with zero
// tolerance.
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "multigrad/corpus.hpp"

using namespace multigrad;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << num << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

Monomial mono(std::vector<int> e) { return Monomial(Multidegree(std::move(e))); }

ModulePresentation quotient(std::size_t n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(mono(std::move(g)));
    return ModulePresentation::quotient(MonomialIdeal::minimalize(n, std::move(ms)));
}

ModulePresentation field_module(std::size_t n) {
    std::vector<Monomial> vars;
    for (std::size_t k = 0; k < n; ++k) vars.push_back(Monomial(Multidegree::unit(n, k)));
    return ModulePresentation::quotient(MonomialIdeal::minimalize(n, std::move(vars)));
}

}  // namespace

int main() {
    const std::vector<FieldSpec> both{FieldSpec{FieldKind::prime_field, 2},
                                      FieldSpec{FieldKind::prime_field, 32003}};

    // the seeded corpus: 210 monomial quotients across n = 2, 3, 4, each run
    // over GF(2) and GF(32003)
    std::vector<CorpusParams> runs(3);
    runs[0].seed = 11; runs[0].n = 2; runs[0].count = 70; runs[0].max_gens = 5;
    runs[0].max_exp = 3; runs[0].fields = both;
    runs[1].seed = 12; runs[1].n = 3; runs[1].count = 80; runs[1].max_gens = 6;
    runs[1].max_exp = 3; runs[1].fields = both;
    runs[2].seed = 13; runs[2].n = 4; runs[2].count = 60; runs[2].max_gens = 5;
    runs[2].max_exp = 2; runs[2].fields = both;

    std::size_t quotients = 0;
    CorpusOutcome total;
    for (const CorpusParams& params : runs) {
        CorpusOutcome out = run_corpus(params);
        quotients += static_cast<std::size_t>(params.count);
        total.exactness_sequences += out.exactness_sequences;
        total.exactness_violations += out.exactness_violations;
        total.vanishing_samples += out.vanishing_samples;
        total.vanishing_violations += out.vanishing_violations;
        total.betti_bound_checks += out.betti_bound_checks;
        total.betti_bound_violations += out.betti_bound_violations;
        total.certificates += out.certificates;
        total.certificate_violations += out.certificate_violations;
        total.hilbert_checks += out.hilbert_checks;
        total.hilbert_violations += out.hilbert_violations;
        total.cross_oracle_checks += out.cross_oracle_checks;
        total.cross_oracle_violations += out.cross_oracle_violations;
        total.pair_count += out.pair_count;
        total.symmetry_samples += out.symmetry_samples;
        total.symmetry_violations += out.symmetry_violations;
        total.tor_bound_checks += out.tor_bound_checks;
        total.tor_bound_violations += out.tor_bound_violations;
    }

    {  // 1. degreewise lower bounds over the whole corpus, both fields
        std::ostringstream detail;
        detail << quotients << " quotients, " << total.betti_bound_checks
               << " (p,a) scans, " << total.betti_bound_violations << " violations";
        criterion(1, "degreewise Betti bounds C(p,i) on the seeded corpus",
                  quotients >= 200 && total.betti_bound_checks > 0 &&
                      total.betti_bound_violations == 0,
                  detail.str());
    }

    {  // 2. constructive certificates validate everywhere
        std::ostringstream detail;
        detail << total.certificates << " certificates, " << total.certificate_violations
               << " failures";
        criterion(2, "witness certificates validate on 100% of the corpus",
                  total.certificates >= 2 * quotients && total.certificate_violations == 0,
                  detail.str());
    }

    {  // 3. exactness fuzzer
        std::ostringstream detail;
        detail << total.exactness_sequences << " five-term sequences, "
               << total.exactness_violations << " violations; " << total.vanishing_samples
               << " vanishing samples, " << total.vanishing_violations << " violations";
        criterion(3, "five-term exactness and vanishing above |F|",
                  total.exactness_sequences >= 1000 && total.exactness_violations == 0 &&
                      total.vanishing_violations == 0,
                  detail.str());
    }

    {  // 4. oracle equivalences
        std::ostringstream detail;
        detail << total.cross_oracle_checks << " Koszul/Taylor degrees, "
               << total.symmetry_samples << " symmetry samples over " << total.pair_count
               << " pairs, " << total.hilbert_checks << " Hilbert identities";
        criterion(4, "Koszul=Taylor, Tor symmetry, alternating-sum identity",
                  total.cross_oracle_violations == 0 && total.pair_count >= 50 &&
                      total.symmetry_violations == 0 && total.hilbert_violations == 0,
                  detail.str());
    }

    {  // 5. closed-form anchors
        bool pass = true;
        std::string why;
        const Field f = Field::prime(32003);
        for (std::size_t n = 1; n <= 4 && pass; ++n) {
            KoszulPolyseq inst(field_module(n), f);
            BettiTable t = betti_table(inst);
            for (std::size_t i = 0; i <= n; ++i)
                if (t.total(static_cast<int>(i)) != binomial(n, i)) {
                    pass = false;
                    why = "residue field totals off at n=" + std::to_string(n);
                }
            for (const auto& [key, dim] : t.entries)
                for (std::size_t k = 0; k < n; ++k)
                    if (key.second[k] > 1 || key.second.total() != key.first) {
                        pass = false;
                        why = "non-squarefree residue-field entry";
                    }
        }
        if (pass) {
            KoszulPolyseq inst(quotient(2, {{2, 0}, {1, 1}}), f);
            BettiTable t = betti_table(inst);
            pass = t.entries.size() == 4 && t.at(0, Multidegree({0, 0})) == 1 &&
                   t.at(1, Multidegree({2, 0})) == 1 && t.at(1, Multidegree({1, 1})) == 1 &&
                   t.at(2, Multidegree({2, 1})) == 1;
            if (!pass) why = "S/(x^2,xy) table off";
        }
        if (pass) {
            KoszulPolyseq inst(quotient(2, {{2, 0}, {1, 1}, {0, 2}}), f);
            BettiTable t = betti_table(inst);
            StrandReport sr = strand_report(t);
            StrandBoundsReport sb = check_strand_bounds(t, 1);
            pass = sr.reg == 1 && sr.d[1] == 1 && sr.lin.size() == 3 &&
                   sr.lin[1] == std::vector<std::size_t>{3, 2} && sb.hypothesis_holds &&
                   sb.p == 2 && sb.pass;
            if (!pass) why = "S/(x^2,xy,y^2) strand analysis off";
        }
        criterion(5, "closed-form anchors (residue fields and the two quotients)", pass, why);
    }

    {  // 6. Tor pair suite, including the infinite-Tor example
        bool example_ok = true;
        const Field f = Field::prime(32003);
        auto sx = quotient(2, {{1, 0}});
        TorScanner ss(sx, sx, f);
        for (int j = 0; j <= 2 && example_ok; ++j)
            example_ok = ss.dim_at(Multidegree({1, j}), 1) == 1;
        std::size_t example_checks = 0;
        for (const Multidegree& a : degrees_in_box(Multidegree({3, 3}))) {
            const auto dims = ss.dims_at(a);
            for (std::size_t p = 0; p < dims.size(); ++p) {
                if (dims[p] == 0) continue;
                ++example_checks;
                if (!check_tor_bounds(ss, static_cast<int>(p), a).pass) example_ok = false;
            }
        }
        std::ostringstream detail;
        detail << total.tor_bound_checks << " corpus pair checks, "
               << total.tor_bound_violations << " violations; " << example_checks
               << " checks on the S/(x) pair";
        criterion(6, "Tor lower bounds on sampled pairs and the S/(x) example",
                  total.tor_bound_checks > 0 && total.tor_bound_violations == 0 &&
                      example_ok && example_checks > 0,
                  detail.str());
    }

    {  // 7. determinism across threads and cache modes
        CorpusParams params;
        params.seed = 4242;
        params.n = 2;
        params.count = 10;
        params.max_gens = 4;
        params.max_exp = 2;
        params.fields = both;

        CorpusParams single = params;
        single.threads = 1;
        CorpusParams wide = params;
        wide.threads = 4;
        std::filesystem::path tmp =
            std::filesystem::temp_directory_path() /
            ("multigrad-acceptance-" + std::to_string(std::random_device{}()));
        CorpusParams cached = params;
        cached.threads = 2;
        cached.cache_dir = tmp.string();

        const std::string a = canonical_json_text(run_corpus(single).report);
        const std::string b = canonical_json_text(run_corpus(wide).report);
        const std::string c = canonical_json_text(run_corpus(cached).report);
        const std::string d = canonical_json_text(run_corpus(cached).report);
        std::filesystem::remove_all(tmp);
        criterion(7, "byte-identical reports across threads and cache on/off",
                  a == b && a == c && a == d,
                  a == b ? (a == c ? "3 configurations + warm cache" : "cache run differs")
                         : "thread count changes the report");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures
              << " failing criteria)" << std::endl;
    return failures == 0 ? 0 : 1;
}
