#pragma once

#include <map>

#include "multigrad/koszul_polyseq.hpp"

namespace multigrad {

struct BettiKeyLess {
    bool operator()(const std::pair<int, Multidegree>& x,
                    const std::pair<int, Multidegree>& y) const {
        if (x.first != y.first) return x.first < y.first;
        return x.second.lex_less(y.second);
    }
};

// Multigraded Betti table: (homological degree i, multidegree a) -> dim,
// nonzero entries only.
struct BettiTable {
    ModulePresentation module;
    Field field;
    std::map<std::pair<int, Multidegree>, std::size_t, BettiKeyLess> entries;

    std::size_t at(int i, const Multidegree& a) const;
    std::size_t total(int i) const;  // beta_i
    int projdim() const;             // largest i with an entry; -1 for empty table
};

// Compute beta_{i,a} = dim H_i([n]; M)_a over the candidate degrees
// {a_j + lcm(sigma)} of each summand.
BettiTable betti_table(KoszulPolyseq& inst);

// Z-graded aggregation beta_{i,j} = sum over |a| = j.
std::map<std::pair<int, long long>, std::size_t> z_graded(const BettiTable& table);

// Regularity, the strand offsets d_k and the linear-strand Betti numbers.
struct StrandReport {
    int projdim = 0;
    long long reg = 0;
    std::vector<long long> d;                      // index k = 0..n
    int degenerate_from = 0;                       // d[k] for k >= this is the reg fallback
    std::vector<std::vector<std::size_t>> lin;     // lin[k][i-k] = beta_{i,i+d_k}, i = k..projdim
};

StrandReport strand_report(const BettiTable& table);

// Degreewise lower-bound check at a nonzero (p, a): for each i <= p the
// entries with b <= a and |b| <= |a|-p+i must sum to at least C(p,i); the
// total Betti numbers then dominate C(p,i) and their sum 2^p.
struct BettiBoundsPerI {
    int i = 0;
    unsigned long long constrained_sum = 0;
    std::size_t distinct_degrees = 0;
    std::uint64_t bound = 0;
    bool pass = false;
};

struct BettiBoundsReport {
    int p = 0;
    Multidegree a;
    bool hypothesis_holds = false;  // beta_{p,a} != 0
    std::vector<BettiBoundsPerI> per_i;
    std::vector<unsigned long long> totals;  // beta_i, i = 0..p
    bool totals_pass = true;                 // beta_i >= C(p,i)
    unsigned long long totals_sum = 0;
    unsigned long long two_to_p = 1;
    bool sum_pass = true;
    bool pass = true;
};

BettiBoundsReport check_betti_bounds(const BettiTable& table, int p, const Multidegree& a);

// Linear-strand lower bounds for a given k: with p the largest index where
// beta_p^{k,lin} != 0, each beta_i^{k,lin} (i = k..p) must be >= C(p,i).
// When every row i >= 1 of the Z-graded table sits on the d_1 diagonal the
// total Betti numbers are additionally compared against C(projdim, i).
struct StrandBoundsPerI {
    int i = 0;
    unsigned long long value = 0;
    std::uint64_t bound = 0;
    bool pass = false;
};

struct StrandBoundsReport {
    int k = 0;
    long long d_k = 0;
    int p = -1;  // -1: hypothesis fails (no nonzero beta^{k,lin})
    bool hypothesis_holds = false;
    std::vector<StrandBoundsPerI> checks;
    bool detected_linear = false;
    int projdim = 0;
    std::vector<StrandBoundsPerI> linear_resolution_checks;
    bool pass = true;
};

StrandBoundsReport check_strand_bounds(const BettiTable& table, int k);

}  // namespace multigrad
