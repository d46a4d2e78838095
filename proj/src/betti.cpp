#include "multigrad/betti.hpp"

#include <algorithm>
#include <set>

namespace multigrad {

std::size_t BettiTable::at(int i, const Multidegree& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
    std::size_t t = 0;
    for (const auto& [key, dim] : entries)
        if (key.first == i) t += dim;
    return t;
}

int BettiTable::projdim() const {
    int p = -1;
    for (const auto& [key, dim] : entries) p = std::max(p, key.first);
    return p;
}

BettiTable betti_table(KoszulPolyseq& inst) {
    BettiTable table{inst.module(), inst.field(), {}};
    const VarSet full = VarSet::full(inst.vars());

    std::set<Multidegree, MultidegreeLexLess> candidates;
    for (const auto& sm : inst.module().summands())
        for (const Multidegree& l : sm.ideal.lcm_lattice_degrees())
            candidates.insert(sm.shift + l);

    for (const Multidegree& a : candidates) {
        const auto dims = inst.homology_dims(full, a);
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] > 0) table.entries[{static_cast<int>(i), a}] = dims[i];
    }
    return table;
}

std::map<std::pair<int, long long>, std::size_t> z_graded(const BettiTable& table) {
    std::map<std::pair<int, long long>, std::size_t> out;
    for (const auto& [key, dim] : table.entries) out[{key.first, key.second.total()}] += dim;
    return out;
}

StrandReport strand_report(const BettiTable& table) {
    if (table.entries.empty()) throw std::invalid_argument("strand report of a zero module");
    const auto zg = z_graded(table);
    const int n = static_cast<int>(table.module.vars());

    StrandReport rep;
    rep.projdim = table.projdim();
    rep.reg = 0;
    for (const auto& [key, dim] : zg) rep.reg = std::max(rep.reg, key.second - key.first);

    rep.d.assign(static_cast<std::size_t>(n) + 1, rep.reg);
    rep.degenerate_from = rep.projdim + 1;
    for (int k = 0; k <= n; ++k) {
        long long dk = rep.reg;
        for (const auto& [key, dim] : zg)
            if (key.first == k) dk = std::min(dk, key.second - key.first);
        rep.d[static_cast<std::size_t>(k)] = dk;
    }

    rep.lin.resize(static_cast<std::size_t>(rep.projdim) + 1);
    for (int k = 0; k <= rep.projdim; ++k) {
        const long long dk = rep.d[static_cast<std::size_t>(k)];
        for (int i = k; i <= rep.projdim; ++i) {
            auto it = zg.find({i, i + dk});
            rep.lin[static_cast<std::size_t>(k)].push_back(it == zg.end() ? 0 : it->second);
        }
    }
    return rep;
}

BettiBoundsReport check_betti_bounds(const BettiTable& table, int p, const Multidegree& a) {
    BettiBoundsReport rep;
    rep.p = p;
    rep.a = a;
    rep.hypothesis_holds = table.at(p, a) != 0;
    if (!rep.hypothesis_holds) return rep;

    const long long total = a.total();
    for (int i = 0; i <= p; ++i) {
        BettiBoundsPerI chk;
        chk.i = i;
        chk.bound = binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(i));
        for (const auto& [key, dim] : table.entries) {
            if (key.first != i) continue;
            if (!key.second.leq(a)) continue;
            if (key.second.total() > total - p + i) continue;
            chk.constrained_sum += dim;
            chk.distinct_degrees += 1;
        }
        chk.pass = chk.constrained_sum >= chk.bound && chk.distinct_degrees >= chk.bound;
        rep.pass = rep.pass && chk.pass;
        rep.per_i.push_back(chk);
    }

    rep.two_to_p = 1ull << p;
    for (int i = 0; i <= p; ++i) {
        const unsigned long long t = table.total(i);
        rep.totals.push_back(t);
        rep.totals_sum += t;
        if (t < binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(i)))
            rep.totals_pass = false;
    }
    rep.sum_pass = rep.totals_sum >= rep.two_to_p;
    rep.pass = rep.pass && rep.totals_pass && rep.sum_pass;
    return rep;
}

StrandBoundsReport check_strand_bounds(const BettiTable& table, int k) {
    if (k < 0) throw std::invalid_argument("strand index must be nonnegative");
    StrandBoundsReport rep;
    rep.k = k;
    const StrandReport sr = strand_report(table);
    const auto zg = z_graded(table);
    rep.projdim = sr.projdim;
    if (k >= static_cast<int>(sr.d.size())) {
        rep.hypothesis_holds = false;
        return rep;
    }
    rep.d_k = sr.d[static_cast<std::size_t>(k)];

    auto lin_value = [&](int i) -> unsigned long long {
        auto it = zg.find({i, i + rep.d_k});
        return it == zg.end() ? 0 : it->second;
    };

    for (int i = sr.projdim; i >= k; --i)
        if (lin_value(i) != 0) {
            rep.p = i;
            break;
        }
    rep.hypothesis_holds = rep.p >= k && rep.p >= 0;
    if (rep.hypothesis_holds) {
        for (int i = k; i <= rep.p; ++i) {
            StrandBoundsPerI chk;
            chk.i = i;
            chk.value = lin_value(i);
            chk.bound = binomial(static_cast<std::uint64_t>(rep.p), static_cast<std::uint64_t>(i));
            chk.pass = chk.value >= chk.bound;
            rep.pass = rep.pass && chk.pass;
            rep.checks.push_back(chk);
        }
    }

    // linear table: every row i >= 1 concentrated on the d_1 diagonal
    rep.detected_linear = sr.projdim >= 1;
    const long long d1 = sr.d.size() > 1 ? sr.d[1] : 0;
    for (const auto& [key, dim] : zg)
        if (key.first >= 1 && key.second != key.first + d1) rep.detected_linear = false;
    if (rep.detected_linear) {
        for (int i = 0; i <= sr.projdim; ++i) {
            StrandBoundsPerI chk;
            chk.i = i;
            chk.value = table.total(i);
            chk.bound = binomial(static_cast<std::uint64_t>(sr.projdim),
                                 static_cast<std::uint64_t>(i));
            chk.pass = chk.value >= chk.bound;
            rep.pass = rep.pass && chk.pass;
            rep.linear_resolution_checks.push_back(chk);
        }
    }
    return rep;
}

}  // namespace multigrad
