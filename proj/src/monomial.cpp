#include "multigrad/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace multigrad {

Monomial::Monomial(Multidegree d) : deg(std::move(d)) {
    if (!deg.is_nonnegative())
        throw std::invalid_argument("monomial exponents must be nonnegative");
}

Monomial Monomial::times_var(std::size_t i) const {
    Multidegree d = deg;
    d[i] += 1;
    return Monomial(d);
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t n, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.deg.size() != n) throw std::invalid_argument("generator arity mismatch");
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.lex_less(b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal(n);
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (!(h == g) && h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) ideal.gens_.push_back(g);
    }
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::set<Multidegree, MultidegreeLexLess> MonomialIdeal::lcm_lattice_degrees() const {
    std::set<Multidegree, MultidegreeLexLess> out;
    const std::size_t g = gens_.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        Multidegree l(n_);
        for (std::size_t k = 0; k < g; ++k)
            if ((mask >> k) & 1) l = l.join(gens_[k].deg);
        out.insert(l);
    }
    return out;
}

ModulePresentation::ModulePresentation(std::size_t n, std::vector<Summand> summands)
    : n_(n), summands_(std::move(summands)) {
    if (summands_.empty())
        throw std::invalid_argument("module presentation needs at least one summand");
    for (const auto& s : summands_) {
        if (s.shift.size() != n_ || s.ideal.vars() != n_)
            throw std::invalid_argument("summand arity mismatch");
        if (!s.shift.is_nonnegative())
            throw std::invalid_argument("summand shift must be normalized into N^n");
    }
}

ModulePresentation ModulePresentation::quotient(MonomialIdeal ideal) {
    std::size_t n = ideal.vars();
    return ModulePresentation(n, {Summand{Multidegree(n), std::move(ideal)}});
}

std::vector<std::pair<std::size_t, Monomial>> ModulePresentation::degree_basis(
    const Multidegree& a) const {
    std::vector<std::pair<std::size_t, Monomial>> out;
    if (a.size() != n_) throw std::invalid_argument("degree arity mismatch");
    for (std::size_t j = 0; j < summands_.size(); ++j) {
        Multidegree d = a - summands_[j].shift;
        if (!d.is_nonnegative()) continue;
        Monomial m(d);
        if (!summands_[j].ideal.contains(m)) out.emplace_back(j, m);
    }
    return out;
}

Multidegree ModulePresentation::degree_bound() const {
    Multidegree bound(n_);
    for (const auto& s : summands_) {
        Multidegree top = s.shift;
        for (const auto& g : s.ideal.generators()) top = top.join(s.shift + g.deg);
        bound = bound.join(top);
    }
    return bound;
}

std::string ModulePresentation::canonical_key() const {
    std::string s = "n=" + std::to_string(n_);
    for (const auto& sm : summands_) {
        s += "|shift=" + sm.shift.to_string() + ";gens=";
        for (const auto& g : sm.ideal.generators()) s += g.deg.to_string();
    }
    return s;
}

KPolynomial k_polynomial(const ModulePresentation& m) {
    KPolynomial kp;
    for (const auto& sm : m.summands()) {
        const auto& gens = sm.ideal.generators();
        const std::size_t g = gens.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
            Multidegree l(m.vars());
            int par = 0;
            for (std::size_t k = 0; k < g; ++k)
                if ((mask >> k) & 1) {
                    l = l.join(gens[k].deg);
                    par ^= 1;
                }
            Multidegree term = sm.shift + l;
            kp[term] += par ? -1 : 1;
        }
    }
    for (auto it = kp.begin(); it != kp.end();)
        it = it->second == 0 ? kp.erase(it) : std::next(it);
    return kp;
}

long long hilbert_coefficient(const KPolynomial& kp, const Multidegree& a) {
    // 1/prod(1-t_i) = sum over N^n, so the coefficient at a sums all terms <= a
    long long c = 0;
    for (const auto& [d, coeff] : kp)
        if (d.leq(a)) c += coeff;
    return c;
}

}  // namespace multigrad
