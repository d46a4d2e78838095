#include "multigrad/koszul.hpp"

#include <stdexcept>

namespace multigrad {

StrandComplex::StrandComplex(const ModulePresentation& m, VarSet f, Multidegree a,
                             const Field& field)
    : f_(f), a_(std::move(a)), field_(field) {
    if (a_.size() != m.vars()) throw std::invalid_argument("strand degree arity mismatch");
    const std::size_t n = m.vars();
    const auto ground = f_.elements();
    for (std::size_t e : ground)
        if (e >= n) throw std::invalid_argument("variable set outside the ring");

    const std::size_t top = ground.size();
    basis_.resize(top + 1);
    index_.resize(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        for (const VarSet& g : subsets_of_size(ground, i)) {
            Multidegree rest = a_;
            for (std::size_t v : g.elements()) rest[v] -= 1;
            for (const auto& [j, mono] : m.degree_basis(rest)) {
                index_[i][{g.mask(), j}] = basis_[i].size();
                basis_[i].push_back(StrandBasisElement{g, j, mono});
            }
        }
    }

    // d(e_G (x) m) = sum_{g in G} sign(g,G) e_{G\g} (x) X_g m,
    // dropping terms whose carrier enters the ideal
    diff_.reserve(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        const std::size_t rows = i == 0 ? 0 : basis_[i - 1].size();
        DenseMatrix d(field_, rows, basis_[i].size());
        if (i > 0) {
            for (std::size_t c = 0; c < basis_[i].size(); ++c) {
                const auto& el = basis_[i][c];
                for (std::size_t g : el.wedge.elements()) {
                    Monomial moved = el.carrier.times_var(g);
                    if (m.summands()[el.summand].ideal.contains(moved)) continue;
                    long long r = index_of(el.wedge.without(g), el.summand);
                    if (r < 0) throw std::logic_error("strand differential target missing");
                    const bool neg = koszul_sign_count(el.wedge, g) % 2 != 0;
                    d.at(static_cast<std::size_t>(r), c) = neg ? field_.neg(field_.one())
                                                               : field_.one();
                }
            }
        }
        diff_.push_back(std::move(d));
    }
}

const std::vector<StrandBasisElement>& StrandComplex::basis(int i) const {
    static const std::vector<StrandBasisElement> kEmpty;
    if (i < 0 || static_cast<std::size_t>(i) >= basis_.size()) return kEmpty;
    return basis_[static_cast<std::size_t>(i)];
}

std::size_t StrandComplex::dim(int i) const { return basis(i).size(); }

const DenseMatrix& StrandComplex::differential(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= diff_.size())
        throw std::out_of_range("strand differential index");
    return diff_[static_cast<std::size_t>(i)];
}

long long StrandComplex::index_of(const VarSet& wedge, std::size_t summand) const {
    const std::size_t i = wedge.size();
    if (i >= index_.size()) return -1;
    auto it = index_[i].find({wedge.mask(), summand});
    return it == index_[i].end() ? -1 : static_cast<long long>(it->second);
}

long long StrandComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        chi += (i % 2 ? -1 : 1) * static_cast<long long>(basis_[i].size());
    return chi;
}

ChainMap chain_iota(const StrandComplex& small, const StrandComplex& big, std::size_t s) {
    if (small.var_set().contains(s) || !big.var_set().contains(s) ||
        big.var_set().without(s) != small.var_set())
        throw std::invalid_argument("chain_iota: strand keys do not differ by s");
    ChainMap f;
    f.hshift = 0;
    const Field& k = small.field();
    for (std::size_t i = 0; i < small.positions(); ++i) {
        DenseMatrix m(k, big.dim(static_cast<int>(i)), small.dim(static_cast<int>(i)));
        for (std::size_t c = 0; c < small.dim(static_cast<int>(i)); ++c) {
            const auto& el = small.basis(static_cast<int>(i))[c];
            long long r = big.index_of(el.wedge, el.summand);
            if (r < 0) throw std::logic_error("chain_iota: image basis element missing");
            m.at(static_cast<std::size_t>(r), c) = k.one();
        }
        f.mats.push_back(std::move(m));
    }
    return f;
}

ChainMap chain_pi(const StrandComplex& big, const StrandComplex& target, std::size_t s) {
    if (!big.var_set().contains(s) || target.var_set() != big.var_set().without(s))
        throw std::invalid_argument("chain_pi: strand keys do not differ by s");
    ChainMap f;
    f.hshift = -1;
    const Field& k = big.field();
    for (std::size_t i = 0; i < big.positions(); ++i) {
        const std::size_t rows =
            i == 0 ? 0 : target.dim(static_cast<int>(i) - 1);
        DenseMatrix m(k, rows, big.dim(static_cast<int>(i)));
        for (std::size_t c = 0; c < big.dim(static_cast<int>(i)); ++c) {
            const auto& el = big.basis(static_cast<int>(i))[c];
            if (!el.wedge.contains(s)) continue;
            long long r = target.index_of(el.wedge.without(s), el.summand);
            if (r < 0) throw std::logic_error("chain_pi: image basis element missing");
            const bool neg = koszul_sign_count(el.wedge, s) % 2 != 0;
            m.at(static_cast<std::size_t>(r), c) = neg ? k.neg(k.one()) : k.one();
        }
        f.mats.push_back(std::move(m));
    }
    return f;
}

ChainMap chain_del(const StrandComplex& lower, const StrandComplex& upper, std::size_t s) {
    if (lower.var_set() != upper.var_set())
        throw std::invalid_argument("chain_del: variable sets differ");
    if (!(lower.degree() + Multidegree::unit(lower.degree().size(), s) == upper.degree()))
        throw std::invalid_argument("chain_del: degrees do not differ by e_s");
    ChainMap f;
    f.hshift = 0;
    const Field& k = lower.field();
    for (std::size_t i = 0; i < lower.positions(); ++i) {
        DenseMatrix m(k, upper.dim(static_cast<int>(i)), lower.dim(static_cast<int>(i)));
        for (std::size_t c = 0; c < lower.dim(static_cast<int>(i)); ++c) {
            const auto& el = lower.basis(static_cast<int>(i))[c];
            // the target carrier is X_s * m by degree bookkeeping; the (G, j)
            // slot is absent from the upper strand exactly when X_s * m lands
            // in the ideal, which drops the term
            long long r = upper.index_of(el.wedge, el.summand);
            if (r >= 0) m.at(static_cast<std::size_t>(r), c) = k.one();
        }
        f.mats.push_back(std::move(m));
    }
    return f;
}

FundamentalMaps fundamental_chain_maps(const ModulePresentation& m, VarSet f, std::size_t s,
                                       const Multidegree& a, const Field& field) {
    if (f.contains(s)) throw std::invalid_argument("fundamental maps need s outside F");
    if (s >= m.vars()) throw std::invalid_argument("variable index outside the ring");
    Multidegree below = a - Multidegree::unit(m.vars(), s);
    StrandComplex small_at_a(m, f, a, field);
    StrandComplex big_at_a(m, f.with(s), a, field);
    StrandComplex small_below(m, f, below, field);
    ChainMap iota = chain_iota(small_at_a, big_at_a, s);
    ChainMap pi = chain_pi(big_at_a, small_below, s);
    ChainMap del = chain_del(small_below, small_at_a, s);
    return FundamentalMaps{std::move(small_at_a), std::move(big_at_a), std::move(small_below),
                           std::move(iota), std::move(pi), std::move(del)};
}

}  // namespace multigrad
