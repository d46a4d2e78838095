#include "multigrad/taylor.hpp"

#include <stdexcept>

namespace multigrad {

namespace {

Multidegree lcm_of_subset(const std::vector<Monomial>& gens, std::uint32_t sigma,
                          std::size_t n) {
    Multidegree l(n);
    for (std::size_t k = 0; k < gens.size(); ++k)
        if ((sigma >> k) & 1) l = l.join(gens[k].deg);
    return l;
}

}  // namespace

TaylorStrand::TaylorStrand(const ModulePresentation& m, const ModulePresentation& n,
                           Multidegree a, const Field& field)
    : a_(std::move(a)), field_(field) {
    if (m.vars() != n.vars()) throw std::invalid_argument("module pair over different rings");
    if (a_.size() != m.vars()) throw std::invalid_argument("degree arity mismatch");

    std::size_t top = 0;
    for (const auto& sm : m.summands()) top = std::max(top, sm.ideal.generators().size());
    basis_.resize(top + 1);
    index_.resize(top + 1);

    for (std::size_t j = 0; j < m.summands().size(); ++j) {
        const auto& sm = m.summands()[j];
        const auto& gens = sm.ideal.generators();
        std::vector<std::size_t> ground(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) ground[k] = k;
        for (std::size_t i = 0; i <= gens.size(); ++i) {
            for (const VarSet& sig : subsets_of_size(ground, i)) {
                Multidegree rest = a_ - sm.shift - lcm_of_subset(gens, sig.mask(), m.vars());
                for (const auto& [k, w] : n.degree_basis(rest)) {
                    index_[i][{j, sig.mask(), k}] = basis_[i].size();
                    basis_[i].push_back(TaylorBasisElement{j, sig.mask(), k, w});
                }
            }
        }
    }

    // d(e_sigma (x) u) = sum_{g in sigma} sign(g, sigma)
    //                    e_{sigma \ g} (x) X^(lcm sigma - lcm(sigma\g)) u
    diff_.reserve(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        const std::size_t rows = i == 0 ? 0 : basis_[i - 1].size();
        DenseMatrix d(field_, rows, basis_[i].size());
        if (i > 0) {
            for (std::size_t c = 0; c < basis_[i].size(); ++c) {
                const auto& el = basis_[i][c];
                const auto& gens = m.summands()[el.m_summand].ideal.generators();
                const Multidegree full = lcm_of_subset(gens, el.sigma, m.vars());
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    if (!((el.sigma >> g) & 1)) continue;
                    const std::uint32_t sub = el.sigma & ~(std::uint32_t{1} << g);
                    Multidegree shrink = full - lcm_of_subset(gens, sub, m.vars());
                    Monomial moved = el.carrier.times(Monomial(shrink));
                    if (n.summands()[el.n_summand].ideal.contains(moved)) continue;
                    auto it = index_[i - 1].find({el.m_summand, sub, el.n_summand});
                    if (it == index_[i - 1].end())
                        throw std::logic_error("taylor differential target missing");
                    const bool neg = koszul_sign_count(VarSet(el.sigma), g) % 2 != 0;
                    d.at(it->second, c) = neg ? field_.neg(field_.one()) : field_.one();
                }
            }
        }
        diff_.push_back(std::move(d));
    }
}

const std::vector<TaylorBasisElement>& TaylorStrand::basis(int i) const {
    static const std::vector<TaylorBasisElement> kEmpty;
    if (i < 0 || static_cast<std::size_t>(i) >= basis_.size()) return kEmpty;
    return basis_[static_cast<std::size_t>(i)];
}

const DenseMatrix& TaylorStrand::differential(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= diff_.size())
        throw std::out_of_range("taylor differential index");
    return diff_[static_cast<std::size_t>(i)];
}

std::vector<std::size_t> TaylorStrand::homology_dims() const {
    std::vector<std::size_t> dims(basis_.size());
    std::vector<std::size_t> ranks(basis_.size() + 1, 0);
    for (std::size_t i = 0; i < diff_.size(); ++i) ranks[i] = rank(diff_[i]);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t next = i + 1 < diff_.size() ? ranks[i + 1] : 0;
        dims[i] = basis_[i].size() - ranks[i] - next;
    }
    return dims;
}

long long TaylorStrand::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        chi += (i % 2 ? -1 : 1) * static_cast<long long>(basis_[i].size());
    return chi;
}

std::vector<std::size_t> tor_dims(const ModulePresentation& m, const ModulePresentation& n,
                                  const Multidegree& a, const Field& field) {
    return TaylorStrand(m, n, a, field).homology_dims();
}

TorScanner::TorScanner(ModulePresentation m, ModulePresentation n, Field field)
    : m_(std::move(m)), n_(std::move(n)), field_(std::move(field)) {}

const std::vector<std::size_t>& TorScanner::dims_at(const Multidegree& b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(b, tor_dims(m_, n_, b, field_)).first->second;
}

std::size_t TorScanner::dim_at(const Multidegree& b, int i) {
    if (i < 0) return 0;
    const auto& dims = dims_at(b);
    return static_cast<std::size_t>(i) < dims.size() ? dims[static_cast<std::size_t>(i)] : 0;
}

Multidegree TorScanner::scan_bound() const {
    return m_.degree_bound().join(n_.degree_bound());
}

TorBoundsReport check_tor_bounds(TorScanner& scanner, int p, const Multidegree& a) {
    TorBoundsReport rep;
    rep.p = p;
    rep.a = a;
    rep.hypothesis_holds = scanner.dim_at(a, p) != 0;
    if (!rep.hypothesis_holds) return rep;

    const long long total = a.total();
    for (int i = 0; i <= p; ++i) {
        TorBoundsCheck chk;
        chk.i = i;
        chk.bound = binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(i));
        for (const Multidegree& b : degrees_in_box(a)) {
            if (b.total() > total - p + i) continue;
            if (scanner.dim_at(b, i) != 0) ++chk.distinct_degrees;
        }
        chk.pass = chk.distinct_degrees >= chk.bound;
        rep.pass = rep.pass && chk.pass;
        rep.checks.push_back(chk);
    }
    return rep;
}

}  // namespace multigrad
