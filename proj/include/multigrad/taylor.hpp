#pragma once

#include <map>
#include <vector>

#include "multigrad/matrix.hpp"
#include "multigrad/monomial.hpp"

namespace multigrad {

// One basis element e_sigma (x) u of the degree-a strand of the Taylor
// resolution of M tensored with N: sigma indexes generators of the ideal of
// M's summand, u = (k, w) a basis element of N at degree a - a_j - lcm(sigma).
struct TaylorBasisElement {
    std::size_t m_summand;   // j
    std::uint32_t sigma;     // generator subset of I_j, bitmask
    std::size_t n_summand;   // k
    Monomial carrier;        // w, not in I_k
};

// The degree-a strand of Taylor(M) (x) N; homology at position i is
// Tor_i(M, N)_a. Positions run 0..max generator count over M's summands.
class TaylorStrand {
public:
    TaylorStrand(const ModulePresentation& m, const ModulePresentation& n, Multidegree a,
                 const Field& field);

    const Multidegree& degree() const { return a_; }
    std::size_t positions() const { return basis_.size(); }
    const std::vector<TaylorBasisElement>& basis(int i) const;
    std::size_t dim(int i) const { return basis(i).size(); }
    const DenseMatrix& differential(int i) const;

    std::vector<std::size_t> homology_dims() const;
    long long euler_characteristic() const;

private:
    Multidegree a_;
    Field field_;
    std::vector<std::vector<TaylorBasisElement>> basis_;
    std::vector<DenseMatrix> diff_;
    std::vector<std::map<std::tuple<std::size_t, std::uint32_t, std::size_t>, std::size_t>> index_;
};

std::vector<std::size_t> tor_dims(const ModulePresentation& m, const ModulePresentation& n,
                                  const Multidegree& a, const Field& field);

// Memoizing per-degree Tor scanner for box scans over a fixed module pair.
class TorScanner {
public:
    TorScanner(ModulePresentation m, ModulePresentation n, Field field);

    const ModulePresentation& left() const { return m_; }
    const ModulePresentation& right() const { return n_; }
    const Field& field() const { return field_; }

    const std::vector<std::size_t>& dims_at(const Multidegree& b);
    std::size_t dim_at(const Multidegree& b, int i);

    // componentwise max of the two modules' degree bounds; Tor restricted to
    // the box [0, bound] is what the bound suite scans
    Multidegree scan_bound() const;

private:
    ModulePresentation m_, n_;
    Field field_;
    std::map<Multidegree, std::vector<std::size_t>, MultidegreeLexLess> cache_;
};

struct TorBoundsCheck {
    int i = 0;
    std::size_t distinct_degrees = 0;  // count of b <= a, |b| <= |a|-p+i with Tor_i nonzero
    std::uint64_t bound = 0;           // C(p, i)
    bool pass = false;
};

struct TorBoundsReport {
    int p = 0;
    Multidegree a;
    bool hypothesis_holds = false;  // Tor_p(M,N)_a != 0
    std::vector<TorBoundsCheck> checks;
    bool pass = true;  // all per-i checks (vacuously true when hypothesis fails)
};

// For each i <= p, count the degrees b <= a with |b| <= |a| - p + i and
// Tor_i(M,N)_b nonzero, and compare against C(p,i).
TorBoundsReport check_tor_bounds(TorScanner& scanner, int p, const Multidegree& a);

}  // namespace multigrad
