#pragma once

#include <map>
#include <vector>

#include "multigrad/matrix.hpp"
#include "multigrad/monomial.hpp"

namespace multigrad {

// One basis element e_G (x) m of a Koszul strand: G is the wedge index set,
// the carrier (j, m) a basis element of the coefficient module.
struct StrandBasisElement {
    VarSet wedge;          // G, subset of F, |G| = homological position
    std::size_t summand;   // j
    Monomial carrier;      // m, not in I_j; epsilon_G + a_j + deg(m) = a
};

// The degree-a strand of the Koszul complex on the variables in F with
// coefficients in M. Positions run 0..|F|; differential d_i maps position i
// to position i-1 (d_0 has zero rows).
class StrandComplex {
public:
    StrandComplex(const ModulePresentation& m, VarSet f, Multidegree a, const Field& field);

    VarSet var_set() const { return f_; }
    const Multidegree& degree() const { return a_; }
    const Field& field() const { return field_; }
    std::size_t positions() const { return basis_.size(); }  // |F| + 1

    const std::vector<StrandBasisElement>& basis(int i) const;
    std::size_t dim(int i) const;
    const DenseMatrix& differential(int i) const;  // position i -> i-1

    // index of (G, j) within position |G|; -1 if absent
    long long index_of(const VarSet& wedge, std::size_t summand) const;

    long long euler_characteristic() const;

private:
    VarSet f_;
    Multidegree a_;
    Field field_;
    std::vector<std::vector<StrandBasisElement>> basis_;
    std::vector<DenseMatrix> diff_;
    std::vector<std::map<std::pair<std::uint32_t, std::size_t>, std::size_t>> index_;
};

// A chain map between two strands, one matrix per source position; maps
// position i of the source to position i + hshift of the target.
struct ChainMap {
    int hshift = 0;
    std::vector<DenseMatrix> mats;

    const DenseMatrix& at(int source_position) const { return mats.at(source_position); }
};

// Basis inclusion K(F;M)_a -> K(F+s;M)_a.
ChainMap chain_iota(const StrandComplex& small, const StrandComplex& big, std::size_t s);

// e_s-component projection K(F+s;M)_a -> K(F;M)_{a-e_s}, homological shift -1:
// e_G (x) m -> sign(s,G) e_{G\s} (x) m when s in G, else 0.
ChainMap chain_pi(const StrandComplex& big, const StrandComplex& target, std::size_t s);

// Multiplication by X_s on carriers, K(F;M)_{a-e_s} -> K(F;M)_a; terms whose
// carrier lands in the summand's ideal are dropped.
ChainMap chain_del(const StrandComplex& lower, const StrandComplex& upper, std::size_t s);

// The three chain maps of the fundamental exact sequence at (F, a, s), s not
// in F, built on freshly constructed strands:
//   iota: K(F)_a -> K(F+s)_a,  pi: K(F+s)_a -> K(F)_{a-e_s}[-1],
//   del:  K(F)_{a-e_s} -> K(F)_a.
struct FundamentalMaps {
    StrandComplex small_at_a;       // K(F; M)_a
    StrandComplex big_at_a;         // K(F+s; M)_a
    StrandComplex small_below;      // K(F; M)_{a-e_s}
    ChainMap iota, pi, del;
};
FundamentalMaps fundamental_chain_maps(const ModulePresentation& m, VarSet f, std::size_t s,
                                       const Multidegree& a, const Field& field);

}  // namespace multigrad
