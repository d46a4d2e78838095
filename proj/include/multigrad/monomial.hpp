#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "multigrad/multidegree.hpp"

namespace multigrad {

// A monomial X^a with a in N^n.
struct Monomial {
    Multidegree deg;

    Monomial() = default;
    explicit Monomial(Multidegree d);
    static Monomial one(std::size_t n) { return Monomial(Multidegree(n)); }

    bool divides(const Monomial& o) const { return deg.leq(o.deg); }
    Monomial times(const Monomial& o) const { return Monomial(deg + o.deg); }
    Monomial times_var(std::size_t i) const;
    Monomial lcm(const Monomial& o) const { return Monomial(deg.join(o.deg)); }

    bool operator==(const Monomial& o) const { return deg == o.deg; }
    bool lex_less(const Monomial& o) const { return deg.lex_less(o.deg); }
};

// Monomial ideal held by its unique minimal generating set, lex-sorted.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t n) : n_(n) {}

    static MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

    std::size_t vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

    // { lcm of sigma : sigma subseteq generators }, deduplicated; includes
    // the empty lcm 0. Exponential in the generator count.
    std::set<Multidegree, MultidegreeLexLess> lcm_lattice_degrees() const;

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

private:
    std::size_t n_ = 0;
    std::vector<Monomial> gens_;
};

// Finite direct sum of shifted monomial quotients  (+)_j S/I_j(-a_j),
// with all shifts normalized into N^n.
class ModulePresentation {
public:
    struct Summand {
        Multidegree shift;  // a_j, in N^n
        MonomialIdeal ideal;
    };

    explicit ModulePresentation(std::size_t n, std::vector<Summand> summands);

    static ModulePresentation quotient(MonomialIdeal ideal);  // S/I, zero shift

    std::size_t vars() const { return n_; }
    const std::vector<Summand>& summands() const { return summands_; }

    // K-basis of the degree-a piece: all (j, m) with m = X^(a - a_j),
    // a - a_j in N^n and m not in I_j; ascending j.
    std::vector<std::pair<std::size_t, Monomial>> degree_basis(const Multidegree& a) const;

    // componentwise max over summands of a_j + lcm(all generators of I_j);
    // a box containing every degree the homology of this module can live in
    Multidegree degree_bound() const;

    std::string canonical_key() const;  // stable serialization, used for hashing

private:
    std::size_t n_;
    std::vector<Summand> summands_;
};

// Finitely supported integer Laurent-style polynomial in t_1..t_n, indexed
// by multidegree. Numerator of the Hilbert series over prod(1 - t_i).
using KPolynomial = std::map<Multidegree, long long, MultidegreeLexLess>;

KPolynomial k_polynomial(const ModulePresentation& m);

// Coefficient of t^a in k_poly / prod(1 - t_i), i.e. the Hilbert function
// of the module at a, by direct series expansion.
long long hilbert_coefficient(const KPolynomial& kp, const Multidegree& a);

}  // namespace multigrad
