#pragma once

#include <vector>

#include "multigrad/koszul.hpp"

namespace multigrad {

// Raised when a linear system the exactness of the fundamental sequence
// guarantees solvable turns out inconsistent. Always a defect, never input.
struct exactness_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct GroupKey {
    VarSet f;
    int i = 0;
    Multidegree a;

    bool operator==(const GroupKey& o) const { return f == o.f && i == o.i && a == o.a; }
    bool operator<(const GroupKey& o) const {
        if (f != o.f) return f < o.f;
        if (i != o.i) return i < o.i;
        return a.lex_less(o.a);
    }
    std::string to_string() const;
};

// H_i(F)_a with stored cycle representatives and the matrices needed to
// decompose an arbitrary cycle against them.
class HomologyGroup {
public:
    HomologyGroup(GroupKey key, const StrandComplex& strand);

    const GroupKey& key() const { return key_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return reps_.cols(); }
    std::size_t position_dim() const { return d_in_.cols(); }

    const DenseMatrix& representatives() const { return reps_; }     // columns are cycles
    const DenseMatrix& boundary_basis() const { return boundaries_; }
    const DenseMatrix& cycle_basis() const { return cycles_; }
    const DenseMatrix& outgoing_differential() const { return d_in_; }  // d_i of the strand

    std::vector<Scalar> representative(std::size_t k) const { return reps_.column(k); }

private:
    GroupKey key_;
    Field field_;
    DenseMatrix d_in_;        // d_i : position i -> i-1 (cycle test)
    DenseMatrix cycles_;      // nullspace basis of d_i, one column per cycle
    DenseMatrix boundaries_;  // pivot columns of d_{i+1}, a basis of the image
    DenseMatrix reps_;        // cycle columns completing boundaries_ to the cycle space
};

// A (possibly zero) homology class: coordinates in the group's representative
// basis plus the canonical chain representative reps * coords.
struct HomologyClass {
    GroupKey key;
    std::vector<Scalar> coords;
    std::vector<Scalar> chain;

    bool is_zero(const Field& f) const { return is_zero_vector(f, coords); }
};

HomologyClass class_from_coords(const HomologyGroup& g, std::vector<Scalar> coords);

// Coordinates of the cycle z modulo boundaries; z must satisfy d z = 0.
HomologyClass class_of_cycle(const HomologyGroup& g, const std::vector<Scalar>& z);

// Matrix of the map induced on homology by the chain-level matrix f between
// the underlying strand positions (tgt.dim x src.dim).
DenseMatrix induced_map(const HomologyGroup& src, const HomologyGroup& tgt, const DenseMatrix& f);

// Given y in H_i(F+s)_a with pi_s(y) = 0, find y' in H_i(F)_a with
// iota_s(y') = y, by solving iota(z) + d(w) = rep(y) at chain level.
HomologyClass lift_through_iota(const HomologyGroup& h_small, const HomologyGroup& h_big,
                                const StrandComplex& big, const ChainMap& iota,
                                const HomologyClass& y);

// Given y in H_i(F)_a with iota_s(y) = 0, find y' in H_i(F)_{a-e_s} with
// del_s(y') = y, by solving X_s z' + d(w) = rep(y) at chain level.
HomologyClass lift_through_del(const HomologyGroup& h_lower, const HomologyGroup& h_upper,
                               const StrandComplex& upper, const ChainMap& del,
                               const HomologyClass& y);

}  // namespace multigrad
