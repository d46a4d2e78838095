#pragma once

#include <string>
#include <vector>

#include "multigrad/homology.hpp"

namespace multigrad {

// Abstract family of graded vector spaces H_i(F)_a over subsets F of the
// variables, linked for every s outside F by the five-term exact sequence
//
//   H_i(F)_{a-e_s} --del--> H_i(F)_a --iota--> H_i(F+s)_a
//                  --pi--> H_{i-1}(F)_{a-e_s} --del--> H_{i-1}(F)_a.
//
// The witness-extraction engine is written against this contract only; the
// shipped instance is Koszul homology of a monomial module.
class PolyseqInstance {
public:
    virtual ~PolyseqInstance() = default;

    virtual std::size_t vars() const = 0;
    virtual const Field& field() const = 0;

    virtual std::size_t group_dim(const GroupKey& key) = 0;

    // Induced maps of the fundamental sequence at (F, i, a, s), s not in F.
    virtual DenseMatrix induced_iota(VarSet f, int i, const Multidegree& a, std::size_t s) = 0;
    virtual DenseMatrix induced_pi(VarSet f, int i, const Multidegree& a, std::size_t s) = 0;
    virtual DenseMatrix induced_del(VarSet f, int i, const Multidegree& a, std::size_t s) = 0;

    // Preimage solvers; preconditions pi_s(y)=0 resp. iota_s(y)=0.
    virtual HomologyClass lift_iota(VarSet f, int i, const Multidegree& a, std::size_t s,
                                    const HomologyClass& y) = 0;
    virtual HomologyClass lift_del(VarSet f, int i, const Multidegree& a, std::size_t s,
                                   const HomologyClass& y) = 0;

    virtual HomologyClass class_from_coordinates(const GroupKey& key,
                                                 std::vector<Scalar> coords) = 0;

    // Nonzeroness of a class given by its chain, recomputed from scratch;
    // used by certificate validation, must not trust engine-side state.
    virtual bool recheck_nonzero(const GroupKey& key, const std::vector<Scalar>& chain) = 0;
};

// One extracted witness: a nonzero class in H_{hom_degree}(F)_{a - b}.
struct Witness {
    VarSet index_set;   // the label I
    Multidegree b;      // offset below the seed degree a; in N^n
    int hom_degree = 0;
    HomologyClass cls;
};

struct WitnessCertificate {
    VarSet f;
    VarSet excluded;
    int p = 0;
    Multidegree a;
    HomologyClass seed;
    std::vector<std::vector<Witness>> per_i;  // index i = 0..p-|excluded|
};

struct PushResult {
    int steps = 0;  // b_s
    HomologyClass cls;
};

// Move a nonzero class of H_i(F)_a into H_i(F+s)_{a - b_s e_s}: apply iota
// until it survives, lifting through del (and dropping the s-coordinate by
// one) each time it dies. Terminates because all groups vanish outside N^n.
PushResult push(PolyseqInstance& inst, std::size_t s, const HomologyClass& y);

// The extraction recursion. Guarantees at least binomial(p-r, i) witnesses
// (r = |excluded|) at homological degree p-i, with pairwise distinct degrees,
// b in N^n, |b| >= i and supp(b) inside F minus the excluded indices.
std::vector<Witness> extract(PolyseqInstance& inst, VarSet f, VarSet excluded, int p,
                             const Multidegree& a, const HomologyClass& y, int i);

// extract for every i = 0..p with F = all variables and nothing excluded.
WitnessCertificate full_certificate(PolyseqInstance& inst, int p, const Multidegree& a,
                                    const HomologyClass& y);

struct ValidationCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    bool pass = true;
    std::string first_violation;
    std::vector<ValidationCheck> checks;

    void record(const std::string& name, bool ok, const std::string& detail);
};

// Independent re-verification of a certificate: per-i counts against the
// binomials, pairwise-distinct degrees, degree positivity/support/total-degree
// constraints, and nonzeroness of every claimed class by fresh recomputation.
ValidationReport validate(PolyseqInstance& inst, const WitnessCertificate& cert);

// Exactness of the fundamental sequence at (F, i, a, s), s not in F, by exact
// rank counting at the three middle spots (composites must vanish and image
// dimension must equal kernel dimension).
struct FiveTermCheck {
    bool composites_zero = false;
    bool exact_at_del_target = false;   // at H_i(F)_a
    bool exact_at_iota_target = false;  // at H_i(F+s)_a
    bool exact_at_pi_target = false;    // at H_{i-1}(F)_{a-e_s}
    bool pass = false;
};

FiveTermCheck check_five_term(PolyseqInstance& inst, VarSet f, int i, const Multidegree& a,
                              std::size_t s);

}  // namespace multigrad
