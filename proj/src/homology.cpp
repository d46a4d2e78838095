#include "multigrad/homology.hpp"

namespace multigrad {

std::string GroupKey::to_string() const {
    return "H_" + std::to_string(i) + "(" + f.to_string() + ")_" + a.to_string();
}

namespace {

// Basis of the image: the columns of d at its rref pivot indices.
DenseMatrix image_basis(const DenseMatrix& d) {
    RrefResult rr = rref(d);
    DenseMatrix b(d.field(), d.rows(), rr.rank);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
        for (std::size_t r = 0; r < d.rows(); ++r) b.at(r, k) = d.at(r, rr.pivot_cols[k]);
    return b;
}

}  // namespace

HomologyGroup::HomologyGroup(GroupKey key, const StrandComplex& strand)
    : key_(std::move(key)), field_(strand.field()), d_in_(strand.field(), 0, 0),
      cycles_(strand.field(), 0, 0), boundaries_(strand.field(), 0, 0),
      reps_(strand.field(), 0, 0) {
    const int i = key_.i;
    const std::size_t pos_dim = strand.dim(i);
    const int top = static_cast<int>(strand.positions()) - 1;
    if (i < 0 || i > top) return;  // structurally zero group

    d_in_ = strand.differential(i);
    cycles_ = DenseMatrix::from_columns(field_, pos_dim, nullspace(d_in_));
    boundaries_ = i + 1 <= top ? image_basis(strand.differential(i + 1))
                               : DenseMatrix(field_, pos_dim, 0);

    // pick cycle-basis columns completing the boundary basis, via the pivot
    // structure of [boundaries | cycles]; deterministic
    RrefResult rr = rref(hconcat(boundaries_, cycles_));
    std::vector<std::vector<Scalar>> chosen;
    for (std::size_t p : rr.pivot_cols)
        if (p >= boundaries_.cols()) chosen.push_back(cycles_.column(p - boundaries_.cols()));
    reps_ = DenseMatrix::from_columns(field_, pos_dim, chosen);
}

HomologyClass class_from_coords(const HomologyGroup& g, std::vector<Scalar> coords) {
    if (coords.size() != g.dim()) throw std::invalid_argument("class coordinate length mismatch");
    std::vector<Scalar> chain = mat_apply(g.representatives(), coords);
    return HomologyClass{g.key(), std::move(coords), std::move(chain)};
}

HomologyClass class_of_cycle(const HomologyGroup& g, const std::vector<Scalar>& z) {
    const Field& f = g.field();
    if (z.size() != g.position_dim()) throw std::invalid_argument("cycle length mismatch");
    if (!is_zero_vector(f, mat_apply(g.outgoing_differential(), z)))
        throw std::invalid_argument("class_of_cycle: input is not a cycle");
    auto x = solve(hconcat(g.representatives(), g.boundary_basis()), z);
    if (!x) throw exactness_error("cycle fails to decompose against representatives");
    std::vector<Scalar> coords(x->begin(), x->begin() + static_cast<long>(g.dim()));
    return class_from_coords(g, std::move(coords));
}

DenseMatrix induced_map(const HomologyGroup& src, const HomologyGroup& tgt,
                        const DenseMatrix& f) {
    const Field& k = src.field();
    DenseMatrix out(k, tgt.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
        HomologyClass img = class_of_cycle(tgt, mat_apply(f, src.representative(c)));
        for (std::size_t r = 0; r < tgt.dim(); ++r) out.at(r, c) = img.coords[r];
    }
    return out;
}

namespace {

// Solve map(cycles_src * c) + d_next(w) = target_chain; returns the cycle
// cycles_src * c, or throws when the system is inconsistent.
std::vector<Scalar> lift_cycle(const HomologyGroup& h_src, const DenseMatrix& chain_map,
                               const DenseMatrix& d_next, const std::vector<Scalar>& target_chain,
                               const char* what) {
    DenseMatrix sys = hconcat(mat_mul(chain_map, h_src.cycle_basis()), d_next);
    auto x = solve(sys, target_chain);
    if (!x) throw exactness_error(what);
    std::vector<Scalar> c(x->begin(), x->begin() + static_cast<long>(h_src.cycle_basis().cols()));
    return mat_apply(h_src.cycle_basis(), c);
}

}  // namespace

HomologyClass lift_through_iota(const HomologyGroup& h_small, const HomologyGroup& h_big,
                                const StrandComplex& big, const ChainMap& iota,
                                const HomologyClass& y) {
    const int i = h_big.key().i;
    DenseMatrix d_next = static_cast<std::size_t>(i + 1) < big.positions()
                             ? big.differential(i + 1)
                             : DenseMatrix(big.field(), big.dim(i), 0);
    std::vector<Scalar> z = lift_cycle(h_small, iota.at(h_small.key().i), d_next, y.chain,
                                       "lift through iota: inconsistent system");
    return class_of_cycle(h_small, z);
}

HomologyClass lift_through_del(const HomologyGroup& h_lower, const HomologyGroup& h_upper,
                               const StrandComplex& upper, const ChainMap& del,
                               const HomologyClass& y) {
    const int i = h_upper.key().i;
    DenseMatrix d_next = static_cast<std::size_t>(i + 1) < upper.positions()
                             ? upper.differential(i + 1)
                             : DenseMatrix(upper.field(), upper.dim(i), 0);
    std::vector<Scalar> z = lift_cycle(h_lower, del.at(h_lower.key().i), d_next, y.chain,
                                       "lift through del: inconsistent system");
    return class_of_cycle(h_lower, z);
}

}  // namespace multigrad
