#include "multigrad/koszul_polyseq.hpp"

namespace multigrad {

KoszulPolyseq::KoszulPolyseq(ModulePresentation module, Field field,
                             const StrandDimsCache* dims_cache)
    : module_(std::move(module)), field_(std::move(field)), dims_cache_(dims_cache) {}

const StrandComplex& KoszulPolyseq::strand(VarSet f, const Multidegree& a) {
    StrandKey key{f.mask(), a.exponents()};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = strands_.find(key);
        if (it != strands_.end()) return *it->second;
    }
    auto built = std::make_shared<const StrandComplex>(module_, f, a, field_);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = strands_.emplace(std::move(key), std::move(built));
    return *it->second;  // first insert wins under a race
}

const HomologyGroup& KoszulPolyseq::group(const GroupKey& key) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = groups_.find(key);
        if (it != groups_.end()) return *it->second;
    }
    const StrandComplex& sc = strand(key.f, key.a);
    auto built = std::make_shared<const HomologyGroup>(key, sc);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = groups_.emplace(key, std::move(built));
    return *it->second;
}

std::size_t KoszulPolyseq::group_dim(const GroupKey& key) { return group(key).dim(); }

DenseMatrix KoszulPolyseq::induced_iota(VarSet f, int i, const Multidegree& a, std::size_t s) {
    if (f.contains(s)) throw std::invalid_argument("induced_iota: s already in F");
    const HomologyGroup& src = group({f, i, a});
    const HomologyGroup& tgt = group({f.with(s), i, a});
    if (src.dim() == 0 || tgt.dim() == 0) return DenseMatrix(field_, tgt.dim(), src.dim());
    const StrandComplex& small = strand(f, a);
    const StrandComplex& big = strand(f.with(s), a);
    return induced_map(src, tgt, chain_iota(small, big, s).at(i));
}

DenseMatrix KoszulPolyseq::induced_pi(VarSet f, int i, const Multidegree& a, std::size_t s) {
    if (f.contains(s)) throw std::invalid_argument("induced_pi: s already in F");
    const Multidegree below = a - Multidegree::unit(vars(), s);
    const HomologyGroup& src = group({f.with(s), i, a});
    const HomologyGroup& tgt = group({f, i - 1, below});
    if (src.dim() == 0 || tgt.dim() == 0) return DenseMatrix(field_, tgt.dim(), src.dim());
    const StrandComplex& big = strand(f.with(s), a);
    const StrandComplex& low = strand(f, below);
    return induced_map(src, tgt, chain_pi(big, low, s).at(i));
}

DenseMatrix KoszulPolyseq::induced_del(VarSet f, int i, const Multidegree& a, std::size_t s) {
    if (f.contains(s)) throw std::invalid_argument("induced_del: s already in F");
    const Multidegree below = a - Multidegree::unit(vars(), s);
    const HomologyGroup& src = group({f, i, below});
    const HomologyGroup& tgt = group({f, i, a});
    if (src.dim() == 0 || tgt.dim() == 0) return DenseMatrix(field_, tgt.dim(), src.dim());
    const StrandComplex& lower = strand(f, below);
    const StrandComplex& upper = strand(f, a);
    return induced_map(src, tgt, chain_del(lower, upper, s).at(i));
}

HomologyClass KoszulPolyseq::lift_iota(VarSet f, int i, const Multidegree& a, std::size_t s,
                                       const HomologyClass& y) {
    const StrandComplex& small = strand(f, a);
    const StrandComplex& big = strand(f.with(s), a);
    return lift_through_iota(group({f, i, a}), group({f.with(s), i, a}), big,
                             chain_iota(small, big, s), y);
}

HomologyClass KoszulPolyseq::lift_del(VarSet f, int i, const Multidegree& a, std::size_t s,
                                      const HomologyClass& y) {
    const Multidegree below = a - Multidegree::unit(vars(), s);
    const StrandComplex& lower = strand(f, below);
    const StrandComplex& upper = strand(f, a);
    return lift_through_del(group({f, i, below}), group({f, i, a}), upper,
                            chain_del(lower, upper, s), y);
}

HomologyClass KoszulPolyseq::class_from_coordinates(const GroupKey& key,
                                                    std::vector<Scalar> coords) {
    return class_from_coords(group(key), std::move(coords));
}

bool KoszulPolyseq::recheck_nonzero(const GroupKey& key, const std::vector<Scalar>& chain) {
    // built from scratch, bypassing every cache
    StrandComplex sc(module_, key.f, key.a, field_);
    const int top = static_cast<int>(sc.positions()) - 1;
    if (key.i < 0 || key.i > top) return false;
    if (chain.size() != sc.dim(key.i)) return false;
    if (is_zero_vector(field_, chain)) return false;
    if (!is_zero_vector(field_, mat_apply(sc.differential(key.i), chain))) return false;  // not a cycle
    DenseMatrix d_next = key.i + 1 <= top ? sc.differential(key.i + 1)
                                          : DenseMatrix(field_, sc.dim(key.i), 0);
    return !solve(d_next, chain).has_value();  // nonzero iff not a boundary
}

std::vector<std::size_t> KoszulPolyseq::homology_dims(VarSet f, const Multidegree& a) {
    const std::string key = dims_cache_ ? dims_cache_key(f, a) : std::string();
    if (dims_cache_) {
        if (auto hit = dims_cache_->load(key)) return *hit;
    }
    std::vector<std::size_t> dims;
    dims.reserve(f.size() + 1);
    for (int i = 0; i <= static_cast<int>(f.size()); ++i) dims.push_back(group({f, i, a}).dim());
    if (dims_cache_) dims_cache_->store(key, dims);
    return dims;
}

std::string KoszulPolyseq::dims_cache_key(VarSet f, const Multidegree& a) const {
    return module_.canonical_key() + "|" + field_.name() + "|F=" + std::to_string(f.mask()) +
           "|a=" + a.to_string();
}

}  // namespace multigrad
