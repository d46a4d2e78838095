#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "multigrad/cache.hpp"
#include "multigrad/polyseq.hpp"

namespace multigrad {

// The Koszul-homology polyseq of a monomial module: H_i(F)_a is the homology
// of the degree-a strand of the Koszul complex on the variables in F. Strands,
// groups and induced maps are memoized; the cache tolerates concurrent
// insert-or-get of the same key.
class KoszulPolyseq final : public PolyseqInstance {
public:
    KoszulPolyseq(ModulePresentation module, Field field,
                  const StrandDimsCache* dims_cache = nullptr);

    const ModulePresentation& module() const { return module_; }

    std::size_t vars() const override { return module_.vars(); }
    const Field& field() const override { return field_; }

    std::size_t group_dim(const GroupKey& key) override;
    DenseMatrix induced_iota(VarSet f, int i, const Multidegree& a, std::size_t s) override;
    DenseMatrix induced_pi(VarSet f, int i, const Multidegree& a, std::size_t s) override;
    DenseMatrix induced_del(VarSet f, int i, const Multidegree& a, std::size_t s) override;
    HomologyClass lift_iota(VarSet f, int i, const Multidegree& a, std::size_t s,
                            const HomologyClass& y) override;
    HomologyClass lift_del(VarSet f, int i, const Multidegree& a, std::size_t s,
                           const HomologyClass& y) override;
    HomologyClass class_from_coordinates(const GroupKey& key,
                                         std::vector<Scalar> coords) override;
    bool recheck_nonzero(const GroupKey& key, const std::vector<Scalar>& chain) override;

    // memoized accessors
    const StrandComplex& strand(VarSet f, const Multidegree& a);
    const HomologyGroup& group(const GroupKey& key);

    // homology dimensions for i = 0..|F| at (F, a); answered from the disk
    // cache when one is attached
    std::vector<std::size_t> homology_dims(VarSet f, const Multidegree& a);

    std::string dims_cache_key(VarSet f, const Multidegree& a) const;

private:
    ModulePresentation module_;
    Field field_;
    const StrandDimsCache* dims_cache_;

    using StrandKey = std::pair<std::uint32_t, std::vector<int>>;
    mutable std::mutex mu_;
    std::map<StrandKey, std::shared_ptr<const StrandComplex>> strands_;
    std::map<GroupKey, std::shared_ptr<const HomologyGroup>> groups_;
};

}  // namespace multigrad
