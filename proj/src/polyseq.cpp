#include "multigrad/polyseq.hpp"

#include <algorithm>

namespace multigrad {

namespace {

VarSet set_difference(VarSet a, VarSet b) { return VarSet(a.mask() & ~b.mask()); }

bool subset_of(VarSet a, VarSet b) { return (a.mask() & ~b.mask()) == 0; }

}  // namespace

PushResult push(PolyseqInstance& inst, std::size_t s, const HomologyClass& y) {
    const Field& k = inst.field();
    const GroupKey key = y.key;
    if (key.f.contains(s)) throw std::invalid_argument("push: s already in F");
    if (key.i > static_cast<int>(key.f.size())) throw std::invalid_argument("push: i exceeds |F|");
    if (y.is_zero(k)) throw std::invalid_argument("push: class is zero");

    HomologyClass cur = y;
    Multidegree a = key.a;
    int steps = 0;
    while (true) {
        DenseMatrix up = inst.induced_iota(key.f, key.i, a, s);
        std::vector<Scalar> coords = mat_apply(up, cur.coords);
        if (!is_zero_vector(k, coords))
            return PushResult{steps,
                              inst.class_from_coordinates({key.f.with(s), key.i, a}, coords)};
        if (a[s] <= 0)
            throw exactness_error("push: descent below degree zero");
        cur = inst.lift_del(key.f, key.i, a, s, cur);
        if (cur.is_zero(k)) throw exactness_error("push: lift through del returned zero");
        a = a - Multidegree::unit(a.size(), s);
        ++steps;
    }
}

std::vector<Witness> extract(PolyseqInstance& inst, VarSet f, VarSet excluded, int p,
                             const Multidegree& a, const HomologyClass& y, int i) {
    const Field& k = inst.field();
    const int r = static_cast<int>(excluded.size());
    if (!subset_of(excluded, f)) throw std::invalid_argument("extract: excluded not inside F");
    if (!(0 <= r && r <= p && p <= static_cast<int>(f.size())))
        throw std::invalid_argument("extract: need 0 <= r <= p <= |F|");
    if (!(0 <= i && i <= p - r)) throw std::invalid_argument("extract: need 0 <= i <= p - r");
    if (y.is_zero(k)) throw std::invalid_argument("extract: seed class is zero");
    if (!(y.key.f == f) || y.key.i != p || !(y.key.a == a))
        throw std::invalid_argument("extract: class does not live in H_p(F)_a");

    const std::vector<std::size_t> admissible = set_difference(f, excluded).elements();

    // Case 1: the first admissible s with pi_s(y) = 0, scanned ascending.
    for (std::size_t s : admissible) {
        const VarSet smaller = f.without(s);
        std::vector<Scalar> down = mat_apply(inst.induced_pi(smaller, p, a, s), y.coords);
        if (!is_zero_vector(k, down)) continue;

        HomologyClass inner = inst.lift_iota(smaller, p, a, s, y);
        if (inner.is_zero(k)) throw exactness_error("extract: lift through iota returned zero");
        std::vector<Witness> out;
        for (const Witness& w : extract(inst, smaller, excluded, p, a, inner, i)) {
            PushResult pr = push(inst, s, w.cls);
            Multidegree b = w.b;
            b[s] += pr.steps;
            out.push_back(Witness{w.index_set.with(s), std::move(b), p - i, std::move(pr.cls)});
        }
        return out;
    }

    // Case 2: every admissible pi_s(y) is nonzero.
    if (i == 0) return {Witness{VarSet::empty(), Multidegree(a.size()), p, y}};

    std::vector<Witness> out;
    VarSet used = excluded;
    for (int j = 1; j <= p - r; ++j) {
        const std::size_t s = admissible[static_cast<std::size_t>(j - 1)];
        if (i - 1 > (p - 1) - (r + j - 1)) break;  // this and later branches contribute nothing
        const VarSet smaller = f.without(s);
        const Multidegree below = a - Multidegree::unit(a.size(), s);
        std::vector<Scalar> down = mat_apply(inst.induced_pi(smaller, p, a, s), y.coords);
        if (is_zero_vector(k, down)) throw exactness_error("extract: case-2 image vanished");
        HomologyClass branch =
            inst.class_from_coordinates({smaller, p - 1, below}, std::move(down));
        for (const Witness& w : extract(inst, smaller, used, p - 1, below, branch, i - 1)) {
            PushResult pr = push(inst, s, w.cls);
            Multidegree b = w.b;
            b[s] += 1 + pr.steps;
            out.push_back(Witness{w.index_set.with(s), std::move(b), p - i, std::move(pr.cls)});
        }
        used = used.with(s);
    }
    return out;
}

WitnessCertificate full_certificate(PolyseqInstance& inst, int p, const Multidegree& a,
                                    const HomologyClass& y) {
    const VarSet f = VarSet::full(inst.vars());
    WitnessCertificate cert{f, VarSet::empty(), p, a, y, {}};
    cert.per_i.reserve(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i <= p; ++i)
        cert.per_i.push_back(extract(inst, f, VarSet::empty(), p, a, y, i));
    return cert;
}

void ValidationReport::record(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(ValidationCheck{name, ok, detail});
    if (!ok) {
        pass = false;
        if (first_violation.empty()) first_violation = name + ": " + detail;
    }
}

FiveTermCheck check_five_term(PolyseqInstance& inst, VarSet f, int i, const Multidegree& a,
                              std::size_t s) {
    if (f.contains(s)) throw std::invalid_argument("check_five_term: s already in F");
    const Multidegree below = a - Multidegree::unit(a.size(), s);

    const DenseMatrix del_in = inst.induced_del(f, i, a, s);       // H_i(F)_{a-e} -> H_i(F)_a
    const DenseMatrix iota = inst.induced_iota(f, i, a, s);        // H_i(F)_a -> H_i(F+s)_a
    const DenseMatrix pi = inst.induced_pi(f, i, a, s);            // H_i(F+s)_a -> H_{i-1}(F)_{a-e}
    const DenseMatrix del_out = inst.induced_del(f, i - 1, a, s);  // H_{i-1}(F)_{a-e} -> ..._a

    const std::size_t dim_b = inst.group_dim({f, i, a});
    const std::size_t dim_c = inst.group_dim({f.with(s), i, a});
    const std::size_t dim_d = inst.group_dim({f, i - 1, below});

    FiveTermCheck chk;
    chk.composites_zero = mat_mul(iota, del_in).is_zero() && mat_mul(pi, iota).is_zero() &&
                          mat_mul(del_out, pi).is_zero();
    chk.exact_at_del_target = rank(del_in) == dim_b - rank(iota);
    chk.exact_at_iota_target = rank(iota) == dim_c - rank(pi);
    chk.exact_at_pi_target = rank(pi) == dim_d - rank(del_out);
    chk.pass = chk.composites_zero && chk.exact_at_del_target && chk.exact_at_iota_target &&
               chk.exact_at_pi_target;
    return chk;
}

ValidationReport validate(PolyseqInstance& inst, const WitnessCertificate& cert) {
    ValidationReport rep;
    const int r = static_cast<int>(cert.excluded.size());
    const VarSet allowed = set_difference(cert.f, cert.excluded);
    const long long seed_total = cert.a.total();

    for (std::size_t i = 0; i < cert.per_i.size(); ++i) {
        const auto& wl = cert.per_i[i];
        const std::string where = "i=" + std::to_string(i);
        const std::uint64_t bound = binomial(static_cast<std::uint64_t>(cert.p - r), i);
        rep.record(where + " count", wl.size() >= bound,
                   std::to_string(wl.size()) + " >= C(" + std::to_string(cert.p - r) + "," +
                       std::to_string(i) + ") = " + std::to_string(bound));

        std::vector<Multidegree> degs;
        for (const Witness& w : wl) degs.push_back(cert.a - w.b);
        std::sort(degs.begin(), degs.end(), MultidegreeLexLess{});
        const bool distinct = std::adjacent_find(degs.begin(), degs.end()) == degs.end();
        rep.record(where + " distinct degrees", distinct,
                   distinct ? "pairwise distinct" : "duplicate witness degree");

        for (std::size_t t = 0; t < wl.size(); ++t) {
            const Witness& w = wl[t];
            const std::string tag = where + " witness " + std::to_string(t);
            const Multidegree deg = cert.a - w.b;

            rep.record(tag + " b nonnegative", w.b.is_nonnegative(), w.b.to_string());
            rep.record(tag + " |b| >= i", w.b.total() >= static_cast<long long>(i),
                       "|" + w.b.to_string() + "| = " + std::to_string(w.b.total()));
            bool supp_ok = true;
            for (std::size_t v : w.b.support())
                if (!allowed.contains(v)) supp_ok = false;
            rep.record(tag + " support", supp_ok,
                       "supp(b) inside " + allowed.to_string());
            rep.record(tag + " homological degree", w.hom_degree == cert.p - static_cast<int>(i),
                       std::to_string(w.hom_degree));
            rep.record(tag + " degree bound",
                       deg.total() <= seed_total - static_cast<long long>(i),
                       "|deg| = " + std::to_string(deg.total()) + " <= " +
                           std::to_string(seed_total - static_cast<long long>(i)));
            const GroupKey key{cert.f, w.hom_degree, deg};
            rep.record(tag + " nonzero class", inst.recheck_nonzero(key, w.cls.chain),
                       key.to_string());
        }
    }
    return rep;
}

}  // namespace multigrad
