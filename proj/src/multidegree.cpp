#include "multigrad/multidegree.hpp"

#include <algorithm>
#include <stdexcept>

namespace multigrad {

Multidegree Multidegree::unit(std::size_t n, std::size_t i) {
    Multidegree d(n);
    d.e_[i] = 1;
    return d;
}

Multidegree Multidegree::operator+(const Multidegree& o) const {
    if (size() != o.size()) throw std::invalid_argument("multidegree length mismatch");
    Multidegree r(*this);
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Multidegree Multidegree::operator-(const Multidegree& o) const {
    if (size() != o.size()) throw std::invalid_argument("multidegree length mismatch");
    Multidegree r(*this);
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

bool Multidegree::leq(const Multidegree& o) const {
    if (size() != o.size()) throw std::invalid_argument("multidegree length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Multidegree Multidegree::join(const Multidegree& o) const {
    if (size() != o.size()) throw std::invalid_argument("multidegree length mismatch");
    Multidegree r(*this);
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
    return r;
}

long long Multidegree::total() const {
    long long s = 0;
    for (int x : e_) s += x;
    return s;
}

bool Multidegree::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

std::vector<std::size_t> Multidegree::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] != 0) s.push_back(i);
    return s;
}

bool Multidegree::lex_less(const Multidegree& o) const {
    return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
}

std::string Multidegree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

std::vector<std::size_t> VarSet::elements() const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < 32; ++i)
        if (contains(i)) v.push_back(i);
    return v;
}

std::string VarSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : elements()) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

std::vector<VarSet> subsets_of_size(const std::vector<std::size_t>& ground, std::size_t k) {
    std::vector<VarSet> out;
    if (k > ground.size()) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VarSet s;
        for (std::size_t i : idx) s = s.with(ground[i]);
        out.push_back(s);
        // advance to the lexicographically next index tuple
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == ground.size() - (k - pos) - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

int koszul_sign_count(const VarSet& s, std::size_t i) {
    std::uint32_t below = s.mask() & ((std::uint32_t{1} << i) - 1);
    return __builtin_popcount(below);
}

std::vector<Multidegree> degrees_in_box(const Multidegree& hi) {
    std::vector<Multidegree> out;
    if (!hi.is_nonnegative()) return out;
    Multidegree cur(hi.size());
    while (true) {
        out.push_back(cur);
        std::size_t k = hi.size();
        while (k > 0 && cur[k - 1] == hi[k - 1]) {
            cur[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
        cur[k - 1] += 1;
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace multigrad
