#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace multigrad {

// Exponent vector in Z^n. Componentwise order, addition/subtraction,
// |a| = sum of entries.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::size_t n) : e_(n, 0) {}  // the zero degree in Z^n
    explicit Multidegree(std::vector<int> e) : e_(std::move(e)) {}
    Multidegree(std::initializer_list<int> e) : e_(e) {}

    static Multidegree unit(std::size_t n, std::size_t i);  // epsilon_i

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    Multidegree operator+(const Multidegree& o) const;
    Multidegree operator-(const Multidegree& o) const;

    bool operator==(const Multidegree& o) const { return e_ == o.e_; }
    bool operator!=(const Multidegree& o) const { return e_ != o.e_; }

    // componentwise <=
    bool leq(const Multidegree& o) const;
    // componentwise max
    Multidegree join(const Multidegree& o) const;

    long long total() const;  // |a|
    bool is_nonnegative() const;
    std::vector<std::size_t> support() const;  // indices with nonzero entry

    // strict lexicographic order, used as canonical tie-breaker everywhere
    bool lex_less(const Multidegree& o) const;

    std::string to_string() const;  // "(2,0,1)"

private:
    std::vector<int> e_;
};

struct MultidegreeLexLess {
    bool operator()(const Multidegree& a, const Multidegree& b) const { return a.lex_less(b); }
};

// Subset of the variable indices {0,...,n-1} as a bitmask.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::uint32_t mask) : mask_(mask) {}

    static VarSet full(std::size_t n) { return VarSet((std::uint32_t{1} << n) - 1); }
    static VarSet empty() { return VarSet(0); }

    std::uint32_t mask() const { return mask_; }
    std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(mask_)); }
    bool contains(std::size_t i) const { return (mask_ >> i) & 1u; }
    VarSet with(std::size_t i) const { return VarSet(mask_ | (std::uint32_t{1} << i)); }
    VarSet without(std::size_t i) const { return VarSet(mask_ & ~(std::uint32_t{1} << i)); }

    std::vector<std::size_t> elements() const;  // ascending

    bool operator==(const VarSet& o) const { return mask_ == o.mask_; }
    bool operator!=(const VarSet& o) const { return mask_ != o.mask_; }
    bool operator<(const VarSet& o) const { return mask_ < o.mask_; }

    std::string to_string() const;  // "{1,3}" with 1-based indices

private:
    std::uint32_t mask_ = 0;
};

// All k-element subsets of the given (ascending) ground elements, in
// lexicographic order on the index tuples.
std::vector<VarSet> subsets_of_size(const std::vector<std::size_t>& ground, std::size_t k);

// All degrees b with 0 <= b <= hi componentwise, in lexicographic order.
std::vector<Multidegree> degrees_in_box(const Multidegree& hi);

// Number of elements of s strictly smaller than i; the Koszul sign is
// (-1)^koszul_sign_count.
int koszul_sign_count(const VarSet& s, std::size_t i);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace multigrad
