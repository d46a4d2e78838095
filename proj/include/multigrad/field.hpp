#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace multigrad {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime_field, rationals };

// Coefficient field: GF(p) for a prime p, or the exact rationals.
struct FieldSpec {
    FieldKind kind = FieldKind::prime_field;
    std::uint64_t characteristic = 32003;  // meaningful only for prime_field

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t p);

// A field element. Residues of GF(p) are stored canonically in [0, p);
// rationals are stored reduced.
using Scalar = std::variant<std::uint64_t, Rational>;

// Arithmetic context for Scalar values. All operations are exact.
class Field {
public:
    Field() : Field(FieldSpec{}) {}
    explicit Field(FieldSpec spec);

    static Field prime(std::uint64_t p) { return Field(FieldSpec{FieldKind::prime_field, p}); }
    static Field rationals() { return Field(FieldSpec{FieldKind::rationals, 0}); }

    const FieldSpec& spec() const { return spec_; }
    FieldKind kind() const { return spec_.kind; }
    std::uint64_t characteristic() const {
        return spec_.kind == FieldKind::prime_field ? spec_.characteristic : 0;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws on zero

    bool is_zero(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    // Canonical text form: decimal residue for GF(p), reduced fraction
    // ("3/4", integers without "/1") for rationals.
    std::string to_string(const Scalar& a) const;

    std::string name() const;  // "gf:32003", "rationals"

    bool operator==(const Field& o) const { return spec_ == o.spec_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldSpec spec_;

    std::uint64_t res(const Scalar& a) const { return std::get<std::uint64_t>(a); }
    const Rational& rat(const Scalar& a) const { return std::get<Rational>(a); }
};

}  // namespace multigrad
