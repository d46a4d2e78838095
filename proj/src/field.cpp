#include "multigrad/field.hpp"

namespace multigrad {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::prime_field) {
        if (!is_prime(spec_.characteristic))
            throw std::invalid_argument("field characteristic " +
                                        std::to_string(spec_.characteristic) + " is not prime");
        if (spec_.characteristic > (std::uint64_t{1} << 31))
            throw std::invalid_argument("field characteristic too large (must fit in 31 bits)");
    } else {
        spec_.characteristic = 0;
    }
}

Scalar Field::zero() const {
    if (kind() == FieldKind::prime_field) return std::uint64_t{0};
    return Rational(0);
}

Scalar Field::one() const {
    if (kind() == FieldKind::prime_field) return std::uint64_t{1} % spec_.characteristic;
    return Rational(1);
}

Scalar Field::from_int(long long v) const {
    if (kind() == FieldKind::prime_field) {
        const auto p = static_cast<long long>(spec_.characteristic);
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    }
    return Rational(v);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind() == FieldKind::prime_field) {
        std::uint64_t s = res(a) + res(b);
        if (s >= spec_.characteristic) s -= spec_.characteristic;
        return s;
    }
    return Rational(rat(a) + rat(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind() == FieldKind::prime_field) {
        std::uint64_t x = res(a), y = res(b);
        return x >= y ? x - y : x + spec_.characteristic - y;
    }
    return Rational(rat(a) - rat(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind() == FieldKind::prime_field)
        return (res(a) * res(b)) % spec_.characteristic;  // p < 2^31, no overflow
    return Rational(rat(a) * rat(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind() == FieldKind::prime_field) {
        std::uint64_t x = res(a);
        return x == 0 ? x : spec_.characteristic - x;
    }
    return Rational(-rat(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::invalid_argument("division by zero field element");
    if (kind() == FieldKind::rationals) return Rational(1 / rat(a));
    // extended Euclid on (a, p)
    std::int64_t p = static_cast<std::int64_t>(spec_.characteristic);
    std::int64_t r0 = static_cast<std::int64_t>(res(a)), r1 = p;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t s = s0 % p;
    if (s < 0) s += p;
    return static_cast<std::uint64_t>(s);
}

bool Field::is_zero(const Scalar& a) const {
    if (kind() == FieldKind::prime_field) return res(a) == 0;
    return rat(a) == 0;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind() == FieldKind::prime_field) return res(a) == res(b);
    return rat(a) == rat(b);
}

std::string Field::to_string(const Scalar& a) const {
    if (kind() == FieldKind::prime_field) return std::to_string(res(a));
    const Rational& q = rat(a);
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return q.str();
}

std::string Field::name() const {
    if (kind() == FieldKind::prime_field) return "gf:" + std::to_string(spec_.characteristic);
    return "rationals";
}

}  // namespace multigrad
