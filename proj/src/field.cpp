#include "locmem/field.hpp"

namespace locmem {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw InputError("modulus not prime: " + std::to_string(p));
    // Point kernels multiply two residues in 64 bits.
    if (p >= (std::uint64_t{1} << 31)) throw InputError("modulus too large: " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "Fp " + std::to_string(p_);
}

mpq_class Field::canonical(const mpq_class& v) const {
    if (is_rational()) {
        mpq_class r(v);
        r.canonicalize();
        return r;
    }
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class num = v.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = v.get_den() % m;
    if (den < 0) den += m;
    if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(p_));
    if (den != 1) {
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        num = (num * dinv) % m;
    }
    return mpq_class(num);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    if (is_rational()) return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= static_cast<unsigned long>(p_)) s -= static_cast<unsigned long>(p_);
    return mpq_class(s);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    if (is_rational()) return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0) s += static_cast<unsigned long>(p_);
    return mpq_class(s);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (is_rational()) return a * b;
    mpz_class s = (a.get_num() * b.get_num()) % static_cast<unsigned long>(p_);
    return mpq_class(s);
}

mpq_class Field::neg(const mpq_class& a) const {
    if (is_rational()) return -a;
    if (sgn(a) == 0) return a;
    return mpq_class(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    if (is_rational()) return 1 / a;
    mpz_class m(static_cast<unsigned long>(p_)), r;
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t());
    return mpq_class(r);
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw InputError("field mismatch: " + a.name() + " vs " + b.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(field_, o.field_);
    return Scalar(field_, field_.add(value_, o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(field_, o.field_);
    return Scalar(field_, field_.sub(value_, o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(field_, o.field_);
    return Scalar(field_, field_.mul(value_, o.value_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(field_, o.field_);
    return Scalar(field_, field_.div(value_, o.value_));
}

}  // namespace locmem
