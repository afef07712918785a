#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace locmem {

/// Thrown for malformed or inconsistent caller input (dimension or field
/// mismatch, out-of-range parameters, violated preconditions).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t p);

/// Exact coefficient field: the rationals (modulus 0) or F_p.
///
/// Elements are carried as mpq_class. Over F_p every value is an integer
/// in [0, p); over Q values are kept in lowest terms by GMP.
class Field {
public:
    constexpr Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t modulus() const { return p_; }

    /// "Q" or "Fp 5".
    std::string name() const;

    mpq_class canonical(const mpq_class& v) const;
    mpq_class from_int(long v) const { return canonical(mpq_class(v)); }

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit constexpr Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

void require_same_field(const Field& a, const Field& b);

/// An element of an exact field, tagged with its field.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, const mpq_class& v) : field_(f), value_(f.canonical(v)) {}
    Scalar(Field f, long v) : Scalar(f, mpq_class(v)) {}

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const { return Scalar(field_, field_.neg(value_)); }
    Scalar inverse() const { return Scalar(field_, field_.inv(value_)); }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

    std::string to_string() const { return value_.get_str(); }

private:
    Field field_;
    mpq_class value_{0};
};

}  // namespace locmem
