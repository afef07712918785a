#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locmem/field.hpp"

namespace locmem {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    unsigned degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& o) const;
    /// Requires divides(o, *this).
    Monomial operator/(const Monomial& o) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded reverse lexicographic comparison; returns <0, 0, >0.
int compare_grevlex(const Monomial& a, const Monomial& b);
int compare_lex(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    mpq_class coeff;
};

/// Sparse multivariate polynomial over an exact field.
///
/// Terms are kept sorted by grevlex, largest first, with no zero
/// coefficients, so equal polynomials have identical term lists.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial constant(Field field, std::size_t nvars, const mpq_class& c);
    static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
    static Polynomial monomial(Field field, const Monomial& m, const mpq_class& c);
    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    /// Leading term under grevlex. Requires a nonzero polynomial.
    const Term& leading() const { return terms_.front(); }
    const mpq_class& leading_coeff() const { return terms_.front().coeff; }

    /// Maximum total degree; empty for the zero polynomial.
    std::optional<unsigned> total_degree() const;
    /// Degree of variable `var`; empty for the zero polynomial.
    std::optional<unsigned> degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const mpq_class& c) const;
    Polynomial times_term(const Monomial& m, const mpq_class& c) const;
    Polynomial pow(unsigned e) const;

    Scalar evaluate(std::span<const Scalar> point) const;

    /// Embeds into a ring with `new_nvars >= nvars()` variables; the new
    /// variables are appended last.
    Polynomial extended(std::size_t new_nvars) const;

    /// Scales so the grevlex-leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    /// Canonical text with variables y1..yn, e.g. "y1^2*y2 - 3*y3 + 1/2".
    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Field field_;
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

void require_compatible(const Polynomial& a, const Polynomial& b);

/// Result of a homogeneity test. The zero polynomial is homogeneous of
/// every degree and reports no degree.
struct Homogeneity {
    bool homogeneous = false;
    std::optional<unsigned> degree;
};
Homogeneity is_homogeneous(const Polynomial& a);

/// Quotient a / b when b divides a exactly, otherwise empty.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
/// Like divide_exact but throws when the division is not exact.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic gcd (grevlex leading coefficient 1); gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm of two nonzero polynomials.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// Coefficients of `a` viewed as a univariate polynomial in `var`;
/// element k multiplies var^k.
std::vector<Polynomial> coefficients_in(const Polynomial& a, std::size_t var);
Polynomial from_coefficients_in(std::span<const Polynomial> coeffs, std::size_t var,
                                Field field, std::size_t nvars);

/// Reduced quotient of two polynomials.
///
/// The numerator and denominator are coprime and the denominator is monic
/// under grevlex. Zero is represented as 0 / 1.
class RationalFunction {
public:
    RationalFunction() = default;

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction reduce_fraction(const Polynomial& h, const Polynomial& k);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const;

private:
    RationalFunction(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {}
    Polynomial num_;
    Polynomial den_;
};

RationalFunction reduce_fraction(const Polynomial& h, const Polynomial& k);

}  // namespace locmem
