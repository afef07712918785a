#pragma once

#include <cstddef>
#include <vector>

#include "locmem/polynomial.hpp"

namespace locmem {

enum class OrderKind { grevlex, lex };

/// Monomial order on a fixed number of variables; grevlex by default.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::size_t nvars = 0;

    int compare(const Monomial& a, const Monomial& b) const {
        return kind == OrderKind::grevlex ? compare_grevlex(a, b) : compare_lex(a, b);
    }
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

/// Ideal given by generators; zero generators are dropped.
class Ideal {
public:
    Ideal(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}
    Ideal(Field field, std::size_t nvars, std::vector<Polynomial> generators);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    void add(const Polynomial& g);

private:
    Field field_;
    std::size_t nvars_;
    std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading term, sorted by leading monomial (largest
/// first). Unique for a given ideal and order.
struct GroebnerBasis {
    std::vector<Polynomial> basis;
    MonomialOrder order;

    bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Remainder of full multivariate division of f by `divisors`, trying the
/// divisors in list order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

/// Buchberger's algorithm with the product and chain criteria and the normal
/// selection strategy, followed by inter-reduction.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GroebnerBasis buchberger(const Ideal& ideal);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

/// f in the radical of the ideal, decided by adjoining a last variable t
/// and testing whether 1 lies in I + <1 - t f>.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Same decision when a Groebner basis of the ideal is already known; the
/// basis is reused as the starting generator set.
bool radical_membership(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace locmem
