#include "locmem/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace locmem {

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
    const auto& ts = f.terms();
    if (order.kind == OrderKind::grevlex) return ts.front();
    const Term* best = &ts.front();
    for (const auto& t : ts)
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

Ideal::Ideal(Field field, std::size_t nvars, std::vector<Polynomial> generators) : field_(field), nvars_(nvars) {
    for (auto& g : generators) add(g);
}

void Ideal::add(const Polynomial& g) {
    require_same_field(g.field(), field_);
    if (g.nvars() != nvars_) throw InputError("generator has wrong variable count");
    if (!g.is_zero()) gens_.push_back(g);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
    const Field& field = f.field();
    std::vector<Term> lts;
    lts.reserve(divisors.size());
    for (const auto& g : divisors) lts.push_back(leading_term(g, order));

    std::vector<Term> rest;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term lt = leading_term(p, order);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lts[i].mono.divides(lt.mono)) continue;
            p -= divisors[i].times_term(lt.mono / lts[i].mono, field.div(lt.coeff, lts[i].coeff));
            divided = true;
            break;
        }
        if (!divided) {
            rest.push_back(lt);
            p -= Polynomial::monomial(field, lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(field, f.nvars(), std::move(rest));
}

namespace {

Polynomial monic_under(const Polynomial& f, const MonomialOrder& order) {
    return f.scaled(f.field().inv(leading_term(f, order).coeff));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const Term& a = leading_term(f, order);
    const Term& b = leading_term(g, order);
    Monomial l = lcm(a.mono, b.mono);
    const Field& field = f.field();
    return f.times_term(l / a.mono, field.inv(a.coeff)) - g.times_term(l / b.mono, field.inv(b.coeff));
}

GroebnerBasis unit_basis(const Ideal& ideal, const MonomialOrder& order) {
    return {{Polynomial::constant(ideal.field(), ideal.nvars(), 1)}, order};
}

GroebnerBasis reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Monomial& mi = leading_term(g[i], order).mono;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = leading_term(g[j], order).mono;
            // Equal leading monomials: keep the first occurrence.
            if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Term lt = leading_term(minimal[i], order);
        Polynomial head = Polynomial::monomial(minimal[i].field(), lt.mono, lt.coeff);
        Polynomial tail = normal_form(minimal[i] - head, others, order);
        reduced.push_back(monic_under(head + tail, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_term(a, order).mono, leading_term(b, order).mono) > 0;
    });
    return {std::move(reduced), order};
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order_in) {
    MonomialOrder order = order_in;
    order.nvars = ideal.nvars();
    std::vector<Polynomial> g;
    for (const auto& p : ideal.generators()) {
        if (p.is_constant()) return unit_basis(ideal, order);
        g.push_back(monic_under(p, order));
    }
    if (g.empty()) return {{}, order};

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto lm = [&](std::size_t i) -> const Monomial& { return leading_term(g[i], order).mono; };
    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!pending.empty()) {
        // Normal strategy: smallest lcm degree, ties by index pair.
        auto best = pending.begin();
        unsigned best_deg = lcm(lm(best->first), lm(best->second)).degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            unsigned d = lcm(lm(it->first), lm(it->second)).degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        const Monomial l = lcm(lm(i), lm(j));
        // Product criterion: coprime leading monomials reduce to zero.
        if (l == lm(i) * lm(j)) continue;
        // Chain criterion.
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (!is_pending(i, k) && !is_pending(j, k) && lm(k).divides(l)) chain = true;
        }
        if (chain) continue;

        Polynomial s = normal_form(s_polynomial(g[i], g[j], order), g, order);
        if (s.is_zero()) continue;
        if (s.is_constant()) return unit_basis(ideal, order);
        g.push_back(monic_under(s, order));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
    }
    return reduce_basis(std::move(g), order);
}

GroebnerBasis buchberger(const Ideal& ideal) { return buchberger(ideal, MonomialOrder{OrderKind::grevlex, ideal.nvars()}); }

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return true;
    return normal_form(f, gb.basis, gb.order).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    return ideal_membership(f, buchberger(ideal));
}

bool radical_membership(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return true;
    if (ideal_membership(f, gb)) return true;
    const std::size_t n = f.nvars();
    const Field& field = f.field();
    Ideal extended(field, n + 1);
    for (const auto& g : gb.basis) extended.add(g.extended(n + 1));
    Polynomial t = Polynomial::variable(field, n + 1, n);
    extended.add(Polynomial::constant(field, n + 1, 1) - t * f.extended(n + 1));
    MonomialOrder order{gb.order.kind, n + 1};
    return buchberger(extended, order).is_unit_ideal();
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    return radical_membership(f, buchberger(ideal));
}

}  // namespace locmem
