#include "locmem/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace locmem {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_.at(index) = 1;
    return m;
}

unsigned Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// -------------------------------------------------------------- Polynomial

void require_compatible(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field());
    if (a.nvars() != b.nvars())
        throw InputError("ambient variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                         std::to_string(b.nvars()));
}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const mpq_class& c) {
    return monomial(field, Monomial(nvars), c);
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InputError("variable index out of range");
    return monomial(field, Monomial::variable(nvars, index), mpq_class(1));
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const mpq_class& c) {
    Polynomial p(field, m.nvars());
    mpq_class v = field.canonical(c);
    if (sgn(v) != 0) p.terms_.push_back({m, std::move(v)});
    return p;
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
        if (t.mono.nvars() != nvars) throw InputError("monomial has wrong variable count");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = field.add(p.terms_.back().coeff, field.canonical(t.coeff));
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            p.terms_.push_back({std::move(t.mono), field.canonical(t.coeff)});
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

std::optional<unsigned> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // grevlex is degree-compatible, so the leading term has maximal degree.
    return terms_.front().mono.degree();
}

std::optional<unsigned> Polynomial::degree_in(std::size_t var) const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

bool Polynomial::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] > 0; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_compatible(*this, o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_grevlex(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
            if (sgn(s) != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_compatible(*this, o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
    if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    return from_terms(field_, nvars_, std::move(prod));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    mpq_class cc = field_.canonical(c);
    if (sgn(cc) == 0) return Polynomial(field_, nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, cc);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpq_class& c) const {
    mpq_class cc = field_.canonical(c);
    if (sgn(cc) == 0) return Polynomial(field_, nvars_);
    // Multiplying by a monomial preserves the grevlex order of the terms.
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, cc)});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != nvars_)
        throw InputError("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                         std::to_string(nvars_));
    for (const auto& s : point) require_same_field(s.field(), field_);
    mpq_class acc(0);
    for (const auto& t : terms_) {
        mpq_class v = t.coeff;
        for (std::size_t i = 0; i < nvars_ && sgn(v) != 0; ++i)
            for (std::uint32_t k = 0; k < t.mono[i]; ++k) v = field_.mul(v, point[i].value());
        acc = field_.add(acc, v);
    }
    return Scalar(field_, acc);
}

Polynomial Polynomial::extended(std::size_t new_nvars) const {
    if (new_nvars < nvars_) throw InputError("cannot shrink polynomial ring");
    Polynomial r(field_, new_nvars);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto e = t.mono.exponents();
        e.resize(new_nvars, 0);
        r.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    // Appended variables have exponent 0, which keeps the grevlex order.
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(field_.inv(leading_coeff()));
}

std::string Polynomial::to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars_; ++i) names.push_back("y" + std::to_string(i + 1));
    return to_string(names);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (any) mono << "*";
            mono << names[i];
            if (t.mono[i] > 1) mono << "^" << t.mono[i];
            any = true;
        }
        if (!any) {
            out << c.get_str();
        } else if (c == 1) {
            out << mono.str();
        } else {
            out << c.get_str() << "*" << mono.str();
        }
    }
    return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Homogeneity is_homogeneous(const Polynomial& a) {
    if (a.is_zero()) return {true, std::nullopt};
    unsigned d = a.terms().front().mono.degree();
    for (const auto& t : a.terms())
        if (t.mono.degree() != d) return {false, std::nullopt};
    return {true, d};
}

// ----------------------------------------------------------- division, gcd

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Field& f = a.field();
    const Term& lb = b.leading();
    mpq_class inv_lb = f.inv(lb.coeff);
    std::vector<Term> quotient;
    Polynomial r = a;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lr.mono / lb.mono;
        mpq_class c = f.mul(lr.coeff, inv_lb);
        r -= b.times_term(m, c);
        quotient.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(f, a.nvars(), std::move(quotient));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return *std::move(q);
}

std::vector<Polynomial> coefficients_in(const Polynomial& a, std::size_t var) {
    std::vector<Polynomial> out;
    if (a.is_zero()) return out;
    std::vector<std::vector<Term>> buckets(*a.degree_in(var) + 1);
    for (const auto& t : a.terms()) {
        Monomial m = t.mono;
        std::uint32_t k = m[var];
        m[var] = 0;
        buckets[k].push_back({std::move(m), t.coeff});
    }
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(a.field(), a.nvars(), std::move(b)));
    return out;
}

Polynomial from_coefficients_in(std::span<const Polynomial> coeffs, std::size_t var, Field field,
                                std::size_t nvars) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial shift = Monomial(nvars);
        shift[var] = static_cast<std::uint32_t>(k);
        for (const auto& t : coeffs[k].terms()) terms.push_back({t.mono * shift, t.coeff});
    }
    return Polynomial::from_terms(field, nvars, std::move(terms));
}

namespace {

using Univariate = std::vector<Polynomial>;  // coefficients in the main variable

std::size_t udeg(const Univariate& u) { return u.size() - 1; }

void trim(Univariate& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
Univariate pseudo_remainder(Univariate A, const Univariate& B) {
    const Polynomial& lb = B.back();
    std::size_t m = udeg(A), k = udeg(B);
    unsigned steps = 0;
    while (!A.empty() && udeg(A) >= k) {
        Polynomial la = A.back();
        std::size_t shift = udeg(A) - k;
        for (auto& c : A) c *= lb;
        for (std::size_t i = 0; i <= k; ++i) A[i + shift] -= la * B[i];
        trim(A);
        ++steps;
    }
    unsigned want = static_cast<unsigned>(m - k + 1);
    if (steps < want && !A.empty()) {
        Polynomial f = lb.pow(want - steps);
        for (auto& c : A) c *= f;
    }
    return A;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

std::size_t main_variable(const Polynomial& a, const Polynomial& b) {
    for (std::size_t v = a.nvars(); v-- > 0;)
        if (a.involves(v) || b.involves(v)) return v;
    return 0;
}

Polynomial content_in(const Polynomial& a, std::size_t var) {
    Polynomial g(a.field(), a.nvars());
    for (const auto& c : coefficients_in(a, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_recursive(g, c);
        if (g.is_constant()) break;
    }
    return g.monic();
}

Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
    Univariate A = coefficients_in(a, var);
    Univariate B = coefficients_in(b, var);
    if (udeg(A) < udeg(B)) std::swap(A, B);
    const Field& f = a.field();
    const std::size_t n = a.nvars();
    Polynomial g = Polynomial::constant(f, n, 1);
    Polynomial h = Polynomial::constant(f, n, 1);
    // Subresultant PRS; every division below is exact in the coefficient ring.
    while (true) {
        std::size_t delta = udeg(A) - udeg(B);
        Univariate R = pseudo_remainder(A, B);
        if (R.empty()) break;
        if (udeg(R) == 0) return Polynomial::constant(f, n, 1);
        Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : R) c = exact_quotient(c, divisor);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    Polynomial last = from_coefficients_in(B, var, f, n);
    return exact_quotient(last, content_in(last, var)).monic();
}

// Both inputs nonzero.
Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.field();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(f, a.nvars(), 1);
    std::size_t v = main_variable(a, b);
    if (!a.involves(v)) return gcd_recursive(a, content_in(b, v));
    if (!b.involves(v)) return gcd_recursive(content_in(a, v), b);
    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial c = gcd_recursive(ca, cb);
    Polynomial g = primitive_gcd(exact_quotient(a, ca), exact_quotient(b, cb), v);
    return (c * g).monic();
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd_recursive(a, b);
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    require_compatible(a, b);
    if (a.is_zero() || b.is_zero()) throw InputError("lcm of the zero polynomial");
    return exact_quotient(a * b, poly_gcd(a, b)).monic();
}

// -------------------------------------------------------- RationalFunction

RationalFunction reduce_fraction(const Polynomial& h, const Polynomial& k) {
    require_compatible(h, k);
    if (k.is_zero()) throw InputError("zero denominator");
    if (h.is_zero()) return {h, Polynomial::constant(k.field(), k.nvars(), 1)};
    Polynomial g = poly_gcd(h, k);
    Polynomial num = exact_quotient(h, g);
    Polynomial den = exact_quotient(k, g);
    mpq_class scale = k.field().inv(den.leading_coeff());
    return {num.scaled(scale), den.scaled(scale)};
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace locmem
