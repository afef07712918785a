#include "locmem/instance.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace locmem {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Recursive-descent reader over one line.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t base_col, Field field, std::size_t nvars)
        : text_(text), line_(line), base_col_(base_col), field_(field), nvars_(nvars) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, base_col_ + pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(line_, base_col_ + pos, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::size_t pos() const { return pos_; }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    std::vector<Polynomial> bracketed_list() {
        expect('[');
        std::vector<Polynomial> out;
        if (accept(']')) return out;
        do {
            out.push_back(expr());
        } while (accept(','));
        expect(']');
        return out;
    }

private:
    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            mpz_class e = integer();
            if (e > 64) fail_at(start, "exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == 'y') {
            std::size_t start = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected variable index after 'y'");
            mpz_class idx = integer();
            if (idx < 1 || idx > nvars_)
                fail_at(start, "variable index out of range: y" + idx.get_str() + " (n = " + std::to_string(nvars_) + ")");
            return Polynomial::variable(field_, nvars_, idx.get_ui() - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            mpq_class v(integer());
            if (accept('/')) {
                skip_ws();
                mpz_class den = integer();
                if (den == 0) fail_at(start, "zero denominator in literal");
                v = mpq_class(v.get_num(), den);
                v.canonicalize();
            }
            try {
                return Polynomial::constant(field_, nvars_, v);
            } catch (const InputError& e) {
                fail_at(start, e.what());
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t base_col_;
    Field field_;
    std::size_t nvars_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

bool is_label(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::string matrix_entry(const mpq_class& v) { return v.get_str(); }

}  // namespace

Polynomial parse_polynomial(std::string_view text, Field field, std::size_t nvars) {
    Cursor cur(text, 1, 1, field, nvars);
    Polynomial p = cur.expr();
    if (!cur.at_end()) cur.fail("trailing characters");
    return p;
}

InstanceFile parse_instance(std::string_view text) {
    InstanceFile inst;
    std::optional<Field> field;
    std::optional<std::size_t> n;
    std::optional<InstanceKind> kind;
    std::set<std::string> seen;
    bool ended = false;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size() && !ended) {
        std::size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        const std::size_t indent = line.find_first_not_of(" \t");

        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            auto words = split_ws(line);
            const std::string& key = words[0];
            auto want = [&](std::size_t count) {
                if (words.size() != count) throw ParseError(line_no, indent + 1, "malformed '" + key + "' line");
            };
            if (key == "end") {
                want(1);
                ended = true;
            } else if (key == "field") {
                if (words.size() == 2 && words[1] == "Q") {
                    field = Field::rationals();
                } else if (words.size() == 3 && words[1] == "Fp") {
                    std::uint64_t p = 0;
                    try {
                        p = std::stoull(words[2]);
                    } catch (const std::exception&) {
                        throw ParseError(line_no, indent + 1, "malformed modulus '" + words[2] + "'");
                    }
                    if (!is_prime(p)) throw ParseError(line_no, indent + 1, "modulus not prime: " + words[2]);
                    try {
                        field = Field::prime(p);
                    } catch (const InputError& e) {
                        throw ParseError(line_no, indent + 1, e.what());
                    }
                } else {
                    throw ParseError(line_no, indent + 1, "expected 'field Q' or 'field Fp <prime>'");
                }
            } else if (key == "n") {
                want(2);
                std::size_t v = 0;
                try {
                    v = std::stoul(words[1]);
                } catch (const std::exception&) {
                    throw ParseError(line_no, indent + 1, "malformed n");
                }
                if (v < 1 || v > 64) throw ParseError(line_no, indent + 1, "n out of range");
                n = v;
            } else if (key == "kind") {
                want(2);
                if (words[1] == "linear-subspace") {
                    kind = InstanceKind::linear_subspace;
                } else if (words[1] == "matrix-subspace") {
                    kind = InstanceKind::matrix_subspace;
                } else {
                    throw ParseError(line_no, indent + 1, "unknown kind '" + words[1] + "'");
                }
            } else {
                throw ParseError(line_no, indent + 1, "unrecognized line");
            }
            continue;
        }

        std::string label(trim(line.substr(0, eq)));
        if (!is_label(label)) throw ParseError(line_no, indent + 1, "malformed basis label");
        if (!field || !n || !kind) throw ParseError(line_no, indent + 1, "basis line before field, n and kind headers");
        if (!seen.insert(label).second) throw ParseError(line_no, indent + 1, "duplicate basis label '" + label + "'");

        std::string_view rhs = line.substr(eq + 1);
        Cursor cur(rhs, line_no, eq + 2, *field, *n);
        if (*kind == InstanceKind::linear_subspace) {
            auto comps = cur.bracketed_list();
            if (!cur.at_end()) cur.fail("trailing characters");
            if (comps.size() != *n)
                throw ParseError(line_no, eq + 2, "vector has " + std::to_string(comps.size()) + " components, expected " + std::to_string(*n));
            for (const auto& c : comps) {
                auto h = is_homogeneous(c);
                if (!c.is_zero() && !(h.homogeneous && h.degree == 1u))
                    throw ParseError(line_no, eq + 2, "component not a linear form: " + c.to_string());
            }
            inst.vectors.push_back(std::move(comps));
        } else {
            ScalarMatrix m(*field, *n, *n);
            cur.expect('[');
            for (std::size_t i = 0; i < *n; ++i) {
                if (i > 0) cur.expect(',');
                std::size_t row_pos = cur.pos();
                auto row = cur.bracketed_list();
                if (row.size() != *n) cur.fail_at(row_pos, "matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n));
                for (std::size_t j = 0; j < *n; ++j) {
                    if (!row[j].is_constant()) cur.fail_at(row_pos, "matrix entry not a constant");
                    m.set(i, j, row[j].is_zero() ? mpq_class(0) : row[j].leading_coeff());
                }
            }
            cur.expect(']');
            if (!cur.at_end()) cur.fail("trailing characters");
            inst.matrices.push_back(std::move(m));
        }
        inst.labels.push_back(label);
    }
    if (!ended) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'end'");
    if (!field || !n || !kind) throw ParseError(line_no, 1, "missing field, n or kind header");
    inst.field = *field;
    inst.n = *n;
    inst.kind = *kind;
    return inst;
}

std::string print_instance(const InstanceFile& inst) {
    std::ostringstream out;
    out << "field " << inst.field.name() << "\n";
    out << "n " << inst.n << "\n";
    out << "kind " << (inst.kind == InstanceKind::linear_subspace ? "linear-subspace" : "matrix-subspace") << "\n";
    for (std::size_t k = 0; k < inst.basis_size(); ++k) {
        out << inst.labels[k] << " = [";
        if (inst.kind == InstanceKind::linear_subspace) {
            for (std::size_t i = 0; i < inst.n; ++i) out << (i ? ", " : "") << inst.vectors[k][i].to_string();
        } else {
            for (std::size_t i = 0; i < inst.n; ++i) {
                out << (i ? ", [" : "[");
                for (std::size_t j = 0; j < inst.n; ++j) out << (j ? ", " : "") << matrix_entry(inst.matrices[k](i, j));
                out << "]";
            }
        }
        out << "]\n";
    }
    out << "end\n";
    return out.str();
}

LinearSubspace InstanceFile::linear_subspace() const {
    if (kind != InstanceKind::linear_subspace) throw InputError("instance is not a linear-subspace");
    return LinearSubspace::from_vectors(field, n, vectors);
}

MatrixSubspace InstanceFile::matrix_subspace() const {
    if (kind != InstanceKind::matrix_subspace) throw InputError("instance is not a matrix-subspace");
    return MatrixSubspace(field, n, matrices);
}

InstanceFile make_instance(const LinearSubspace& v) {
    InstanceFile inst;
    inst.field = v.field();
    inst.n = v.n();
    inst.kind = InstanceKind::linear_subspace;
    inst.vectors = v.basis();
    for (std::size_t i = 0; i < v.d(); ++i) inst.labels.push_back("q" + std::to_string(i + 1));
    return inst;
}

InstanceFile make_instance(const MatrixSubspace& w) {
    InstanceFile inst;
    inst.field = w.field();
    inst.n = w.n();
    inst.kind = InstanceKind::matrix_subspace;
    inst.matrices = w.basis();
    for (std::size_t i = 0; i < w.dim(); ++i) inst.labels.push_back("b" + std::to_string(i + 1));
    return inst;
}

}  // namespace locmem
