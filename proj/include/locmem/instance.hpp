#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "locmem/matspace.hpp"

namespace locmem {

/// Syntax or content error in an instance file, with a 1-based position.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class InstanceKind { linear_subspace, matrix_subspace };

/// A parsed instance file.
///
///     # comment
///     field Q            (or: field Fp 5)
///     n 3
///     kind linear-subspace
///     q1 = [y1, 0, y3]
///     q2 = [0, y1, 0]
///     end
///
/// For `kind matrix-subspace` the basis lines read `b1 = [[0,1,0],[1,0,0],[0,0,1]]`.
struct InstanceFile {
    Field field;
    std::size_t n = 0;
    InstanceKind kind = InstanceKind::linear_subspace;
    std::vector<std::string> labels;
    std::vector<PolyVector> vectors;        // linear-subspace
    std::vector<ScalarMatrix> matrices;     // matrix-subspace

    std::size_t basis_size() const { return kind == InstanceKind::linear_subspace ? vectors.size() : matrices.size(); }

    LinearSubspace linear_subspace() const;
    MatrixSubspace matrix_subspace() const;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile parse_instance(std::string_view text);
std::string print_instance(const InstanceFile& inst);

InstanceFile make_instance(const LinearSubspace& v);
InstanceFile make_instance(const MatrixSubspace& w);

/// Parses a polynomial expression in y1..yn (+, -, *, ^, parentheses,
/// integer and p/q literals).
Polynomial parse_polynomial(std::string_view text, Field field, std::size_t nvars);

}  // namespace locmem
