#include <gtest/gtest.h>

#include "locmem/localmem.hpp"
#include "test_support.hpp"

using namespace locmem;
using namespace locmem::testing;

namespace {

LinearSubspace vectors(Field f, std::size_t n, std::vector<PolyVector> basis) {
    return LinearSubspace::from_vectors(f, n, std::move(basis));
}

// n = 3: q1 = (y1, 0, y3), q2 = (0, y1, 0)
LinearSubspace corrected_counterexample(Field f = Field::rationals()) {
    const std::size_t n = 3;
    Polynomial z(f, n);
    return vectors(f, n, {{y(n, 1, f), z, y(n, 3, f)}, {z, y(n, 1, f), z}});
}

// the variant with q2 = y1 e1
LinearSubspace uncorrected_counterexample() {
    const std::size_t n = 3;
    Polynomial z(Field::rationals(), n);
    return vectors(Field::rationals(), n, {{y(n, 1), z, y(n, 3)}, {y(n, 1), z, z}});
}

LinearSubspace basis_y(Field f, std::size_t n) { return vectors(f, n, {coordinate_vector(f, n)}); }

Polynomial sum(const PolyVector& a) {
    Polynomial acc(a.front().field(), a.front().nvars());
    for (const auto& p : a) acc = acc + p;
    return acc;
}

}  // namespace

TEST(LinearSubspace, ConstructionAndValidation) {
    const std::size_t n = 3;
    Field f = Field::rationals();
    Polynomial z(f, n);
    auto v = corrected_counterexample();
    EXPECT_EQ(v.d(), 2u);
    EXPECT_EQ(linear_forms(v.coeff_matrices()[0]), v.basis()[0]);
    EXPECT_THROW(vectors(f, n, {{y(n, 1) * y(n, 2), z, z}}), InputError);
    EXPECT_THROW(vectors(f, n, {{y(n, 1) + c(n, 1), z, z}}), InputError);
    EXPECT_THROW(vectors(f, n, {{z, z, z}}), InputError);
    EXPECT_THROW(vectors(f, 2, {{y(2, 1), z}}), InputError);
}

TEST(FreeRank, Examples) {
    const std::size_t n = 3;
    Field f = Field::rationals();
    EXPECT_TRUE(check_free_rank(example_family(4, 3)));
    EXPECT_TRUE(check_free_rank(basis_y(f, n)));
    PolyVector q{y(n, 1), y(n, 2), c(n, 0)};
    PolyVector q2{c(n, 2) * y(n, 1), c(n, 2) * y(n, 2), c(n, 0)};
    EXPECT_FALSE(check_free_rank(vectors(f, n, {q, q2})));
}

TEST(ExampleFamily, FourByThreeInstance) {
    auto v = example_family(4, 3);
    const std::size_t n = 4;
    Polynomial z(Field::rationals(), n);
    EXPECT_EQ(v.basis()[0], (PolyVector{y(n, 1), y(n, 2), y(n, 3) - y(n, 1), y(n, 4)}));
    EXPECT_EQ(v.basis()[1], (PolyVector{z, z, y(n, 1), -y(n, 2)}));
    EXPECT_EQ(v.basis()[2], (PolyVector{z, z, z, y(n, 1)}));
    auto v54 = example_family(5, 4);
    EXPECT_EQ(v54.basis()[3], (PolyVector{y(5, 4), Polynomial(Field::rationals(), 5), Polynomial(Field::rationals(), 5),
                                          Polynomial(Field::rationals(), 5), Polynomial(Field::rationals(), 5)}));
    EXPECT_TRUE(check_free_rank(v54));
    EXPECT_THROW(example_family(3, 3), InputError);
    EXPECT_THROW(example_family(4, 4), InputError);
    EXPECT_THROW(example_family(5, 2), InputError);
}

TEST(SpanOverField, Examples) {
    const std::size_t n = 3;
    Field f = Field::rationals();
    EXPECT_FALSE(span_over_field(example_family(4, 3)));
    auto one = span_over_field(basis_y(f, n));
    ASSERT_TRUE(one);
    EXPECT_EQ(*one, (ScalarVector{Scalar(f, 1)}));
    Polynomial z(f, n);
    auto two = span_over_field(vectors(f, n, {{y(n, 1), y(n, 2), z}, {z, z, y(n, 3)}}));
    ASSERT_TRUE(two);
    EXPECT_EQ(*two, (ScalarVector{Scalar(f, 1), Scalar(f, 1)}));
}

TEST(SpanOverFractionField, GoldenExampleWitness) {
    auto v = example_family(4, 3);
    const std::size_t n = 4;
    auto w = span_over_fraction_field(v);
    ASSERT_TRUE(w);
    ASSERT_EQ(w->lambdas.size(), 3u);
    EXPECT_EQ(w->lambdas[0].to_string(), "1");
    EXPECT_EQ(w->lambdas[1].to_string(), "1");
    EXPECT_EQ(w->lambdas[2].numerator(), y(n, 2));
    EXPECT_EQ(w->lambdas[2].denominator(), y(n, 1));
    EXPECT_EQ(w->m, y(n, 1));
    EXPECT_EQ(w->m.to_string(), "y1");
    EXPECT_EQ(w->index_set, (IndexSet{0, 2, 3}));
    EXPECT_TRUE(witness_identity_holds(*w, v, coordinate_vector(v.field(), n)));
}

TEST(SpanOverFractionField, CorrectedAndUncorrectedCounterexample) {
    const std::size_t n = 3;
    auto w = span_over_fraction_field(corrected_counterexample());
    ASSERT_TRUE(w);
    EXPECT_EQ(w->lambdas[0].to_string(), "1");
    EXPECT_EQ(w->lambdas[1].numerator(), y(n, 2));
    EXPECT_EQ(w->lambdas[1].denominator(), y(n, 1));
    EXPECT_EQ(w->m, y(n, 1));
    // with q2 = y1 e1 the second component forces y2 = 0
    EXPECT_FALSE(span_over_fraction_field(uncorrected_counterexample()));
    EXPECT_FALSE(ylocal_closure(uncorrected_counterexample()).holds);
}

TEST(SpanOverFractionField, InconsistentRowOutsideIndexSet) {
    const std::size_t n = 3;
    Field f = Field::rationals();
    Polynomial z(f, n);
    auto v = vectors(f, n, {{y(n, 2), z, z}});
    EXPECT_FALSE(span_over_fraction_field(v));
    PolyVector q{y(n, 1), y(n, 2), z};
    EXPECT_THROW(span_over_fraction_field(vectors(f, n, {q, {c(n, 2) * y(n, 1), c(n, 2) * y(n, 2), z}})), InputError);
}

TEST(WitnessBounds, GoldenExample) {
    auto v = example_family(4, 3);
    auto w = span_over_fraction_field(v);
    ASSERT_TRUE(w);
    WitnessBoundsReport b = verify_witness_bounds(*w, v);
    EXPECT_TRUE(b.degrees_ok);
    EXPECT_TRUE(b.m_divides_all_minors);
    EXPECT_EQ(b.m_degree, 1u);
    EXPECT_TRUE(b.m_degree_below_d);
    EXPECT_TRUE(b.passes());
    for (std::size_t j = 0; j < 3; ++j) {
        ASSERT_TRUE(b.lambdas[j].numerator_degree);
        EXPECT_EQ(b.lambdas[j].numerator_degree, b.lambdas[j].denominator_degree);
        EXPECT_LE(*b.lambdas[j].numerator_degree, 3u);
    }
    // m | det(Q_I) for every 3-subset: check directly
    for (const auto& rows : combinations(4, 3)) {
        IndexSet cols{0, 1, 2};
        Polynomial minor = det(v.basis_matrix().submatrix(rows, cols));
        if (!minor.is_zero()) EXPECT_TRUE(divide_exact(minor, w->m));
    }
}

TEST(WitnessBounds, ConstantWitnessAndNegativeControl) {
    Field f = Field::rationals();
    auto v = basis_y(f, 3);
    auto w = span_over_fraction_field(v);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->m, c(3, 1));
    EXPECT_EQ(verify_witness_bounds(*w, v).m_degree, 0u);

    // an F-dependent-over-L basis admits a witness with unbalanced degrees:
    // y = 1*y + y2*(y1, 0, 0) - y1*(y2, 0, 0)
    const std::size_t n = 3;
    Polynomial z(f, n);
    auto dep = vectors(f, n, {coordinate_vector(f, n), {y(n, 1), z, z}, {y(n, 2), z, z}});
    CramerWitness bad{{0, 1, 2},
                      {reduce_fraction(c(n, 1), c(n, 1)), reduce_fraction(y(n, 2), c(n, 1)),
                       reduce_fraction(-y(n, 1), c(n, 1))},
                      c(n, 1)};
    auto report = verify_witness_bounds(bad, dep);
    EXPECT_FALSE(report.degrees_ok);
    EXPECT_FALSE(report.lambdas[1].ok);
    EXPECT_TRUE(report.lambdas[0].ok);
    EXPECT_FALSE(report.passes());
    bad.lambdas[0] = reduce_fraction(y(n, 1), c(n, 1));
    EXPECT_THROW(verify_witness_bounds(bad, dep), InputError);
}

TEST(YLocalClosure, Examples) {
    EXPECT_TRUE(ylocal_closure(example_family(4, 3)).holds);
    EXPECT_TRUE(ylocal_closure(basis_y(Field::rationals(), 3)).holds);
    auto dec = ylocal_closure(corrected_counterexample());
    EXPECT_FALSE(dec.holds);
    ASSERT_TRUE(dec.failure);
    EXPECT_EQ(dec.failure->stratum, 1u);
    ASSERT_TRUE(dec.failure->minor);
    EXPECT_EQ(*dec.failure->minor, y(3, 2));
    EXPECT_EQ(dec.failure->rows, (IndexSet{1}));
    EXPECT_EQ(dec.failure->cols, (IndexSet{2}));
    EXPECT_THROW(ylocal_closure(vectors(Field::rationals(), 2, {{y(2, 1), y(2, 2)}, {y(2, 2), y(2, 1)}})), InputError);
}

TEST(YLocalClosure, ExampleFamilyHoldsWithoutFieldSpan) {
    for (std::size_t n = 4; n <= 5; ++n)
        for (std::size_t d = 3; d < n; ++d) {
            auto v = example_family(n, d);
            EXPECT_TRUE(ylocal_closure(v).holds) << n << "," << d;
            EXPECT_FALSE(span_over_field(v)) << n << "," << d;
        }
}

TEST(YLocalPoints, Examples) {
    Field f5 = Field::prime(5);
    EXPECT_TRUE(ylocal_points(example_family(4, 3).reduced_mod(5), 1000).holds);
    EXPECT_TRUE(ylocal_points(basis_y(Field::prime(3), 3), 1000).holds);
    auto dec = ylocal_points(corrected_counterexample(f5), 1000);
    EXPECT_FALSE(dec.holds);
    ASSERT_TRUE(dec.failure && dec.failure->point);
    const ScalarVector& a = *dec.failure->point;
    EXPECT_TRUE(a[0].is_zero());
    EXPECT_FALSE(a[1].is_zero());
    EXPECT_EQ(a, (ScalarVector{Scalar(f5, 0), Scalar(f5, 1), Scalar(f5, 0)}));
    // the point named in the documentation also fails
    auto v = corrected_counterexample(f5);
    ScalarVector b{Scalar(f5, 0), Scalar(f5, 1), Scalar(f5, 1)};
    EXPECT_GT(rank(evaluate_matrix(v.augmented(coordinate_vector(f5, 3)), b)), rank(evaluate_matrix(v.basis_matrix(), b)));
    EXPECT_EQ(evaluate_matrix(v.basis_matrix(), b), ScalarMatrix::from_rows(f5, {{0, 0}, {0, 0}, {1, 0}}));
}

TEST(YLocalPoints, BudgetAndFieldChecks) {
    EXPECT_THROW(ylocal_points(example_family(4, 3).reduced_mod(5), 100), BudgetExceeded);
    EXPECT_THROW(ylocal_points(example_family(4, 3), 1000000), InputError);
}

TEST(YLocalPoints, SerialAndParallelAgree) {
    Rng rng(4);
    Field f = Field::prime(3);
    for (int i = 0; i < 30; ++i) {
        auto v = random_subspace(rng, f, 4, static_cast<std::size_t>(uniform(rng, 1, 3)), true, false);
        auto a = ylocal_points(v, 1000000, kernels::Execution::serial);
        auto b = ylocal_points(v, 1000000, kernels::Execution::parallel);
        EXPECT_EQ(a.holds, b.holds);
        if (a.failure) EXPECT_EQ(a.failure->point, b.failure->point);
    }
}

TEST(Properties, RandomInstanceImplications) {
    Rng rng(21);
    int with_witness = 0;
    for (int i = 0; i < 60; ++i) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 3, 4));
        std::size_t d = static_cast<std::size_t>(uniform(rng, 1, long(n) - 1));
        bool contains_y = i % 3 == 0;
        auto v = contains_y ? random_subspace_with_y(rng, Field::rationals(), n, d, true)
                            : random_subspace(rng, Field::rationals(), n, d, true);
        auto y_vec = coordinate_vector(v.field(), n);
        bool over_f = span_over_field(v).has_value();
        auto w = span_over_fraction_field(v);
        if (over_f) EXPECT_TRUE(w);
        if (contains_y) EXPECT_TRUE(over_f);
        if (w) {
            ++with_witness;
            EXPECT_TRUE(witness_identity_holds(*w, v, y_vec));
            for (const auto& m : minors(v.augmented(y_vec), d + 1)) EXPECT_TRUE(m.value.is_zero());
            auto b = verify_witness_bounds(*w, v);
            EXPECT_TRUE(b.m_divides_all_minors);
            EXPECT_TRUE(b.degrees_ok);
        }
        auto local = ylocal_closure(v);
        if (local.holds) {
            EXPECT_TRUE(w);
            if (w) EXPECT_LT(w->m.total_degree().value_or(0), d);
        }
        // conjugation by GL_n preserves every decision
        auto g = random_invertible(rng, v.field(), n);
        auto vc = conjugated(v, g);
        EXPECT_EQ(span_over_field(vc).has_value(), over_f);
        EXPECT_EQ(ylocal_closure(vc).holds, local.holds);
    }
    EXPECT_GT(with_witness, 10);
}

TEST(Properties, ClosureImpliesPointsOverFp) {
    Rng rng(55);
    Field f = Field::prime(5);
    for (int i = 0; i < 30; ++i) {
        std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 2));
        auto v = i % 2 ? random_subspace_with_y(rng, f, 3, d, true) : random_subspace(rng, f, 3, d, true);
        if (ylocal_closure(v).holds) EXPECT_TRUE(ylocal_points(v, 1000).holds);
    }
}

TEST(IncidenceIdeal, Generators) {
    Field f = Field::rationals();
    auto p = build_incidence_ideal(basis_y(f, 3));
    ASSERT_EQ(p.generators().size(), 3u);
    EXPECT_EQ(p.nvars(), 4u);
    for (std::size_t j = 1; j <= 3; ++j) {
        Polynomial expected = (y(4, 4) - c(4, 1)) * y(4, j);
        EXPECT_EQ(p.generators()[j - 1], expected);
    }
    // example family: at the point a = (1, 2, 3, 4) the span certificate zeroes every generator
    auto v = example_family(4, 3);
    auto ideal = build_incidence_ideal(v);
    EXPECT_EQ(ideal.generators().size(), 4u);
    ScalarVector pt{Scalar(f, 1), Scalar(f, 2), Scalar(f, 3), Scalar(f, 4), Scalar(f, 1), Scalar(f, 1), Scalar(f, 2)};
    for (const auto& g : ideal.generators()) EXPECT_TRUE(g.evaluate(pt).is_zero()) << g.to_string();
}

TEST(Pencil, ExampleFamily) {
    auto v = example_family(4, 3);
    auto pencil = pencil_decompose(v);
    ASSERT_EQ(pencil.size(), 4u);
    Field f = v.field();
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(pencil[j](i, 3), i == j ? 1 : 0);
        // det(A_j) = 0 since y lies in V_L
        PolyMatrix a(f, 1, 4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 4; ++k) a.set(r, k, Polynomial::constant(f, 1, pencil[j](r, k)));
        EXPECT_TRUE(det(a).is_zero());
    }
    // reconstruction
    PolyMatrix cy = v.augmented(coordinate_vector(f, 4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k) {
            Polynomial acc(f, 4);
            for (std::size_t j = 0; j < 4; ++j) acc = acc + y(4, j + 1).scaled(pencil[j](r, k));
            EXPECT_EQ(acc, cy(r, k));
        }
    EXPECT_FALSE(common_null_test(pencil));
    EXPECT_THROW(pencil_decompose(example_family(5, 3)), InputError);
}

TEST(Pencil, CommonNullVectorWhenYInSpan) {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto v = random_subspace_with_y(rng, Field::rationals(), 3, 2, false);
        auto p = common_null_test(pencil_decompose(v));
        ASSERT_TRUE(p);
        ScalarVector coeffs = coefficients_from_null_vector(*p);
        PolyVector combo(3, Polynomial(v.field(), 3));
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t r = 0; r < 3; ++r) combo[r] = combo[r] + v.basis()[k][r].scaled(coeffs[k].value());
        EXPECT_EQ(combo, coordinate_vector(v.field(), 3));
        EXPECT_EQ(sum(combo), sum(coordinate_vector(v.field(), 3)));
    }
}
