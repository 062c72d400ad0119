#include "hlv/bases.hpp"

#include "oracles/closed_forms.hpp"
#include "oracles/coproduct_oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hlv;
using oracle::OneRow;
using testing_support::one_minus_t;
using testing_support::poly;

namespace {

std::vector<Partition> partitions_up_to(int w)
{
    std::vector<Partition> out;
    for (int n = 0; n <= w; ++n)
        for (const Partition& p : enumerate_partitions(n))
            out.push_back(p);
    return out;
}

SymFunc q_product(std::initializer_list<int> parts)
{
    return generator_product(Family::Q, Composition(parts));
}

} // namespace

TEST_CASE("one-row generators match their closed power-sum forms")
{
    for (int n = 0; n <= 7; ++n) {
        CHECK(gen_h(n) == oracle::one_row(OneRow::h, n));
        CHECK(gen_e(n) == oracle::one_row(OneRow::e, n));
        CHECK(gen_q(n) == oracle::one_row(OneRow::q, n));
        CHECK(gen_b(n) == oracle::one_row(OneRow::b, n));
        CHECK(gen_qprime(n) == oracle::one_row(OneRow::q, n).eval_t(-1));
    }
}

TEST_CASE("generator values")
{
    CHECK(gen_h(1) == SymFunc::p(1));
    CHECK(gen_h(-3).is_zero());
    CHECK(gen_h(0) == SymFunc(1));
    CHECK(gen_e(2) == (SymFunc::p({1, 1}) - SymFunc::p(2)) * TRational(BigRational(1, 2)));
    CHECK(gen_q(1) == SymFunc::p(1) * one_minus_t());
    CHECK(gen_q(2).eval_t(0) == gen_h(2));
    const TRational half(BigRational(1, 2));
    CHECK(gen_b(2) == SymFunc::p({1, 1}) * (one_minus_t() * one_minus_t() * half) -
                          SymFunc::p(2) * (TRational(TPoly::one_minus_t_pow(2)) * half));
    CHECK(exp_series_coefficient([](int) { return TRational(1); }, 4) == gen_h(4));
    CHECK(generator_product(Family::H, Composition({2, -1})).is_zero());
    CHECK(generator_product(Family::H, Composition({2, 0, 1})) == gen_h(2) * gen_h(1));
}

TEST_CASE("determinants and Pfaffians of scalar matrices")
{
    auto s = [](long v) { return SymFunc(v); };
    const SymMatrix m2{{s(1), s(2)}, {s(3), s(4)}};
    CHECK(determinant(m2) == SymFunc(-2));
    const SymMatrix m3{{s(2), s(0), s(1)}, {s(1), s(3), s(2)}, {s(1), s(1), s(1)}};
    CHECK(determinant(m3) == SymFunc(2 * (3 - 2) - 0 + 1 * (1 - 3)));
    // a=1 b=2 c=3 d=4 e=5 f=6: Pf = af - be + cd.
    const SymMatrix skew{{s(0), s(1), s(2), s(3)},
                         {s(-1), s(0), s(4), s(5)},
                         {s(-2), s(-4), s(0), s(6)},
                         {s(-3), s(-5), s(-6), s(0)}};
    CHECK(pfaffian(skew) == SymFunc(6 - 10 + 12));
    CHECK(pfaffian(skew) * pfaffian(skew) == determinant(skew));
    CHECK(pfaffian({{s(0)}}).is_zero());
}

TEST_CASE("Schur functions by Jacobi-Trudi")
{
    for (int n = 0; n <= 5; ++n)
        CHECK(schur(Composition({n})) == gen_h(n));
    CHECK(schur(Composition({1, 1})) == gen_e(2));
    CHECK(schur(Composition({1, 1})) == gen_h(1) * gen_h(1) - gen_h(2));
    CHECK(schur(Composition({1, 2})).is_zero());
    CHECK(schur(Composition({1, 1, 1})) == gen_e(3));
}

TEST_CASE("Schur's Q-functions")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(schurQ(Composition({n, 0})) == gen_qprime(n));
    CHECK(schurQ(Composition({2, 1})) == gen_qprime(2) * gen_qprime(1) - gen_qprime(3) * TRational(2));
    for (const Partition& lambda : partitions_up_to(6)) {
        if (!lambda.is_strict())
            continue;
        const SymMatrix m = schurQ_matrix(lambda.as_composition());
        CHECK(m.size() % 2 == 0);
        const SymFunc pf = pfaffian(m);
        CHECK(determinant(m) == pf * pf);
    }
}

TEST_CASE("Hall-Littlewood Q by the vertex route")
{
    for (int n = 0; n <= 5; ++n)
        CHECK(hl_Q(Composition({n})) == gen_q(n));
    CHECK(hl_Q(Composition({1, 1})) == q_product({1, 1}) + q_product({2}) * (TRational::t() - 1));
    CHECK(hl_Q(Composition()) == SymFunc(1));
    // H_0 q_1 = q_1 - q_1 b_1^perp q_1 = t q_1.
    CHECK(hl_Q(Composition({0, 1})) == gen_q(1) * TRational::t());
    // H_{-1} q_1 = -b_1^perp q_1 = t - 1.
    CHECK(hl_Q(Composition({-1, 1})) == SymFunc(TRational::t() - 1));
    CHECK(hl_Q(Composition({-3, 1})).is_zero());
}

TEST_CASE("raising-operator route")
{
    CHECK(hl_Q_raising(Composition({2})) == gen_q(2));
    CHECK(hl_Q_raising(Composition({1, 1})) == q_product({1, 1}) + q_product({2}) * (TRational::t() - 1));
    const auto expansion = raising_expansion(Composition({1, 1}));
    CHECK(expansion.size() == 2);
    CHECK(expansion.at({1, 1}) == TPoly(1));
    CHECK(expansion.at({2}) == poly({-1, 1}));
    for (const Partition& lambda : partitions_up_to(5)) {
        CHECK(hl_Q_raising(lambda.as_composition()) == hl_Q(lambda.as_composition()));
        CHECK(hl_B_raising(lambda.as_composition()) == hl_B_vertex(lambda.as_composition()));
    }
    CHECK(hl_Q_raising(Composition({0, 1})) == hl_Q(Composition({0, 1})));
    CHECK(hl_Q_raising(Composition({1, 2})) == hl_Q(Composition({1, 2})));
}

TEST_CASE("the B family")
{
    const TRational t = TRational::t();
    CHECK(hl_B(Composition({2})) == gen_e(2) * one_minus_t() + gen_h(2) * (t * t - t));
    CHECK(hl_B(Composition({1, 1})) == gen_h(2) * TRational(poly({1, -1, -1, 1})));
    CHECK(hl_B(Composition({1, 1})) != hl_Q(Composition({2})));
    for (const Partition& lambda : partitions_up_to(5)) {
        CHECK(hl_B_vertex(lambda.as_composition()) == hl_B(lambda.as_composition()));
        CHECK(hl_B(lambda.as_composition()).eval_t(0) == schur(conjugate(lambda).as_composition()));
        CHECK(hl_Q(lambda.as_composition()).eval_t(0) == schur(lambda.as_composition()));
    }
}

TEST_CASE("two-variable expansion of Q(1,1)")
{
    const MultiPoly q11 = specialize_vars(hl_Q(Composition({1, 1})), 2);
    CHECK(q11.to_string() == "(t^3-t^2-t+1)*x1*x2");
    CHECK(q11.to_latex() == "\\left(t^{3}-t^{2}-t+1\\right)x_{1}x_{2}");
}

TEST_CASE("orthogonality at small weight")
{
    const auto parts = partitions_up_to(5);
    for (const Partition& lambda : parts) {
        for (const Partition& mu : parts) {
            const TRational expected = lambda == mu ? TRational(c_poly(lambda)) : TRational();
            CHECK(inner(hl_Q(lambda.as_composition()), hl_Q(mu.as_composition())) == expected);
        }
    }
}

TEST_CASE("skew functions")
{
    for (const Partition& lambda : partitions_up_to(5)) {
        CHECK(skew_Q(lambda, {}) == hl_Q(lambda.as_composition()));
        CHECK(skew_B(lambda, {}) == hl_B(lambda.as_composition()));
        for (int n = 1; n <= lambda.weight(); ++n)
            CHECK(adjoint_apply(gen_q(n), hl_Q(lambda.as_composition())) == skew_Q(lambda, {n}) * one_minus_t());
    }
    CHECK(skew_Q({1}, {2}).is_zero());
    CHECK(skew_Q({3, 1}, {2}) == gen_q(1) * hl_Q(Composition({1})));
}

TEST_CASE("property: Q_lambda[X+Y] = sum_mu Q_lambda/mu[X] Q_mu[Y]")
{
    for (const Partition& lambda : partitions_up_to(4)) {
        oracle::BiSym rhs;
        for (const Partition& mu : partitions_up_to(lambda.weight()))
            oracle::accumulate(rhs, oracle::tensor(skew_Q(lambda, mu), hl_Q(mu.as_composition())));
        CHECK(oracle::split_alphabet(hl_Q(lambda.as_composition())) == rhs);
    }
}
