#include "hlv/suites.hpp"

#include "hlv/bases.hpp"
#include "hlv/errors.hpp"
#include "hlv/parallel.hpp"
#include "hlv/structure.hpp"
#include "hlv/vertex.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hlv {

Json SuiteResult::to_json() const
{
    Json out{{"suite", name},
             {"max_weight", max_weight},
             {"passed", passed},
             {"checks", checks},
             {"failure", nullptr},
             {"warnings", warnings}};
    if (failure)
        out["failure"] = *failure;
    if (integrity_error)
        out["integrity_error"] = true;
    return out;
}

SuiteResult run_cases(const std::string& name, int max_weight, const std::vector<Case>& cases, int jobs)
{
    std::vector<CaseResult> results(cases.size());
    std::vector<char> integrity(cases.size(), 0);
    auto run_one = [&](std::size_t i) {
        try {
            results[i] = cases[i]();
        } catch (const IntegrityError& e) {
            results[i].failure = Json{{"error", e.what()}};
            integrity[i] = 1;
        }
    };

    parallel_for(cases.size(), jobs, run_one);

    SuiteResult out;
    out.name = name;
    out.max_weight = max_weight;
    out.checks = cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        for (auto& w : results[i].warnings)
            out.warnings.push_back(std::move(w));
        if (results[i].failure && out.passed) {
            out.passed = false;
            out.failure = std::move(results[i].failure);
            out.integrity_error = integrity[i] != 0;
        }
    }
    return out;
}

namespace {

CaseResult pass()
{
    return {};
}

CaseResult fail(Json details)
{
    CaseResult r;
    r.failure = std::move(details);
    return r;
}

CaseResult compare(const char* check, Json where, const SymFunc& expected, const SymFunc& actual)
{
    if (expected == actual)
        return pass();
    where["check"] = check;
    where["expected"] = to_json(expected);
    where["actual"] = to_json(actual);
    return fail(std::move(where));
}

CaseResult compare(const char* check, Json where, const TRational& expected, const TRational& actual)
{
    if (expected == actual)
        return pass();
    where["check"] = check;
    where["expected"] = to_json(expected);
    where["actual"] = to_json(actual);
    return fail(std::move(where));
}

/// Runs the comparisons in order and stops at the first failure.
CaseResult first_failure(std::initializer_list<std::function<CaseResult()>> checks)
{
    for (const auto& check : checks) {
        CaseResult r = check();
        if (r.failure)
            return r;
    }
    return pass();
}

std::vector<Partition> partitions_up_to(int w)
{
    std::vector<Partition> out;
    for (int n = 0; n <= w; ++n)
        for (Partition& p : enumerate_partitions(n))
            out.push_back(std::move(p));
    return out;
}

/// (1 - t)^a (-t)^b as a polynomial coefficient.
TRational one_minus_t_pow_times(int a, int b)
{
    TRational out = TRational(TPoly::one_minus_t_pow(1)).pow(static_cast<unsigned>(a));
    return out * TRational(-TPoly::t()).pow(static_cast<unsigned>(b));
}

const TRational& one_minus_t()
{
    static const TRational value(TPoly::one_minus_t_pow(1));
    return value;
}

Partition add_column(int n, const Partition& lambda)
{
    std::vector<int> parts = lambda.parts();
    if (parts.size() < static_cast<std::size_t>(n))
        parts.resize(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        ++parts[static_cast<std::size_t>(i)];
    return Partition(std::move(parts));
}

TRational random_coeff(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> degree(0, 3);
    std::vector<BigRational> num(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : num)
        c = small(rng);
    if (num.back() == 0)
        num.back() = 1;
    TPoly den(1);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        den = TPoly::one_minus_t_pow(static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, 3)(rng)));
    return TRational(TPoly::from_dense(num), den);
}

SymFunc random_symfunc(std::mt19937_64& rng, int max_degree)
{
    SymFunc out;
    const int terms = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < terms; ++k) {
        const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
        const auto parts = enumerate_partitions(d);
        const auto& index = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
        out.add_term(index, random_coeff(rng));
    }
    return out;
}

using CaseList = std::vector<Case>;

// ---- suites ----------------------------------------------------------------

CaseList suite_example(int)
{
    CaseList cases;
    struct Row {
        const char* name;
        std::function<SymFunc()> f;
        const char* latex;
    };
    static const std::vector<Row> rows = {
        {"Q(1,1)", [] { return hl_Q({1, 1}); }, "\\left(t^{3}-t^{2}-t+1\\right)x_{1}x_{2}"},
        {"B(2)", [] { return hl_B_vertex({2}); },
         "\\left(t^{2}-t\\right)x_{1}^{2}+\\left(t^{2}-2\\,t+1\\right)x_{1}x_{2}+\\left(t^{2}-t\\right)x_{2}^{2}"},
        {"Q(2)", [] { return hl_Q({2}); },
         "\\left(-t+1\\right)x_{1}^{2}+\\left(t^{2}-2\\,t+1\\right)x_{1}x_{2}+\\left(-t+1\\right)x_{2}^{2}"},
        {"B(1,1)", [] { return hl_B_vertex({1, 1}); },
         "\\left(t^{3}-t^{2}-t+1\\right)x_{1}^{2}+\\left(t^{3}-t^{2}-t+1\\right)x_{1}x_{2}+\\left(t^{3}-t^{2}-t+1\\right)x_{2}^{2}"},
    };
    for (const Row& row : rows) {
        cases.push_back([&row] {
            const std::string actual = specialize_vars(row.f(), 2).to_latex();
            if (actual == row.latex)
                return pass();
            return fail({{"check", "two-variable expansion"}, {"function", row.name}, {"expected", row.latex},
                         {"actual", actual}});
        });
    }
    cases.push_back([] {
        if (hl_Q({1, 1}) != hl_B_vertex({2}) && hl_Q({2}) != hl_B_vertex({1, 1}))
            return pass();
        return fail({{"check", "Q(1,1) != B(2) and Q(2) != B(1,1)"}});
    });
    cases.push_back([] {
        const TRational c(TPoly::from_dense({1, -1, -1, 1}));
        const TRational t = TRational::t();
        const TRational t2_minus_t = t * t - t;
        return first_failure({
            [&] { return compare("Q(1,1) = (t^3-t^2-t+1) e_2", {}, gen_e(2) * c, hl_Q({1, 1})); },
            [&] { return compare("B(1,1) = (t^3-t^2-t+1) h_2", {}, gen_h(2) * c, hl_B_vertex({1, 1})); },
            [&] { return compare("Q(2) = (1-t) h_2 + (t^2-t) e_2", {}, gen_h(2) * one_minus_t() + gen_e(2) * t2_minus_t,
                                 hl_Q({2})); },
            [&] { return compare("B(2) = (1-t) e_2 + (t^2-t) h_2", {}, gen_e(2) * one_minus_t() + gen_h(2) * t2_minus_t,
                                 hl_B_vertex({2})); },
        });
    });
    return cases;
}

CaseList suite_generators(int w)
{
    CaseList cases;
    for (int n = 0; n <= w; ++n) {
        cases.push_back([n] {
            SymFunc he, qb;
            for (int i = 0; i <= n; ++i) {
                const TRational sign = (n - i) % 2 == 0 ? 1 : -1;
                he += gen_h(i) * gen_e(n - i) * sign;
                qb += gen_q(i) * gen_b(n - i) * sign;
            }
            const SymFunc delta = n == 0 ? SymFunc(1) : SymFunc();
            const Json where{{"n", n}};
            return first_failure({
                [&] { return compare("sum (-1)^j h_i e_j = delta", where, delta, he); },
                [&] { return compare("sum (-1)^j q_i b_j = delta", where, delta, qb); },
                [&] { return compare("omega(h_n) = e_n", where, gen_e(n), omega(gen_h(n))); },
                [&] { return compare("omega(q_n) = b_n", where, gen_b(n), omega(gen_q(n))); },
                [&] { return compare("q_n(t=0) = h_n", where, gen_h(n), gen_q(n).eval_t(0)); },
                [&] { return compare("q_n(t=-1) = q'_n", where, gen_qprime(n), gen_q(n).eval_t(-1)); },
            });
        });
    }
    return cases;
}

CaseList suite_duality(int w)
{
    CaseList cases;
    const auto parts = partitions_up_to(w);
    for (const Partition& lambda : parts) {
        cases.push_back([lambda, parts] {
            const SymFunc q = generator_product(Family::Q, lambda.as_composition());
            const SymFunc b = generator_product(Family::B, lambda.as_composition());
            for (const Partition& mu : parts) {
                const TRational delta = lambda == mu ? 1 : 0;
                const Json where{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
                CaseResult r = first_failure({
                    [&] { return compare("(q_lambda, m_mu) = delta", where, delta, inner(q, m_in_p(mu))); },
                    [&] { return compare("(b_lambda, f_mu) = delta", where, delta, inner(b, forgotten(mu))); },
                });
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    return cases;
}

CaseList suite_orthogonality(int w)
{
    CaseList cases;
    const auto parts = partitions_up_to(w);
    for (const Partition& lambda : parts) {
        cases.push_back([lambda, parts] {
            const SymFunc& q = hl_Q(lambda.as_composition());
            const SymFunc& b = hl_B_vertex(lambda.as_composition());
            for (const Partition& mu : parts) {
                const TRational expected = lambda == mu ? TRational(c_poly(lambda)) : TRational();
                const Json where{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
                CaseResult r = first_failure({
                    [&] { return compare("(Q_lambda, Q_mu) = c_lambda delta", where, expected,
                                         inner(q, hl_Q(mu.as_composition()))); },
                    [&] { return compare("(B_lambda, B_mu) = c_lambda delta", where, expected,
                                         inner(b, hl_B_vertex(mu.as_composition()))); },
                });
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    return cases;
}

CaseList suite_creation(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        for (int n = -2; n <= lambda.largest() + 3; ++n) {
            cases.push_back([lambda, n] {
                const Composition extended = prepend(n, lambda.as_composition());
                const Json where{{"lambda", to_json(lambda)}, {"n", n}};
                return first_failure({
                    [&] { return compare("H_n Q_lambda = Q_(n,lambda)", where, hl_Q_raising(extended),
                                         jing_H(n, hl_Q_raising(lambda.as_composition()))); },
                    [&] { return compare("Hbar_n B_lambda = B_(n,lambda)", where, hl_B_raising(extended),
                                         jing_Hbar(n, hl_B_raising(lambda.as_composition()))); },
                });
            });
        }
        for (int n = -lambda.weight() - 3; n < -lambda.weight(); ++n) {
            cases.push_back([lambda, n] {
                const Composition extended = prepend(n, lambda.as_composition());
                const Json where{{"nu", to_json(lambda)}, {"n", n}};
                return first_failure({
                    [&] { return compare("Q_(n,nu) = 0 for n < -|nu| (vertex)", where, SymFunc(), hl_Q(extended)); },
                    [&] { return compare("Q_(n,nu) = 0 for n < -|nu| (raising)", where, SymFunc(),
                                         hl_Q_raising(extended)); },
                });
            });
        }
    }
    return cases;
}

CaseList suite_specialize_t0(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        cases.push_back([lambda] {
            const Composition index = lambda.as_composition();
            const Json where{{"lambda", to_json(lambda)}};
            return first_failure({
                [&] { return compare("Q_lambda(t=0) = S_lambda", where, schur(index), hl_Q(index).eval_t(0)); },
                [&] { return compare("B_lambda(t=0) = S_lambda'", where, schur(conjugate(lambda).as_composition()),
                                     hl_B_vertex(index).eval_t(0)); },
            });
        });
    }
    return cases;
}

CaseList suite_specialize_tm1(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        if (!lambda.is_strict())
            continue;
        cases.push_back([lambda] {
            const Composition index = lambda.as_composition();
            const SymMatrix m = schurQ_matrix(index);
            const SymFunc pf = pfaffian(m);
            const Json where{{"lambda", to_json(lambda)}};
            return first_failure({
                [&] { return compare("Q_lambda(t=-1) = Q'_lambda", where, pf, hl_Q(index).eval_t(-1)); },
                [&] { return compare("B_lambda(t=-1) = Q'_lambda", where, pf, hl_B_vertex(index).eval_t(-1)); },
                [&] { return compare("Pf(M)^2 = det(M)", where, determinant(m), pf * pf); },
                [&] { return compare("omega(Q'_lambda) = Q'_lambda", where, pf, omega(pf)); },
            });
        });
    }
    return cases;
}

CaseList suite_bernstein(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        cases.push_back([lambda] {
            const Composition index = lambda.as_composition();
            const SymFunc s = schur(index);
            for (int n = -2; n <= 5; ++n) {
                const Json where{{"lambda", to_json(lambda)}, {"n", n}};
                CaseResult r = first_failure({
                    [&] { return compare("row Bernstein appends a row", where, schur(prepend(n, index)),
                                         bernstein(n, s)); },
                    [&] { return compare("H_n at t=0 is the row Bernstein operator", where, bernstein(n, s),
                                         jing_H(n, s).eval_t(0)); },
                    [&] { return compare("Hbar_n at t=0 is the column operator", where, bernstein_col(n, s),
                                         jing_Hbar(n, s).eval_t(0)); },
                });
                if (r.failure)
                    return r;
                if (n < static_cast<int>(lambda.length()))
                    continue;
                r = compare("column Bernstein appends a column", where, schur(add_column(n, lambda).as_composition()),
                            bernstein_col(n, s));
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    return cases;
}

CaseList suite_monomials(int w)
{
    CaseList cases;
    for (int n = 0; n <= w; ++n) {
        cases.push_back([n] {
            const auto q = monomial_expansion(gen_q(n), n);
            const auto b = monomial_expansion(gen_b(n), n);
            for (const Partition& lambda : enumerate_partitions(n)) {
                const int len = static_cast<int>(lambda.length());
                const Json where{{"n", n}, {"lambda", to_json(lambda)}};
                auto at = [&lambda](const std::map<Partition, TRational>& m) {
                    auto it = m.find(lambda);
                    return it == m.end() ? TRational() : it->second;
                };
                CaseResult r = first_failure({
                    [&] { return compare("[m_lambda] q_n = (1-t)^l", where, one_minus_t_pow_times(len, 0), at(q)); },
                    [&] { return compare("[m_lambda] b_n = (-t)^(n-l) (1-t)^l", where,
                                         one_minus_t_pow_times(len, n - len), at(b)); },
                });
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    return cases;
}

CaseList suite_adjoints(int w)
{
    CaseList cases;
    for (int n = 0; n <= w; ++n) {
        for (int k = 0; k <= n; ++k) {
            cases.push_back([n, k] {
                const Json where{{"k", k}, {"n", n}};
                const TRational same = k == 0 ? TRational(1) : one_minus_t();
                const TRational cross = k == 0 ? TRational(1) : one_minus_t_pow_times(1, k - 1);
                return first_failure({
                    [&] { return compare("q_k^perp q_n", where, gen_q(n - k) * same, adjoint_apply(gen_q(k), gen_q(n))); },
                    [&] { return compare("b_k^perp q_n", where, gen_q(n - k) * cross, adjoint_apply(gen_b(k), gen_q(n))); },
                    [&] { return compare("q_k^perp b_n", where, gen_b(n - k) * cross, adjoint_apply(gen_q(k), gen_b(n))); },
                    [&] { return compare("b_k^perp b_n", where, gen_b(n - k) * same, adjoint_apply(gen_b(k), gen_b(n))); },
                });
            });
        }
    }
    return cases;
}

CaseList suite_skew_separation(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        for (int k = 0; k <= 3; ++k) {
            for (int n = lambda.largest() + k + 1; n <= lambda.largest() + k + 2; ++n) {
                cases.push_back([lambda, k, n] {
                    const Partition top = to_partition(prepend(n, lambda.as_composition()));
                    const Json where{{"lambda", to_json(lambda)}, {"k", k}, {"n", n}};
                    return compare("Q_(n,lambda)/(n-k) = q_k Q_lambda", where,
                                   gen_q(k) * hl_Q(lambda.as_composition()), skew_Q(top, Partition{n - k}));
                });
            }
        }
        for (int n = 1; n <= lambda.weight(); ++n) {
            cases.push_back([lambda, n] {
                const Json where{{"lambda", to_json(lambda)}, {"n", n}};
                return compare("q_n^perp Q_lambda = (1-t) Q_lambda/(n)", where,
                               skew_Q(lambda, Partition{n}) * one_minus_t(),
                               adjoint_apply(gen_q(n), hl_Q(lambda.as_composition())));
            });
        }
    }
    return cases;
}

CaseList suite_plethysm(int w)
{
    CaseList cases;
    const AlphabetExpr just_z{false, {{1, 1, false}}};
    const AlphabetExpr x_plus_z{true, {{1, 1, false}}};
    for (int m = 0; m <= w; ++m) {
        cases.push_back([m, just_z, x_plus_z] {
            const Json where{{"m", m}};
            const SymFunc qz = m == 0 ? SymFunc(1) : SymFunc(one_minus_t());
            const SymFunc bz = m == 0 ? SymFunc(1) : SymFunc(one_minus_t_pow_times(1, m - 1));
            LaurentZ eigen;
            for (int k = 0; k <= m; ++k)
                eigen.add_term(k, gen_q(m - k) * (k == 0 ? TRational(1) : one_minus_t()));
            const TRational sign = m % 2 == 0 ? 1 : -1;
            auto laurent = [&](const char* check, const LaurentZ& expected, const LaurentZ& actual) {
                if (expected == actual)
                    return pass();
                Json details = where;
                details["check"] = check;
                return fail(std::move(details));
            };
            return first_failure({
                [&] { return laurent("q_m[z] = (1-t) z^m", LaurentZ::monomial(m, qz), plethysm_alphabet(gen_q(m), just_z)); },
                [&] { return laurent("b_m[z] = (-t)^(m-1) (1-t) z^m", LaurentZ::monomial(m, bz),
                                     plethysm_alphabet(gen_b(m), just_z)); },
                [&] { return laurent("q_m[X+z] = sum_k q_(m-k) q_k[z]", eigen, plethysm_alphabet(gen_q(m), x_plus_z)); },
                [&] { return compare("q_m[-X] = (-1)^m b_m", where, gen_b(m) * sign, negate_alphabet(gen_q(m))); },
            });
        });
    }
    for (const Partition& lambda : partitions_up_to(std::min(w, 5))) {
        cases.push_back([lambda, x_plus_z] {
            const LaurentZ expanded = plethysm_alphabet(hl_Q(lambda.as_composition()), x_plus_z);
            for (int i = 0; i <= lambda.weight(); ++i) {
                const SymFunc expected = i == 0 ? hl_Q(lambda.as_composition())
                                                : skew_Q(lambda, Partition{i}) * one_minus_t();
                const Json where{{"lambda", to_json(lambda)}, {"i", i}};
                CaseResult r = compare("[z^i] Q_lambda[X+z] = Q_lambda/(i) q_i[z]", where, expected, expanded.coeff(i));
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    return cases;
}

CaseList suite_stability(int w, bool hall)
{
    CaseList cases;
    const auto parts = partitions_up_to(w);
    for (const Partition& lambda : parts) {
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                cases.push_back([lambda, mu, nu, hall] {
                    const ScanKind kind = hall ? ScanKind::Hall : ScanKind::Skew;
                    const int bound = theorem_bound(lambda, mu, nu);
                    const int m_max = std::max({bound + 4, separation_limit(mu, nu) + kStableRun,
                                                onset_limit(kind, lambda, mu, nu) + kStableRun});
                    const StabilityReport report = stability_scan(lambda, mu, nu, m_max, kind);
                    auto scan_failure = [&](const char* check) {
                        Json details = to_json(report);
                        details["check"] = check;
                        details["onset_limit"] = report.onset_limit();
                        details["separation_limit"] = separation_limit(mu, nu);
                        return fail(std::move(details));
                    };
                    if (!report.onset)
                        return scan_failure("sequence stabilizes");
                    if (*report.onset > separation_limit(mu, nu) && !hall)
                        return scan_failure("onset within separation limit");
                    if (hall)
                        return report.stabilized_within_bound() ? pass() : scan_failure("onset within bound");
                    const StabilityReport dual = stability_scan(lambda, mu, nu, m_max, ScanKind::SkewB);
                    for (std::size_t i = 0; i < report.samples.size(); ++i) {
                        if (report.samples[i].second != dual.samples[i].second) {
                            const Json where{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)},
                                             {"m", report.samples[i].first}};
                            return compare("B-side sample equals Q-side sample", where, report.samples[i].second,
                                           dual.samples[i].second);
                        }
                    }
                    return report.stabilized_within_bound() ? pass() : scan_failure("onset within bound");
                });
            }
        }
    }
    return cases;
}

CaseList suite_hall(int w)
{
    CaseList cases;
    cases.push_back([] {
        return first_failure({
            [] { return compare("g^(1,1)_(1)(1) = t+1", {}, TRational(TPoly::from_dense({1, 1})),
                                TRational(hall_g({1, 1}, {1}, {1}))); },
            [] { return compare("g^(2)_(1)(1) = 1", {}, TRational(1), TRational(hall_g({2}, {1}, {1}))); },
        });
    });
    for (int n = 0; n <= w; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            cases.push_back([lambda, n] {
                CaseResult out;
                const SymFunc s_lambda = schur(lambda.as_composition());
                for (int a = 0; a <= n; ++a) {
                    for (const Partition& mu : enumerate_partitions(a)) {
                        for (const Partition& nu : enumerate_partitions(n - a)) {
                            const Json where{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}};
                            const TPoly g = hall_g(lambda, mu, nu);
                            CaseResult r = first_failure({
                                [&] { return compare("g symmetric in mu, nu", where, TRational(g),
                                                     TRational(hall_g(lambda, nu, mu))); },
                                [&] {
                                    const SymFunc product = schur(mu.as_composition()) * schur(nu.as_composition());
                                    return compare("f(t=0) is the Littlewood-Richardson coefficient", where,
                                                   inner(product, s_lambda, InnerProduct::Hall),
                                                   TRational(f_coeff(lambda, mu, nu).eval_at(0)));
                                },
                            });
                            if (r.failure)
                                return r;
                            for (const auto& term : g.terms())
                                if (sgn(term.coeff) < 0)
                                    out.warnings.push_back("negative coefficient in g^" + lambda.to_string() + "_" +
                                                           mu.to_string() + "," + nu.to_string() + " = " + g.to_string());
                        }
                    }
                }
                return out;
            });
        }
    }
    return cases;
}

CaseList suite_routes(int w)
{
    CaseList cases;
    for (const Partition& lambda : partitions_up_to(w)) {
        cases.push_back([lambda] {
            const Composition index = lambda.as_composition();
            const long k = index.positive_weight();
            const Json where{{"lambda", to_json(lambda)}};
            return first_failure({
                [&] { return compare("Q vertex = Q raising", where, hl_Q_raising(index), hl_Q(index)); },
                [&] { return compare("B vertex = omega Q", where, hl_B(index), hl_B_vertex(index)); },
                [&] { return compare("B vertex = B raising", where, hl_B_raising(index), hl_B_vertex(index)); },
                [&] {
                    if (raising_expansion(index, k) == raising_expansion(index, k + 1))
                        return pass();
                    Json details = where;
                    details["check"] = "raising expansion cap K vs K+1";
                    return fail(std::move(details));
                },
            });
        });
    }
    std::vector<std::pair<std::string, SymFunc>> inputs;
    for (const Partition& lambda : partitions_up_to(std::min(w, 4))) {
        inputs.emplace_back("Q" + lambda.to_string(), hl_Q(lambda.as_composition()));
        inputs.emplace_back("B" + lambda.to_string(), hl_B_vertex(lambda.as_composition()));
        inputs.emplace_back("p" + lambda.to_string(), SymFunc::p(lambda));
    }
    for (const auto& [label, f] : inputs) {
        cases.push_back([label, f] {
            const VertexSeries jing = vertex_series(kJing, f, -4, 4);
            const VertexSeries dual = vertex_series(kJingDual, f, -4, 4);
            const VertexSeries bb = vertex_series({SeriesKind::Beta, SeriesKind::Beta}, f, -4, 4);
            const VertexSeries aa = vertex_series({SeriesKind::Alpha, SeriesKind::Alpha}, f, -4, 4);
            const VertexSeries star = dual_jing_series(f, -4, 4);
            const LaurentZ dual_flipped = dual.series().negate_z();
            for (int n = -4; n <= 4; ++n) {
                const Json where{{"input", label}, {"n", n}};
                const SymFunc hbar = jing_Hbar(n, f);
                const TRational sign = n % 2 == 0 ? 1 : -1;
                CaseResult r = first_failure({
                    [&] { return compare("[z^n] H(z) F = H_n F", where, jing_H(n, f), jing.component(n)); },
                    [&] { return compare("[z^n] Hbar(z) F = Hbar_n F", where, hbar, dual.component(n)); },
                    [&] { return compare("[z^n] beta_z beta_{-1/z}^perp F", where,
                                         generic_vertex({SeriesKind::Beta, SeriesKind::Beta}, n, f), bb.component(n)); },
                    [&] { return compare("[z^n] alpha_z alpha_{-1/z}^perp F", where,
                                         generic_vertex({SeriesKind::Alpha, SeriesKind::Alpha}, n, f),
                                         aa.component(n)); },
                    [&] { return compare("[z^n] H*(z) F = (-1)^n Hbar_n F", where, hbar * sign, star.component(n)); },
                    [&] { return compare("[z^n] Hbar(-z) F = (-1)^n Hbar_n F", where, hbar * sign,
                                         dual_flipped.coeff(n)); },
                });
                if (r.failure)
                    return r;
            }
            return pass();
        });
    }
    for (int n = -2; n <= 4; ++n) {
        cases.push_back([n] {
            const Json where{{"n", n}};
            return first_failure({
                [&] { return compare("H(z) 1 = alpha_z", where, gen_q(n), vertex_series(kJing, 1, -4, 4).component(n)); },
                [&] { return compare("(Beta,Beta)_n 1 = b_n", where, gen_b(n),
                                     generic_vertex({SeriesKind::Beta, SeriesKind::Beta}, n, 1)); },
                [&] { return compare("(Alpha,Alpha)_n 1 = q_n", where, gen_q(n),
                                     generic_vertex({SeriesKind::Alpha, SeriesKind::Alpha}, n, 1)); },
            });
        });
    }
    return cases;
}

CaseList suite_omega(int w, std::uint64_t seed)
{
    CaseList cases;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 24; ++i) {
        const SymFunc f = random_symfunc(rng, w);
        const SymFunc g = random_symfunc(rng, std::min(w, 6));
        const SymFunc h = random_symfunc(rng, std::min(w, 6));
        const SymFunc small = random_symfunc(rng, std::min(w, 5));
        const int n = std::uniform_int_distribution<int>(-2, 4)(rng);
        cases.push_back([=] {
            const Json where{{"sample", i}, {"seed", seed}};
            return first_failure({
                [&] { return compare("omega(omega F) = F", where, f, omega(omega(f))); },
                [&] { return compare("(omega G, omega H) = (G, H)", where, inner(g, h), inner(omega(g), omega(h))); },
                [&] { return compare("omega H_n omega = Hbar_n", where, jing_Hbar(n, small),
                                     omega(jing_H(n, omega(small)))); },
            });
        });
    }
    return cases;
}

CaseList suite_adjoint(int w, std::uint64_t seed)
{
    CaseList cases;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 24; ++i) {
        const SymFunc f = random_symfunc(rng, w);
        const SymFunc g = random_symfunc(rng, w);
        const SymFunc h = random_symfunc(rng, w);
        cases.push_back([=] {
            const Json where{{"sample", i}, {"seed", seed}};
            return first_failure({
                [&] { return compare("(F^perp G, H) = (G, F H)", where, inner(g, f * h), inner(adjoint_apply(f, g), h)); },
                [&] { return compare("Hall form: (F^perp G, H) = (G, F H)", where,
                                     inner(g, f * h, InnerProduct::Hall),
                                     inner(adjoint_apply(f, g, InnerProduct::Hall), h, InnerProduct::Hall)); },
            });
        });
    }
    return cases;
}

struct Registered {
    SuiteInfo info;
    std::function<CaseList(const SuiteOptions&)> build;
};

const std::vector<Registered>& registry()
{
    static const std::vector<Registered> suites = {
        {{"example", "two-variable expansions of Q(1,1), B(2), Q(2), B(1,1) and their h/e forms", 2},
         [](const SuiteOptions& o) { return suite_example(o.max_weight); }},
        {{"generators", "sigma lambda = 1, alpha beta = 1, omega and t = 0, -1 on one-row generators", 10},
         [](const SuiteOptions& o) { return suite_generators(o.max_weight); }},
        {{"duality", "(q_lambda, m_mu) and (b_lambda, f_mu) are Kronecker deltas", 5},
         [](const SuiteOptions& o) { return suite_duality(o.max_weight); }},
        {{"orthogonality", "(Q_lambda, Q_mu) = (B_lambda, B_mu) = c_lambda(t) delta", 7},
         [](const SuiteOptions& o) { return suite_orthogonality(o.max_weight); }},
        {{"creation", "H_n Q_lambda = Q_(n,lambda), Hbar_n B_lambda = B_(n,lambda), vanishing law", 6},
         [](const SuiteOptions& o) { return suite_creation(o.max_weight); }},
        {{"specialize-t0", "Q_lambda(t=0) = S_lambda and B_lambda(t=0) = S_lambda'", 8},
         [](const SuiteOptions& o) { return suite_specialize_t0(o.max_weight); }},
        {{"specialize-t-1", "Q_lambda(t=-1) = B_lambda(t=-1) = Q'_lambda for strict lambda, Pf^2 = det", 7},
         [](const SuiteOptions& o) { return suite_specialize_tm1(o.max_weight); }},
        {{"bernstein", "row and column Bernstein operators and the t = 0 degenerations", 6},
         [](const SuiteOptions& o) { return suite_bernstein(o.max_weight); }},
        {{"monomials", "monomial expansions of q_n and b_n", 8},
         [](const SuiteOptions& o) { return suite_monomials(o.max_weight); }},
        {{"adjoints", "q_k^perp q_n, b_k^perp q_n, q_k^perp b_n, b_k^perp b_n", 7},
         [](const SuiteOptions& o) { return suite_adjoints(o.max_weight); }},
        {{"skew-separation", "Q_(n,lambda)/(n-k) = q_k Q_lambda and q_n^perp Q_lambda = (1-t) Q_lambda/(n)", 4},
         [](const SuiteOptions& o) { return suite_skew_separation(o.max_weight); }},
        {{"plethysm", "q_m[z], b_m[z], q_m[X+z], q_m[-X] and one-row coproduct of Q_lambda", 6},
         [](const SuiteOptions& o) { return suite_plethysm(o.max_weight); }},
        {{"stability", "skew stability onset within the degree bound; B-side agrees termwise", 3},
         [](const SuiteOptions& o) { return suite_stability(o.max_weight, false); }},
        {{"hall", "Hall polynomials: integrality, symmetry, calibration, t = 0 Littlewood-Richardson", 5},
         [](const SuiteOptions& o) { return suite_hall(o.max_weight); }},
        {{"hall-stability", "Hall-polynomial sequences stabilize", 2},
         [](const SuiteOptions& o) { return suite_stability(o.max_weight, true); }},
        {{"routes", "vertex vs raising vs omega routes, series components, raising cap, H*(z) = Hbar(-z)", 6},
         [](const SuiteOptions& o) { return suite_routes(o.max_weight); }},
        {{"omega", "randomized: omega involution, isometry, conjugation of H_n", 8},
         [](const SuiteOptions& o) { return suite_omega(o.max_weight, o.seed); }},
        {{"adjoint", "randomized: defining property of F^perp for both forms", 5},
         [](const SuiteOptions& o) { return suite_adjoint(o.max_weight, o.seed); }},
    };
    return suites;
}

} // namespace

const std::vector<SuiteInfo>& list_suites()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& r : registry())
            out.push_back(r.info);
        return out;
    }();
    return infos;
}

const SuiteInfo* find_suite(const std::string& name)
{
    for (const auto& info : list_suites())
        if (info.name == name)
            return &info;
    return nullptr;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts)
{
    for (const auto& r : registry())
        if (r.info.name == name)
            return run_cases(name, opts.max_weight, r.build(opts), opts.jobs);
    throw std::out_of_range("unknown suite: " + name);
}

} // namespace hlv
