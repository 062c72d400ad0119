#include "hlv/partition.hpp"

#include "oracles/partition_oracle.hpp"

#include <doctest.h>

using namespace hlv;

TEST_CASE("partitions validate their parts")
{
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::from_multiset({1, 3, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition({3, 3, 1}).multiplicities() == std::vector<int>{0, 1, 0, 2});
    CHECK(Partition({3, 1}).is_strict());
    CHECK_FALSE(Partition({2, 2}).is_strict());
    CHECK(merge({2, 1}, {3, 1}) == Partition({3, 2, 1, 1}));
    bool ok = false;
    CHECK(remove_parts({3, 2, 1, 1}, {2, 1}, ok) == Partition({3, 1}));
    CHECK(ok);
    remove_parts({3, 1}, {2}, ok);
    CHECK_FALSE(ok);
}

TEST_CASE("compositions compare after dropping trailing zeros")
{
    CHECK(Composition({2, 0}) == Composition({2}));
    CHECK(Composition({2, 0, 1}) != Composition({2, 1}));
    CHECK(Composition({-1, 2}).weight() == 1);
    CHECK(Composition({-1, 2}).positive_weight() == 2);
    CHECK(std::hash<Composition>{}(Composition({3, 0})) == std::hash<Composition>{}(Composition({3})));
    CHECK(to_partition(Composition({2, 1, 0})) == Partition({2, 1}));
    CHECK_THROWS_AS(to_partition(Composition({1, 2})), std::invalid_argument);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate({3}) == Partition({1, 1, 1}));
    CHECK(conjugate({2, 1}) == Partition({2, 1}));
    CHECK(conjugate({3, 1}) == Partition({2, 1, 1}));
    CHECK(conjugate({}) == Partition());
    for (int n = 0; n <= 10; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Partition lambda(parts);
            CHECK(conjugate(lambda).parts() == oracle::transpose_diagram(parts));
            CHECK(conjugate(conjugate(lambda)) == lambda);
        }
    }
}

TEST_CASE("epsilon")
{
    CHECK(epsilon({1}) == 0);
    CHECK(epsilon({1, 1}) == 1);
    for (int m = 1; m <= 8; ++m)
        CHECK(epsilon({m, 1}) == 1);
    CHECK(epsilon({2, 2, 1}) == 3 + 1);
}

TEST_CASE("property: epsilon((m,lambda)) = |lambda| + epsilon(lambda) for m >= lambda_1")
{
    for (int n = 0; n <= 7; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (int m = std::max(lambda.largest(), 1); m <= lambda.largest() + 3; ++m) {
                const Partition extended = to_partition(prepend(m, lambda.as_composition()));
                CHECK(epsilon(extended) == lambda.weight() + epsilon(lambda));
            }
        }
    }
}

TEST_CASE("c_lambda(t)")
{
    const TPoly one_minus_t = TPoly::one_minus_t_pow(1);
    CHECK(c_poly({}) == TPoly(1));
    CHECK(c_poly({1}) == one_minus_t);
    CHECK(c_poly({1, 1}) == one_minus_t * TPoly::one_minus_t_pow(2));
    CHECK(c_poly({2, 1}) == one_minus_t * one_minus_t);
}

TEST_CASE("property: c_(m,lambda) = (1-t) c_lambda for m > lambda_1")
{
    for (int n = 0; n <= 7; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const int m = lambda.largest() + 1;
            const Partition extended = to_partition(prepend(m, lambda.as_composition()));
            CHECK(c_poly(extended) == TPoly::one_minus_t_pow(1) * c_poly(lambda));
        }
    }
}

TEST_CASE("z_lambda")
{
    CHECK(z_factor({}) == 1);
    CHECK(z_factor({1, 1, 1}) == 6);
    CHECK(z_factor({2, 2, 1}) == 8);
    CHECK(z_factor({3}) == 3);
}

TEST_CASE("prepend and raising operators")
{
    CHECK(prepend(3, Composition({1})) == Composition({3, 1}));
    CHECK(prepend(0, Composition()).canonical().size() == 0);
    CHECK(prepend(-1, Composition({2})).parts() == std::vector<int>{-1, 2});
    CHECK(raising(Composition({1, 1}), 1, 2).parts() == std::vector<int>{2, 0});
    CHECK(raising(Composition({2, 0}), 1, 2).parts() == std::vector<int>{3, -1});
    CHECK(raising(Composition({2, 2, 2}), 1, 3).parts() == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(raising(Composition({1, 1}), 2, 1), std::out_of_range);
    CHECK_THROWS_AS(raising(Composition({1, 1}), 1, 3), std::out_of_range);
}

TEST_CASE("enumeration order and counts")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK(enumerate_partitions(-1).empty());
    for (int n = 0; n <= 25; ++n)
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == oracle::partition_count(n));
    for (int n = 0; n <= 12; ++n) {
        const auto ours = enumerate_partitions(n);
        const auto theirs = oracle::partitions(n);
        REQUIRE(ours.size() == theirs.size());
        for (std::size_t i = 0; i < ours.size(); ++i)
            CHECK(ours[i].parts() == theirs[i]);
    }
}
