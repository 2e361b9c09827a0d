#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "tsx/error.hpp"
#include "tsx/measures.hpp"
#include "tsx/verification.hpp"

namespace tsx {
namespace {

// Expected values marked "oracle" come from tests/oracles/derive_expected.py
// (50-digit mpmath evaluation of the defining sums).

const ProbabilityVector kSepalColumn({0.3058, 0.4148, 0.2794});
const ProbabilityVector kPetalColumn({0.1391, 0.3801, 0.4808});

TEST(ProbabilityVector, RejectsEmpty) { EXPECT_THROW(ProbabilityVector({}), Error); }

TEST(ProbabilityVector, RejectsBadSumWithMessage) {
    try {
        ProbabilityVector({0.3, 0.3, 0.3});
        FAIL() << "expected validation error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Validation);
        EXPECT_NE(std::string(e.what()).find("sum"), std::string::npos);
    }
}

TEST(ProbabilityVector, RejectsOutOfRange) {
    EXPECT_THROW(ProbabilityVector({1.5, -0.5}), Error);
    EXPECT_THROW(ProbabilityVector({NAN, 1.0}), Error);
}

TEST(ProbabilityVector, AcceptsWithinToleranceWithoutRenormalizing) {
    const ProbabilityVector p({0.5, 0.5 + 5e-10});
    EXPECT_EQ(p[1], 0.5 + 5e-10);
    EXPECT_THROW(ProbabilityVector({0.5, 0.5 + 5e-9}), Error);
}

TEST(ProbabilityVector, ZeroEntriesAllowed) { EXPECT_NO_THROW(ProbabilityVector({1.0, 0.0, 0.0})); }

TEST(TsallisOrder, RejectsNonPositive) {
    EXPECT_THROW(TsallisOrder(0.0), Error);
    EXPECT_THROW(TsallisOrder(-1.0), Error);
    EXPECT_THROW(TsallisOrder{INFINITY}, Error);
    EXPECT_TRUE(TsallisOrder(1.0).is_shannon_limit());
    EXPECT_TRUE(TsallisOrder(1.0 + 5e-9).is_shannon_limit());
    EXPECT_FALSE(TsallisOrder(1.0 + 1e-6).is_shannon_limit());
}

TEST(Shannon, Examples) {
    EXPECT_EQ(shannon_entropy(ProbabilityVector({1.0, 0.0, 0.0})), 0.0);
    EXPECT_NEAR(shannon_entropy(ProbabilityVector({0.5, 0.5})), std::log(2.0), 1e-15);
    EXPECT_NEAR(shannon_entropy(kSepalColumn), 1.0835920525968618, 1e-14);  // oracle
}

TEST(Extropy, Examples) {
    EXPECT_EQ(extropy(ProbabilityVector({1.0})), 0.0);
    EXPECT_EQ(extropy(ProbabilityVector({1.0, 0.0})), 0.0);
    EXPECT_NEAR(extropy(ProbabilityVector({0.5, 0.5})), std::log(2.0), 1e-15);
    EXPECT_NEAR(extropy(ProbabilityVector::uniform(3)), 0.81093021621632876, 1e-14);  // oracle
    EXPECT_NEAR(extropy(ProbabilityVector::uniform(3)), 2.0 * std::log(1.5), 1e-15);
}

TEST(TsallisEntropy, Examples) {
    for (double a : {0.3, 1.0, 2.0, 7.0}) {
        EXPECT_EQ(tsallis_entropy(ProbabilityVector::degenerate(4), TsallisOrder(a)), 0.0);
    }
    EXPECT_NEAR(tsallis_entropy(ProbabilityVector({0.5, 0.5}), TsallisOrder(2.0)), 0.5, 1e-15);
    EXPECT_NEAR(tsallis_entropy(kSepalColumn, TsallisOrder(0.5)), 1.4512491229764496, 1e-14);  // oracle
}

TEST(TsallisEntropy, AlphaOneDispatchesToShannon) {
    EXPECT_EQ(tsallis_entropy(kSepalColumn, TsallisOrder(1.0)), shannon_entropy(kSepalColumn));
}

TEST(TsallisExtropy, Examples) {
    for (double a : {0.3, 1.0, 2.0, 7.0}) {
        EXPECT_EQ(tsallis_extropy(ProbabilityVector::degenerate(5), TsallisOrder(a)), 0.0);
    }
    // Published extropy table, 4 decimals.
    EXPECT_NEAR(tsallis_extropy(kSepalColumn, TsallisOrder(0.5)), 0.8941, 1e-4);
    EXPECT_NEAR(tsallis_extropy(kPetalColumn, TsallisOrder(2.0)), 0.6050, 1e-4);
    // Literal defining formula at alpha = 2 (no cancellation issue there).
    double literal = 2.0;
    for (double p : kPetalColumn) literal -= (1 - p) * (1 - p);
    EXPECT_NEAR(tsallis_extropy(kPetalColumn, TsallisOrder(2.0)), literal, 1e-15);
}

TEST(TsallisExtropy, AlphaOneDispatchesToExtropy) {
    EXPECT_EQ(tsallis_extropy(kPetalColumn, TsallisOrder(1.0)), extropy(kPetalColumn));
}

TEST(TsallisExtropy, SmoothAcrossShannonBand) {
    // Just outside the band the general formula must agree with the limit.
    for (double eps : {-2e-8, 2e-8, -1e-7, 1e-7}) {
        EXPECT_NEAR(tsallis_extropy(kSepalColumn, TsallisOrder(1.0 + eps)), extropy(kSepalColumn), 1e-7);
        EXPECT_NEAR(tsallis_entropy(kSepalColumn, TsallisOrder(1.0 + eps)), shannon_entropy(kSepalColumn), 1e-7);
    }
}

TEST(TsallisEntropy, SubnormalProbabilityStaysFinite) {
    const ProbabilityVector p({1.0 - 1e-300, 1e-300});
    const double s = tsallis_entropy(p, TsallisOrder(0.01));
    EXPECT_TRUE(std::isfinite(s));
    EXPECT_GE(s, 0.0);
}

TEST(BinaryTsallis, Examples) {
    EXPECT_EQ(binary_tsallis(0.0, TsallisOrder(1.7)), 0.0);
    EXPECT_NEAR(binary_tsallis(0.5, TsallisOrder(2.0)), 0.5, 1e-15);
    EXPECT_NEAR(binary_tsallis(0.3, TsallisOrder(1.5)), 0.50004242834919456, 1e-14);  // oracle
    EXPECT_THROW(binary_tsallis(1.2, TsallisOrder(2.0)), Error);
}

TEST(BinaryTsallis, EqualsBothMeasuresOfTwoPointLaw) {
    for (double p : {0.0, 0.1, 0.3, 0.77, 1.0}) {
        const ProbabilityVector law({p, 1.0 - p});
        for (double a : {0.2, 1.0, 1.5, 4.0}) {
            EXPECT_NEAR(binary_tsallis(p, TsallisOrder(a)), tsallis_entropy(law, TsallisOrder(a)), 1e-15);
            EXPECT_NEAR(binary_tsallis(p, TsallisOrder(a)), tsallis_extropy(law, TsallisOrder(a)), 1e-15);
        }
    }
}

TEST(SumIdentityGap, Examples) {
    EXPECT_NEAR(sum_identity_gap(ProbabilityVector::uniform(3), TsallisOrder(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(sum_identity_gap(kSepalColumn, TsallisOrder(0.7)), 0.0, 1e-10);
}

TEST(SumIdentityGap, RandomPointsAlphaThree) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const ProbabilityVector p(random_simplex_point(rng, 2 + i % 9));
        ASSERT_LE(std::abs(sum_identity_gap(p, TsallisOrder(3.0))), 1e-10);
    }
}

TEST(UniformTsallisExtropy, Examples) {
    EXPECT_EQ(uniform_tsallis_extropy(1, TsallisOrder(0.4)), 0.0);
    EXPECT_EQ(uniform_tsallis_extropy(1, TsallisOrder(1.0)), 0.0);
    EXPECT_NEAR(uniform_tsallis_extropy(2, TsallisOrder(2.0)), 0.5, 1e-15);
    EXPECT_NEAR(uniform_tsallis_extropy(10, TsallisOrder(0.5)), 0.97366596101027599, 1e-14);  // oracle
    EXPECT_NEAR(uniform_tsallis_extropy(10, TsallisOrder(0.5)),
                tsallis_extropy(ProbabilityVector::uniform(10), TsallisOrder(0.5)), 1e-12);
    EXPECT_NEAR(uniform_tsallis_extropy(3, TsallisOrder(1.0)), 2.0 * std::log(1.5), 1e-15);
    EXPECT_THROW(uniform_tsallis_extropy(0, TsallisOrder(2.0)), Error);
}

TEST(UniformTsallisExtropy, LiteralClosedFormAtModerateN) {
    // (N-1)/(a-1) * (N^(a-1) - (N-1)^(a-1)) / N^(a-1), evaluated literally.
    for (std::uint64_t n : {2u, 5u, 17u, 100u}) {
        for (double a : {0.5, 1.5, 3.0}) {
            const double nn = static_cast<double>(n);
            const double literal =
                (nn - 1) / (a - 1) * (std::pow(nn, a - 1) - std::pow(nn - 1, a - 1)) / std::pow(nn, a - 1);
            EXPECT_NEAR(uniform_tsallis_extropy(n, TsallisOrder(a)), literal, 1e-12) << n << " " << a;
        }
    }
}

TEST(EntropyExtropyDifference, Examples) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const ProbabilityVector p(random_simplex_point(rng, 3 + i % 6));
        EXPECT_NEAR(entropy_extropy_difference(p, TsallisOrder(2.0)), 0.0, 1e-12);
    }
    const auto u3 = ProbabilityVector::uniform(3);
    EXPECT_NEAR(entropy_extropy_difference(u3, TsallisOrder(1.5)), 0.1112857853316526, 1e-14);  // oracle
    EXPECT_NEAR(entropy_extropy_difference(u3, TsallisOrder(3.0)), -1.0 / 9.0, 1e-14);         // oracle
    EXPECT_NEAR(uniform_entropy_extropy_difference(3, TsallisOrder(1.5)), 0.1112857853316526, 1e-14);
    EXPECT_NEAR(uniform_entropy_extropy_difference(3, TsallisOrder(3.0)), -1.0 / 9.0, 1e-14);
}

TEST(EntropyExtropyDifference, UniformClosedFormMatchesPublishedExpression) {
    // (2N^(a-1) - N^a - 1 + (N-1)^a) / ((a-1) N^(a-1))
    for (std::uint64_t n : {3u, 4u, 9u, 30u}) {
        for (double a : {0.3, 0.8, 1.3, 1.9, 2.5, 6.0}) {
            const double nn = static_cast<double>(n);
            const double expr = (2 * std::pow(nn, a - 1) - std::pow(nn, a) - 1 + std::pow(nn - 1, a)) /
                                ((a - 1) * std::pow(nn, a - 1));
            EXPECT_NEAR(uniform_entropy_extropy_difference(n, TsallisOrder(a)), expr, 1e-12);
            EXPECT_NEAR(entropy_extropy_difference(ProbabilityVector::uniform(n), TsallisOrder(a)), expr, 1e-12);
        }
    }
}

TEST(OrderingThreshold, Examples) {
    EXPECT_NEAR(ordering_threshold(3), 1.5736287234351513, 1e-13);    // oracle
    EXPECT_NEAR(ordering_threshold(100), 1.7927679201604933, 1e-13);  // oracle
    EXPECT_THROW(ordering_threshold(2), Error);
    EXPECT_THROW(ordering_threshold(0), Error);
}

TEST(OrderingThreshold, IsTheMaximizerOfTheUniformNumerator) {
    // g(a) = 2N^(a-1) - N^a - 1 + (N-1)^a has g'(G(N)) = 0.
    for (std::uint64_t n : {3u, 7u, 50u}) {
        const double nn = static_cast<double>(n);
        const double a = ordering_threshold(n);
        const double deriv = std::pow(nn, a - 1) * std::log(nn) * (2 - nn) + std::pow(nn - 1, a) * std::log(nn - 1);
        EXPECT_NEAR(deriv, 0.0, 1e-9 * std::pow(nn, a));
    }
}

TEST(ConfrontoBounds, Examples) {
    const auto b3 = confronto_bounds(3);
    EXPECT_EQ(b3.lower, 0.5);
    EXPECT_NEAR(b3.middle, std::log(2.0) / std::log(3.0), 1e-15);
    EXPECT_EQ(b3.upper, 0.75);
    const auto b100 = confronto_bounds(100);
    EXPECT_NEAR(b100.lower, 0.9898989898989899, 1e-15);
    EXPECT_NEAR(b100.middle, 0.99781759729877496, 1e-15);  // oracle
    EXPECT_NEAR(b100.upper, 0.99989796959493929, 1e-15);
    EXPECT_LT(b100.lower, b100.middle);
    EXPECT_LT(b100.middle, b100.upper);
    const auto big = confronto_bounds(1000000);
    EXPECT_LT(big.lower, big.middle);
    EXPECT_LT(big.middle, big.upper);
    EXPECT_GT(big.lower, 0.99999);
    EXPECT_THROW(confronto_bounds(2), Error);
}

TEST(PropertySweep, SmallSweepPasses) {
    SweepConfig config;
    config.points_per_support = 300;
    config.n_max = 500;
    for (const auto& check : run_property_sweep(config)) {
        EXPECT_TRUE(check.passed) << check.name << ": " << check.counterexample;
        EXPECT_GT(check.checked, 0u) << check.name;
    }
}

TEST(PropertySweep, InjectedFaultIsReported) {
    SweepConfig config;
    config.points_per_support = 20;
    config.n_max = 50;
    config.extropy_fault = 0.5;
    bool any_failed = false;
    for (const auto& check : run_property_sweep(config)) {
        if (!check.passed) {
            any_failed = true;
            EXPECT_FALSE(check.counterexample.empty());
        }
    }
    EXPECT_TRUE(any_failed);
}

TEST(PropertySweep, RejectsBadRanges) {
    SweepConfig config;
    config.n_min = 2;
    EXPECT_THROW(run_property_sweep(config), Error);
    config = SweepConfig{};
    config.alphas.clear();
    EXPECT_THROW(run_property_sweep(config), Error);
}

}  // namespace
}  // namespace tsx
