#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tsx {

/// Finite discrete distribution. Construction validates the simplex
/// constraints; the stored values are never renormalized.
class ProbabilityVector {
public:
    static constexpr double kSumTolerance = 1e-9;

    /// Throws Error{Validation} naming the violated constraint (empty, range, sum).
    explicit ProbabilityVector(std::vector<double> probs);

    static ProbabilityVector uniform(std::size_t n);
    /// The point mass (1, 0, ..., 0) of support size n.
    static ProbabilityVector degenerate(std::size_t n, std::size_t at = 0);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::span<const double> values() const noexcept { return probs_; }
    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

    friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

private:
    std::vector<double> probs_;
};

/// Order of the Tsallis family. Any alpha > 0 is accepted; values within
/// kShannonBand of 1 are evaluated through the Shannon/extropy limit.
class TsallisOrder {
public:
    static constexpr double kShannonBand = 1e-8;

    explicit TsallisOrder(double alpha);

    double value() const noexcept { return alpha_; }
    bool is_shannon_limit() const noexcept;

private:
    double alpha_;
};

double shannon_entropy(const ProbabilityVector& p);
double extropy(const ProbabilityVector& p);
double tsallis_entropy(const ProbabilityVector& p, TsallisOrder alpha);
double tsallis_extropy(const ProbabilityVector& p, TsallisOrder alpha);

/// Tsallis entropy of the two-point law (p, 1 - p); equal to its Tsallis extropy.
double binary_tsallis(double p, TsallisOrder alpha);

/// S_a(p) + JS_a(p) - sum_i binary_tsallis(p_i, a). Zero up to rounding.
double sum_identity_gap(const ProbabilityVector& p, TsallisOrder alpha);

/// Closed-form Tsallis extropy of the uniform law on n points (the maximum
/// over all laws with support size n).
double uniform_tsallis_extropy(std::uint64_t n, TsallisOrder alpha);

/// S_a(p) - JS_a(p).
double entropy_extropy_difference(const ProbabilityVector& p, TsallisOrder alpha);

/// Closed-form S_a - JS_a for the uniform law on n points.
double uniform_entropy_extropy_difference(std::uint64_t n, TsallisOrder alpha);

/// Root of the derivative of the uniform-case difference numerator in alpha.
/// Requires n >= 3; always lies strictly inside (1, 2).
double ordering_threshold(std::uint64_t n);

struct ConfrontoBounds {
    double lower;   // (n-2)/(n-1)
    double middle;  // log(n-1)/log(n)
    double upper;   // n(n-2)/(n-1)^2
};

/// The three curves bracketing log(n-1)/log(n); requires n >= 3.
ConfrontoBounds confronto_bounds(std::uint64_t n);

}  // namespace tsx
