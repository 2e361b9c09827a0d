#include "tsx/measures.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "tsx/error.hpp"

namespace tsx {

namespace {

// x * log(x) with 0 log 0 = 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// The Tsallis entropy of a law is sum_i p_i (1 - p_i^(a-1)) / (a-1); each
// summand is non-negative for every a > 0. Evaluating it as
// -p expm1((a-1) log p) / (a-1) keeps full relative precision close to a = 1
// instead of subtracting two numbers near 1.
double entropy_term(double p, double alpha) {
    if (p <= 0.0) return 0.0;
    const double am1 = alpha - 1.0;
    const double exponent = am1 * std::log(p);
    if (exponent > 700.0) {
        // Only reachable for subnormal p with small alpha; pow is exact enough there.
        return (p - std::pow(p, alpha)) / am1;
    }
    return -p * std::expm1(exponent) / am1;
}

// Same summand with p replaced by 1 - p, taking log1p(-p) to stay accurate for small p.
double extropy_term(double p, double alpha) {
    if (p >= 1.0) return 0.0;
    const double q = 1.0 - p;
    const double am1 = alpha - 1.0;
    return -q * std::expm1(am1 * std::log1p(-p)) / am1;
}

void require_support_at_least_three(std::uint64_t n, const char* what) {
    if (n < 3) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " requires N >= 3, got N = " + std::to_string(n));
    }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw Error(ErrorCode::Validation, "probability vector must have at least one entry");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            std::ostringstream msg;
            msg << "probability p[" << i << "] = " << p << " is outside [0, 1]";
            throw Error(ErrorCode::Validation, msg.str());
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "probabilities sum to " << sum << ", expected 1 within " << kSumTolerance;
        throw Error(ErrorCode::Validation, msg.str());
    }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::Validation, "uniform law needs n >= 1");
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::degenerate(std::size_t n, std::size_t at) {
    if (at >= n) throw Error(ErrorCode::InvalidArgument, "point mass index out of range");
    std::vector<double> probs(n, 0.0);
    probs[at] = 1.0;
    return ProbabilityVector(std::move(probs));
}

TsallisOrder::TsallisOrder(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        std::ostringstream msg;
        msg << "Tsallis order alpha must be a finite positive number, got " << alpha;
        throw Error(ErrorCode::Validation, msg.str());
    }
}

bool TsallisOrder::is_shannon_limit() const noexcept { return std::abs(alpha_ - 1.0) < kShannonBand; }

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double pi : p) h -= xlogx(pi);
    return h;
}

double extropy(const ProbabilityVector& p) {
    double j = 0.0;
    for (double pi : p) j -= xlogx(1.0 - pi);
    return j;
}

double tsallis_entropy(const ProbabilityVector& p, TsallisOrder alpha) {
    if (alpha.is_shannon_limit()) return shannon_entropy(p);
    double s = 0.0;
    for (double pi : p) s += entropy_term(pi, alpha.value());
    return s;
}

double tsallis_extropy(const ProbabilityVector& p, TsallisOrder alpha) {
    if (alpha.is_shannon_limit()) return extropy(p);
    double js = 0.0;
    for (double pi : p) js += extropy_term(pi, alpha.value());
    return js;
}

double binary_tsallis(double p, TsallisOrder alpha) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::Validation, "binary_tsallis: p = " + std::to_string(p) + " is outside [0, 1]");
    }
    if (alpha.is_shannon_limit()) return -xlogx(p) - xlogx(1.0 - p);
    return entropy_term(p, alpha.value()) + extropy_term(p, alpha.value());
}

double sum_identity_gap(const ProbabilityVector& p, TsallisOrder alpha) {
    double pairwise = 0.0;
    for (double pi : p) pairwise += binary_tsallis(pi, alpha);
    return tsallis_entropy(p, alpha) + tsallis_extropy(p, alpha) - pairwise;
}

double uniform_tsallis_extropy(std::uint64_t n, TsallisOrder alpha) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "support size must be >= 1");
    if (n == 1) return 0.0;
    const double nn = static_cast<double>(n);
    // log((n-1)/n)
    const double log_ratio = std::log1p(-1.0 / nn);
    if (alpha.is_shannon_limit()) return -(nn - 1.0) * log_ratio;
    // (n-1)/(a-1) * (n^(a-1) - (n-1)^(a-1)) / n^(a-1)  ==  (n-1) * -expm1((a-1) log((n-1)/n)) / (a-1)
    const double am1 = alpha.value() - 1.0;
    return -(nn - 1.0) * std::expm1(am1 * log_ratio) / am1;
}

double entropy_extropy_difference(const ProbabilityVector& p, TsallisOrder alpha) {
    return tsallis_entropy(p, alpha) - tsallis_extropy(p, alpha);
}

double uniform_entropy_extropy_difference(std::uint64_t n, TsallisOrder alpha) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "support size must be >= 1");
    const double nn = static_cast<double>(n);
    double entropy;
    if (alpha.is_shannon_limit()) {
        entropy = std::log(nn);
    } else {
        const double am1 = alpha.value() - 1.0;
        entropy = -std::expm1(-am1 * std::log(nn)) / am1;
    }
    return entropy - uniform_tsallis_extropy(n, alpha);
}

double ordering_threshold(std::uint64_t n) {
    require_support_at_least_three(n, "ordering_threshold");
    const double nn = static_cast<double>(n);
    // log(n/(n-2)) + log(log(n-1)/log(n)), over log(n/(n-1)); log1p keeps large n accurate.
    const double log_n = std::log(nn);
    const double numerator = -std::log1p(-2.0 / nn) + std::log1p(std::log1p(-1.0 / nn) / log_n);
    return numerator / -std::log1p(-1.0 / nn);
}

ConfrontoBounds confronto_bounds(std::uint64_t n) {
    require_support_at_least_three(n, "confronto_bounds");
    const double nn = static_cast<double>(n);
    const double nm1 = nn - 1.0;
    return ConfrontoBounds{
        .lower = 1.0 - 1.0 / nm1,
        .middle = 1.0 + std::log1p(-1.0 / nn) / std::log(nn),
        .upper = 1.0 - 1.0 / (nm1 * nm1),
    };
}

}  // namespace tsx
