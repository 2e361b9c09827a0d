#include "tsx/verification.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "tsx/error.hpp"
#include "tsx/measures.hpp"

namespace tsx {

namespace {

constexpr double kRoundoff = 1e-12;
constexpr double kIdentityTolerance = 1e-10;
constexpr double kLimitStep = 1e-6;
constexpr double kLimitTolerance = 1e-4;
constexpr std::uint64_t kClosedFormMaxN = 1000;
constexpr std::uint64_t kLargeN = 1000000;

std::string describe(const ProbabilityVector& p, double alpha, double value) {
    std::ostringstream out;
    out.precision(17);
    out << "N=" << p.size() << " alpha=" << alpha << " p=(";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ") value=" << value;
    return out.str();
}

class Tally {
public:
    explicit Tally(std::string name) { check_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& witness) {
        ++check_.checked;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.counterexample = witness();
        }
    }

    PropertyCheck take() { return std::move(check_); }

private:
    PropertyCheck check_;
};

}  // namespace

std::vector<PropertyCheck> run_property_sweep(const SweepConfig& config) {
    if (config.support_min < 1 || config.support_min > config.support_max) {
        throw Error(ErrorCode::InvalidArgument, "sweep support range is empty");
    }
    if (config.n_min < 3 || config.n_min > config.n_max) {
        throw Error(ErrorCode::InvalidArgument, "sweep N range must satisfy 3 <= n_min <= n_max");
    }
    std::vector<TsallisOrder> alphas;
    for (double a : config.alphas) alphas.emplace_back(a);
    if (alphas.empty()) throw Error(ErrorCode::InvalidArgument, "sweep alpha grid is empty");

    auto js = [&](const ProbabilityVector& p, TsallisOrder a) { return tsallis_extropy(p, a) + config.extropy_fault; };

    Tally non_negative("non_negativity");
    Tally below_one("upper_bound");
    Tally limit("alpha_to_one_limit");
    Tally identity("sum_identity");
    Tally binary("binary_equality");
    Tally alpha_two("alpha_two_coincidence");
    Tally ordering("entropy_extropy_ordering");
    Tally maximal("uniform_maximality");

    std::mt19937_64 rng(config.seed);
    for (std::size_t n = config.support_min; n <= config.support_max; ++n) {
        std::vector<double> uniform_max;
        for (auto a : alphas) uniform_max.push_back(uniform_tsallis_extropy(n, a));

        for (std::size_t k = 0; k < config.points_per_support; ++k) {
            const ProbabilityVector p(k == 0 ? ProbabilityVector::degenerate(n) : ProbabilityVector(random_simplex_point(rng, n)));

            const double j = extropy(p);
            const double h = shannon_entropy(p);
            for (double step : {-kLimitStep, kLimitStep}) {
                const TsallisOrder near_one(1.0 + step);
                const double dj = js(p, near_one) - j;
                const double dh = tsallis_entropy(p, near_one) - h;
                limit.record(std::abs(dj) <= kLimitTolerance && std::abs(dh) <= kLimitTolerance,
                             [&] { return describe(p, 1.0 + step, dj) + " (extropy gap), entropy gap=" + std::to_string(dh); });
            }

            for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
                const TsallisOrder a = alphas[ai];
                const double alpha = a.value();
                const double ext = js(p, a);
                const double ent = tsallis_entropy(p, a);

                non_negative.record(ext >= -kRoundoff, [&] { return describe(p, alpha, ext); });
                below_one.record(ext < 1.0, [&] { return describe(p, alpha, ext); });

                double pairwise = 0.0;
                for (double pi : p) pairwise += binary_tsallis(pi, a);
                const double gap = ent + ext - pairwise;
                identity.record(std::abs(gap) <= kIdentityTolerance, [&] { return describe(p, alpha, gap); });

                const double diff = ent - ext;
                if (n == 2) {
                    binary.record(std::abs(diff) <= kRoundoff, [&] { return describe(p, alpha, diff); });
                }
                if (alpha == 2.0) {
                    alpha_two.record(std::abs(diff) <= kRoundoff, [&] { return describe(p, alpha, diff); });
                }
                if (n >= 3) {
                    bool ok = true;
                    if (alpha < 2.0) ok = diff >= -kRoundoff;
                    else if (alpha > 2.0) ok = diff <= kRoundoff;
                    else ok = std::abs(diff) <= kRoundoff;
                    ordering.record(ok, [&] { return describe(p, alpha, diff); });
                }
                maximal.record(ext <= uniform_max[ai] + kRoundoff, [&] {
                    return describe(p, alpha, ext) + " exceeds uniform " + std::to_string(uniform_max[ai]);
                });
            }
        }
    }

    Tally monotone("uniform_monotone_in_n");
    Tally closed_form("uniform_closed_form_agreement");
    for (auto a : alphas) {
        double prev = uniform_tsallis_extropy(1, a);
        for (std::uint64_t n = 2; n <= config.n_max; ++n) {
            const double cur = uniform_tsallis_extropy(n, a);
            monotone.record(cur > prev, [&] {
                std::ostringstream out;
                out.precision(17);
                out << "alpha=" << a.value() << " N=" << n << " value=" << cur << " previous=" << prev;
                return out.str();
            });
            prev = cur;
        }
        const double large = uniform_tsallis_extropy(kLargeN, a);
        monotone.record(large > 0.999 && large < 1.0, [&] {
            return "alpha=" + std::to_string(a.value()) + " N=1000000 value=" + std::to_string(large);
        });

        for (std::uint64_t n = 1; n <= kClosedFormMaxN; ++n) {
            const auto u = ProbabilityVector::uniform(n);
            const double direct = js(u, a);
            const double closed = uniform_tsallis_extropy(n, a);
            closed_form.record(std::abs(direct - closed) <= kRoundoff, [&] {
                std::ostringstream out;
                out.precision(17);
                out << "alpha=" << a.value() << " N=" << n << " direct=" << direct << " closed=" << closed;
                return out.str();
            });
        }
    }

    Tally threshold("ordering_threshold_in_(1,2)");
    Tally bracket("confronto_strictly_increasing");
    for (std::uint64_t n = config.n_min; n <= config.n_max; ++n) {
        const double g = ordering_threshold(n);
        threshold.record(g > 1.0 && g < 2.0, [&] { return "N=" + std::to_string(n) + " G=" + std::to_string(g); });
        const auto b = confronto_bounds(n);
        bracket.record(b.lower < b.middle && b.middle < b.upper, [&] {
            std::ostringstream out;
            out.precision(17);
            out << "N=" << n << " (" << b.lower << ", " << b.middle << ", " << b.upper << ")";
            return out.str();
        });
    }

    std::vector<PropertyCheck> out;
    for (Tally* t : {&non_negative, &below_one, &limit, &identity, &binary, &alpha_two, &ordering, &maximal,
                     &monotone, &closed_form, &threshold, &bracket}) {
        out.push_back(t->take());
    }
    return out;
}

}  // namespace tsx
