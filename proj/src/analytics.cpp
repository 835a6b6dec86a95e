#include "rumor/analytics.hpp"

#include <cmath>

#include "rumor/errors.hpp"

namespace rumor {
namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr std::uint64_t kMaxFixedPointIters = 5'000'000;

template <class Map>
void fill_series(ExtinctionSeries& series, std::size_t T, double offspring_mean, Map&& map) {
    series.values.resize(T + 1);
    series.values[0] = 0.0;
    for (std::size_t t = 1; t <= T; ++t) series.values[t] = map(series.values[t - 1]);

    // Iterating from 0 converges monotonically to the smallest fixed point.
    double x = 0.0;
    std::uint64_t iters = 0;
    while (iters < kMaxFixedPointIters) {
        const double next = map(x);
        ++iters;
        if (std::fabs(next - x) < kFixedPointTol) {
            x = next;
            break;
        }
        x = next;
    }
    // At offspring mean <= 1 the smallest fixed point is exactly 1; the
    // critical case (mean == 1) approaches it only at rate O(1/t), so the
    // iteration alone cannot reach tolerance there.
    series.fixed_point = offspring_mean <= 1.0 ? 1.0 : x;
    series.iterations_to_tol = iters;
}

double binomial_pmf(std::uint32_t n, double p, std::uint32_t k) {
    if (k > n) return 0.0;
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    double log_term = log_c;
    if (k > 0) {
        if (p == 0.0) return 0.0;
        log_term += k * std::log(p);
    }
    if (n - k > 0) {
        if (p == 1.0) return 0.0;
        log_term += (n - k) * std::log1p(-p);
    }
    return std::exp(log_term);
}

double poisson_pmf(double mu, std::uint32_t k) {
    if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(k * std::log(mu) - mu - std::lgamma(k + 1.0));
}

double binomial_coeff(std::uint32_t n, std::uint32_t k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

} // namespace

ExtinctionSeries extinction_series_binomial(std::uint32_t d, double p, std::size_t T) {
    if (d < 2) throw param_error("extinction_series_binomial: d must be >= 2");
    if (p < 0.0 || p > 1.0) throw param_error("extinction_series_binomial: p must be in [0,1]");
    ExtinctionSeries series;
    series.kind = ExtinctionSeries::Kind::BinomialOffspring;
    series.d = d;
    series.p = p;
    const double mean = (d - 1) * p;
    fill_series(series, T, mean,
                [=](double x) { return std::pow(1.0 - p + p * x, static_cast<double>(d - 1)); });
    return series;
}

ExtinctionSeries extinction_series_poisson(double mu, std::size_t T) {
    if (mu < 0.0) throw param_error("extinction_series_poisson: mu must be >= 0");
    ExtinctionSeries series;
    series.kind = ExtinctionSeries::Kind::PoissonOffspring;
    series.mu = mu;
    fill_series(series, T, mu, [=](double x) { return std::exp(-mu * (1.0 - x)); });
    return series;
}

double yv_distribution(const YvSpec& spec, const ExtinctionSeries& series) {
    const bool binomial = series.kind == ExtinctionSeries::Kind::BinomialOffspring;
    if (spec.t_star < 1 || spec.t_star >= series.values.size())
        throw param_error("yv_distribution: t_star outside the supplied series");
    if (binomial && spec.k > spec.d) throw param_error("yv_distribution: k must be <= d");
    if (spec.role == CandidateRole::OtherCandidate && spec.k != 1)
        throw param_error("yv_distribution: other-candidate formula is the single-survivor case");

    const double x = series.values[spec.t_star];
    // Binomial case: the source node activates Bin(d, p) subtrees. Poisson
    // case: Po(lambda p) active subtrees by thinning; the sum is truncated
    // once the pmf tail is negligible.
    const double mu = spec.lambda * spec.p;
    const std::uint32_t cap =
        binomial ? spec.d
                 : static_cast<std::uint32_t>(std::ceil(mu + 12.0 * std::sqrt(mu + 1.0) + 30.0));

    double total = 0.0;
    const std::uint32_t start = spec.role == CandidateRole::OtherCandidate ? 1u : spec.k;
    for (std::uint32_t d0 = start; d0 <= cap; ++d0) {
        const double pmf = binomial ? binomial_pmf(spec.d, spec.p, d0) : poisson_pmf(mu, d0);
        if (pmf == 0.0) continue;
        const double surv = 1.0 - x;
        total += pmf * binomial_coeff(d0, spec.k) * std::pow(x, static_cast<double>(d0 - spec.k)) *
                 std::pow(surv, static_cast<double>(spec.k));
    }
    return total;
}

BesselResult bessel_i0(double x) {
    if (x < 0.0) throw param_error("bessel_i0: x must be >= 0");
    BesselResult res;
    if (x > 700.0) {
        // log I_0(x) ~ x - log(sqrt(2 pi x)) + log1p(1/(8x) + 9/(128 x^2) + ...)
        const double inv = 1.0 / x;
        const double corr = 1.0 / 8.0 * inv + 9.0 / 128.0 * inv * inv + 75.0 / 1024.0 * inv * inv * inv;
        res.value = x - 0.5 * std::log(2.0 * M_PI * x) + std::log1p(corr);
        res.is_log = true;
        return res;
    }
    // I_0(x) = sum_k ((x/2)^(2k) / (k!)^2), terms until relative cutoff.
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (std::uint32_t k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-16) break;
    }
    res.value = sum;
    return res;
}

double prob_all_children_activated(double lambda, double p) {
    if (!(lambda > 0.0)) throw param_error("prob_all_children_activated: lambda must be > 0");
    if (p < 0.0 || p > 1.0) throw param_error("prob_all_children_activated: p must be in [0,1]");
    const BesselResult i0 = bessel_i0(2.0 * lambda * std::sqrt(p));
    if (i0.is_log)
        return std::exp(-lambda * (1.0 + p) + i0.value) - std::exp(-lambda * (1.0 + p));
    return std::exp(-lambda * (1.0 + p)) * (i0.value - 1.0);
}

} // namespace rumor
