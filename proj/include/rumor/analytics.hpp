#pragma once

#include <cstdint>
#include <vector>

namespace rumor {

// Per-round extinction probabilities of the branching frontier and the
// limiting (smallest) fixed point of the offspring pgf.
struct ExtinctionSeries {
    enum class Kind { BinomialOffspring, PoissonOffspring };
    Kind kind = Kind::BinomialOffspring;
    std::uint32_t d = 0;   // binomial: offspring Bin(d-1, p)
    double p = 0.0;        // binomial
    double mu = 0.0;       // poisson: offspring Po(mu), mu = lambda * p
    std::vector<double> values; // x_0..x_T, x_0 = 0
    double fixed_point = 1.0;
    std::uint64_t iterations_to_tol = 0;
};

// x_t = (1 - p + p x_{t-1})^{d-1}, x_0 = 0.
ExtinctionSeries extinction_series_binomial(std::uint32_t d, double p, std::size_t T);

// x_t = exp(-mu (1 - x_{t-1})), x_0 = 0.
ExtinctionSeries extinction_series_poisson(double mu, std::size_t T);

enum class CandidateRole { ClosestCandidate, OtherCandidate };

struct YvSpec {
    std::uint32_t d = 4;       // binomial case
    double lambda = 0.0;       // poisson case
    double p = 0.5;
    std::uint32_t k = 0;       // number of active subtrees
    std::uint32_t t_star = 1;  // distance from the node to the active set
    CandidateRole role = CandidateRole::ClosestCandidate;
};

// Probability that a candidate node has exactly k active subtrees at the
// observation time, reading extinction values from the supplied series.
double yv_distribution(const YvSpec& spec, const ExtinctionSeries& series);

struct BesselResult {
    double value = 0.0; // I_0(x), or log I_0(x) when is_log is set
    bool is_log = false;
};

// Series evaluation of the modified Bessel function of order zero; switches
// to log form for x > 700 to avoid overflow.
BesselResult bessel_i0(double x);

// exp(-lambda (1 + p)) * (I_0(2 lambda sqrt(p)) - 1), the closed form of
// sum_{k>=1} P[Po(lambda)=k] P[Po(lambda p)=k]: the chance that a node with
// Po(lambda) children activates all of them, with the activated-child count
// modeled as an independent Po(lambda p) variable.
double prob_all_children_activated(double lambda, double p);

} // namespace rumor
