#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eiv/rng.hpp"

namespace eiv {

// Polynomial decay of the noise characteristic function, f^Ft(t) ~ C * t^-alpha
// for large |t|. Absent for supersmooth (Gaussian) noise, whose CF decays
// faster than any polynomial.
struct TailDecay {
    double constant;  // C > 0
    double alpha;     // > 1/2
};

enum class NoiseFamily { Gaussian, Laplace, Empirical };

// How surrogate noise draws are produced in the bootstrap when the noise law
// is only estimated.
enum class NoiseSurrogate { None, CenteredResample, GaussianMatched };

// Tabulated |f^Ft| on a uniform symmetric grid over [-range, range], floored
// at `ridge`. Values outside the grid evaluate to the floor.
struct EmpiricalCf {
    double range = 0.0;
    double ridge = 0.0;
    std::vector<double> values;  // values[k] at t = -range + k*step; odd count, center = 1

    double step() const {
        return values.size() > 1 ? 2.0 * range / static_cast<double>(values.size() - 1) : 0.0;
    }
    double operator()(double t) const;  // even, cubic interpolation, clamped to [ridge, 1]
};

struct EmpiricalNoiseData {
    enum class Source { DirectU, Replicates };

    Source source = Source::DirectU;
    std::vector<double> nu;  // raw moments 0..J; odd orders zero (symmetric-U assumption)
    EmpiricalCf cf;
    double floor_fraction = 0.0;  // share of tabulated points clipped up to the ridge
    bool low_confidence = false;  // set when the ridge floor dominates the table
    NoiseSurrogate surrogate = NoiseSurrogate::None;
    std::vector<double> surrogate_data;  // centered draws, used by CenteredResample
};

// Everything the pipeline needs to know about the measurement-error
// distribution U: exact moments, the characteristic function, derivatives of
// its reciprocal, tail decay, and sampling. Immutable after construction.
class NoiseModel {
public:
    static NoiseModel gaussian(double variance);
    static NoiseModel laplace(double variance);
    static NoiseModel empirical(EmpiricalNoiseData data);

    NoiseFamily family() const { return family_; }
    double variance() const { return variance_; }
    int max_moment_order() const { return max_moment_order_; }

    // j-th raw moment of U; throws std::out_of_range past max_moment_order().
    double moment(int j) const;

    // Characteristic function f^Ft(t). Real, even, positive for the built-in
    // families; |f^Ft| floored at the ridge for empirical models.
    double cf(double t) const;

    // phi_r(t) = f^Ft(t) * (i^-1 d/dt)^r [1 / f^Ft(t)]. Closed form for the
    // built-in families, finite differences on the tabulated reciprocal for
    // empirical models. phi_0 == 1 identically.
    std::complex<double> phi(int r, double t) const;

    std::optional<TailDecay> tail_decay() const;

    // n i.i.d. draws from the noise law (or its configured surrogate).
    std::vector<double> sample(RngStream& rng, std::size_t n) const;

    const EmpiricalNoiseData* empirical_data() const {
        return family_ == NoiseFamily::Empirical ? &empirical_ : nullptr;
    }

    std::string describe() const;

private:
    NoiseModel() = default;

    NoiseFamily family_ = NoiseFamily::Gaussian;
    double variance_ = 0.0;
    int max_moment_order_ = 0;
    EmpiricalNoiseData empirical_;

    // Coefficients of the polynomials q_r with (d/dt)^r exp(s2 t^2/2)
    // = q_r(t) exp(s2 t^2/2); phi_r = (-i)^r q_r for Gaussian noise.
    std::vector<std::vector<double>> gauss_phi_coeffs_;
};

}  // namespace eiv
