#include "eiv/noise.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eiv/errors.hpp"

namespace eiv {

namespace {

constexpr int kBuiltinMaxMoment = 32;
constexpr int kMaxPhiOrder = 8;

std::complex<double> inv_i_pow(int r) {
    // (-i)^r, cycle of four
    switch (r & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

double horner(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
    return v;
}

}  // namespace

double EmpiricalCf::operator()(double t) const {
    const double u = std::abs(t);
    if (values.empty()) return 1.0;
    if (u >= range) return std::max(ridge, values.back());
    const double h = step();
    const double pos = (u + range) / h;
    const long i = static_cast<long>(pos);
    const double frac = pos - static_cast<double>(i);
    const long n = static_cast<long>(values.size());
    auto at = [&](long k) {
        if (k < 0) k = 0;
        if (k >= n) k = n - 1;
        return values[static_cast<std::size_t>(k)];
    };
    // Catmull-Rom through the four surrounding table entries.
    const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    const double f = frac;
    double v = p1 + 0.5 * f * (p2 - p0 + f * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                              f * (3.0 * (p1 - p2) + p3 - p0)));
    if (v < ridge) v = ridge;
    if (v > 1.0) v = 1.0;
    return v;
}

NoiseModel NoiseModel::gaussian(double variance) {
    if (!(variance >= 0.0)) throw std::invalid_argument("gaussian noise: variance must be >= 0");
    NoiseModel m;
    m.family_ = NoiseFamily::Gaussian;
    m.variance_ = variance;
    m.max_moment_order_ = kBuiltinMaxMoment;
    // q_0 = 1, q_{r+1}(t) = s2 * t * q_r(t) + q_r'(t)
    m.gauss_phi_coeffs_.resize(kMaxPhiOrder + 1);
    m.gauss_phi_coeffs_[0] = {1.0};
    for (int r = 0; r < kMaxPhiOrder; ++r) {
        const auto& q = m.gauss_phi_coeffs_[r];
        std::vector<double> next(q.size() + 1, 0.0);
        for (std::size_t k = 0; k < q.size(); ++k) {
            next[k + 1] += variance * q[k];                      // s2 * t * q
            if (k >= 1) next[k - 1] += static_cast<double>(k) * q[k];  // q'
        }
        m.gauss_phi_coeffs_[r + 1] = std::move(next);
    }
    return m;
}

NoiseModel NoiseModel::laplace(double variance) {
    if (!(variance >= 0.0)) throw std::invalid_argument("laplace noise: variance must be >= 0");
    NoiseModel m;
    m.family_ = NoiseFamily::Laplace;
    m.variance_ = variance;
    m.max_moment_order_ = kBuiltinMaxMoment;
    return m;
}

NoiseModel NoiseModel::empirical(EmpiricalNoiseData data) {
    if (data.nu.empty() || data.nu[0] != 1.0)
        throw std::invalid_argument("empirical noise: moments must start with nu_0 = 1");
    NoiseModel m;
    m.family_ = NoiseFamily::Empirical;
    m.variance_ = data.nu.size() > 2 ? data.nu[2] : 0.0;
    m.max_moment_order_ = static_cast<int>(data.nu.size()) - 1;
    m.empirical_ = std::move(data);
    return m;
}

double NoiseModel::moment(int j) const {
    if (j < 0 || j > max_moment_order_)
        throw std::out_of_range("noise moment order " + std::to_string(j) +
                                " exceeds available range " + std::to_string(max_moment_order_));
    if (family_ == NoiseFamily::Empirical) return empirical_.nu[static_cast<std::size_t>(j)];
    if (j == 0) return 1.0;
    if (j % 2 == 1) return 0.0;
    const int m = j / 2;
    if (family_ == NoiseFamily::Gaussian) {
        // sigma^{2m} (2m-1)!!
        double v = 1.0;
        for (int k = 1; k <= m; ++k) v *= variance_ * (2.0 * k - 1.0);
        return v;
    }
    // Laplace with scale b, b^2 = variance/2: mu_{2m} = (2m)! b^{2m}
    double v = 1.0;
    for (int k = 1; k <= 2 * m; ++k) v *= static_cast<double>(k);
    for (int k = 0; k < m; ++k) v *= 0.5 * variance_;
    return v;
}

double NoiseModel::cf(double t) const {
    switch (family_) {
        case NoiseFamily::Gaussian: return std::exp(-0.5 * variance_ * t * t);
        case NoiseFamily::Laplace: return 1.0 / (1.0 + 0.5 * variance_ * t * t);
        case NoiseFamily::Empirical: return empirical_.cf(t);
    }
    return 1.0;
}

std::complex<double> NoiseModel::phi(int r, double t) const {
    if (r < 0) throw std::invalid_argument("phi: negative order");
    if (r == 0) return {1.0, 0.0};
    switch (family_) {
        case NoiseFamily::Gaussian: {
            if (r > kMaxPhiOrder) throw std::out_of_range("phi: order beyond supported range");
            return inv_i_pow(r) * horner(gauss_phi_coeffs_[static_cast<std::size_t>(r)], t);
        }
        case NoiseFamily::Laplace: {
            // 1/f^Ft = 1 + (s2/2) t^2 is quadratic, so derivatives past 2 vanish.
            if (r == 1) return std::complex<double>(0.0, -variance_ * t) * cf(t);
            if (r == 2) return std::complex<double>(-variance_, 0.0) * cf(t);
            return {0.0, 0.0};
        }
        case NoiseFamily::Empirical: {
            if (r > 4) throw std::out_of_range("phi: empirical noise supports r <= 4");
            const double d = empirical_.cf.step();
            if (!(d > 0.0)) throw UnsupportedOperationError("phi: empirical CF table is empty");
            auto g = [&](double tau) { return 1.0 / empirical_.cf(tau); };
            double der = 0.0;
            switch (r) {
                case 1: der = (g(t + d) - g(t - d)) / (2.0 * d); break;
                case 2: der = (g(t + d) - 2.0 * g(t) + g(t - d)) / (d * d); break;
                case 3:
                    der = (g(t + 2 * d) - 2.0 * g(t + d) + 2.0 * g(t - d) - g(t - 2 * d)) /
                          (2.0 * d * d * d);
                    break;
                case 4:
                    der = (g(t + 2 * d) - 4.0 * g(t + d) + 6.0 * g(t) - 4.0 * g(t - d) +
                           g(t - 2 * d)) /
                          (d * d * d * d);
                    break;
            }
            return inv_i_pow(r) * (cf(t) * der);
        }
    }
    return {0.0, 0.0};
}

std::optional<TailDecay> NoiseModel::tail_decay() const {
    if (family_ == NoiseFamily::Laplace && variance_ > 0.0) {
        return TailDecay{2.0 / variance_, 2.0};
    }
    return std::nullopt;
}

std::vector<double> NoiseModel::sample(RngStream& rng, std::size_t n) const {
    std::vector<double> out(n);
    switch (family_) {
        case NoiseFamily::Gaussian: {
            const double sd = std::sqrt(variance_);
            for (auto& v : out) v = rng.normal(sd);
            break;
        }
        case NoiseFamily::Laplace: {
            // difference of two unit exponentials, scaled
            const double b = std::sqrt(0.5 * variance_);
            for (auto& v : out) v = b * (rng.exponential() - rng.exponential());
            break;
        }
        case NoiseFamily::Empirical: {
            switch (empirical_.surrogate) {
                case NoiseSurrogate::CenteredResample: {
                    const auto& data = empirical_.surrogate_data;
                    if (data.empty())
                        throw UnsupportedOperationError(
                            "empirical noise: no surrogate data to resample");
                    for (auto& v : out) {
                        auto idx = static_cast<std::size_t>(rng.uniform01() *
                                                            static_cast<double>(data.size()));
                        if (idx >= data.size()) idx = data.size() - 1;
                        v = data[idx];
                    }
                    break;
                }
                case NoiseSurrogate::GaussianMatched: {
                    const double sd = std::sqrt(std::max(0.0, variance_));
                    for (auto& v : out) v = rng.normal(sd);
                    break;
                }
                case NoiseSurrogate::None:
                    throw UnsupportedOperationError(
                        "empirical noise model has no configured surrogate sampler");
            }
            break;
        }
    }
    return out;
}

std::string NoiseModel::describe() const {
    std::ostringstream os;
    switch (family_) {
        case NoiseFamily::Gaussian: os << "gaussian(" << variance_ << ")"; break;
        case NoiseFamily::Laplace: os << "laplace(" << variance_ << ")"; break;
        case NoiseFamily::Empirical:
            os << "empirical("
               << (empirical_.source == EmpiricalNoiseData::Source::DirectU ? "direct"
                                                                            : "replicates")
               << ", nu2=" << variance_ << ")";
            break;
    }
    return os.str();
}

}  // namespace eiv
