#ifndef QOPE_DEFORMATION_HPP
#define QOPE_DEFORMATION_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qope {

using cxd = std::complex<double>;

/// Half-integer exponent: Half{k} represents k/2. All q-exponents appearing in
/// the algebra live in (1/2)Z, so pole locations and argument shifts can be
/// tracked exactly.
struct Half {
    int halves = 0;
    constexpr Half() = default;
    constexpr explicit Half(int h) : halves(h) {}
    static constexpr Half integer(int n) { return Half{2 * n}; }
    friend constexpr Half operator+(Half a, Half b) { return Half{a.halves + b.halves}; }
    friend constexpr Half operator-(Half a, Half b) { return Half{a.halves - b.halves}; }
    friend constexpr Half operator-(Half a) { return Half{-a.halves}; }
    friend constexpr bool operator==(Half a, Half b) { return a.halves == b.halves; }
    friend constexpr bool operator!=(Half a, Half b) { return a.halves != b.halves; }
    friend constexpr bool operator<(Half a, Half b) { return a.halves < b.halves; }
    double value() const { return 0.5 * halves; }
};

/// The deformation q = exp(i*eps), eps real (pure phase). eps == 0 selects the
/// classical limit: q-numbers degenerate to plain integers and one code path
/// serves both the deformed and undeformed checks.
class Deformation {
public:
    Deformation(double eps, int n_max) : eps_(eps), n_max_(n_max) {
        if (n_max < 1) throw std::invalid_argument("Deformation: n_max must be positive");
        if (eps_ != 0.0) {
            if (std::abs(std::sin(eps_)) < 1e-12)
                throw std::invalid_argument("Deformation: sin(eps) vanishes, q-numbers undefined");
            for (int n = 1; n <= n_max; ++n) {
                if (std::abs(qnum(n)) <= 1e-9)
                    throw std::invalid_argument(
                        "Deformation: |[" + std::to_string(n) + "]| <= 1e-9 (near root of unity)");
            }
        }
    }

    double eps() const { return eps_; }
    int n_max() const { return n_max_; }
    bool classical() const { return eps_ == 0.0; }

    cxd q() const { return qpow(Half::integer(1)); }

    /// q^h for half-integer exponent h, |q| = 1 exactly.
    cxd qpow(Half h) const {
        double a = 0.5 * h.halves * eps_;
        return {std::cos(a), std::sin(a)};
    }

    /// [n] = sin(n eps)/sin(eps); [n] -> n at eps = 0.
    double qnum(int n) const {
        if (eps_ == 0.0) return static_cast<double>(n);
        return std::sin(n * eps_) / std::sin(eps_);
    }

    /// [n]! with [0]! = 1.
    double qfactorial(int n) const {
        if (n < 0) throw std::invalid_argument("qfactorial: n must be >= 0");
        double f = 1.0;
        for (int k = 1; k <= n; ++k) f *= qnum(k);
        return f;
    }

    /// q - q^{-1} = 2 i sin(eps).
    cxd qdiff() const { return {0.0, 2.0 * std::sin(eps_)}; }

    /// Scale constant for mode-sum tail bounds: sup_n |[n]| over the modes in
    /// play. 1/sin(eps) for a phase, K itself in the classical limit.
    double tail_scale(int K) const {
        if (eps_ == 0.0) return static_cast<double>(K);
        return 1.0 / std::abs(std::sin(eps_));
    }

    /// Tail bound (1/sin eps) * r^{K+1} / (1 - r) for a truncated mode sum.
    double tail_bound(int K, double r) const {
        return tail_scale(K + 1) * std::pow(r, K + 1) / (1.0 - r);
    }

private:
    double eps_;
    int n_max_;
};

} // namespace qope

#endif
