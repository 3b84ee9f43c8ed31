#ifndef QOPE_LAURENT_HPP
#define QOPE_LAURENT_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "qope/deformation.hpp"

namespace qope {

/// Exact complex-coefficient Laurent polynomial in one variable. Canonical
/// form: no stored zero coefficients.
class LaurentPoly {
public:
    using Map = std::map<int, cxd>;

    LaurentPoly() = default;
    static LaurentPoly constant(cxd c) {
        LaurentPoly p;
        p.add(0, c);
        return p;
    }
    static LaurentPoly monomial(int e, cxd c = 1.0) {
        LaurentPoly p;
        p.add(e, c);
        return p;
    }

    void add(int e, cxd c) {
        if (c == cxd(0.0)) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (std::abs(it->second) == 0.0) coeffs_.erase(it);
        }
    }

    cxd coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? cxd(0.0) : it->second;
    }

    const Map& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    int degree_span() const { return coeffs_.empty() ? 0 : max_exp() - min_exp(); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.coeffs_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(cxd s) {
        if (s == cxd(0.0)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, c] : coeffs_) c *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, cxd s) { return a *= s; }
    friend LaurentPoly operator*(cxd s, LaurentPoly a) { return a *= s; }

    /// Multiply by z^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
        return r;
    }

    /// f(z*s) for a scalar s: coefficient c_e -> c_e * s^e.
    LaurentPoly scaled_arg(cxd s) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_) r.add(e, c * ipow(s, e));
        return r;
    }

    cxd eval(cxd z) const {
        cxd v = 0.0;
        for (auto& [e, c] : coeffs_) v += c * ipow(z, e);
        return v;
    }

    double max_abs() const {
        double m = 0.0;
        for (auto& [e, c] : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Drop coefficients with |c| <= tol (cleanup after float cancellation).
    LaurentPoly pruned(double tol) const {
        LaurentPoly r;
        for (auto& [e, c] : coeffs_)
            if (std::abs(c) > tol) r.coeffs_.emplace(e, c);
        return r;
    }

    static cxd ipow(cxd z, int e) {
        if (e == 0) return 1.0;
        bool neg = e < 0;
        unsigned long k = neg ? static_cast<unsigned long>(-(long)e) : static_cast<unsigned long>(e);
        cxd base = neg ? cxd(1.0) / z : z;
        cxd r = 1.0;
        while (k) {
            if (k & 1UL) r *= base;
            base *= base;
            k >>= 1UL;
        }
        return r;
    }

private:
    Map coeffs_;
};

/// Two-variable exact Laurent polynomial (exponent pairs), the carrier for the
/// D(z,w) matrix elements used by the exact regular-part oracle.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>; // (exponent of z, exponent of w)
    using Map = std::map<Key, cxd>;

    LaurentPoly2() = default;
    static LaurentPoly2 constant(cxd c) {
        LaurentPoly2 p;
        p.add(0, 0, c);
        return p;
    }
    static LaurentPoly2 monomial(int ez, int ew, cxd c = 1.0) {
        LaurentPoly2 p;
        p.add(ez, ew, c);
        return p;
    }

    void add(int ez, int ew, cxd c) {
        if (c == cxd(0.0)) return;
        Key k{ez, ew};
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (std::abs(it->second) == 0.0) coeffs_.erase(it);
        }
    }

    const Map& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (auto& [ka, ca] : a.coeffs_)
            for (auto& [kb, cb] : b.coeffs_)
                r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    LaurentPoly2& operator*=(cxd s) {
        if (s == cxd(0.0)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }
    friend LaurentPoly2 operator*(LaurentPoly2 a, cxd s) { return a *= s; }

    /// Substitute z = w * t, collapsing to a one-variable polynomial in w with
    /// scalar t. Used when taking z -> w q^k limits exactly.
    LaurentPoly collapse_z(cxd t) const {
        LaurentPoly r;
        for (auto& [k, c] : coeffs_) r.add(k.first + k.second, c * LaurentPoly::ipow(t, k.first));
        return r;
    }

    /// View as polynomial in zeta = w/z times overall z^h: returns map from
    /// zeta-power to coefficient, given the (constant) total homogeneity h.
    /// Requires ez + ew == h for every term.
    std::map<int, cxd> zeta_series(int h) const {
        std::map<int, cxd> r;
        for (auto& [k, c] : coeffs_) {
            if (k.first + k.second != h)
                throw std::runtime_error("LaurentPoly2::zeta_series: inhomogeneous");
            r[k.second] += c;
        }
        return r;
    }

    cxd eval(cxd z, cxd w) const {
        cxd v = 0.0;
        for (auto& [k, c] : coeffs_) v += c * LaurentPoly::ipow(z, k.first) * LaurentPoly::ipow(w, k.second);
        return v;
    }

    double max_abs() const {
        double m = 0.0;
        for (auto& [k, c] : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

private:
    Map coeffs_;
};

} // namespace qope

#endif
