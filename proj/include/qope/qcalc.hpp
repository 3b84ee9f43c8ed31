#ifndef QOPE_QCALC_HPP
#define QOPE_QCALC_HPP

#include <stdexcept>
#include <vector>

#include "qope/deformation.hpp"
#include "qope/laurent.hpp"

namespace qope {

/// (z - w)^n_q = prod_{k=1..n} (z - w q^{n-2k+1}), expanded in z.
inline LaurentPoly qbinomial_product(const Deformation& d, int n, cxd w) {
    if (n < 0) throw std::invalid_argument("qbinomial_product: n >= 0 required");
    LaurentPoly p = LaurentPoly::constant(1.0);
    for (int k = 1; k <= n; ++k) {
        LaurentPoly f = LaurentPoly::monomial(1);
        f.add(0, -w * d.qpow(Half::integer(n - 2 * k + 1)));
        p = p * f;
    }
    return p;
}

/// Sum form of the q-binomial: sum_k [n]!/([k]![n-k]!) z^k (-w)^{n-k}.
inline LaurentPoly qbinomial_sum(const Deformation& d, int n, cxd w) {
    if (n < 0) throw std::invalid_argument("qbinomial_sum: n >= 0 required");
    LaurentPoly p;
    for (int k = 0; k <= n; ++k) {
        double c = d.qfactorial(n) / (d.qfactorial(k) * d.qfactorial(n - k));
        p.add(k, c * LaurentPoly::ipow(-w, n - k));
    }
    return p;
}

/// q-derivative on coefficients: z^n -> [n] z^{n-1} (exact form of
/// (f(zq) - f(zq^{-1}))/(z(q - q^{-1}))).
inline LaurentPoly qderiv(const Deformation& d, const LaurentPoly& f) {
    LaurentPoly r;
    for (auto& [e, c] : f.coeffs()) r.add(e - 1, c * d.qnum(e));
    return r;
}

inline LaurentPoly qderiv_iterated(const Deformation& d, LaurentPoly f, int n) {
    for (int k = 0; k < n; ++k) f = qderiv(d, f);
    return f;
}

/// Closed form for the n-th q-derivative: the 2^n-term sum over sigma_i = +-1
/// with weights prod_i sigma_i q^{-i sigma_i} and argument shift q^{sum sigma}.
/// Optionally records the argument shifts used (for the parity check).
inline LaurentPoly qderiv_nth_closed(const Deformation& d, const LaurentPoly& f, int n,
                                     std::vector<int>* shifts_seen = nullptr) {
    if (n < 0) throw std::invalid_argument("qderiv_nth_closed: n >= 0 required");
    if (n == 0) return f;
    LaurentPoly acc;
    const unsigned terms = 1u << n;
    for (unsigned mask = 0; mask < terms; ++mask) {
        cxd weight = 1.0;
        int shift = 0;
        for (int i = 0; i < n; ++i) {
            int sigma = (mask >> i) & 1u ? 1 : -1;
            weight *= static_cast<double>(sigma) * d.qpow(Half::integer(-i * sigma));
            shift += sigma;
        }
        if (shifts_seen) shifts_seen->push_back(shift);
        // f(z q^shift), coefficientwise.
        for (auto& [e, c] : f.coeffs())
            acc.add(e, c * weight * d.qpow(Half::integer(shift * e)));
    }
    cxd denom = LaurentPoly::ipow(d.qdiff(), n);
    LaurentPoly r;
    for (auto& [e, c] : acc.coeffs()) r.add(e - n, c / denom);
    return r;
}

enum class TaylorVariant { Plus, Minus }; // expansion point wq (apqtaylor1) or wq^{-1} (apqtaylor2)

struct TaylorTerm {
    int order = 0;          // derivative order
    Half eval_shift;        // f's derivative evaluated at w q^{eval_shift}
    LaurentPoly term;       // the term as a Laurent polynomial in z
};

/// q-Taylor expansion of a Laurent polynomial around w: even-order derivatives
/// at wq^{+-1} with (z-w)^{2k}_q, odd-order at w with (z-wq^{+-1})^{2k+1}_q.
/// Returns the first n_terms terms of each parity track interleaved by order.
inline std::vector<TaylorTerm> qtaylor(const Deformation& d, const LaurentPoly& f, cxd w,
                                       TaylorVariant variant, int n_orders) {
    if (w == cxd(0.0)) throw std::invalid_argument("qtaylor: w must be nonzero");
    if (n_orders < 0) throw std::invalid_argument("qtaylor: nonnegative order count required");
    const int s = variant == TaylorVariant::Plus ? 1 : -1;
    std::vector<TaylorTerm> out;
    LaurentPoly df = f; // q-derivative of order `order`
    for (int order = 0; order <= n_orders; ++order) {
        TaylorTerm t;
        t.order = order;
        if (order % 2 == 0) {
            // even: derivative at w q^{+-1}, binomial (z - w)^{order}_q
            t.eval_shift = Half::integer(s);
            cxd val = df.eval(w * d.qpow(Half::integer(s)));
            t.term = qbinomial_product(d, order, w) * (val / d.qfactorial(order));
        } else {
            // odd: derivative at w, binomial (z - wq^{+-1})^{order}_q
            t.eval_shift = Half::integer(0);
            cxd val = df.eval(w);
            t.term = qbinomial_product(d, order, w * d.qpow(Half::integer(s))) *
                     (val / d.qfactorial(order));
        }
        out.push_back(std::move(t));
        df = qderiv(d, df);
    }
    return out;
}

/// Partial sum of a q-Taylor expansion as a Laurent polynomial in z.
inline LaurentPoly qtaylor_sum(const std::vector<TaylorTerm>& terms) {
    LaurentPoly s;
    for (auto& t : terms) s += t.term;
    return s;
}

} // namespace qope

#endif
