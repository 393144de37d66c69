#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "qdurr/double_double.hpp"

namespace qdurr {

/// Complex value carried as mantissa * 2^e so that quantities far outside
/// double range (the operator images grow like exp(ln^2 r)) stay finite.
struct ScaledComplex {
    std::complex<double> m{0.0, 0.0};
    long e = 0;

    ScaledComplex() = default;
    ScaledComplex(std::complex<double> v, long e_ = 0) : m(v), e(e_) { normalize(); }

    static ScaledComplex one() { return ScaledComplex(std::complex<double>(1.0, 0.0)); }

    bool zero() const { return m.real() == 0.0 && m.imag() == 0.0; }

    void normalize() {
        double a = std::max(std::abs(m.real()), std::abs(m.imag()));
        if (a == 0.0) { e = 0; return; }
        int k = 0;
        std::frexp(a, &k);
        if (k != 0) {
            m = {std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k)};
            e += k;
        }
    }

    ScaledComplex& operator*=(const ScaledComplex& o) {
        m *= o.m;
        e += o.e;
        normalize();
        return *this;
    }

    ScaledComplex& operator*=(std::complex<double> v) {
        m *= v;
        normalize();
        return *this;
    }

    ScaledComplex& operator+=(const ScaledComplex& o) {
        if (o.zero()) return *this;
        if (zero()) { *this = o; return *this; }
        long d = e - o.e;
        if (d >= 128) return *this;                  // other is below 2^-128 relatively
        if (d <= -128) { *this = o; return *this; }
        if (d >= 0) {
            m += std::complex<double>(std::ldexp(o.m.real(), int(-d)), std::ldexp(o.m.imag(), int(-d)));
        } else {
            m = std::complex<double>(std::ldexp(m.real(), int(d)), std::ldexp(m.imag(), int(d))) + o.m;
            e = o.e;
        }
        normalize();
        return *this;
    }

    /// ln|value|; -inf for zero.
    double log_abs() const {
        if (zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(m)) + double(e) * M_LN2;
    }

    double arg() const { return std::arg(m); }

    /// Collapse to a plain complex; overflows to inf / underflows to 0.
    std::complex<double> value() const {
        if (e > std::numeric_limits<double>::max_exponent + 100)
            return {m.real() * std::numeric_limits<double>::infinity(),
                    m.imag() * std::numeric_limits<double>::infinity()};
        if (e < std::numeric_limits<double>::min_exponent - 1200)
            return {0.0, 0.0};
        return {std::ldexp(m.real(), int(e)), std::ldexp(m.imag(), int(e))};
    }
};

inline ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
inline ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }

/// Real value stored as sign plus natural log of magnitude.
struct SignedLog {
    double ln_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static SignedLog from_value(double v) {
        if (v == 0.0) return {};
        return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
    }

    bool zero() const { return sign == 0; }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(ln_abs);   // may under/overflow, by design
    }

    ScaledComplex to_scaled() const {
        if (sign == 0) return ScaledComplex();
        double t = ln_abs / M_LN2;
        long e = long(std::floor(t));
        double frac = ln_abs - double(e) * M_LN2;
        ScaledComplex s;
        s.m = {sign * std::exp(frac), 0.0};
        s.e = e;
        s.normalize();
        return s;
    }
};

/// Same exponent-carrying scheme with a double-double complex mantissa,
/// for the entire-continuation double series where terms the size of
/// (-r;q)_inf cancel down to operator values.
struct ScaledCDD {
    CDD m{DDouble(0.0), DDouble(0.0)};
    long e = 0;

    ScaledCDD() = default;
    explicit ScaledCDD(CDD v, long e_ = 0) : m(v), e(e_) { normalize(); }

    static ScaledCDD one() { return ScaledCDD(CDD{DDouble(1.0), DDouble(0.0)}); }

    bool zero() const { return m.re.hi == 0.0 && m.im.hi == 0.0; }

    static DDouble ldexp_dd(DDouble x, int k) {
        return {std::ldexp(x.hi, k), std::ldexp(x.lo, k)};
    }

    void normalize() {
        double a = std::max(std::abs(m.re.hi), std::abs(m.im.hi));
        if (a == 0.0) { e = 0; return; }
        int k = 0;
        std::frexp(a, &k);
        if (k != 0) {
            m.re = ldexp_dd(m.re, -k);
            m.im = ldexp_dd(m.im, -k);
            e += k;
        }
    }

    ScaledCDD& operator*=(const ScaledCDD& o) {
        m *= o.m;
        e += o.e;
        normalize();
        return *this;
    }

    ScaledCDD& operator+=(const ScaledCDD& o) {
        if (o.zero()) return *this;
        if (zero()) { *this = o; return *this; }
        long d = e - o.e;
        if (d >= 160) return *this;
        if (d <= -160) { *this = o; return *this; }
        if (d >= 0) {
            CDD t{ldexp_dd(o.m.re, int(-d)), ldexp_dd(o.m.im, int(-d))};
            m += t;
        } else {
            CDD t{ldexp_dd(m.re, int(d)), ldexp_dd(m.im, int(d))};
            m = t + o.m;
            e = o.e;
        }
        normalize();
        return *this;
    }

    double log_abs() const {
        if (zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(m.to_complex())) + double(e) * M_LN2;
    }

    double arg() const { return std::arg(m.to_complex()); }

    std::complex<double> value() const {
        std::complex<double> c = m.to_complex();
        if (e > std::numeric_limits<double>::max_exponent + 100)
            return {c.real() * std::numeric_limits<double>::infinity(),
                    c.imag() * std::numeric_limits<double>::infinity()};
        if (e < std::numeric_limits<double>::min_exponent - 1200)
            return {0.0, 0.0};
        return {std::ldexp(c.real(), int(e)), std::ldexp(c.imag(), int(e))};
    }
};

inline ScaledCDD operator*(ScaledCDD a, const ScaledCDD& b) { return a *= b; }
inline ScaledCDD operator+(ScaledCDD a, const ScaledCDD& b) { return a += b; }

} // namespace qdurr
