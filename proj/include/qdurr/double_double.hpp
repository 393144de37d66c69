#pragma once

#ifdef __FAST_MATH__
#error fast math would break the error-free transformations in this header
#endif

#include <cmath>
#include <complex>

namespace qdurr {

/// Double-double scalar: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
/// giving roughly 32 significant decimal digits. Algorithms follow the
/// usual error-free transformation toolkit (two_sum / fma-based two_prod).
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double x) : hi(x), lo(0.0) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi; }
    explicit operator double() const { return hi; }
};

namespace detail {

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// requires |a| >= |b| or a == 0
inline DDouble fast_two_sum(double a, double b) {
    double s = a + b;
    double err = b - (s - a);
    return {s, err};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

} // namespace detail

inline DDouble operator+(DDouble x, DDouble y) {
    DDouble s = detail::two_sum(x.hi, y.hi);
    DDouble t = detail::two_sum(x.lo, y.lo);
    s.lo += t.hi;
    s = detail::fast_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::fast_two_sum(s.hi, s.lo);
}

inline DDouble operator+(DDouble x, double y) { return x + DDouble(y); }
inline DDouble operator+(double x, DDouble y) { return DDouble(x) + y; }

inline DDouble operator-(DDouble x) { return {-x.hi, -x.lo}; }
inline DDouble operator-(DDouble x, DDouble y) { return x + (-y); }
inline DDouble operator-(DDouble x, double y) { return x + DDouble(-y); }
inline DDouble operator-(double x, DDouble y) { return DDouble(x) + (-y); }

inline DDouble operator*(DDouble x, DDouble y) {
    DDouble p = detail::two_prod(x.hi, y.hi);
    p.lo += x.hi * y.lo + x.lo * y.hi;
    return detail::fast_two_sum(p.hi, p.lo);
}

inline DDouble operator*(DDouble x, double y) {
    DDouble p = detail::two_prod(x.hi, y);
    p.lo += x.lo * y;
    return detail::fast_two_sum(p.hi, p.lo);
}

inline DDouble operator*(double x, DDouble y) { return y * x; }

inline DDouble operator/(DDouble x, DDouble y) {
    double q1 = x.hi / y.hi;
    DDouble r = x - y * q1;
    double q2 = r.hi / y.hi;
    r = r - y * q2;
    double q3 = r.hi / y.hi;
    DDouble q = detail::fast_two_sum(q1, q2);
    return q + DDouble(q3);
}

inline DDouble operator/(DDouble x, double y) { return x / DDouble(y); }
inline DDouble operator/(double x, DDouble y) { return DDouble(x) / y; }

inline DDouble& operator+=(DDouble& x, DDouble y) { return x = x + y; }
inline DDouble& operator-=(DDouble& x, DDouble y) { return x = x - y; }
inline DDouble& operator*=(DDouble& x, DDouble y) { return x = x * y; }
inline DDouble& operator/=(DDouble& x, DDouble y) { return x = x / y; }

inline bool operator<(DDouble x, DDouble y) {
    return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}
inline bool operator>(DDouble x, DDouble y) { return y < x; }
inline bool operator<=(DDouble x, DDouble y) { return !(y < x); }
inline bool operator>=(DDouble x, DDouble y) { return !(x < y); }
inline bool operator==(DDouble x, DDouble y) { return x.hi == y.hi && x.lo == y.lo; }

inline DDouble abs(DDouble x) { return x.hi < 0.0 ? -x : x; }

/// Natural log, accurate to double precision (the result is consumed as a
/// plain double everywhere in this library).
inline double log_to_double(DDouble x) {
    return std::log(x.hi) + std::log1p(x.lo / x.hi);
}

/// Complex number over an arbitrary real scalar. Only the operations the
/// series kernels need.
template <typename T>
struct Cplx {
    T re{};
    T im{};

    Cplx() = default;
    Cplx(T r) : re(r), im(T(0)) {}
    Cplx(T r, T i) : re(r), im(i) {}
    explicit Cplx(std::complex<double> z) : re(T(z.real())), im(T(z.imag())) {}

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

template <typename T> Cplx<T> operator+(Cplx<T> a, Cplx<T> b) { return {a.re + b.re, a.im + b.im}; }
template <typename T> Cplx<T> operator-(Cplx<T> a, Cplx<T> b) { return {a.re - b.re, a.im - b.im}; }
template <typename T> Cplx<T> operator-(Cplx<T> a) { return {-a.re, -a.im}; }

template <typename T>
Cplx<T> operator*(Cplx<T> a, Cplx<T> b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <typename T> Cplx<T> operator*(Cplx<T> a, T s) { return {a.re * s, a.im * s}; }
template <typename T> Cplx<T> operator*(T s, Cplx<T> a) { return a * s; }

template <typename T>
Cplx<T> operator/(Cplx<T> a, T s) { return {a.re / s, a.im / s}; }

template <typename T>
Cplx<T> operator/(Cplx<T> a, Cplx<T> b) {
    T n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

template <typename T> Cplx<T>& operator+=(Cplx<T>& a, Cplx<T> b) { return a = a + b; }
template <typename T> Cplx<T>& operator-=(Cplx<T>& a, Cplx<T> b) { return a = a - b; }
template <typename T> Cplx<T>& operator*=(Cplx<T>& a, Cplx<T> b) { return a = a * b; }

/// 1-norm |re| + |im|, as a cheap magnitude for termination tests.
template <typename T>
double abs1(Cplx<T> a) {
    return std::abs(static_cast<double>(a.re)) + std::abs(static_cast<double>(a.im));
}

using CDD = Cplx<DDouble>;

inline CDD to_cdd(std::complex<double> z) { return CDD{DDouble(z.real()), DDouble(z.imag())}; }

} // namespace qdurr
