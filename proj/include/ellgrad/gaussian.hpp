#pragma once

#include "ellgrad/rational.hpp"

#include <ostream>

namespace ellgrad {

/// Exact complex number a + b*i with rational a, b.
struct GRat {
    Rat re;
    Rat im;

    GRat() = default;
    GRat(Rat r) : re(std::move(r)) {}            // NOLINT(google-explicit-constructor)
    GRat(int r) : re(r) {}                       // NOLINT(google-explicit-constructor)
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GRat operator-(const GRat& a) { return {-a.re, -a.im}; }
    friend GRat operator*(const GRat& a, const GRat& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GRat operator/(const GRat& a, const GRat& b)
    {
        const Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero GRat");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GRat& operator+=(const GRat& b) { re += b.re; im += b.im; return *this; }
    GRat& operator-=(const GRat& b) { re -= b.re; im -= b.im; return *this; }
    GRat& operator*=(const GRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GRat& z)
    {
        os << rat_to_string(z.re);
        if (z.im != 0) os << (z.im > 0 ? "+" : "") << rat_to_string(z.im) << "i";
        return os;
    }
};

inline GRat conj(const GRat& z) { return {z.re, -z.im}; }
inline Rat norm2(const GRat& z) { return z.re * z.re + z.im * z.im; }
inline GRat gaussian_i() { return GRat(Rat(0), Rat(1)); }

// Field glue shared by Rat and GRat in the templated linear algebra.
inline Rat conj(const Rat& q) { return q; }
inline bool is_zero(const Rat& q) { return q == 0; }
inline bool is_zero(const GRat& z) { return z.is_zero(); }

}  // namespace ellgrad
