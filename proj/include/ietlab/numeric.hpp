#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace ietlab {

// Working scalar types. Real carries a runtime-configurable mantissa
// (default 128 bits); BigInt/Rat are exact.
using Real = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

namespace numeric {

// Mantissa width for all freshly constructed Real values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Two breakpoints closer than 2^floor_exp are treated as numerically
// indistinguishable; orbit machinery refuses to proceed past that point.
void set_separation_floor_exp(int floor_exp);
int separation_floor_exp();

Real separation_floor();
// Distance below which two independently computed copies of the same
// breakpoint are merged. Kept well under the separation floor.
Real merge_epsilon();

Real two_pi();

// Parse helper that honours the current precision.
Real real_from_string(const std::string& s);

// Restores the previous precision on scope exit.
struct PrecisionGuard {
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_bits_;
};

}  // namespace numeric

// Minimal complex value over Real. std::complex is only specified for the
// builtin floating types, so we keep our own.
struct CReal {
    Real re{0};
    Real im{0};

    CReal() = default;
    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit CReal(double r) : re(r), im(0) {}

    CReal& operator+=(const CReal& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CReal& operator-=(const CReal& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend CReal operator+(CReal a, const CReal& b) { return a += b; }
    friend CReal operator-(CReal a, const CReal& b) { return a -= b; }
    friend CReal operator*(const CReal& a, const CReal& b) {
        return CReal(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    CReal& operator*=(const CReal& o) { return *this = *this * o; }
    friend CReal operator*(const Real& s, const CReal& a) { return CReal(s * a.re, s * a.im); }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt(abs2()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// exp(2*pi*i*frac); frac in turns, any real value accepted.
CReal unit_phase(const Real& frac);

}  // namespace ietlab
