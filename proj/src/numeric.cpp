#include "ietlab/numeric.hpp"

namespace ietlab {
namespace numeric {

namespace {
unsigned g_precision_bits = 128;
int g_floor_exp = -90;

unsigned bits_to_digits10(unsigned bits) {
    // digits10 ~= bits * log10(2), rounded up with a small guard.
    return static_cast<unsigned>(bits * 0.30103) + 3;
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) bits = 64;
    g_precision_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits; }

void set_separation_floor_exp(int floor_exp) { g_floor_exp = floor_exp; }

int separation_floor_exp() { return g_floor_exp; }

Real separation_floor() {
    Real one(1);
    return ldexp(one, g_floor_exp);
}

Real merge_epsilon() {
    Real one(1);
    return ldexp(one, g_floor_exp - 12);
}

Real two_pi() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return 2 * pi;
}

Real real_from_string(const std::string& s) { return Real(s); }

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_bits_(g_precision_bits) {
    set_precision_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { set_precision_bits(saved_bits_); }

namespace {
struct PrecisionInit {
    PrecisionInit() { set_precision_bits(128); }
};
PrecisionInit g_precision_init;
}  // namespace

}  // namespace numeric

CReal unit_phase(const Real& frac) {
    Real theta = numeric::two_pi() * frac;
    return CReal(cos(theta), sin(theta));
}

}  // namespace ietlab
