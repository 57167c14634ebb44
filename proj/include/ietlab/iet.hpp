#pragma once

#include "ietlab/numeric.hpp"
#include "ietlab/permutation.hpp"

#include <vector>

namespace ietlab {

// Complex observable constant on each domain interval, indexed by letter.
struct LocallyConstantFunction {
    std::vector<CReal> values;

    static LocallyConstantFunction indicator(int letter, int d) {
        LocallyConstantFunction f;
        f.values.assign(d, CReal());
        f.values[letter].re = 1;
        return f;
    }
    static LocallyConstantFunction constant(const Real& c, int d) {
        LocallyConstantFunction f;
        f.values.assign(d, CReal(c, Real(0)));
        return f;
    }
};

// Real twist vector taken modulo Z^d, canonical representative in [0,1)^d.
struct TwistParameter {
    std::vector<Real> zeta;

    static TwistParameter zero(int d) {
        TwistParameter t;
        t.zeta.assign(d, Real(0));
        return t;
    }
    void reduce();
};

// Interval exchange transformation with explicit breakpoints and
// translation vector. Immutable after construction.
class IetMap {
  public:
    IetMap(std::vector<Real> lengths, Permutation perm);

    const Permutation& perm() const { return perm_; }
    int d() const { return perm_.d(); }
    const std::vector<Real>& lengths() const { return lengths_; }
    const Real& total() const { return total_; }
    const std::vector<Real>& delta() const { return delta_; }

    // Left endpoints of the domain intervals in top order, plus total.
    const std::vector<Real>& discontinuities() const { return cuts_; }
    // Left endpoints of the image intervals in bottom order, plus total.
    const std::vector<Real>& image_cuts() const { return image_cuts_; }

    int letter_at(const Real& x) const;        // domain letter, [ , ) convention
    int image_letter_at(const Real& x) const;  // letter whose image contains x

    Real apply(const Real& x) const;
    Real apply_inverse(const Real& x) const;

    Real left_endpoint(int letter) const { return cuts_[perm_.top(letter)]; }
    Real image_left_endpoint(int letter) const { return image_cuts_[perm_.bottom(letter)]; }

  private:
    Permutation perm_;
    std::vector<Real> lengths_;  // letter-indexed
    std::vector<Real> delta_;    // letter-indexed translation
    std::vector<Real> cuts_;
    std::vector<Real> image_cuts_;
    Real total_;
};

IetMap build_iet(const std::vector<Real>& lengths, const Permutation& perm);

// Plain Birkhoff sum by direct orbit iteration.
CReal birkhoff_sum(const IetMap& t, const LocallyConstantFunction& f, Real x, long n);

// Exponential Birkhoff sum; phases accumulate modulo 1 before
// exponentiation.
CReal twisted_birkhoff_sum(const IetMap& t, const LocallyConstantFunction& f,
                           const TwistParameter& zeta, Real x, long n);

// Breakpoints (including 0 and total) of the common refinement of the first
// n pullbacks of the base partition together with extra breakpoints.
std::vector<Real> orbit_partition(const IetMap& t, long n, const std::vector<Real>& extras);

// Exact sup over x of |S_n(1_J, x) - n*|J|/total|.
Real discrepancy(const IetMap& t, const Real& a, const Real& b, long n);

// D(2^j) for j in [min_exp, max_exp], computed in one doubling pass over the
// same exact cell refinement discrepancy() evaluates.
std::vector<Real> dyadic_discrepancy_series(const IetMap& t, const Real& a, const Real& b,
                                            int min_exp, int max_exp);

// sup_x |S_{2^j}(f, zeta, x)| for j in [min_exp, max_exp], exact over the
// orbit-partition cells.
std::vector<Real> dyadic_twisted_sup_series(const IetMap& t, const LocallyConstantFunction& f,
                                            const TwistParameter& zeta, int min_exp,
                                            int max_exp);

}  // namespace ietlab
