#pragma once

#include "ietlab/errors.hpp"
#include "ietlab/iet.hpp"
#include "ietlab/numeric.hpp"

#include <algorithm>
#include <vector>

namespace ietlab {

// Exact piecewise translation of [0, total). cut has m+1 entries with
// cut.front() == 0 and cut.back() == total; piece i is [cut[i], cut[i+1])
// translated by shift[i].
struct PiecewiseTranslation {
    std::vector<Real> cut;
    std::vector<Real> shift;
    Real total;

    int pieces() const { return static_cast<int>(shift.size()); }
    int piece_at(const Real& x) const;
    Real apply(const Real& x) const;

    static PiecewiseTranslation from_iet(const IetMap& t);
    // w(x) = outer(inner(x)); exact refinement of the two cut systems.
    static PiecewiseTranslation compose(const PiecewiseTranslation& outer,
                                        const PiecewiseTranslation& inner);
    // n-fold self-composition via binary powering.
    static PiecewiseTranslation power(const PiecewiseTranslation& t, long n);
};

// Step function on [0, total) with values of type V; cells share the cut
// layout of PiecewiseTranslation.
template <class V>
struct StepFunction {
    std::vector<Real> cut;
    std::vector<V> value;

    int pieces() const { return static_cast<int>(value.size()); }

    const V& at(const Real& x) const {
        auto it = std::upper_bound(cut.begin(), cut.end(), x);
        int i = static_cast<int>(it - cut.begin()) - 1;
        if (i < 0) i = 0;
        if (i >= pieces()) i = pieces() - 1;
        return value[i];
    }
};

namespace stepfun_detail {

// Merge two sorted cut lists; cuts closer than merge_epsilon coincide,
// gaps below the separation floor abort.
std::vector<Real> merge_cuts(const std::vector<Real>& a, const std::vector<Real>& b);

}  // namespace stepfun_detail

// Pullback g = f o w. Cells refine w's cuts and the w-preimages of f's cuts.
template <class V>
StepFunction<V> compose_step(const StepFunction<V>& f, const PiecewiseTranslation& w) {
    StepFunction<V> g;
    const Real eps = numeric::merge_epsilon();
    g.cut.push_back(Real(0));
    for (int i = 0; i < w.pieces(); ++i) {
        const Real& lo = w.cut[i];
        const Real& hi = w.cut[i + 1];
        const Real& s = w.shift[i];
        Real img_lo = lo + s;
        Real img_hi = hi + s;
        // f-cells intersecting [img_lo, img_hi)
        auto it = std::upper_bound(f.cut.begin(), f.cut.end(), img_lo + eps);
        int j = static_cast<int>(it - f.cut.begin()) - 1;
        if (j < 0) j = 0;
        while (true) {
            g.value.push_back(f.value[j]);
            if (j + 1 < f.pieces() && f.cut[j + 1] < img_hi - eps) {
                g.cut.push_back(f.cut[j + 1] - s);
                ++j;
            } else {
                break;
            }
        }
        g.cut.push_back(hi);
    }
    return g;
}

// Pointwise combine on the merged cut refinement.
template <class V, class W, class R, class F>
StepFunction<R> combine_step(const StepFunction<V>& a, const StepFunction<W>& b, F&& op) {
    StepFunction<R> r;
    r.cut = stepfun_detail::merge_cuts(a.cut, b.cut);
    const int n = static_cast<int>(r.cut.size()) - 1;
    r.value.reserve(n);
    int ia = 0, ib = 0;
    const Real eps = numeric::merge_epsilon();
    for (int i = 0; i < n; ++i) {
        const Real& lo = r.cut[i];
        while (ia + 1 < static_cast<int>(a.value.size()) && a.cut[ia + 1] < lo + eps) ++ia;
        while (ib + 1 < static_cast<int>(b.value.size()) && b.cut[ib + 1] < lo + eps) ++ib;
        r.value.push_back(op(a.value[ia], b.value[ib]));
    }
    return r;
}

}  // namespace ietlab
