#include "ietlab/stepfun.hpp"

namespace ietlab {

int PiecewiseTranslation::piece_at(const Real& x) const {
    auto it = std::upper_bound(cut.begin(), cut.end(), x);
    int i = static_cast<int>(it - cut.begin()) - 1;
    if (i < 0) i = 0;
    if (i >= pieces()) i = pieces() - 1;
    return i;
}

Real PiecewiseTranslation::apply(const Real& x) const { return x + shift[piece_at(x)]; }

PiecewiseTranslation PiecewiseTranslation::from_iet(const IetMap& t) {
    PiecewiseTranslation w;
    w.total = t.total();
    w.cut = t.discontinuities();
    w.shift.reserve(t.d());
    for (int pos = 0; pos < t.d(); ++pos) w.shift.push_back(t.delta()[t.perm().letter_at_top(pos)]);
    return w;
}

PiecewiseTranslation PiecewiseTranslation::compose(const PiecewiseTranslation& outer,
                                                   const PiecewiseTranslation& inner) {
    PiecewiseTranslation w;
    w.total = inner.total;
    const Real eps = numeric::merge_epsilon();
    w.cut.push_back(Real(0));
    for (int i = 0; i < inner.pieces(); ++i) {
        const Real& hi = inner.cut[i + 1];
        const Real& s = inner.shift[i];
        Real img_lo = inner.cut[i] + s;
        Real img_hi = hi + s;
        auto it = std::upper_bound(outer.cut.begin(), outer.cut.end(), img_lo + eps);
        int j = static_cast<int>(it - outer.cut.begin()) - 1;
        if (j < 0) j = 0;
        while (true) {
            w.shift.push_back(s + outer.shift[j]);
            if (j + 1 < outer.pieces() && outer.cut[j + 1] < img_hi - eps) {
                w.cut.push_back(outer.cut[j + 1] - s);
                ++j;
            } else {
                break;
            }
        }
        w.cut.push_back(hi);
    }
    // Guard against numerically indistinguishable neighbours.
    const Real floor = numeric::separation_floor();
    for (size_t i = 0; i + 1 < w.cut.size(); ++i)
        if (w.cut[i + 1] - w.cut[i] < floor) throw PrecisionExhausted("compose: cell below separation floor");
    return w;
}

PiecewiseTranslation PiecewiseTranslation::power(const PiecewiseTranslation& t, long n) {
    if (n < 1) throw OutOfDomain("power expects n >= 1");
    PiecewiseTranslation acc;  // set on first use
    PiecewiseTranslation sq = t;
    bool have = false;
    long m = n;
    while (m > 0) {
        if (m & 1) {
            acc = have ? compose(sq, acc) : sq;
            have = true;
        }
        m >>= 1;
        if (m) sq = compose(sq, sq);
    }
    return acc;
}

namespace stepfun_detail {

std::vector<Real> merge_cuts(const std::vector<Real>& a, const std::vector<Real>& b) {
    const Real eps = numeric::merge_epsilon();
    const Real floor = numeric::separation_floor();
    std::vector<Real> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Real next;
        if (j >= b.size() || (i < a.size() && a[i] <= b[j]))
            next = a[i++];
        else
            next = b[j++];
        if (!out.empty()) {
            Real gap = next - out.back();
            if (gap < eps) continue;  // same breakpoint seen twice
            if (gap < floor) throw PrecisionExhausted("breakpoints below separation floor");
        }
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace stepfun_detail

}  // namespace ietlab
