#include "ietlab/iet.hpp"

#include "ietlab/stepfun.hpp"

#include <algorithm>

namespace ietlab {

void TwistParameter::reduce() {
    for (Real& z : zeta) {
        z -= floor(z);
        if (z >= 1) z = 0;  // guard against rounding at the seam
        if (z < 0) z = 0;
    }
}

IetMap::IetMap(std::vector<Real> lengths, Permutation perm)
    : perm_(std::move(perm)), lengths_(std::move(lengths)) {
    const int d = perm_.d();
    if (static_cast<int>(lengths_.size()) != d) throw DimensionMismatch();
    for (const Real& l : lengths_)
        if (!(l > 0)) throw NonPositiveLength();
    total_ = 0;
    for (const Real& l : lengths_) total_ += l;

    cuts_.assign(d + 1, Real(0));
    for (int pos = 0; pos < d; ++pos)
        cuts_[pos + 1] = cuts_[pos] + lengths_[perm_.letter_at_top(pos)];
    cuts_[d] = total_;

    image_cuts_.assign(d + 1, Real(0));
    for (int pos = 0; pos < d; ++pos)
        image_cuts_[pos + 1] = image_cuts_[pos] + lengths_[perm_.letter_at_bottom(pos)];
    image_cuts_[d] = total_;

    delta_.assign(d, Real(0));
    for (int l = 0; l < d; ++l)
        delta_[l] = image_cuts_[perm_.bottom(l)] - cuts_[perm_.top(l)];
}

IetMap build_iet(const std::vector<Real>& lengths, const Permutation& perm) {
    if (!perm.irreducible()) throw Reducible();
    return IetMap(lengths, perm);
}

namespace {
int cell_at(const std::vector<Real>& cuts, const Real& x) {
    auto it = std::upper_bound(cuts.begin(), cuts.end(), x);
    int i = static_cast<int>(it - cuts.begin()) - 1;
    if (i < 0) i = 0;
    if (i >= static_cast<int>(cuts.size()) - 1) i = static_cast<int>(cuts.size()) - 2;
    return i;
}
}  // namespace

int IetMap::letter_at(const Real& x) const { return perm_.letter_at_top(cell_at(cuts_, x)); }

int IetMap::image_letter_at(const Real& x) const {
    return perm_.letter_at_bottom(cell_at(image_cuts_, x));
}

Real IetMap::apply(const Real& x) const { return x + delta_[letter_at(x)]; }

Real IetMap::apply_inverse(const Real& x) const { return x - delta_[image_letter_at(x)]; }

CReal birkhoff_sum(const IetMap& t, const LocallyConstantFunction& f, Real x, long n) {
    if (static_cast<int>(f.values.size()) != t.d()) throw DimensionMismatch();
    CReal sum;
    for (long k = 0; k < n; ++k) {
        sum += f.values[t.letter_at(x)];
        x = t.apply(x);
    }
    return sum;
}

CReal twisted_birkhoff_sum(const IetMap& t, const LocallyConstantFunction& f,
                           const TwistParameter& zeta, Real x, long n) {
    if (static_cast<int>(f.values.size()) != t.d() ||
        static_cast<int>(zeta.zeta.size()) != t.d())
        throw DimensionMismatch();
    CReal sum;
    Real phase(0);  // running Birkhoff sum of zeta, kept in [0,1)
    for (long k = 0; k < n; ++k) {
        int letter = t.letter_at(x);
        sum += unit_phase(phase) * f.values[letter];
        phase += zeta.zeta[letter];
        phase -= floor(phase);
        x = t.apply(x);
    }
    return sum;
}

std::vector<Real> orbit_partition(const IetMap& t, long n, const std::vector<Real>& extras) {
    if (n < 1) throw OutOfDomain("orbit_partition expects n >= 1");
    std::vector<Real> base = t.discontinuities();
    for (const Real& e : extras) {
        if (e < 0 || e > t.total()) throw OutOfDomain("extra breakpoint outside domain");
        base.push_back(e);
    }
    std::sort(base.begin(), base.end());
    std::vector<Real> pts = base;  // k = 0 level
    std::vector<Real> level = base;
    for (long k = 1; k < n; ++k) {
        for (Real& p : level)
            if (p < t.total()) p = t.apply_inverse(p);
        pts.insert(pts.end(), level.begin(), level.end());
    }
    std::sort(pts.begin(), pts.end());
    const Real eps = numeric::merge_epsilon();
    const Real floor_v = numeric::separation_floor();
    std::vector<Real> out;
    for (Real& p : pts) {
        if (!out.empty()) {
            Real gap = p - out.back();
            if (gap < eps) continue;
            if (gap < floor_v) throw PrecisionExhausted("orbit_partition separation floor");
        }
        out.push_back(std::move(p));
    }
    if (out.empty() || out.front() > eps) out.insert(out.begin(), Real(0));
    if (out.back() < t.total() - eps) out.push_back(t.total());
    else out.back() = t.total();
    return out;
}

namespace {

StepFunction<long long> indicator_step(const Real& a, const Real& b, const Real& total) {
    const Real eps = numeric::merge_epsilon();
    StepFunction<long long> f;
    f.cut.push_back(Real(0));
    if (a > eps) {
        f.cut.push_back(a);
        f.value.push_back(0);
    }
    if (b < total - eps) {
        f.cut.push_back(b);
        f.value.push_back(1);
        f.value.push_back(0);
    } else {
        f.value.push_back(1);
    }
    f.cut.push_back(total);
    return f;
}

struct CountEngine {
    StepFunction<long long> f_pow;
    PiecewiseTranslation w_pow;
    StepFunction<long long> f_acc;
    PiecewiseTranslation w_acc;
    bool have_acc = false;

    void absorb() {  // acc += current power
        if (!have_acc) {
            f_acc = f_pow;
            w_acc = w_pow;
            have_acc = true;
            return;
        }
        auto pulled = compose_step(f_pow, w_acc);
        f_acc = combine_step<long long, long long, long long>(
            f_acc, pulled, [](long long x, long long y) { return x + y; });
        w_acc = PiecewiseTranslation::compose(w_pow, w_acc);
    }
    void square() {
        auto pulled = compose_step(f_pow, w_pow);
        f_pow = combine_step<long long, long long, long long>(
            f_pow, pulled, [](long long x, long long y) { return x + y; });
        w_pow = PiecewiseTranslation::compose(w_pow, w_pow);
    }
};

Real count_deviation(const StepFunction<long long>& f, long n, const Real& mean_mass) {
    // max over cells of |count - n * mean_mass|
    Real best(0);
    Real expect = n * mean_mass;
    for (const long long& v : f.value) {
        Real dev = abs(Real(v) - expect);
        if (dev > best) best = dev;
    }
    return best;
}

}  // namespace

Real discrepancy(const IetMap& t, const Real& a, const Real& b, long n) {
    if (a < 0 || b > t.total() || a > b) throw OutOfDomain("bad subinterval");
    if (n <= 0) return Real(0);
    CountEngine e;
    e.f_pow = indicator_step(a, b, t.total());
    e.w_pow = PiecewiseTranslation::from_iet(t);
    long m = n;
    while (m > 0) {
        if (m & 1) e.absorb();
        m >>= 1;
        if (m) e.square();
    }
    Real mean_mass = (b - a) / t.total();
    return count_deviation(e.f_acc, n, mean_mass);
}

std::vector<Real> dyadic_discrepancy_series(const IetMap& t, const Real& a, const Real& b,
                                            int min_exp, int max_exp) {
    if (a < 0 || b > t.total() || a > b) throw OutOfDomain("bad subinterval");
    std::vector<Real> out;
    CountEngine e;
    e.f_pow = indicator_step(a, b, t.total());
    e.w_pow = PiecewiseTranslation::from_iet(t);
    Real mean_mass = (b - a) / t.total();
    long n = 1;
    for (int j = 0; j <= max_exp; ++j) {
        if (j >= min_exp) out.push_back(count_deviation(e.f_pow, n, mean_mass));
        if (j < max_exp) {
            e.square();
            n <<= 1;
        }
    }
    return out;
}

std::vector<Real> dyadic_twisted_sup_series(const IetMap& t, const LocallyConstantFunction& f,
                                            const TwistParameter& zeta, int min_exp,
                                            int max_exp) {
    if (static_cast<int>(f.values.size()) != t.d() ||
        static_cast<int>(zeta.zeta.size()) != t.d())
        throw DimensionMismatch();
    StepFunction<CReal> fs;
    StepFunction<Real> ps;
    fs.cut = t.discontinuities();
    ps.cut = fs.cut;
    for (int pos = 0; pos < t.d(); ++pos) {
        int letter = t.perm().letter_at_top(pos);
        fs.value.push_back(f.values[letter]);
        ps.value.push_back(zeta.zeta[letter]);
    }
    PiecewiseTranslation w = PiecewiseTranslation::from_iet(t);

    auto sup_abs = [](const StepFunction<CReal>& g) {
        Real best(0);
        for (const CReal& v : g.value) {
            Real a = v.abs();
            if (a > best) best = a;
        }
        return best;
    };

    std::vector<Real> out;
    for (int j = 0; j <= max_exp; ++j) {
        if (j >= min_exp) out.push_back(sup_abs(fs));
        if (j == max_exp) break;
        auto pulled_f = compose_step(fs, w);
        auto pulled_p = compose_step(ps, w);
        auto twisted_tail = combine_step<Real, CReal, CReal>(
            ps, pulled_f, [](const Real& p, const CReal& g) { return unit_phase(p) * g; });
        fs = combine_step<CReal, CReal, CReal>(
            fs, twisted_tail, [](const CReal& x, const CReal& y) { return x + y; });
        ps = combine_step<Real, Real, Real>(ps, pulled_p, [](const Real& x, const Real& y) {
            Real s = x + y;
            s -= floor(s);
            return s;
        });
        w = PiecewiseTranslation::compose(w, w);
    }
    return out;
}

}  // namespace ietlab
