#include "ietlab/exact.hpp"

#include <algorithm>

namespace ietlab {

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    if (k == 0 || static_cast<int>(a[0].size()) != k) throw DimensionMismatch();
    const int m = static_cast<int>(b[0].size());
    IntMat c(n, IntVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
    const int n = static_cast<int>(a.size());
    if (n == 0 || a[0].size() != v.size()) throw DimensionMismatch();
    IntVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

IntMat mat_transpose(const IntMat& a) {
    if (a.empty()) return a;
    IntMat t(a[0].size(), IntVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

bool mat_equal(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

BigInt mat_det(IntMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int mat_rank(IntMat a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            BigInt g = gcd(a[r][c], a[i][c]);
            BigInt fr = a[i][c] / g, fi = a[r][c] / g;
            for (int j = c; j < cols; ++j) a[i][j] = fi * a[i][j] - fr * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
    if (a.empty()) return {};
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    // Column reduction: maintain U unimodular with work = a * U.
    IntMat work = a;
    IntMat u = identity_matrix(cols);
    std::vector<bool> used(cols, false);
    for (int r = 0; r < rows; ++r) {
        // Reduce row r across the still-active columns until at most one
        // nonzero entry remains, gcd-style.
        while (true) {
            int c1 = -1, c2 = -1;
            for (int c = 0; c < cols; ++c) {
                if (used[c] || work[r][c] == 0) continue;
                if (c1 < 0)
                    c1 = c;
                else {
                    c2 = c;
                    break;
                }
            }
            if (c2 < 0) {
                if (c1 >= 0) used[c1] = true;
                break;
            }
            // Make |work[r][c1]| <= |work[r][c2]|, then reduce c2 by c1.
            if (abs(work[r][c1]) > abs(work[r][c2])) std::swap(c1, c2);
            BigInt q = work[r][c2] / work[r][c1];  // truncated division
            for (int i = 0; i < rows; ++i) work[i][c2] -= q * work[i][c1];
            for (int i = 0; i < cols; ++i) u[i][c2] -= q * u[i][c1];
        }
    }
    std::vector<IntVec> kernel;
    for (int c = 0; c < cols; ++c) {
        if (used[c]) continue;
        bool zero = true;
        for (int r = 0; r < rows; ++r)
            if (work[r][c] != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;  // unreachable once all rows processed
        IntVec v(cols);
        for (int i = 0; i < cols; ++i) v[i] = u[i][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool solve_in_span(const std::vector<IntVec>& basis, const IntVec& v, RatVec* coeffs) {
    const int k = static_cast<int>(basis.size());
    const int d = static_cast<int>(v.size());
    // Gaussian elimination on the augmented d x (k+1) rational system.
    RatMat m(d, RatVec(k + 1, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][k] = Rat(v[i]);
    }
    std::vector<int> pivot_col(d, -1);
    int r = 0;
    for (int c = 0; c < k && r < d; ++c) {
        int piv = -1;
        for (int i = r; i < d; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j <= k; ++j) m[r][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < d; ++i)
        if (m[i][k] != 0) return false;
    if (coeffs) {
        coeffs->assign(k, Rat(0));
        for (int i = 0; i < r; ++i) (*coeffs)[pivot_col[i]] = m[i][k];
    }
    return true;
}

bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& v) {
    RatVec coeffs;
    if (!solve_in_span(basis, v, &coeffs)) return false;
    for (const Rat& c : coeffs)
        if (denominator(c) != 1) return false;
    return true;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

Cyclotomic Cyclotomic::root_power(int p, long e, const Rat& r) {
    Cyclotomic z(p);
    long m = ((e % p) + p) % p;
    z.c_[m] = r;
    z.canonicalize();
    return z;
}

Cyclotomic Cyclotomic::from_rat(int p, const Rat& r) { return root_power(p, 0, r); }

void Cyclotomic::canonicalize() {
    const Rat last = c_[p_ - 1];
    if (last == 0) return;
    for (int i = 0; i < p_; ++i) c_[i] -= last;
}

bool Cyclotomic::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r(p_);
    for (int i = 0; i < p_; ++i) r.c_[i] = c_[i] + o.c_[i];
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic r(p_);
    for (int i = 0; i < p_; ++i) r.c_[i] = c_[i] - o.c_[i];
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic r(p_);
    for (int i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
    Cyclotomic z(p_);
    for (int i = 0; i < p_; ++i) z.c_[i] = c_[i] * r;
    z.canonicalize();
    return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DimensionMismatch("Cyclotomic inverse of zero");
    // Solve (this * x) == 1 as a (p-1)-dimensional rational linear system in
    // the canonical coordinates 1, w, ..., w^{p-2}.
    const int n = p_ - 1;
    RatMat m(n, RatVec(n + 1, Rat(0)));
    for (int j = 0; j < n; ++j) {
        Cyclotomic col = *this * Cyclotomic::root_power(p_, j);
        for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw DimensionMismatch("Cyclotomic inverse: singular");
        std::swap(m[c], m[piv]);
        Rat inv = Rat(1) / m[c][c];
        for (int j = c; j <= n; ++j) m[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    Cyclotomic r(p_);
    for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
    r.canonicalize();
    return r;
}

CReal Cyclotomic::to_creal() const {
    CReal z;
    for (int i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        Real coef(numerator(c_[i]).str());
        coef /= Real(denominator(c_[i]).str());
        CReal w = unit_phase(Real(i) / p_);
        z += coef * w;
    }
    return z;
}

int cyclotomic_rank(CycMat m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Cyclotomic inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Cyclotomic f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace ietlab
