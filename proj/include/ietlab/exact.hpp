#pragma once

#include "ietlab/errors.hpp"
#include "ietlab/numeric.hpp"

#include <vector>

namespace ietlab {

using IntMat = std::vector<std::vector<BigInt>>;
using IntVec = std::vector<BigInt>;
using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
IntMat mat_transpose(const IntMat& a);
bool mat_equal(const IntMat& a, const IntMat& b);
BigInt mat_det(IntMat a);  // Bareiss, exact

// Rank over Q of an integer matrix (fraction-free elimination).
int mat_rank(IntMat a);

// Basis of the integer kernel {v : a v = 0}, as columns. The resulting
// lattice is saturated (it is a kernel lattice).
std::vector<IntVec> integer_kernel(const IntMat& a);

// Solve basis * x = v over Q; returns empty if v is outside the span.
// basis given as a list of columns.
bool solve_in_span(const std::vector<IntVec>& basis, const IntVec& v, RatVec* coeffs);

// True iff v lies in the integer span of the basis columns.
bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& v);

bool is_prime(long n);

// Arithmetic in Q(w) for w a primitive p-th root of unity. Values are
// stored as length-p coefficient vectors on 1, w, ..., w^{p-1} with the
// canonical normalization coeff[p-1] == 0 (using 1 + w + ... + w^{p-1} = 0).
class Cyclotomic {
  public:
    Cyclotomic() : p_(0) {}
    explicit Cyclotomic(int p) : p_(p), c_(p, Rat(0)) {}
    // w^e scaled by r
    static Cyclotomic root_power(int p, long e, const Rat& r = Rat(1));
    static Cyclotomic from_rat(int p, const Rat& r);

    int p() const { return p_; }
    bool is_zero() const;
    const Rat& coeff(int i) const { return c_[i]; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rat& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    bool operator==(const Cyclotomic& o) const;

    Cyclotomic inverse() const;  // throws DimensionMismatch on zero

    CReal to_creal() const;

  private:
    void canonicalize();
    int p_;
    std::vector<Rat> c_;
};

using CycMat = std::vector<std::vector<Cyclotomic>>;

// Rank of a matrix over Q(w); exact Gaussian elimination.
int cyclotomic_rank(CycMat m);

}  // namespace ietlab
