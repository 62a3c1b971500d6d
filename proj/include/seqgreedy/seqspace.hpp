// Core sequence-space types: dense vectors, norm kinds for l_p (1 <= p <= inf),
// and norming functionals (unit dual-norm functionals attaining the norm).
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace seqgreedy {

// Finite-dimensional real vector. The ambient dimension is coords.size();
// all entries are expected to be finite (validated where values enter the
// library, not on every arithmetic temporary).
struct DenseVector {
    std::vector<double> coords;

    DenseVector() = default;
    explicit DenseVector(std::size_t dim) : coords(dim, 0.0) {}
    DenseVector(std::initializer_list<double> xs) : coords(xs) {}
    explicit DenseVector(std::vector<double> xs) : coords(std::move(xs)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }
};

DenseVector unit_vector(std::size_t dim, std::size_t j);
bool is_finite(const DenseVector& v);
// Throws std::invalid_argument naming `what` if v has a NaN/Inf entry.
void require_finite(const DenseVector& v, const char* what);

// Which norm the ambient space carries. Hilbert is l_2 with inner-product
// structure; Lp covers 1 < p < inf; L1 and LInf are kept separate because
// their best-approximation solvers and norming functionals differ.
class NormKind {
public:
    enum class Tag { Hilbert, Lp, L1, LInf };

    static NormKind hilbert() { return NormKind(Tag::Hilbert, 2.0); }
    static NormKind lp(double p);  // requires 1 < p < inf
    static NormKind l1() { return NormKind(Tag::L1, 1.0); }
    static NormKind linf() { return NormKind(Tag::LInf, 0.0); }

    Tag tag() const { return tag_; }
    bool is_hilbert() const { return tag_ == Tag::Hilbert; }
    double p() const;  // exponent for Lp; 2 for Hilbert; throws for L1/LInf

    // Dual space norm kind: (l_p)* = l_q with 1/p + 1/q = 1.
    NormKind dual() const;

    std::string label() const;
    bool operator==(const NormKind& o) const;
    bool operator!=(const NormKind& o) const { return !(*this == o); }

private:
    NormKind(Tag t, double p) : tag_(t), p_(p) {}
    Tag tag_;
    double p_;
};

// Element of the dual space, represented by its coefficient sequence.
// Invariant: dual norm of coeffs is 1 within kDualTol.
struct Functional {
    DenseVector coeffs;
    NormKind dual_kind = NormKind::hilbert();

    double operator()(const DenseVector& v) const;
};

// Relative tolerance for unit-dual-norm and norm-attainment checks.
inline constexpr double kDualTol = 1e-10;

double norm(const DenseVector& v, const NormKind& k);
double inner(const DenseVector& u, const DenseVector& v);

// Unit-norm functional lambda with lambda(r) = ||r||_k. Hilbert: r/||r||.
// Lp: lambda_i = sign(r_i)|r_i|^{p-1}/||r||_p^{p-1}. LInf: sign(r_i*) e_{i*}
// at the smallest max-modulus index. L1: lambda_i = sign(r_i), sign(0) = 0.
// Throws std::invalid_argument for the zero vector.
Functional norming_functional(const DenseVector& r, const NormKind& k);

}  // namespace seqgreedy
