#include "seqgreedy/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqgreedy {

DenseVector unit_vector(std::size_t dim, std::size_t j) {
    if (j >= dim) throw std::invalid_argument("unit_vector: index out of range");
    DenseVector e(dim);
    e[j] = 1.0;
    return e;
}

bool is_finite(const DenseVector& v) {
    for (double x : v.coords)
        if (!std::isfinite(x)) return false;
    return true;
}

void require_finite(const DenseVector& v, const char* what) {
    if (!is_finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

NormKind NormKind::lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("NormKind::lp: exponent must satisfy 1 < p < inf");
    return NormKind(Tag::Lp, p);
}

double NormKind::p() const {
    switch (tag_) {
        case Tag::Hilbert: return 2.0;
        case Tag::Lp: return p_;
        default: throw std::logic_error("NormKind::p: no finite exponent > 1 for this kind");
    }
}

NormKind NormKind::dual() const {
    switch (tag_) {
        case Tag::Hilbert: return hilbert();
        case Tag::Lp: return lp(p_ / (p_ - 1.0));
        case Tag::L1: return linf();
        case Tag::LInf: return l1();
    }
    throw std::logic_error("NormKind::dual: bad tag");
}

std::string NormKind::label() const {
    switch (tag_) {
        case Tag::Hilbert: return "hilbert";
        case Tag::Lp: return "lp(" + std::to_string(p_) + ")";
        case Tag::L1: return "l1";
        case Tag::LInf: return "linf";
    }
    return "?";
}

bool NormKind::operator==(const NormKind& o) const {
    if (tag_ != o.tag_) return false;
    return tag_ != Tag::Lp || p_ == o.p_;
}

double Functional::operator()(const DenseVector& v) const { return inner(coeffs, v); }

double norm(const DenseVector& v, const NormKind& k) {
    switch (k.tag()) {
        case NormKind::Tag::Hilbert: {
            double s = 0.0;
            for (double x : v.coords) s += x * x;
            return std::sqrt(s);
        }
        case NormKind::Tag::L1: {
            double s = 0.0;
            for (double x : v.coords) s += std::abs(x);
            return s;
        }
        case NormKind::Tag::LInf: {
            double m = 0.0;
            for (double x : v.coords) m = std::max(m, std::abs(x));
            return m;
        }
        case NormKind::Tag::Lp: {
            // Scale by the max modulus so |x/m| <= 1 before exponentiation.
            double m = 0.0;
            for (double x : v.coords) m = std::max(m, std::abs(x));
            if (m == 0.0) return 0.0;
            double s = 0.0;
            const double p = k.p();
            for (double x : v.coords) s += std::pow(std::abs(x) / m, p);
            return m * std::pow(s, 1.0 / p);
        }
    }
    throw std::logic_error("norm: bad norm kind");
}

double inner(const DenseVector& u, const DenseVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

namespace {
double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

Functional norming_functional(const DenseVector& r, const NormKind& k) {
    require_finite(r, "norming_functional");
    const double nr = norm(r, k);
    if (nr == 0.0) throw std::invalid_argument("norming_functional: zero vector");

    DenseVector lam(r.dim());
    switch (k.tag()) {
        case NormKind::Tag::Hilbert:
            for (std::size_t i = 0; i < r.dim(); ++i) lam[i] = r[i] / nr;
            break;
        case NormKind::Tag::Lp: {
            const double p = k.p();
            // |r_i|^{p-1} / ||r||^{p-1}, computed on the scaled entries r_i/||r||.
            for (std::size_t i = 0; i < r.dim(); ++i)
                lam[i] = sgn(r[i]) * std::pow(std::abs(r[i]) / nr, p - 1.0);
            break;
        }
        case NormKind::Tag::L1:
            for (std::size_t i = 0; i < r.dim(); ++i) lam[i] = sgn(r[i]);
            break;
        case NormKind::Tag::LInf: {
            std::size_t best = 0;
            double m = -1.0;
            for (std::size_t i = 0; i < r.dim(); ++i) {
                if (std::abs(r[i]) > m) {  // strict: ties keep the smallest index
                    m = std::abs(r[i]);
                    best = i;
                }
            }
            lam[best] = sgn(r[best]);
            break;
        }
    }
    return Functional{std::move(lam), k.dual()};
}

}  // namespace seqgreedy
