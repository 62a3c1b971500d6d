#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "seqgreedy/rng.hpp"
#include "seqgreedy/seqspace.hpp"

using namespace seqgreedy;
using seqgreedy::testing::all_norm_kinds;
using seqgreedy::testing::random_vector;

TEST_CASE("norm: stated examples") {
    CHECK(norm(DenseVector{1, 0, 0}, NormKind::linf()) == 1.0);
    CHECK(norm(DenseVector{3, 4}, NormKind::hilbert()) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(norm(DenseVector{1, 1}, NormKind::lp(3.0)) ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
    CHECK(norm(DenseVector{0, 0, 0}, NormKind::l1()) == 0.0);
}

TEST_CASE("inner: stated examples and dimension mismatch") {
    CHECK(inner(unit_vector(3, 0), unit_vector(3, 1)) == 0.0);
    CHECK(inner(unit_vector(3, 0), unit_vector(3, 0)) == 1.0);
    CHECK(inner(DenseVector{1, 2}, DenseVector{3, 4}) == 11.0);
    CHECK_THROWS_AS(inner(DenseVector{1, 2}, DenseVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("norm kind validation") {
    CHECK_THROWS_AS(NormKind::lp(1.0), std::invalid_argument);
    CHECK_THROWS_AS(NormKind::lp(0.5), std::invalid_argument);
    CHECK(NormKind::lp(3.0).dual().p() == doctest::Approx(1.5));
    CHECK(NormKind::l1().dual().tag() == NormKind::Tag::LInf);
    CHECK(NormKind::linf().dual().tag() == NormKind::Tag::L1);
}

TEST_CASE("norming_functional: stated examples") {
    SUBCASE("hilbert") {
        const Functional lam = norming_functional(DenseVector{0, 2}, NormKind::hilbert());
        CHECK(lam.coeffs[0] == 0.0);
        CHECK(lam.coeffs[1] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("linf picks the max-modulus coordinate") {
        const Functional lam = norming_functional(DenseVector{0.5, -2, 1}, NormKind::linf());
        CHECK(lam.coeffs[0] == 0.0);
        CHECK(lam.coeffs[1] == -1.0);
        CHECK(lam.coeffs[2] == 0.0);
        CHECK(lam.dual_kind.tag() == NormKind::Tag::L1);
    }
    SUBCASE("linf tie-break at the smallest index") {
        const Functional lam = norming_functional(DenseVector{-1, 1}, NormKind::linf());
        CHECK(lam.coeffs[0] == -1.0);
        CHECK(lam.coeffs[1] == 0.0);
    }
    SUBCASE("lp(3) on (1,1)") {
        const DenseVector r{1, 1};
        const Functional lam = norming_functional(r, NormKind::lp(3.0));
        CHECK(lam.coeffs[0] == doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-14));
        CHECK(lam.coeffs[1] == doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-14));
        CHECK(lam(r) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
        CHECK(norm(lam.coeffs, lam.dual_kind) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("l1 uses sign(0) = 0") {
        const Functional lam = norming_functional(DenseVector{2, 0, -3}, NormKind::l1());
        CHECK(lam.coeffs[0] == 1.0);
        CHECK(lam.coeffs[1] == 0.0);
        CHECK(lam.coeffs[2] == -1.0);
    }
    SUBCASE("zero vector rejected") {
        CHECK_THROWS_AS(norming_functional(DenseVector{0, 0}, NormKind::l1()),
                        std::invalid_argument);
    }
}

TEST_CASE("norm axioms on random vectors") {
    Rng rng(101);
    for (const auto& k : all_norm_kinds()) {
        for (int rep = 0; rep < 300; ++rep) {
            const std::size_t dim = 1 + rng.next_u64() % 8;
            const DenseVector u = random_vector(rng, dim);
            const DenseVector v = random_vector(rng, dim);
            const double alpha = rng.next_gaussian();

            const double nu = norm(u, k), nv = norm(v, k);
            DenseVector su = u, sum = u;
            bool u_zero = true;
            for (std::size_t i = 0; i < dim; ++i) {
                su[i] *= alpha;
                sum[i] += v[i];
                if (u[i] != 0.0) u_zero = false;
            }
            CHECK(norm(su, k) == doctest::Approx(std::abs(alpha) * nu).epsilon(1e-12));
            CHECK(norm(sum, k) <= (nu + nv) * (1.0 + 1e-12) + 1e-300);
            CHECK((nu == 0.0) == u_zero);  // definiteness
        }
        CHECK(norm(DenseVector(5), k) == 0.0);
    }
}

TEST_CASE("norming functional attains the norm with unit dual norm") {
    Rng rng(202);
    for (const auto& k : all_norm_kinds()) {
        for (int rep = 0; rep < 1000; ++rep) {
            const std::size_t dim = 1 + rng.next_u64() % 8;
            DenseVector r = random_vector(rng, dim);
            if (norm(r, k) == 0.0) continue;
            const Functional lam = norming_functional(r, k);
            const double nr = norm(r, k);
            CHECK(std::abs(lam(r) - nr) <= kDualTol * nr);
            CHECK(std::abs(norm(lam.coeffs, lam.dual_kind) - 1.0) <= kDualTol);

            // Hoelder: |lam(v)| <= ||v|| for any v.
            const DenseVector v = random_vector(rng, dim);
            CHECK(std::abs(lam(v)) <= norm(v, k) * (1.0 + 1e-12) + 1e-300);
        }
    }
}

TEST_CASE("finiteness validation") {
    DenseVector bad{1.0, std::nan("")};
    CHECK_THROWS_AS(require_finite(bad, "test"), std::invalid_argument);
    CHECK(is_finite(DenseVector{1, 2, 3}));
}
