#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "seqgreedy/widths.hpp"

using namespace seqgreedy;
using namespace seqgreedy::testing;

TEST_CASE("jacobi svd: diagonal matrix has coordinate singular vectors") {
    const CompactSet f = realize(DiagonalSpec{{1.0, 0.5, 0.25}}, NormKind::hilbert());
    const SvdResult svd = jacobi_svd(f.elements);
    REQUIRE(svd.singular.size() == 3);
    CHECK(svd.singular[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(svd.singular[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(svd.singular[2] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(std::abs(svd.left[0][0]) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("jacobi svd: orthonormal left vectors, frobenius preserved") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t d = 3 + rng.next_u64() % 6;
        const std::size_t m = 2 + rng.next_u64() % 6;
        std::vector<DenseVector> cols;
        double fro2 = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            cols.push_back(random_vector(rng, d));
            fro2 += inner(cols.back(), cols.back());
        }
        const SvdResult svd = jacobi_svd(cols);
        double sum_sq = 0.0;
        for (double s : svd.singular) sum_sq += s * s;
        CHECK(sum_sq == doctest::Approx(fro2).epsilon(1e-10));
        for (std::size_t a = 0; a < svd.left.size(); ++a)
            for (std::size_t b = 0; b <= a; ++b)
                CHECK(std::abs(inner(svd.left[a], svd.left[b]) - (a == b ? 1.0 : 0.0)) <= 1e-10);
    }
}

TEST_CASE("width_upper_svd: stated examples") {
    const CompactSet f = realize(DiagonalSpec{{1.0, 0.5, 0.25}}, NormKind::hilbert());
    CHECK(width_upper_svd(f, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(width_upper_svd(f, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(width_upper_svd(f, 3) <= 1e-12);  // full-rank capture
    CHECK(width_upper_svd(f, 5) <= 1e-12);
    const CompactSet g = realize(DiagonalSpec{{1.0, 0.5}}, NormKind::linf());
    CHECK_THROWS_AS(width_upper_svd(g, 1), std::invalid_argument);
}

TEST_CASE("width_upper_svd is non-increasing in n") {
    Rng rng(5);
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
        const CompactSet f = realize(RandomBallSpec{6, 14, seed}, NormKind::hilbert());
        double prev = width_upper_svd(f, 0);
        for (int n = 1; n <= 8; ++n) {
            const double cur = width_upper_svd(f, n);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("width_brute_force: stated examples") {
    SUBCASE("diagonal (1, 1/2) in l2") {
        // The best line equioscillates the two elements: min over theta of
        // max(|sin t|, 0.5 |cos t|) is attained at tan t = 1/2 with value
        // 1/sqrt(5).  (The coordinate span{e_0} only certifies d_1 <= 1/2.)
        const double d1 = 1.0 / std::sqrt(5.0);
        const CompactSet f = realize(DiagonalSpec{{1.0, 0.5}}, NormKind::hilbert());
        const BruteForceWidth w = width_brute_force(f, 1, 360);
        CHECK(w.upper >= d1 - 1e-9);
        CHECK(w.upper <= d1 + 0.02);
        CHECK(w.lower <= d1 + 1e-9);
        CHECK(w.upper <= 0.5 + 1e-9);  // consistent with the coordinate upper bound
    }
    SUBCASE("collinear family has zero width") {
        CompactSet f;
        f.norm_kind = NormKind::hilbert();
        f.spec = DiagonalSpec{{1.0}};
        f.elements = {DenseVector{0.6, 0.8}, DenseVector{0.3, 0.4}};
        const BruteForceWidth w = width_brute_force(f, 1, 360);
        CHECK(w.upper <= 2e-2);
    }
    SUBCASE("two orthogonal unit vectors: oracle value is the reference") {
        const CompactSet f = realize(DiagonalSpec{{1.0, 1.0}}, NormKind::hilbert());
        const BruteForceWidth w = width_brute_force(f, 1, 360);
        // best line is the diagonal; max distance = 1/sqrt(2)
        CHECK(w.upper == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
    }
    SUBCASE("preconditions") {
        const CompactSet f = realize(DiagonalSpec{{1.0, 0.5}}, NormKind::hilbert());
        CHECK_THROWS_AS(width_brute_force(f, 2, 64), std::invalid_argument);
        const CompactSet big =
            realize(DiagonalSpec{{1.0, 0.9, 0.8, 0.7, 0.6}}, NormKind::hilbert());
        CHECK_THROWS_AS(width_brute_force(big, 1, 64), std::invalid_argument);
    }
}

TEST_CASE("oracle sandwich: brute-force lower below every upper route") {
    for (const auto& k : {NormKind::hilbert(), NormKind::l1(), NormKind::linf()}) {
        for (const std::uint64_t seed : {4u, 9u}) {
            const CompactSet f = realize(RandomBallSpec{3, 6, seed}, k);
            const BruteForceWidth bf = width_brute_force(f, 1, 96);
            const GreedyTrace t = run_weak_greedy(f, WeakGreedyParams{});
            CHECK(bf.lower <= t.sigma_at(1) + 1e-6);  // d_1 <= sigma_1
            if (k.is_hilbert()) CHECK(bf.lower <= width_upper_svd(f, 1) + 1e-6);
        }
    }
}

TEST_CASE("width_upper_random_subspace: coverage bound and determinism") {
    const CompactSet f = realize(DyadicBlocksSpec{1.0, 4}, NormKind::linf());
    const RandomWidthResult a = width_upper_random_subspace(f, 1, 4, 123);
    const RandomWidthResult b = width_upper_random_subspace(f, 1, 4, 123);
    REQUIRE(a.per_trial.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(a.per_trial[i] == b.per_trial[i]);
    // Coordinates through block n are covered exactly, so the bound cannot
    // exceed the first uncovered block value.
    CHECK(a.min_value <= 0.25 + 1e-12);
    CHECK(a.min_value >= 0.0);
    CHECK(a.subspace_dim == 4);
    CHECK_THROWS_AS(width_upper_random_subspace(f, 1, 0, 1), std::invalid_argument);
    const CompactSet g = realize(DiagonalSpec{{1.0, 0.5}}, NormKind::linf());
    CHECK_THROWS_AS(width_upper_random_subspace(g, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("assemble_widths merges routes consistently") {
    const CompactSet f = realize(DiagonalSpec{std::vector<double>{1.0, 0.5, 0.25, 0.125, 0.0625}},
                                 NormKind::hilbert());
    const GreedyTrace t = run_weak_greedy(f, WeakGreedyParams{});
    const WidthSequence w = assemble_widths(
        f, 4, {WidthMethod::Known, WidthMethod::Svd, WidthMethod::SigmaUpper}, &t);
    const auto x = std::get<DiagonalSpec>(f.spec).x;
    for (int n = 0; n <= 4; ++n) {
        REQUIRE(w.upper_at(n).has_value());
        // analytic and SVD routes agree on the diagonal family
        CHECK(*w.upper_at(n) == doctest::Approx(x[std::size_t(n)]).epsilon(1e-10));
        auto lo = w.lower_at(n);
        if (lo) CHECK(*lo <= *w.upper_at(n) + 1e-12);
    }
    // d_0 equals sigma_0 of a gamma = 1 trace
    CHECK(*w.upper_at(0) == doctest::Approx(t.sigmas[0]).epsilon(1e-12));

    const WidthSequence only_def = assemble_widths(f, 3, {});
    REQUIRE(only_def.upper_at(0).has_value());
    CHECK(*only_def.upper_at(0) == doctest::Approx(1.0));
}
