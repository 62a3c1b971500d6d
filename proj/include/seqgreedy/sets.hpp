// Generators for the compact families the greedy algorithm runs on: diagonal
// sets x_j e_j, dyadic-block diagonal sets, row families of lower-triangular
// matrices validated against the P1/P2 realizability properties, plus two
// synthetic generators (random ball points, parametric monomial snapshots)
// for exercising the driver on non-orthogonal data.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "seqgreedy/seqspace.hpp"
#include "seqgreedy/width_types.hpp"

namespace seqgreedy {

struct DiagonalSpec {
    std::vector<double> x;  // strictly positive, non-increasing
};

struct FromMatrixSpec {
    std::vector<std::vector<double>> a;  // lower triangular (row i has i+1 entries)
    std::vector<double> sigmas;          // non-increasing, with genuine decay
    double gamma = 1.0;                  // P1 validated against this value
};

struct DyadicBlocksSpec {
    double alpha = 1.0;  // > 1/2
    int levels = 1;      // blocks 0..levels realized; 2^levels elements
};

struct RandomBallSpec {
    int dim = 1;
    int count = 1;
    std::uint64_t seed = 0;
};

struct ParametricSurrogateSpec {
    int dim = 1;    // monomial degree count per snapshot
    int count = 1;  // mu-grid size
    double mu_min = 0.0;
    double mu_max = 1.0;
};

using CompactSetSpec = std::variant<DiagonalSpec, FromMatrixSpec, DyadicBlocksSpec,
                                    RandomBallSpec, ParametricSurrogateSpec>;

std::string spec_kind_label(const CompactSetSpec& spec);

struct CompactSet {
    std::vector<DenseVector> elements;
    NormKind norm_kind = NormKind::hilbert();
    CompactSetSpec spec;

    std::size_t size() const { return elements.size(); }
    std::size_t ambient_dim() const { return elements.empty() ? 0 : elements[0].dim(); }
};

// Realizes the spec as a finite family with all element norms <= 1 + 1e-12.
// FromMatrix additionally validates P1 (gamma sigma_n <= |a_nn| <= sigma_n)
// and P2 (sum_{j=n}^m a_mj^2 <= sigma_n^2) exactly as stated; violations throw.
CompactSet realize(const CompactSetSpec& spec, const NormKind& norm_kind);

// x_j values of the dyadic-blocks sequence: position 0 carries 1, positions
// 2^{k-1}..2^k-1 carry 2^{-k alpha}.
std::vector<double> dyadic_block_values(double alpha, int levels);

// Analytic width knowledge: diagonal-type sets admit d_n <= x_n in every l_p
// (coordinate subspace span{e_0..e_{n-1}}), exact at n = 0. Returns nullopt
// for set kinds without analytic bounds.
std::optional<WidthSequence> known_widths(const CompactSetSpec& spec, int n_max);

// Validates P1/P2 for a lower-triangular matrix against the given sigmas and
// gamma; returns an empty string on success, else a description.
std::string check_p1_p2(const std::vector<std::vector<double>>& a,
                        const std::vector<double>& sigmas, double gamma);

// Tight sigma sequence realized by a greedy run on the rows of a:
// sigma_n = max_{m >= n} sqrt(sum_{j=n}^m a_mj^2). Non-increasing by
// construction.
std::vector<double> tight_sigmas(const std::vector<std::vector<double>>& a);

// Random lower-triangular matrix with geometric diagonal decay whose tight
// sigmas satisfy P1 for the given gamma and whose rows have l1 norm <= 1
// (so the rows sit in the unit ball of every l_p).
FromMatrixSpec make_p1p2_matrix(int size, double gamma, std::uint64_t seed);

// CSV export: one row per element, columns = coordinates.
void write_elements_csv(const CompactSet& set, const std::string& path);

}  // namespace seqgreedy
