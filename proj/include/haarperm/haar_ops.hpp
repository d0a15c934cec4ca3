#pragma once

#include "haarperm/collection.hpp"
#include "haarperm/exponent.hpp"
#include "haarperm/permutation.hpp"
#include "haarperm/scalar.hpp"
#include "haarperm/series.hpp"

namespace haarperm {

struct NormResult {
    Scalar value;
    DyadicInterval witness;  // lexicographically smallest maximizing interval
};

/// Squared norm of the series under the alpha-weighted rooted maximum:
///   max over every interval I of level <= depth of
///   (1/|I|^alpha) sum_{J subseteq I} x_J^2 |J|^alpha.
/// For alpha = 1 on LinfHaar coefficients this is the squared dyadic-BMO
/// norm; for alpha = 2/p - 1 on Lambda(p) coefficients it is the squared
/// Lipschitz norm. The zero series has norm 0.
Scalar weighted_norm_sq(const CoefficientSeries& series, const CarlesonExponent& exponent);
NormResult weighted_norm_sq_with_witness(const CoefficientSeries& series,
                                         const CarlesonExponent& exponent);

/// The collection-indexed BMO expression (1/|B*|) sum_{I in B} x_I^2 |I|.
/// Maximizing this over every nonempty B reproduces weighted_norm_sq at
/// alpha = 1. Throws EmptyCollection.
Scalar bmo_over_collection(const CoefficientSeries& series,
                           const IntervalCollection& collection);

/// Coefficient action of the induced operator: y_I = x_{pi^-1(I)}. The same
/// map realizes both the L-infinity-normalized and the Lambda-normalized
/// operator; only the norm read off the result differs.
CoefficientSeries permute_coefficients(const CoefficientSeries& series,
                                       const PermutationMap& map);

/// Coefficient action of the transposed operator on Hp series:
/// d_I = c_{pi(I)}.
CoefficientSeries adjoint_permute(const CoefficientSeries& series,
                                  const PermutationMap& map);

/// sum_I a_I c_I for a Lambda(p) series against an Hp(p) series of the same
/// depth and p. The normalized Haar families are biorthogonal with unit
/// pairing, so this is the duality bracket in coordinates.
Scalar pairing(const CoefficientSeries& lambda_series, const CoefficientSeries& hp_series);

/// Dyadic H^p norm of an Hp(p) series via the square function, integrated
/// exactly on the uniform grid of 2^(depth+1) cells where every h_I^2 is
/// constant. Returns the norm itself (not its square); float-valued since
/// p-th powers and square roots leave the rationals.
double hp_norm(const CoefficientSeries& series, const Rational& p);

}  // namespace haarperm
