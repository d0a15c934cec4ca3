#include "haarperm/haar_ops.hpp"

#include "haarperm/errors.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace haarperm {

namespace {

// LinfHaar matches alpha = 1; Lambda(p) matches alpha = 2/p - 1. A Lambda
// series with p = 1 is the same normalization as LinfHaar and is accepted
// for alpha = 1. Hp series have no rooted-max norm here.
void require_norm_compatible(const CoefficientSeries& series,
                             const CarlesonExponent& exponent) {
    switch (series.normalization()) {
        case Normalization::LinfHaar:
            if (!exponent.is_bmo())
                raise(ErrorKind::NormalizationMismatch,
                      "LinfHaar series carries the BMO norm (alpha = 1), got alpha = " +
                          exponent.str());
            return;
        case Normalization::Lambda:
            if (series.p() != exponent.p())
                raise(ErrorKind::NormalizationMismatch,
                      "Lambda series has p = " + rational_to_string(series.p()) +
                          ", exponent wants p = " + rational_to_string(exponent.p()));
            return;
        case Normalization::Hp:
            raise(ErrorKind::NormalizationMismatch,
                  "Hp series have no weighted rooted-max norm; use hp_norm");
    }
}

void require_depth_match(const CoefficientSeries& series, const PermutationMap& map) {
    if (series.depth() != map.depth())
        raise(ErrorKind::DepthMismatch,
              "series depth " + std::to_string(series.depth()) + " != permutation depth " +
                  std::to_string(map.depth()));
}

}  // namespace

NormResult weighted_norm_sq_with_witness(const CoefficientSeries& series,
                                         const CarlesonExponent& exponent) {
    require_norm_compatible(series, exponent);
    const std::uint32_t count = series.interval_count();
    // Subtree sums of x_J^2 |J|^alpha over the whole truncated tree.
    std::vector<Scalar> t(std::size_t(count) + 1, Scalar(0));
    std::vector<Scalar> level_weight(std::size_t(series.depth()) + 1, Scalar(0));
    for (int l = 0; l <= series.depth(); ++l) level_weight[l] = exponent.level_weight(l);
    for (std::uint32_t i = count; i >= 1; --i) {
        const Scalar& c = series.at_index(i);
        Scalar acc = c.is_zero() ? Scalar(0)
                                 : c * c * level_weight[std::bit_width(i) - 1];
        if (2 * i + 1 <= count) acc += t[2 * i] + t[2 * i + 1];
        t[i] = std::move(acc);
    }
    Scalar best(0);
    DyadicInterval witness = DyadicInterval::root();
    for (const auto& interval : TruncatedTree(series.depth()).intervals()) {
        const Scalar value = t[interval.index()] / level_weight[interval.level()];
        if (value > best) {
            best = value;
            witness = interval;
        }
    }
    return {best, witness};
}

Scalar weighted_norm_sq(const CoefficientSeries& series, const CarlesonExponent& exponent) {
    return weighted_norm_sq_with_witness(series, exponent).value;
}

Scalar bmo_over_collection(const CoefficientSeries& series,
                           const IntervalCollection& collection) {
    if (collection.empty())
        raise(ErrorKind::EmptyCollection, "BMO expression over the empty collection");
    if (series.normalization() == Normalization::Hp ||
        (series.normalization() == Normalization::Lambda && series.p() != 1))
        raise(ErrorKind::NormalizationMismatch,
              "collection BMO expression needs L-infinity-normalized coefficients");
    if (collection.depth_bound() != series.depth())
        raise(ErrorKind::DepthMismatch, "collection depth bound != series depth");
    Scalar sum(0);
    for (const auto& member : collection) {
        const Scalar& c = series.at(member);
        if (!c.is_zero()) sum += c * c * Scalar(member.measure());
    }
    return sum / Scalar(covered_measure(collection));
}

CoefficientSeries permute_coefficients(const CoefficientSeries& series,
                                       const PermutationMap& map) {
    require_depth_match(series, map);
    CoefficientSeries out(series.depth(), series.normalization(), series.p());
    for (std::uint32_t i = 1; i <= series.interval_count(); ++i) {
        const Scalar& c = series.at_index(map.apply_inverse_index(i));
        if (!c.is_zero()) out.set(DyadicInterval::from_index(i), c);
    }
    return out;
}

CoefficientSeries adjoint_permute(const CoefficientSeries& series,
                                  const PermutationMap& map) {
    require_depth_match(series, map);
    if (series.normalization() != Normalization::Hp)
        raise(ErrorKind::NormalizationMismatch,
              "the transposed operator acts on Hp-normalized series");
    CoefficientSeries out(series.depth(), series.normalization(), series.p());
    for (std::uint32_t i = 1; i <= series.interval_count(); ++i) {
        const Scalar& c = series.at_index(map.apply_index(i));
        if (!c.is_zero()) out.set(DyadicInterval::from_index(i), c);
    }
    return out;
}

Scalar pairing(const CoefficientSeries& lambda_series, const CoefficientSeries& hp_series) {
    if (lambda_series.normalization() != Normalization::Lambda ||
        hp_series.normalization() != Normalization::Hp)
        raise(ErrorKind::NormalizationMismatch,
              "pairing takes a Lambda(p) series against an Hp(p) series");
    if (lambda_series.p() != hp_series.p())
        raise(ErrorKind::NormalizationMismatch,
              "pairing requires matching p (" + rational_to_string(lambda_series.p()) +
                  " vs " + rational_to_string(hp_series.p()) + ")");
    if (lambda_series.depth() != hp_series.depth())
        raise(ErrorKind::DepthMismatch, "pairing requires equal depths");
    Scalar sum(0);
    for (std::uint32_t i = 1; i <= lambda_series.interval_count(); ++i) {
        const Scalar& a = lambda_series.at_index(i);
        const Scalar& c = hp_series.at_index(i);
        if (!a.is_zero() && !c.is_zero()) sum += a * c;
    }
    return sum;
}

double hp_norm(const CoefficientSeries& series, const Rational& p) {
    if (series.normalization() != Normalization::Hp)
        raise(ErrorKind::NormalizationMismatch, "hp_norm takes an Hp-normalized series");
    if (series.p() != p)
        raise(ErrorKind::NormalizationMismatch,
              "series has p = " + rational_to_string(series.p()) + ", asked for p = " +
                  rational_to_string(p));
    const double pd = p.convert_to<double>();
    const int depth = series.depth();
    const std::uint32_t cells = std::uint32_t(1) << (depth + 1);
    // The square function is sum_{I covering the cell} c_I^2 |I|^(-2/p);
    // h_I^2 is the indicator of I, so it is constant on each grid cell.
    double integral = 0.0;
    for (std::uint32_t cell = 0; cell < cells; ++cell) {
        double sq = 0.0;
        std::uint32_t node = cells + cell;  // level depth+1; coefficients sit above
        for (int lvl = depth + 1; lvl >= 0; --lvl, node >>= 1) {
            if (lvl > depth) continue;
            const Scalar& c = series.at_index(node);
            if (!c.is_zero()) {
                const double cd = c.to_double();
                sq += cd * cd * std::exp2(2.0 * double(lvl) / pd);
            }
        }
        integral += std::pow(sq, pd / 2.0);
    }
    integral *= std::exp2(-double(depth + 1));
    return std::pow(integral, 1.0 / pd);
}

}  // namespace haarperm
