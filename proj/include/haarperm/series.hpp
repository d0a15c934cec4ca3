#pragma once

#include "haarperm/collection.hpp"
#include "haarperm/exponent.hpp"
#include "haarperm/interval.hpp"
#include "haarperm/scalar.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace haarperm {

/// Which family of normalized Haar functions the coefficients multiply:
///   LinfHaar  x_I h_I                      (BMO computations)
///   Lambda    a_I h_I / |I|^(1 - 1/p)      (Lipschitz-space computations)
///   Hp        c_I h_I / |I|^(1/p)          (Hardy-space computations)
/// The permutation operators act identically on coefficients in all three;
/// the tag decides which norms are meaningful.
enum class Normalization { LinfHaar, Lambda, Hp };

const char* normalization_name(Normalization n);

/// A finite Haar coefficient series on the depth-n tree. Coefficients are
/// stored densely by heap index; absent means zero. Immutable use intended:
/// build once, then query.
class CoefficientSeries {
  public:
    CoefficientSeries(int depth, Normalization normalization,
                      Rational p = Rational(1));

    static CoefficientSeries zero(int depth, Normalization normalization,
                                  Rational p = Rational(1)) {
        return CoefficientSeries(depth, normalization, std::move(p));
    }

    int depth() const noexcept { return depth_; }
    Normalization normalization() const noexcept { return normalization_; }
    const Rational& p() const noexcept { return p_; }

    void set(const DyadicInterval& interval, Scalar value);
    const Scalar& at(const DyadicInterval& interval) const;
    const Scalar& at_index(std::uint32_t idx) const { return coeffs_[idx]; }

    std::uint32_t interval_count() const noexcept {
        return (std::uint32_t(1) << (depth_ + 1)) - 1;
    }
    bool is_zero() const;
    /// Intervals with nonzero coefficient, in lexicographic order.
    IntervalCollection support() const;

    bool depth_matches(int other_depth) const noexcept { return depth_ == other_depth; }

    friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

  private:
    int depth_;
    Normalization normalization_;
    Rational p_;
    std::vector<Scalar> coeffs_;  // heap-index addressed, slot 0 unused
};

/// Coefficient 1 on the members of B, zero elsewhere; LinfHaar when
/// alpha = 1 and Lambda(p(alpha)) otherwise. These are the test functions
/// whose squared norm reproduces the Carleson constant.
CoefficientSeries indicator_series(const IntervalCollection& collection,
                                   const CarlesonExponent& exponent);

/// File form: {"depth": n, "normalization": "linf"|"lambda"|"hp",
/// "p": "<rational>", "coeffs": {"<address>": <number | "num/den">}}.
/// "p" is required for lambda/hp. Integer JSON numbers and "num/den"
/// strings parse exactly; other JSON numbers become double coefficients.
CoefficientSeries load_series(const std::filesystem::path& path);
CoefficientSeries series_from_json_text(const std::string& text);
std::string series_to_json_text(const CoefficientSeries& series);
void save_series(const CoefficientSeries& series, const std::filesystem::path& path);

}  // namespace haarperm
