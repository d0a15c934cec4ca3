#pragma once

#include "haarperm/interval.hpp"
#include "haarperm/rational.hpp"
#include "haarperm/scalar.hpp"

#include <string>

namespace haarperm {

/// The weight exponent alpha = 2(1/p - 1/2) = 2/p - 1 shared by the
/// Carleson p-constant and the Lipschitz-space norm. alpha = 1 (p = 1) is
/// the ordinary Carleson / BMO case. Integer alpha keeps every weight
/// 2^(-level * alpha) an exact dyadic rational; otherwise weights are
/// computed in double precision.
class CarlesonExponent {
  public:
    static CarlesonExponent from_alpha(const Rational& alpha);
    static CarlesonExponent from_p(const Rational& p);
    static CarlesonExponent bmo() { return from_alpha(Rational(1)); }

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& p() const noexcept { return p_; }
    bool exact() const noexcept { return exact_; }
    bool is_bmo() const noexcept { return alpha_ == 1; }

    /// |I|^alpha for an interval at the given level.
    Scalar level_weight(int level) const;
    Scalar measure_weight(const DyadicInterval& interval) const {
        return level_weight(interval.level());
    }

    friend bool operator==(const CarlesonExponent&, const CarlesonExponent&) = default;

    std::string str() const { return rational_to_string(alpha_); }

  private:
    CarlesonExponent(Rational alpha, Rational p, bool exact)
        : alpha_(std::move(alpha)), p_(std::move(p)), exact_(exact) {}

    Rational alpha_;
    Rational p_;
    bool exact_;
};

}  // namespace haarperm
