#include "haarperm/exponent.hpp"

#include "haarperm/errors.hpp"

#include <cmath>

namespace haarperm {

CarlesonExponent CarlesonExponent::from_alpha(const Rational& alpha) {
    if (alpha < 1)
        raise(ErrorKind::InvalidArgument,
              "exponent alpha must be >= 1 (got " + rational_to_string(alpha) + ")");
    Rational p = Rational(2) / (alpha + 1);
    return CarlesonExponent(alpha, std::move(p), is_integer(alpha));
}

CarlesonExponent CarlesonExponent::from_p(const Rational& p) {
    if (p <= 0 || p > 1)
        raise(ErrorKind::InvalidArgument,
              "p must lie in (0, 1] (got " + rational_to_string(p) + ")");
    Rational alpha = Rational(2) / p - 1;
    return CarlesonExponent(std::move(alpha), p, is_integer(Rational(2) / p - 1));
}

Scalar CarlesonExponent::level_weight(int level) const {
    if (exact_) {
        const long e = level * alpha_.convert_to<long>();
        return Scalar(pow2(-e));
    }
    const double a = alpha_.convert_to<double>();
    return Scalar::from_double(std::exp2(-double(level) * a));
}

}  // namespace haarperm
