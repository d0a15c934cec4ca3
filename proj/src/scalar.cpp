#include "haarperm/scalar.hpp"

#include "haarperm/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace haarperm {

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) raise(ErrorKind::InvalidArgument, "rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw;
    } catch (const std::exception&) {
        raise(ErrorKind::InvalidArgument, "not a rational: '" + text + "'");
    }
}

const Rational& Scalar::rat() const {
    if (!exact_) raise(ErrorKind::InvalidArgument, "exact value requested from a float scalar");
    return rat_;
}

int Scalar::sign() const {
    if (exact_) return rat_.sign();
    return flt_ < 0 ? -1 : (flt_ > 0 ? 1 : 0);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (r.exact_) r.rat_ = -r.rat_;
    r.flt_ = -r.flt_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ += o.rat_;
        flt_ = rat_.convert_to<double>();
    } else {
        exact_ = false;
        flt_ = to_double() + o.to_double();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ -= o.rat_;
        flt_ = rat_.convert_to<double>();
    } else {
        exact_ = false;
        flt_ = to_double() - o.to_double();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ *= o.rat_;
        flt_ = rat_.convert_to<double>();
    } else {
        exact_ = false;
        flt_ = to_double() * o.to_double();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) raise(ErrorKind::InvalidArgument, "scalar division by zero");
    if (exact_ && o.exact_) {
        rat_ /= o.rat_;
        flt_ = rat_.convert_to<double>();
    } else {
        exact_ = false;
        flt_ = to_double() / o.to_double();
    }
    return *this;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        if (a.rat_ < b.rat_) return -1;
        if (b.rat_ < a.rat_) return 1;
        return 0;
    }
    const double x = a.to_double();
    const double y = b.to_double();
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::pow(unsigned k) const {
    if (exact_) return Scalar(rational_pow(rat_, k));
    return Scalar::from_double(std::pow(flt_, double(k)));
}

std::string Scalar::str() const {
    if (exact_) return rational_to_string(rat_);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", flt_);
    return buf;
}

Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

bool approx_equal(const Scalar& a, const Scalar& b, double rel_tol) {
    if (a.is_exact() && b.is_exact()) return a.rat() == b.rat();
    const double x = a.to_double();
    const double y = b.to_double();
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) <= rel_tol * std::max(scale, 1e-300);
}

}  // namespace haarperm
