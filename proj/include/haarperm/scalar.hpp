#pragma once

#include "haarperm/rational.hpp"

#include <string>

namespace haarperm {

/// A numeric value that is exact whenever it can be. Integer Carleson
/// exponents keep the whole computation in Rational; non-integer exponents
/// fall into double, and any arithmetic that mixes the two stays double.
class Scalar {
  public:
    Scalar() : exact_(true), rat_(0), flt_(0.0) {}
    Scalar(int v) : exact_(true), rat_(v), flt_(double(v)) {}
    Scalar(long v) : exact_(true), rat_(v), flt_(double(v)) {}
    Scalar(const Rational& r)
        : exact_(true), rat_(r), flt_(r.convert_to<double>()) {}

    static Scalar from_double(double v) {
        Scalar s;
        s.exact_ = false;
        s.rat_ = 0;
        s.flt_ = v;
        return s;
    }

    bool is_exact() const noexcept { return exact_; }
    const Rational& rat() const;  // requires is_exact()
    double to_double() const noexcept { return flt_; }

    bool is_zero() const { return exact_ ? rat_.is_zero() : flt_ == 0.0; }
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Exact pairs compare exactly; any float operand compares as double.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return compare(a, b) == 0;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return compare(a, b) != 0;
    }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        return compare(a, b) < 0;
    }
    friend bool operator<=(const Scalar& a, const Scalar& b) {
        return compare(a, b) <= 0;
    }
    friend bool operator>(const Scalar& a, const Scalar& b) {
        return compare(a, b) > 0;
    }
    friend bool operator>=(const Scalar& a, const Scalar& b) {
        return compare(a, b) >= 0;
    }

    Scalar abs() const;
    Scalar pow(unsigned k) const;

    /// "num/den" when exact, shortest-round-trip decimal otherwise.
    std::string str() const;

    static int compare(const Scalar& a, const Scalar& b);

  private:
    bool exact_;
    Rational rat_;
    double flt_;
};

Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);

/// |a-b| <= rel_tol * max(|a|,|b|), used wherever a float path is compared.
bool approx_equal(const Scalar& a, const Scalar& b, double rel_tol = 1e-12);

}  // namespace haarperm
