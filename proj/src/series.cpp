#include "haarperm/series.hpp"

#include "haarperm/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace haarperm {

const char* normalization_name(Normalization n) {
    switch (n) {
        case Normalization::LinfHaar: return "linf";
        case Normalization::Lambda: return "lambda";
        case Normalization::Hp: return "hp";
    }
    return "?";
}

CoefficientSeries::CoefficientSeries(int depth, Normalization normalization, Rational p)
    : depth_(depth), normalization_(normalization), p_(std::move(p)) {
    if (depth < 0 || depth > 24)
        raise(ErrorKind::InvalidArgument, "series depth out of range");
    if (p_ <= 0 || p_ > 1)
        raise(ErrorKind::InvalidArgument, "series p must lie in (0, 1]");
    if (normalization_ == Normalization::LinfHaar && p_ != 1)
        raise(ErrorKind::InvalidArgument, "LinfHaar series carry p = 1");
    coeffs_.assign(std::size_t(interval_count()) + 1, Scalar(0));
}

void CoefficientSeries::set(const DyadicInterval& interval, Scalar value) {
    if (interval.level() > depth_)
        raise(ErrorKind::DepthMismatch, "coefficient interval deeper than the series");
    coeffs_[interval.index()] = std::move(value);
}

const Scalar& CoefficientSeries::at(const DyadicInterval& interval) const {
    if (interval.level() > depth_)
        raise(ErrorKind::DepthMismatch, "coefficient interval deeper than the series");
    return coeffs_[interval.index()];
}

bool CoefficientSeries::is_zero() const {
    for (std::uint32_t i = 1; i <= interval_count(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

IntervalCollection CoefficientSeries::support() const {
    std::vector<DyadicInterval> out;
    for (std::uint32_t i = 1; i <= interval_count(); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(DyadicInterval::from_index(i));
    return IntervalCollection(depth_, std::move(out));
}

CoefficientSeries indicator_series(const IntervalCollection& collection,
                                   const CarlesonExponent& exponent) {
    const Normalization norm =
        exponent.is_bmo() ? Normalization::LinfHaar : Normalization::Lambda;
    CoefficientSeries out(collection.depth_bound(), norm, exponent.p());
    for (const auto& m : collection) out.set(m, Scalar(1));
    return out;
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return Scalar(rational_from_string(v.get<std::string>()));
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_number_float()) return Scalar::from_double(v.get<double>());
    raise(ErrorKind::InvalidArgument, where + ": coefficient must be a number or 'num/den'");
}

nlohmann::json scalar_to_json(const Scalar& s) {
    if (!s.is_exact()) return s.to_double();
    const Rational& r = s.rat();
    if (is_integer(r) && numerator(r) >= -(1 << 30) && numerator(r) <= (1 << 30))
        return numerator(r).convert_to<long>();
    return rational_to_string(r);
}

Rational p_from_json(const nlohmann::json& v) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    raise(ErrorKind::InvalidArgument, "'p' must be an integer or a 'num/den' string");
}

}  // namespace

CoefficientSeries series_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument, std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("depth") || !j.contains("normalization") ||
        !j.contains("coeffs"))
        raise(ErrorKind::InvalidArgument,
              "coefficient file needs 'depth', 'normalization' and 'coeffs'");
    const int depth = j["depth"].get<int>();
    const std::string tag = j["normalization"].get<std::string>();
    Normalization norm;
    if (tag == "linf") norm = Normalization::LinfHaar;
    else if (tag == "lambda") norm = Normalization::Lambda;
    else if (tag == "hp") norm = Normalization::Hp;
    else raise(ErrorKind::InvalidArgument, "unknown normalization '" + tag + "'");

    Rational p(1);
    if (norm != Normalization::LinfHaar) {
        if (!j.contains("p"))
            raise(ErrorKind::InvalidArgument, "'p' is required for lambda/hp series");
        p = p_from_json(j["p"]);
    }
    CoefficientSeries out(depth, norm, p);
    for (const auto& [key, value] : j["coeffs"].items()) {
        const DyadicInterval interval = DyadicInterval::from_address(key);
        if (interval.level() > depth)
            raise(ErrorKind::InvalidArgument,
                  "coefficient key '" + key + "' deeper than the declared depth");
        out.set(interval, scalar_from_json(value, "'" + key + "'"));
    }
    return out;
}

CoefficientSeries load_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return series_from_json_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

std::string series_to_json_text(const CoefficientSeries& series) {
    nlohmann::json coeffs = nlohmann::json::object();
    const TruncatedTree tree(series.depth());
    for (const auto& interval : tree.intervals()) {
        const Scalar& c = series.at(interval);
        if (!c.is_zero()) coeffs[interval.token()] = scalar_to_json(c);
    }
    nlohmann::json j;
    j["depth"] = series.depth();
    j["normalization"] = normalization_name(series.normalization());
    if (series.normalization() != Normalization::LinfHaar)
        j["p"] = rational_to_string(series.p());
    j["coeffs"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

void save_series(const CoefficientSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << series_to_json_text(series);
}

}  // namespace haarperm
