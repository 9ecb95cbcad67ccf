#include "latticeforge/weights.hpp"
#include "latticeforge/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lf {

namespace {

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        double v = std::stod(token, &pos);
        if (pos != token.size())
            throw validation_error("trailing characters in " + context + ": '" + token + "'");
        return v;
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("cannot parse " + context + ": '" + token + "'");
    }
}

std::vector<double> load_values(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open weight file '" + path + "'");
    std::vector<double> values;
    double v;
    while (in >> v)
        values.push_back(v);
    if (!in.eof())
        throw validation_error("malformed number in weight file '" + path + "'");
    if (values.empty())
        throw validation_error("weight file '" + path + "' is empty");
    return values;
}

} // namespace

WeightSequence WeightSequence::polynomial(double q, double power) {
    if (!(q > 0.0))
        throw validation_error("polynomial weight exponent must be positive");
    WeightSequence w;
    w.kind_ = Kind::Polynomial;
    w.param_ = q;
    w.power_ = power;
    return w;
}

WeightSequence WeightSequence::geometric(double c, double power) {
    if (!(c > 0.0 && c < 1.0))
        throw validation_error("geometric weight base must lie in (0,1)");
    WeightSequence w;
    w.kind_ = Kind::Geometric;
    w.param_ = c;
    w.power_ = power;
    return w;
}

WeightSequence WeightSequence::explicit_list(std::vector<double> values, double power) {
    if (values.empty())
        throw validation_error("explicit weight list is empty");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw validation_error("explicit weights must be positive and finite");
    WeightSequence w;
    w.kind_ = Kind::Explicit;
    w.values_ = std::move(values);
    w.power_ = power;
    return w;
}

WeightSequence WeightSequence::parse(const std::string& descriptor) {
    std::string body = descriptor;
    double power = 1.0;
    if (auto caret = body.rfind('^'); caret != std::string::npos) {
        power = parse_number(body.substr(caret + 1), "weight power suffix");
        body = body.substr(0, caret);
    }
    auto colon = body.find(':');
    if (colon == std::string::npos)
        throw validation_error("weight descriptor '" + descriptor +
                               "' must look like poly:q, geo:c or explicit:path");
    const std::string family = body.substr(0, colon);
    const std::string arg = body.substr(colon + 1);
    if (family == "poly")
        return polynomial(parse_number(arg, "poly weight parameter"), power);
    if (family == "geo")
        return geometric(parse_number(arg, "geo weight parameter"), power);
    if (family == "explicit") {
        WeightSequence w = explicit_list(load_values(arg), power);
        w.source_path_ = arg;
        return w;
    }
    throw validation_error("unknown weight family '" + family + "'");
}

std::string WeightSequence::format() const {
    std::string s;
    switch (kind_) {
    case Kind::Polynomial: s = "poly:" + format_number(param_); break;
    case Kind::Geometric: s = "geo:" + format_number(param_); break;
    case Kind::Explicit: s = "explicit:" + source_path_; break;
    }
    if (power_ != 1.0)
        s += "^" + format_number(power_);
    return s;
}

double WeightSequence::operator()(int j) const {
    if (j < 1)
        throw validation_error("weight index must be >= 1");
    double base;
    switch (kind_) {
    case Kind::Polynomial:
        base = std::pow(static_cast<double>(j), -param_);
        break;
    case Kind::Geometric:
        base = std::pow(param_, static_cast<double>(j));
        break;
    case Kind::Explicit:
        if (j > static_cast<int>(values_.size()))
            throw validation_error("explicit weight list has " +
                                   std::to_string(values_.size()) +
                                   " entries, index " + std::to_string(j) + " requested");
        base = values_[static_cast<std::size_t>(j - 1)];
        break;
    default:
        base = 1.0;
    }
    return power_ == 1.0 ? base : std::pow(base, power_);
}

WeightSequence WeightSequence::powered(double extra) const {
    WeightSequence w = *this;
    w.power_ = power_ * extra;
    return w;
}

} // namespace lf
