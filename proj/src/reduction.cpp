#include "latticeforge/reduction.hpp"
#include "latticeforge/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace lf {

namespace {

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// j^e with saturation; returns true in *overflow if the value exceeds 2^126.
unsigned __int128 pow_saturating(long long j, long long e, bool* overflow) {
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 126;
    unsigned __int128 r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > limit / static_cast<unsigned __int128>(j)) {
            *overflow = true;
            return limit;
        }
        r *= static_cast<unsigned __int128>(j);
    }
    *overflow = false;
    return r;
}

// Decides 2^{w*den} <= j^num exactly where representable; near-boundary calls
// always stay within __int128 for the j and p values this library deals with.
bool pow2_le_jpow(long long w, long long den, long long j, long long num) {
    bool ovl_l = false, ovl_r = false;
    const long long e = w * den;
    unsigned __int128 lhs = e >= 126 ? (ovl_l = true, static_cast<unsigned __int128>(1) << 126)
                                     : static_cast<unsigned __int128>(1) << e;
    unsigned __int128 rhs = pow_saturating(j, num, &ovl_r);
    if (ovl_r)
        return true; // j^num astronomically large
    if (ovl_l)
        return false;
    return lhs <= rhs;
}

// Recognize p as num/den with a small denominator (covers decimal inputs like
// 1.5 or 3.5 exactly); returns false for awkward values, which then fall back
// to a plain floating floor.
bool to_small_rational(double p, long long* num, long long* den) {
    for (long long d = 1; d <= 64; ++d) {
        const double scaled = p * static_cast<double>(d);
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) < 1e-9 && rounded == scaled &&
            std::abs(rounded) < 1e15) {
            *num = static_cast<long long>(rounded);
            *den = d;
            return true;
        }
    }
    return false;
}

} // namespace

ReductionIndices ReductionIndices::zero() {
    ReductionIndices r;
    r.kind_ = Kind::Zero;
    return r;
}

ReductionIndices ReductionIndices::logarithmic(double p) {
    if (!(p >= 0.0) || !std::isfinite(p))
        throw validation_error("logarithmic reduction parameter must be >= 0");
    ReductionIndices r;
    r.kind_ = Kind::Logarithmic;
    r.p_ = p;
    if (!to_small_rational(p, &r.p_num_, &r.p_den_))
        r.p_den_ = 0;
    return r;
}

ReductionIndices ReductionIndices::explicit_list(std::vector<int> w) {
    if (w.empty())
        throw validation_error("explicit reduction list is empty");
    if (w.front() != 0)
        throw validation_error("reduction indices must start with w_1 = 0");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0)
            throw validation_error("reduction indices must be non-negative");
        if (i > 0 && w[i] < w[i - 1])
            throw validation_error("reduction indices must be non-decreasing");
    }
    ReductionIndices r;
    r.kind_ = Kind::Explicit;
    r.values_ = std::move(w);
    return r;
}

ReductionIndices ReductionIndices::parse(const std::string& descriptor) {
    if (descriptor == "zero")
        return zero();
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw validation_error("reduction descriptor '" + descriptor +
                               "' must be zero, log:p or explicit:path");
    const std::string family = descriptor.substr(0, colon);
    const std::string arg = descriptor.substr(colon + 1);
    if (family == "log") {
        try {
            std::size_t pos = 0;
            double p = std::stod(arg, &pos);
            if (pos != arg.size())
                throw validation_error("trailing characters in reduction parameter '" + arg + "'");
            return logarithmic(p);
        } catch (const validation_error&) {
            throw;
        } catch (const std::exception&) {
            throw validation_error("cannot parse reduction parameter '" + arg + "'");
        }
    }
    if (family == "explicit") {
        std::ifstream in(arg);
        if (!in)
            throw validation_error("cannot open reduction file '" + arg + "'");
        std::vector<int> w;
        long long v;
        while (in >> v)
            w.push_back(static_cast<int>(v));
        if (!in.eof())
            throw validation_error("malformed number in reduction file '" + arg + "'");
        ReductionIndices r = explicit_list(std::move(w));
        r.source_path_ = arg;
        return r;
    }
    throw validation_error("unknown reduction family '" + family + "'");
}

std::string ReductionIndices::format() const {
    switch (kind_) {
    case Kind::Zero: return "zero";
    case Kind::Logarithmic: return "log:" + format_number(p_);
    case Kind::Explicit: return "explicit:" + source_path_;
    }
    return "zero";
}

int ReductionIndices::operator()(int j) const {
    if (j < 1)
        throw validation_error("reduction index must be >= 1");
    switch (kind_) {
    case Kind::Zero:
        return 0;
    case Kind::Explicit:
        if (j > static_cast<int>(values_.size()))
            throw validation_error("explicit reduction list has " +
                                   std::to_string(values_.size()) +
                                   " entries, index " + std::to_string(j) + " requested");
        return values_[static_cast<std::size_t>(j - 1)];
    case Kind::Logarithmic:
        break;
    }
    if (j == 1 || p_ == 0.0)
        return 0;
    // powers of two are exact with a rational p
    if ((j & (j - 1)) == 0 && p_den_ > 0) {
        int i = 0;
        for (int t = j; t > 1; t >>= 1)
            ++i;
        return static_cast<int>(static_cast<long long>(i) * p_num_ / p_den_);
    }
    int w = static_cast<int>(std::floor(p_ * std::log2(static_cast<double>(j))));
    if (w < 0)
        w = 0;
    if (p_den_ > 0) {
        // settle floating-point boundary doubt exactly: w = max{v : 2^v <= j^p}
        while (w > 0 && !pow2_le_jpow(w, p_den_, j, p_num_))
            --w;
        while (pow2_le_jpow(w + 1, p_den_, j, p_num_))
            ++w;
    }
    return w;
}

int ReductionIndices::d_star(int m, int d) const {
    if (m < 1)
        throw validation_error("d_star requires m >= 1");
    if (d < 1)
        throw validation_error("d_star requires d >= 1");
    int last = 1; // w_1 = 0 < m always
    for (int j = 1; j <= d; ++j) {
        if ((*this)(j) >= m)
            break;
        last = j;
    }
    return last;
}

} // namespace lf
