#include "latticeforge/construct.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/stable_sum.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace lf {

namespace {

// Shared inner sum of both quality-function implementations. For each level
// t = v..m-w_s it accumulates, over the window-restricted odd k,
//   prefix(k, t) * (1 + gamma_s * logsin(k x / 2^v)),
// scales by 2^{v-t} (exact) and adds up. Levels ascend, windows ascend, k
// ascends; with bit-identical prefix values the two implementations return
// bit-identical results.
template <typename PrefixFn>
double quality_h_sum(std::int64_t x, int v, int m, int w_s, double gamma_s,
                     const LogSinTable& table, PrefixFn&& prefix, std::uint64_t* ops) {
    StableSum outer;
    for (int t = v; t <= m - w_s; ++t) {
        StableSum inner;
        for (std::int64_t ell = 0; ell < (std::int64_t{1} << w_s); ++ell) {
            const std::int64_t lo = ell << t;
            const std::int64_t hi = (ell + 1) << t;
            for (std::int64_t k = lo + 1; k < hi; k += 2) {
                const double xfac = 1.0 + gamma_s * table[table.index(k * x, v)];
                inner.add(prefix(k, t) * xfac);
                if (ops)
                    ++*ops;
            }
        }
        outer.add(std::ldexp(inner.value(), v - t));
    }
    return outer.value();
}

void check_quality_args(std::int64_t x, int s, int v, int m, int w_s, int dstar) {
    if (x % 2 == 0 || x < 1)
        throw validation_error("quality function argument must be odd and positive");
    if (s < 1 || s > dstar)
        throw validation_error("quality function requires 1 <= s <= d*");
    if (v < 1 || v > m - w_s)
        throw validation_error("quality function requires 1 <= v <= m - w_s");
}

double quality_h_reference_impl(std::int64_t x, int s, int v,
                                std::span<const std::int64_t> z_prefix,
                                int m, const std::vector<int>& wv,
                                const std::vector<double>& gv,
                                const LogSinTable& table, std::uint64_t* ops) {
    const int w_s = wv[static_cast<std::size_t>(s - 1)];
    auto prefix = [&](std::int64_t k, int t) {
        double prod = 1.0;
        for (int j = 1; j < s; ++j) {
            // argument z_j k 2^{w_j - w_s} / 2^t
            const int tj = t + w_s - wv[static_cast<std::size_t>(j - 1)];
            prod *= 1.0 + gv[static_cast<std::size_t>(j - 1)] *
                              table[table.index(z_prefix[static_cast<std::size_t>(j - 1)] * k, tj)];
        }
        return prod;
    };
    return quality_h_sum(x, v, m, w_s, gv[static_cast<std::size_t>(s - 1)], table, prefix, ops);
}

double quality_h_fast_impl(std::int64_t x, int v, const UState& state, int m,
                           int w_s, double gamma_s, std::uint64_t* ops) {
    auto prefix = [&](std::int64_t k, int t) { return state.at(k << (m - w_s - t)); };
    return quality_h_sum(x, v, m, w_s, gamma_s, state.table(), prefix, ops);
}

std::vector<int> eval_w(const ReductionIndices& w, int d) {
    std::vector<int> wv(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j)
        wv[static_cast<std::size_t>(j - 1)] = w(j);
    return wv;
}

std::vector<double> eval_gamma(const WeightSequence& gamma, int d) {
    std::vector<double> gv(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j)
        gv[static_cast<std::size_t>(j - 1)] = gamma(j);
    return gv;
}

ConstructionResult run_construction(const LatticeConfig& cfg, const ReductionIndices& w,
                                    const WeightSequence& gamma, bool fast) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = cfg.m;
    const int dstar = w.d_star(m, cfg.d);
    const std::vector<int> wv = eval_w(w, cfg.d);
    const std::vector<double> gv = eval_gamma(gamma, cfg.d);
    const LogSinTable table(m);

    std::uint64_t ops = 0;
    std::vector<std::int64_t> zred(static_cast<std::size_t>(cfg.d), 1);
    std::vector<std::string> bits(static_cast<std::size_t>(cfg.d), "1");

    std::optional<UState> state;
    if (fast) {
        state.emplace(m, table);
        state->init_first(gv[0], &ops);
    }

    for (int s = 2; s <= dstar; ++s) {
        const int w_s = wv[static_cast<std::size_t>(s - 1)];
        const double g_s = gv[static_cast<std::size_t>(s - 1)];
        std::int64_t zs = 1;
        std::string chosen = "1";
        for (int v = 2; v <= m - w_s; ++v) {
            const std::int64_t cand1 = zs + (std::int64_t{1} << (v - 1));
            double h0, h1;
            if (fast) {
                h0 = quality_h_fast_impl(zs, v, *state, m, w_s, g_s, &ops);
                h1 = quality_h_fast_impl(cand1, v, *state, m, w_s, g_s, &ops);
            } else {
                std::span<const std::int64_t> prefix(zred.data(), static_cast<std::size_t>(s));
                h0 = quality_h_reference_impl(zs, s, v, prefix, m, wv, gv, table, &ops);
                h1 = quality_h_reference_impl(cand1, s, v, prefix, m, wv, gv, table, &ops);
            }
            const int bit = h1 < h0 ? 1 : 0; // ties resolve to 0
            if (bit)
                zs = cand1;
            chosen += bit ? '1' : '0';
            if (fast)
                state->apply_bit(v, w_s, zs, g_s, &ops);
        }
        zred[static_cast<std::size_t>(s - 1)] = zs;
        bits[static_cast<std::size_t>(s - 1)] = chosen;
        if (fast)
            state->mark_coordinate_done();
    }

    GeneratingVector vec(cfg, w, std::move(zred));
    const auto t1 = std::chrono::steady_clock::now();
    ConstructionResult result{std::move(vec), ops,
                              std::chrono::duration<double>(t1 - t0).count(),
                              std::move(bits)};
    return result;
}

} // namespace

UState::UState(int m, const LogSinTable& table) : table_(&table) {
    if (table.m() != m)
        throw std::logic_error("UState/table size mismatch");
    u_.assign(static_cast<std::size_t>(std::int64_t{1} << m), 1.0);
}

void UState::init_first(double gamma1, std::uint64_t* ops) {
    const std::int64_t n = std::int64_t{1} << m();
    for (std::int64_t p = 1; p < n; ++p) {
        u_[static_cast<std::size_t>(p)] = 1.0 + gamma1 * (*table_)[p];
        if (ops)
            ++*ops;
    }
    done_ = 1;
}

void UState::apply_bit(int v, int w_s, std::int64_t z_sv, double gamma_s,
                       std::uint64_t* ops) {
    const int m_ = m();
    if (v < 2 || v > m_ - w_s)
        throw std::logic_error("UState::apply_bit level out of range");
    const int shift = m_ - w_s - v;
    for (std::int64_t ell = 0; ell < (std::int64_t{1} << w_s); ++ell) {
        const std::int64_t lo = ell << v;
        const std::int64_t hi = (ell + 1) << v;
        for (std::int64_t k = lo + 1; k < hi; k += 2) {
            const double fac = 1.0 + gamma_s * (*table_)[table_->index(k * z_sv, v)];
            u_[static_cast<std::size_t>(k << shift)] *= fac;
            if (ops)
                ++*ops;
        }
    }
}

double quality_h_reference(std::int64_t x, int s, int v,
                           std::span<const std::int64_t> z_prefix,
                           const LatticeConfig& cfg, const ReductionIndices& w,
                           const WeightSequence& gamma) {
    if (s < 1 || s > cfg.d)
        throw validation_error("quality function requires 1 <= s <= d");
    const std::vector<int> wv = eval_w(w, s);
    const std::vector<double> gv = eval_gamma(gamma, s);
    check_quality_args(x, s, v, cfg.m, wv[static_cast<std::size_t>(s - 1)],
                       w.d_star(cfg.m, cfg.d));
    if (static_cast<int>(z_prefix.size()) < s - 1)
        throw validation_error("quality_h_reference needs s-1 prefix components");
    for (int j = 0; j < s - 1; ++j)
        if (z_prefix[static_cast<std::size_t>(j)] % 2 == 0)
            throw validation_error("prefix components must be odd");
    const LogSinTable table(cfg.m);
    return quality_h_reference_impl(x, s, v, z_prefix, cfg.m, wv, gv, table, nullptr);
}

double quality_h_fast(std::int64_t x, int s, int v, const UState& state,
                      const LatticeConfig& cfg, const ReductionIndices& w,
                      const WeightSequence& gamma) {
    if (s < 1 || s > cfg.d)
        throw validation_error("quality function requires 1 <= s <= d");
    const std::vector<int> wv = eval_w(w, s);
    check_quality_args(x, s, v, cfg.m, wv[static_cast<std::size_t>(s - 1)],
                       w.d_star(cfg.m, cfg.d));
    if (state.coordinates_done() != s - 1)
        throw std::logic_error("UState holds a different coordinate prefix");
    return quality_h_fast_impl(x, v, state, cfg.m, wv[static_cast<std::size_t>(s - 1)],
                               gamma(s), nullptr);
}

ConstructionResult construct_reduced_slow(const LatticeConfig& cfg,
                                          const ReductionIndices& w,
                                          const WeightSequence& gamma) {
    return run_construction(cfg, w, gamma, false);
}

ConstructionResult construct_reduced_fast(const LatticeConfig& cfg,
                                          const ReductionIndices& w,
                                          const WeightSequence& gamma) {
    return run_construction(cfg, w, gamma, true);
}

ConstructionResult construct_baseline(const LatticeConfig& cfg,
                                      const WeightSequence& gamma) {
    return construct_reduced_fast(cfg, ReductionIndices::zero(), gamma);
}

double ustate_recompute_deviation(const UState& state,
                                  std::span<const std::int64_t> z_prefix,
                                  const ReductionIndices& w,
                                  const WeightSequence& gamma) {
    const int s = state.coordinates_done();
    if (s < 1)
        return 0.0;
    if (static_cast<int>(z_prefix.size()) < s)
        throw validation_error("prefix shorter than finalized coordinate count");
    const int m = state.m();
    const std::int64_t n = std::int64_t{1} << m;
    const std::vector<int> wv = eval_w(w, s);
    const std::vector<double> gv = eval_gamma(gamma, s);
    const LogSinTable& table = state.table();

    const int w_s = wv[static_cast<std::size_t>(s - 1)];
    double worst = 0.0;
    for (std::int64_t p = 1; p < n; ++p) {
        // maintained region: valuation of p below m - w_s
        if (p % (std::int64_t{1} << (m - w_s)) == 0)
            continue;
        double expect = 1.0;
        for (int j = 1; j <= s; ++j) {
            const std::int64_t zf =
                (z_prefix[static_cast<std::size_t>(j - 1)]
                 << wv[static_cast<std::size_t>(j - 1)]) & (n - 1);
            expect *= 1.0 + gv[static_cast<std::size_t>(j - 1)] * table[(p * zf) & (n - 1)];
        }
        worst = std::max(worst, std::abs(state.at(p) - expect));
    }
    return worst;
}

} // namespace lf
