#include "latticeforge/construct.hpp"
#include "latticeforge/error_eval.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/io_util.hpp"
#include "latticeforge/points.hpp"
#include "latticeforge/vector_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lf;

struct MRange {
    int lo = 0;
    int hi = 0;
};

MRange parse_m_range(const std::string& s) {
    MRange r;
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, colon));
            r.hi = std::stoi(s.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--m", "expected m or lo:hi, got '" + s + "'");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("--m", "bad range '" + s + "'");
    return r;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "bad integer '" + tok + "'");
        }
    }
    if (out.empty())
        throw CLI::ValidationError(flag, "empty list");
    return out;
}

// least-squares slope of log(y) against log(x)
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double dn = static_cast<double>(n);
    return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int run_construct(int m, int d, const std::string& wdesc, const std::string& rdesc,
                  const std::string& method, double alpha, const std::string& eval_wdesc,
                  const std::string& out) {
    const WeightSequence gamma = WeightSequence::parse(wdesc);
    const ReductionIndices red = ReductionIndices::parse(rdesc);
    const LatticeConfig cfg(m, d);

    ConstructionResult result = method == "slow" ? construct_reduced_slow(cfg, red, gamma)
                                                 : construct_reduced_fast(cfg, red, gamma);
    VectorFile file = VectorFile::from_result(result, gamma.format(), red.format(),
                                              method == "slow" ? "reduced-slow" : "reduced-fast");
    if (alpha > 0.0) {
        const WeightSequence eval_gamma =
            eval_wdesc.empty() ? gamma : WeightSequence::parse(eval_wdesc);
        const ErrorReport rep = worst_case_error(result.vector, alpha, eval_gamma);
        file.wce = VectorFile::StoredError{alpha, eval_gamma.format(), rep.value};
    }
    file.save(out);
    std::printf("constructed m=%d d=%d dstar=%d method=%s op_count=%llu time=%.6fs -> %s\n",
                m, d, result.vector.d_star(), file.method.c_str(),
                static_cast<unsigned long long>(result.op_count),
                result.wall_time_seconds, out.c_str());
    return 0;
}

int run_wce(const std::string& vec_path, double alpha, const std::string& wdesc,
            bool oracle, std::int64_t oracle_cutoff) {
    const VectorFile file = VectorFile::load(vec_path);
    const GeneratingVector z = file.to_vector();
    const WeightSequence gamma =
        WeightSequence::parse(wdesc.empty() ? file.weights : wdesc);

    const ErrorReport rep = worst_case_error(z, alpha, gamma);
    std::printf("wce=%s method=%s tail_bound=%s\n", format_full(rep.value).c_str(),
                to_string(rep.method), format_full(rep.tail_bound).c_str());

    if (file.wce && file.wce->alpha == alpha && file.wce->weights == gamma.format()) {
        if (file.wce->value != rep.value)
            throw validation_error("stored error " + format_full(file.wce->value) +
                                   " does not reproduce recomputed " + format_full(rep.value));
        std::printf("stored value reproduced bit-for-bit\n");
    }
    if (oracle) {
        const ErrorReport bf = wce_dual_bruteforce(z, alpha, gamma, oracle_cutoff);
        const double diff = std::abs(bf.value - rep.value);
        std::printf("oracle=%s tail_bound=%s |diff|=%s %s\n", format_full(bf.value).c_str(),
                    format_full(bf.tail_bound).c_str(), format_full(diff).c_str(),
                    diff <= bf.tail_bound + 1e-12 ? "consistent" : "INCONSISTENT");
    }
    return 0;
}

int run_convergence(const std::string& mrange, int d, double alpha,
                    const std::string& wdesc, const std::string& rdesc, bool baseline,
                    const std::string& out) {
    const MRange mr = parse_m_range(mrange);
    const WeightSequence gamma = WeightSequence::parse(wdesc);
    const WeightSequence eval_gamma = gamma.powered(alpha);
    const ReductionIndices red = ReductionIndices::parse(rdesc);

    std::ostringstream csv;
    csv << "N,error_reduced,error_baseline,bound_theorem\n";
    std::vector<double> ns, reduced_errors, baseline_errors;
    for (int m = mr.lo; m <= mr.hi; ++m) {
        const LatticeConfig cfg(m, d);
        const ConstructionResult rr = construct_reduced_fast(cfg, red, gamma);
        const double er = worst_case_error(rr.vector, alpha, eval_gamma).value;
        double eb = 0.0;
        if (baseline) {
            const ConstructionResult rb = construct_baseline(cfg, gamma);
            eb = worst_case_error(rb.vector, alpha, eval_gamma).value;
        }
        const double tb = truncation_bound(cfg, red, eval_gamma, alpha) +
                          std::pow(t_gamma_bound(cfg, red, gamma), alpha);
        csv << cfg.n << "," << format_full(er) << ","
            << (baseline ? format_full(eb) : std::string()) << "," << format_full(tb)
            << "\n";
        ns.push_back(static_cast<double>(cfg.n));
        reduced_errors.push_back(er);
        if (baseline)
            baseline_errors.push_back(eb);
        std::string line = "m=" + std::to_string(m) + " N=" + std::to_string(cfg.n) +
                           " error_reduced=" + format_full(er);
        if (baseline)
            line += " error_baseline=" + format_full(eb);
        std::printf("%s\n", line.c_str());
    }
    if (ns.size() > 1) {
        csv << "# fitted_slope_reduced=" << format_full(loglog_slope(ns, reduced_errors))
            << "\n";
        if (baseline)
            csv << "# fitted_slope_baseline="
                << format_full(loglog_slope(ns, baseline_errors)) << "\n";
    }
    atomic_write(out, csv.str());
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int run_bench(const std::string& mlist, const std::string& dlist, const std::string& wdesc,
              const std::string& rdesc, int reps, const std::string& out) {
    const std::vector<int> ms = parse_int_list(mlist, "--m-list");
    const std::vector<int> ds = parse_int_list(dlist, "--d-list");
    const WeightSequence gamma = WeightSequence::parse(wdesc);
    const ReductionIndices red = ReductionIndices::parse(rdesc);
    if (reps < 1)
        throw validation_error("--reps must be >= 1");

    std::ostringstream csv;
    csv << "m,d,method,seconds,op_count\n";
    for (int m : ms) {
        for (int d : ds) {
            const LatticeConfig cfg(m, d);
            for (const bool is_baseline : {false, true}) {
                std::vector<double> times;
                std::uint64_t ops = 0;
                for (int r = 0; r < reps; ++r) {
                    const ConstructionResult res = is_baseline
                                                       ? construct_baseline(cfg, gamma)
                                                       : construct_reduced_fast(cfg, red, gamma);
                    times.push_back(res.wall_time_seconds);
                    ops = res.op_count;
                }
                const double sec = median(times);
                csv << m << "," << d << "," << (is_baseline ? "baseline" : "reduced") << ","
                    << format_full(sec) << "," << ops << "\n";
                std::printf("m=%d d=%d method=%s seconds=%.6f op_count=%llu\n", m, d,
                            is_baseline ? "baseline" : "reduced", sec,
                            static_cast<unsigned long long>(ops));
            }
        }
    }
    atomic_write(out, csv.str());
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int run_points(const std::string& vec_path, std::int64_t max_cells, const std::string& out) {
    const VectorFile file = VectorFile::load(vec_path);
    const GeneratingVector z = file.to_vector();
    const std::int64_t cells = z.points() * z.dimension();
    if (cells > max_cells)
        throw guard_error("point export needs " + std::to_string(cells) +
                          " cells, limit is " + std::to_string(max_cells) +
                          "; raise --max-cells explicitly to proceed");
    const LatticePointSet p = generate_points(z);
    std::ostringstream csv;
    write_points_csv(csv, p);
    atomic_write(out, csv.str());
    std::printf("wrote %lld points in %d dimensions -> %s\n",
                static_cast<long long>(z.points()), z.dimension(), out.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-1 lattice rules: reduced digit-by-digit construction, "
                 "worst-case errors, convergence and timing sweeps"};
    app.require_subcommand(1);

    // construct
    auto* c = app.add_subcommand("construct", "construct a generating vector");
    int c_m = 0, c_d = 0;
    std::string c_w, c_r = "zero", c_method = "fast", c_out = "vector.json", c_eval_w;
    double c_alpha = 0.0;
    c->add_option("--m", c_m, "log2 of the point count")->required();
    c->add_option("--d", c_d, "dimension")->required();
    c->add_option("--weights", c_w, "weight descriptor (poly:q | geo:c | explicit:path, optional ^p)")
        ->required();
    c->add_option("--reduction", c_r, "reduction descriptor (zero | log:p | explicit:path)");
    c->add_option("--method", c_method, "fast (default) or slow reference")
        ->check(CLI::IsMember({"fast", "slow"}));
    c->add_option("--alpha", c_alpha, "also evaluate and store the worst-case error")
        ->check(CLI::Range(1.0 + 1e-9, 64.0));
    c->add_option("--eval-weights", c_eval_w, "weights for the stored error (default: construction weights)");
    c->add_option("-o,--output", c_out, "output vector file (JSON)");

    // wce
    auto* e = app.add_subcommand("wce", "evaluate the worst-case error of a stored vector");
    std::string e_vec, e_w;
    double e_alpha = 2.0;
    bool e_oracle = false;
    std::int64_t e_cutoff = 2000;
    e->add_option("--vector", e_vec, "vector file")->required();
    e->add_option("--alpha", e_alpha, "smoothness parameter (> 1)")
        ->check(CLI::Range(1.0 + 1e-9, 64.0));
    e->add_option("--weights", e_w, "evaluation weights (default: the file's)");
    e->add_flag("--oracle", e_oracle, "cross-check against dual-lattice enumeration (d <= 3)");
    e->add_option("--oracle-cutoff", e_cutoff, "enumeration cutoff L");

    // convergence
    auto* v = app.add_subcommand("convergence", "error sweep over a range of m");
    std::string v_m, v_w, v_r = "zero", v_out = "convergence.csv";
    int v_d = 0;
    double v_alpha = 2.0;
    bool v_no_baseline = false;
    v->add_option("--m", v_m, "m or lo:hi range")->required();
    v->add_option("--d", v_d, "dimension")->required();
    v->add_option("--alpha", v_alpha, "smoothness parameter")->check(CLI::Range(1.0 + 1e-9, 64.0));
    v->add_option("--weights", v_w, "construction weights; evaluation uses their alpha-th power")
        ->required();
    v->add_option("--reduction", v_r, "reduction descriptor");
    v->add_flag("--no-baseline", v_no_baseline, "skip the non-reduced baseline");
    v->add_option("-o,--output", v_out, "output CSV");

    // bench
    auto* b = app.add_subcommand("bench", "construction timing sweep");
    std::string b_m, b_d, b_w = "geo:0.95", b_r = "zero", b_out = "bench.csv";
    int b_reps = 3;
    b->add_option("--m-list", b_m, "comma-separated m values")->required();
    b->add_option("--d-list", b_d, "comma-separated dimensions")->required();
    b->add_option("--weights", b_w, "weight descriptor");
    b->add_option("--reduction", b_r, "reduction descriptor");
    b->add_option("--reps", b_reps, "timing repetitions (median is reported)");
    b->add_option("-o,--output", b_out, "output CSV");

    // points
    auto* p = app.add_subcommand("points", "export the lattice point set as CSV");
    std::string p_vec, p_out = "points.csv";
    std::int64_t p_cells = 10'000'000;
    p->add_option("--vector", p_vec, "vector file")->required();
    p->add_option("--max-cells", p_cells, "export guard on N*d");
    p->add_option("-o,--output", p_out, "output CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c->parsed())
            return run_construct(c_m, c_d, c_w, c_r, c_method, c_alpha, c_eval_w, c_out);
        if (e->parsed())
            return run_wce(e_vec, e_alpha, e_w, e_oracle, e_cutoff);
        if (v->parsed())
            return run_convergence(v_m, v_d, v_alpha, v_w, v_r, !v_no_baseline, v_out);
        if (b->parsed())
            return run_bench(b_m, b_d, b_w, b_r, b_reps, b_out);
        if (p->parsed())
            return run_points(p_vec, p_cells, p_out);
    } catch (const CLI::ParseError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const guard_error& err) {
        std::cerr << "guard violation: " << err.what() << "\n";
        return 4;
    } catch (const validation_error& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
