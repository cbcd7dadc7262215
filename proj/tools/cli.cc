// Copyright 2026 The schurtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schurtrace/exact_dist.h"
#include "schurtrace/lower_bounds.h"
#include "schurtrace/power_trace.h"
#include "schurtrace/sampling.h"
#include "schurtrace/spectrum_estimation.h"

namespace schurtrace {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

double parse_double(const std::string &s, const char *what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw std::invalid_argument(std::string(what) + ": '" + s + "' is not a number");
    }
    return v;
}

std::vector<double> parse_eps_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &part : split(text, ',')) {
        double e = parse_double(part, "--eps-list");
        if (!(e > 0 && e < 1)) {
            throw std::invalid_argument("--eps-list: every entry must lie in (0,1), got " + part);
        }
        out.push_back(e);
    }
    if (out.empty()) {
        throw std::invalid_argument("--eps-list must not be empty");
    }
    return out;
}

Json shape_json(const Partition &lambda) {
    return Json(lambda.rows());
}

std::string shape_bar(const Partition &lambda) {
    std::string s;
    for (int row : lambda.rows()) {
        if (!s.empty()) {
            s += '|';
        }
        s += std::to_string(row);
    }
    return s;
}

struct SpectrumArgs {
    std::string alpha;
    int uniform = 0;
    int dim = 0;
    std::string zipf;

    void attach(CLI::App *app) {
        app->add_option("--alpha", alpha, "explicit non-increasing spectrum, e.g. 1/2,3/10,1/5 or 0.7,0.2,0.1");
        app->add_option("--uniform", uniform, "maximally mixed state of rank r");
        app->add_option("--dim", dim, "pad --uniform with zeros up to this dimension");
        app->add_option("--zipf", zipf, "d,s: alpha_j proportional to j^-s, j = 1..d");
    }

    int given() const {
        return (alpha.empty() ? 0 : 1) + (uniform > 0 ? 1 : 0) + (zipf.empty() ? 0 : 1);
    }

    ExactSpectrum exact() const {
        if (given() != 1 || !zipf.empty()) {
            throw std::invalid_argument("exact tables need exactly one of --alpha or --uniform");
        }
        if (uniform > 0) {
            return ExactSpectrum::uniform(uniform, dim > 0 ? dim : uniform);
        }
        std::vector<Rational> values;
        for (const auto &part : split(alpha, ',')) {
            values.push_back(parse_rational(part));
        }
        return ExactSpectrum(std::move(values));
    }

    Spectrum resolve() const {
        if (given() != 1) {
            throw std::invalid_argument("give exactly one of --alpha, --uniform, --zipf");
        }
        if (!zipf.empty()) {
            auto parts = split(zipf, ',');
            if (parts.size() != 2) {
                throw std::invalid_argument("--zipf expects d,s");
            }
            return Spectrum::zipf(static_cast<int>(parse_double(parts[0], "--zipf d")), parse_double(parts[1], "--zipf s"));
        }
        if (uniform > 0) {
            return Spectrum::uniform(uniform, dim > 0 ? dim : uniform);
        }
        return exact().to_double();
    }
};

struct Output {
    std::string path;
    std::string format = "json";

    void attach(CLI::App *app, const std::string &default_format) {
        format = default_format;
        app->add_option("--out", path, "write here instead of stdout");
        app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    }

    // Runs body with the chosen stream.
    template <typename F>
    void with(std::ostream &out, F body) const {
        if (path.empty()) {
            body(out);
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open '" + path + "' for writing");
        }
        body(file);
        file.flush();
        if (!file) {
            throw std::runtime_error("write to '" + path + "' failed");
        }
    }
};

void write_json(std::ostream &os, const Json &j) {
    os << j.dump(2) << '\n';
}

void write_table(std::ostream &os, const ExactDistribution &dist, const std::string &format) {
    if (format == "csv") {
        os << "shape,p\n";
        for (const auto &[lambda, p] : dist.entries()) {
            os << shape_bar(lambda) << ',' << to_pq_string(p) << '\n';
        }
        return;
    }
    Json j;
    j["n"] = dist.n();
    j["entries"] = Json::array();
    for (const auto &[lambda, p] : dist.entries()) {
        j["entries"].push_back(Json{{"shape", shape_json(lambda)}, {"p", to_pq_string(p)}});
    }
    write_json(os, j);
}

SwMethod parse_method(const std::string &m) {
    if (m == "auto") {
        return SwMethod::Auto;
    }
    if (m == "rsk") {
        return SwMethod::Rsk;
    }
    return SwMethod::ChamberRejection;
}

Json report_json(const EstimateReport &r, double truth) {
    Json j;
    j["algorithm"] = std::string(algorithm_name(r.algorithm));
    j["q"] = r.q;
    j["eps"] = r.epsilon;
    j["c"] = r.c;
    j["estimate"] = r.estimate;
    j["truth"] = truth;
    j["abs_err"] = std::abs(r.estimate - truth);
    if (r.algorithm != PowerTraceAlgorithm::PlugIn) {
        j["eps_prime"] = r.eps_prime;
        j["eps_prime_clamped"] = r.eps_prime_clamped;
        // ceil(1/eps') before the cap at d; null if it does not fit an integer.
        const double inverse = 1 / r.eps_prime;
        j["m_uncapped"] = inverse < 9.0e15 ? Json(ceil_snapped(inverse)) : Json(nullptr);
        j["m"] = r.m;
        j["delta_prime"] = r.delta_prime;
    }
    j["n"] = r.n_per_batch;
    j["k"] = r.k_batches;
    j["total_samples"] = r.total_samples;
    j["seed"] = r.seed;
    j["stream_id"] = r.stream_id;
    return j;
}

// Runs count independent jobs on `threads` workers and hands their results to
// sink in index order as soon as the prefix is complete.
template <typename Job, typename Sink>
void ordered_parallel(int count, int threads, Job job, Sink sink) {
    threads = std::clamp(threads, 1, std::max(count, 1));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) {
            sink(job(i));
        }
        return;
    }
    using Result = decltype(job(0));
    std::vector<std::optional<Result>> slots(static_cast<std::size_t>(count));
    std::mutex mu;
    std::condition_variable ready;
    int next_job = 0;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next_job >= count || failure) {
                        return;
                    }
                    i = next_job++;
                }
                try {
                    Result r = job(i);
                    std::lock_guard<std::mutex> lock(mu);
                    slots[static_cast<std::size_t>(i)] = std::move(r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    failure = std::current_exception();
                }
                ready.notify_all();
            }
        });
    }
    for (int i = 0; i < count; ++i) {
        std::unique_lock<std::mutex> lock(mu);
        ready.wait(lock, [&] { return slots[static_cast<std::size_t>(i)].has_value() || failure; });
        if (failure) {
            break;
        }
        Result r = std::move(*slots[static_cast<std::size_t>(i)]);
        lock.unlock();
        sink(std::move(r));
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Weak-Schur-sampling estimators for tr(rho^q), with an exact oracle and lower-bound instances",
                 "schurtrace"};
    app.require_subcommand(1);
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    app.add_option("--seed", seed, "64-bit seed (default " + std::to_string(kDefaultSeed) + ")");
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    std::function<void()> action;

    // exact
    auto *exact = app.add_subcommand("exact", "exact probability tables")->require_subcommand(1);
    exact->fallthrough();
    int n = 0;
    int d = 0;
    SpectrumArgs spec;
    Output sink;
    {
        auto *sw = exact->add_subcommand("sw", "SW^n(alpha) as p/q rationals");
        sw->add_option("--n", n, "number of boxes")->required();
        spec.attach(sw);
        sink.attach(sw, "json");
        sw->callback([&] {
            action = [&] {
                auto dist = sw_exact(spec.exact(), n);
                sink.with(out, [&](std::ostream &os) { write_table(os, dist, sink.format); });
            };
        });
        auto *pl = exact->add_subcommand("planch", "Planch(n) as p/q rationals");
        pl->add_option("--n", n, "number of boxes")->required();
        sink.attach(pl, "json");
        pl->callback([&] {
            action = [&] {
                auto dist = planch_exact(n);
                sink.with(out, [&](std::ostream &os) { write_table(os, dist, sink.format); });
            };
        });
    }
    std::string tv_format = "text";
    {
        auto *tv = exact->add_subcommand("tv", "||SW^n_d - Planch(n)||_1 as p/q (L1, i.e. twice total variation)");
        tv->add_option("--n", n, "number of boxes")->required();
        tv->add_option("--d", d, "dimension")->required();
        tv->add_option("--out", sink.path, "write here instead of stdout");
        tv->add_option("--format", tv_format, "text or json")->check(CLI::IsMember({"text", "json"}));
        tv->callback([&] {
            action = [&] {
                Rational l1 = l1_distance(sw_exact_uniform(d, n), planch_exact(n));
                sink.with(out, [&](std::ostream &os) {
                    if (tv_format == "json") {
                        write_json(os, Json{{"n", n}, {"d", d}, {"l1", to_pq_string(l1)}});
                    } else {
                        os << to_pq_string(l1) << '\n';
                    }
                });
            };
        });
    }
    int max_d = 8;
    {
        auto *grid = exact->add_subcommand("chw-grid", "check n/(36d) <= ||SW^n_d - Planch(n)||_1 <= sqrt(2) n/d");
        grid->add_option("--max-d", max_d, "grid is 2 <= n <= d <= max-d");
        sink.attach(grid, "json");
        grid->callback([&] {
            action = [&] {
                if (max_d < 2) {
                    throw std::invalid_argument("--max-d must be at least 2");
                }
                std::vector<ChwBoundCheck> rows;
                for (int dd = 2; dd <= max_d; ++dd) {
                    for (int nn = 2; nn <= dd; ++nn) {
                        rows.push_back(check_chw_bounds(nn, dd));
                    }
                }
                bool all = std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.pass; });
                sink.with(out, [&](std::ostream &os) {
                    if (sink.format == "csv") {
                        os << "n,d,lower,l1,upper,pass\n";
                        for (const auto &r : rows) {
                            os << r.n << ',' << r.d << ',' << to_pq_string(r.lower) << ',' << to_pq_string(r.value)
                               << ',' << fmt(r.upper) << ',' << (r.pass ? "true" : "false") << '\n';
                        }
                        return;
                    }
                    Json j;
                    j["rows"] = Json::array();
                    for (const auto &r : rows) {
                        j["rows"].push_back(Json{{"n", r.n},
                                                 {"d", r.d},
                                                 {"lower", to_pq_string(r.lower)},
                                                 {"l1", to_pq_string(r.value)},
                                                 {"upper_squared", to_pq_string(r.upper_squared)},
                                                 {"upper", r.upper},
                                                 {"pass", r.pass}});
                    }
                    j["all_pass"] = all;
                    write_json(os, j);
                });
            };
        });
    }

    // sample
    int trials = 1;
    std::string method = "auto";
    auto *sample = app.add_subcommand("sample", "draw shapes; CSV trial_id,shape")->require_subcommand(1);
    sample->fallthrough();
    {
        auto *sw = sample->add_subcommand("sw", "lambda ~ SW^n(alpha)");
        sw->add_option("--n", n, "number of boxes")->required()->check(CLI::PositiveNumber);
        sw->add_option("--trials", trials, "number of draws")->check(CLI::PositiveNumber);
        sw->add_option("--method", method, "auto, rsk or chamber")->check(CLI::IsMember({"auto", "rsk", "chamber"}));
        spec.attach(sw);
        sw->add_option("--out", sink.path, "write here instead of stdout");
        sw->callback([&] {
            action = [&] {
                SchurWeylSampler sampler(spec.resolve(), parse_method(method));
                sink.with(out, [&](std::ostream &os) {
                    os << "trial_id,shape\n";
                    for (int t = 0; t < trials; ++t) {
                        RngStream rng(seed, static_cast<std::uint64_t>(t));
                        os << t << ',' << shape_bar(sampler.draw(n, rng)) << '\n';
                    }
                });
            };
        });
        auto *pl = sample->add_subcommand("planch", "lambda ~ Planch(n)");
        pl->add_option("--n", n, "number of boxes")->required()->check(CLI::PositiveNumber);
        pl->add_option("--trials", trials, "number of draws")->check(CLI::PositiveNumber);
        pl->add_option("--out", sink.path, "write here instead of stdout");
        pl->callback([&] {
            action = [&] {
                sink.with(out, [&](std::ostream &os) {
                    os << "trial_id,shape\n";
                    for (int t = 0; t < trials; ++t) {
                        RngStream rng(seed, static_cast<std::uint64_t>(t));
                        os << t << ',' << shape_bar(sample_planch(n, rng)) << '\n';
                    }
                });
            };
        });
    }

    // estimate
    double eps = 0.1;
    double delta = 0.05;
    double q = 2;
    double c = kDefaultMomentConstant;
    bool with_plugin = false;
    auto *estimate = app.add_subcommand("estimate", "run one estimator")->require_subcommand(1);
    estimate->fallthrough();
    {
        auto *es = estimate->add_subcommand("spectrum", "median-of-batches spectrum estimate");
        es->add_option("--eps", eps, "per-entry accuracy");
        es->add_option("--delta", delta, "failure probability per entry");
        es->add_option("--c", c, "second-moment constant in n = ceil(4c/eps^2)");
        spec.attach(es);
        es->add_option("--out", sink.path, "write here instead of stdout");
        es->callback([&] {
            action = [&] {
                Spectrum alpha = spec.resolve();
                SchurWeylSampler sampler(alpha);
                RngStream rng(seed, 0);
                SpectrumEstimate est = spectrum_estimate(sampler, eps, delta, c, rng, threads);
                Json j;
                j["n"] = est.n_per_batch;
                j["k"] = est.k_batches;
                j["c"] = est.c;
                j["eps"] = est.epsilon;
                j["delta"] = est.delta;
                j["total_samples"] = est.total_samples;
                j["seed"] = est.seed;
                j["stream_id"] = est.stream_id;
                j["estimates"] = est.values;
                j["truth"] = alpha.values();
                sink.with(out, [&](std::ostream &os) { write_json(os, j); });
            };
        });
        auto *pt = estimate->add_subcommand("power-trace", "truncated estimate of tr(rho^q)");
        pt->add_option("--q", q, "power, q > 1")->required();
        pt->add_option("--eps", eps, "additive accuracy")->required();
        pt->add_option("--c", c, "second-moment constant in n = ceil(4c/eps'^2)");
        pt->add_flag("--plugin", with_plugin, "also run the plug-in estimator at the same total budget");
        spec.attach(pt);
        pt->add_option("--out", sink.path, "write here instead of stdout");
        pt->callback([&] {
            action = [&] {
                Spectrum alpha = spec.resolve();
                SchurWeylSampler sampler(alpha);
                RngStream rng(seed, 0);
                const double truth = true_power_trace(alpha.values(), q);
                EstimateReport rep = power_trace_estimate(sampler, q, eps, c, rng, threads);
                Json j = report_json(rep, truth);
                j["d"] = alpha.dimension();
                if (with_plugin) {
                    j["plugin"] = report_json(plugin_estimate(sampler, q, rep.total_samples, rng), truth);
                }
                sink.with(out, [&](std::ostream &os) { write_json(os, j); });
            };
        });
    }

    // sweep
    std::string eps_list = "0.2,0.1";
    trials = 1;
    {
        auto *sw = app.add_subcommand("sweep", "repeated power-trace estimates; CSV, one row per trial");
        sw->fallthrough();
        sw->add_option("--q", q, "power, q > 1")->required();
        sw->add_option("--eps-list", eps_list, "comma-separated accuracies");
        sw->add_option("--trials", trials, "runs per accuracy")->check(CLI::PositiveNumber);
        sw->add_option("--c", c, "second-moment constant");
        sw->add_flag("--plugin", with_plugin, "add a plug-in row per trial at the same total budget");
        spec.attach(sw);
        sw->add_option("--out", sink.path, "write here instead of stdout");
        sw->callback([&] {
            action = [&] {
                const std::vector<double> eps_values = parse_eps_list(eps_list);
                Spectrum alpha = spec.resolve();
                SchurWeylSampler sampler(alpha);
                const double truth = true_power_trace(alpha.values(), q);
                const int count = static_cast<int>(eps_values.size()) * trials;
                auto row = [&](const EstimateReport &r, int trial, double e) {
                    std::string s = fmt(q) + ',' + fmt(e) + ',' + std::to_string(trial) + ',' + std::to_string(seed) +
                                    ',' + fmt(r.estimate) + ',' + fmt(truth) + ',' + fmt(std::abs(r.estimate - truth)) +
                                    ',' + std::to_string(r.total_samples) + ',' +
                                    std::string(algorithm_name(r.algorithm)) + '\n';
                    return s;
                };
                auto job = [&](int i) {
                    const double e = eps_values[static_cast<std::size_t>(i / trials)];
                    const int t = i % trials;
                    RngStream rng(seed, static_cast<std::uint64_t>(t));
                    EstimateReport rep = power_trace_estimate(sampler, q, e, c, rng);
                    std::string lines = row(rep, t, e);
                    if (with_plugin) {
                        lines += row(plugin_estimate(sampler, q, rep.total_samples, rng), t, e);
                    }
                    return lines;
                };
                sink.with(out, [&](std::ostream &os) {
                    os << "q,eps,trial,seed,estimate,truth,abs_err,total_samples,algorithm\n";
                    os.flush();
                    ordered_parallel(count, threads, job, [&](std::string lines) {
                        os << lines;
                        os.flush();
                    });
                });
            };
        });
    }

    // lowerbound
    int max_n = 1 << 22;
    int qubit_trials = 0;
    int mixed_trials = 10000;
    int mixed_max_n = 1 << 20;
    int cal_max_n = 8;
    double eps_est = 0.1;
    int r = 4;
    auto *lower = app.add_subcommand("lowerbound", "hard instances")->require_subcommand(1);
    lower->fallthrough();
    {
        auto *qb = lower->add_subcommand("qubit", "(2/3 +- eps, 1/3 -+ eps) pair");
        qb->add_option("--q", q, "power, q > 1");
        qb->add_option("--eps-list", eps_list, "comma-separated eps values, each < 1/3");
        qb->add_option("--max-n", max_n, "search limit for the required sample count");
        qb->add_option("--trials", qubit_trials, "if > 0, also discriminate by thresholding a power-trace estimate");
        qb->add_option("--eps-est", eps_est, "accuracy of that power-trace estimate");
        qb->add_option("--c", c, "second-moment constant");
        qb->add_option("--out", sink.path, "write here instead of stdout");
        qb->callback([&] {
            action = [&] {
                const std::vector<double> eps_values = parse_eps_list(eps_list);
                Json j;
                j["q"] = q;
                j["gap_limit"] = 2 * q * (std::pow(2.0 / 3.0, q - 1) - std::pow(1.0 / 3.0, q - 1));
                j["instances"] = Json::array();
                std::vector<double> gammas, needed;
                for (std::size_t i = 0; i < eps_values.size(); ++i) {
                    const double e = eps_values[i];
                    HardInstance h = hard_pair_qubit(q, e);
                    Json row;
                    row["eps"] = e;
                    row["trace_first"] = h.trace_first;
                    row["trace_second"] = h.trace_second;
                    row["trace_gap"] = h.trace_gap;
                    row["trace_gap_over_eps"] = h.trace_gap / e;
                    row["fidelity"] = h.fidelity;
                    row["fidelity_closed_form"] = std::sqrt(4.0 / 9.0 - e * e) + std::sqrt(1.0 / 9.0 - e * e);
                    row["infidelity"] = h.infidelity;
                    row["infidelity_over_eps2"] = h.infidelity / (e * e);
                    std::optional<int> need = qubit_required_samples(e, 2.0 / 3.0, max_n);
                    row["required_n"] = need ? Json(*need) : Json(nullptr);
                    if (need && h.infidelity > 0) {
                        gammas.push_back(h.infidelity);
                        needed.push_back(*need);
                        row["required_n_times_infidelity"] = *need * h.infidelity;
                    }
                    if (qubit_trials > 0) {
                        double threshold = (h.trace_first + h.trace_second) / 2;
                        RngStream rng(seed, i);
                        auto res = discrimination_experiment(
                            h, power_trace_threshold_rule(q, eps_est, threshold, c), qubit_trials, rng);
                        row["threshold_rule"] = Json{{"eps_est", eps_est}, {"threshold", threshold},
                                                     {"trials", res.trials}, {"rate", res.rate}, {"sigma", res.sigma}};
                    }
                    j["instances"].push_back(row);
                }
                j["loglog_slope_required_n_vs_infidelity"] =
                    gammas.size() >= 2 ? Json(loglog_slope(gammas, needed)) : Json(nullptr);
                j["seed"] = seed;
                sink.with(out, [&](std::ostream &os) { write_json(os, j); });
            };
        });
        auto *mx = lower->add_subcommand("mixed", "uniform(r) versus uniform(d) pair");
        mx->add_option("--q", q, "power in (1,2)");
        mx->add_option("--eps", eps, "accuracy defining r and d");
        mx->add_option("--r", r, "small-instance rank for the exact experiment");
        mx->add_option("--d", d, "small-instance dimension (default 2r)");
        mx->add_option("--max-n", mixed_max_n, "largest n in the small-instance table (default r)");
        mx->add_option("--trials", mixed_trials, "likelihood-ratio rounds per n");
        mx->add_option("--out", sink.path, "write here instead of stdout");
        mx->callback([&] {
            action = [&] {
                HardInstance h = hard_pair_maximally_mixed(q, eps);
                Json j;
                j["construction"] = Json{{"q", q},
                                         {"eps", eps},
                                         {"r", h.r},
                                         {"d", h.d},
                                         {"trace_first", h.trace_first},
                                         {"trace_second", h.trace_second},
                                         {"trace_gap", h.trace_gap},
                                         {"first_at_least_2eps", h.trace_first >= 2 * eps * (1 - 1e-12)},
                                         {"second_at_most_eps", h.trace_second <= eps * (1 + 1e-12)},
                                         {"l1", h.l1},
                                         {"infidelity", h.infidelity}};
                const int dd = d > 0 ? d : 2 * r;
                const int top = std::min(mixed_max_n, r);
                HardInstance small = mixed_pair_instance(r, dd, q);
                Json rows = Json::array();
                Json first_above = nullptr;
                for (int nn = 1; nn <= top; ++nn) {
                    auto p1 = sw_exact_uniform(r, nn);
                    auto p2 = sw_exact_uniform(dd, nn);
                    Rational l1 = l1_distance(p1, p2);
                    const double l1f = to_double(l1);
                    const double triangle = std::sqrt(2.0) * nn / r + std::sqrt(2.0) * nn / dd;
                    const double cap = helstrom_bound(l1f);
                    Json row{{"n", nn}, {"l1", to_pq_string(l1)}, {"l1_value", l1f},
                             {"triangle_bound", triangle}, {"triangle_ok", l1f <= triangle},
                             {"helstrom", cap}};
                    if (mixed_trials > 0) {
                        RngStream rng(seed, static_cast<std::uint64_t>(nn));
                        auto res = discrimination_experiment(small, likelihood_ratio_rule(p1, p2), mixed_trials, rng);
                        row["rate"] = res.rate;
                        row["sigma"] = res.sigma;
                        row["cap_ok"] = res.rate <= cap + 3 * res.sigma;
                        if (first_above.is_null() && res.rate > 2.0 / 3.0) {
                            first_above = nn;
                        }
                    }
                    rows.push_back(row);
                }
                j["small_instance"] = Json{{"r", r},
                                           {"d", dd},
                                           {"trials", mixed_trials},
                                           {"rows", rows},
                                           {"first_n_above_two_thirds", first_above},
                                           {"sqrt2_r_over_6", std::sqrt(2.0) * r / 6}};
                j["seed"] = seed;
                sink.with(out, [&](std::ostream &os) { write_json(os, j); });
            };
        });
    }

    // calibrate-c
    {
        auto *cal = app.add_subcommand("calibrate-c", "max over a grid of E[(lambda_j - alpha_j n)^2] / n");
        cal->fallthrough();
        cal->add_option("--max-n", cal_max_n, "largest n");
        cal->add_option("--c", c, "constant to compare against");
        spec.attach(cal);
        cal->add_option("--out", sink.path, "write here instead of stdout");
        cal->callback([&] {
            action = [&] {
                const int top = cal_max_n;
                std::vector<ExactSpectrum> spectra;
                if (spec.given() > 0) {
                    spectra.push_back(spec.exact());
                } else {
                    for (const char *text : {"1/2,1/2", "1/2,3/10,1/5", "7/10,1/5,1/10", "1/3,1/3,1/3", "1/4,1/4,1/4,1/4",
                                             "2/5,3/10,1/5,1/10"}) {
                        SpectrumArgs a;
                        a.alpha = text;
                        spectra.push_back(a.exact());
                    }
                }
                Json rows = Json::array();
                double best = -1;
                Json argmax;
                for (const auto &alpha : spectra) {
                    Json alpha_json = Json::array();
                    for (const auto &v : alpha.values()) {
                        alpha_json.push_back(to_pq_string(v));
                    }
                    for (int nn = 1; nn <= top; ++nn) {
                        for (int j = 1; j <= alpha.dimension(); ++j) {
                            Rational m2 = exact_row_second_moment(alpha, nn, j);
                            double ratio = to_double(m2 / nn);
                            rows.push_back(Json{{"alpha", alpha_json}, {"n", nn}, {"j", j},
                                                {"second_moment", to_pq_string(m2)}, {"ratio", ratio}});
                            if (ratio > best) {
                                best = ratio;
                                argmax = Json{{"alpha", alpha_json}, {"n", nn}, {"j", j}};
                            }
                        }
                    }
                }
                Json j{{"max_n", top}, {"c", c}, {"rows", rows}, {"max_ratio", best}, {"argmax", argmax},
                       {"within_c", best <= c}};
                sink.with(out, [&](std::ostream &os) { write_json(os, j); });
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }
    try {
        if (action) {
            action();
        }
    } catch (const std::exception &e) {
        err << "schurtrace: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace schurtrace
