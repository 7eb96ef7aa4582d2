#include "hyperflex/sweep.hpp"

#include <future>

#include "hyperflex/util.hpp"

namespace hyperflex {

namespace {

SweepSample compute_sample(const PatchworkFamily& fam, int k, const Rat& eps,
                           const std::optional<Rat>& bound, bool verify) {
    SweepSample s;
    s.eps = eps;
    s.in_stable_region = bound.has_value() ? eps < *bound : true;
    try {
        HyperellipticCurve curve = instantiate(fam, eps);
        InflectionOptions opts;
        opts.verify_weights = verify;
        InflectionReport rep = inflection_divisor(curve, k, opts);
        s.n_components = curve.real_component_count();
        s.total_degree = rep.total_degree;
        s.real_degree = rep.real_degree;
        s.distinct_real = rep.distinct_real_points;
        s.per_component = rep.per_component_real;
    } catch (const nonseparable_error&) {
        s.separable = false;
    }
    return s;
}

} // namespace

SweepResult run_sweep(const PatchworkFamily& fam, int k, const SweepOptions& opts) {
    if (k < 1) throw input_error("run_sweep: k must be >= 1");
    if (opts.eps0.sign() <= 0) throw input_error("run_sweep: eps0 must be positive");
    fam.validate();

    SweepResult out;
    out.k = k;
    out.stable_bound = discriminant_stable_bound(fam);

    const long expected_total =
        k <= fam.g ? static_cast<long>(k) * (k + 1) * (fam.g + 1)
                   : static_cast<long>(fam.g) * (2 * k - fam.g + 1) * (2 * k - fam.g + 1);

    const unsigned threads = thread_cap();
    Rat eps = opts.eps0;
    int step = 0;
    int last_good = -1; // index of the previous separable in-region sample
    while (step <= opts.max_halvings) {
        // samples are independent; evaluate a batch in parallel, scan in order
        int batch = static_cast<int>(threads);
        if (step + batch > opts.max_halvings + 1) batch = opts.max_halvings + 1 - step;
        std::vector<SweepSample> chunk;
        if (batch <= 1) {
            chunk.push_back(compute_sample(fam, k, eps, out.stable_bound, opts.verify_weights));
            eps /= Rat(2);
        } else {
            std::vector<std::future<SweepSample>> futs;
            for (int b = 0; b < batch; ++b) {
                Rat e = eps;
                futs.push_back(std::async(std::launch::async, [&fam, k, e, &out, &opts] {
                    return compute_sample(fam, k, e, out.stable_bound, opts.verify_weights);
                }));
                eps /= Rat(2);
            }
            for (auto& f : futs) chunk.push_back(f.get());
        }
        for (SweepSample& s : chunk) {
            if (s.separable && s.total_degree != expected_total)
                throw internal_error("run_sweep: total inflection degree drifted");
            out.samples.push_back(s);
            int idx = static_cast<int>(out.samples.size()) - 1;
            ++step;
            if (!s.separable || !s.in_stable_region) continue;
            if (last_good == idx - 1 && last_good >= 0 &&
                out.samples[static_cast<std::size_t>(last_good)].same_record(s)) {
                SweepSample confirm =
                    compute_sample(fam, k, s.eps / Rat(2), out.stable_bound, opts.verify_weights);
                out.samples.push_back(confirm);
                out.stabilized = true;
                out.confirmed = confirm.separable && confirm.same_record(s);
                out.stable = s;
                return out;
            }
            last_good = idx;
        }
    }
    return out; // not stabilized within budget; trajectory returned as data
}

} // namespace hyperflex
