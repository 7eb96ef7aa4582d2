#ifndef HYPERFLEX_SWEEP_HPP
#define HYPERFLEX_SWEEP_HPP

#include "hyperflex/inflection.hpp"
#include "hyperflex/patchwork.hpp"

namespace hyperflex {

struct SweepOptions {
    Rat eps0 = Rat(1, 2);
    int max_halvings = 40;
    bool verify_weights = true; // recompute ramification weights per sample
};

struct SweepSample {
    Rat eps;
    bool separable = true; // false: discriminant hit, sample skipped
    bool in_stable_region = false;
    int n_components = 0;
    long total_degree = 0;
    long real_degree = 0;
    long distinct_real = 0;
    std::vector<long> per_component;

    bool same_record(const SweepSample& o) const {
        return n_components == o.n_components && real_degree == o.real_degree &&
               distinct_real == o.distinct_real && per_component == o.per_component;
    }
};

struct SweepResult {
    int k = 0;
    std::vector<SweepSample> samples;
    bool stabilized = false;
    bool confirmed = false; // one extra halving reproduced the stable record
    std::optional<SweepSample> stable;
    std::optional<Rat> stable_bound; // discriminant-stable interval bound
};

/// Halves eps from eps0, computing the full real inflection record at each
/// step; stops once two consecutive samples inside the discriminant-stable
/// interval agree (plus one confirmation step), or after max_halvings.
SweepResult run_sweep(const PatchworkFamily& fam, int k, const SweepOptions& opts = {});

} // namespace hyperflex

#endif
