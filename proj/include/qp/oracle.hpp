#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qp/pmf.hpp"

// Exact-distribution oracle: runs a randomised procedure once per branch of
// its choice tree and accumulates the exact law of its outcome. This is the
// verification backbone for the symmetry, push-forward and Burke theorems.

namespace qp {

/// Exact law over canonically serialised outcomes.
struct ExactLaw {
    std::map<std::string, double> p;

    double mass() const {
        double s = 0.0;
        for (const auto& [_, v] : p) s += v;
        return s;
    }
    double at(const std::string& key) const {
        auto it = p.find(key);
        return it == p.end() ? 0.0 : it->second;
    }
};

/// Half the L1 distance over the union support.
inline double tv_distance(const ExactLaw& a, const ExactLaw& b) {
    double s = 0.0;
    for (const auto& [k, v] : a.p) s += std::abs(v - b.at(k));
    for (const auto& [k, v] : b.p)
        if (!a.p.count(k)) s += v;
    return 0.5 * s;
}

/// Mass-preserving relabelling (marginals, projections).
inline ExactLaw pushforward(const ExactLaw& law,
                            const std::function<std::string(const std::string&)>& f) {
    ExactLaw out;
    for (const auto& [k, v] : law.p) out.p[f(k)] += v;
    return out;
}

struct EnumGuards {
    long long max_branches = 10'000'000;  // leaf budget
};

struct EnumGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct EnumFrame {
    DiscretePmf pmf;
    std::size_t idx;  // current atom index within pmf.probs
};

/// Provider that replays a recorded choice prefix and extends it with the
/// first positive-probability atom at each fresh choice point.
class EnumProvider : public ChoiceProvider {
  public:
    explicit EnumProvider(std::vector<EnumFrame>& frames) : frames_(frames) {}

    long long choose(const DiscretePmf& pmf) override {
        pmf.check_normalised(1e-9);
        if (depth_ < frames_.size()) {
            const EnumFrame& f = frames_[depth_];
            log_prob_ += std::log(f.pmf.probs[f.idx]);
            const long long v = f.pmf.offset + static_cast<long long>(f.idx);
            ++depth_;
            return v;
        }
        std::size_t i = 0;
        while (i < pmf.probs.size() && pmf.probs[i] <= 0.0) ++i;
        if (i == pmf.probs.size()) throw std::runtime_error("enumerate: empty pmf");
        frames_.push_back(EnumFrame{pmf, i});
        log_prob_ += std::log(pmf.probs[i]);
        ++depth_;
        return pmf.offset + static_cast<long long>(i);
    }

    double log_prob() const { return log_prob_; }

  private:
    std::vector<EnumFrame>& frames_;
    std::size_t depth_ = 0;
    double log_prob_ = 0.0;
};

}  // namespace detail

/// Exhaustive branch enumeration of `proc`'s outcome distribution. Each leaf
/// probability is the product of pmf atoms along its root-to-leaf path,
/// accumulated in log space; zero-probability branches are pruned before
/// descent. Deterministic: two runs give identical tables.
inline ExactLaw enumerate_procedure(const std::function<std::string(ChoiceProvider&)>& proc,
                                    const EnumGuards& guards = {}) {
    ExactLaw law;
    std::vector<detail::EnumFrame> frames;
    long long leaves = 0;
    for (;;) {
        detail::EnumProvider provider(frames);
        const std::string outcome = proc(provider);
        law.p[outcome] += std::exp(provider.log_prob());
        if (++leaves > guards.max_branches) {
            std::size_t widest = 0;
            for (const auto& f : frames) widest = std::max(widest, f.pmf.probs.size());
            throw EnumGuardExceeded("enumerate: branch guard exceeded (widest choice point has " +
                                    std::to_string(widest) + " atoms)");
        }
        // Backtrack: advance the deepest frame to its next positive atom.
        while (!frames.empty()) {
            detail::EnumFrame& f = frames.back();
            std::size_t i = f.idx + 1;
            while (i < f.pmf.probs.size() && f.pmf.probs[i] <= 0.0) ++i;
            if (i < f.pmf.probs.size()) {
                f.idx = i;
                break;
            }
            frames.pop_back();
        }
        if (frames.empty()) break;
    }
    return law;
}

}  // namespace qp
