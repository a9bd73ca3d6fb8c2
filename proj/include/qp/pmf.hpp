#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qp/qkernel.hpp"
#include "qp/rng.hpp"

namespace qp {

/// Finite (or truncated) probability mass table over consecutive integers
/// starting at `offset`.
struct DiscretePmf {
    long long offset = 0;
    std::vector<double> probs;

    long long support_min() const { return offset; }
    long long support_max() const { return offset + static_cast<long long>(probs.size()) - 1; }
    double at(long long k) const {
        const long long i = k - offset;
        if (i < 0 || i >= static_cast<long long>(probs.size())) return 0.0;
        return probs[static_cast<std::size_t>(i)];
    }
    double total_mass() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }
    bool is_point_mass() const {
        int nz = 0;
        for (double p : probs) nz += (p > 0.0);
        return nz == 1;
    }
    void check_normalised(double tol = 1e-10) const {
        for (double p : probs)
            if (p < 0.0) throw DomainError("DiscretePmf: negative mass");
        if (std::abs(total_mass() - 1.0) > tol) throw DomainError("DiscretePmf: mass != 1");
    }
};

/// Abstract source of randomised choices. Every randomised procedure in this
/// library draws through this interface, so one implementation of each
/// algorithm serves both Monte Carlo sampling and exact branch enumeration.
class ChoiceProvider {
  public:
    virtual ~ChoiceProvider() = default;
    /// Returns a support point of `pmf` (absolute value, not an index).
    virtual long long choose(const DiscretePmf& pmf) = 0;
};

/// Counts truncation events where an inverse-CDF draw fell into the residual
/// tail mass of a truncated table.
inline std::atomic<std::uint64_t>& tail_event_counter() {
    static std::atomic<std::uint64_t> c{0};
    return c;
}

/// Inverse-CDF draw from a pmf table. Residual mass beyond the table (for
/// truncated infinite supports) goes to the next support point.
inline long long inverse_cdf_draw(const DiscretePmf& pmf, double u) {
    double cum = 0.0;
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
        cum += pmf.probs[i];
        if (u < cum) return pmf.offset + static_cast<long long>(i);
    }
    tail_event_counter().fetch_add(1, std::memory_order_relaxed);
    return pmf.offset + static_cast<long long>(pmf.probs.size());
}

/// Monte Carlo provider backed by an RngStream.
class SamplingProvider : public ChoiceProvider {
  public:
    explicit SamplingProvider(RngStream& rng) : rng_(rng) {}
    long long choose(const DiscretePmf& pmf) override {
        return inverse_cdf_draw(pmf, rng_.next_double());
    }

  private:
    RngStream& rng_;
};

/// Wraps another provider and records every drawn value, optionally filtered
/// by a caller-installed tag (see tag()/set_tag()); used for shared-draw
/// coupling tests between equivalent dynamics.
class RecordingProvider : public ChoiceProvider {
  public:
    explicit RecordingProvider(ChoiceProvider& inner) : inner_(inner) {}
    long long choose(const DiscretePmf& pmf) override {
        const long long v = inner_.choose(pmf);
        if (record_enabled_) recorded_.push_back(v);
        return v;
    }
    void set_recording(bool on) { record_enabled_ = on; }
    const std::vector<long long>& recorded() const { return recorded_; }

  private:
    ChoiceProvider& inner_;
    bool record_enabled_ = true;
    std::vector<long long> recorded_;
};

/// Replays a fixed sequence of values; throws if the sequence is exhausted or
/// a value falls outside the requested support.
class ReplayProvider : public ChoiceProvider {
  public:
    explicit ReplayProvider(std::vector<long long> values)
        : values_(values.begin(), values.end()) {}
    long long choose(const DiscretePmf& pmf) override {
        if (values_.empty()) throw std::runtime_error("ReplayProvider: out of recorded draws");
        const long long v = values_.front();
        values_.pop_front();
        if (v < pmf.support_min() || v > pmf.support_max() + 1)
            throw std::runtime_error("ReplayProvider: replayed value outside support");
        return v;
    }

  private:
    std::deque<long long> values_;
};

}  // namespace qp
