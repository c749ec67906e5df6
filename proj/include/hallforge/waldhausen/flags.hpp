#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hallforge/fincat/objects.hpp"

namespace hallforge {

/// S_n as a graded groupoid of flags of length n, grades of total <= bound.
inline GroupoidPtr waldhausen_groupoid(const CategorySpec& spec, std::size_t n, std::size_t bound) {
    if (n > 5) throw usage_error("flags are supported up to length 5");
    return FlagSpace::up_to(spec, n, bound).groupoid();
}

/// Positions of the elements of `sub` inside the increasing list `sup`.
inline std::vector<std::size_t> positions_in(const std::vector<std::size_t>& sub, const std::vector<std::size_t>& sup) {
    std::vector<std::size_t> out;
    for (auto v : sub) {
        auto it = std::lower_bound(sup.begin(), sup.end(), v);
        if (it == sup.end() || *it != v) throw usage_error("vertex set is not contained in the larger one");
        out.push_back(static_cast<std::size_t>(it - sup.begin()));
    }
    return out;
}

/// {0..n} without the listed vertices.
inline std::vector<std::size_t> vertices_without(std::size_t n, const std::vector<std::size_t>& removed) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v <= n; ++v)
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
    return out;
}

/// The strict restriction of flags along I = {i_0 < ... < i_m}: keep V_j / V_{i_0}
/// for j in I.  The source and target may be flag spaces of different
/// categories (a slice and its base) as long as the shapes agree.
inline StrictFunctor flag_restriction(const FlagSpace& src, const FlagSpace& dst, std::vector<std::size_t> I) {
    if (I.empty()) throw usage_error("restriction to an empty vertex set");
    if (I.size() != dst.length() + 1) throw usage_error("restriction: target flag length does not match");
    std::vector<std::shared_ptr<const RepShape>> from = src.shapes(), to = dst.shapes();
    std::vector<std::size_t> piece(from.size());
    for (std::size_t p = 0; p < from.size(); ++p) piece[p] = dst.piece_or_throw(restrict_grade(from[p]->grade(), I));
    return {[from, to, piece, I](std::size_t p, std::size_t x) {
                const auto& s = *from[p];
                const auto& t = *to[piece[p]];
                return std::make_pair(piece[p], t.encode(restrict_data(s, t, s.decode(x), I)));
            },
            [from, I](std::size_t p, const Matrix& g) { return restrict_group(*from[p], g, I); }};
}

/// A restriction functor S_n -> S_{|I|-1} with the flag spaces it lives on.
struct FlagRestriction {
    std::shared_ptr<const FlagSpace> source, target;
    StrictFunctor strict;
    GroupoidFunctor functor;
};

inline FlagRestriction restriction_functor(const CategorySpec& spec, std::size_t n, const std::vector<std::size_t>& I,
                                           std::size_t bound) {
    if (I.empty()) throw usage_error("restriction to an empty vertex set");
    auto src = std::make_shared<const FlagSpace>(FlagSpace::up_to(spec, n, bound));
    auto dst = std::make_shared<const FlagSpace>(FlagSpace::up_to(spec, I.size() - 1, bound));
    auto s = flag_restriction(*src, *dst, I);
    auto f = skeletal_functor(src->skeleton(), dst->skeleton(), s);
    return {src, dst, s, f};
}

/// Worker count: HALLFORGE_THREADS if set, else the hardware concurrency.
inline std::size_t worker_count() {
    if (const char* e = std::getenv("HALLFORGE_THREADS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i < n on up to worker_count() threads.  Results must be
/// written to slot i so the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, F body) {
    const std::size_t w = std::min(worker_count(), n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += w) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hallforge
