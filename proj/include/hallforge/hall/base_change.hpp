#pragma once

#include <cstddef>
#include <string>

#include "hallforge/groupoid/fiber_product.hpp"
#include "hallforge/hall/element.hpp"

namespace hallforge {

struct BaseChangeResult {
    bool applicable = true;  // false when the square is not a pullback
    bool holds = true;       // f^* g_! = u_! v^* on every delta of B
    std::size_t deltas_checked = 0;
    std::string counterexample;  // first delta of B where the two sides differ

    bool pass() const { return applicable && holds; }
};

/// For the square  D -u-> A -f-> C,  D -v-> B -g-> C, compares the two
/// composites F(B) -> F(A) on every delta function of B, without asking
/// whether the square is a pullback.
inline BaseChangeResult base_change(const GroupoidSquare& s) {
    check_square(s);
    BaseChangeResult r;
    const auto& B = *s.g.source();
    for (std::size_t b = 0; b < B.size(); ++b) {
        std::vector<Rational> d(B.size(), 0);
        d[b] = 1;
        auto lhs = pull_values(push_values(d, s.g), s.f);
        auto rhs = push_values(pull_values(d, s.v), s.u);
        ++r.deltas_checked;
        if (lhs != rhs) {
            r.holds = false;
            r.counterexample = B[b].label;
            break;
        }
    }
    return r;
}

/// Base change on a square certified as a pullback; other squares are
/// reported as inapplicable (the composites are still compared).
inline BaseChangeResult beck_chevalley_check(const GroupoidSquare& s) {
    auto r = base_change(s);
    r.applicable = is_pullback_square(s);
    return r;
}

}  // namespace hallforge
