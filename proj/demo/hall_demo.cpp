// A short tour: Hall products over F_2 and F_3, one 2-Segal condition, the
// Corr0 square for n = 3, and the action on functions over Vect/F.

#include <iostream>

#include "hallforge/hallforge.hpp"

using namespace hallforge;

int main() {
    for (int q : {2, 3}) {
        HallAlgebra alg(vect_category(field_of_order(q)), 4);
        std::cout << "Vect over F_" << q << "\n";
        for (std::size_t n = 1; n <= 2; ++n)
            for (std::size_t m = 1; n + m <= 4; ++m) {
                auto l = "[" + std::to_string(n) + "]", r = "[" + std::to_string(m) + "]";
                std::cout << "  " << l << " * " << r << " = " << alg.render(alg.product(alg.delta(l), alg.delta(r)))
                          << "\n";
            }
        std::cout << "  symbolic [1] * [2] = " << alg.symbolic_product("[1]", "[2]").begin()->second << "\n";
    }

    HallAlgebra a2(quiver_category(field_of_order(2), linear_quiver(2)), 2);
    std::cout << "A_2 over F_2\n";
    std::cout << "  [(0,1)] * [(1,0)] = " << a2.render(a2.product(a2.delta("[(0,1)]"), a2.delta("[(1,0)]"))) << "\n";
    std::cout << "  [(1,0)] * [(0,1)] = " << a2.render(a2.product(a2.delta("[(1,0)]"), a2.delta("[(0,1)]"))) << "\n";

    auto vect2 = vect_category(field_of_order(2));
    auto seg = two_segal_report(vect2, 3, 1, 3);
    std::cout << seg.condition << " on Vect/F_2 up to dimension 3: " << (seg.pass() ? "holds" : "fails") << " on "
              << seg.graded_results.size() << " grades\n";
    auto c0 = corr0_pipeline(3, vect2, 2);
    std::cout << "Corr0 n=3 up to dimension 2: commutative: " << (c0.commutative() ? "true" : "false") << "\n";

    HallModule mod(vect2, 1, 2);
    auto m = mod.delta(mod.class_label(1, 0));
    std::cout << "Vect/F_2 over V=[1]: [1] acting on " << mod.class_label(1, 0) << " = "
              << mod.render(mod.act(mod.algebra().delta("[1]"), m)) << "\n";
    return 0;
}
