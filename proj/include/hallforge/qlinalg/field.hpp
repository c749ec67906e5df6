#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hallforge/errors.hpp"

namespace hallforge {

using Element = std::uint8_t;

/// Arithmetic in F_q for q = p^k <= 16.
///
/// Elements are the integers 0..q-1 read as base-p digit strings, i.e. the
/// coefficient vectors of polynomials modulo a fixed irreducible polynomial.
/// Fields are interned: make_field returns a reference into static storage,
/// so pointers to a FiniteField stay valid for the lifetime of the program.
class FiniteField {
public:
    static constexpr int max_order = 16;

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }

    Element add(Element a, Element b) const { return add_[a][b]; }
    Element sub(Element a, Element b) const { return add_[a][neg_[b]]; }
    Element neg(Element a) const { return neg_[a]; }
    Element mul(Element a, Element b) const { return mul_[a][b]; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
        return inv_[a];
    }
    Element pow(Element a, unsigned e) const {
        Element r = 1;
        for (unsigned i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    Element frobenius(Element a) const { return pow(a, static_cast<unsigned>(p_)); }

    /// A generator of the multiplicative group.
    Element primitive_element() const { return primitive_; }

    std::string name() const { return "F_" + std::to_string(q_); }

    friend bool operator==(const FiniteField& a, const FiniteField& b) { return &a == &b; }

private:
    friend const FiniteField& make_field(int p, int k);
    friend struct field_registry;

    FiniteField() = default;
    FiniteField(int p, int k, const std::vector<int>& modulus);

    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    std::array<std::array<Element, max_order>, max_order> add_{};
    std::array<std::array<Element, max_order>, max_order> mul_{};
    std::array<Element, max_order> neg_{};
    std::array<Element, max_order> inv_{};
    Element primitive_ = 1;
};

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FiniteField::FiniteField(int p, int k, const std::vector<int>& modulus) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;

    auto digits = [&](int x) {
        std::vector<int> d(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            d[static_cast<std::size_t>(i)] = x % p;
            x /= p;
        }
        return d;
    };
    auto number = [&](const std::vector<int>& d) {
        int x = 0;
        for (int i = k - 1; i >= 0; --i) x = x * p + d[static_cast<std::size_t>(i)];
        return x;
    };

    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<int> s(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            add_[a][b] = static_cast<Element>(number(s));

            // schoolbook product, then reduce by the monic modulus from the top
            std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
            for (int deg = 2 * k - 1; deg >= k; --deg) {
                int c = prod[static_cast<std::size_t>(deg)] % p;
                if (c == 0) continue;
                for (int i = 0; i <= k; ++i)
                    prod[static_cast<std::size_t>(deg - k + i)] -= c * modulus[static_cast<std::size_t>(i)];
            }
            std::vector<int> r(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
            mul_[a][b] = static_cast<Element>(number(r));
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (add_[a][b] == 0) neg_[a] = static_cast<Element>(b);
            if (mul_[a][b] == 1) inv_[a] = static_cast<Element>(b);
        }
    for (int g = 1; g < q_; ++g) {
        int ord = 1;
        Element x = static_cast<Element>(g);
        while (x != 1) {
            x = mul_[x][g];
            ++ord;
        }
        if (ord == q_ - 1) {
            primitive_ = static_cast<Element>(g);
            break;
        }
    }
}

struct field_registry {
    struct entry {
        int p;
        int k;
        FiniteField field;
    };
    std::vector<entry> entries;

    field_registry() {
        // Monic irreducible moduli, coefficients from the constant term upward.
        const struct {
            int p, k;
            std::vector<int> modulus;
        } table[] = {
            {2, 1, {0, 1}},       {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}}, {2, 4, {1, 1, 0, 0, 1}},
            {3, 1, {0, 1}},       {3, 2, {1, 0, 1}},    {5, 1, {0, 1}},       {7, 1, {0, 1}},
            {11, 1, {0, 1}},      {13, 1, {0, 1}},
        };
        entries.reserve(std::size(table));
        for (const auto& t : table) entries.push_back({t.p, t.k, FiniteField(t.p, t.k, t.modulus)});
    }

    static const field_registry& instance() {
        static const field_registry registry;
        return registry;
    }
};

inline const FiniteField& make_field(int p, int k) {
    if (!is_prime(p)) throw usage_error("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw usage_error("field degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > FiniteField::max_order)
        throw bound_exceeded("field order " + std::to_string(q) + " exceeds " + std::to_string(FiniteField::max_order));
    for (const auto& e : field_registry::instance().entries)
        if (e.p == p && e.k == k) return e.field;
    throw bound_exceeded("no field table for p=" + std::to_string(p) + ", k=" + std::to_string(k));
}

/// Field of order q, where q must be a prime power <= 16.
inline const FiniteField& field_of_order(int q) {
    if (q < 2) throw usage_error("q must be a prime power >= 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int k = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) break;
        return make_field(p, k);
    }
    throw usage_error("q=" + std::to_string(q) + " is not a prime power");
}

}  // namespace hallforge
