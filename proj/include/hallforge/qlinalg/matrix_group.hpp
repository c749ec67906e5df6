#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hallforge/qlinalg/general_linear.hpp"

namespace hallforge {

/// A finite group of invertible matrices.
///
/// The order is always known exactly.  Elements are listed lazily, on first
/// request, and only when the order is at most group_element_cap; beyond
/// that, element access throws bound_exceeded while the order stays usable.
/// Listed elements are sorted, so "minimal element" is a fixed total order.
class FiniteGroup {
public:
    using Enumerator = std::function<std::vector<Matrix>()>;

    FiniteGroup(const FiniteField* field, std::size_t degree, BigInt order, std::vector<Matrix> generators,
                Enumerator enumerate)
        : field_(field), degree_(degree), order_(std::move(order)), enumerate_(std::move(enumerate)) {
        if (!generators.empty()) {
            generators_ = std::move(generators);
            generators_ready_ = true;
        }
    }

    const FiniteField* field() const { return field_; }
    std::size_t degree() const { return degree_; }
    const BigInt& order() const { return order_; }
    bool listable() const { return order_ <= group_element_cap; }

    const std::vector<Matrix>& elements() const {
        std::call_once(listed_, [this] {
            if (!listable())
                throw bound_exceeded("group of order " + order_.str() + " exceeds the element cap");
            elements_ = enumerate_();
            std::sort(elements_.begin(), elements_.end());
            elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
            if (BigInt(elements_.size()) != order_) throw std::logic_error("group enumeration disagrees with its order");
            index_.reserve(elements_.size());
            for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
            identity_ = index_.at(Matrix::identity(field_, degree_));
        });
        return elements_;
    }

    std::size_t size() const { return elements().size(); }
    const Matrix& element(std::size_t i) const { return elements()[i]; }

    std::optional<std::size_t> index_of(const Matrix& m) const {
        elements();
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_or_throw(const Matrix& m) const {
        auto i = index_of(m);
        if (!i) throw diagram_error("matrix is not an element of the group");
        return *i;
    }
    bool contains(const Matrix& m) const { return index_of(m).has_value(); }

    std::size_t identity_index() const {
        elements();
        return identity_;
    }
    std::size_t multiply(std::size_t a, std::size_t b) const { return index_or_throw(element(a) * element(b)); }
    std::size_t inverse(std::size_t a) const { return index_or_throw(element(a).inverse_or_throw()); }

    /// A generating set; computed greedily from the element list when not supplied.
    const std::vector<Matrix>& generators() const {
        std::call_once(generated_, [this] {
            if (generators_ready_) return;
            generators_ = greedy_generators();
        });
        return generators_;
    }

private:
    std::vector<Matrix> greedy_generators() const {
        const auto& el = elements();
        std::vector<Matrix> gens;
        std::vector<char> in(el.size(), 0);
        std::vector<std::size_t> members{identity_index()};
        in[identity_] = 1;
        for (std::size_t cand = 0; cand < el.size(); ++cand) {
            if (in[cand]) continue;
            gens.push_back(el[cand]);
            // old members need the new generator, new members need all of them
            std::vector<std::size_t> queue;
            for (auto m : members) {
                std::size_t x = index_or_throw(el[m] * gens.back());
                if (!in[x]) {
                    in[x] = 1;
                    queue.push_back(x);
                }
            }
            for (std::size_t h = 0; h < queue.size(); ++h)
                for (const auto& g : gens) {
                    std::size_t x = index_or_throw(el[queue[h]] * g);
                    if (!in[x]) {
                        in[x] = 1;
                        queue.push_back(x);
                    }
                }
            members.insert(members.end(), queue.begin(), queue.end());
        }
        return gens;
    }

    const FiniteField* field_;
    std::size_t degree_;
    BigInt order_;
    Enumerator enumerate_;

    mutable std::once_flag listed_;
    mutable std::vector<Matrix> elements_;
    mutable std::unordered_map<Matrix, std::size_t, MatrixHash> index_;
    mutable std::size_t identity_ = 0;

    mutable std::once_flag generated_;
    mutable std::vector<Matrix> generators_;
    bool generators_ready_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Group given by an explicit element list (must be closed and contain the identity).
inline GroupPtr group_from_elements(const FiniteField* field, std::size_t degree, std::vector<Matrix> elements) {
    BigInt order = elements.size();
    auto shared = std::make_shared<std::vector<Matrix>>(std::move(elements));
    return std::make_shared<FiniteGroup>(field, degree, order, std::vector<Matrix>{},
                                         [shared] { return *shared; });
}

inline GroupPtr trivial_group(const FiniteField* field, std::size_t degree = 0) {
    return group_from_elements(field, degree, {Matrix::identity(field, degree)});
}

/// Block upper-triangular matrices in GL_n with diagonal blocks of the given sizes.
///
/// Generated by the elementary matrices I + E_ij allowed by the block shape and
/// by scaling a single coordinate with a primitive element.
inline GroupPtr parabolic_group(const FiniteField& f, const std::vector<std::size_t>& blocks) {
    std::size_t n = 0;
    std::vector<std::size_t> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t i = 0; i < blocks[b]; ++i) block_of.push_back(b), ++n;

    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && block_of[i] <= block_of[j]) {
                Matrix e = Matrix::identity(f, n);
                e.at(i, j) = 1;
                gens.push_back(std::move(e));
            }
    if (f.order() > 2)
        for (std::size_t i = 0; i < n; ++i) {
            Matrix d = Matrix::identity(f, n);
            d.at(i, i) = f.primitive_element();
            gens.push_back(std::move(d));
        }
    if (gens.empty()) gens.push_back(Matrix::identity(f, n));

    const FiniteField* fp = &f;
    auto enumerate = [fp, blocks, block_of, n] {
        std::vector<std::vector<Matrix>> levi;
        for (auto d : blocks) levi.push_back(enumerate_general_linear(d, *fp));
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (block_of[i] < block_of[j]) free.emplace_back(i, j);
        std::vector<Matrix> out;
        std::vector<std::size_t> pick(blocks.size(), 0);
        const int q = fp->order();
        while (true) {
            Matrix base(fp, n, n);
            std::size_t off = 0;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                base.set_block(off, off, levi[b][pick[b]]);
                off += blocks[b];
            }
            std::vector<int> digit(free.size(), 0);
            while (true) {
                Matrix m = base;
                for (std::size_t s = 0; s < free.size(); ++s)
                    m.at(free[s].first, free[s].second) = static_cast<Element>(digit[s]);
                out.push_back(std::move(m));
                std::size_t s = 0;
                while (s < digit.size() && ++digit[s] == q) digit[s++] = 0;
                if (s == digit.size()) break;
            }
            std::size_t b = 0;
            while (b < pick.size() && ++pick[b] == levi[b].size()) pick[b++] = 0;
            if (b == pick.size()) break;
        }
        return out;
    };
    return std::make_shared<FiniteGroup>(&f, n, parabolic_order(blocks, f), std::move(gens), enumerate);
}

inline GroupPtr general_linear_group(const FiniteField& f, std::size_t n) {
    return parabolic_group(f, n == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{n});
}

/// Direct product, realized as block-diagonal matrices.
inline GroupPtr product_group(const FiniteField* field, const std::vector<GroupPtr>& factors) {
    if (factors.empty()) return trivial_group(field, 0);
    if (factors.size() == 1) return factors.front();
    std::size_t n = 0;
    BigInt order = 1;
    for (const auto& g : factors) {
        n += g->degree();
        order *= g->order();
    }
    // generators: each factor's generators, padded by identities
    std::vector<Matrix> gens;
    std::size_t off = 0;
    for (const auto& g : factors) {
        for (const auto& x : g->generators()) {
            Matrix m = Matrix::identity(field, n);
            m.set_block(off, off, x);
            gens.push_back(std::move(m));
        }
        off += g->degree();
    }
    if (gens.empty()) gens.push_back(Matrix::identity(field, n));
    auto enumerate = [field, factors, n] {
        std::vector<Matrix> out;
        std::vector<std::size_t> pick(factors.size(), 0);
        while (true) {
            Matrix m(field, n, n);
            std::size_t o = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                m.set_block(o, o, factors[i]->element(pick[i]));
                o += factors[i]->degree();
            }
            out.push_back(std::move(m));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == factors[i]->size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        return out;
    };
    return std::make_shared<FiniteGroup>(field, n, order, std::move(gens), enumerate);
}

}  // namespace hallforge
