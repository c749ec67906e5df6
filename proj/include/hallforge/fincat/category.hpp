#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hallforge/qlinalg/field.hpp"

namespace hallforge {

/// A finite acyclic quiver; Vect is the quiver with one vertex and no arrows.
struct Quiver {
    std::size_t vertices = 1;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;

    static constexpr std::size_t max_vertices = 3;

    void validate() const {
        if (vertices == 0) throw usage_error("quiver needs at least one vertex");
        if (vertices > max_vertices)
            throw bound_exceeded("quiver has " + std::to_string(vertices) + " vertices, at most 3 supported");
        for (auto [s, t] : arrows)
            if (s >= vertices || t >= vertices) throw usage_error("quiver arrow endpoint out of range");
        // Kahn's algorithm
        std::vector<std::size_t> indeg(vertices, 0);
        for (auto [s, t] : arrows) ++indeg[t];
        std::vector<std::size_t> ready;
        for (std::size_t v = 0; v < vertices; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        std::size_t seen = 0;
        while (!ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++seen;
            for (auto [s, t] : arrows)
                if (s == v && --indeg[t] == 0) ready.push_back(t);
        }
        if (seen != vertices) throw usage_error("quiver has an oriented cycle");
    }

    static Quiver from_json(const nlohmann::json& j) {
        Quiver q;
        try {
            q.vertices = j.at("vertices").get<std::size_t>();
            q.arrows.clear();
            for (const auto& a : j.at("arrows")) {
                if (!a.is_array() || a.size() != 2) throw usage_error("quiver arrow must be [src,dst]");
                q.arrows.emplace_back(a[0].get<std::size_t>(), a[1].get<std::size_t>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("bad quiver description: ") + e.what());
        }
        q.validate();
        return q;
    }

    static Quiver from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw usage_error("cannot open quiver file " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("bad quiver file: ") + e.what());
        }
        return from_json(j);
    }

    nlohmann::json to_json() const {
        nlohmann::json a = nlohmann::json::array();
        for (auto [s, t] : arrows) a.push_back({s, t});
        return {{"vertices", vertices}, {"arrows", a}};
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A_n quiver 0 -> 1 -> ... -> n-1.
inline Quiver linear_quiver(std::size_t n) {
    Quiver q;
    q.vertices = n;
    for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
    q.validate();
    return q;
}

enum class CategoryKind { vect, quiver, slice };

/// Which finitary category we are enumerating in.
///
/// For the slice kind the base category is Vect and the target object is
/// F^slice_dim; objects are linear maps S -> F^slice_dim.
struct CategorySpec {
    CategoryKind kind = CategoryKind::vect;
    const FiniteField* field = nullptr;
    Quiver quiver;
    std::size_t slice_dim = 0;

    std::size_t vertex_count() const { return quiver.vertices; }
    bool is_slice() const { return kind == CategoryKind::slice; }

    /// Objects with total dimension above this are out of reach.
    std::size_t max_bound() const {
        switch (kind) {
            case CategoryKind::vect: return 6;
            case CategoryKind::quiver: return 4;
            case CategoryKind::slice: return 4;
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
            case CategoryKind::vect: return "vect";
            case CategoryKind::quiver: {
                std::string s = "quiver(" + std::to_string(quiver.vertices) + ";";
                for (std::size_t i = 0; i < quiver.arrows.size(); ++i)
                    s += (i ? "," : "") + std::to_string(quiver.arrows[i].first) + ">" +
                         std::to_string(quiver.arrows[i].second);
                return s + ")";
            }
            case CategoryKind::slice: return "vect/[" + std::to_string(slice_dim) + "]";
        }
        return "?";
    }

    friend bool operator==(const CategorySpec& a, const CategorySpec& b) {
        return a.kind == b.kind && a.field == b.field && a.quiver == b.quiver && a.slice_dim == b.slice_dim;
    }
};

inline CategorySpec vect_category(const FiniteField& f) {
    CategorySpec s;
    s.kind = CategoryKind::vect;
    s.field = &f;
    return s;
}

inline CategorySpec quiver_category(const FiniteField& f, Quiver q) {
    q.validate();
    CategorySpec s;
    s.kind = CategoryKind::quiver;
    s.field = &f;
    s.quiver = std::move(q);
    return s;
}

/// The underlying category of a slice (forgetting the map to the target).
inline CategorySpec base_category(const CategorySpec& s) {
    if (!s.is_slice()) return s;
    return vect_category(*s.field);
}

}  // namespace hallforge
