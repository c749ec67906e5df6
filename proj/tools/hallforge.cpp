// hallforge command line: Hall products and tables, 2-Segal and Corr0
// reports, module action, and oracle cross-checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "hallforge/hallforge.hpp"

using namespace hallforge;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0, exit_failed = 1, exit_usage = 2;

struct Config {
    std::string category = "vect";
    std::string quiver_file;
    int q = 2;
    std::optional<std::size_t> max_dim;
    std::string format;
    std::string output;
};

void add_common(CLI::App* cmd, Config& c) {
    cmd->add_option("--category", c.category, "vect, a2, a3, or quiver (with --quiver)")->capture_default_str();
    cmd->add_option("--quiver", c.quiver_file, "quiver description as JSON {vertices, arrows}");
    cmd->add_option("--q", c.q, "field order (prime power <= 16)")->capture_default_str();
    cmd->add_option("--max-dim", c.max_dim, "total dimension bound");
    cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", c.output, "write to this file instead of stdout");
}

CategorySpec category_of(const Config& c) {
    const auto& f = field_of_order(c.q);
    if (c.category == "vect") return vect_category(f);
    if (c.category == "a2") return quiver_category(f, linear_quiver(2));
    if (c.category == "a3") return quiver_category(f, linear_quiver(3));
    if (c.category == "quiver") {
        if (c.quiver_file.empty()) throw usage_error("--category quiver needs --quiver path.json");
        return quiver_category(f, Quiver::from_file(c.quiver_file));
    }
    throw usage_error("unknown category " + c.category);
}

std::size_t bound_of(const Config& c, const CategorySpec& spec, std::size_t fallback) {
    std::size_t b = c.max_dim.value_or(std::min(fallback, spec.max_bound()));
    if (b > spec.max_bound())
        throw bound_exceeded("--max-dim " + std::to_string(b) + " above the limit " + std::to_string(spec.max_bound()) +
                             " for " + spec.name());
    return b;
}

/// "1" -> "[1]", "(1,0)" -> "[(1,0)]"; bracketed labels pass through.
std::string normalize_label(const std::string& s) {
    if (s.empty()) throw usage_error("empty class label");
    return s.front() == '[' ? s : "[" + s + "]";
}

json rational_json(const Rational& r) {
    if (denominator(r) == 1) {
        const BigInt& n = numerator(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return r.str();
}

json element_json(const HallElement& e, const SkeletalGroupoid& g) {
    std::vector<std::pair<std::string, Rational>> items(e.terms().begin(), e.terms().end());
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        auto wa = g[g.index_of(a.first)].weight, wb = g[g.index_of(b.first)].weight;
        return wa != wb ? wa < wb : a.first < b.first;
    });
    json out = json::array();
    for (const auto& [l, c] : items) out.push_back({{"class", l}, {"coeff", rational_json(c)}});
    return out;
}

json header(const std::string& command, const CategorySpec& spec, std::size_t bound) {
    return {{"schema", "hallforge/1"}, {"command", command}, {"category", spec.name()}, {"q", spec.field->order()},
            {"max_dim", bound}};
}

void emit(const Config& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(c.output);
    if (!out) throw usage_error("cannot write " + c.output);
    out << text << "\n";
}

void emit(const Config& c, const json& j, const std::string& text, const std::string& default_format) {
    const std::string fmt = c.format.empty() ? default_format : c.format;
    emit(c, fmt == "json" ? j.dump(2) : text);
}

json segal_json(const SegalReport& r) {
    json grades = json::array();
    for (const auto& g : r.graded_results)
        grades.push_back({{"grade", g.grade}, {"pi0_lhs", g.pi0_lhs}, {"pi0_rhs", g.pi0_rhs}, {"aut_match", g.aut_match},
                          {"pass", g.pass}});
    return {{"condition", r.condition}, {"pass", r.pass()}, {"grades", grades}};
}

std::string segal_text(const SegalReport& r) {
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& g : r.graded_results) ok += g.pass;
    os << r.condition << " on " << r.category << " q=" << r.q << " max-dim " << r.bound << ": " << ok << "/"
       << r.graded_results.size() << " grades pass";
    for (const auto& g : r.graded_results)
        if (!g.pass)
            os << "\n  FAIL " << g.grade << " pi0 " << g.pi0_lhs << " vs " << g.pi0_rhs << " aut "
               << (g.aut_match ? "match" : "differ");
    return os.str();
}

/// "dim,zero" / "dim,onto" / "dim,rank" for a slice class over V.
std::string slice_label(const HallModule& mod, const std::string& s, std::size_t v_dim) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
        if (mod.classes().find(s)) return s;
        throw usage_error("module element must be \"dim,zero\", \"dim,onto\", \"dim,rank\" or a class label, got " + s);
    }
    std::size_t d = 0, r = 0;
    try {
        d = std::stoul(s.substr(0, comma));
        auto kind = s.substr(comma + 1);
        if (kind == "zero") r = 0;
        else if (kind == "onto") r = v_dim;
        else r = std::stoul(kind);
    } catch (const std::logic_error&) {
        throw usage_error("cannot parse module element " + s);
    }
    return mod.class_label(d, r);
}

std::size_t parse_dim(const std::string& s, const std::string& what) {
    std::string t = s;
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error(what + " must be a Vect dimension, got " + s);
    return std::stoul(t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hallforge: Hall algebras from the Waldhausen S-construction over finite fields"};
    app.require_subcommand(1);

    Config cfg;
    std::string lhs, rhs, act, on, v_label;
    std::size_t n = 3, i = 0;
    std::string control = "none";

    auto* product = app.add_subcommand("product", "Hall product of two classes");
    add_common(product, cfg);
    product->add_option("--lhs", lhs, "left class label")->required();
    product->add_option("--rhs", rhs, "right class label")->required();

    auto* table = app.add_subcommand("table", "structure-constant table");
    add_common(table, cfg);

    auto* segal = app.add_subcommand("segal", "2-Segal condition C^n_i");
    add_common(segal, cfg);
    segal->add_option("--n", n, "simplex dimension (3..5)")->required();
    segal->add_option("--i", i, "condition index (0..n-2)")->required();

    auto* corr0 = app.add_subcommand("corr0", "associativity cube through H_comb and S^ext");
    add_common(corr0, cfg);
    corr0->add_option("--n", n, "3 or 4")->required();
    corr0->add_option("--control", control, "negative control: none, split, drop")
        ->check(CLI::IsMember({"none", "split", "drop"}));

    auto* module = app.add_subcommand("module", "action of the Hall algebra on functions over Vect/V");
    add_common(module, cfg);
    module->add_option("--V", v_label, "dimension of V")->required();
    module->add_option("--act", act, "class of the acting element")->required();
    module->add_option("--on", on, "slice class as \"dim,zero\", \"dim,onto\" or \"dim,rank\"")->required();

    auto* check = app.add_subcommand("check", "cross-check every structure constant against the subobject oracle");
    add_common(check, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto spec = category_of(cfg);
        if (product->parsed()) {
            std::size_t fallback = 0;
            if (!cfg.max_dim) {
                // just enough for the two factors
                const auto s1 = FlagSpace::up_to(spec, 1, spec.max_bound());
                for (const auto& l : {lhs, rhs}) {
                    auto c = s1.groupoid()->find(normalize_label(l));
                    if (!c) throw usage_error("unknown class " + normalize_label(l) + " in " + spec.name());
                    fallback += (*s1.groupoid())[*c].weight;
                }
            }
            HallAlgebra alg(spec, bound_of(cfg, spec, fallback));
            auto r = alg.product(alg.delta(normalize_label(lhs)), alg.delta(normalize_label(rhs)));
            auto j = header("product", spec, alg.bound());
            j["lhs"] = normalize_label(lhs);
            j["rhs"] = normalize_label(rhs);
            j["result"] = element_json(r, alg.classes());
            emit(cfg, j, alg.render(r), "text");
            return exit_ok;
        }
        if (table->parsed()) {
            HallAlgebra alg(spec, bound_of(cfg, spec, 3));
            auto j = header("table", spec, alg.bound());
            j["entries"] = json::array();
            std::ostringstream text;
            for (const auto& e : alg.structure_constants()) {
                j["entries"].push_back({{"u", e.u}, {"w", e.w}, {"v", e.v}, {"coeff", rational_json(e.coeff)}});
                text << e.u << " * " << e.w << " -> " << render(HallElement::delta(e.v, e.coeff)) << "\n";
            }
            auto t = text.str();
            if (!t.empty()) t.pop_back();
            emit(cfg, j, t, "json");
            return exit_ok;
        }
        if (segal->parsed()) {
            auto r = two_segal_report(spec, n, i, bound_of(cfg, spec, 3));
            auto j = header("segal", spec, r.bound);
            j.update(segal_json(r));
            emit(cfg, j, segal_text(r), "json");
            return r.pass() ? exit_ok : exit_failed;
        }
        if (corr0->parsed()) {
            const std::size_t bound = bound_of(cfg, spec, 3);
            Corr0Report r;
            if (control == "split") {
                if (n != 3) throw usage_error("the split-center control is defined for n = 3");
                r = corr0_split_center(spec, bound);
            } else if (control == "drop") {
                if (n != 3) throw usage_error("the drop-class control is defined for n = 3");
                r = corr0_drop_center_class(spec, bound);
            } else {
                r = corr0_pipeline(n, spec, bound);
            }
            auto j = header("corr0", spec, bound);
            j["n"] = n;
            j["control"] = control;
            j["commutative"] = r.commutative();
            j["reductions_consistent"] = r.reductions_consistent();
            if (n == 3) j["corners_match_segal"] = r.corners_match_segal();
            j["grades"] = json::array();
            std::size_t ok = 0;
            for (const auto& g : r.grades) {
                json corners = json::array();
                for (const auto& c : g.corners)
                    corners.push_back({{"vertex", c.vertex}, {"pi0_lhs", c.report.pi0_lhs}, {"pi0_rhs", c.report.pi0_rhs},
                                       {"aut_match", c.report.aut_match}, {"pass", c.pass()}});
                j["grades"].push_back({{"grade", g.grade}, {"pass", g.pass()}, {"corners", corners}});
                ok += g.pass();
            }
            std::ostringstream text;
            text << "corr0 n=" << n << " on " << spec.name() << " q=" << cfg.q << " max-dim " << bound
                 << ": commutative: " << (r.commutative() ? "true" : "false") << " (" << ok << "/" << r.grades.size()
                 << " grades)";
            emit(cfg, j, text.str(), "json");
            return r.commutative() ? exit_ok : exit_failed;
        }
        if (module->parsed()) {
            if (spec.kind != CategoryKind::vect) throw usage_error("the module action is implemented over Vect");
            const std::size_t v_dim = parse_dim(v_label, "--V");
            HallModule mod(spec, v_dim, bound_of(cfg, slice_category(spec, v_dim), 3));
            auto f = mod.algebra().delta(normalize_label(act));
            auto m = mod.delta(slice_label(mod, on, v_dim));
            auto r = mod.act(f, m);
            auto j = header("module", slice_category(spec, v_dim), mod.bound());
            j["V"] = v_dim;
            j["act"] = normalize_label(act);
            j["on"] = m.terms().begin()->first;
            j["result"] = element_json(r, mod.classes());
            emit(cfg, j, mod.render(r), "text");
            return exit_ok;
        }
        if (check->parsed()) {
            HallAlgebra alg(spec, bound_of(cfg, spec, 3));
            auto cls = classes_of(alg.objects());
            std::size_t checked = 0;
            json mismatches = json::array();
            for (const auto& u : cls)
                for (const auto& w : cls) {
                    if (u.weight + w.weight > alg.bound()) continue;
                    auto p = alg.product(alg.delta(u.label), alg.delta(w.label));
                    for (const auto& v : cls) {
                        if (v.weight != u.weight + w.weight) continue;
                        ++checked;
                        Rational want(subobject_count_oracle(spec, u, w, v));
                        if (p.coeff(v.label) != want)
                            mismatches.push_back({{"u", u.label}, {"w", w.label}, {"v", v.label},
                                                  {"product", rational_json(p.coeff(v.label))},
                                                  {"oracle", rational_json(want)}});
                    }
                }
            auto j = header("check", spec, alg.bound());
            j["checked"] = checked;
            j["mismatches"] = mismatches;
            j["pass"] = mismatches.empty();
            std::ostringstream text;
            text << "oracle check on " << spec.name() << " q=" << cfg.q << " max-dim " << alg.bound() << ": " << checked
                 << " structure constants, " << mismatches.size() << " mismatches";
            emit(cfg, j, text.str(), "json");
            return mismatches.empty() ? exit_ok : exit_failed;
        }
    } catch (const usage_error& e) {
        std::cerr << "hallforge: " << e.what() << "\n";
        return exit_usage;
    } catch (const bound_exceeded& e) {
        std::cerr << "hallforge: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
