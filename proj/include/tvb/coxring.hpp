/**
 * @file coxring.hpp
 * @brief Finite generating sets for the Veronese subring R^(c) of the Cox ring
 * of P(E), and a degree-by-degree verifier for them.
 *
 * R is graded by (u, m, mvec) in M x Z x Z^d and R_(u,m,mvec) is identified
 * with its image under evaluation at the identity of the torus, a subspace of
 * Sym^m E (x) L_mvec. Products of sections become products of binary forms.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvb/bundle.hpp"
#include "tvb/chambers.hpp"
#include "tvb/double_description.hpp"
#include "tvb/exactalg.hpp"
#include "tvb/fan.hpp"
#include "tvb/hilbert.hpp"
#include "tvb/symspace.hpp"

namespace tvb {

struct GeneratorEntry {
    Degree degree;
    SymWord word;
    std::vector<BinaryForm> basis;
};

/// The union over chambers Q_J of the k-bases of R_g, g running over the
/// semigroup generators of Q_J ∩ c·(M x Z^{d+1}).
struct GeneratorSet {
    Int scale = 1;
    std::vector<GeneratorEntry> entries;

    std::size_t form_count() const {
        std::size_t k = 0;
        for (const auto& e : entries) k += e.basis.size();
        return k;
    }
};

struct ChamberSummary {
    std::vector<std::size_t> J;
    std::size_t lineality_gens = 0;
    std::size_t pointed_gens = 0;
};

struct GenerationRun {
    GeneratorSet set;
    std::vector<ChamberSummary> chambers;
};

inline Int graded_dim(const ToricBundle& tb, const Degree& g) { return dim_word(section_word(tb, g)); }

inline GenerationRun generators_with_summary(const ToricBundle& tb) {
    if (!is_smooth(tb.fan()))
        throw Error("generator certification requires a smooth fan (resolve the singular cones first)");
    const Int c = veronese_scale(tb.bundle());
    GenerationRun run;
    run.set.scale = c;
    std::map<IntVector, GeneratorEntry> by_degree;
    for (const auto& J : enumerate_J(tb.classification())) {
        const Chamber ch = build_chamber(tb, J);
        const SemigroupGens gens = hilbert_basis(ch.cone, c);
        run.chambers.push_back({J, gens.lineality_gens.size(), gens.pointed_gens.size()});
        for (const IntVector& x : gens.all()) {
            if (by_degree.count(x)) continue;
            Degree g = Degree::from_flat(x, tb.n());
            SymWord w = section_word(tb, g);
            if (w.is_zero()) continue;
            std::vector<BinaryForm> basis = basis_word(w);
            by_degree.emplace(x, GeneratorEntry{std::move(g), std::move(w), std::move(basis)});
        }
    }
    std::vector<IntVector> keys;
    for (const auto& kv : by_degree) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), graded_less);
    for (const IntVector& k : keys) run.set.entries.push_back(std::move(by_degree.at(k)));
    return run;
}

inline GeneratorSet generators(const ToricBundle& tb) { return generators_with_summary(tb).set; }

/// Consistency problems of a (possibly externally supplied) generator set.
inline std::vector<std::string> check_generator_set(const ToricBundle& tb, const GeneratorSet& gs) {
    std::vector<std::string> issues;
    if (gs.scale <= 0) issues.push_back("scale must be positive");
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < gs.entries.size(); ++i) {
        const GeneratorEntry& e = gs.entries[i];
        const std::string name = "entry " + std::to_string(i);
        if (e.degree.u.size() != tb.n() || e.degree.mvec.size() != tb.d()) {
            issues.push_back(name + ": degree has the wrong shape");
            continue;
        }
        const IntVector x = e.degree.flat();
        if (!seen.insert(x).second) issues.push_back(name + ": duplicate degree " + e.degree.str());
        if (gs.scale > 0)
            for (const Int& v : x)
                if (v % gs.scale != 0) {
                    issues.push_back(name + ": degree " + e.degree.str() + " not in the scaled lattice");
                    break;
                }
        const SymWord expected = section_word(tb, e.degree);
        if (!(expected == e.word)) issues.push_back(name + ": word differs from the section space " + expected.str());
        if (!expected.is_zero() && e.basis != basis_word(expected))
            issues.push_back(name + ": basis differs from the word's basis");
    }
    return issues;
}

struct GenerationOptions {
    /// Largest |coefficient| allowed on each unit-degree generator pair.
    Int cap = 10;
};

/// Reusable verifier: spans of products of generator bases are memoized per
/// degree, so checking a whole grid shares the work.
class GenerationVerifier {
public:
    GenerationVerifier(const ToricBundle& tb, const GeneratorSet& gs, GenerationOptions opts = {})
        : tb_(tb), scale_(gs.scale), opts_(std::move(opts)) {
        if (scale_ <= 0) throw Error("generator set scale must be positive");
        std::set<IntVector> zero_weight;
        std::vector<std::pair<IntVector, std::vector<IntVector>>> positive;
        for (const GeneratorEntry& e : gs.entries) {
            if (e.word.is_zero() || e.basis.empty()) continue;
            const IntVector x = e.degree.flat();
            const Int w = weight(x);
            if (w > 0) {
                Gen g{x, static_cast<std::size_t>(e.degree.m), w, {}};
                for (const BinaryForm& f : e.basis) g.forms.push_back(f.integer_coefficients());
                gens_.push_back(std::move(g));
            } else if (w == 0) {
                zero_weight.insert(x);
            }
        }
        std::vector<IntVector> paired, one_sided;
        for (const IntVector& x : zero_weight) {
            const IntVector neg = negated(x);
            if (zero_weight.count(neg)) {
                if (neg < x) paired.push_back(x);
            } else {
                one_sided.push_back(x);
            }
        }
        unit_lattice_ = lattice_basis(paired, tb.degree_dim());
        build_leaves(paired, one_sided);
    }

    /// Whether the products of generator bases span R_g. Vacuously true when R_g = 0.
    bool check(const Degree& g) { return achieved_rank(g) == graded_dim(tb_, g); }

    /// Rank of the span of all products of generator bases landing in degree g.
    Int achieved_rank(const Degree& g) {
        const IntVector x = g.flat();
        if (x.size() != tb_.degree_dim()) throw Error("degree " + g.str() + " has the wrong shape");
        for (const Int& v : x)
            if (v % scale_ != 0)
                throw Error("degree " + g.str() + " is not in the lattice scaled by " + scale_.str());
        return static_cast<long long>(span(x).size());
    }

    /// True once some unit-degree target was reachable only beyond the cap.
    bool cap_bound() const { return cap_bound_; }

private:
    struct Gen {
        IntVector degree;
        std::size_t m;
        Int weight;
        std::vector<IntVector> forms;
    };

    /// m + sum_j (mvec_j - <u, v_j> + b_j m): nonnegative on every degree with
    /// nonzero sections and zero exactly on the unit degrees (u, 0, (<u, v_j>)_j).
    Int weight(const IntVector& x) const {
        const std::size_t n = tb_.n();
        const Int& m = x[n];
        Int w = m;
        for (std::size_t j = 0; j < tb_.d(); ++j) {
            Int uv = 0;
            for (std::size_t i = 0; i < n; ++i) uv += x[i] * tb_.fan().rays[j][i];
            w += x[n + 1 + j] - uv + tb_.filtration(j).b * m;
        }
        return w;
    }

    void build_leaves(const std::vector<IntVector>& paired, const std::vector<IntVector>& one_sided) {
        std::vector<std::pair<IntVector, Int>> units;  // vector, lower coefficient bound
        for (const auto& p : paired) units.emplace_back(p, -opts_.cap);
        for (const auto& p : one_sided) units.emplace_back(p, Int(0));
        Int combos = 1;
        for (const auto& u : units) combos *= (opts_.cap - u.second + 1);
        if (combos > 2000000) throw Error("too many unit-degree combinations under the participation cap");
        leaves_.insert(IntVector(tb_.degree_dim()));
        std::vector<IntVector> frontier{IntVector(tb_.degree_dim())};
        for (const auto& [vec, lo] : units) {
            std::vector<IntVector> next;
            for (const IntVector& base : frontier)
                for (Int z = lo; z <= opts_.cap; ++z) next.push_back(add(base, scaled(vec, z)));
            frontier = std::move(next);
        }
        leaves_.insert(frontier.begin(), frontier.end());
    }

    const std::vector<IntVector>& span(const IntVector& x) {
        auto it = memo_.find(x);
        if (it != memo_.end()) return it->second;
        const Degree g = Degree::from_flat(x, tb_.n());
        std::vector<IntVector> rows;
        const SymWord w = section_word(tb_, g);
        if (!w.is_zero()) {
            const std::size_t m = static_cast<std::size_t>(g.m);
            const std::size_t target = static_cast<std::size_t>(dim_word(w));
            RowSpace s(m + 1);
            const Int wx = weight(x);
            if (wx == 0) {
                if (leaves_.count(x))
                    s.insert(IntVector{1});
                else if (!unit_lattice_.empty() && is_zero(reduce_modulo_lattice(x, unit_lattice_)))
                    cap_bound_ = true;
            }
            for (const Gen& h : gens_) {
                if (s.rank() == target) break;
                if (h.weight > wx || h.m > m) continue;
                const std::vector<IntVector> rest = span(subtract(x, h.degree));
                for (const IntVector& f : h.forms) {
                    for (const IntVector& r : rest) {
                        s.insert(multiply_coefficients(f, r));
                        if (s.rank() == target) break;
                    }
                    if (s.rank() == target) break;
                }
            }
            rows = s.rows();
        }
        return memo_.emplace(x, std::move(rows)).first->second;
    }

    const ToricBundle& tb_;
    Int scale_;
    GenerationOptions opts_;
    std::vector<Gen> gens_;
    std::vector<IntVector> unit_lattice_;
    std::set<IntVector> leaves_;
    std::map<IntVector, std::vector<IntVector>> memo_;
    bool cap_bound_ = false;
};

inline bool verify_generation(const ToricBundle& tb, const GeneratorSet& gs, const Degree& g,
                              GenerationOptions opts = {}) {
    GenerationVerifier v(tb, gs, std::move(opts));
    return v.check(g);
}

/// Sum over u of dim R_(u, m, mvec); nullopt when the rays do not positively
/// span N_R and the u-support is unbounded.
inline std::optional<Int> total_section_dim(const ToricBundle& tb, const Int& m, const IntVector& mvec) {
    if (mvec.size() != tb.d()) throw Error("twist has the wrong length");
    if (!rays_positively_span(tb.fan())) return std::nullopt;
    if (m < 0) return Int(0);
    const std::size_t n = tb.n();
    // Nonzero sections need lambda_j <= m, i.e. <u, v_j> <= b_j m + mvec_j.
    std::vector<IntVector> rows;
    IntVector t_row(n + 1);
    t_row[n] = 1;
    rows.push_back(t_row);
    for (std::size_t j = 0; j < tb.d(); ++j) {
        IntVector row = negated(tb.fan().rays[j]);
        row.push_back(tb.filtration(j).b * m + mvec[j]);
        rows.push_back(std::move(row));
    }
    const ConeGenerators cg = cone_generators(HalfspaceCone(n + 1, rows));
    if (!cg.lineality.empty()) throw Error("bounding polytope is unexpectedly unbounded");
    std::vector<Int> lo(n), hi(n);
    bool any = false;
    for (const IntVector& r : cg.rays) {
        if (r[n] <= 0) throw Error("bounding polytope is unexpectedly unbounded");
        for (std::size_t i = 0; i < n; ++i) {
            const Int f = floor_div(r[i], r[n]), c = ceil_div(r[i], r[n]);
            if (!any || f < lo[i]) lo[i] = f;
            if (!any || c > hi[i]) hi[i] = c;
        }
        any = true;
    }
    if (!any) return Int(0);
    Int total = 0;
    IntVector u = lo;
    for (;;) {
        total += graded_dim(tb, Degree{u, m, mvec});
        std::size_t i = 0;
        while (i < n) {
            if (++u[i] <= hi[i]) break;
            u[i] = lo[i];
            ++i;
        }
        if (i == n) break;
    }
    return total;
}

}  // namespace tvb
