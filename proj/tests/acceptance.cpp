// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "compat_cases.hpp"
#include "fixtures.hpp"
#include "form_oracle.hpp"
#include "tvb/chambers.hpp"
#include "tvb/coxring.hpp"
#include "tvb/hilbert.hpp"
#include "tvb/symspace.hpp"
#include "word_grid.hpp"

using namespace tvb;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < limit_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << elapsed << " s " << (in_time ? "<" : ">=") << " " << limit_seconds
      << " s";
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << v.detail << " (" << t.str() << ")"
              << std::endl;
}

bool on_lattice(const IntVector& x, const Int& c) {
    for (const Int& v : x)
        if (v % c != 0) return false;
    return true;
}

std::map<std::vector<std::size_t>, Chamber> all_chambers(const ToricBundle& tb) {
    std::map<std::vector<std::size_t>, Chamber> out;
    for (const auto& J : enumerate_J(tb.classification())) out.emplace(J, build_chamber(tb, J));
    return out;
}

}  // namespace

int main() {
    const auto words = grid::words(6, 3, 3);

    criterion(1, "dimension formula vs rank oracles", 1.0, [&] {
        long long bad = 0;
        for (const SymWord& w : words) {
            const Int d = dim_word(w);
            if (d != oracle_dim({w})) ++bad;
            if (d != oracle::divisible_forms_dim(static_cast<long long>(w.m()), grid::as_triples(w))) ++bad;
        }
        return Verdict{bad == 0, std::to_string(words.size()) + " words, " + std::to_string(bad) + " mismatches"};
    });

    criterion(2, "multiplication surjectivity", 5.0, [&] {
        long long pairs = 0, bad = 0;
        std::vector<std::pair<const SymWord*, std::vector<IntVector>>> nonzero;
        for (const SymWord& w : words)
            if (dim_word(w) > 0) nonzero.emplace_back(&w, basis_coefficients(w));
        for (const auto& [w1, b1] : nonzero)
            for (const auto& [w2, b2] : nonzero) {
                ++pairs;
                const SymWord prod = multiply_words(*w1, *w2);
                RowSpace span(static_cast<std::size_t>(prod.m()) + 1);
                for (const auto& f : b1)
                    for (const auto& g : b2) span.insert(multiply_coefficients(f, g));
                const auto target = basis_coefficients(prod);
                bool ok = span.rank() == target.size();
                for (const auto& t : target) ok = ok && span.contains(t);
                if (!ok) ++bad;
            }
        return Verdict{bad == 0 && pairs > 0,
                       std::to_string(pairs) + " ordered word pairs, " + std::to_string(bad) +
                           " rank mismatches"};
    });

    const auto bundles = fixtures::all_bundles();

    criterion(3, "chamber cover", 10.0, [&] {
        long long checked = 0, bad = 0;
        std::string witness;
        for (const auto& [name, tb] : bundles) {
            const auto chambers = all_chambers(tb);
            const Int c = veronese_scale(tb.bundle());
            fixtures::for_each_grid_point(tb.degree_dim(), 3 * c, 1, [&](const IntVector& x) {
                const Degree g = Degree::from_flat(x, tb.n());
                if (section_word(tb, g).is_zero()) return;
                ++checked;
                const auto J = find_chamber(tb, g);
                if (!cone_member(chambers.at(J).cone, x)) {
                    if (bad++ == 0) witness = ", first miss " + name + " " + g.str();
                }
            });
        }
        return Verdict{bad == 0, std::to_string(bundles.size()) + " bundles, " + std::to_string(checked) +
                                     " degrees with sections, " + std::to_string(bad) + " uncovered" + witness};
    });

    criterion(4, "nonvanishing on chamber lattice points", 10.0, [&] {
        long long checked = 0, bad = 0;
        std::string witness;
        for (const auto& [name, tb] : bundles) {
            const auto chambers = all_chambers(tb);
            const Int c = veronese_scale(tb.bundle());
            fixtures::for_each_grid_point(tb.degree_dim(), 3 * c, c, [&](const IntVector& x) {
                for (const auto& [J, ch] : chambers) {
                    if (!cone_member(ch.cone, x)) continue;
                    ++checked;
                    const Degree g = Degree::from_flat(x, tb.n());
                    if (graded_dim(tb, g) < 1 && bad++ == 0)
                        witness = ", first zero " + name + " " + to_string(J) + " " + g.str();
                }
            });
        }
        return Verdict{bad == 0, std::to_string(checked) + " (chamber, point) pairs, " + std::to_string(bad) +
                                     " without sections" + witness};
    });

    criterion(5, "Hilbert basis completeness and minimality", 60.0, [&] {
        long long chambers = 0, incomplete = 0, deletions = 0, survived = 0;
        for (const auto& [name, tb] : bundles) {
            const Int c = veronese_scale(tb.bundle());
            for (const auto& [J, ch] : all_chambers(tb)) {
                ++chambers;
                const SemigroupGens g = hilbert_basis(ch.cone, c);
                if (!verify_hilbert(ch.cone, c, g.all(), 4 * c)) ++incomplete;
                for (std::size_t i = 0; i < g.pointed_gens.size(); ++i) {
                    std::vector<IntVector> fewer = g.lineality_gens;
                    for (std::size_t k = 0; k < g.pointed_gens.size(); ++k)
                        if (k != i) fewer.push_back(g.pointed_gens[k]);
                    Int reach = 0;
                    for (const Int& v : g.pointed_gens[i]) reach = std::max(reach, abs_value(v));
                    ++deletions;
                    if (reach > 4 * c || verify_hilbert(ch.cone, c, fewer, reach)) ++survived;
                }
            }
        }
        return Verdict{incomplete == 0 && survived == 0 && deletions > 0,
                       std::to_string(chambers) + " chambers complete within box 4c: " +
                           std::to_string(chambers - incomplete) + "; " + std::to_string(deletions) +
                           " single deletions, " + std::to_string(deletions - survived) + " detected"};
    });

    criterion(6, "generation of the Veronese subring", 120.0, [&] {
        long long degrees = 0, bad = 0, drops = 0, witnessed = 0;
        bool capped = false;
        std::string witness, mutation_witness;
        for (const auto& [name, tb] : bundles) {
            const Int c = veronese_scale(tb.bundle());
            const GeneratorSet gs = generators(tb);
            auto first_failure = [&](const GeneratorSet& set, bool count) -> std::optional<Degree> {
                GenerationVerifier v(tb, set);
                std::optional<Degree> miss;
                fixtures::for_each_grid_point(tb.degree_dim(), 3 * c, c, [&](const IntVector& x) {
                    if (miss && !count) return;
                    const Degree g = Degree::from_flat(x, tb.n());
                    if (graded_dim(tb, g) == 0) return;
                    if (count) ++degrees;
                    if (!v.check(g) && !miss) miss = g;
                });
                capped = capped || (count && v.cap_bound());
                return miss;
            };
            if (const auto miss = first_failure(gs, true)) {
                ++bad;
                if (witness.empty()) witness = ", first failure " + name + " " + miss->str();
            }
            for (std::size_t i = 0; i < gs.entries.size(); ++i) {
                GeneratorSet fewer = gs;
                fewer.entries.erase(fewer.entries.begin() + static_cast<std::ptrdiff_t>(i));
                ++drops;
                if (const auto miss = first_failure(fewer, false)) {
                    if (witnessed++ == 0) mutation_witness = ", e.g. " + name + " witness " + miss->str();
                }
            }
        }
        return Verdict{bad == 0 && witnessed > 0,
                       std::to_string(degrees) + " grid degrees generated, " + std::to_string(bad) +
                           " fixtures failing" + witness + (capped ? " (cap reached)" : "") + "; " +
                           std::to_string(witnessed) + " of " + std::to_string(drops) +
                           " single-entry deletions leave a witness" + mutation_witness};
    });

    criterion(7, "split bundle section count on P1", 5.0, [&] {
        const ToricBundle tb = fixtures::p1_trivial();
        long long cases = 0, bad = 0;
        for (long long m = 0; m <= 4; ++m)
            for (long long m1 = 0; m1 <= 4; ++m1)
                for (long long m2 = 0; m2 <= 4; ++m2) {
                    ++cases;
                    const auto total = total_section_dim(tb, m, make_vector({m1, m2}));
                    // Each weight u in [-m2, m1] contributes the full Sym^m, counted by the form oracle.
                    const long long expected = (m1 + m2 + 1) * oracle::divisible_forms_dim(m, {});
                    if (!total || *total != expected || expected != (m + 1) * (m1 + m2 + 1)) ++bad;
                }
        return Verdict{bad == 0, std::to_string(cases) + " (m, m1, m2) triples, " + std::to_string(bad) + " mismatches"};
    });

    criterion(8, "compatibility vs exhaustive decomposition search", 60.0, [&] {
        compat::Outcome out;
        std::string witness;
        for (const auto& cone : compat::smooth_cones())
            compat::compare_on_cone(cone, 1, out, [&](const std::vector<compat::Choice>& pick) {
                if (!witness.empty()) return;
                std::ostringstream s;
                s << ", first disagreement:";
                for (const auto& c : pick) {
                    s << " (a=" << c.a << ",b=" << c.b;
                    if (c.line) s << ",(" << c.line->first << ":" << c.line->second << ")";
                    s << ")";
                }
                witness = s.str();
            });
        return Verdict{out.disagreements == 0,
                       std::to_string(compat::smooth_cones().size()) + " cones, " + std::to_string(out.cases) +
                           " ray data, " + std::to_string(out.compatible) + " compatible, " +
                           std::to_string(out.disagreements) + " disagreements" + witness};
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
