/**
 * @file cli.hpp
 * @brief The commands behind the `tvb` executable.
 *
 * Every command reads one input document and writes plain text. Exit codes:
 * 0 success, 1 validation or verification failure, 2 usage or parse error.
 */
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tvb/chambers.hpp"
#include "tvb/coxring.hpp"
#include "tvb/hilbert.hpp"
#include "tvb/io.hpp"

namespace tvb::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
    std::string input;
    std::optional<std::string> degree;
    std::optional<long long> grid;
    std::optional<long long> box;
    std::optional<long long> cap;
    std::optional<std::string> output;
    std::optional<std::string> generators;
    bool verbose = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string group_text(const std::vector<std::size_t>& g) { return to_string(g); }

/// Loads and validates the input; on failure prints a message and sets code.
inline std::optional<ToricBundle> load(const Options& opt, std::ostream& err, int& code) {
    InputDocument doc;
    try {
        doc = parse_input(read_file(opt.input));
    } catch (const ParseError& e) {
        err << opt.input << ": " << e.what() << "\n";
        code = kUsage;
        return std::nullopt;
    }
    try {
        return ToricBundle(std::move(doc.fan), std::move(doc.bundle));
    } catch (const Error& e) {
        err << "refusing: " << e.what() << "\n";
        code = kFailed;
        return std::nullopt;
    }
}

}  // namespace detail

inline int validate(const Options& opt, std::ostream& out, std::ostream& err) {
    InputDocument doc;
    try {
        doc = parse_input(detail::read_file(opt.input));
    } catch (const ParseError& e) {
        err << opt.input << ": " << e.what() << "\n";
        return kUsage;
    }
    bool ok = true;
    const auto fan_issues = validate_fan(doc.fan);
    std::string line;
    if (!fan_issues.empty()) {
        ok = false;
        line = "fan: invalid (" + fan_issues.front() + ")";
    } else {
        const bool smooth = is_smooth(doc.fan);
        ok = ok && smooth;
        line = std::string("fan: ok, ") + (smooth ? "smooth" : "not smooth") + ", " +
               (is_simplicial(doc.fan) ? "simplicial" : "not simplicial");
    }
    const auto bundle_issues = validate_bundle(doc.fan, doc.bundle);
    std::optional<RayClassification> cls;
    if (!bundle_issues.empty()) {
        ok = false;
        line += "; bundle: invalid (" + bundle_issues.front() + ")";
    } else if (!fan_issues.empty()) {
        line += "; bundle: not checked";
    } else {
        const CompatibilityResult r = check_compatibility(doc.fan, doc.bundle);
        ok = ok && r.compatible;
        line += r ? "; bundle: compatible" : "; bundle: incompatible at cone " + std::to_string(*r.failing_cone);
        cls = classify_rays(doc.bundle);
        line += "; p=" + std::to_string(cls->line_count());
    }
    out << line << "\n";
    if (cls && opt.verbose) {
        out << "A_0 = " << detail::group_text(cls->groups[0]) << "\n";
        for (std::size_t l = 0; l < cls->line_count(); ++l)
            out << "A_" << l + 1 << " = " << detail::group_text(cls->groups[l + 1]) << "  V_" << l + 1 << " = "
                << cls->lines[l].str() << "\n";
    }
    return ok ? kOk : kFailed;
}

inline int classify(const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    const RayClassification& cls = tb->classification();
    out << "p = " << cls.line_count() << "\n";
    out << "A_0 = " << detail::group_text(cls.groups[0]) << "\n";
    for (std::size_t l = 0; l < cls.line_count(); ++l)
        out << "A_" << l + 1 << " = " << detail::group_text(cls.groups[l + 1]) << "  V_" << l + 1 << " = "
            << cls.lines[l].str() << "\n";
    const auto js = enumerate_J(cls);
    out << "index sets: " << js.size() << "\n";
    if (opt.verbose)
        for (const auto& J : js) out << "  " << to_string(J) << "\n";
    return kOk;
}

inline int dim(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.degree) {
        err << "dim needs --degree u1,...,un;m;m1,...,md\n";
        return kUsage;
    }
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    Degree g;
    try {
        g = parse_degree(*opt.degree, tb->n(), tb->d());
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    const SymWord w = section_word(*tb, g);
    out << dim_word(w) << "\n";
    if (opt.verbose) {
        out << "word: " << w.str() << "\n";
        if (dim_word(w) > 0)
            for (const BinaryForm& f : basis_word(w)) out << "  " << to_string(f) << "\n";
    }
    return kOk;
}

inline int chambers(const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    if (opt.degree) {
        Degree g;
        try {
            g = parse_degree(*opt.degree, tb->n(), tb->d());
        } catch (const ParseError& e) {
            err << e.what() << "\n";
            return kUsage;
        }
        if (section_word(*tb, g).is_zero()) {
            out << "degree " << g.str() << " has no sections; no chamber\n";
            return kOk;
        }
        out << build_chamber(*tb, find_chamber(*tb, g)).str();
        return kOk;
    }
    bool first = true;
    for (const auto& J : enumerate_J(tb->classification())) {
        if (!first) out << "\n";
        first = false;
        out << build_chamber(*tb, J).str();
    }
    return kOk;
}

inline int hilbert(const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    const Int c = veronese_scale(tb->bundle());
    out << "c = " << c << "\n";
    bool ok = true;
    for (const auto& J : enumerate_J(tb->classification())) {
        const Chamber ch = build_chamber(*tb, J);
        const SemigroupGens g = hilbert_basis(ch.cone, c);
        out << "J = " << to_string(J) << ": " << g.lineality_gens.size() << " lineality, " << g.pointed_gens.size()
            << " pointed\n";
        if (opt.verbose) {
            for (const auto& x : g.lineality_gens) out << "  L " << to_string(x) << "\n";
            for (const auto& x : g.pointed_gens) out << "  P " << to_string(x) << "\n";
        }
        if (opt.box) {
            const auto miss = find_unreachable(ch.cone, c, g.all(), Int(*opt.box));
            out << "  completeness within box " << *opt.box << ": "
                << (miss ? "FAIL, unreachable " + to_string(*miss) : std::string("pass")) << "\n";
            ok = ok && !miss;
        }
    }
    return ok ? kOk : kFailed;
}

inline int generators(const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    if (!is_smooth(tb->fan())) {
        err << "refusing: generator certification requires a smooth fan (resolve the singular cones first)\n";
        return kFailed;
    }
    const GenerationRun run = generators_with_summary(*tb);
    const std::string doc = print_generators(run.set);
    std::ostream& summary = opt.output ? out : err;
    if (opt.output) {
        std::ofstream file(*opt.output, std::ios::binary);
        if (!file) {
            err << "cannot write '" << *opt.output << "'\n";
            return kUsage;
        }
        file << doc;
    } else {
        out << doc;
    }
    summary << "c = " << run.set.scale << "\n";
    summary << "index sets: " << run.chambers.size() << "\n";
    for (const ChamberSummary& s : run.chambers)
        summary << "  J = " << to_string(s.J) << ": " << s.lineality_gens << " lineality + " << s.pointed_gens
                << " pointed\n";
    summary << "generators: " << run.set.entries.size() << " degrees, " << run.set.form_count() << " forms\n";
    return kOk;
}

inline int verify(const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kOk;
    const auto tb = detail::load(opt, err, code);
    if (!tb) return code;
    if (!is_smooth(tb->fan())) {
        err << "refusing: generator certification requires a smooth fan (resolve the singular cones first)\n";
        return kFailed;
    }
    const Int c = veronese_scale(tb->bundle());
    const Int grid = opt.grid ? Int(*opt.grid) : 3 * c;
    const Int box = opt.box ? Int(*opt.box) : 4 * c;
    const Int cap = opt.cap ? Int(*opt.cap) : Int(10);
    if (grid < 0 || box < 0 || cap < 0) {
        err << "bounds must be nonnegative\n";
        return kUsage;
    }
    out << "bounds: grid " << grid << ", box " << box << ", cap " << cap << ", c = " << c << "\n";
    if (grid == 0) out << "warning: grid bound 0 leaves only the zero degree; grid suites are vacuous\n";

    GeneratorSet gens;
    if (opt.generators) {
        try {
            gens = parse_generators(detail::read_file(*opt.generators));
        } catch (const ParseError& e) {
            err << *opt.generators << ": " << e.what() << "\n";
            return kUsage;
        }
    } else {
        gens = tvb::generators(*tb);
    }
    bool ok = true;
    auto report = [&](const std::string& suite, const std::optional<std::string>& witness, const std::string& note) {
        if (witness) {
            out << "FAIL " << suite << ": " << *witness << "\n";
            ok = false;
        } else {
            out << "pass " << suite << note << "\n";
        }
    };

    const auto issues = check_generator_set(*tb, gens);
    report("generator set consistency", issues.empty() ? std::nullopt : std::optional<std::string>(issues.front()), "");

    std::map<std::vector<std::size_t>, Chamber> chambers;
    for (const auto& J : enumerate_J(tb->classification())) chambers.emplace(J, build_chamber(*tb, J));

    const std::size_t dimension = tb->degree_dim();
    auto for_grid = [&](const Int& step, auto&& visit) {
        const Int top = grid / step * step;
        IntVector x(dimension, -top);
        for (;;) {
            if (!visit(x)) return;
            std::size_t i = 0;
            while (i < dimension) {
                x[i] += step;
                if (x[i] <= top) break;
                x[i] = -top;
                ++i;
            }
            if (i == dimension) return;
        }
    };

    std::optional<std::string> witness;
    long long count = 0;
    for_grid(Int(1), [&](const IntVector& x) {
        const Degree g = Degree::from_flat(x, tb->n());
        if (section_word(*tb, g).is_zero()) return true;
        ++count;
        const auto J = find_chamber(*tb, g);
        if (cone_member(chambers.at(J).cone, x)) return true;
        witness = "degree " + g.str() + " not in chamber " + to_string(J);
        return false;
    });
    report("chamber cover", witness, " (" + std::to_string(count) + " degrees)");

    witness.reset();
    count = 0;
    for_grid(c, [&](const IntVector& x) {
        for (const auto& [J, ch] : chambers) {
            if (!cone_member(ch.cone, x)) continue;
            ++count;
            const Degree g = Degree::from_flat(x, tb->n());
            if (graded_dim(*tb, g) < 1) {
                witness = "degree " + g.str() + " in chamber " + to_string(J) + " has no sections";
                return false;
            }
        }
        return true;
    });
    report("nonvanishing", witness, " (" + std::to_string(count) + " chamber points)");

    witness.reset();
    for (const auto& [J, ch] : chambers) {
        const auto miss = find_unreachable(ch.cone, c, hilbert_basis(ch.cone, c).all(), box);
        if (miss) {
            witness = "chamber " + to_string(J) + " point " + to_string(*miss) + " not generated";
            break;
        }
    }
    report("hilbert completeness", witness, " (" + std::to_string(chambers.size()) + " chambers)");

    witness.reset();
    count = 0;
    bool capped = false;
    {
        try {
            GenerationVerifier v(*tb, gens, GenerationOptions{cap});
            for_grid(c, [&](const IntVector& x) {
                const Degree g = Degree::from_flat(x, tb->n());
                if (graded_dim(*tb, g) == 0) return true;
                ++count;
                const Int got = v.achieved_rank(g);
                const Int want = graded_dim(*tb, g);
                if (got == want) return true;
                witness = "degree " + g.str() + " spans " + got.str() + " of " + want.str() + " dimensions";
                return false;
            });
            capped = v.cap_bound();
        } catch (const Error& e) {
            witness = e.what();
        }
    }
    report("generation", witness, " (" + std::to_string(count) + " degrees)");
    if (capped) out << "warning: the unit-degree cap " << cap << " was reached; raise --cap to search further\n";
    return ok ? kOk : kFailed;
}

inline int dispatch(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        if (command == "validate") return validate(opt, out, err);
        if (command == "classify") return classify(opt, out, err);
        if (command == "dim") return dim(opt, out, err);
        if (command == "chambers") return chambers(opt, out, err);
        if (command == "hilbert") return hilbert(opt, out, err);
        if (command == "generators") return generators(opt, out, err);
        if (command == "verify") return verify(opt, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    err << "unknown command '" << command << "'\n";
    return kUsage;
}

}  // namespace tvb::cli
