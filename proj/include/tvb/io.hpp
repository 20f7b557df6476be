/**
 * @file io.hpp
 * @brief JSON documents: the fan/bundle input and the generator set output.
 *
 * Input:
 *
 *     {"fan": {"n": 1, "rays": [[1], [-1]], "cones": [[0], [1]]},
 *      "bundle": {"filtrations": [{"a": 0, "b": 1, "line": null},
 *                                 {"a": 0, "b": 1, "line": [1, 1]}]}}
 *
 * Integers may be JSON numbers or decimal strings (for values beyond 64 bits).
 */
#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvb/bundle.hpp"
#include "tvb/coxring.hpp"
#include "tvb/exactalg.hpp"
#include "tvb/fan.hpp"

namespace tvb {

/// Malformed document; the message carries a line:column or a JSON path.
class ParseError : public Error {
public:
    using Error::Error;
};

struct InputDocument {
    Fan fan;
    RankTwoBundle bundle;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

using json = nlohmann::json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // "[json.exception.parse_error.101] parse error at line L, column C: ..."
        const std::string what = e.what();
        const auto at = what.find("parse error");
        throw ParseError(at == std::string::npos ? what : what.substr(at));
    }
}

inline const json& member(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + ": missing \"" + key + "\"");
    return *it;
}

inline Int to_int(const json& v, const std::string& path) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Int(v.get<unsigned long long>()) : Int(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        bool ok = s.size() > start;
        for (std::size_t i = start; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
        if (ok) return Int(s);
    }
    throw ParseError(path + ": expected an integer");
}

inline std::size_t to_index(const json& v, const std::string& path) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
        throw ParseError(path + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline const json& array_at(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path + ": expected an array");
    return v;
}

inline IntVector to_int_vector(const json& v, const std::string& path) {
    IntVector out;
    std::size_t i = 0;
    for (const json& x : array_at(v, path)) out.push_back(to_int(x, path + "[" + std::to_string(i++) + "]"));
    return out;
}

inline json from_int(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(x));
    return json(x.str());
}

inline json from_int_vector(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(from_int(x));
    return a;
}

}  // namespace detail

/// Shape errors (wrong types, ray lengths, missing keys) are ParseErrors;
/// mathematical validity is left to validate_fan / validate_bundle.
inline InputDocument parse_input(const std::string& text) {
    using detail::json;
    const json doc = detail::parse_json(text);
    InputDocument out;
    const json& fan = detail::member(doc, "fan", "document");
    const Int n = detail::to_int(detail::member(fan, "n", "fan"), "fan.n");
    if (n < 1) throw ParseError("fan.n: lattice rank must be positive");
    out.fan.n = static_cast<std::size_t>(n);
    const json& rays = detail::array_at(detail::member(fan, "rays", "fan"), "fan.rays");
    for (std::size_t j = 0; j < rays.size(); ++j) {
        const std::string path = "fan.rays[" + std::to_string(j) + "]";
        IntVector v = detail::to_int_vector(rays[j], path);
        if (v.size() != out.fan.n)
            throw ParseError(path + ": expected " + std::to_string(out.fan.n) + " entries, got " +
                             std::to_string(v.size()));
        out.fan.rays.push_back(std::move(v));
    }
    const json& cones = detail::array_at(detail::member(fan, "cones", "fan"), "fan.cones");
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const std::string path = "fan.cones[" + std::to_string(c) + "]";
        std::vector<std::size_t> cone;
        std::size_t i = 0;
        for (const json& x : detail::array_at(cones[c], path))
            cone.push_back(detail::to_index(x, path + "[" + std::to_string(i++) + "]"));
        out.fan.cones.push_back(std::move(cone));
    }
    const json& bundle = detail::member(doc, "bundle", "document");
    const json& filts = detail::array_at(detail::member(bundle, "filtrations", "bundle"), "bundle.filtrations");
    for (std::size_t j = 0; j < filts.size(); ++j) {
        const std::string path = "bundle.filtrations[" + std::to_string(j) + "]";
        RayFiltration r;
        r.a = detail::to_int(detail::member(filts[j], "a", path), path + ".a");
        r.b = detail::to_int(detail::member(filts[j], "b", path), path + ".b");
        auto it = filts[j].find("line");
        if (it != filts[j].end() && !it->is_null()) {
            const IntVector pq = detail::to_int_vector(*it, path + ".line");
            if (pq.size() != 2) throw ParseError(path + ".line: expected [p, q]");
            if (pq[0] == 0 && pq[1] == 0) throw ParseError(path + ".line: (0, 0) does not span a line");
            r.line = Line(pq[0], pq[1]);
        }
        out.bundle.filtrations.push_back(std::move(r));
    }
    return out;
}

inline std::string print_input(const InputDocument& doc) {
    using detail::json;
    json rays = json::array(), cones = json::array(), filts = json::array();
    for (const IntVector& v : doc.fan.rays) rays.push_back(detail::from_int_vector(v));
    for (const auto& c : doc.fan.cones) cones.push_back(c);
    for (const RayFiltration& r : doc.bundle.filtrations) {
        json f = {{"a", detail::from_int(r.a)}, {"b", detail::from_int(r.b)}, {"line", nullptr}};
        if (r.line) f["line"] = json::array({detail::from_int(r.line->p()), detail::from_int(r.line->q())});
        filts.push_back(std::move(f));
    }
    const json out = {{"fan", {{"n", doc.fan.n}, {"rays", rays}, {"cones", cones}}},
                      {"bundle", {{"filtrations", filts}}}};
    return out.dump(2) + "\n";
}

inline std::string print_generators(const GeneratorSet& gs) {
    using detail::json;
    json entries = json::array();
    for (const GeneratorEntry& e : gs.entries) {
        json factors = json::array();
        for (const auto& [line, exp] : e.word.factors())
            factors.push_back({{"line", json::array({detail::from_int(line.p()), detail::from_int(line.q())})},
                               {"exp", detail::from_int(exp)}});
        json basis = json::array();
        for (const BinaryForm& f : e.basis) {
            json coeffs = json::array();
            for (const Rational& c : f.coefficients) coeffs.push_back(to_string(c));
            basis.push_back(std::move(coeffs));
        }
        entries.push_back({{"degree",
                            {{"u", detail::from_int_vector(e.degree.u)},
                             {"m", detail::from_int(e.degree.m)},
                             {"mvec", detail::from_int_vector(e.degree.mvec)}}},
                           {"word",
                            {{"m", detail::from_int(e.word.m())},
                             {"factors", factors},
                             {"twist", detail::from_int_vector(e.word.twist())}}},
                           {"basis", basis}});
    }
    const json out = {{"scale", detail::from_int(gs.scale)}, {"entries", entries}};
    return out.dump(2) + "\n";
}

/// Inverse of print_generators. A word with "zero": true stands for ZERO.
inline GeneratorSet parse_generators(const std::string& text) {
    using detail::json;
    const json doc = detail::parse_json(text);
    GeneratorSet gs;
    gs.scale = detail::to_int(detail::member(doc, "scale", "document"), "scale");
    const json& entries = detail::array_at(detail::member(doc, "entries", "document"), "entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "entries[" + std::to_string(i) + "]";
        const json& d = detail::member(entries[i], "degree", path);
        Degree g{detail::to_int_vector(detail::member(d, "u", path + ".degree"), path + ".degree.u"),
                 detail::to_int(detail::member(d, "m", path + ".degree"), path + ".degree.m"),
                 detail::to_int_vector(detail::member(d, "mvec", path + ".degree"), path + ".degree.mvec")};
        const json& w = detail::member(entries[i], "word", path);
        SymWord word = SymWord::zero();
        if (!(w.is_object() && w.value("zero", false))) {
            std::vector<SymWord::Factor> factors;
            const json& fs = detail::array_at(detail::member(w, "factors", path + ".word"), path + ".word.factors");
            for (std::size_t k = 0; k < fs.size(); ++k) {
                const std::string fp = path + ".word.factors[" + std::to_string(k) + "]";
                const IntVector pq = detail::to_int_vector(detail::member(fs[k], "line", fp), fp + ".line");
                if (pq.size() != 2 || (pq[0] == 0 && pq[1] == 0)) throw ParseError(fp + ".line: expected [p, q]");
                factors.emplace_back(Line(pq[0], pq[1]), detail::to_int(detail::member(fs[k], "exp", fp), fp + ".exp"));
            }
            try {
                word = SymWord(detail::to_int(detail::member(w, "m", path + ".word"), path + ".word.m"),
                               std::move(factors),
                               detail::to_int_vector(detail::member(w, "twist", path + ".word"), path + ".word.twist"));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(path + ".word: " + e.what());
            }
        }
        std::vector<BinaryForm> basis;
        const json& bs = detail::array_at(detail::member(entries[i], "basis", path), path + ".basis");
        for (std::size_t k = 0; k < bs.size(); ++k) {
            const std::string bp = path + ".basis[" + std::to_string(k) + "]";
            std::vector<Rational> coeffs;
            for (const json& c : detail::array_at(bs[k], bp)) {
                if (!c.is_string() && !c.is_number_integer()) throw ParseError(bp + ": expected \"p/q\" strings");
                try {
                    coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(detail::to_int(c, bp)));
                } catch (const ParseError&) {
                    throw;
                } catch (const Error& e) {
                    throw ParseError(bp + ": " + e.what());
                }
            }
            if (coeffs.empty()) throw ParseError(bp + ": empty form");
            basis.emplace_back(coeffs.size() - 1, std::move(coeffs));
        }
        gs.entries.push_back({std::move(g), std::move(word), std::move(basis)});
    }
    return gs;
}

/// Parses "u1,...,un;m;m1,...,md". Throws ParseError on bad syntax or shape.
inline Degree parse_degree(const std::string& text, std::size_t n, std::size_t d) {
    std::vector<std::string> groups{""};
    for (char ch : text) {
        if (ch == ';')
            groups.emplace_back();
        else if (ch != ' ')
            groups.back() += ch;
    }
    if (groups.size() != 3) throw ParseError("degree '" + text + "': expected three ';'-separated groups u;m;mvec");
    auto ints = [&](const std::string& g) {
        IntVector out;
        if (g.empty()) return out;
        std::string cur;
        for (std::size_t i = 0; i <= g.size(); ++i) {
            if (i == g.size() || g[i] == ',') {
                try {
                    out.push_back(detail::to_int(detail::json(cur), "degree"));
                } catch (const ParseError&) {
                    throw ParseError("degree '" + text + "': '" + cur + "' is not an integer");
                }
                cur.clear();
            } else {
                cur += g[i];
            }
        }
        return out;
    };
    const IntVector u = ints(groups[0]), m = ints(groups[1]), mvec = ints(groups[2]);
    if (u.size() != n) throw ParseError("degree '" + text + "': u needs " + std::to_string(n) + " entries");
    if (m.size() != 1) throw ParseError("degree '" + text + "': m must be a single integer");
    if (mvec.size() != d) throw ParseError("degree '" + text + "': mvec needs " + std::to_string(d) + " entries");
    return Degree{u, m[0], mvec};
}

}  // namespace tvb
