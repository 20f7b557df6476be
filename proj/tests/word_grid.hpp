// Words Sym^m(V_1^{c_1}, ..., V_q^{c_q}) for m <= 6, at most 3 distinct lines
// from a fixed pool, exponents 1..3.
#pragma once

#include <tuple>
#include <vector>

#include "tvb/symspace.hpp"

namespace grid {

inline std::vector<std::pair<long long, long long>> line_pool() { return {{1, 0}, {0, 1}, {1, 1}, {1, -1}}; }

inline std::vector<tvb::SymWord> words(long long max_m = 6, std::size_t max_lines = 3, long long max_exp = 3) {
    const auto pool = line_pool();
    std::vector<tvb::SymWord> out;
    const std::size_t k = pool.size();
    for (long long m = 0; m <= max_m; ++m) {
        // exponent vector over the pool, 0 meaning the line is absent
        std::vector<long long> e(k, 0);
        for (;;) {
            std::size_t used = 0;
            for (long long x : e) used += x > 0;
            if (used <= max_lines) {
                std::vector<tvb::SymWord::Factor> f;
                for (std::size_t i = 0; i < k; ++i)
                    if (e[i] > 0) f.emplace_back(tvb::Line(pool[i].first, pool[i].second), e[i]);
                out.emplace_back(m, f, tvb::IntVector{});
            }
            std::size_t i = 0;
            while (i < k) {
                if (++e[i] <= max_exp) break;
                e[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return out;
}

inline std::vector<std::tuple<long long, long long, long long>> as_triples(const tvb::SymWord& w) {
    std::vector<std::tuple<long long, long long, long long>> t;
    for (const auto& [line, c] : w.factors())
        t.emplace_back(static_cast<long long>(line.p()), static_cast<long long>(line.q()), static_cast<long long>(c));
    return t;
}

}  // namespace grid
