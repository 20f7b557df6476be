/**
 * @file double_description.hpp
 * @brief H- to V-representation conversion for integer cones.
 *
 * A cone {x : A x >= 0} is split as (pointed part) x (lineality lattice)
 * through a unimodular change of coordinates, and the extreme rays of the
 * pointed part are computed with the double description method.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "tvb/exactalg.hpp"

namespace tvb {

/// Unimodular coordinates x = V y in which the cone reads
/// {y : H y' >= 0} x Z^{N - r}, y' the first r coordinates and H of full
/// column rank (so {y' : H y' >= 0} is pointed).
struct PointedQuotient {
    IntMatrix V;                       ///< N x N, unimodular
    std::size_t rank = 0;              ///< r
    std::vector<IntVector> rows;       ///< H, each of length r
    std::vector<IntVector> lineality;  ///< Hermite basis of the lineality lattice (length N)

    /// x = V (y', 0).
    IntVector lift(const IntVector& reduced) const {
        IntVector y(V.rows());
        for (std::size_t i = 0; i < reduced.size(); ++i) y[i] = reduced[i];
        return V * y;
    }
};

inline PointedQuotient pointed_quotient(const HalfspaceCone& cone) {
    const std::size_t n = cone.ambient_dim();
    const IntMatrix a = cone.matrix();
    // U A^T = H  =>  A U^T = H^T, whose first `rank` columns carry everything.
    const HermiteForm hf = hermite_form(a.transposed());
    PointedQuotient q;
    q.V = hf.U.transposed();
    q.rank = hf.rank;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        IntVector row(q.rank);
        for (std::size_t j = 0; j < q.rank; ++j) row[j] = hf.H(j, i);
        q.rows.push_back(std::move(row));
    }
    std::vector<IntVector> kernel;
    for (std::size_t i = hf.rank; i < n; ++i) kernel.push_back(hf.U.row(i));
    q.lineality = lattice_basis(kernel, n);
    return q;
}

namespace detail {

struct DdRay {
    IntVector v;
    std::vector<char> tight;  // per processed row
};

inline std::size_t rank_of_rows(const std::vector<IntVector>& rows, const std::vector<std::size_t>& idx,
                                std::size_t dim) {
    RowSpace s(dim);
    for (std::size_t i : idx) {
        s.insert(rows[i]);
        if (s.rank() == dim) break;
    }
    return s.rank();
}

}  // namespace detail

/// Primitive extreme rays of the pointed cone {y in R^r : H y >= 0}, with H of
/// full column rank r. Sorted in graded lexicographic order.
inline std::vector<IntVector> pointed_extreme_rays(const std::vector<IntVector>& rows, std::size_t r) {
    if (r == 0) return {};
    // Initial simplicial cone from r independent rows.
    std::vector<std::size_t> basis_rows, rest;
    {
        RowSpace s(r);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (s.rank() < r && s.insert(rows[i]))
                basis_rows.push_back(i);
            else
                rest.push_back(i);
        }
        if (s.rank() < r) throw Error("inequality matrix does not have full column rank");
    }
    std::vector<std::size_t> processed = basis_rows;
    std::vector<detail::DdRay> rays;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<IntVector> others;
        for (std::size_t t = 0; t < r; ++t)
            if (t != k) others.push_back(rows[basis_rows[t]]);
        IntVector v;
        if (others.empty()) {
            v = IntVector{1};
        } else {
            const auto ker = kernel_basis(IntMatrix::from_rows(others, r));
            v = ker.at(0);
        }
        if (dot(rows[basis_rows[k]], v) < 0) v = negated(v);
        detail::DdRay ray{primitive(v), std::vector<char>(r, 1)};
        ray.tight[k] = 0;
        rays.push_back(std::move(ray));
    }

    for (std::size_t ri : rest) {
        const IntVector& l = rows[ri];
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(l, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        std::vector<detail::DdRay> next;
        for (std::size_t i : pos) {
            rays[i].tight.push_back(0);
            next.push_back(rays[i]);
        }
        for (std::size_t i : zero) {
            rays[i].tight.push_back(1);
            next.push_back(rays[i]);
        }
        if (!neg.empty() && !pos.empty()) {
            for (std::size_t p : pos)
                for (std::size_t q : neg) {
                    std::vector<std::size_t> common;
                    for (std::size_t t = 0; t < processed.size(); ++t)
                        if (rays[p].tight[t] && rays[q].tight[t]) common.push_back(processed[t]);
                    if (r >= 2 && common.size() + 2 < r) continue;
                    if (r >= 2 && detail::rank_of_rows(rows, common, r) != r - 2) continue;
                    IntVector v = subtract(scaled(rays[q].v, val[p]), scaled(rays[p].v, val[q]));
                    if (is_zero(v)) continue;
                    detail::DdRay nr{primitive(v), {}};
                    nr.tight.resize(processed.size() + 1);
                    for (std::size_t t = 0; t < processed.size(); ++t)
                        nr.tight[t] = rays[p].tight[t] && rays[q].tight[t];
                    nr.tight[processed.size()] = 1;
                    next.push_back(std::move(nr));
                }
        }
        processed.push_back(ri);
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    for (auto& ray : rays) out.push_back(std::move(ray.v));
    std::sort(out.begin(), out.end(), graded_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// V-description of an arbitrary H-cone: lineality lattice basis plus one
/// lift of each extreme ray of the pointed quotient.
struct ConeGenerators {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};

inline ConeGenerators cone_generators(const HalfspaceCone& cone) {
    const PointedQuotient q = pointed_quotient(cone);
    ConeGenerators g;
    g.lineality = q.lineality;
    for (const IntVector& y : pointed_extreme_rays(q.rows, q.rank))
        g.rays.push_back(reduce_modulo_lattice(q.lift(y), q.lineality));
    std::sort(g.rays.begin(), g.rays.end(), graded_less);
    return g;
}

}  // namespace tvb
