#include "fixloc/toric.hpp"

#include "fixloc/error.hpp"

namespace fixloc {

namespace {

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices.
Integer determinant(std::vector<IntVector> m) {
    const std::size_t n = m.size();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntVector unit(std::size_t dim, std::size_t i, int value = 1) {
    IntVector v(dim, 0);
    v[i] = value;
    return v;
}

} // namespace

FixedPointSet generate_toric(const DelzantPolytope& polytope) {
    const std::size_t dim = polytope.dim;
    std::vector<FixedPoint> points;
    for (const auto& v : polytope.vertices) {
        if (v.position.size() != dim)
            throw InvariantError("vertex '" + v.name + "': expected " + std::to_string(dim) + " coordinates");
        IntVector moment;
        for (const auto& x : v.position) {
            if (boost::multiprecision::denominator(x) != 1)
                throw NonIntegerVertex("vertex '" + v.name + "' has non-integer coordinate " +
                                       to_fraction_string(x));
            moment.push_back(boost::multiprecision::numerator(x));
        }
        if (v.edges.size() != dim)
            throw NotDelzant("vertex '" + v.name + "' has " + std::to_string(v.edges.size()) +
                             " edges, expected " + std::to_string(dim));
        for (const auto& e : v.edges)
            if (e.size() != dim)
                throw InvariantError("vertex '" + v.name + "': edge vector of wrong length");
        Integer det = determinant(v.edges);
        if (abs(det) != 1)
            throw NotDelzant("edges at vertex '" + v.name + "' do not form a basis of Z^" +
                             std::to_string(dim) + " (determinant " + det.str() + ")");
        points.push_back(FixedPoint{v.name, std::move(moment), v.edges});
    }
    return FixedPointSet(dim, dim, std::move(points));
}

DelzantPolytope simplex_polytope(unsigned dilation, std::size_t dim) {
    if (dilation == 0 || dim == 0)
        throw std::invalid_argument("simplex needs dilation >= 1 and dimension >= 1");
    DelzantPolytope poly{dim, {}};
    auto name = [dim](std::size_t i) {
        if (dim == 2)
            return std::string(1, "pqr"[i]);
        return "v" + std::to_string(i);
    };
    PolytopeVertex origin{name(0), RatVector(dim, Rational(0)), {}};
    for (std::size_t j = 0; j < dim; ++j)
        origin.edges.push_back(unit(dim, j));
    poly.vertices.push_back(std::move(origin));
    for (std::size_t i = 0; i < dim; ++i) {
        PolytopeVertex v{name(i + 1), RatVector(dim, Rational(0)), {}};
        v.position[i] = dilation;
        for (std::size_t j = 0; j < dim; ++j)
            v.edges.push_back(j == i ? unit(dim, i, -1) : sub(unit(dim, j), unit(dim, i)));
        poly.vertices.push_back(std::move(v));
    }
    return poly;
}

DelzantPolytope segment_polytope(unsigned dilation) {
    if (dilation == 0)
        throw std::invalid_argument("segment needs dilation >= 1");
    return DelzantPolytope{1,
                           {PolytopeVertex{"s0", {Rational(0)}, {{Integer(1)}}},
                            PolytopeVertex{"s1", {Rational(dilation)}, {{Integer(-1)}}}}};
}

DelzantPolytope product_polytope(const DelzantPolytope& a, const DelzantPolytope& b) {
    const std::size_t dim = a.dim + b.dim;
    DelzantPolytope poly{dim, {}};
    for (const auto& va : a.vertices)
        for (const auto& vb : b.vertices) {
            PolytopeVertex v{va.name + "." + vb.name, va.position, {}};
            v.position.insert(v.position.end(), vb.position.begin(), vb.position.end());
            for (const auto& e : va.edges) {
                IntVector w = e;
                w.resize(dim, 0);
                v.edges.push_back(std::move(w));
            }
            for (const auto& e : vb.edges) {
                IntVector w(a.dim, 0);
                w.insert(w.end(), e.begin(), e.end());
                v.edges.push_back(std::move(w));
            }
            poly.vertices.push_back(std::move(v));
        }
    return poly;
}

} // namespace fixloc
