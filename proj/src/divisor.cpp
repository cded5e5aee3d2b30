#include "temperley/divisor.hpp"

#include <numeric>

namespace temperley {

long Divisor::degree() const {
    return std::accumulate(coefficients.begin(), coefficients.end(), 0l);
}

Divisor Divisor::operator+(const Divisor& rhs) const {
    require(coefficients.size() == rhs.coefficients.size(), Errc::DimensionMismatch,
            "divisors on different vertex sets");
    Divisor out{*this};
    for (size_t i = 0; i < coefficients.size(); ++i) out.coefficients[i] += rhs.coefficients[i];
    return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const {
    require(coefficients.size() == rhs.coefficients.size(), Errc::DimensionMismatch,
            "divisors on different vertex sets");
    Divisor out{*this};
    for (size_t i = 0; i < coefficients.size(); ++i) out.coefficients[i] -= rhs.coefficients[i];
    return out;
}

IntegerMatrix laplacian(const EmbeddedPlanarGraph& g) {
    const int n = g.vertex_count();
    IntegerMatrix m(n, n);
    for (auto [u, v] : g.structure().edges()) {
        m.at(u, u) += 1;
        m.at(v, v) += 1;
        m.at(u, v) -= 1;
        m.at(v, u) -= 1;
    }
    return m;
}

IntegerMatrix reduced_laplacian(const EmbeddedPlanarGraph& g) {
    IntegerMatrix full = laplacian(g);
    const int n = g.vertex_count(), q = g.root();
    IntegerMatrix m(n - 1, n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
        if (i == q) continue;
        for (int j = 0, rj = 0; j < n; ++j) {
            if (j == q) continue;
            m.at(ri, rj) = full.at(i, j);
            ++rj;
        }
        ++ri;
    }
    return m;
}

Divisor chip_fire(const EmbeddedPlanarGraph& g, const Divisor& d, int vertex) {
    require(vertex >= 0 && vertex < g.vertex_count(), Errc::UnknownVertex,
            "chip_fire vertex out of range");
    require(int(d.coefficients.size()) == g.vertex_count(), Errc::DimensionMismatch,
            "divisor size");
    Divisor out{d};
    for (auto [u, v] : g.structure().edges()) {
        if (u == vertex) {
            out.coefficients[u] -= 1;
            out.coefficients[v] += 1;
        } else if (v == vertex) {
            out.coefficients[v] -= 1;
            out.coefficients[u] += 1;
        }
    }
    return out;
}

Int spanning_tree_count(const EmbeddedPlanarGraph& g) {
    return abs(determinant(reduced_laplacian(g)));
}

std::vector<Int> jacobian_structure(const EmbeddedPlanarGraph& g) {
    return smith_normal_form(reduced_laplacian(g)).nontrivial_factors();
}

JacobianContext::JacobianContext(const EmbeddedPlanarGraph& g)
    : graph_(&g), reduced_(reduced_laplacian(g)), full_(laplacian(g)) {}

JacobianElement JacobianContext::class_of(const Divisor& d) const {
    require(int(d.coefficients.size()) == graph_->vertex_count(), Errc::DimensionMismatch,
            "divisor size");
    require(d.degree() == 0, Errc::BadReferenceDegree, "jacobian classes need degree-0 divisors");
    std::vector<Int> restricted;
    restricted.reserve(graph_->vertex_count() - 1);
    for (int v = 0; v < graph_->vertex_count(); ++v)
        if (v != graph_->root()) restricted.emplace_back(d.coefficients[v]);
    return JacobianElement{reduced_.reduce(restricted), d};
}

JacobianElement JacobianContext::zero() const {
    return class_of(Divisor(graph_->vertex_count()));
}

bool JacobianContext::equivalent(const Divisor& a, const Divisor& b) const {
    if (a.degree() != b.degree()) return false;
    Divisor diff = a - b;
    std::vector<Int> v(diff.coefficients.begin(), diff.coefficients.end());
    return full_.contains(v);
}

bool linearly_equivalent(const EmbeddedPlanarGraph& g, const Divisor& a, const Divisor& b) {
    return JacobianContext(g).equivalent(a, b);
}

} // namespace temperley
