#include "igd/instances.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace igd {

// Both branches agree at the kink; it evaluates through the quadratic one.
double Instance::value(const Vec& x) const {
    if (x.dim != dimension) throw std::invalid_argument("instance: point dimension mismatch");
    const double r = x.norm();
    if (kind == InstanceKind::Quadratic || r <= threshold) {
        return 0.5 * L * r * r;
    }
    return slope * r - slope * slope / (2.0 * L);
}

Vec Instance::gradient(const Vec& x) const {
    if (x.dim != dimension) throw std::invalid_argument("instance: point dimension mismatch");
    const double r = x.norm();
    if (kind == InstanceKind::Quadratic || r <= threshold) {
        return L * x;
    }
    return (slope / r) * x;
}

std::string Instance::descriptor_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"kind\":\"" << (kind == InstanceKind::Huber ? "huber" : "quadratic") << "\""
       << ",\"L\":" << L << ",\"s\":" << slope << ",\"t\":" << threshold << ",\"x_start\":[";
    os << x_start.x;
    if (dimension == 2) os << "," << x_start.y;
    os << "],\"dimension\":" << dimension << "}";
    return os.str();
}

namespace {

Vec start_point(double coord, int dimension) {
    if (dimension == 1) return Vec::make1(coord);
    if (dimension == 2) return Vec::make2(coord, 0.0);
    throw std::invalid_argument("instances support dimension 1 or 2");
}

}  // namespace

Instance make_huber(double delta, double h, int n, double L, int dimension) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
    if (!(h > 0.0 && h <= 2.0 / (1.0 + delta))) {
        throw std::domain_error("make_huber: h must lie in (0, h_max]");
    }
    if (n < 1) throw std::invalid_argument("make_huber: n must be >= 1");
    if (!(L > 0.0)) throw std::invalid_argument("L must be positive");

    // Unit-smoothness construction, then x -> x/sqrt(L).
    const double s1 = 1.0 / std::sqrt(n * h * (1.0 - delta) + 0.5);
    const double root_l = std::sqrt(L);
    Instance inst;
    inst.kind = InstanceKind::Huber;
    inst.L = L;
    inst.slope = s1 * root_l;
    inst.threshold = inst.slope / L;  // = s1 / sqrt(L)
    inst.dimension = dimension;
    inst.x_start = start_point((n * h * (1.0 - delta) * s1 + s1) / root_l, dimension);
    return inst;
}

Instance make_quadratic(double L, int dimension) {
    if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
    Instance inst;
    inst.kind = InstanceKind::Quadratic;
    inst.L = L;
    inst.dimension = dimension;
    inst.x_start = start_point(std::sqrt(2.0 / L), dimension);
    return inst;
}

Vec Oracle::direction(const Vec& x, const Vec& grad) const {
    (void)x;
    Vec d = grad;
    switch (kind) {
        case OracleKind::Exact:
            break;
        case OracleKind::Scaled:
            d = factor * grad;
            break;
        case OracleKind::Orthogonal: {
            if (grad.dim != 2) {
                throw std::invalid_argument(
                    "orthogonal oracle needs 2-dimensional gradients (no rotation in 1D)");
            }
            const double c = std::sqrt(1.0 - delta * delta);
            d = (1.0 - delta * delta) * grad + (delta * c) * rot90(grad, orientation);
            break;
        }
    }
    const double err = (d - grad).norm();
    if (err > delta * grad.norm() * (1.0 + 1e-12)) {
        throw std::logic_error("oracle produced a direction outside the inexactness ball");
    }
    return d;
}

Oracle oracle_exact() { return Oracle{OracleKind::Exact, 0.0, 1.0, +1}; }

Oracle oracle_scaled(double factor, double delta) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
    if (std::abs(factor - 1.0) > delta * (1.0 + 1e-12)) {
        throw std::invalid_argument("scaled oracle: |factor - 1| must not exceed delta");
    }
    return Oracle{OracleKind::Scaled, delta, factor, +1};
}

Oracle oracle_orthogonal(double delta, int orientation) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    return Oracle{OracleKind::Orthogonal, delta, 1.0, orientation >= 0 ? +1 : -1};
}

}  // namespace igd
