#include "mset/energy.hpp"

#include <cmath>
#include <sstream>

#include "mset/errors.hpp"
#include "mset/generators.hpp"
#include "mset/summation.hpp"

namespace mset {

double pair_energy(const SphericalConfiguration& x, const DistanceFunctional& rho,
                   const PotentialFunction& f) {
    if (x.size() < 2) throw DomainError("pair energy requires at least two points");
    CompensatedSum acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double r = x.distance(i, j);
            if (rho.singular_at_coincidence() && r < kCoincidenceTol) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j << " coincide; " << rho.name()
                    << " is singular at distance 0";
                throw SingularityError(msg.str());
            }
            const double value = rho.from_euclidean(r);
            if (!f.domain().contains(value)) {
                std::ostringstream msg;
                msg << "pair (" << i << ", " << j << "): " << rho.name() << " = " << value
                    << " outside the domain of " << f.description();
                throw DomainError(msg.str());
            }
            acc.add(f(value));
        }
    }
    return acc.value();
}

double riesz_energy(const SphericalConfiguration& x, double t) {
    if (t < 0.0) throw DomainError("Riesz energy requires t >= 0");
    if (x.size() < 2) throw DomainError("Riesz energy requires at least two points");
    CompensatedSum acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double r = x.distance(i, j);
            if (r < kCoincidenceTol) {
                std::ostringstream msg;
                msg << "points " << i << " and " << j
                    << " coincide; the Riesz kernel is singular there";
                throw SingularityError(msg.str());
            }
            acc.add(t == 0.0 ? -std::log(r) : std::pow(r, -t));
        }
    }
    return acc.value();
}

double lower_bound_from_constraints(const ConstraintVector& t, const PotentialFunction& f) {
    const RealSequence y = extremal_sequence(t);
    CompensatedSum acc;
    for (double v : y.values()) acc.add(f(v));
    return acc.value();
}

double simplex_energy_bound(std::size_t m, const PotentialFunction& f) {
    if (m < 2) throw DomainError("simplex energy bound requires m >= 2");
    const double a_m = 2.0 * static_cast<double>(m) / static_cast<double>(m - 1);
    const double pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    return pairs * f(a_m);
}

CircleProfileReport circle_profile_bound(const SphericalConfiguration& x) {
    if (x.dimension() != 2) {
        throw DimensionError("circle profile bound requires a configuration on the unit circle");
    }
    if (x.size() < 2) throw DomainError("circle profile bound requires at least two points");
    const DistanceFunctional phi = DistanceFunctional::angular();
    RealSequence polygon = distance_profile(regular_polygon(x.size()), phi);
    RealSequence config = distance_profile(x, phi);
    const MajorizationOrder order = compare(polygon, config);
    return CircleProfileReport{order, std::move(polygon), std::move(config)};
}

}  // namespace mset
