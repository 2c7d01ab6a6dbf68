#include "mset/potential.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "mset/errors.hpp"

namespace mset {

PotentialFunction::PotentialFunction(Evaluator f, Interval domain, bool decreasing, bool convex,
                                     bool strictly_convex, std::string description)
    : eval_(std::move(f)),
      domain_(domain),
      decreasing_(decreasing),
      convex_(convex),
      strictly_convex_(strictly_convex),
      description_(std::move(description)) {}

double PotentialFunction::operator()(double x) const {
    if (!domain_.contains(x)) {
        std::ostringstream msg;
        msg << "value " << x << " outside the domain of " << description_;
        throw DomainError(msg.str());
    }
    return eval_(x);
}

std::vector<std::string> PotentialFunction::sanity_warnings() const {
    // Grid window: the declared domain clipped to a finite range wide enough
    // to cover sphere distance values (0..4 covers r, r^2 and phi).
    double lo = domain_.lo;
    double hi = domain_.hi;
    if (!std::isfinite(lo)) lo = -4.0;
    if (!std::isfinite(hi)) hi = lo + 8.0;
    const double width = hi - lo;
    if (domain_.lo_open) lo += 1e-3 * width;
    if (domain_.hi_open) hi -= 1e-3 * width;

    constexpr int kGrid = 100;
    std::vector<double> y(kGrid);
    const double h = (hi - lo) / (kGrid - 1);
    if (!(h > 0.0)) return {};
    for (int i = 0; i < kGrid; ++i) y[i] = eval_(lo + i * h);

    double scale = 1.0;
    for (double v : y) scale = std::max(scale, std::abs(v));
    const double tol = 1e-9 * scale;

    std::vector<std::string> warnings;
    if (decreasing_) {
        for (int i = 0; i + 1 < kGrid; ++i) {
            if (y[i + 1] - y[i] > tol) {
                std::ostringstream msg;
                msg << description_ << " declared decreasing but increases near x = "
                    << lo + i * h;
                warnings.push_back(msg.str());
                break;
            }
        }
    }
    if (convex_) {
        for (int i = 1; i + 1 < kGrid; ++i) {
            if (y[i + 1] - 2.0 * y[i] + y[i - 1] < -tol) {
                std::ostringstream msg;
                msg << description_ << " declared convex but second differences are negative near x = "
                    << lo + i * h;
                warnings.push_back(msg.str());
                break;
            }
        }
    }
    return warnings;
}

PotentialFunction PotentialFunction::riesz(double t) {
    if (t < 0.0) {
        throw DomainError("Riesz kernel requires t >= 0");
    }
    std::ostringstream name;
    if (t == 0.0) {
        name << "log(1/r)";
        return PotentialFunction([](double r) { return -std::log(r); }, Interval::positive(),
                                 true, true, true, name.str());
    }
    name << "r^-" << t;
    return PotentialFunction([t](double r) { return std::pow(r, -t); }, Interval::positive(),
                             true, true, true, name.str());
}

PotentialFunction PotentialFunction::riesz_squared(double t) {
    if (t < 0.0) {
        throw DomainError("Riesz kernel requires t >= 0");
    }
    std::ostringstream name;
    if (t == 0.0) {
        name << "log(1/sqrt(q))";
        return PotentialFunction([](double q) { return -0.5 * std::log(q); }, Interval::positive(),
                                 true, true, true, name.str());
    }
    name << "q^-" << t / 2.0 << " (squared-distance argument)";
    return PotentialFunction([t](double q) { return std::pow(q, -0.5 * t); }, Interval::positive(),
                             true, true, true, name.str());
}

PotentialFunction PotentialFunction::polynomial(std::vector<double> coeffs, Interval domain,
                                                bool decreasing, bool convex,
                                                bool strictly_convex) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    std::ostringstream name;
    name << "polynomial of degree " << coeffs.size() - 1;
    auto eval = [c = std::move(coeffs)](double x) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    return PotentialFunction(std::move(eval), domain, decreasing, convex, strictly_convex,
                             name.str());
}

PotentialFunction PotentialFunction::constant(double c) {
    std::ostringstream name;
    name << "constant " << c;
    return PotentialFunction([c](double) { return c; }, Interval::all(), true, true, false,
                             name.str());
}

}  // namespace mset
