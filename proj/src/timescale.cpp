#include "tspl/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tspl/errors.hpp"

namespace tspl {

namespace {

std::string component_location(std::size_t c) {
    return "/timescale/components/" + std::to_string(c);
}

} // namespace

double TimeScale::component_lo(std::size_t c) const {
    if (const auto* iv = std::get_if<ClosedInterval>(&components_[c])) return iv->lo;
    return std::get<IsolatedPoint>(components_[c]).t;
}

double TimeScale::component_hi(std::size_t c) const {
    if (const auto* iv = std::get_if<ClosedInterval>(&components_[c])) return iv->hi;
    return std::get<IsolatedPoint>(components_[c]).t;
}

TimeScale::TimeScale(std::vector<Component> components, double h_max)
    : components_(std::move(components)), h_max_(h_max) {
    if (!(h_max_ > 0.0)) {
        throw ValidationError("h_max must be positive", "/timescale/h_max");
    }
    if (components_.empty()) {
        throw ValidationError("time scale needs at least one component", "/timescale/components");
    }
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (const auto* iv = std::get_if<ClosedInterval>(&components_[c])) {
            if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi) || iv->hi - iv->lo <= kMembershipTol) {
                throw ValidationError("interval needs lo < hi", component_location(c));
            }
        } else if (!std::isfinite(std::get<IsolatedPoint>(components_[c]).t)) {
            throw ValidationError("point must be finite", component_location(c));
        }
        if (c > 0 && component_lo(c) - component_hi(c - 1) <= kMembershipTol) {
            throw ValidationError("components must be sorted, disjoint and strictly increasing",
                                  component_location(c));
        }
    }
    if (std::abs(component_lo(0)) > kMembershipTol) {
        throw ValidationError("time scale must start at 0", component_location(0));
    }
    t_max_ = component_hi(components_.size() - 1);
    if (components_.size() == 1 && std::holds_alternative<IsolatedPoint>(components_[0])) {
        throw ValidationError("time scale needs at least two points", "/timescale/components");
    }
    build_grid();
}

void TimeScale::build_grid() {
    auto grid = std::shared_ptr<Grid>(new Grid());
    // has_right[i] / has_left[i]: the point has time-scale neighbours
    // arbitrarily close on that side (interval interior or touching endpoint).
    std::vector<char> has_right;
    std::vector<char> has_left;
    for (const auto& comp : components_) {
        if (const auto* iv = std::get_if<ClosedInterval>(&comp)) {
            const double span = iv->hi - iv->lo;
            const auto n = static_cast<std::size_t>(
                std::max(1.0, std::ceil(span / h_max_ - 1e-9)));
            for (std::size_t j = 0; j <= n; ++j) {
                const double t =
                    (iv->lo * static_cast<double>(n - j) + iv->hi * static_cast<double>(j)) /
                    static_cast<double>(n);
                grid->points_.push_back(t);
                has_left.push_back(j > 0);
                has_right.push_back(j < n);
            }
        } else {
            grid->points_.push_back(std::get<IsolatedPoint>(comp).t);
            has_left.push_back(false);
            has_right.push_back(false);
        }
    }
    const std::size_t n = grid->points_.size();
    grid->mu_.resize(n);
    grid->nu_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid->mu_[i] = (has_right[i] || i + 1 == n) ? 0.0 : grid->points_[i + 1] - grid->points_[i];
        grid->nu_[i] = (has_left[i] || i == 0) ? 0.0 : grid->points_[i] - grid->points_[i - 1];
    }
    grid_ = std::move(grid);
}

std::optional<std::size_t> TimeScale::component_of(double t) const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (t >= component_lo(c) - kMembershipTol && t <= component_hi(c) + kMembershipTol) {
            return c;
        }
    }
    return std::nullopt;
}

bool TimeScale::contains(double t) const { return component_of(t).has_value(); }

double TimeScale::sigma(double t) const {
    const auto c = component_of(t);
    if (!c) throw DomainError("sigma: t is not in the time scale");
    if (std::holds_alternative<ClosedInterval>(components_[*c]) &&
        t < component_hi(*c) - kMembershipTol) {
        return t; // right-dense
    }
    if (*c + 1 < components_.size()) return component_lo(*c + 1);
    return t_max_; // sup convention: sigma(T) = T
}

double TimeScale::rho(double t) const {
    const auto c = component_of(t);
    if (!c) throw DomainError("rho: t is not in the time scale");
    if (std::holds_alternative<ClosedInterval>(components_[*c]) &&
        t > component_lo(*c) + kMembershipTol) {
        return t; // left-dense
    }
    if (*c > 0) return component_hi(*c - 1);
    return 0.0; // inf convention: rho(0) = 0
}

std::optional<std::size_t> Grid::index_of(double t) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), t);
    const auto check = [&](std::ptrdiff_t i) -> std::optional<std::size_t> {
        if (i >= 0 && i < static_cast<std::ptrdiff_t>(points_.size()) &&
            std::abs(points_[static_cast<std::size_t>(i)] - t) <= kMembershipTol) {
            return static_cast<std::size_t>(i);
        }
        return std::nullopt;
    };
    const auto at = it - points_.begin();
    if (auto hit = check(at)) return hit;
    return check(at - 1);
}

std::size_t Grid::require_index(double t, const char* what) const {
    if (auto i = index_of(t)) return *i;
    throw DomainError(std::string(what) + " is not a grid point of the time scale");
}

GridFunction::GridFunction(std::shared_ptr<const Grid> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_ || values_.size() != grid_->size()) {
        throw DomainError("grid function values must match the grid point count");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("grid function values must be finite");
    }
}

GridFunction GridFunction::constant(std::shared_ptr<const Grid> grid, double value) {
    std::vector<double> values(grid->size(), value);
    return GridFunction(std::move(grid), std::move(values));
}

double delta_derivative(const GridFunction& f, std::size_t i) {
    const Grid& g = f.grid();
    if (i >= g.size()) throw DomainError("delta derivative: index out of range");
    if (g.right_scattered(i)) return (f[i + 1] - f[i]) / g.mu(i);
    if (i + 1 < g.size()) return (f[i + 1] - f[i]) / (g.point(i + 1) - g.point(i));
    // right-dense maximum: in T^k only when left-dense
    if (g.left_scattered(i)) {
        throw DomainError("delta derivative undefined at a left-scattered maximum (not in T^k)");
    }
    return (f[i] - f[i - 1]) / (g.point(i) - g.point(i - 1));
}

double nabla_derivative(const GridFunction& f, std::size_t i) {
    const Grid& g = f.grid();
    if (i >= g.size()) throw DomainError("nabla derivative: index out of range");
    if (g.left_scattered(i)) return (f[i] - f[i - 1]) / g.nu(i);
    if (i > 0) return (f[i] - f[i - 1]) / (g.point(i) - g.point(i - 1));
    if (g.right_scattered(0)) {
        throw DomainError("nabla derivative undefined at a right-scattered minimum (not in T_k)");
    }
    return (f[1] - f[0]) / (g.point(1) - g.point(0));
}

namespace {

// Contribution of grid cell [t_i, t_{i+1}].
double delta_cell(const GridFunction& f, std::size_t i) {
    const Grid& g = f.grid();
    if (g.right_scattered(i)) return f[i] * g.mu(i);
    return 0.5 * (f[i] + f[i + 1]) * (g.point(i + 1) - g.point(i));
}

double nabla_cell(const GridFunction& f, std::size_t i) {
    const Grid& g = f.grid();
    if (g.right_scattered(i)) return f[i + 1] * g.nu(i + 1);
    return 0.5 * (f[i] + f[i + 1]) * (g.point(i + 1) - g.point(i));
}

template <typename Cell>
double integral(const GridFunction& f, double a, double b, Cell cell, const char* name) {
    const Grid& g = f.grid();
    const std::size_t ia = g.require_index(a, name);
    const std::size_t ib = g.require_index(b, name);
    if (ia > ib) throw DomainError(std::string(name) + ": bounds out of order (a > b)");
    double sum = 0.0;
    for (std::size_t i = ia; i < ib; ++i) sum += cell(f, i);
    return sum;
}

template <typename Cell>
std::vector<double> prefix(const GridFunction& f, Cell cell) {
    std::vector<double> p(f.size(), 0.0);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) p[i + 1] = p[i] + cell(f, i);
    return p;
}

} // namespace

double delta_integral(const GridFunction& f, double a, double b) {
    return integral(f, a, b, delta_cell, "delta integral bound");
}

double nabla_integral(const GridFunction& f, double a, double b) {
    return integral(f, a, b, nabla_cell, "nabla integral bound");
}

std::vector<double> delta_prefix(const GridFunction& f) { return prefix(f, delta_cell); }

std::vector<double> nabla_prefix(const GridFunction& f) { return prefix(f, nabla_cell); }

double max_norm(const GridFunction& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

} // namespace tspl
