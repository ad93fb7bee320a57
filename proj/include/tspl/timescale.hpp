#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace tspl {

/// Absolute tolerance for membership tests against the time-scale structure.
inline constexpr double kMembershipTol = 1e-12;

struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;
};

struct IsolatedPoint {
    double t = 0.0;
};

using Component = std::variant<ClosedInterval, IsolatedPoint>;

/// Sample grid of a TimeScale: every component endpoint and isolated point,
/// with each interval subdivided uniformly to steps <= h_max.
///
/// mu(i) = sigma(t_i) - t_i and nu(i) = t_i - rho(t_i) are the structural
/// graininess values of the underlying time scale: a point interior to an
/// interval component has mu = nu = 0 even though its grid neighbours are a
/// step h away. Gap cells between components never contain grid points, so
/// t_{i+1} == sigma(t_i) whenever t_i is right-scattered.
class Grid {
public:
    std::size_t size() const { return points_.size(); }
    double point(std::size_t i) const { return points_[i]; }
    const std::vector<double>& points() const { return points_; }
    double t_min() const { return points_.front(); }
    double t_max() const { return points_.back(); }

    double mu(std::size_t i) const { return mu_[i]; }
    double nu(std::size_t i) const { return nu_[i]; }
    bool right_scattered(std::size_t i) const { return mu_[i] > 0.0; }
    bool right_dense(std::size_t i) const { return mu_[i] == 0.0; }
    bool left_scattered(std::size_t i) const { return nu_[i] > 0.0; }
    bool left_dense(std::size_t i) const { return nu_[i] == 0.0; }

    /// Index of the grid point within kMembershipTol of t, if any.
    std::optional<std::size_t> index_of(double t) const;

    /// index_of, throwing DomainError when t is not a grid point.
    std::size_t require_index(double t, const char* what = "time") const;

private:
    friend class TimeScale;
    Grid() = default;

    std::vector<double> points_;
    std::vector<double> mu_;
    std::vector<double> nu_;
};

/// A bounded time scale on [0, T]: a finite, strictly increasing union of
/// disjoint closed intervals and isolated points, starting at 0. Holds both
/// the exact structure (used for sigma/rho/membership) and a shared sample
/// grid built once at construction.
class TimeScale {
public:
    /// Validates the structure and builds the grid. Throws ValidationError
    /// (with the offending component's index in the location) on violations.
    TimeScale(std::vector<Component> components, double h_max);

    double t_min() const { return 0.0; }
    double t_max() const { return t_max_; }
    double h_max() const { return h_max_; }
    const std::vector<Component>& components() const { return components_; }

    bool contains(double t) const;

    /// Forward jump sigma(t) = inf{tau in T : tau > t}; sigma(T) = T.
    /// Throws DomainError if t is not in the time scale.
    double sigma(double t) const;

    /// Backward jump rho(t) = sup{tau in T : tau < t}; rho(0) = 0.
    double rho(double t) const;

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }

private:
    std::optional<std::size_t> component_of(double t) const;
    double component_lo(std::size_t c) const;
    double component_hi(std::size_t c) const;
    void build_grid();

    std::vector<Component> components_;
    double h_max_ = 0.0;
    double t_max_ = 0.0;
    std::shared_ptr<const Grid> grid_;
};

/// Real-valued samples over a shared grid. Immutable after construction.
class GridFunction {
public:
    /// Throws DomainError on size mismatch or non-finite values.
    GridFunction(std::shared_ptr<const Grid> grid, std::vector<double> values);

    /// Samples f(t) at every grid point.
    template <typename F>
    static GridFunction sample(std::shared_ptr<const Grid> grid, F&& f) {
        std::vector<double> values;
        values.reserve(grid->size());
        for (std::size_t i = 0; i < grid->size(); ++i) {
            values.push_back(f(grid->point(i)));
        }
        return GridFunction(std::move(grid), std::move(values));
    }

    static GridFunction constant(std::shared_ptr<const Grid> grid, double value);

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::shared_ptr<const Grid> grid_;
    std::vector<double> values_;
};

/// Delta derivative at grid index i: the exact quotient
/// (f(sigma(t)) - f(t)) / mu(t) at a right-scattered point, the forward
/// difference to the next grid point at a right-dense point (one-sided O(h)),
/// and the in-component backward difference at a left-dense maximum.
/// Throws DomainError at a left-scattered maximum (not in T^k).
double delta_derivative(const GridFunction& f, std::size_t i);

/// Nabla derivative at grid index i; mirror of delta_derivative with rho/nu.
/// Throws DomainError at a right-scattered minimum (not in T_k).
double nabla_derivative(const GridFunction& f, std::size_t i);

/// Delta integral over [a, b], a and b grid points: right-scattered cells
/// contribute f(t_i) * mu(t_i), dense cells the trapezoid rule.
double delta_integral(const GridFunction& f, double a, double b);

/// Nabla integral over [a, b]: scattered cells contribute f(t_{i+1}) *
/// nu(t_{i+1}), dense cells the trapezoid rule.
double nabla_integral(const GridFunction& f, double a, double b);

/// Cumulative delta integral from t_min: P[i] = integral over [t_0, t_i].
std::vector<double> delta_prefix(const GridFunction& f);

/// Cumulative nabla integral from t_min.
std::vector<double> nabla_prefix(const GridFunction& f);

/// max over the grid of |f(t_i)|.
double max_norm(const GridFunction& f);

} // namespace tspl
