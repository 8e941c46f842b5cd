#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cadel {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A device description violates one or more geometric invariants.
class InvalidGeometry : public Error {
public:
    explicit InvalidGeometry(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Cable anchors coincide (or a cable collapses) so lengths/directions are undefined.
class DegenerateGeometry : public Error {
public:
    DegenerateGeometry(std::size_t cable, double length);
    std::size_t cable() const noexcept { return cable_; }

private:
    std::size_t cable_;
};

class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double residual);
    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

/// No tension vector inside the box [t_min, t_max] realizes the demanded wrench.
class Infeasible : public Error {
public:
    explicit Infeasible(double residual, std::optional<std::size_t> step = std::nullopt);
    double residual() const noexcept { return residual_; }
    std::optional<std::size_t> step() const noexcept { return step_; }
    /// Copy of this error tagged with the simulation step it occurred at.
    Infeasible at_step(std::size_t step) const { return Infeasible(residual_, step); }

private:
    double residual_;
    std::optional<std::size_t> step_;
};

class RoMViolation : public Error {
public:
    explicit RoMViolation(const std::string& what) : Error("RoMViolation: " + what) {}
};

}  // namespace cadel
