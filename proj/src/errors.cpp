#include "cadel/errors.hpp"

#include <sstream>

namespace cadel {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
    std::ostringstream os;
    os << "InvalidGeometry:";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : " ") << v[i];
    return os.str();
}

}  // namespace

InvalidGeometry::InvalidGeometry(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

DegenerateGeometry::DegenerateGeometry(std::size_t cable, double length)
    : Error("DegenerateGeometry: cable " + std::to_string(cable) + " has length " +
            std::to_string(length) + " m"),
      cable_(cable) {}

NoConvergence::NoConvergence(int iterations, double residual)
    : Error([&] {
          std::ostringstream os;
          os << "NoConvergence: " << iterations << " iterations, residual " << residual << " m";
          return os.str();
      }()),
      iterations_(iterations),
      residual_(residual) {}

Infeasible::Infeasible(double residual, std::optional<std::size_t> step)
    : Error([&] {
          std::ostringstream os;
          os << "Infeasible: demanded wrench outside the tension box (least-squares residual "
             << residual << " N*m)";
          if (step) os << " at step " << *step;
          return os.str();
      }()),
      residual_(residual),
      step_(step) {}

}  // namespace cadel
