#pragma once

#include <cstddef>
#include <string>

#include "margpoly/linear_system.hpp"

namespace margpoly {

/// Drops every inequality implied by the others (exact LP certificate per row).
/// Throws infeasible when the system has no solution.
LinearSystem remove_redundant(const LinearSystem& system);

/// Projects out one coordinate by Fourier-Motzkin elimination, then removes
/// redundant rows.
LinearSystem fm_eliminate(const LinearSystem& system, std::size_t coordinate);
LinearSystem fm_eliminate(const LinearSystem& system, const std::string& coordinate);

}  // namespace margpoly
