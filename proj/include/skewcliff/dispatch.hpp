#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewcliff/report.hpp"
#include "skewcliff/spec_file.hpp"

namespace skewcliff {

enum class AlgebraChoice { x, skew, quotient };

struct DispatchOptions {
  std::optional<std::size_t> max_degree;  // default 2n + 2
  long grid_radius = 2;
  std::optional<std::string> poly;        // nf, normal, central
  AlgebraChoice algebra = AlgebraChoice::x;
  bool side_y = false;                    // normal/central inside the y-subalgebra
};

const std::vector<std::string>& known_commands();

/// Runs one command. Throws Error on unknown commands or invalid requests.
Report dispatch(const std::string& command, const AlgebraSpecFile& spec, const DispatchOptions& options);

}  // namespace skewcliff
