#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewcliff/clifford.hpp"
#include "skewcliff/twist.hpp"

namespace skewcliff {

enum class AlgebraKind { gca, gsca };

/// Validated contents of an algebra-description file:
///
///   { "n": 3, "kind": "gsca",
///     "mu":    [["1","2","1"], ["1/2","1","1"], ["1","1","1"]],
///     "forms": [ [["2","0","0"], ...], ... ],
///     "tau":   ["1","2","2"] }
///
/// "mu" defaults to all ones and "kind" to "gca" when mu is omitted.
struct AlgebraSpecFile {
  std::size_t n = 0;
  AlgebraKind kind = AlgebraKind::gca;
  MuMatrix mu = MuMatrix::ones(1);
  std::vector<MuSymmetricMatrix> forms;
  std::optional<DiagonalAutomorphism> tau;
  std::string source;   // path or label used in messages
  std::string digest;   // fnv1a64 of the raw bytes
};

AlgebraSpecFile parse_spec(const std::filesystem::path& path);
AlgebraSpecFile parse_spec_text(std::string_view text, const std::string& source);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace skewcliff
