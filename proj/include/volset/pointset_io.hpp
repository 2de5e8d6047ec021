#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "volset/pointset.hpp"

namespace volset {

/// Malformed point-set file. The message starts with "line N:" when the
/// problem is tied to a line.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// File layout:
//   volset-pointset v1
//   p=<int> k=<int> d=<int> [mod=c0,...,ck]
//   one point per line, d element indices
// Blank lines and lines starting with '#' are ignored in the body.
PointSet parse_pointset(std::string_view text);

/// Canonical form: sorted points, `mod=` written exactly when k > 1.
std::string emit_pointset(const PointSet& e);

PointSet read_pointset(const std::filesystem::path& path);
void write_pointset(const std::filesystem::path& path, const PointSet& e);

} // namespace volset
