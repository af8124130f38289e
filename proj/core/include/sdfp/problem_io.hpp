// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sdfp/constraint_map.hpp"

namespace sdfp {

/// Parses the SDFP problem text:
///
///   # comment lines start with '#'
///   SDFP 1
///   m l
///   n_1 ... n_l
///   k s i j v        (one entry per line, 1-based, i <= j, repeated)
///
/// Unlisted entries are zero; off-diagonal entries are mirrored. Duplicate
/// (k, s, i, j) entries and out-of-range indices are errors. Throws
/// ParseError carrying the offending line.
ConstraintMap parse_problem(std::string_view text);

/// Canonical text form: entries in (k, s, i, j) order, upper triangle,
/// zeros omitted, values with round-trip precision.
std::string serialize_problem(const ConstraintMap& map);

ConstraintMap load_problem(const std::filesystem::path& path);
void save_problem(const ConstraintMap& map, const std::filesystem::path& path);

}  // namespace sdfp
