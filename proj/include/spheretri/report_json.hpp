#pragma once

#include <string>

#include "spheretri/census.hpp"
#include "spheretri/verify.hpp"

namespace spheretri {

/// Single-line JSON renderings with alphabetically sorted keys, so equal
/// inputs always produce identical bytes. Binary canonical codes appear as
/// lowercase hex.
std::string report_to_json(const VerificationReport& r);
std::string extremal_to_json(const ExtremalRecord& r);
std::string census_to_json(const CycleCensus& c, int index);

} // namespace spheretri
