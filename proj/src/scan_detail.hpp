#pragma once

#include <optional>
#include <string>

#include "ehc/scan.hpp"
#include "ehc/tournament.hpp"

namespace ehc::scan_detail {

Tournament from_code(int n, std::uint64_t code);
void fold(MinTrScan& acc, int tr_value, const std::string& bits);
void merge(MinTrScan& into, const MinTrScan& part);
void scan_one(MinTrScan& acc, const Tournament& t, const std::optional<Tournament>& pattern);

} // namespace ehc::scan_detail
