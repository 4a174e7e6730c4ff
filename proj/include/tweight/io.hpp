#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tweight/charsums.hpp"
#include "tweight/codes.hpp"
#include "tweight/designs.hpp"
#include "tweight/field.hpp"

namespace tweight {

// File formats. All writers are deterministic: sorted JSON keys, no
// timestamps, fixed field order, so identical runs produce identical bytes.

std::string field_to_json(const FieldContext& ctx);
FieldContext field_from_json(const std::string& text);

/// {"n", "k", "rows": [hex, lowest hex digit = coordinates 1..4], "provenance"}
std::string code_to_json(const LinearCode& code);
LinearCode code_from_json(const std::string& text);

std::string row_to_hex(const BitRow& row);
BitRow row_from_hex(const std::string& hex, int n);

/// "weight,count" CSV over all weights 0..n.
std::string distribution_to_csv(const WeightDistribution& w);

std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);

std::string design_verdict_to_json(const DesignVerdict& v);

/// One sweep row: m,u,e,a,b,direct,prediction,agrees.
std::string weil_csv_header();
std::string weil_csv_row(int m, int u, FieldElement a, FieldElement b, const WeilSumResult& r);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

LinearCode load_code(const std::filesystem::path& path);

}  // namespace tweight
