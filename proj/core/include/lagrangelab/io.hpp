#pragma once

#include "lagrangelab/families.hpp"
#include "lagrangelab/report.hpp"

#include <string>
#include <string_view>

namespace lagrangelab {

/// Reads {"kind":"polytope","normals":[...],"offsets":[...]} with one normal
/// per facet, or {"kind":"quadrics","gamma":[[...]],"delta":[...]}. Errors
/// are ErrorKind::Input and carry "line L, column C".
[[nodiscard]] Input parse_input(std::string_view text);

/// Serializes an input in the form parse_input accepts.
[[nodiscard]] std::string input_json(const Input& input);

[[nodiscard]] std::string report_json(const LagrangianReport& r);
[[nodiscard]] std::string report_text(const LagrangianReport& r);

/// Both presentations, the canonical quadric form and the column classes.
[[nodiscard]] std::string gale_json(const Input& input);
[[nodiscard]] std::string gale_text(const Input& input);

[[nodiscard]] std::string topology_text(const LagrangianReport& r);

[[nodiscard]] std::string reproduce_json(const std::string& family, const std::vector<ReproduceRow>& rows);
[[nodiscard]] std::string reproduce_text(const std::string& family, const std::vector<ReproduceRow>& rows);

[[nodiscard]] std::string scan_json(const std::string& family, const ScanResult& res);
[[nodiscard]] std::string scan_text(const std::string& family, const ScanResult& res);

}  // namespace lagrangelab
