#pragma once

#include "treeshift/classify.hpp"
#include "treeshift/extend.hpp"
#include "treeshift/oracle.hpp"
#include "treeshift/shift_model.hpp"

#include <string>

namespace treeshift {

enum class NumericMode {
    exact,    // rationals as "p/q" strings, lossless
    floating, // doubles, 17 significant digits
};

// Model file schema:
// {
//   "tree": {"vertices": [...], "root": id, "parent": {child: parent}},
//   "weights_sq": {vertex: "p/q"},
//   "tails": {anchor: {"a0": "p/q", "measure": [{"t": "p/q", "mass": "p/q"}],
//             "scale_sq": "p/q"}}   // scale_sq optional, default 1
// }
//
// strict mode is the file contract of the command line tool: all weights
// strictly positive off the root and every childless vertex tailed. The
// permissive mode admits anything the in-memory constructor admits.
ShiftModel model_from_json_text(const std::string& text, bool strict = true);

std::string model_to_json_text(const ShiftModel& model, int indent = -1);

std::string verdict_to_json_text(const std::string& class_name, const ClassVerdict& verdict,
                                 NumericMode mode, int indent = -1);

std::string certificate_to_json_text(const ExtensionCertificate& cert, NumericMode mode,
                                     int indent = -1);

std::string simple_report_to_json_text(const SimpleClassReport& report, NumericMode mode,
                                       int indent = -1);

std::string oracle_report_to_json_text(const OracleReport& report, int indent = -1);

std::string measure_to_json_text(const AtomicMeasure& measure, NumericMode mode,
                                 int indent = -1);

} // namespace treeshift
