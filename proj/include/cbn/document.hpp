#pragma once

#include <string>
#include <string_view>

#include "cbn/distribution.hpp"
#include "cbn/model.hpp"

namespace cbn {

/// GBN documents are JSON:
///
///   {"variables": ["X", "Y"],
///    "edges": [["Y", "X"], ["X", "Y"]],
///    "cpts": {"X": {"parents": ["Y"], "rows": {"0": "3/4", "1": "1/2"}}, ...},
///    "iota": {"": "1"}}
///
/// Row keys are bitstrings over the parents in canonical order; each value
/// is Pr(node = T | row). iota keys are bitstrings over the initial nodes;
/// absent iota keys count as 0, absent CPT rows stay missing. Values are
/// "p/q" strings, decimal strings, or JSON integers.
///
/// Throws InvalidArgument on malformed documents. The result is not
/// validated; see validate_gbn.
Gbn parse_gbn_document(std::string_view text);
Gbn load_gbn_file(const std::string& path);

/// Canonical document (sorted keys, "p/q" strings); parses back to an equal Gbn.
std::string serialize_gbn(const Gbn& g);

/// A distribution document: {"variables": [...], "probabilities": {"01": "1/2", ...}}
/// (absent keys count as 0), or an object of bitstring keys alone, read
/// over `variables`.
JointDistribution parse_distribution_document(std::string_view text, const VariableSet& variables);

}  // namespace cbn
