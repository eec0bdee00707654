#pragma once

#include <string>

#include "discseq/analysis.hpp"
#include "discseq/sequences.hpp"

namespace discseq::io {

/// Version stamp written into sequence files and report footers.
const char* tool_version();

/// JSON encoding of a sequence: domain descriptor (kind + dimension + optional
/// Moebius coefficients), points as arrays of [re, im] pairs, metadata
/// (epsilon, delta, method, tool version). Doubles survive the round trip
/// bit-exactly.
std::string encode_sequence(const PointSequence& seq);

/// Strict decoder: unknown fields anywhere raise SchemaError with the field
/// path; type errors likewise; every point is validated against the domain
/// (PointOutsideDomain names the index).
PointSequence decode_sequence(const std::string& bytes);

/// CSV report: header `j,boundary_distance,term,partial_sum`, one row per
/// term, then `# verdict: ...` and `# diagnostics: ...` comment lines.
/// Numbers carry 17 significant digits. The boundary-distance column prints
/// nan for bare term tables.
std::string emit_report_csv(const SumReport& report);

/// Parse back what emit_report_csv wrote (used by self-checks and tests);
/// SchemaError on malformed input or a decreasing partial_sum column.
SumReport read_report_csv(const std::string& bytes);

/// Partition as JSON (class index lists plus delta); plumbing for the CLI.
std::string encode_partition(const Partition& part);

} // namespace discseq::io
