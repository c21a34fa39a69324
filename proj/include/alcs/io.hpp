#pragma once
/**
 * @file io.hpp
 * @brief File ingestion (line-delimited text, FASTA, degenerate nucleotide
 *        codes), weighted-cost tables, and report rendering.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcs/solver.hpp"
#include "alcs/strings_core.hpp"

namespace alcs::io {

/// One FASTA record; the header text (after '>') is kept as the name.
struct FastaRecord {
    std::string name;
    std::string sequence;
};

/// Reads one string per non-empty line (blank lines are skipped, CR/LF
/// tolerated). Throws ParseError (unreadable file) or EmptySequence (no
/// strings at all).
std::vector<std::string> read_lines(const std::string& path);

/// Parses FASTA records. Sequences are lowercased by default (nucleotide
/// normalization); pass lowercase = false to keep the raw text. Throws
/// ParseError (with the offending line number), EmptySequence.
std::vector<FastaRecord> read_fasta(const std::string& path,
                                    bool lowercase = true);

void write_lines(const std::string& path, const std::vector<std::string>& lines);
void write_fasta(const std::string& path,
                 const std::vector<FastaRecord>& records, int line_width = 60);

/// Expands degenerate nucleotide codes into letter-sets over {a,c,g,t}
/// (e.g. r -> {a,g}, n -> {a,c,g,t}), case-insensitively; the returned sets
/// are lowercase. Throws UnknownIUPACCode.
std::vector<LetterSet> expand_iupac(const std::string& sequence);

/// Loads a weighted metric from TSV rows `op<TAB>from<TAB>to<TAB>cost`,
/// where op is sub, ins, or del and `-` marks the empty side of an
/// insertion or deletion. Unlisted operations cost 1. Throws ParseError
/// with the offending line number.
DistanceMetric load_cost_table(const std::string& path);

/// Everything one solver run reports: the parameter echo, the outcome, and
/// the wall time. Offsets in the rendered output are 1-based and the JSON
/// field names say so explicitly.
struct RunReport {
    std::string command = "solve";
    std::string problem;
    std::string metric;
    std::string solver;
    long long k = 0;
    int t = 0;
    int m = 0;
    int threads = 1;
    bool solved = false;
    std::optional<Solution> solution;
    std::vector<std::string> string_names; ///< FASTA headers, empty otherwise
    double wall_time_ms = 0.0;
};

/// Versioned machine-readable report (schema_version 1).
std::string report_json(const RunReport& r);
/// Flat key<TAB>value rows; witnesses as one row per occurrence.
std::string report_tsv(const RunReport& r);
/// Short prose summary.
std::string report_human(const RunReport& r);

const char* metric_name(MetricKind kind);

} // namespace alcs::io
