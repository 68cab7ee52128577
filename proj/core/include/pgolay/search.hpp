#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgolay/core.hpp"
#include "pgolay/orbits.hpp"
#include "pgolay/sds.hpp"

namespace pgolay {

/// One enumerated orbit-union block: the orbit representatives, the size of
/// the expanded subset, and its difference-multiplicity fingerprint.
struct CandidateRecord {
    int v = 0;
    std::vector<int> reps;         // sorted canonical representatives
    int cardinality = 0;           // = sum of named orbit sizes
    std::vector<int> fingerprint;  // length v-1, difference c at [c-1]

    bool operator==(const CandidateRecord&) const = default;
};

/// Half-open lexicographic range [from, to) over sorted representative
/// vectors. An absent bound is unbounded on that side.
struct Window {
    std::optional<std::vector<int>> from;
    std::optional<std::vector<int>> to;

    bool contains(const std::vector<int>& reps) const;
};

enum class Block { x, y };

/// Everything one two-file search run needs. The pair (r, s) gives the
/// target block sizes; lambda is always derived as r + s - v/2 and may be
/// negative, in which case the run is a well-defined no-op past the
/// complement stage (infeasible lengths must still produce clean reports).
struct SearchPlan {
    int v = 0;
    std::vector<int> h_generators;
    int r = 0;
    int s = 0;

    std::vector<int> forced_x;    // orbit representatives that must be included
    std::vector<int> forced_y;
    std::vector<int> excluded_x;  // orbit representatives that must not appear
    std::vector<int> excluded_y;

    Window window_x;
    Window window_y;

    double psd_slack = 1e-6;
    bool translate_x = false;

    long long lambda() const { return static_cast<long long>(r) + s - v / 2; }
    int target(Block block) const { return block == Block::x ? r : s; }

    /// Structural checks (even v, generators are units, forced/excluded reps
    /// canonical and disjoint, forced sizes fit the target). Throws Error
    /// with a message naming every offending field.
    void validate(const OrbitTable& table) const;
};

struct EnumStats {
    std::uint64_t combinations = 0;  // exact-cardinality combinations inside the window
    std::uint64_t psd_passed = 0;
};

struct EnumerateOptions {
    int jobs = 1;
};

/// Streams every orbit union of the target cardinality that passes the PSD
/// test, in lexicographic representative order, restricted to the plan's
/// window. The sink sees records in deterministic order for any job count.
/// Throws unreachable_cardinality when no combination of available orbit
/// sizes can reach the target.
void for_each_candidate(const SearchPlan& plan, Block block, const OrbitTable& table,
                        const std::function<void(const CandidateRecord&)>& sink,
                        EnumStats* stats = nullptr, const EnumerateOptions& options = {});

std::vector<CandidateRecord> enumerate_candidates(const SearchPlan& plan, Block block,
                                                  const OrbitTable& table,
                                                  EnumStats* stats = nullptr,
                                                  const EnumerateOptions& options = {});

/// The h.X expansion: emits, for every input record and every h in H (in
/// increasing order), the record of the multiplied subset with recomputed
/// representatives and fingerprint. Exact orbit unions are H-stable, so for
/// them this produces |H| identical copies; duplicates are preserved.
std::vector<CandidateRecord> translate_candidates(const std::vector<CandidateRecord>& records,
                                                  const OrbitTable& table);

/// Pointwise lambda - m complement. Throws count_exceeds_lambda when some
/// count is larger than lambda.
DifferenceMultiplicity complement_fingerprint(const DifferenceMultiplicity& f, long long lambda);

/// Non-throwing variant used in the match path: nullopt means the record
/// cannot participate in any match and should be dropped.
std::optional<DifferenceMultiplicity> try_complement_fingerprint(const DifferenceMultiplicity& f,
                                                                 long long lambda);

// --- Candidate files -------------------------------------------------------
//
// One record per ASCII line:
//   v=<int> reps=<r1>,<r2>,... card=<int> fp=<c1>,...,<c_{v-1}>
// Sorted files carry the header line "#sorted-by=fp".

std::string format_candidate(const CandidateRecord& record);
CandidateRecord parse_candidate(std::string_view line);

struct CandidateFile {
    std::vector<CandidateRecord> records;
    bool sorted_by_fp = false;
};

void write_candidate_file(const std::filesystem::path& path,
                          const std::vector<CandidateRecord>& records, bool sorted_by_fp);
CandidateFile read_candidate_file(const std::filesystem::path& path);

/// External merge sort of a candidate file by (fingerprint, cardinality,
/// reps). Only chunk_records records are held in memory at a time.
void external_sort_candidate_file(const std::filesystem::path& in,
                                  const std::filesystem::path& out,
                                  std::size_t chunk_records = 200000);

// --- Match join -------------------------------------------------------------

enum class JoinMode { automatic, in_memory, external };

struct JoinOptions {
    JoinMode mode = JoinMode::automatic;
    std::size_t memory_budget_bytes = std::size_t{256} << 20;
    std::filesystem::path temp_dir;  // defaults to a fresh directory under temp
    std::size_t sort_chunk_records = 200000;
};

/// An (X, Y) record pair whose fingerprints sum to lambda at every nonzero
/// difference. Y carries its raw (uncomplemented) fingerprint.
struct RawMatch {
    CandidateRecord x;
    CandidateRecord y;
};

/// Fingerprint-equality join between X records and complemented Y records.
/// Y records with a count above lambda are dropped (counted if the pointer
/// is given). Pure join; no verification.
std::vector<RawMatch> join_complementary(const std::vector<CandidateRecord>& xs,
                                         const std::vector<CandidateRecord>& ys, long long lambda,
                                         std::uint64_t* dropped_y = nullptr);

/// File-level variant: complements Y, externally sorts both sides, then
/// merge-joins the sorted files. Throws incompatible_moduli when the files
/// disagree on v.
std::vector<RawMatch> join_candidate_files(const std::filesystem::path& file_x,
                                           const std::filesystem::path& file_y, long long lambda,
                                           const JoinOptions& options = {},
                                           std::uint64_t* dropped_y = nullptr);

struct VerifiedMatch {
    CandidateRecord x;
    CandidateRecord y;
    std::pair<SubsetZv, SubsetZv> canonical;
};

/// Join + verification + elementary-canonical-form dedup. Every match is
/// re-verified through verify_periodic_golay_pair; the fingerprint criterion
/// and PAF complementarity coincide whenever the block sizes are consistent
/// with lambda, so failed verifications only occur for inconsistent inputs
/// and are counted rather than returned.
struct MatchOutcome {
    std::uint64_t raw_matches = 0;
    std::uint64_t dropped_y = 0;
    std::uint64_t failed_verification = 0;
    std::vector<VerifiedMatch> verified;
    std::vector<std::size_t> class_representatives;  // indices into verified, first per class
};

MatchOutcome match_join(const std::vector<CandidateRecord>& xs,
                        const std::vector<CandidateRecord>& ys, long long lambda,
                        const OrbitTable& table, const JoinOptions& options = {});

/// Same, reading the candidate files and joining through the external
/// sorted-merge path.
MatchOutcome match_join_files(const std::filesystem::path& file_x,
                              const std::filesystem::path& file_y, long long lambda,
                              const OrbitTable& table, const JoinOptions& options = {});

// --- Pipeline ---------------------------------------------------------------

/// A verified solution in compact index notation.
struct SolutionRecord {
    int v = 0;
    std::vector<int> h_elements;
    std::vector<int> j_reps;
    std::vector<int> k_reps;
    int r = 0;
    int s = 0;
    long long lambda = 0;
};

struct PipelineOptions {
    int jobs = 1;
    JoinOptions join;
    /// When set, the stage artifacts are written here: candidates_x.txt,
    /// candidates_y.txt, candidates_y_complemented.txt.
    std::optional<std::filesystem::path> out_dir;
};

struct PipelineResult {
    SearchPlan plan;
    std::vector<int> h_elements;
    EnumStats x_stats;
    EnumStats y_stats;
    std::uint64_t x_records = 0;  // after optional translate expansion
    std::uint64_t y_records = 0;  // complement survivors
    MatchOutcome match;
    std::vector<SolutionRecord> solutions;          // one per raw verified match
    std::vector<SolutionRecord> solution_classes;   // elementary-inequivalent subset
};

PipelineResult run_pipeline(const SearchPlan& plan, const PipelineOptions& options = {});

/// Human-readable stage summary followed by the machine-readable solution
/// lines "J=... K=... H=... v=...".
void write_report(std::ostream& out, const PipelineResult& result);

}  // namespace pgolay
