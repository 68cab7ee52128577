#include "pgolay/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>
#include <unordered_map>

#include "pgolay/correlation.hpp"

namespace pgolay {

namespace {

constexpr std::size_t max_target = 511;  // reachability bitset width - 1

std::string join_ints(const std::vector<int>& values, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<int> parse_csv_ints(std::string_view text, std::string_view what) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next < end && *next != ',')) {
            throw Error(errc::parse_error, "bad integer list in " + std::string(what));
        }
        out.push_back(value);
        p = next < end ? next + 1 : next;
        if (next < end && next + 1 == end) {
            throw Error(errc::parse_error, "trailing comma in " + std::string(what));
        }
    }
    return out;
}

}  // namespace

bool Window::contains(const std::vector<int>& reps) const {
    if (from && reps < *from) return false;
    if (to && !(reps < *to)) return false;
    return true;
}

void SearchPlan::validate(const OrbitTable& table) const {
    std::vector<std::string> problems;
    if (v != table.modulus()) {
        problems.push_back("v: plan says " + std::to_string(v) + " but orbit table has modulus " +
                           std::to_string(table.modulus()));
    }
    if (v < 2 || v % 2 != 0) {
        problems.push_back("v: must be an even integer >= 2");
    }
    if (r < 1 || r > v) problems.push_back("r: must be in [1, v]");
    if (s < 1 || s > v) problems.push_back("s: must be in [1, v]");
    if (static_cast<std::size_t>(std::max(r, s)) > max_target) {
        problems.push_back("r/s: targets above " + std::to_string(max_target) +
                           " are not supported");
    }
    if (psd_slack < 0) problems.push_back("psd_slack: must be nonnegative");

    const auto check_reps = [&](const std::vector<int>& reps, const char* field) {
        std::set<int> seen;
        for (int rep : reps) {
            try {
                table.orbit_index_of(rep);
            } catch (const Error&) {
                problems.push_back(std::string(field) + ": " + std::to_string(rep) +
                                   " is not an orbit representative");
                continue;
            }
            if (!seen.insert(rep).second) {
                problems.push_back(std::string(field) + ": duplicate " + std::to_string(rep));
            }
        }
    };
    check_reps(forced_x, "forced_x");
    check_reps(forced_y, "forced_y");
    check_reps(excluded_x, "excluded_x");
    check_reps(excluded_y, "excluded_y");

    const auto check_block = [&](const std::vector<int>& forced, const std::vector<int>& excluded,
                                 int target, const char* forced_field) {
        long long forced_size = 0;
        std::set<int> excl(excluded.begin(), excluded.end());
        for (int rep : forced) {
            if (excl.count(rep)) {
                problems.push_back(std::string(forced_field) + ": " + std::to_string(rep) +
                                   " is both forced and excluded");
            }
            try {
                forced_size += table.orbits()[static_cast<std::size_t>(table.orbit_index_of(rep))]
                                   .size();
            } catch (const Error&) {
                // already reported above
            }
        }
        if (forced_size > target) {
            problems.push_back(std::string(forced_field) + ": forced orbit sizes sum to " +
                               std::to_string(forced_size) + " > target " +
                               std::to_string(target));
        }
    };
    check_block(forced_x, excluded_x, r, "forced_x");
    check_block(forced_y, excluded_y, s, "forced_y");

    if (!problems.empty()) {
        std::string message = "invalid plan:";
        for (const std::string& p : problems) {
            message += "\n  " + p;
        }
        throw Error(errc::invalid_argument, message);
    }
}

namespace {

// ---------------------------------------------------------------------------
// Candidate enumeration.
//
// Orbits (minus exclusions) are ordered by representative; a DFS over
// include/exclude decisions emits exact-cardinality unions in lexicographic
// representative order. A subset-sum bitset per suffix prunes dead branches
// and enforces that every forced orbit still ahead gets taken. The PSD test
// runs on per-orbit DFT sums so a leaf costs |reps| complex adds per
// frequency, with early exit on the first violating frequency.

struct AvailableOrbit {
    int rep = 0;
    int size = 0;
    bool forced = false;
    const std::vector<int>* elements = nullptr;
};

struct EnumCore {
    int v = 0;
    int target = 0;
    double psd_bound = 0;
    Window window;
    int max_rep = 0;
    std::vector<AvailableOrbit> orbits;
    std::vector<std::bitset<max_target + 1>> reach;  // index i: sums attainable from orbits[i..]
    int half = 0;                                    // floor(v/2)
    // k-major tables: orbit_cos[k-1][orbit] = sum over orbit elements of cos(2 pi e k / v)
    std::vector<std::vector<double>> orbit_cos;
    std::vector<std::vector<double>> orbit_sin;

    EnumCore(const SearchPlan& plan, Block block, const OrbitTable& table) {
        v = table.modulus();
        target = plan.target(block);
        psd_bound = 2.0 * v + plan.psd_slack;
        window = block == Block::x ? plan.window_x : plan.window_y;
        const auto& forced_reps = block == Block::x ? plan.forced_x : plan.forced_y;
        const auto& excluded_reps = block == Block::x ? plan.excluded_x : plan.excluded_y;
        const std::set<int> forced_set(forced_reps.begin(), forced_reps.end());
        const std::set<int> excluded_set(excluded_reps.begin(), excluded_reps.end());
        for (const SubsetZv& orbit : table.orbits()) {
            const int rep = orbit.elements().front();
            if (excluded_set.count(rep)) continue;
            orbits.push_back({rep, orbit.size(), forced_set.count(rep) > 0, &orbit.elements()});
            max_rep = std::max(max_rep, rep);
        }

        const std::size_t n = orbits.size();
        reach.assign(n + 1, {});
        reach[n].set(0);
        for (std::size_t i = n; i-- > 0;) {
            const auto shifted = reach[i + 1] << static_cast<std::size_t>(orbits[i].size);
            reach[i] = orbits[i].forced ? shifted : (reach[i + 1] | shifted);
        }
        if (!reach[0].test(static_cast<std::size_t>(target))) {
            throw Error(errc::unreachable_cardinality,
                        "target cardinality " + std::to_string(target) +
                            " is not a sum of available orbit sizes");
        }

        half = v / 2;
        std::vector<double> cos_table(static_cast<std::size_t>(v));
        std::vector<double> sin_table(static_cast<std::size_t>(v));
        for (int t = 0; t < v; ++t) {
            const double angle = 2.0 * std::numbers::pi * t / v;
            cos_table[static_cast<std::size_t>(t)] = std::cos(angle);
            sin_table[static_cast<std::size_t>(t)] = std::sin(angle);
        }
        orbit_cos.assign(static_cast<std::size_t>(half), std::vector<double>(n, 0.0));
        orbit_sin.assign(static_cast<std::size_t>(half), std::vector<double>(n, 0.0));
        for (std::size_t o = 0; o < n; ++o) {
            for (int k = 1; k <= half; ++k) {
                double re = 0;
                double im = 0;
                for (int e : *orbits[o].elements) {
                    const int t = static_cast<int>(static_cast<long long>(e) * k % v);
                    re += cos_table[static_cast<std::size_t>(t)];
                    im += sin_table[static_cast<std::size_t>(t)];
                }
                orbit_cos[static_cast<std::size_t>(k - 1)][o] = re;
                orbit_sin[static_cast<std::size_t>(k - 1)][o] = im;
            }
        }
    }
};

struct ResumePoint {
    std::vector<int> chosen;  // orbit indices
    int next = 0;
    int remaining = 0;
};

class Walker {
public:
    Walker(const EnumCore& core, const std::function<void(const CandidateRecord&)>& sink,
           EnumStats& stats)
        : core_(core), sink_(sink), stats_(stats) {}

    void run(const ResumePoint& point) {
        chosen_idx_ = point.chosen;
        chosen_reps_.clear();
        for (int idx : chosen_idx_) {
            chosen_reps_.push_back(core_.orbits[static_cast<std::size_t>(idx)].rep);
        }
        dfs(point.next, point.remaining);
    }

private:
    void dfs(int i, int remaining) {
        if (!core_.reach[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(remaining))) {
            return;
        }
        if (remaining == 0) {
            emit();
            return;
        }
        if (prefix_at_or_beyond_to() || subtree_below_from()) {
            return;
        }
        const AvailableOrbit& orbit = core_.orbits[static_cast<std::size_t>(i)];
        if (orbit.size <= remaining) {
            chosen_idx_.push_back(i);
            chosen_reps_.push_back(orbit.rep);
            dfs(i + 1, remaining - orbit.size);
            chosen_idx_.pop_back();
            chosen_reps_.pop_back();
        }
        if (!orbit.forced) {
            dfs(i + 1, remaining);
        }
    }

    // Every leaf below extends chosen_reps_, so once the prefix itself
    // reaches the exclusive upper bound the whole subtree is out.
    bool prefix_at_or_beyond_to() const {
        return core_.window.to && !(chosen_reps_ < *core_.window.to);
    }

    // The lexicographically largest leaf below is bounded by the prefix
    // padded with the largest representative; if even that stays below the
    // lower bound the subtree is out.
    bool subtree_below_from() const {
        if (!core_.window.from) return false;
        const std::vector<int>& from = *core_.window.from;
        for (std::size_t pos = 0; pos < from.size(); ++pos) {
            const int bound = pos < chosen_reps_.size() ? chosen_reps_[pos] : core_.max_rep;
            if (bound < from[pos]) return true;
            if (bound > from[pos]) return false;
        }
        return false;
    }

    bool psd_passes() const {
        for (int k = 1; k <= core_.half; ++k) {
            const std::vector<double>& cos_row = core_.orbit_cos[static_cast<std::size_t>(k - 1)];
            const std::vector<double>& sin_row = core_.orbit_sin[static_cast<std::size_t>(k - 1)];
            double re = 0;
            double im = 0;
            for (int idx : chosen_idx_) {
                re += cos_row[static_cast<std::size_t>(idx)];
                im += sin_row[static_cast<std::size_t>(idx)];
            }
            // DFT of the +/-1 sequence at k != 0 is -2 * (subset sum).
            if (4.0 * (re * re + im * im) > core_.psd_bound) {
                return false;
            }
        }
        return true;
    }

    void emit() {
        if (!core_.window.contains(chosen_reps_)) {
            return;
        }
        ++stats_.combinations;
        if (!psd_passes()) {
            return;
        }
        ++stats_.psd_passed;
        std::vector<int> elements;
        elements.reserve(static_cast<std::size_t>(core_.target));
        for (int idx : chosen_idx_) {
            const auto& orbit_elements = *core_.orbits[static_cast<std::size_t>(idx)].elements;
            elements.insert(elements.end(), orbit_elements.begin(), orbit_elements.end());
        }
        const SubsetZv subset(core_.v, std::move(elements));
        DifferenceMultiplicity fp = difference_multiplicities(core_.v, {subset});
        CandidateRecord record;
        record.v = core_.v;
        record.reps = chosen_reps_;
        record.cardinality = core_.target;
        record.fingerprint = std::move(fp.counts);
        sink_(record);
    }

    const EnumCore& core_;
    const std::function<void(const CandidateRecord&)>& sink_;
    EnumStats& stats_;
    std::vector<int> chosen_idx_;
    std::vector<int> chosen_reps_;
};

// Resume points at a fixed decision depth partition the DFS tree into
// shared-nothing units in lexicographic order; workers drain them through an
// atomic cursor and the outputs are stitched back in unit order, so the
// record stream is identical for every job count.
std::vector<ResumePoint> collect_units(const EnumCore& core, int depth) {
    std::vector<ResumePoint> units;
    std::vector<int> chosen;
    const int n = static_cast<int>(core.orbits.size());
    const auto descend = [&](auto&& self, int i, int remaining, int levels) -> void {
        if (!core.reach[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(remaining))) {
            return;
        }
        if (levels == 0 || remaining == 0 || i == n) {
            units.push_back({chosen, i, remaining});
            return;
        }
        const AvailableOrbit& orbit = core.orbits[static_cast<std::size_t>(i)];
        if (orbit.size <= remaining) {
            chosen.push_back(i);
            self(self, i + 1, remaining - orbit.size, levels - 1);
            chosen.pop_back();
        }
        if (!orbit.forced) {
            self(self, i + 1, remaining, levels - 1);
        }
    };
    descend(descend, 0, core.target, depth);
    return units;
}

}  // namespace

void for_each_candidate(const SearchPlan& plan, Block block, const OrbitTable& table,
                        const std::function<void(const CandidateRecord&)>& sink,
                        EnumStats* stats, const EnumerateOptions& options) {
    plan.validate(table);
    const EnumCore core(plan, block, table);
    EnumStats local;
    EnumStats& out_stats = stats ? *stats : local;
    out_stats = {};

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        Walker walker(core, sink, out_stats);
        walker.run({{}, 0, core.target});
        return;
    }

    std::vector<ResumePoint> units = collect_units(core, 0);
    for (int depth = 2; depth <= 16 && units.size() < static_cast<std::size_t>(4 * jobs);
         depth += 2) {
        units = collect_units(core, depth);
    }

    std::vector<std::vector<CandidateRecord>> buffers(units.size());
    std::vector<EnumStats> unit_stats(units.size());
    std::atomic<std::size_t> cursor{0};
    const auto work = [&]() {
        for (;;) {
            const std::size_t u = cursor.fetch_add(1);
            if (u >= units.size()) {
                return;
            }
            std::function<void(const CandidateRecord&)> buffer_sink =
                [&buffers, u](const CandidateRecord& r) { buffers[u].push_back(r); };
            Walker walker(core, buffer_sink, unit_stats[u]);
            walker.run(units[u]);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back(work);
    }
    for (std::thread& t : threads) {
        t.join();
    }
    for (std::size_t u = 0; u < units.size(); ++u) {
        out_stats.combinations += unit_stats[u].combinations;
        out_stats.psd_passed += unit_stats[u].psd_passed;
        for (const CandidateRecord& record : buffers[u]) {
            sink(record);
        }
    }
}

std::vector<CandidateRecord> enumerate_candidates(const SearchPlan& plan, Block block,
                                                  const OrbitTable& table, EnumStats* stats,
                                                  const EnumerateOptions& options) {
    std::vector<CandidateRecord> records;
    for_each_candidate(
        plan, block, table, [&records](const CandidateRecord& r) { records.push_back(r); }, stats,
        options);
    return records;
}

std::vector<CandidateRecord> translate_candidates(const std::vector<CandidateRecord>& records,
                                                  const OrbitTable& table) {
    std::vector<CandidateRecord> out;
    out.reserve(records.size() * table.subgroup().elements().size());
    for (const CandidateRecord& record : records) {
        const SubsetZv x = expand_index_set(table, record.reps);
        for (int h : table.subgroup().elements()) {
            const SubsetZv hx = multiply_subset(x, h);
            CandidateRecord translated;
            translated.v = record.v;
            translated.reps = compress_to_index_set(table, hx);
            translated.cardinality = hx.size();
            translated.fingerprint = difference_multiplicities(record.v, {hx}).counts;
            out.push_back(std::move(translated));
        }
    }
    return out;
}

DifferenceMultiplicity complement_fingerprint(const DifferenceMultiplicity& f, long long lambda) {
    auto result = try_complement_fingerprint(f, lambda);
    if (!result) {
        throw Error(errc::count_exceeds_lambda,
                    "a multiplicity exceeds lambda = " + std::to_string(lambda) +
                        "; the candidate cannot participate in any match");
    }
    return *std::move(result);
}

std::optional<DifferenceMultiplicity> try_complement_fingerprint(const DifferenceMultiplicity& f,
                                                                 long long lambda) {
    DifferenceMultiplicity out;
    out.v = f.v;
    out.counts.resize(f.counts.size());
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (f.counts[i] > lambda) {
            return std::nullopt;
        }
        out.counts[i] = static_cast<int>(lambda - f.counts[i]);
    }
    return out;
}

// --- Candidate files ---------------------------------------------------------

std::string format_candidate(const CandidateRecord& record) {
    std::string line = "v=" + std::to_string(record.v);
    line += " reps=" + join_ints(record.reps);
    line += " card=" + std::to_string(record.cardinality);
    line += " fp=" + join_ints(record.fingerprint);
    return line;
}

CandidateRecord parse_candidate(std::string_view line) {
    CandidateRecord record;
    bool have_v = false;
    bool have_card = false;
    bool have_reps = false;
    bool have_fp = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos >= line.size()) break;
        const std::size_t end = line.find(' ', pos);
        const std::string_view token =
            line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? line.size() : end + 1;
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) {
            throw Error(errc::parse_error, "candidate token without '=': " + std::string(token));
        }
        const std::string_view key = token.substr(0, eq);
        const std::string_view value = token.substr(eq + 1);
        if (key == "v") {
            auto [next, ec] = std::from_chars(value.data(), value.data() + value.size(), record.v);
            if (ec != std::errc() || next != value.data() + value.size()) {
                throw Error(errc::parse_error, "bad v value");
            }
            have_v = true;
        } else if (key == "reps") {
            record.reps = parse_csv_ints(value, "reps");
            have_reps = true;
        } else if (key == "card") {
            auto [next, ec] =
                std::from_chars(value.data(), value.data() + value.size(), record.cardinality);
            if (ec != std::errc() || next != value.data() + value.size()) {
                throw Error(errc::parse_error, "bad card value");
            }
            have_card = true;
        } else if (key == "fp") {
            record.fingerprint = parse_csv_ints(value, "fp");
            have_fp = true;
        } else {
            throw Error(errc::parse_error, "unknown candidate key: " + std::string(key));
        }
    }
    if (!have_v || !have_card || !have_reps || !have_fp) {
        throw Error(errc::parse_error, "candidate line missing required keys");
    }
    if (record.v < 1 || record.fingerprint.size() != static_cast<std::size_t>(record.v - 1)) {
        throw Error(errc::parse_error, "fingerprint length does not match v");
    }
    return record;
}

void write_candidate_file(const std::filesystem::path& path,
                          const std::vector<CandidateRecord>& records, bool sorted_by_fp) {
    std::ofstream out(path);
    if (!out) {
        throw Error(errc::io_error, "cannot open " + path.string() + " for writing");
    }
    if (sorted_by_fp) {
        out << "#sorted-by=fp\n";
    }
    for (const CandidateRecord& record : records) {
        out << format_candidate(record) << '\n';
    }
    if (!out) {
        throw Error(errc::io_error, "write failed: " + path.string());
    }
}

CandidateFile read_candidate_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open " + path.string());
    }
    CandidateFile file;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line == "#sorted-by=fp") {
                file.sorted_by_fp = true;
            }
            continue;
        }
        file.records.push_back(parse_candidate(line));
    }
    return file;
}

namespace {

bool record_sort_less(const CandidateRecord& a, const CandidateRecord& b) {
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    if (a.cardinality != b.cardinality) return a.cardinality < b.cardinality;
    if (a.reps != b.reps) return a.reps < b.reps;
    return a.v < b.v;
}

class TempDir {
public:
    explicit TempDir(const std::filesystem::path& base) {
        static std::atomic<unsigned> counter{0};
        const auto root = base.empty() ? std::filesystem::temp_directory_path() : base;
        const auto tick =
            std::chrono::steady_clock::now().time_since_epoch().count() & 0xffffff;
        path_ = root / ("pgolay-" + std::to_string(tick) + "-" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

class RunReader {
public:
    explicit RunReader(const std::filesystem::path& path) : in_(path) {
        if (!in_) {
            throw Error(errc::io_error, "cannot open " + path.string());
        }
        advance();
    }

    const CandidateRecord* current() const { return has_ ? &record_ : nullptr; }

    void advance() {
        std::string line;
        while (std::getline(in_, line)) {
            if (line.empty() || line[0] == '#') continue;
            record_ = parse_candidate(line);
            has_ = true;
            return;
        }
        has_ = false;
    }

private:
    std::ifstream in_;
    CandidateRecord record_;
    bool has_ = false;
};

}  // namespace

void external_sort_candidate_file(const std::filesystem::path& in,
                                  const std::filesystem::path& out, std::size_t chunk_records) {
    if (chunk_records == 0) {
        throw Error(errc::invalid_argument, "chunk_records must be positive");
    }
    std::ifstream input(in);
    if (!input) {
        throw Error(errc::io_error, "cannot open " + in.string());
    }
    TempDir temp(out.parent_path());
    std::vector<std::filesystem::path> runs;
    std::vector<CandidateRecord> chunk;
    chunk.reserve(chunk_records);
    std::string line;
    const auto flush_chunk = [&]() {
        if (chunk.empty()) return;
        std::sort(chunk.begin(), chunk.end(), record_sort_less);
        const auto run_path = temp.path() / ("run" + std::to_string(runs.size()) + ".txt");
        write_candidate_file(run_path, chunk, false);
        runs.push_back(run_path);
        chunk.clear();
    };
    while (std::getline(input, line)) {
        if (line.empty() || line[0] == '#') continue;
        chunk.push_back(parse_candidate(line));
        if (chunk.size() >= chunk_records) {
            flush_chunk();
        }
    }
    flush_chunk();

    std::ofstream output(out);
    if (!output) {
        throw Error(errc::io_error, "cannot open " + out.string() + " for writing");
    }
    output << "#sorted-by=fp\n";

    std::vector<RunReader> readers;
    readers.reserve(runs.size());
    for (const auto& run : runs) {
        readers.emplace_back(run);
    }
    const auto heap_greater = [&readers](std::size_t a, std::size_t b) {
        return record_sort_less(*readers[b].current(), *readers[a].current());
    };
    std::vector<std::size_t> heap;
    for (std::size_t i = 0; i < readers.size(); ++i) {
        if (readers[i].current()) heap.push_back(i);
    }
    std::make_heap(heap.begin(), heap.end(), heap_greater);
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), heap_greater);
        const std::size_t idx = heap.back();
        heap.pop_back();
        output << format_candidate(*readers[idx].current()) << '\n';
        readers[idx].advance();
        if (readers[idx].current()) {
            heap.push_back(idx);
            std::push_heap(heap.begin(), heap.end(), heap_greater);
        }
    }
    if (!output) {
        throw Error(errc::io_error, "write failed: " + out.string());
    }
}

// --- Joins -------------------------------------------------------------------

std::vector<RawMatch> join_complementary(const std::vector<CandidateRecord>& xs,
                                         const std::vector<CandidateRecord>& ys, long long lambda,
                                         std::uint64_t* dropped_y) {
    std::uint64_t dropped = 0;
    int v = 0;
    const auto check_v = [&v](const CandidateRecord& r) {
        if (v == 0) {
            v = r.v;
        } else if (r.v != v) {
            throw Error(errc::incompatible_moduli,
                        std::to_string(r.v) + " vs " + std::to_string(v));
        }
    };
    std::unordered_map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t j = 0; j < ys.size(); ++j) {
        check_v(ys[j]);
        DifferenceMultiplicity fp{ys[j].v, ys[j].fingerprint};
        const auto complemented = try_complement_fingerprint(fp, lambda);
        if (!complemented) {
            ++dropped;
            continue;
        }
        by_key[join_ints(complemented->counts)].push_back(j);
    }
    std::vector<RawMatch> matches;
    for (const CandidateRecord& x : xs) {
        check_v(x);
        const auto it = by_key.find(join_ints(x.fingerprint));
        if (it == by_key.end()) continue;
        for (std::size_t j : it->second) {
            matches.push_back({x, ys[j]});
        }
    }
    if (dropped_y) *dropped_y = dropped;
    return matches;
}

std::vector<RawMatch> join_candidate_files(const std::filesystem::path& file_x,
                                           const std::filesystem::path& file_y, long long lambda,
                                           const JoinOptions& options, std::uint64_t* dropped_y) {
    TempDir temp(options.temp_dir);

    // Complement the Y multiplicities first, exactly as the two-file method
    // prescribes, dropping records that cannot match.
    const auto y_comp_path = temp.path() / "y_complemented.txt";
    std::uint64_t dropped = 0;
    int v_y = 0;
    {
        std::ifstream in(file_y);
        if (!in) {
            throw Error(errc::io_error, "cannot open " + file_y.string());
        }
        std::ofstream out(y_comp_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            CandidateRecord record = parse_candidate(line);
            if (v_y == 0) {
                v_y = record.v;
            } else if (record.v != v_y) {
                throw Error(errc::incompatible_moduli, "mixed moduli in " + file_y.string());
            }
            const auto complemented =
                try_complement_fingerprint({record.v, record.fingerprint}, lambda);
            if (!complemented) {
                ++dropped;
                continue;
            }
            record.fingerprint = complemented->counts;
            out << format_candidate(record) << '\n';
        }
    }
    if (dropped_y) *dropped_y = dropped;

    const auto x_sorted = temp.path() / "x_sorted.txt";
    const auto y_sorted = temp.path() / "y_sorted.txt";
    external_sort_candidate_file(file_x, x_sorted, options.sort_chunk_records);
    external_sort_candidate_file(y_comp_path, y_sorted, options.sort_chunk_records);

    // Linear merge over the two fingerprint-sorted files; equal-key blocks
    // are cross-producted.
    std::vector<RawMatch> matches;
    RunReader rx(x_sorted);
    RunReader ry(y_sorted);
    if (rx.current() && ry.current() && v_y != 0 && rx.current()->v != v_y) {
        throw Error(errc::incompatible_moduli,
                    std::to_string(rx.current()->v) + " vs " + std::to_string(v_y));
    }
    while (rx.current() && ry.current()) {
        const std::vector<int>& fx = rx.current()->fingerprint;
        const std::vector<int>& fy = ry.current()->fingerprint;
        if (fx < fy) {
            rx.advance();
        } else if (fy < fx) {
            ry.advance();
        } else {
            const std::vector<int> key = fx;
            std::vector<CandidateRecord> block_x;
            while (rx.current() && rx.current()->fingerprint == key) {
                block_x.push_back(*rx.current());
                rx.advance();
            }
            std::vector<CandidateRecord> block_y;
            while (ry.current() && ry.current()->fingerprint == key) {
                block_y.push_back(*ry.current());
                ry.advance();
            }
            for (const CandidateRecord& x : block_x) {
                for (const CandidateRecord& y : block_y) {
                    RawMatch match{x, y};
                    // Restore the raw Y fingerprint from its complement.
                    for (int& c : match.y.fingerprint) {
                        c = static_cast<int>(lambda - c);
                    }
                    matches.push_back(std::move(match));
                }
            }
        }
    }
    return matches;
}

namespace {

MatchOutcome verify_and_dedup(std::vector<RawMatch> raw, std::uint64_t dropped_y,
                              const OrbitTable& table) {
    MatchOutcome outcome;
    outcome.raw_matches = raw.size();
    outcome.dropped_y = dropped_y;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> classes;
    for (RawMatch& match : raw) {
        const SubsetZv x = expand_index_set(table, match.x.reps);
        const SubsetZv y = expand_index_set(table, match.y.reps);
        try {
            verify_periodic_golay_pair(x, y);
        } catch (const Error&) {
            ++outcome.failed_verification;
            continue;
        }
        auto canonical = elementary_canonical_form(x, y);
        const auto key = std::make_pair(canonical.first.elements(), canonical.second.elements());
        VerifiedMatch verified{std::move(match.x), std::move(match.y), std::move(canonical)};
        const std::size_t index = outcome.verified.size();
        outcome.verified.push_back(std::move(verified));
        if (classes.emplace(key, index).second) {
            outcome.class_representatives.push_back(index);
        }
    }
    return outcome;
}

}  // namespace

MatchOutcome match_join(const std::vector<CandidateRecord>& xs,
                        const std::vector<CandidateRecord>& ys, long long lambda,
                        const OrbitTable& table, const JoinOptions& options) {
    bool external = options.mode == JoinMode::external;
    if (options.mode == JoinMode::automatic) {
        const std::size_t record_bytes =
            (xs.empty() ? 64 : 64 + 4 * (xs[0].fingerprint.size() + xs[0].reps.size()));
        external = (xs.size() + ys.size()) * record_bytes > options.memory_budget_bytes;
    }
    std::uint64_t dropped = 0;
    std::vector<RawMatch> raw;
    if (external) {
        TempDir temp(options.temp_dir);
        const auto x_path = temp.path() / "x.txt";
        const auto y_path = temp.path() / "y.txt";
        write_candidate_file(x_path, xs, false);
        write_candidate_file(y_path, ys, false);
        raw = join_candidate_files(x_path, y_path, lambda, options, &dropped);
    } else {
        raw = join_complementary(xs, ys, lambda, &dropped);
    }
    return verify_and_dedup(std::move(raw), dropped, table);
}

MatchOutcome match_join_files(const std::filesystem::path& file_x,
                              const std::filesystem::path& file_y, long long lambda,
                              const OrbitTable& table, const JoinOptions& options) {
    std::uint64_t dropped = 0;
    std::vector<RawMatch> raw = join_candidate_files(file_x, file_y, lambda, options, &dropped);
    return verify_and_dedup(std::move(raw), dropped, table);
}

// --- Pipeline ----------------------------------------------------------------

PipelineResult run_pipeline(const SearchPlan& plan, const PipelineOptions& options) {
    const UnitSubgroup h = close_subgroup(plan.v, plan.h_generators);
    const OrbitTable table = orbit_partition(h);
    plan.validate(table);

    PipelineResult result;
    result.plan = plan;
    result.h_elements = h.elements();

    const EnumerateOptions enum_options{options.jobs};
    std::vector<CandidateRecord> xs =
        enumerate_candidates(plan, Block::x, table, &result.x_stats, enum_options);
    std::vector<CandidateRecord> ys =
        enumerate_candidates(plan, Block::y, table, &result.y_stats, enum_options);

    if (plan.translate_x) {
        xs = translate_candidates(xs, table);
    }
    result.x_records = xs.size();

    if (options.out_dir) {
        std::filesystem::create_directories(*options.out_dir);
        write_candidate_file(*options.out_dir / "candidates_x.txt", xs, false);
        write_candidate_file(*options.out_dir / "candidates_y.txt", ys, false);
        std::vector<CandidateRecord> ys_complemented;
        for (const CandidateRecord& y : ys) {
            const auto complemented =
                try_complement_fingerprint({y.v, y.fingerprint}, plan.lambda());
            if (!complemented) continue;
            CandidateRecord copy = y;
            copy.fingerprint = complemented->counts;
            ys_complemented.push_back(std::move(copy));
        }
        write_candidate_file(*options.out_dir / "candidates_y_complemented.txt", ys_complemented,
                             false);
    }

    result.match = match_join(xs, ys, plan.lambda(), table, options.join);
    result.y_records = ys.size() - result.match.dropped_y;

    for (const VerifiedMatch& match : result.match.verified) {
        SolutionRecord solution;
        solution.v = plan.v;
        solution.h_elements = h.elements();
        solution.j_reps = match.x.reps;
        solution.k_reps = match.y.reps;
        solution.r = plan.r;
        solution.s = plan.s;
        solution.lambda = plan.lambda();
        result.solutions.push_back(std::move(solution));
    }
    for (std::size_t index : result.match.class_representatives) {
        result.solution_classes.push_back(result.solutions[index]);
    }
    return result;
}

void write_report(std::ostream& out, const PipelineResult& result) {
    const SearchPlan& plan = result.plan;
    out << "search report: v=" << plan.v << " H={" << join_ints(result.h_elements) << "}"
        << " targets r=" << plan.r << " s=" << plan.s << " lambda=" << plan.lambda() << "\n";
    const auto window_line = [&out](const char* name, const Window& window) {
        if (!window.from && !window.to) return;
        out << "  window " << name << ": ["
            << (window.from ? join_ints(*window.from) : std::string("-inf")) << ", "
            << (window.to ? join_ints(*window.to) : std::string("+inf")) << ")\n";
    };
    window_line("x", plan.window_x);
    window_line("y", plan.window_y);
    out << "stage counts:\n";
    out << "  x combinations in window: " << result.x_stats.combinations << "\n";
    out << "  x psd passed:             " << result.x_stats.psd_passed << "\n";
    out << "  x records"
        << (plan.translate_x ? " (after translate):" : ":                ") << " "
        << result.x_records << "\n";
    out << "  y combinations in window: " << result.y_stats.combinations << "\n";
    out << "  y psd passed:             " << result.y_stats.psd_passed << "\n";
    out << "  y records after complement drop: " << result.y_records << "\n";
    out << "  raw matches:              " << result.match.raw_matches << "\n";
    out << "  verified pairs:           " << result.match.verified.size() << "\n";
    out << "  elementary-inequivalent classes: " << result.match.class_representatives.size()
        << "\n";
    if (!result.solution_classes.empty()) {
        out << "verified pairs (one per elementary-inequivalence class):\n";
        for (const SolutionRecord& solution : result.solution_classes) {
            out << "J=" << join_ints(solution.j_reps) << " K=" << join_ints(solution.k_reps)
                << " H=" << join_ints(solution.h_elements) << " v=" << solution.v << "\n";
        }
    }
}

}  // namespace pgolay
