#pragma once

// Enumeration of subsets of E_n (n <= 3) modulo variable renaming, with a
// sound classification of each subset and a bracket on theta(n).

#include "enkit/bigint.hpp"
#include "enkit/solver.hpp"
#include "enkit/system.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace enkit {

using SubsetId = std::uint64_t;

enum class SubsetStatus { UnsatCertified, PinnedFinite, Solved, Unknown };

std::string to_string(SubsetStatus s);
SubsetStatus parse_subset_status(std::string_view s);

struct ClassificationRecord {
    SubsetId id = 0;
    SubsetStatus status = SubsetStatus::Unknown;
    std::optional<BigInt> maxnorm;       // PinnedFinite and Solved
    std::optional<Assignment> witness;   // not persisted in checkpoints
    std::string note;                    // certificate summary or why Unknown

    bool operator==(const ClassificationRecord&) const = default;
};

constexpr std::uint64_t kDefaultThetaBudget = 100'000;

// Unsat certificate, then a pinning certificate, then the minimal max-norm
// solution up to cap; anything else is Unknown.
ClassificationRecord classify_subset(const System& sys, const BigInt& cap, std::uint64_t budget = kDefaultThetaBudget);

// The subset of universe(n) selected by mask (bit b = b-th universe equation).
System subset_system(std::size_t n, SubsetId mask);

// Inverse of subset_system for systems whose equations lie in universe(n).
SubsetId subset_mask(const System& sys);

// Images of subset masks under the n! variable permutations.
class OrbitTable {
public:
    explicit OrbitTable(std::size_t n);  // 1 <= n <= 3

    std::size_t n() const { return n_; }
    std::size_t universe_bits() const { return bits_; }

    SubsetId apply(std::size_t perm, SubsetId mask) const;
    std::size_t permutation_count() const { return perms_; }

    SubsetId representative(SubsetId mask) const;
    bool is_representative(SubsetId mask) const;

    // Distinct images, ascending.
    std::vector<SubsetId> orbit(SubsetId mask) const;

private:
    static constexpr std::size_t kChunk = 7;
    std::size_t n_;
    std::size_t bits_;
    std::size_t perms_;
    std::size_t chunks_;
    // table_[perm][chunk][value]: image of the bits of one chunk
    std::vector<std::vector<std::array<SubsetId, 1u << kChunk>>> table_;
};

SubsetId orbit_representative(SubsetId mask, std::size_t n);

struct ThetaLedger {
    std::size_t n = 0;
    BigInt lower;  // max min-maxnorm over pinned (finite) subsets; 0 when none
    BigInt upper;  // max min-maxnorm over every solvable subset found; 0 when none
    std::optional<SubsetId> lower_witness;
    std::optional<SubsetId> upper_witness;
    std::uint64_t unknown_count = 0;
    std::uint64_t unsat_count = 0;
    std::uint64_t pinned_count = 0;
    std::uint64_t solved_count = 0;

    std::uint64_t classified() const { return unknown_count + unsat_count + pinned_count + solved_count; }

    // theta(n) = lower when nothing is unknown and the bracket closes.
    bool exact() const { return unknown_count == 0 && lower > 0 && lower == upper; }

    void add(const ClassificationRecord& r);
    void merge(const ThetaLedger& other);

    bool operator==(const ThetaLedger&) const = default;
};

struct ThetaOptions {
    std::size_t n = 1;
    BigInt cap{256};
    std::uint64_t budget = kDefaultThetaBudget;
    std::size_t shard_index = 0;
    std::size_t shard_count = 1;
    unsigned threads = 1;
    // Checkpoint file: existing records are replayed, new ones appended.
    std::optional<std::string> checkpoint;
    std::function<void(const ClassificationRecord&)> on_record;
};

struct ThetaRun {
    ThetaLedger ledger;
    std::vector<SubsetId> unknown_ids;  // ascending
    SubsetId range_begin = 0;
    SubsetId range_end = 0;
    std::uint64_t replayed = 0;  // records taken from the checkpoint
};

// [begin, end) of the shard's id range.
std::pair<SubsetId, SubsetId> shard_range(std::size_t n, std::size_t index, std::size_t count);

// Throws Error(InvalidArgument) for n outside 1..3 or a bad shard,
// Error(Checkpoint) for a corrupt or mismatched checkpoint.
ThetaRun enumerate_theta(const ThetaOptions& opts);

// Checkpoint lines: `# enkit-theta n=N cap=C budget=B shard=I/K` then
// `<hex id> <STATUS> [maxnorm]`.
std::string checkpoint_header(const ThetaOptions& opts);
std::string format_record(const ClassificationRecord& r);
ClassificationRecord parse_record(std::string_view line);

struct OrbitCheck {
    std::size_t orbits = 0;
    std::size_t members = 0;
    std::vector<SubsetId> mismatches;  // representatives whose orbit disagrees
};

// Classifies every member of `samples` random orbits and compares status
// and max-norm with the representative's.
OrbitCheck orbit_invariance_check(std::size_t n, std::size_t samples, std::uint64_t seed, const BigInt& cap,
                                  std::uint64_t budget = kDefaultThetaBudget);

}  // namespace enkit
