#include "enkit/theta.hpp"

#include "enkit/error.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace enkit {

std::string to_string(SubsetStatus s) {
    switch (s) {
        case SubsetStatus::UnsatCertified: return "UNSAT_CERTIFIED";
        case SubsetStatus::PinnedFinite: return "PINNED_FINITE";
        case SubsetStatus::Solved: return "SOLVED";
        case SubsetStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

SubsetStatus parse_subset_status(std::string_view s) {
    if (s == "UNSAT_CERTIFIED") return SubsetStatus::UnsatCertified;
    if (s == "PINNED_FINITE") return SubsetStatus::PinnedFinite;
    if (s == "SOLVED") return SubsetStatus::Solved;
    if (s == "UNKNOWN") return SubsetStatus::Unknown;
    throw Error(ErrorCode::Parse, "unknown subset status '" + std::string(s) + "'");
}

ClassificationRecord classify_subset(const System& sys, const BigInt& cap, std::uint64_t budget) {
    ClassificationRecord r;
    if (auto cert = certify_unsat(sys)) {
        r.status = SubsetStatus::UnsatCertified;
        r.note = cert->describe();
        return r;
    }
    if (auto a = certify_unique_pinned(sys)) {
        r.status = SubsetStatus::PinnedFinite;
        r.maxnorm = a->max_norm();
        r.witness = std::move(*a);
        r.note = "pinned";
        return r;
    }
    SolveOptions opts;
    opts.node_budget = budget;
    auto m = min_maxnorm_solution(sys, cap, opts);
    switch (m.status) {
        case MinNormResult::Status::Found:
            r.status = SubsetStatus::Solved;
            r.maxnorm = m.solution->max_norm();
            r.witness = std::move(m.solution);
            break;
        case MinNormResult::Status::NoneUpToCap:
            r.status = SubsetStatus::Unknown;
            r.note = "no solution up to cap " + to_decimal(cap);
            break;
        case MinNormResult::Status::BudgetExceeded:
            r.status = SubsetStatus::Unknown;
            r.note = "node budget " + std::to_string(budget) + " exceeded";
            break;
    }
    return r;
}

System subset_system(std::size_t n, SubsetId mask) {
    const auto all = universe(n);
    std::vector<Equation> eqs;
    for (std::size_t b = 0; b < all.size(); ++b)
        if (mask >> b & 1) eqs.push_back(all.equations()[b]);
    return System(n, std::move(eqs));
}

SubsetId subset_mask(const System& sys) {
    SubsetId m = 0;
    for (const auto& eq : sys.equations()) m |= SubsetId{1} << universe_index(eq.canonical(), sys.n());
    return m;
}

namespace {

std::vector<std::vector<VarIndex>> permutations(std::size_t n) {
    std::vector<VarIndex> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<VarIndex>(i + 1);
    std::vector<std::vector<VarIndex>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

OrbitTable::OrbitTable(std::size_t n) : n_(n) {
    if (n < 1 || n > 3) throw Error(ErrorCode::InvalidArgument, "orbit tables support 1 <= n <= 3");
    const auto all = universe(n);
    bits_ = all.size();
    chunks_ = (bits_ + kChunk - 1) / kChunk;
    const auto perms = permutations(n);
    perms_ = perms.size();

    table_.assign(perms_, std::vector<std::array<SubsetId, 1u << kChunk>>(chunks_));
    for (std::size_t p = 0; p < perms_; ++p) {
        const auto& pi = perms[p];
        std::vector<SubsetId> image(bits_);
        for (std::size_t b = 0; b < bits_; ++b) {
            const auto& eq = all.equations()[b];
            Equation moved = eq.is_mul() ? Equation::mul(pi[eq.i - 1], pi[eq.j - 1], pi[eq.k - 1])
                                         : Equation::succ(pi[eq.i - 1], pi[eq.k - 1]);
            image[b] = SubsetId{1} << universe_index(moved.canonical(), n);
        }
        for (std::size_t c = 0; c < chunks_; ++c) {
            for (std::size_t v = 0; v < (1u << kChunk); ++v) {
                SubsetId m = 0;
                for (std::size_t t = 0; t < kChunk; ++t) {
                    std::size_t b = c * kChunk + t;
                    if ((v >> t & 1) && b < bits_) m |= image[b];
                }
                table_[p][c][v] = m;
            }
        }
    }
}

SubsetId OrbitTable::apply(std::size_t perm, SubsetId mask) const {
    SubsetId m = 0;
    const auto& t = table_[perm];
    for (std::size_t c = 0; c < chunks_; ++c) m |= t[c][(mask >> (c * kChunk)) & ((1u << kChunk) - 1)];
    return m;
}

SubsetId OrbitTable::representative(SubsetId mask) const {
    SubsetId best = mask;
    for (std::size_t p = 1; p < perms_; ++p) best = std::min(best, apply(p, mask));
    return best;
}

bool OrbitTable::is_representative(SubsetId mask) const {
    for (std::size_t p = 1; p < perms_; ++p)
        if (apply(p, mask) < mask) return false;
    return true;
}

std::vector<SubsetId> OrbitTable::orbit(SubsetId mask) const {
    std::vector<SubsetId> out;
    for (std::size_t p = 0; p < perms_; ++p) out.push_back(apply(p, mask));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SubsetId orbit_representative(SubsetId mask, std::size_t n) { return OrbitTable(n).representative(mask); }

void ThetaLedger::add(const ClassificationRecord& r) {
    switch (r.status) {
        case SubsetStatus::UnsatCertified: ++unsat_count; return;
        case SubsetStatus::Unknown: ++unknown_count; return;
        case SubsetStatus::PinnedFinite:
            ++pinned_count;
            if (r.maxnorm && (*r.maxnorm > lower || (*r.maxnorm == lower && lower_witness && r.id < *lower_witness))) {
                lower = *r.maxnorm;
                lower_witness = r.id;
            }
            break;
        case SubsetStatus::Solved: ++solved_count; break;
    }
    if (r.maxnorm && (*r.maxnorm > upper || (*r.maxnorm == upper && upper_witness && r.id < *upper_witness))) {
        upper = *r.maxnorm;
        upper_witness = r.id;
    }
}

void ThetaLedger::merge(const ThetaLedger& o) {
    auto better = [](const BigInt& v, const std::optional<SubsetId>& w, const BigInt& cur,
                     const std::optional<SubsetId>& cur_w) {
        if (!w) return false;
        if (!cur_w) return true;
        return v > cur || (v == cur && *w < *cur_w);
    };
    if (better(o.lower, o.lower_witness, lower, lower_witness)) {
        lower = o.lower;
        lower_witness = o.lower_witness;
    }
    if (better(o.upper, o.upper_witness, upper, upper_witness)) {
        upper = o.upper;
        upper_witness = o.upper_witness;
    }
    unknown_count += o.unknown_count;
    unsat_count += o.unsat_count;
    pinned_count += o.pinned_count;
    solved_count += o.solved_count;
}

std::pair<SubsetId, SubsetId> shard_range(std::size_t n, std::size_t index, std::size_t count) {
    if (n < 1 || n > 3)
        throw Error(ErrorCode::InvalidArgument,
                    "theta enumeration supports n in 1..3 (n = 4 has 2^58 subsets), got " + std::to_string(n));
    if (count == 0 || index >= count) throw Error(ErrorCode::InvalidArgument, "shard index must be below shard count");
    const unsigned __int128 total = SubsetId{1} << universe_size(n);
    auto at = [&](std::size_t i) { return static_cast<SubsetId>(total * i / count); };
    return {at(index), at(index + 1)};
}

std::string checkpoint_header(const ThetaOptions& opts) {
    return "# enkit-theta n=" + std::to_string(opts.n) + " cap=" + to_decimal(opts.cap) +
           " budget=" + std::to_string(opts.budget) + " shard=" + std::to_string(opts.shard_index) + "/" +
           std::to_string(opts.shard_count);
}

std::string format_record(const ClassificationRecord& r) {
    std::ostringstream os;
    os << std::hex << r.id << std::dec << ' ' << to_string(r.status);
    if (r.maxnorm) os << ' ' << to_decimal(*r.maxnorm);
    return os.str();
}

ClassificationRecord parse_record(std::string_view line) {
    std::istringstream is{std::string(line)};
    std::string hex, status, norm, extra;
    if (!(is >> hex >> status)) throw Error(ErrorCode::Checkpoint, "malformed record '" + std::string(line) + "'");
    ClassificationRecord r;
    if (hex.empty() || hex.size() > 16 || hex.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw Error(ErrorCode::Checkpoint, "bad subset id '" + hex + "'");
    r.id = std::stoull(hex, nullptr, 16);
    try {
        r.status = parse_subset_status(status);
    } catch (const Error&) {
        throw Error(ErrorCode::Checkpoint, "bad status in record '" + std::string(line) + "'");
    }
    bool has_norm = static_cast<bool>(is >> norm);
    bool needs_norm = r.status == SubsetStatus::PinnedFinite || r.status == SubsetStatus::Solved;
    if (has_norm != needs_norm || (is >> extra))
        throw Error(ErrorCode::Checkpoint, "bad field count in record '" + std::string(line) + "'");
    if (has_norm) {
        try {
            r.maxnorm = parse_decimal(norm);
        } catch (const Error&) {
            throw Error(ErrorCode::Checkpoint, "bad max-norm in record '" + std::string(line) + "'");
        }
        if (*r.maxnorm < 1) throw Error(ErrorCode::Checkpoint, "max-norm must be positive");
    }
    return r;
}

namespace {

constexpr SubsetId kBlock = SubsetId{1} << 14;

std::vector<ClassificationRecord> run_block(const OrbitTable& table, const ThetaOptions& opts, SubsetId begin,
                                            SubsetId end) {
    std::vector<ClassificationRecord> out;
    for (SubsetId id = begin; id < end; ++id) {
        if (!table.is_representative(id)) continue;
        auto r = classify_subset(subset_system(opts.n, id), opts.cap, opts.budget);
        r.id = id;
        out.push_back(std::move(r));
    }
    return out;
}

// Replays a checkpoint; returns the id to resume from. A truncated last
// line (no newline) is dropped from the file.
SubsetId replay(const std::string& path, const ThetaOptions& opts, const OrbitTable& table, SubsetId begin,
                SubsetId end, ThetaRun& run) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read checkpoint " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();

    std::size_t valid = content.rfind('\n');
    valid = valid == std::string::npos ? 0 : valid + 1;
    if (valid < content.size()) std::filesystem::resize_file(path, valid);

    std::istringstream lines(content.substr(0, valid));
    std::string line;
    bool header = false;
    std::optional<SubsetId> last;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!header) {
                if (line != checkpoint_header(opts))
                    throw Error(ErrorCode::Checkpoint,
                                "checkpoint header '" + line + "' does not match '" + checkpoint_header(opts) + "'");
                header = true;
            }
            continue;
        }
        if (!header) throw Error(ErrorCode::Checkpoint, "checkpoint has no header");
        ClassificationRecord r;
        try {
            r = parse_record(line);
        } catch (const Error& e) {
            throw Error(ErrorCode::Checkpoint, "line " + std::to_string(lineno) + ": " + e.what());
        }
        if (r.id < begin || r.id >= end)
            throw Error(ErrorCode::Checkpoint, "line " + std::to_string(lineno) + ": id outside the shard");
        if (!table.is_representative(r.id))
            throw Error(ErrorCode::Checkpoint, "line " + std::to_string(lineno) + ": id is not an orbit representative");
        if (last && r.id < *last)
            throw Error(ErrorCode::Checkpoint, "line " + std::to_string(lineno) + ": ids out of order");
        if (last && r.id == *last) continue;  // replayed twice
        last = r.id;
        run.ledger.add(r);
        if (r.status == SubsetStatus::Unknown) run.unknown_ids.push_back(r.id);
        ++run.replayed;
        if (opts.on_record) opts.on_record(r);
    }
    if (!header && valid > 0) throw Error(ErrorCode::Checkpoint, "checkpoint has no header");
    return last ? *last + 1 : begin;
}

}  // namespace

ThetaRun enumerate_theta(const ThetaOptions& opts) {
    auto [begin, end] = shard_range(opts.n, opts.shard_index, opts.shard_count);
    if (opts.cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
    OrbitTable table(opts.n);
    ThetaRun run;
    run.ledger.n = opts.n;
    run.range_begin = begin;
    run.range_end = end;

    SubsetId start = begin;
    std::ofstream out;
    if (opts.checkpoint) {
        const auto& path = *opts.checkpoint;
        bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
        if (!fresh) start = replay(path, opts, table, begin, end, run);
        out.open(path, std::ios::app);
        if (!out) throw Error(ErrorCode::Io, "cannot open checkpoint " + path);
        if (fresh) out << checkpoint_header(opts) << '\n' << std::flush;
    }

    auto commit = [&](std::vector<ClassificationRecord>& recs) {
        for (auto& r : recs) {
            run.ledger.add(r);
            if (r.status == SubsetStatus::Unknown) run.unknown_ids.push_back(r.id);
            if (out.is_open()) out << format_record(r) << '\n';
            if (opts.on_record) opts.on_record(r);
        }
        if (out.is_open()) {
            out.flush();
            if (!out) throw Error(ErrorCode::Io, "write to checkpoint failed");
        }
    };

    const unsigned threads = std::max(1u, opts.threads);
    SubsetId cursor = start;
    while (cursor < end) {
        // One round: `threads` groups of blocks, committed in id order.
        const SubsetId round_blocks = threads * 4;
        std::vector<std::pair<SubsetId, SubsetId>> blocks;
        for (SubsetId b = 0; b < round_blocks && cursor < end; ++b) {
            SubsetId e = std::min(end, cursor + kBlock);
            blocks.emplace_back(cursor, e);
            cursor = e;
        }
        std::vector<std::vector<ClassificationRecord>> results(blocks.size());
        if (threads == 1) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                results[b] = run_block(table, opts, blocks[b].first, blocks[b].second);
                commit(results[b]);
            }
            continue;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t b; (b = next.fetch_add(1)) < blocks.size();)
                        results[b] = run_block(table, opts, blocks[b].first, blocks[b].second);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& r : results) commit(r);
    }
    return run;
}

OrbitCheck orbit_invariance_check(std::size_t n, std::size_t samples, std::uint64_t seed, const BigInt& cap,
                                  std::uint64_t budget) {
    OrbitTable table(n);
    std::mt19937_64 rng(seed);
    const SubsetId mask_all = table.universe_bits() >= 64 ? ~SubsetId{0} : (SubsetId{1} << table.universe_bits()) - 1;
    OrbitCheck check;
    for (std::size_t s = 0; s < samples; ++s) {
        SubsetId rep = table.representative(rng() & mask_all);
        auto base = classify_subset(subset_system(n, rep), cap, budget);
        ++check.orbits;
        bool same = true;
        for (SubsetId m : table.orbit(rep)) {
            ++check.members;
            if (m == rep) continue;
            auto r = classify_subset(subset_system(n, m), cap, budget);
            if (r.status != base.status || r.maxnorm != base.maxnorm) same = false;
        }
        if (!same) check.mismatches.push_back(rep);
    }
    return check;
}

}  // namespace enkit
