#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wolst/rational.hpp"

namespace wolst {

struct ScanRecord {
    std::uint64_t prime = 0;
    BigInt residue_mod_p4;       // C(2p-1, p-1) mod p^4
    bool is_wolstenholme = false; // residue == 1
    bool cross_checked = false;   // hit confirmed by the harmonic-exponential route

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanProgress {
    std::uint64_t last_prime = 0;
    std::uint64_t tested = 0;
    std::uint64_t total = 0;
    double primes_per_second = 0.0;
};

struct ScanOptions {
    std::uint64_t limit = 0;
    std::optional<std::string> checkpoint;
    unsigned threads = 1;
    std::uint64_t checkpoint_stride = 512; // records between checkpoint rewrites
    std::function<void(const ScanRecord&)> on_record;    // every prime, ascending
    std::function<void(const ScanProgress&)> on_progress;
};

struct ScanSummary {
    std::uint64_t limit = 0;
    std::uint64_t primes_tested = 0;
    std::vector<ScanRecord> hits;
};

// Residue mod p^4 via the product form, Wolstenholme flag, and (for hits)
// the independent harmonic-exponential confirmation.
ScanRecord is_wolstenholme_prime(std::uint64_t p);

/**
 * Evaluate is_wolstenholme_prime for every prime 5 <= p < limit.
 *
 * Records are emitted in ascending prime order whatever the thread count,
 * so the output stream is deterministic. With a checkpoint path, progress
 * is persisted with write-temp-then-rename semantics and a later run
 * resumes where the file ends; an unreadable or inconsistent file raises
 * CheckpointError rather than silently restarting.
 */
ScanSummary scan(const ScanOptions& options);

// Checkpoint file layout (version 1):
//   wolst-scan 1 <limit>
//   <prime> <residue_mod_p4> <0|1>
//   ...
// one line per scanned prime, ascending.
inline constexpr const char* kCheckpointMagic = "wolst-scan";
inline constexpr int kCheckpointVersion = 1;

namespace detail {
std::vector<ScanRecord> read_checkpoint(const std::string& path); // [] if file absent
void write_checkpoint(const std::string& path, std::uint64_t limit,
                      const std::vector<ScanRecord>& records);
} // namespace detail

} // namespace wolst
