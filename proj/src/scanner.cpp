#include "wolst/scanner.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "wolst/errors.hpp"
#include "wolst/primes.hpp"
#include "wolst/wolstenholme.hpp"

namespace wolst {

ScanRecord is_wolstenholme_prime(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) {
        throw std::invalid_argument("is_wolstenholme_prime: requires a prime p >= 5");
    }
    ScanRecord rec;
    rec.prime = p;
    const ModRingElement residue = binomial_product_mod(p, 4);
    rec.residue_mod_p4 = residue.residue();
    rec.is_wolstenholme = residue.is_one();
    if (rec.is_wolstenholme) {
        rec.cross_checked = harmonic_exponential(p, 4) == residue;
    }
    return rec;
}

namespace detail {

std::vector<ScanRecord> read_checkpoint(const std::string& path) {
    std::vector<ScanRecord> records;
    if (!std::filesystem::exists(path)) return records;
    std::ifstream in(path);
    if (!in) {
        throw CheckpointError("checkpoint unreadable: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw CheckpointError("checkpoint truncated (missing header): " + path);
    }
    {
        std::istringstream header(line);
        std::string magic;
        int version = 0;
        std::uint64_t limit = 0;
        if (!(header >> magic >> version >> limit) || magic != kCheckpointMagic ||
            version != kCheckpointVersion) {
            throw CheckpointError("checkpoint header not recognized: " + path);
        }
    }
    std::uint64_t previous = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::uint64_t prime = 0;
        std::string residue_digits;
        int flag = -1;
        std::string extra;
        if (!(fields >> prime >> residue_digits >> flag) || (fields >> extra) ||
            (flag != 0 && flag != 1)) {
            throw CheckpointError("checkpoint line " + std::to_string(line_no) + " malformed: " + path);
        }
        ScanRecord rec;
        rec.prime = prime;
        if (mpz_set_str(rec.residue_mod_p4.get_mpz_t(), residue_digits.c_str(), 10) != 0 ||
            rec.residue_mod_p4 < 0) {
            throw CheckpointError("checkpoint line " + std::to_string(line_no) +
                                  " has a bad residue: " + path);
        }
        rec.is_wolstenholme = flag == 1;
        if (prime <= previous || prime < 5 || !is_prime(prime) ||
            rec.is_wolstenholme != (rec.residue_mod_p4 == 1) ||
            rec.residue_mod_p4 >= pow_int(BigInt(static_cast<unsigned long>(prime)), 4)) {
            throw CheckpointError("checkpoint line " + std::to_string(line_no) +
                                  " inconsistent: " + path);
        }
        previous = prime;
        records.push_back(std::move(rec));
    }
    if (in.bad()) {
        throw CheckpointError("checkpoint read failed: " + path);
    }
    return records;
}

void write_checkpoint(const std::string& path, std::uint64_t limit,
                      const std::vector<ScanRecord>& records) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw CheckpointError("cannot open checkpoint for writing: " + tmp);
        }
        out << kCheckpointMagic << ' ' << kCheckpointVersion << ' ' << limit << '\n';
        for (const auto& rec : records) {
            out << rec.prime << ' ' << rec.residue_mod_p4.get_str() << ' '
                << (rec.is_wolstenholme ? 1 : 0) << '\n';
        }
        out.flush();
        if (!out) {
            throw CheckpointError("checkpoint write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw CheckpointError("checkpoint rename failed: " + path + " (" + ec.message() + ")");
    }
}

} // namespace detail

ScanSummary scan(const ScanOptions& options) {
    ScanSummary summary;
    summary.limit = options.limit;

    std::vector<std::uint64_t> primes = prime_sieve(options.limit);
    while (!primes.empty() && primes.front() < 5) primes.erase(primes.begin());

    std::vector<ScanRecord> replayed;
    if (options.checkpoint) {
        replayed = detail::read_checkpoint(*options.checkpoint);
    }

    std::vector<ScanRecord> emitted;
    emitted.reserve(primes.size());

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t last_progress_at = 0;
    bool replaying = true; // periodic writes would truncate the file to a prefix mid-replay
    auto emit = [&](ScanRecord rec) {
        if (rec.is_wolstenholme && !rec.cross_checked) {
            // Replayed hit: the checkpoint does not persist the cross-check.
            rec.cross_checked = harmonic_exponential(rec.prime, 4) ==
                                ModRingElement(rec.residue_mod_p4, rec.prime, 4);
        }
        emitted.push_back(rec);
        ++summary.primes_tested;
        if (rec.is_wolstenholme) summary.hits.push_back(rec);
        if (options.on_record) options.on_record(rec);
        if (options.on_progress &&
            (summary.primes_tested - last_progress_at >= 200 || summary.primes_tested == primes.size())) {
            last_progress_at = summary.primes_tested;
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            options.on_progress({rec.prime, summary.primes_tested, primes.size(),
                                 secs > 0 ? summary.primes_tested / secs : 0.0});
        }
        if (options.checkpoint && !replaying &&
            summary.primes_tested % options.checkpoint_stride == 0) {
            detail::write_checkpoint(*options.checkpoint, options.limit, emitted);
        }
    };

    // Replay checkpointed records below the limit; their primes are not rescanned.
    // The records must walk the prime sequence without gaps.
    std::size_t prime_idx = 0;
    for (const auto& rec : replayed) {
        if (rec.prime >= options.limit) break;
        if (prime_idx >= primes.size() || primes[prime_idx] != rec.prime) {
            throw CheckpointError("checkpoint skips ahead in the prime sequence at " +
                                  std::to_string(rec.prime));
        }
        ++prime_idx;
        emit(rec);
    }
    replaying = false;

    const std::vector<std::uint64_t> todo(primes.begin() + static_cast<std::ptrdiff_t>(prime_idx),
                                          primes.end());

    const unsigned threads = std::max(1u, options.threads);
    if (!todo.empty()) {
        std::vector<std::optional<ScanRecord>> slots(todo.size());
        std::vector<char> done(todo.size(), 0);
        std::vector<std::exception_ptr> failures(todo.size());
        std::mutex mu;
        std::condition_variable cv;
        std::atomic<std::size_t> next{0};

        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= todo.size()) return;
                std::optional<ScanRecord> rec;
                std::exception_ptr failure;
                try {
                    rec = is_wolstenholme_prime(todo[i]);
                } catch (...) {
                    failure = std::current_exception();
                }
                {
                    std::lock_guard<std::mutex> lock(mu);
                    slots[i] = std::move(rec);
                    failures[i] = failure;
                    done[i] = 1;
                }
                cv.notify_all();
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

        try {
            for (std::size_t i = 0; i < todo.size(); ++i) {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return done[i] != 0; });
                if (failures[i]) std::rethrow_exception(failures[i]);
                ScanRecord rec = std::move(*slots[i]);
                slots[i].reset();
                lock.unlock();
                emit(std::move(rec));
            }
        } catch (...) {
            next.store(todo.size());
            for (auto& t : pool) t.join();
            throw;
        }
        for (auto& t : pool) t.join();
    }

    if (options.checkpoint) {
        detail::write_checkpoint(*options.checkpoint, options.limit, emitted);
    }
    return summary;
}

} // namespace wolst
