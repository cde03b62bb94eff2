#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

namespace rabench {

// 2^n-entry update table. Entries are atomics so that racing relaxed-mode
// updates stay well-defined; relaxed loads/stores compile to plain moves.
class UpdateTable {
 public:
  explicit UpdateTable(unsigned n)
      : n_(n), size_(uint64_t{1} << n), entries_(new std::atomic<uint64_t>[size_]) {
    reset();
  }

  // Standard initialization: entries[i] = i.
  void reset() {
    for (uint64_t i = 0; i < size_; ++i) entries_[i].store(i, std::memory_order_relaxed);
  }

  unsigned n() const { return n_; }
  uint64_t size() const { return size_; }
  std::atomic<uint64_t>& entry(uint64_t i) { return entries_[i]; }
  uint64_t get(uint64_t i) const { return entries_[i].load(std::memory_order_relaxed); }

 private:
  unsigned n_;
  uint64_t size_;
  std::unique_ptr<std::atomic<uint64_t>[]> entries_;
};

struct GupsConfig {
  unsigned n = 20;                  // table has 2^n entries
  int num_workers = 1;
  unsigned batch_len = 16;          // stream values fetched per batch
  unsigned queues_per_worker = 4;   // in-flight batches per worker
  bool atomic_updates = false;      // false: relaxed read-xor-write, lost updates allowed

  // Fetched-but-unapplied stream values per worker at any moment.
  unsigned lookahead() const { return batch_len * queues_per_worker; }
};

struct GupsResult {
  double elapsed = 0;        // seconds, update phase only
  uint64_t updates = 0;      // 2^(n+2)
  double gups = 0;           // updates / elapsed / 1e9
  uint64_t error_count = 0;  // table entries disagreeing with sequential replay
  double error_fraction = 0; // error_count / 2^n
};

// Index of the table entry hit by stream value a: its top n bits.
inline uint64_t table_index(uint64_t a, unsigned n) { return a >> (64 - n); }

// Total stream length for a 2^n table.
inline uint64_t gups_num_updates(unsigned n) { return uint64_t{1} << (n + 2); }

// Replays the full stream against a fresh table and counts entries that
// disagree with t.
uint64_t verify_table(const UpdateTable& t, uint64_t num_updates);

// Runs the update kernel: table initialized, stream split into contiguous
// per-worker segments, each worker cycling batches across its in-flight
// queues. The result always carries the verification outcome. If table_out
// is non-null the final table is moved there.
GupsResult run_gups(const GupsConfig& cfg, UpdateTable* table_out = nullptr);

}  // namespace rabench
