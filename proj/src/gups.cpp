#include "rabench/gups.hpp"

#include <stdexcept>
#include <vector>

#include "rabench/gf2_stream.hpp"
#include "rabench/util.hpp"
#include "rabench/worker_pool.hpp"

namespace rabench {

namespace {

void validate(const GupsConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 40) throw std::invalid_argument("gups: n must be in [1, 40]");
  if (cfg.num_workers < 1) throw std::invalid_argument("gups: num_workers must be >= 1");
  if (cfg.batch_len < 1 || cfg.queues_per_worker < 1)
    throw std::invalid_argument("gups: batch_len and queues_per_worker must be >= 1");
  if (cfg.lookahead() > 1024)
    throw std::invalid_argument("gups: batch_len * queues_per_worker exceeds the 1024 look-ahead bound");
}

struct WorkerSlice {
  Gf2Stream stream;
  uint64_t remaining = 0;
};

}  // namespace

uint64_t verify_table(const UpdateTable& t, uint64_t num_updates) {
  const unsigned n = t.n();
  std::vector<uint64_t> ref(t.size());
  for (uint64_t i = 0; i < ref.size(); ++i) ref[i] = i;
  Gf2Stream s;
  for (uint64_t i = 0; i < num_updates; ++i) {
    uint64_t a = s.next();
    ref[table_index(a, n)] ^= a;
  }
  uint64_t mismatches = 0;
  for (uint64_t i = 0; i < ref.size(); ++i)
    if (ref[i] != t.get(i)) ++mismatches;
  return mismatches;
}

GupsResult run_gups(const GupsConfig& cfg, UpdateTable* table_out) {
  validate(cfg);

  UpdateTable table(cfg.n);
  const unsigned n = cfg.n;
  const uint64_t num_updates = gups_num_updates(n);
  const int workers = cfg.num_workers;

  // Contiguous per-worker stream segments; segment starts come from the
  // O(log k) fast-forward so setup stays cheap at any stream length.
  std::vector<WorkerSlice> slices(workers);
  for (int w = 0; w < workers; ++w) {
    uint64_t begin = num_updates * w / workers;
    uint64_t end = num_updates * (w + 1) / workers;
    slices[w].stream = gf2_seek(begin);
    slices[w].remaining = end - begin;
  }

  const uint64_t window = cfg.lookahead();
  std::vector<std::vector<uint64_t>> buffers(workers, std::vector<uint64_t>(window));
  const bool atomic_mode = cfg.atomic_updates;

  WorkerPool pool(workers);
  Timer timer;
  timer.start();
  pool.run([&](int wid) {
    WorkerSlice& slice = slices[wid];
    uint64_t* buf = buffers[wid].data();
    Gf2Stream stream = slice.stream;
    uint64_t remaining = slice.remaining;
    while (remaining) {
      // Fetch stage: fill every queue's batch ahead of processing.
      const uint64_t got = remaining < window ? remaining : window;
      for (uint64_t i = 0; i < got; ++i) buf[i] = stream.next();
      // Update stage: drain the queues one batch at a time.
      for (uint64_t off = 0; off < got; off += cfg.batch_len) {
        const uint64_t lim = off + cfg.batch_len < got ? off + cfg.batch_len : got;
        if (atomic_mode) {
          for (uint64_t i = off; i < lim; ++i) {
            uint64_t a = buf[i];
            table.entry(table_index(a, n)).fetch_xor(a, std::memory_order_relaxed);
          }
        } else {
          for (uint64_t i = off; i < lim; ++i) {
            uint64_t a = buf[i];
            auto& e = table.entry(table_index(a, n));
            e.store(e.load(std::memory_order_relaxed) ^ a, std::memory_order_relaxed);
          }
        }
      }
      remaining -= got;
    }
  });

  GupsResult result;
  result.elapsed = timer.seconds();
  result.updates = num_updates;
  result.gups = result.elapsed > 0 ? static_cast<double>(num_updates) / result.elapsed / 1e9 : 0;
  result.error_count = verify_table(table, num_updates);
  result.error_fraction = static_cast<double>(result.error_count) / static_cast<double>(table.size());

  if (table_out) *table_out = std::move(table);
  return result;
}

}  // namespace rabench
