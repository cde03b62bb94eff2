#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rabench {

struct Edge {
  uint32_t src = 0;
  uint32_t dst = 0;
  uint32_t weight = 1;
};

// Directed weighted multigraph in compressed sparse row form. Immutable
// after construction; safe to share read-only across threads.
struct CsrGraph {
  uint32_t num_vertices = 0;
  std::vector<uint64_t> row_offsets;   // length num_vertices + 1
  std::vector<uint32_t> col_indices;   // length num_edges
  std::vector<uint32_t> weights;       // length num_edges, all >= 1

  uint64_t num_edges() const { return col_indices.size(); }
  uint64_t out_degree(uint32_t v) const { return row_offsets[v + 1] - row_offsets[v]; }

  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {col_indices.data() + row_offsets[v], out_degree(v)};
  }
  std::span<const uint32_t> edge_weights(uint32_t v) const {
    return {weights.data() + row_offsets[v], out_degree(v)};
  }
};

// Builds CSR from an edge list, keeping duplicate edges and self-loops.
// Edge order within a row follows input order, so the layout is stable.
CsrGraph csr_from_edges(uint32_t num_vertices, const std::vector<Edge>& edges);

// Checks all CSR structural invariants; returns the first violation found.
std::optional<std::string> validate_csr(const CsrGraph& g);

// Text edge-list dump/load: a "num_vertices num_edges" header line followed
// by one "src dst weight" line per edge in CSR order. Round-trips exactly.
void save_edge_list(const CsrGraph& g, const std::string& path);
CsrGraph load_edge_list(const std::string& path);

}  // namespace rabench
