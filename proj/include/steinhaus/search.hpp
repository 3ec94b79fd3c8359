#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/modring.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

struct SearchJob {
  std::int64_t m = 2;
  std::int64_t n = 1;
  LocalRule rule = LocalRule::kPascal;
  std::int64_t shards = 1;
  std::int64_t shard = 0;
  std::int64_t cell_budget = 100000000;  // default 1e8 triangle cells
  std::int64_t witness_cap = 64;
  std::string checkpoint_file;           // empty: no checkpointing
  std::int64_t checkpoint_every = 1 << 20;
};

struct SearchReport {
  std::int64_t examined = 0;
  std::int64_t balanced = 0;
  std::int64_t orbit_count = 0;  // up to the unit action; -1 on shard partials
  std::vector<ModTuple> witnesses;  // canonical minimal orbit representatives
  double seconds = 0;

  std::string to_json(std::int64_t m) const;
};

// Enumerates all m^n first rows in lexicographic order (restricted to the
// shard's contiguous index range) and counts balanced triangles.  The scan
// aborts a candidate as soon as any residue count exceeds t_n / m.
SearchReport brute_force_balanced(const SearchJob& job);
// Resumes from a checkpoint file written by a previous run of the same job.
SearchReport brute_force_resume(const std::string& checkpoint_file);

// Merge of shard reports: counts add; witnesses are the union trimmed to
// the smallest witness_cap representatives.
SearchReport merge_reports(const std::vector<SearchReport>& parts,
                           std::int64_t m, std::int64_t witness_cap = 64);

// B_k^{2^u}: the k-tuples mod 2^u whose antisymmetric interlaced orbits are
// (2^v k, 2^v k)-periodic with balanced triangles at sizes 2^v k and
// 2^{v+1} k for every v <= u.  Computed by level-wise kernel lifting.
struct BSetReport {
  std::vector<ModTuple> elements;  // sorted, mod 2^u
  std::int64_t total = 0;
  std::int64_t orbit_count = 0;  // up to the unit action of (Z/2^u)*
  double seconds = 0;
};

BSetReport bset(std::int64_t k, int u, std::int64_t cap = 1 << 22);

// Number of orbits of the set under x -> lambda x, lambda a unit mod m.
std::int64_t unit_orbit_count(const std::vector<ModTuple>& elements,
                              Modulus m);
// Lexicographically minimal element of the unit orbit of t.
ModTuple unit_orbit_min(const ModTuple& t);

}  // namespace steinhaus
