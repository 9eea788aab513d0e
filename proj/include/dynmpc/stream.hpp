#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynmpc/words.hpp"

namespace dynmpc {

struct StreamError : std::runtime_error {
  StreamError(const std::string& what, int line) : std::runtime_error(what), line(line) {}
  int line;
};

struct UpdateOp {
  enum Kind { Insert, Delete, Query } kind;
  Word u = 0;
  Word v = 0;
  Word w = 0; // fixed-point weight, 0 when unweighted
};

// Text stream format:
//   # comment
//   n <vertices>
//   preload          (optional section of "+ u v [w]" lines, then "end")
//   + u v [w] | - u v | ? u v
struct Stream {
  Word n = 0;
  std::vector<UpdateOp> preload;
  std::vector<UpdateOp> ops;

  // running maximum of concurrently present edges (preload included)
  long long max_edges() const;
};

Stream parse_stream(std::istream& in);
Stream parse_stream_file(const std::string& path);
void write_stream(std::ostream& out, const Stream& s, long long weight_scale);

struct GenParams {
  Word n = 0;
  long long updates = 0;
  double insert_prob = 1.0;
  bool weighted = false;
  double query_prob = 0.0;
  std::uint64_t seed = 1;
  long long weight_scale = 1000;
  long long weight_max = 100; // uniform integer weights in [1, weight_max]
};

// Reproducible random update stream. Deletions are drawn uniformly from the
// edges present at that point; when no edge exists a deletion is skipped in
// favor of an insertion.
Stream gen_stream(const GenParams& p);

std::string format_weight(Word w, long long scale);

} // namespace dynmpc
