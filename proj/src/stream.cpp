#include "dynmpc/stream.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "dynmpc/graph.hpp"
#include "dynmpc/rng.hpp"

namespace dynmpc {
namespace {

Word parse_weight(const std::string& tok, long long scale, int line) {
  // decimal like "3" or "2.75" to fixed point
  auto dot = tok.find('.');
  try {
    if (dot == std::string::npos) return std::stoll(tok) * scale;
    long long ip = dot == 0 ? 0 : std::stoll(tok.substr(0, dot));
    std::string frac = tok.substr(dot + 1);
    long long scale_digits = 0;
    for (long long s = scale; s > 1; s /= 10) ++scale_digits;
    while (static_cast<long long>(frac.size()) < scale_digits) frac.push_back('0');
    if (static_cast<long long>(frac.size()) > scale_digits)
      throw StreamError("weight has more precision than the weight scale", line);
    return ip * scale + (frac.empty() ? 0 : std::stoll(frac));
  } catch (const std::invalid_argument&) {
    throw StreamError("bad weight: " + tok, line);
  }
}

} // namespace

std::string format_weight(Word w, long long scale) {
  std::ostringstream os;
  os << w / scale;
  Word frac = w % scale;
  if (frac != 0) {
    std::string digits;
    for (long long s = scale / 10; s >= 1; s /= 10) {
      digits.push_back(static_cast<char>('0' + (frac / s) % 10));
    }
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    os << '.' << digits;
  }
  return os.str();
}

long long Stream::max_edges() const {
  std::set<std::pair<Word, Word>> present;
  long long best = 0;
  auto step = [&](const UpdateOp& op) {
    if (op.kind == UpdateOp::Insert) present.insert(canon(op.u, op.v));
    else if (op.kind == UpdateOp::Delete) present.erase(canon(op.u, op.v));
    best = std::max(best, static_cast<long long>(present.size()));
  };
  for (const auto& op : preload) step(op);
  for (const auto& op : ops) step(op);
  return best;
}

Stream parse_stream(std::istream& in) {
  Stream s;
  long long scale = 1000;
  std::string line;
  int lineno = 0;
  bool in_preload = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      if (!(ls >> s.n) || s.n < 2) throw StreamError("bad vertex count", lineno);
      continue;
    }
    if (tok == "scale") {
      if (!(ls >> scale) || scale < 1) throw StreamError("bad weight scale", lineno);
      continue;
    }
    if (tok == "preload") {
      in_preload = true;
      continue;
    }
    if (tok == "end") {
      in_preload = false;
      continue;
    }
    if (tok != "+" && tok != "-" && tok != "?")
      throw StreamError("expected '+', '-' or '?', got '" + tok + "'", lineno);
    UpdateOp op;
    op.kind = tok == "+" ? UpdateOp::Insert : tok == "-" ? UpdateOp::Delete : UpdateOp::Query;
    if (!(ls >> op.u >> op.v)) throw StreamError("expected two vertex ids", lineno);
    std::string wtok;
    if (ls >> wtok) {
      if (op.kind != UpdateOp::Insert) throw StreamError("weight only allowed on '+'", lineno);
      op.w = parse_weight(wtok, scale, lineno);
    }
    if (op.u == op.v && op.kind != UpdateOp::Query)
      throw StreamError("self loop", lineno);
    if (s.n > 0 && (op.u < 0 || op.u >= s.n || op.v < 0 || op.v >= s.n))
      throw StreamError("vertex id out of range", lineno);
    if (in_preload) {
      if (op.kind != UpdateOp::Insert) throw StreamError("preload may only insert", lineno);
      s.preload.push_back(op);
    } else {
      s.ops.push_back(op);
    }
  }
  if (s.n <= 0) throw StreamError("stream missing 'n <vertices>' header", 0);
  return s;
}

Stream parse_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open stream file: " + path, 0);
  return parse_stream(in);
}

void write_stream(std::ostream& out, const Stream& s, long long weight_scale) {
  out << "n " << s.n << "\n";
  out << "scale " << weight_scale << "\n";
  if (!s.preload.empty()) {
    out << "preload\n";
    for (const auto& op : s.preload) {
      out << "+ " << op.u << ' ' << op.v;
      if (op.w != 0) out << ' ' << format_weight(op.w, weight_scale);
      out << "\n";
    }
    out << "end\n";
  }
  for (const auto& op : s.ops) {
    char c = op.kind == UpdateOp::Insert ? '+' : op.kind == UpdateOp::Delete ? '-' : '?';
    out << c << ' ' << op.u << ' ' << op.v;
    if (op.kind == UpdateOp::Insert && op.w != 0)
      out << ' ' << format_weight(op.w, weight_scale);
    out << "\n";
  }
}

Stream gen_stream(const GenParams& p) {
  if (p.n < 2) throw std::invalid_argument("gen: n must be >= 2");
  if (p.insert_prob <= 0.0 && p.insert_prob != 0.0)
    throw std::invalid_argument("gen: bad insert probability");
  if (p.insert_prob > 1.0 || p.insert_prob < 0.0)
    throw std::invalid_argument("gen: insert probability out of range");
  Stream s;
  s.n = p.n;
  Rng rng(p.seed);
  std::vector<std::pair<Word, Word>> present;
  std::map<std::pair<Word, Word>, std::size_t> index;
  const std::uint64_t den = 1u << 20;
  const auto ins_num = static_cast<std::uint64_t>(p.insert_prob * den);
  const auto qry_num = static_cast<std::uint64_t>(p.query_prob * den);
  for (long long i = 0; i < p.updates; ++i) {
    if (qry_num > 0 && rng.chance(qry_num, den)) {
      Word u = static_cast<Word>(rng.below(p.n));
      Word v = static_cast<Word>(rng.below(p.n));
      if (u == v) v = (v + 1) % p.n;
      s.ops.push_back({UpdateOp::Query, u, v, 0});
      continue;
    }
    bool insert = rng.chance(ins_num, den);
    if (!insert && present.empty()) continue; // delete on empty graph: skipped
    if (insert) {
      // rejection-sample a non-edge
      bool placed = false;
      for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
        Word u = static_cast<Word>(rng.below(p.n));
        Word v = static_cast<Word>(rng.below(p.n));
        if (u == v) continue;
        auto e = canon(u, v);
        if (index.count(e)) continue;
        Word w = 0;
        if (p.weighted)
          w = p.weight_scale +
              static_cast<Word>(rng.below((p.weight_max - 1) * p.weight_scale + 1));
        index[e] = present.size();
        present.push_back(e);
        s.ops.push_back({UpdateOp::Insert, e.first, e.second, w});
        placed = true;
      }
      // dense graph: insertion skipped
    } else {
      std::size_t k = rng.below(present.size());
      auto e = present[k];
      index.erase(e);
      present[k] = present.back();
      if (k + 1 != present.size()) index[present[k]] = k;
      present.pop_back();
      s.ops.push_back({UpdateOp::Delete, e.first, e.second, 0});
    }
  }
  return s;
}

} // namespace dynmpc
