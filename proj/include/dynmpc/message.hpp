#pragma once

#include "dynmpc/words.hpp"

namespace dynmpc {

// Message kinds. The payload word layout for each kind is documented where
// the kind is produced; the kind tag itself is framing and is not counted
// as communication (only payload words are).
enum MsgKind : Word {
  kGeneric = 0,

  // runtime
  kBroadcast,      // broadcast payload, opaque to the runtime
  kSortSample,     // sorted local samples, flattened keys
  kSortSplitters,  // [q, splitters...(q-1 keys)] possibly relayed
  kSortRelay,      // splitters forwarded by a relay
  kSortScatter,    // key run destined for one output block
  kSortAck,        // [count] block size after local sort

  // partition / matching
  kStatsQuery,     // [vertex...] fetch vertex records
  kStatsReply,     // [vertex, deg, mate, flags, alive_m, susp_m, cntr]...
  kStatsWrite,     // [vertex, field, value]... targeted record updates
  kRefreshDelta,   // [seq_lo, seq_hi, nops, (op,u,v,w)...] edge ops for a block
  kEdgeMove,       // [vertex, count, (nbr[,w])...] block segment transfer
  kEdgeMoveDone,   // [vertex, moved, free_words]
  kBlockQuery,     // [vertex, query_kind, args...]
  kBlockReply,     // query-specific
  kMatchNotice,    // [u, v, add|remove] matching change applied to stats
  kCounterDelta,   // [vertex, delta]... free-neighbor counter updates

  // connectivity / mst
  kTourDescriptor, // remap descriptor, see connectivity.cpp
  kTourQuery,      // [vertex, kind] min/max/ref reduce request
  kTourReply,      // [vertex, f, l, alt_ref]
  kTourCandidate,  // [u, v, w] replacement or path-max candidate
  kTourAppend,     // [vertex, nbr, flags, a, b, w] add one edge copy
  kTourErase,      // [u, v] drop stored copies of an edge
  kCompSize,       // [comp, size] component size read/write
  kHookCandidate,  // preprocessing: [tail_comp, head_comp, u, v, ref_u, ref_v, size]
  kHookChoice,     // preprocessing: chosen hook forwarded to head aggregator
  kHookLayout,     // preprocessing: per-component merge descriptor

  // seqsim
  kMemRead,        // [addr]
  kMemReply,       // [addr, value]
  kMemWrite,       // [addr, value]
  kMemAck,         // [addr]

  kAck,
};

struct Envelope {
  int sender = -1;
  int receiver = -1;
  Word kind = kGeneric;
  Words payload;
};

} // namespace dynmpc
