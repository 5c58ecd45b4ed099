// detail/large_kernel.hpp
// Circle/bucket state transition for large primes (p > 2^l).
//
// Processing the current bucket b of circle k: every pair marks its bit,
// advances by p, and lands k or k+1 segments ahead. Skip-k rewrites go to
// the lower end of the bucket (the boundary moves up past them, so they
// join the previous bucket mod k+1); skip-(k+1) rewrites go to the upper
// end and stay. Everything is in place: one pair from each end is held in
// locals, freeing one slot per end, and each processed pair is rewritten
// into a freed slot and replaced by the next unread pair from the side it
// wrote to. When the unread range is exhausted the two held pairs drain
// into the remaining free slots (which by then coincide when only one is
// left).
//
// The broken bucket r is the one bucket per circle whose slice wraps from
// the circle's physical end back to its start; cursors step cyclically
// through the wrap. The unrolled variant runs the loop core in batches of
// 2^kLogUnrollBatch plain steps, bounded by min(delta1, delta2) -- the
// distances of the cursors to the physical seam -- and falls back to a
// wrap-aware single step at a seam.

#pragma once
#include <algorithm>
#include <cstdint>

#include "erato/base.hpp"
#include "erato/segment.hpp"

#ifndef ERATO_UNROLL_LOG_BATCH
#define ERATO_UNROLL_LOG_BATCH 4
#endif

namespace erato::detail {

inline constexpr unsigned kLogUnrollBatch = ERATO_UNROLL_LOG_BATCH;

struct NoopMark {
  void operator()(uint32_t, uint64_t) const {}
};

// Canonical boundary update, shared by every variant so their final states
// are comparable. m = number of skip-k rewrites (they occupy the first m
// cyclic slots of the old span). A broken bucket whose lower boundary
// reaches or passes the circle's physical end jumps to the start and hands
// the broken role to the previous bucket.
inline void commit_bucket_boundary(CircleSet& cs, uint64_t k, uint32_t b, uint64_t S,
                                   uint64_t m, uint64_t beg, uint64_t end) {
  Circle& c = cs.circles[k];
  const uint64_t bb = CircleSet::bucket_base(k);
  if (b == c.r) {
    const uint64_t hi_len = end - S;
    if (m >= hi_len) {
      cs.starts[bb + b] = beg + (m - hi_len);
      c.r = (uint32_t)((b + k) % (k + 1));
      return;
    }
  }
  cs.starts[bb + b] = S + m;
}

template <bool Unroll, class OnMark>
void sieve_circle_twoended(SegmentBuffer& seg, CircleSet& cs, uint64_t k, OnMark&& onmark) {
  Circle& c = cs.circles[k];
  const uint32_t bnum = (uint32_t)k + 1;
  const uint32_t b = c.b;
  const uint64_t beg = cs.circle_begin(k);
  const uint64_t end = cs.circle_end(k);
  if (beg == end) {  // empty circle still rotates
    c.b = (b + 1) % bnum;
    return;
  }

  const uint64_t bb = CircleSet::bucket_base(k);
  const uint64_t S = cs.starts[bb + b];
  const uint64_t E = cs.starts[bb + (b + 1) % bnum];
  const bool broken = (b == c.r);
  const uint64_t N = broken ? (end - S) + (E - beg) : E - S;
  // a broken bucket whose high slice is empty stores S == end; the cursor
  // starts at the circle's first slot then
  const uint64_t S0 = (broken && S == end) ? beg : S;

  PrimeOffsetPair* const pairs = cs.pairs.data();
  const unsigned l = cs.l;
  const uint64_t lo_sub = k << l;
  const uint64_t hi_thr = (k + 1) << l;
  uint64_t* const words = seg.words();

  auto nxt = [&](uint64_t i) { return i + 1 == end ? beg : i + 1; };
  auto prv = [&](uint64_t i) { return i == beg ? end - 1 : i - 1; };
  auto mark = [&](const PrimeOffsetPair& x) {
    words[x.q >> 6] |= uint64_t{1} << (x.q & 63);
    onmark(x.p, x.q);
  };

  uint64_t m = 0;  // skip-k rewrites

  if (N == 1) {
    PrimeOffsetPair x = pairs[S0];
    mark(x);
    const uint64_t qq = (uint64_t)x.q + x.p;
    if (qq < hi_thr) {
      pairs[S0] = {x.p, (uint32_t)(qq - lo_sub)};
      ++m;
    } else {
      pairs[S0] = {x.p, (uint32_t)(qq - hi_thr)};
    }
  } else if (N >= 2) {
    const uint64_t T = prv(E);
    PrimeOffsetPair hold_a = pairs[S0];
    PrimeOffsetPair hold_b = pairs[T];
    uint64_t ra = nxt(S0);  // next unread, bottom
    uint64_t rb = prv(T);   // next unread, top
    uint64_t wa = S0;       // next bottom write slot
    uint64_t wb = E;       // top writes go to prv(wb)
    uint64_t unread = N - 2;
    bool use_a = true;

    auto step_careful = [&](bool reload) {
      PrimeOffsetPair& x = use_a ? hold_a : hold_b;
      mark(x);
      const uint64_t qq = (uint64_t)x.q + x.p;
      if (qq < hi_thr) {
        pairs[wa] = {x.p, (uint32_t)(qq - lo_sub)};
        wa = nxt(wa);
        ++m;
        if (reload) {
          x = pairs[ra];
          ra = nxt(ra);
        }
      } else {
        wb = prv(wb);
        pairs[wb] = {x.p, (uint32_t)(qq - hi_thr)};
        if (reload) {
          x = pairs[rb];
          rb = prv(rb);
        }
      }
      use_a = !use_a;
    };

    if constexpr (!Unroll) {
      while (unread > 0) {
        step_careful(true);
        --unread;
      }
    } else {
      // branchless core: the skip decision selects addresses and deltas via
      // conditional moves, the store itself is unconditional
      auto step_plain = [&](PrimeOffsetPair& x) {
        mark(x);
        const uint64_t qq = (uint64_t)x.q + x.p;
        const bool hi = qq >= hi_thr;
        const uint64_t dst = hi ? wb - 1 : wa;
        const uint64_t sub = hi ? hi_thr : lo_sub;
        pairs[dst] = {x.p, (uint32_t)(qq - sub)};
        const uint64_t src = hi ? rb : ra;
        x = pairs[src];
        // prefetch ahead on the read stream; integer math keeps the address
        // formation defined even when it runs past the span
        __builtin_prefetch(
            (const void*)((uintptr_t)pairs + (src + (hi ? -8 : 8)) * sizeof(PrimeOffsetPair)));
        wa += !hi;
        wb -= hi;
        ra += !hi;
        rb -= hi;
        m += !hi;
      };

      constexpr uint64_t kBatch = uint64_t{1} << kLogUnrollBatch;
      while (unread > 0) {
        uint64_t budget;
        if (!broken) {
          budget = unread;
        } else {
          if (ra == end) ra = beg;
          if (wa == end) wa = beg;
          budget = std::min({unread, end - ra, end - wa, rb - beg, wb - beg});
        }
        if (budget == 0) {  // a cursor sits on the seam
          step_careful(true);
          --unread;
          continue;
        }
        uint64_t batches = budget >> kLogUnrollBatch;
        uint64_t rem = budget & (kBatch - 1);
        // alternate the two held pairs so the reload of one overlaps the
        // processing of the other
        while (batches--) {
          for (unsigned i = 0; i < kBatch / 2; ++i) {
            step_plain(hold_a);
            step_plain(hold_b);
          }
        }
        while (rem >= 2) {
          step_plain(hold_a);
          step_plain(hold_b);
          rem -= 2;
        }
        if (rem) {
          step_plain(use_a ? hold_a : hold_b);
          use_a = !use_a;
        }
        unread -= budget;
      }
    }

    step_careful(false);
    step_careful(false);
  }

  commit_bucket_boundary(cs, k, b, S, m, beg, end);
  c.b = (b + 1) % bnum;
}

// Naive counterpart for differential tests: copies the bucket out, processes
// strictly bottom-to-top, writes the two groups back. Same bitmap, same
// boundary, same per-bucket pair multisets as the in-place two-ended path.
template <class OnMark>
void sieve_circle_reference(SegmentBuffer& seg, CircleSet& cs, uint64_t k, OnMark&& onmark) {
  Circle& c = cs.circles[k];
  const uint32_t bnum = (uint32_t)k + 1;
  const uint32_t b = c.b;
  const uint64_t beg = cs.circle_begin(k);
  const uint64_t end = cs.circle_end(k);
  if (beg == end) {
    c.b = (b + 1) % bnum;
    return;
  }

  const uint64_t bb = CircleSet::bucket_base(k);
  const uint64_t S = cs.starts[bb + b];
  const uint64_t E = cs.starts[bb + (b + 1) % bnum];
  const bool broken = (b == c.r);
  const uint64_t S0 = (broken && S == end) ? beg : S;

  std::vector<PrimeOffsetPair> span;
  if (broken) {
    span.insert(span.end(), cs.pairs.begin() + S, cs.pairs.begin() + end);
    span.insert(span.end(), cs.pairs.begin() + beg, cs.pairs.begin() + E);
  } else {
    span.insert(span.end(), cs.pairs.begin() + S, cs.pairs.begin() + E);
  }

  const unsigned l = cs.l;
  const uint64_t lo_sub = k << l;
  const uint64_t hi_thr = (k + 1) << l;

  std::vector<PrimeOffsetPair> stay_low, stay_high;
  for (const PrimeOffsetPair& x : span) {
    seg.set_bit(x.q);
    onmark(x.p, x.q);
    const uint64_t qq = (uint64_t)x.q + x.p;
    if (qq < hi_thr)
      stay_low.push_back({x.p, (uint32_t)(qq - lo_sub)});
    else
      stay_high.push_back({x.p, (uint32_t)(qq - hi_thr)});
  }

  uint64_t pos = S0;
  auto nxt = [&](uint64_t i) { return i + 1 == end ? beg : i + 1; };
  for (const PrimeOffsetPair& x : stay_low) {
    cs.pairs[pos] = x;
    pos = nxt(pos);
  }
  // top writes descend in the in-place scheme; mirror that order
  for (auto it = stay_high.rbegin(); it != stay_high.rend(); ++it) {
    cs.pairs[pos] = *it;
    pos = nxt(pos);
  }

  commit_bucket_boundary(cs, k, b, S, stay_low.size(), beg, end);
  c.b = (b + 1) % bnum;
}

}  // namespace erato::detail
