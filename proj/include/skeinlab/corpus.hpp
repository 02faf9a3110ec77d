#pragma once

/// \file corpus.hpp
/// \brief Word-corpus utilities shared by the verification suites: canonical
///        enumeration of three-strand words, seeded random words, stable
///        hashing, and a small deterministic worker pool.

#include "skeinlab/braid.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace skeinlab {

/// FNV-1a 64-bit hash of a byte string; used for stable polynomial
/// fingerprints in CSV output.
std::uint64_t fnv1a64(std::string_view text);

/// All three-strand words of length 0..max_len over the letters
/// {-2, -1, 1, 2} that are lexicographically least among their cyclic
/// rotations (one representative per rotation orbit; closures are
/// conjugation-invariant, so nothing is lost).  Ordered by length, then
/// lexicographically.
std::vector<BraidWord> canonical_three_words(int max_len);

/// Uniformly random word with the given strand count: length in
/// [1, max_len], letters +-idx for idx in [1, n-1].  Uses plain modulo
/// reduction so a fixed seed gives the same words on every platform.
BraidWord random_word_n(std::mt19937_64& rng, int n, int max_len);

/// Random word with strand count drawn uniformly from [2, max_n].
BraidWord random_word(std::mt19937_64& rng, int max_n, int max_len);

/// Worker count for a parallel region: SKEINLAB_THREADS when set (clamped
/// to at least 1), otherwise hardware concurrency, never more than jobs.
int worker_count(std::size_t jobs);

/// Runs fn(i) for every i in [0, jobs), possibly across threads.  Callers
/// write into pre-sized per-index slots, so results are independent of the
/// schedule and thread count.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn);

} // namespace skeinlab
