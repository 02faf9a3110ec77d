// Braid words on n strands and the elementary operations on them.
//
// A word is a flat sequence of nonzero letters; letter e stands for the
// Artin generator sigma_|e| with sign(e) as its exponent.  Strand count n
// is carried explicitly so that words which do not mention the top strands
// keep their meaning under closure.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab {

struct BraidParseError : std::runtime_error {
    explicit BraidParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BraidWord {
    int n = 1;                 // strand count, >= 1
    std::vector<int> letters;  // each nonzero, |letter| <= n-1

    bool operator==(const BraidWord& o) const = default;
};

// Maximal run of one generator: sigma_index^exponent.
struct Syllable {
    int index = 0;
    long exponent = 0;
    bool operator==(const Syllable& o) const = default;
};

// Permutation of {1..n}; img[i] is the image of i+1.
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    int size() const { return static_cast<int>(img.size()); }
    int operator()(int k) const { return img[k - 1]; }  // 1-indexed
    // Position mapped to `value`, i.e. the preimage under the permutation.
    int preimage(int value) const;
    // Right multiplication by the adjacent transposition s_i (swaps the
    // images at positions i, i+1); 1 <= i <= n-1.
    Perm swapped(int i) const;
    // Number of cycles (fixed points count as cycles).
    int cycle_count() const;
    // Deletes position j after shifting its image chain down; used by the
    // trace recursion.  Precondition: img maps some position j to n.
    Perm drop_position(int j) const;

    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;
};

// --- parsing / rendering ---------------------------------------------------

// Grammar: ["B" n ":"] item*, items whitespace- or comma-separated.
// An item is a signed letter ("2", "-1") or syllable shorthand "i^e"
// ("1^3", "-2^2", "1^-2"); the expansion of i^e is |e| letters of sign
// sign(i)*sign(e).  Zero letters, zero exponents, and letters out of range
// for an explicit strand count are errors.  Without the prefix the strand
// count is inferred as 1 + max |letter|.
BraidWord parse_braid(const std::string& text);

// Canonical form "B{n}: ..." using run shorthand; parse(render(w)) == w.
std::string render_braid(const BraidWord& w);

// --- elementary operations --------------------------------------------------

// Exponent sum.
long writhe(const BraidWord& w);

// Freely reduced syllable decomposition (adjacent equal-index runs merged,
// zero runs dropped, cascading).
std::vector<Syllable> syllables(const BraidWord& w);

// Keeps letters with a < |index| < b, reindexed by -a; result lives in
// B_{b-a}.  Precondition: 0 <= a < b <= n.
BraidWord psi(int a, int b, const BraidWord& w);

// Underlying permutation, letters composed left to right.
Perm braid_permutation(const BraidWord& w);

// Components of the closure = cycles of the permutation.
int component_count(const BraidWord& w);

// All letters negated in place (diagram mirror).
BraidWord mirror(const BraidWord& w);

// Markov stabilization: append sigma_n^sign on n+1 strands; sign is +1/-1.
BraidWord stabilize(const BraidWord& w, int sign);

// Rotate letters left by k (conjugation by the rotated prefix).
BraidWord cyclic_shift(const BraidWord& w, long k);

// Concatenation; strand counts must agree.
BraidWord concat(const BraidWord& a, const BraidWord& b);

// sigma_i^e as a word in B_n (|e| letters).
BraidWord generator_power(int i, long e, int n);

// Torus word: (sigma_{q-1} ... sigma_1)^p in B_q for p >= 0; negative p
// gives the formal inverse (reversed, negated letters).  q >= 2.
BraidWord torus_word(long p, int q);

}  // namespace skeinlab
