#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sftirr/error.hpp"

namespace sftirr {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// One-sided subshift of finite type: alphabet {0,...,d-1} plus a 0/1
// adjacency matrix. A word x is admissible when adj(x_i, x_{i+1}) = 1 for
// every consecutive pair.
struct Sft {
    std::size_t d = 0;
    std::vector<std::uint8_t> adj;  // row-major d*d, entries in {0,1}

    bool edge(Symbol i, Symbol j) const {
        return adj[static_cast<std::size_t>(i) * d + j] != 0;
    }
};

// Validates d >= 2, square shape, 0/1 entries, and that no symbol is
// stranded (every row and every column has at least one 1).
Sft build_sft(std::size_t d, const std::vector<std::vector<int>>& matrix);

// Wielandt primitivity horizon (d-1)^2 + 1: checking positivity of A^k up
// to this power is exact.
std::size_t wielandt_bound(const Sft& sft);

// True iff some power A^k, k <= wielandt_bound, is entrywise positive.
bool check_aperiodic(const Sft& sft);

bool admissible(const Sft& sft, std::span<const Symbol> w);

// All admissible words of length n in lexicographic order.
std::vector<Word> enumerate_words(const Sft& sft, std::size_t n,
                                  std::size_t cap = 20);

// Number of admissible words of length n (sum of the entries of A^{n-1}).
std::uint64_t count_words(const Sft& sft, std::size_t n);

// min{ i : x_i != y_i }; nullopt marks identical words. The symbolic
// metric is d(x,y) = e^{-index}, 0 when identical.
using SeparationIndex = std::optional<std::size_t>;
SeparationIndex separation_index(std::span<const Symbol> x,
                                 std::span<const Symbol> y);
double symbolic_distance(const SeparationIndex& sep);

// A shortest directed cycle, ties broken lexicographically by
// (start symbol, successor symbols). Returned as the symbol sequence
// b_1...b_kappa with edges b_i -> b_{i+1} and b_kappa -> b_1.
Word minimal_cycle(const Sft& sft);

// Every cycle of minimal length, one canonical rotation each (starting at
// the cycle's smallest symbol), sorted lexicographically.
std::vector<Word> minimal_cycles(const Sft& sft);

// Interior of a shortest path from -> to (empty when the direct edge
// exists). Interior symbols never come from `avoid`; endpoints are exempt
// from it. Ties broken lexicographically.
Word shortest_path(const Sft& sft, Symbol from, Symbol to,
                   const std::vector<Symbol>& avoid = {});

// Interior of an admissible path of exactly n edges from -> to. Prefers
// interiors that avoid `from`; among those, lexicographically smallest.
Word path_of_length(const Sft& sft, Symbol from, Symbol to, std::size_t n);

// Minimal n0 such that (A^j)(a,a) > 0 for every j in [n0, wielandt_bound];
// aperiodicity then gives (A^j)(a,a) > 0 for all j >= n0.
int return_threshold(const Sft& sft, Symbol a);

// Test/CLI convenience: "0110" -> Word{0,1,1,0}. Digits only, so
// alphabets up to 10 symbols.
Word word_from_digits(std::string_view digits);
std::string word_to_digits(std::span<const Symbol> w);

}  // namespace sftirr
