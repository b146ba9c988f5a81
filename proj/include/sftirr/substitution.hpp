#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sftirr/sft.hpp"

namespace sftirr {

struct WordSystem;

// Exact 64-bit factorials 0! .. 20!; 21! would overflow.
inline constexpr int kMaxFactorial = 20;
constexpr std::array<std::int64_t, kMaxFactorial + 1> factorial_table() {
    std::array<std::int64_t, kMaxFactorial + 1> f{};
    f[0] = 1;
    for (int k = 1; k <= kMaxFactorial; ++k) f[k] = f[k - 1] * k;
    return f;
}
inline constexpr std::array<std::int64_t, kMaxFactorial + 1> kFactorials =
    factorial_table();

struct Zone {
    enum class Kind { Frozen, SwapEligible, Unzoned };
    Kind kind = Kind::Unzoned;
    int k = 0;  // frozen zone [(2k)!, (2k+1)!], swap zone [(2k-1)!+1, (2k)!-1-M]
};

// Classification of a start index against the two factorial rules (k >= 1);
// indices covered by neither rule are Unzoned.
Zone zone_of(std::int64_t i, std::int64_t M);

// Membership in S1 = union over k >= 1 of [(2k)!, (2k+1)!], the frozen
// index set (independent of M).
bool in_frozen_set(std::int64_t i);

// All start indices i with x[i .. i+|pattern|-1] = pattern, ascending.
// Knuth-Morris-Pratt, linear in |x| + |pattern|.
std::vector<std::size_t> find_occurrences(const Word& x, const Word& pattern);

// The substitution that swaps xi <-> eta. Occurrences are always matched
// against the original input; only the middle block between the shared
// w-prefix and w-suffix is rewritten, so chained occurrences (which share
// w blocks) stay consistent.
class SubstitutionMap {
public:
    SubstitutionMap(Word xi, Word eta, std::size_t w_len);
    static SubstitutionMap from_word_system(const WordSystem& ws);

    // Swap at every occurrence whose start index lies in a swap-eligible
    // zone. On a finite prefix, occurrences straddling the end are left
    // alone, so output indices >= n - M + 1 may differ from the map
    // applied to an infinite extension.
    Word apply_L(const Word& x) const;

    // Swap at every occurrence regardless of zones (the involution iota).
    Word apply_involution(const Word& x) const;

    const Word& xi() const { return xi_; }
    const Word& eta() const { return eta_; }
    std::int64_t M() const { return static_cast<std::int64_t>(xi_.size()); }
    std::size_t w_len() const { return w_len_; }

private:
    void substitute(Word& out, const Word& original, bool zoned) const;

    Word xi_, eta_;
    std::size_t w_len_ = 0;
};

}  // namespace sftirr
