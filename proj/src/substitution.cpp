#include "sftirr/substitution.hpp"

#include <algorithm>

#include "sftirr/construction.hpp"
#include "sftirr/error.hpp"

namespace sftirr {

Zone zone_of(std::int64_t i, std::int64_t M) {
    if (i < 0 || i >= kFactorials[kMaxFactorial])
        throw Error("IndexOverflow",
                    "index " + std::to_string(i) + " outside [0, 20! - 1]");
    if (M < 1) throw Error("InvalidEntry", "M must be >= 1");
    for (int k = 1; 2 * k - 1 <= kMaxFactorial; ++k) {
        if (2 * k <= kMaxFactorial && 2 * k + 1 <= kMaxFactorial &&
            i >= kFactorials[2 * k] && i <= kFactorials[2 * k + 1])
            return Zone{Zone::Kind::Frozen, k};
        if (2 * k <= kMaxFactorial && i >= kFactorials[2 * k - 1] + 1 &&
            i <= kFactorials[2 * k] - 1 - M)
            return Zone{Zone::Kind::SwapEligible, k};
        if (kFactorials[2 * k - 1] > i) break;
    }
    return Zone{Zone::Kind::Unzoned, 0};
}

bool in_frozen_set(std::int64_t i) {
    for (int k = 1; 2 * k + 1 <= kMaxFactorial; ++k) {
        if (i < kFactorials[2 * k]) return false;
        if (i <= kFactorials[2 * k + 1]) return true;
    }
    return false;
}

std::vector<std::size_t> find_occurrences(const Word& x, const Word& pattern) {
    std::vector<std::size_t> out;
    const std::size_t m = pattern.size();
    if (m == 0 || m > x.size()) return out;

    std::vector<std::size_t> fail(m, 0);
    for (std::size_t i = 1, k = 0; i < m; ++i) {
        while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
        if (pattern[i] == pattern[k]) ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < x.size(); ++i) {
        while (k > 0 && x[i] != pattern[k]) k = fail[k - 1];
        if (x[i] == pattern[k]) ++k;
        if (k == m) {
            out.push_back(i + 1 - m);
            k = fail[k - 1];
        }
    }
    return out;
}

SubstitutionMap::SubstitutionMap(Word xi, Word eta, std::size_t w_len)
    : xi_(std::move(xi)), eta_(std::move(eta)), w_len_(w_len) {
    if (xi_.size() != eta_.size())
        throw Error("PatternMismatch", "xi and eta must have equal length");
    if (xi_.empty() || 2 * w_len_ >= xi_.size())
        throw Error("PatternMismatch",
                    "w blocks must leave a non-empty middle");
    if (xi_ == eta_)
        throw Error("PatternMismatch", "xi and eta must differ");
    bool shared = std::equal(xi_.begin(), xi_.begin() + w_len_, eta_.begin()) &&
                  std::equal(xi_.end() - w_len_, xi_.end(),
                             eta_.end() - w_len_);
    if (!shared)
        throw Error("PatternMismatch",
                    "xi and eta must share their w-prefix and w-suffix");
}

SubstitutionMap SubstitutionMap::from_word_system(const WordSystem& ws) {
    return SubstitutionMap(ws.xi, ws.eta, ws.w.size());
}

void SubstitutionMap::substitute(Word& out, const Word& original,
                                 bool zoned) const {
    const std::int64_t M = this->M();
    const std::size_t mid_len = xi_.size() - 2 * w_len_;
    auto rewrite = [&](std::size_t at, const Word& replacement_middle) {
        std::copy(replacement_middle.begin() + w_len_,
                  replacement_middle.begin() + w_len_ + mid_len,
                  out.begin() + at + w_len_);
    };
    for (std::size_t i : find_occurrences(original, xi_)) {
        if (zoned && zone_of(static_cast<std::int64_t>(i), M).kind !=
                         Zone::Kind::SwapEligible)
            continue;
        rewrite(i, eta_);
    }
    for (std::size_t i : find_occurrences(original, eta_)) {
        if (zoned && zone_of(static_cast<std::int64_t>(i), M).kind !=
                         Zone::Kind::SwapEligible)
            continue;
        rewrite(i, xi_);
    }
}

Word SubstitutionMap::apply_L(const Word& x) const {
    if (static_cast<std::int64_t>(x.size()) > kFactorials[kMaxFactorial])
        throw Error("IndexOverflow", "prefix length exceeds 20!");
    Word out = x;
    substitute(out, x, /*zoned=*/true);
    return out;
}

Word SubstitutionMap::apply_involution(const Word& x) const {
    Word out = x;
    substitute(out, x, /*zoned=*/false);
    return out;
}

}  // namespace sftirr
