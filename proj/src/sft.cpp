#include "sftirr/sft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sftirr {

namespace {

using BoolMatrix = std::vector<std::uint8_t>;  // row-major d*d

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b,
                         std::size_t d) {
    BoolMatrix out(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (!a[i * d + k]) continue;
            const std::uint8_t* brow = &b[k * d];
            std::uint8_t* orow = &out[i * d];
            for (std::size_t j = 0; j < d; ++j) orow[j] |= brow[j];
        }
    }
    return out;
}

bool all_positive(const BoolMatrix& m) {
    return std::all_of(m.begin(), m.end(),
                       [](std::uint8_t v) { return v != 0; });
}

}  // namespace

Sft build_sft(std::size_t d, const std::vector<std::vector<int>>& matrix) {
    if (d < 2)
        throw Error("DimensionMismatch", "alphabet size must be at least 2");
    if (d > std::numeric_limits<Symbol>::max())
        throw Error("DimensionMismatch",
                    "alphabet size exceeds symbol range (" +
                        std::to_string(std::numeric_limits<Symbol>::max()) +
                        ")");
    if (matrix.size() != d)
        throw Error("DimensionMismatch",
                    "expected " + std::to_string(d) + " rows, got " +
                        std::to_string(matrix.size()));
    Sft sft;
    sft.d = d;
    sft.adj.assign(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (matrix[i].size() != d)
            throw Error("DimensionMismatch",
                        "row " + std::to_string(i) + " has " +
                            std::to_string(matrix[i].size()) +
                            " entries, expected " + std::to_string(d));
        for (std::size_t j = 0; j < d; ++j) {
            int v = matrix[i][j];
            if (v != 0 && v != 1)
                throw Error("InvalidEntry",
                            "matrix entries must be 0 or 1, got " +
                                std::to_string(v) + " at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
            sft.adj[i * d + j] = static_cast<std::uint8_t>(v);
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < d; ++j) {
            row = row || sft.adj[i * d + j];
            col = col || sft.adj[j * d + i];
        }
        if (!row)
            throw Error("StrandedSymbol",
                        "row " + std::to_string(i) + " is all zero");
        if (!col)
            throw Error("StrandedSymbol",
                        "column " + std::to_string(i) + " is all zero");
    }
    return sft;
}

std::size_t wielandt_bound(const Sft& sft) {
    return (sft.d - 1) * (sft.d - 1) + 1;
}

bool check_aperiodic(const Sft& sft) {
    const std::size_t bound = wielandt_bound(sft);
    BoolMatrix power = sft.adj;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (all_positive(power)) return true;
        if (k < bound) power = bool_multiply(power, sft.adj, sft.d);
    }
    return false;
}

bool admissible(const Sft& sft, std::span<const Symbol> w) {
    for (Symbol s : w)
        if (s >= sft.d)
            throw Error("SymbolOutOfRange",
                        "symbol " + std::to_string(s) + " not in alphabet of size " +
                            std::to_string(sft.d));
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!sft.edge(w[i], w[i + 1])) return false;
    return true;
}

std::vector<Word> enumerate_words(const Sft& sft, std::size_t n,
                                  std::size_t cap) {
    if (n < 1 || n > cap)
        throw Error("CapExceeded",
                    "word length " + std::to_string(n) +
                        " outside [1, " + std::to_string(cap) + "]");
    std::vector<Word> out;
    Word current(n, 0);
    // depth-first in symbol order, which is lexicographic on the output
    auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            out.push_back(current);
            return;
        }
        for (Symbol s = 0; s < sft.d; ++s) {
            if (pos > 0 && !sft.edge(current[pos - 1], s)) continue;
            current[pos] = s;
            self(self, pos + 1);
        }
    };
    extend(extend, 0);
    return out;
}

std::uint64_t count_words(const Sft& sft, std::size_t n) {
    if (n < 1) throw Error("CapExceeded", "word length must be >= 1");
    const std::size_t d = sft.d;
    std::vector<std::uint64_t> counts(d, 1);  // words of length 1 per last symbol
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<std::uint64_t> next(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (counts[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sft.adj[i * d + j]) next[j] += counts[i];
        }
        counts.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

SeparationIndex separation_index(std::span<const Symbol> x,
                                 std::span<const Symbol> y) {
    if (x.size() != y.size())
        throw Error("LengthMismatch",
                    "words have lengths " + std::to_string(x.size()) + " and " +
                        std::to_string(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return i;
    return std::nullopt;
}

double symbolic_distance(const SeparationIndex& sep) {
    if (!sep) return 0.0;
    return std::exp(-static_cast<double>(*sep));
}

namespace {

// Lexicographically smallest simple closed path of exactly `len` edges
// starting at `start`, or empty. Exact for minimal cycle lengths, where
// every closed walk is simple.
Word lex_smallest_cycle_at(const Sft& sft, Symbol start, std::size_t len) {
    Word path{start};
    std::vector<std::uint8_t> used(sft.d, 0);
    used[start] = 1;
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        Symbol cur = path.back();
        if (depth == len) return sft.edge(cur, start);
        for (Symbol s = 0; s < sft.d; ++s) {
            if (used[s] || !sft.edge(cur, s)) continue;
            used[s] = 1;
            path.push_back(s);
            if (self(self, depth + 1)) return true;
            path.pop_back();
            used[s] = 0;
        }
        return false;
    };
    if (dfs(dfs, 1)) return path;
    return {};
}

}  // namespace

Word minimal_cycle(const Sft& sft) {
    for (std::size_t len = 1; len <= sft.d; ++len)
        for (Symbol a = 0; a < sft.d; ++a) {
            Word cyc = lex_smallest_cycle_at(sft, a, len);
            if (!cyc.empty()) return cyc;
        }
    throw Error("NoCycle", "graph has no directed cycle");
}

std::vector<Word> minimal_cycles(const Sft& sft) {
    const std::size_t kappa = minimal_cycle(sft).size();
    std::vector<Word> cycles;
    Word path;
    std::vector<std::uint8_t> used(sft.d, 0);
    for (Symbol a = 0; a < sft.d; ++a) {
        // canonical rotation starts at the smallest symbol of the cycle,
        // so only collect cycles whose symbols are all >= a
        path.assign(1, a);
        std::fill(used.begin(), used.end(), 0);
        used[a] = 1;
        auto dfs = [&](auto&& self, std::size_t depth) -> void {
            Symbol cur = path.back();
            if (depth == kappa) {
                if (sft.edge(cur, a)) cycles.push_back(path);
                return;
            }
            for (Symbol s = a + 1; s < sft.d; ++s) {
                if (used[s] || !sft.edge(cur, s)) continue;
                used[s] = 1;
                path.push_back(s);
                self(self, depth + 1);
                path.pop_back();
                used[s] = 0;
            }
        };
        dfs(dfs, 1);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

Word shortest_path(const Sft& sft, Symbol from, Symbol to,
                   const std::vector<Symbol>& avoid) {
    if (from >= sft.d || to >= sft.d)
        throw Error("SymbolOutOfRange", "path endpoint not in alphabet");
    std::vector<std::uint8_t> blocked(sft.d, 0);
    for (Symbol s : avoid)
        if (s < sft.d) blocked[s] = 1;

    // dist[s] = fewest edges from s to `to` where every symbol strictly
    // between s and `to` is unblocked
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(sft.d, kInf);
    dist[to] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (Symbol u = 0; u < sft.d; ++u)
            for (Symbol v = 0; v < sft.d; ++v) {
                if (!sft.edge(u, v) || dist[v] == kInf) continue;
                if (v != to && blocked[v]) continue;
                if (dist[v] + 1 < dist[u]) {
                    dist[u] = dist[v] + 1;
                    changed = true;
                }
            }
    }

    // Path length: at least one edge even when from == to.
    std::size_t best = kInf;
    for (Symbol s = 0; s < sft.d; ++s) {
        if (!sft.edge(from, s)) continue;
        std::size_t through = (s == to) ? 1
                              : (blocked[s] || dist[s] == kInf)
                                  ? kInf
                                  : dist[s] + 1;
        best = std::min(best, through);
    }
    if (best == kInf)
        throw Error("NoPath", "no path from " + std::to_string(from) + " to " +
                                  std::to_string(to) +
                                  " with the requested interior");

    Word interior;
    Symbol cur = from;
    for (std::size_t remaining = best; remaining > 1; --remaining) {
        for (Symbol s = 0; s < sft.d; ++s) {
            if (!sft.edge(cur, s) || blocked[s] || s == to) continue;
            if (dist[s] == remaining - 1) {
                interior.push_back(s);
                cur = s;
                break;
            }
        }
    }
    return interior;
}

Word path_of_length(const Sft& sft, Symbol from, Symbol to, std::size_t n) {
    if (from >= sft.d || to >= sft.d)
        throw Error("SymbolOutOfRange", "path endpoint not in alphabet");
    if (n < 1) throw Error("NoPathOfLength", "path length must be >= 1");

    // reach[k][s]: a path of k edges s -> to whose interior stays in the
    // allowed set (endpoints exempt)
    auto reach_table = [&](const std::vector<std::uint8_t>& allowed) {
        std::vector<std::vector<std::uint8_t>> reach(
            n + 1, std::vector<std::uint8_t>(sft.d, 0));
        reach[0][to] = 1;
        for (std::size_t k = 1; k <= n; ++k)
            for (Symbol u = 0; u < sft.d; ++u)
                for (Symbol v = 0; v < sft.d; ++v) {
                    if (!sft.edge(u, v)) continue;
                    bool interior_ok = (k == 1) || allowed[v];
                    if (interior_ok && reach[k - 1][v]) {
                        reach[k][u] = 1;
                        break;
                    }
                }
        return reach;
    };

    auto build = [&](const std::vector<std::uint8_t>& allowed,
                     Word& out) -> bool {
        auto reach = reach_table(allowed);
        if (!reach[n][from]) return false;
        Symbol cur = from;
        for (std::size_t k = n; k > 1; --k) {
            bool stepped = false;
            for (Symbol s = 0; s < sft.d; ++s) {
                if (!sft.edge(cur, s) || !allowed[s]) continue;
                if (reach[k - 1][s]) {
                    out.push_back(s);
                    cur = s;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) return false;
        }
        return sft.edge(cur, to);
    };

    std::vector<std::uint8_t> avoid_from(sft.d, 1);
    avoid_from[from] = 0;
    Word interior;
    if (build(avoid_from, interior)) return interior;
    interior.clear();
    std::vector<std::uint8_t> all(sft.d, 1);
    if (build(all, interior)) return interior;
    throw Error("NoPathOfLength",
                "no admissible path of " + std::to_string(n) + " edges from " +
                    std::to_string(from) + " to " + std::to_string(to));
}

int return_threshold(const Sft& sft, Symbol a) {
    if (a >= sft.d) throw Error("SymbolOutOfRange", "symbol not in alphabet");
    const std::size_t bound = wielandt_bound(sft);
    std::vector<std::uint8_t> returns(bound + 1, 0);
    BoolMatrix power = sft.adj;
    for (std::size_t k = 1; k <= bound; ++k) {
        returns[k] = power[static_cast<std::size_t>(a) * sft.d + a];
        if (k < bound) power = bool_multiply(power, sft.adj, sft.d);
    }
    if (!returns[bound])
        throw Error("NotMixing",
                    "no return of length " + std::to_string(bound) +
                        "; matrix is not aperiodic");
    std::size_t n0 = bound;
    while (n0 > 1 && returns[n0 - 1]) --n0;
    return static_cast<int>(n0);
}

Word word_from_digits(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw Error("SymbolOutOfRange", "digit expected in word literal");
        w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
}

std::string word_to_digits(std::span<const Symbol> w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol x : w) {
        if (x > 9) throw Error("SymbolOutOfRange", "symbol not printable as digit");
        s.push_back(static_cast<char>('0' + x));
    }
    return s;
}

}  // namespace sftirr
