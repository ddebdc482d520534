#include "hesscalc/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace hesscalc {

namespace {

std::mutex cache_mutex;

std::map<std::vector<int>, IntPoly>& cache() {
    static std::map<std::vector<int>, IntPoly> table;
    return table;
}

std::optional<IntPoly> cache_lookup(const std::vector<int>& key) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it == cache().end()) return std::nullopt;
    return it->second;
}

// Get-or-insert: the first writer wins, so concurrent computations of the
// same permutation converge on a single stored polynomial.
IntPoly cache_store(const std::vector<int>& key, IntPoly value) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache().try_emplace(key, std::move(value));
    return it->second;
}

// Smallest i with w(i) < w(i+1), or 0 when there is none (w is then the
// longest element of its degree).
int smallest_ascent(const Permutation& w) {
    for (int i = 1; i < w.degree(); ++i)
        if (!w.has_descent(i)) return i;
    return 0;
}

} // namespace

IntPoly staircase_monomial(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<Monomial::Entry> entries;
    for (int i = 1; i < n; ++i) entries.emplace_back(i, n - i);
    return IntPoly::term(Monomial::from_entries(entries), Int(1));
}

IntPoly schubert(const Permutation& w) {
    // Climb ascents until hitting the cache or the longest element, then
    // walk back down applying one divided difference per step, memoizing
    // every intermediate permutation along the way.
    Permutation current = w.stabilized();
    std::vector<std::pair<std::vector<int>, int>> pending; // (key, ascent used)
    IntPoly poly;
    for (;;) {
        if (auto hit = cache_lookup(current.images())) {
            poly = std::move(*hit);
            break;
        }
        const int ascent = smallest_ascent(current);
        if (ascent == 0) {
            poly = cache_store(current.images(), staircase_monomial(current.degree()));
            break;
        }
        pending.emplace_back(current.images(), ascent);
        current = current * Permutation::simple(ascent, current.degree());
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        poly = cache_store(it->first, divided_difference(poly, it->second));
    }
    return poly;
}

void clear_schubert_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().clear();
}

std::size_t schubert_cache_size() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache().size();
}

MonkExpansion monk_expand(int r, const Permutation& w) {
    if (r < 1) throw std::invalid_argument("product index must be >= 1");
    // Beyond m = max(deg w, r+1) + 1 every candidate q is blocked: position m
    // sits strictly between p and q and its value m lies strictly between
    // w(p) < m and w(q) = q > m. So degree m sees every admissible term.
    const int m = std::max(w.degree(), r + 1) + 1;
    const Permutation we = w.embed(m);
    MonkExpansion out{w, r, {}};
    for (int p = 1; p <= r; ++p) {
        for (int q = r + 1; q <= m; ++q) {
            const int low = we(p);
            const int high = we(q);
            if (low >= high) continue;
            bool blocked = false;
            for (int i = p + 1; i < q && !blocked; ++i)
                blocked = low < we(i) && we(i) < high;
            if (blocked) continue;
            out.terms.push_back(we * Permutation::transposition(p, q, m));
        }
    }
    std::sort(out.terms.begin(), out.terms.end());
    // The admissibility condition is exactly the covering condition, so
    // every term sits one length step above the base.
    const int base_length = w.length();
    for (const Permutation& t : out.terms)
        if (t.length() != base_length + 1)
            throw std::logic_error("product expansion produced a non-covering term");
    return out;
}

} // namespace hesscalc
