#include "hesscalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>

#include "hesscalc/groebner.hpp"
#include "hesscalc/hessenberg.hpp"
#include "hesscalc/schubert.hpp"

namespace hesscalc {

namespace {

using CaseFn = std::function<std::optional<CaseFailure>(std::size_t)>;

// Runs `fn` over case indices 0..count-1, fanning out across workers with a
// strided split. Failures are collected into slots by index, so the report
// content does not depend on the worker count or interleaving.
VerificationReport run_sweep(std::string check, int n, std::size_t count,
                             const SweepOptions& opts, const CaseFn& fn) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check = std::move(check);
    report.n = n;
    report.cases = count;

    std::vector<std::optional<CaseFailure>> slots(count);
    auto run_one = [&](std::size_t index) {
        try {
            slots[index] = fn(index);
        } catch (const std::exception& e) {
            slots[index] = CaseFailure{"case #" + std::to_string(index),
                                       "no exception", e.what()};
        }
    };

    unsigned workers = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                     : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < count; i += workers) run_one(i);
            });
        }
        for (std::thread& worker : pool) worker.join();
    }

    for (std::size_t i = 0; i < count; ++i)
        if (slots[i]) report.failures.push_back(std::move(*slots[i]));

    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

std::vector<std::pair<int, int>> strict_pairs(int n) { // 1 <= j < i <= n
    std::vector<std::pair<int, int>> out;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.emplace_back(i, j);
    return out;
}

std::string permutation_set_string(const std::vector<Permutation>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out += ',';
        out += set[i].to_string();
    }
    out += '}';
    return out;
}

} // namespace

VerificationReport verify_schubert_sum_identity(int n, SweepOptions opts) {
    if (n < 2) throw std::invalid_argument("the sweep needs n >= 2");
    const auto pairs = strict_pairs(n);
    return run_sweep("theorem", n, pairs.size(), opts,
                     [&pairs](std::size_t index) -> std::optional<CaseFailure> {
                         const auto [i, j] = pairs[index];
                         const IntPoly expected = generator_poly(i - 1, j);
                         const IntPoly actual = alternating_schubert_sum(i, j);
                         if (expected == actual) return std::nullopt;
                         return CaseFailure{"i=" + std::to_string(i) + " j=" + std::to_string(j),
                                            format(expected), format(actual)};
                     });
}

VerificationReport verify_generator_ddo(int n, SweepOptions opts) {
    if (n < 2) throw std::invalid_argument("the sweep needs n >= 2");
    const auto pairs = strict_pairs(n);
    // Two identities per (i, j): raise j, and lower i with a sign flip.
    return run_sweep("ddo", n, 2 * pairs.size(), opts,
                     [&pairs](std::size_t index) -> std::optional<CaseFailure> {
                         const auto [i, j] = pairs[index / 2];
                         const IntPoly f = generator_poly(i, j);
                         if (index % 2 == 0) {
                             const IntPoly expected = generator_poly(i, j + 1);
                             const IntPoly actual = divided_difference(f, j);
                             if (expected == actual) return std::nullopt;
                             return CaseFailure{"dd_j at i=" + std::to_string(i) +
                                                    " j=" + std::to_string(j),
                                                format(expected), format(actual)};
                         }
                         const IntPoly expected = -generator_poly(i - 1, j);
                         const IntPoly actual = divided_difference(f, i);
                         if (expected == actual) return std::nullopt;
                         return CaseFailure{"dd_i at i=" + std::to_string(i) +
                                                " j=" + std::to_string(j),
                                            format(expected), format(actual)};
                     });
}

VerificationReport verify_generator_chain(int n, SweepOptions opts) {
    if (n < 1) throw std::invalid_argument("the sweep needs n >= 1");
    std::vector<std::pair<int, int>> pairs; // 1 <= j <= i <= n
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) pairs.emplace_back(i, j);
    return run_sweep("chain", n, pairs.size(), opts,
                     [&pairs, n](std::size_t index) -> std::optional<CaseFailure> {
                         const auto [i, j] = pairs[index];
                         const IntPoly expected = generator_poly(i, j);
                         const IntPoly actual = generator_by_ddo_chain(i, j, n);
                         if (expected == actual) return std::nullopt;
                         return CaseFailure{"i=" + std::to_string(i) + " j=" + std::to_string(j),
                                            format(expected), format(actual)};
                     });
}

VerificationReport verify_monk_rule(int n, SweepOptions opts) {
    if (n < 2) throw std::invalid_argument("the sweep needs n >= 2");
    const std::vector<Permutation> group = symmetric_group(n);
    const std::size_t per_w = static_cast<std::size_t>(n - 1);
    return run_sweep("monk", n, group.size() * per_w, opts,
                     [&group, per_w](std::size_t index) -> std::optional<CaseFailure> {
                         const Permutation& w = group[index / per_w];
                         const int r = static_cast<int>(index % per_w) + 1;
                         const MonkExpansion expansion = monk_expand(r, w);
                         const IntPoly product =
                             schubert(Permutation::simple(r, r + 1)) * schubert(w);
                         IntPoly sum;
                         for (const Permutation& t : expansion.terms) sum += schubert(t);
                         if (product == sum) return std::nullopt;
                         return CaseFailure{"w=" + w.to_string() + " r=" + std::to_string(r),
                                            format(product), format(sum)};
                     });
}

VerificationReport verify_minimal_cells(int n, SweepOptions opts) {
    if (n < 2) throw std::invalid_argument("the sweep needs n >= 2");
    std::vector<std::pair<HessenbergFunction, Corner>> cases;
    for (const HessenbergFunction& h : enumerate_hessenberg(n))
        for (const Corner& c : h.corners())
            if (c.row > c.col) cases.emplace_back(h, c);
    return run_sweep("lemma42", n, cases.size(), opts,
                     [&cases, n](std::size_t index) -> std::optional<CaseFailure> {
                         const auto& [h, c] = cases[index];
                         std::vector<Permutation> expected;
                         for (int k = 1; k <= c.row - c.col; ++k)
                             expected.push_back(
                                 minimal_cell_permutation(c.row, c.col, k).embed(n));
                         std::sort(expected.begin(), expected.end());
                         const std::vector<Permutation> actual = minimal_missing_cells(h, c);
                         if (expected == actual) return std::nullopt;
                         return CaseFailure{"h=" + h.to_string() + " corner=(" +
                                                std::to_string(c.row) + "," +
                                                std::to_string(c.col) + ")",
                                            permutation_set_string(expected),
                                            permutation_set_string(actual)};
                     });
}

VerificationReport verify_ideal_membership(int n, SweepOptions opts) {
    if (n < 1) throw std::invalid_argument("the sweep needs n >= 1");
    // One Hilbert-degree case per h, plus one membership case per removable
    // corner.
    struct Case {
        HessenbergFunction h;
        std::optional<Corner> corner;
    };
    std::vector<Case> cases;
    for (const HessenbergFunction& h : enumerate_hessenberg(n)) {
        cases.push_back({h, std::nullopt});
        for (const Corner& c : h.corners())
            if (c.row > c.col) cases.push_back({h, c});
    }
    return run_sweep(
        "nonvanish", n, cases.size(), opts,
        [&cases](std::size_t index) -> std::optional<CaseFailure> {
            const Case& item = cases[index];
            const HessenbergFunction& h = item.h;
            std::vector<RatPoly> gens;
            for (const IntPoly& g : ideal_generators(h)) gens.push_back(to_rational(g));
            const GroebnerBasis basis = groebner(gens, h.size());
            if (!item.corner) {
                const std::vector<long long> series = hilbert_series(basis);
                const int top = static_cast<int>(series.size()) - 1;
                if (top == h.dimension()) return std::nullopt;
                return CaseFailure{"hilbert degree for h=" + h.to_string(),
                                   std::to_string(h.dimension()), std::to_string(top)};
            }
            const Corner c = *item.corner;
            const std::string case_id = "h=" + h.to_string() + " corner=(" +
                                        std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ")";
            const RatPoly dropped = to_rational(generator_poly(c.row - 1, c.col));
            if (contains(basis, dropped))
                return CaseFailure{case_id + " membership in the unreduced ideal",
                                   "outside the ideal", "inside the ideal"};
            const HessenbergFunction reduced = h.remove_corner(c);
            std::vector<RatPoly> reduced_gens;
            for (const IntPoly& g : ideal_generators(reduced))
                reduced_gens.push_back(to_rational(g));
            const GroebnerBasis reduced_basis = groebner(reduced_gens, reduced.size());
            if (!contains(reduced_basis, dropped))
                return CaseFailure{case_id + " membership in the reduced ideal",
                                   "inside the ideal", "outside the ideal"};
            const RatPoly alt = to_rational(alternating_schubert_sum(c.row, c.col));
            const RatPoly rest = normal_form(alt, reduced_basis);
            if (!rest.is_zero())
                return CaseFailure{case_id + " normal form of the alternating sum",
                                   "0", format(rest)};
            return std::nullopt;
        });
}

VerificationReport verify_schubert_descent_rule(int n, SweepOptions opts) {
    if (n < 2) throw std::invalid_argument("the sweep needs n >= 2");
    const std::vector<Permutation> group = symmetric_group(n);
    const std::size_t per_w = static_cast<std::size_t>(n - 1);
    return run_sweep("descent-rule", n, group.size() * per_w, opts,
                     [&group, per_w, n](std::size_t index) -> std::optional<CaseFailure> {
                         const Permutation& w = group[index / per_w];
                         const int i = static_cast<int>(index % per_w) + 1;
                         const IntPoly actual = divided_difference(schubert(w), i);
                         const IntPoly expected =
                             w.has_descent(i) ? schubert(w * Permutation::simple(i, n))
                                              : IntPoly();
                         if (expected == actual) return std::nullopt;
                         return CaseFailure{"w=" + w.to_string() + " i=" + std::to_string(i),
                                            format(expected), format(actual)};
                     });
}

} // namespace hesscalc
