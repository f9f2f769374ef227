#include "sqzero/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <thread>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

std::string position_string(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string point_string(const std::vector<Scalar>& pt) {
    std::string out = "(";
    for (std::size_t i = 0; i < pt.size(); ++i)
        out += (i ? "," : "") + to_string(pt[i]);
    return out + ")";
}

ConditionResult fail(std::string witness) {
    ConditionResult r;
    r.verdict = Verdict::Fail;
    r.witness = std::move(witness);
    return r;
}

ConditionResult check_strictly_upper(const PolyMatrix& d) {
    for (const auto& [pos, p] : d.entries())
        if (pos.first >= pos.second) {
            ConditionResult r = fail("p" + position_string(pos.first, pos.second) + " = " + p.to_string() +
                                     " on or below the diagonal");
            r.position = pos;
            return r;
        }
    return {};
}

ConditionResult check_square_zero(const PolyMatrix& d) {
    const SquareZeroCheck sq = is_square_zero(d);
    if (sq.square_zero)
        return {};
    ConditionResult r = fail("(D^2)" + position_string(sq.position.first, sq.position.second) + " = " +
                             sq.witness->to_string());
    r.position = sq.position;
    return r;
}

ConditionResult check_constant_terms(const PolyMatrix& d) {
    for (const auto& [pos, p] : d.entries()) {
        const Scalar c = p.constant_term();
        if (c != 0) {
            ConditionResult r = fail("p" + position_string(pos.first, pos.second) + " has constant term " +
                                     to_string(c));
            r.position = pos;
            return r;
        }
    }
    return {};
}

std::int64_t checked_power(std::int64_t base, int e, std::int64_t limit) {
    std::int64_t v = 1;
    for (int k = 0; k < e; ++k) {
        if (v > limit / base)
            return limit + 1;
        v *= base;
    }
    return v;
}

ConditionResult rank_failure(std::vector<Scalar> pt, int rank, int target) {
    ConditionResult r = fail("rank " + std::to_string(rank) + " != " + std::to_string(target) + " at " +
                             point_string(pt));
    r.point = std::move(pt);
    r.observed_rank = rank;
    return r;
}

ConditionResult check_rank_exhaustive(const ConjectureInstance& inst) {
    const PolyMatrix& d = inst.matrix();
    if (!d.field().is_prime())
        throw Unsupported("exhaustive rank scan over Q: no finite enumeration");
    const ModpPolyMatrix compiled(d);
    const PrimeField& f = compiled.field();
    const int r = d.n_vars();
    const std::int64_t total = checked_power(f.p(), r, kMaxExhaustivePoints);
    if (total > kMaxExhaustivePoints)
        throw InputError("exhaustive scan needs p^r <= 10^7; use sampling");
    const int target = inst.rank_target();

    auto decode = [&](std::int64_t idx, std::vector<std::int64_t>& pt) {
        for (int k = r - 1; k >= 0; --k) {
            pt[static_cast<std::size_t>(k)] = idx % f.p();
            idx /= f.p();
        }
    };

    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
    std::atomic<std::int64_t> first_bad{kNone};
    const std::int64_t work = total - 1;  // indices 1 .. total-1
    const unsigned threads =
        static_cast<unsigned>(std::clamp<std::int64_t>(work / 4096, 1, std::max(1U, std::min(8U, std::thread::hardware_concurrency()))));
    auto scan = [&](std::int64_t lo, std::int64_t hi) {
        std::vector<std::int64_t> pt(static_cast<std::size_t>(r));
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            if (idx > first_bad.load(std::memory_order_relaxed))
                return;
            decode(idx, pt);
            if (rank(compiled.evaluate(pt), f) != target) {
                std::int64_t cur = first_bad.load();
                while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::int64_t chunk = (work + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::int64_t lo = 1 + static_cast<std::int64_t>(t) * chunk;
        const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
        if (lo < hi)
            pool.emplace_back(scan, lo, hi);
    }
    for (auto& th : pool)
        th.join();

    if (first_bad.load() != kNone) {
        std::vector<std::int64_t> pt(static_cast<std::size_t>(r));
        decode(first_bad.load(), pt);
        std::vector<Scalar> coords;
        for (std::int64_t v : pt)
            coords.emplace_back(static_cast<long>(v));
        const int observed = static_cast<int>(rank(compiled.evaluate(pt), f));
        return rank_failure(std::move(coords), observed, target);
    }
    ConditionResult res;
    res.verdict = Verdict::ExhaustivePass;
    res.points_checked = static_cast<std::size_t>(work);
    return res;
}

ConditionResult check_rank_sampled(const ConjectureInstance& inst, const CheckMode& mode) {
    const PolyMatrix& d = inst.matrix();
    const int r = d.n_vars();
    const int target = inst.rank_target();
    std::mt19937_64 rng(mode.seed);
    if (r == 0) {
        ConditionResult res;
        res.verdict = Verdict::SampledPass;
        return res;
    }
    if (d.field().is_prime()) {
        const ModpPolyMatrix compiled(d);
        const PrimeField& f = compiled.field();
        std::uniform_int_distribution<std::int64_t> coord(0, f.p() - 1);
        std::vector<std::int64_t> pt(static_cast<std::size_t>(r));
        for (std::size_t s = 0; s < mode.samples; ++s) {
            do {
                for (auto& v : pt)
                    v = coord(rng);
            } while (std::all_of(pt.begin(), pt.end(), [](std::int64_t v) { return v == 0; }));
            const int got = static_cast<int>(rank(compiled.evaluate(pt), f));
            if (got != target) {
                std::vector<Scalar> coords;
                for (std::int64_t v : pt)
                    coords.emplace_back(static_cast<long>(v));
                return rank_failure(std::move(coords), got, target);
            }
        }
    } else {
        std::uniform_int_distribution<long> coord(-100, 100);
        std::vector<Scalar> pt(static_cast<std::size_t>(r));
        for (std::size_t s = 0; s < mode.samples; ++s) {
            do {
                for (auto& v : pt)
                    v = coord(rng);
            } while (std::all_of(pt.begin(), pt.end(), [](const Scalar& v) { return v == 0; }));
            const int got = rank_at_point(d, pt);
            if (got != target)
                return rank_failure(pt, got, target);
        }
    }
    ConditionResult res;
    res.verdict = Verdict::SampledPass;
    res.points_checked = mode.samples;
    return res;
}

ConditionResult check_degrees(const PolyMatrix& d, const std::vector<int>& degrees) {
    for (const auto& [pos, p] : d.entries()) {
        const Homogeneity h = p.homogeneity();
        const int want = degrees[static_cast<std::size_t>(pos.first - 1)] -
                         degrees[static_cast<std::size_t>(pos.second - 1)] + 1;
        if (!h.admits(want)) {
            ConditionResult r = fail("p" + position_string(pos.first, pos.second) + " has degree " + h.to_string() +
                                     ", expected " + std::to_string(want));
            r.position = pos;
            return r;
        }
    }
    return {};
}

ConditionResult check_boundary(const PolyMatrix& d, const BoundaryCounts& bc) {
    if (bc.leading_zero_cols < 1 || bc.trailing_zero_rows < 1)
        return fail("C = " + std::to_string(bc.leading_zero_cols) + ", R = " + std::to_string(bc.trailing_zero_rows) +
                    " must both be positive");
    const int n = d.n();
    for (const auto& [pos, p] : d.entries()) {
        if (pos.second <= bc.leading_zero_cols || pos.first >= n - bc.trailing_zero_rows + 1) {
            ConditionResult r = fail("p" + position_string(pos.first, pos.second) + " = " + p.to_string() +
                                     " must vanish for C = " + std::to_string(bc.leading_zero_cols) +
                                     ", R = " + std::to_string(bc.trailing_zero_rows));
            r.position = pos;
            return r;
        }
    }
    return {};
}

} // namespace

ConjectureInstance::ConjectureInstance(PolyMatrix d, std::optional<std::vector<int>> degrees)
    : d_(std::move(d)), degrees_(std::move(degrees)) {
    if (!d_.is_square())
        throw InputError("instance matrix must be square");
    if (d_.n() % 2 != 0)
        throw InputError("instance dimension N must be even, got " + std::to_string(d_.n()));
    if (degrees_) {
        if (degrees_->size() != static_cast<std::size_t>(d_.n()))
            throw InputError("degree tuple has " + std::to_string(degrees_->size()) + " entries, expected " +
                             std::to_string(d_.n()));
        if (!std::is_sorted(degrees_->rbegin(), degrees_->rend()))
            throw InputError("degree tuple must be nonincreasing");
    }
}

void ConjectureInstance::set_boundary(int c, int r) {
    if (c < 1 || r < 1)
        throw InputError("C and R must be positive");
    user_boundary_ = BoundaryCounts{c, r};
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ExhaustivePass: return "EXHAUSTIVE_PASS";
    case Verdict::SampledPass: return "SAMPLED_PASS";
    }
    return "?";
}

std::string to_string(Classification c) {
    switch (c) {
    case Classification::Consistent: return "consistent";
    case Classification::CounterexampleCandidate: return "counterexample-candidate";
    case Classification::InvalidInstance: return "invalid-instance";
    }
    return "?";
}

bool ConditionReport::all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.passed(); });
}

BoundaryCounts matrix_boundary_counts(const PolyMatrix& d) {
    const int n = d.n();
    int min_col = n + 1;
    int max_row = 0;
    for (const auto& [pos, p] : d.entries()) {
        min_col = std::min(min_col, pos.second);
        max_row = std::max(max_row, pos.first);
    }
    return {min_col - 1, n - max_row};
}

namespace {
InequalityResult inequality_unchecked(int n, int r, int row_count, int col_count);
}

ConditionReport check_conditions(const ConjectureInstance& inst, const CheckMode& mode) {
    const PolyMatrix& d = inst.matrix();
    ConditionReport rep;
    rep.conditions[0] = check_strictly_upper(d);
    rep.conditions[1] = check_square_zero(d);
    rep.conditions[2] = check_constant_terms(d);
    rep.conditions[3] = mode.kind == CheckMode::Kind::Exhaustive ? check_rank_exhaustive(inst)
                                                                 : check_rank_sampled(inst, mode);

    if (inst.degrees()) {
        rep.degrees = inst.degrees();
        rep.conditions[4] = check_degrees(d, *inst.degrees());
    } else {
        try {
            rep.degrees = infer_degree_tuple(d);
            rep.conditions[4] = rep.degrees ? check_degrees(d, *rep.degrees)
                                            : fail("no nonincreasing degree tuple fits the entry degrees");
        } catch (const InputError& e) {
            rep.conditions[4] = fail(e.what());
        }
    }

    rep.boundary = matrix_boundary_counts(d);
    rep.conditions[5] = check_boundary(d, inst.user_boundary().value_or(rep.boundary));

    const int r = d.n_vars();
    rep.inequality = inequality_unchecked(d.n(), std::max(r, 1), rep.boundary.trailing_zero_rows,
                                         rep.boundary.leading_zero_cols);
    if (inst.user_boundary())
        rep.user_inequality = evaluate_inequality(d.n(), std::max(r, 1), inst.user_boundary()->trailing_zero_rows,
                                                  inst.user_boundary()->leading_zero_cols);

    if (!rep.all_pass() || d.is_zero())
        rep.classification = Classification::InvalidInstance;
    else if (!rep.inequality.holds)
        rep.classification = Classification::CounterexampleCandidate;
    else
        rep.classification = Classification::Consistent;
    return rep;
}

std::optional<std::vector<int>> infer_degree_tuple(const PolyMatrix& d) {
    if (!d.is_square())
        throw InputError("degree inference needs a square matrix");
    const int n = d.n();
    struct Edge {
        int from;
        int to;
        long weight;  // d_to - d_from <= weight
    };
    std::vector<Edge> edges;
    for (const auto& [pos, p] : d.entries()) {
        const Homogeneity h = p.homogeneity();
        if (h.kind != Homogeneity::Kind::Degree)
            throw InputError("entry " + position_string(pos.first, pos.second) + " is not homogeneous");
        const long diff = h.degree - 1;  // d_i - d_j
        edges.push_back({pos.second - 1, pos.first - 1, diff});
        edges.push_back({pos.first - 1, pos.second - 1, -diff});
    }
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, 0});  // d_{i+1} <= d_i

    // Bellman-Ford from a virtual source joined to every index with weight 0.
    std::vector<long> dist(static_cast<std::size_t>(n), 0);
    for (int round = 0; round <= n; ++round) {
        bool changed = false;
        for (const Edge& e : edges) {
            const long cand = dist[static_cast<std::size_t>(e.from)] + e.weight;
            if (cand < dist[static_cast<std::size_t>(e.to)]) {
                dist[static_cast<std::size_t>(e.to)] = cand;
                changed = true;
            }
        }
        if (!changed) {
            std::vector<int> out(static_cast<std::size_t>(n));
            const long base = dist.back();
            for (int i = 0; i < n; ++i)
                out[static_cast<std::size_t>(i)] = static_cast<int>(dist[static_cast<std::size_t>(i)] - base);
            return out;
        }
    }
    return std::nullopt;  // negative cycle
}

FlagReport matrix_block_type(const PolyMatrix& d) {
    if (!d.is_square())
        throw InputError("block type needs a square matrix");
    const int n = d.n();
    std::vector<std::vector<int>> rows_in_col(static_cast<std::size_t>(n) + 1);
    for (const auto& [pos, p] : d.entries()) {
        if (pos.first >= pos.second)
            throw InputError("matrix is not strictly upper triangular at " + position_string(pos.first, pos.second));
        rows_in_col[static_cast<std::size_t>(pos.second)].push_back(pos.first);
    }

    std::vector<int> starts{1};
    for (int j = 2; j <= n; ++j) {
        const auto& rows = rows_in_col[static_cast<std::size_t>(j)];
        if (std::any_of(rows.begin(), rows.end(), [&](int i) { return i >= starts.back(); }))
            starts.push_back(j);
    }
    std::vector<int> parts;
    for (std::size_t b = 0; b < starts.size(); ++b)
        parts.push_back((b + 1 < starts.size() ? starts[b + 1] : n + 1) - starts[b]);

    FlagReport rep;
    rep.type = BlockType(parts);
    rep.l = rep.type.l();
    rep.first_part_ok = parts.front() >= 1;
    rep.last_part_ok = parts.back() >= 1;
    rep.interior_parts_ok = true;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i)
        rep.interior_parts_ok = rep.interior_parts_ok && parts[i] >= 2;
    rep.size_ok = n >= 2 * rep.l;
    rep.adjacent_blocks_ok = true;
    for (std::size_t b = 1; b < starts.size(); ++b) {
        const int prev_lo = starts[b - 1];
        const int prev_hi = starts[b] - 1;
        const int hi = b + 1 < starts.size() ? starts[b + 1] - 1 : n;
        bool found = false;
        for (int j = starts[b]; j <= hi && !found; ++j)
            for (int i : rows_in_col[static_cast<std::size_t>(j)])
                if (i >= prev_lo && i <= prev_hi)
                    found = true;
        rep.adjacent_blocks_ok = rep.adjacent_blocks_ok && found;
    }
    if (d.n_vars() > 0)
        rep.l_at_least_r = rep.l >= d.n_vars();
    return rep;
}

std::vector<BlockType> compositions_with_bounds(int n, int l) {
    std::vector<BlockType> out;
    if (n < 1 || l < 0)
        return out;
    std::vector<int> parts(static_cast<std::size_t>(l) + 1);
    auto lower = [l](int i) { return (i == 0 || i == l) ? 1 : 2; };
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == l) {
            if (remaining >= lower(i)) {
                parts[static_cast<std::size_t>(i)] = remaining;
                out.emplace_back(parts);
            }
            return;
        }
        int reserve = 0;
        for (int k = i + 1; k <= l; ++k)
            reserve += lower(k);
        for (int t = lower(i); t <= remaining - reserve; ++t) {
            parts[static_cast<std::size_t>(i)] = t;
            self(self, i + 1, remaining - t);
        }
    };
    rec(rec, 0, n);
    return out;
}

namespace {
// no range checks: an invalid instance may have C = 0 or R = 0
InequalityResult inequality_unchecked(int n, int r, int row_count, int col_count) {
    InequalityResult res;
    res.n = n;
    res.r = r;
    res.row_count = row_count;
    res.col_count = col_count;
    res.lhs = n;
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(r - 1));
    res.rhs = pow2 * (row_count + col_count);
    res.holds = res.lhs >= res.rhs;
    return res;
}
} // namespace

InequalityResult evaluate_inequality(int n, int r, int row_count, int col_count) {
    if (n < 1 || r < 1 || row_count < 1 || col_count < 1)
        throw InputError("inequality arguments must be positive integers");
    return inequality_unchecked(n, r, row_count, col_count);
}

bool conjecture_inequality(int n, int r, int row_count, int col_count) {
    return evaluate_inequality(n, r, row_count, col_count).holds;
}

Verification verify_instance(const ConjectureInstance& inst, const CheckMode& mode) {
    Verification v;
    v.report = check_conditions(inst, mode);
    if (v.report.conditions[0].passed())
        v.flags = matrix_block_type(inst.matrix());
    try {
        v.inferred_degrees = infer_degree_tuple(inst.matrix());
    } catch (const InputError&) {
        v.inferred_degrees.reset();
    }
    v.has_replay = v.report.classification == Classification::CounterexampleCandidate;
    return v;
}

PolyMatrix to_poly_matrix(const PartialPermutationMatrix& p, const FieldSpec& field, int n_vars) {
    PolyMatrix m(p.n(), field, n_vars);
    for (auto [i, j] : p.ones())
        m.set(i, j, Poly::constant(field, n_vars, 1));
    return m;
}

} // namespace sqz
