#include "sqzero/involution.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sqzero/error.hpp"

namespace sqz {

namespace {

std::vector<int> partner_table(int n_points, std::span<const Pair> pairs, bool require_full) {
    if (n_points < 1)
        throw InputError("involution needs at least one point");
    std::vector<int> partner(static_cast<std::size_t>(n_points) + 1, 0);
    for (const Pair& pr : pairs) {
        if (pr.min >= pr.max)
            throw InputError("pair " + std::to_string(pr.min) + "-" + std::to_string(pr.max) +
                             " must satisfy min < max");
        if (pr.min < 1 || pr.max > n_points)
            throw InputError("pair " + std::to_string(pr.min) + "-" + std::to_string(pr.max) +
                             " out of range 1.." + std::to_string(n_points));
        for (int x : {pr.min, pr.max}) {
            if (partner[static_cast<std::size_t>(x)] != 0)
                throw InputError("index " + std::to_string(x) + " appears in two pairs");
        }
        partner[static_cast<std::size_t>(pr.min)] = pr.max;
        partner[static_cast<std::size_t>(pr.max)] = pr.min;
    }
    for (int i = 1; i <= n_points; ++i) {
        auto& p = partner[static_cast<std::size_t>(i)];
        if (p == 0) {
            if (require_full)
                throw InputError("index " + std::to_string(i) + " unmatched");
            p = i;
        }
    }
    return partner;
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InputError("bad index '" + std::string(s) + "' in involution");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

void matchings(std::vector<int>& free_points, std::vector<Pair>& acc, int n_points,
               std::vector<Involution>& out) {
    if (free_points.empty()) {
        out.push_back(Involution::from_pairs(n_points, acc));
        return;
    }
    const int a = free_points.front();
    for (std::size_t k = 1; k < free_points.size(); ++k) {
        const int b = free_points[k];
        std::vector<int> rest;
        rest.reserve(free_points.size() - 2);
        for (std::size_t m = 1; m < free_points.size(); ++m)
            if (m != k)
                rest.push_back(free_points[m]);
        acc.push_back({a, b});
        matchings(rest, acc, n_points, out);
        acc.pop_back();
    }
}

} // namespace

Involution::Involution(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
    for (int i = 1; i <= n_; ++i) {
        const int j = partner_[static_cast<std::size_t>(i)];
        if (i < j)
            pairs_.push_back({i, j});
    }
}

Involution Involution::from_pairs(int n_points, std::span<const Pair> pairs) {
    return Involution(n_points, partner_table(n_points, pairs, true));
}

Involution Involution::partial_from_pairs(int n_points, std::span<const Pair> pairs) {
    return Involution(n_points, partner_table(n_points, pairs, false));
}

Involution Involution::parse(std::string_view text, int n_points) {
    text = trim(text);
    std::vector<Pair> pairs;
    if (!text.empty() && text.front() == '(') {
        // compact cycle form, single-digit indices
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != '(' || pos + 3 >= text.size() || text[pos + 3] != ')')
                throw InputError("bad cycle notation '" + std::string(text) + "'");
            if (!std::isdigit(static_cast<unsigned char>(text[pos + 1])) ||
                !std::isdigit(static_cast<unsigned char>(text[pos + 2])))
                throw InputError("bad cycle notation '" + std::string(text) + "'");
            int a = text[pos + 1] - '0';
            int b = text[pos + 2] - '0';
            pairs.push_back({std::min(a, b), std::max(a, b)});
            pos += 4;
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string_view::npos)
                comma = text.size();
            std::string_view item = trim(text.substr(start, comma - start));
            const std::size_t dash = item.find('-');
            if (dash == std::string_view::npos)
                throw InputError("expected pair 'a-b', got '" + std::string(item) + "'");
            const int a = parse_int(trim(item.substr(0, dash)));
            const int b = parse_int(trim(item.substr(dash + 1)));
            if (a >= b)
                throw InputError("pair '" + std::string(item) + "' must satisfy a < b");
            pairs.push_back({a, b});
            start = comma + 1;
        }
    }
    if (n_points == 0) {
        for (const Pair& pr : pairs)
            n_points = std::max(n_points, pr.max);
    }
    return from_pairs(n_points, pairs);
}

Involution Involution::conjugate(int a, int b) const {
    auto swap_ab = [a, b](int x) { return x == a ? b : (x == b ? a : x); };
    std::vector<int> partner(partner_.size(), 0);
    for (int x = 1; x <= n_; ++x)
        partner[static_cast<std::size_t>(swap_ab(x))] = swap_ab(partner_[static_cast<std::size_t>(x)]);
    return Involution(n_, std::move(partner));
}

Involution Involution::split_pair(int a, int b) const {
    if ((*this)(a) != b || a == b)
        throw PreconditionError("split_pair requires sigma(a) = b with a != b");
    std::vector<int> partner = partner_;
    partner[static_cast<std::size_t>(a)] = a;
    partner[static_cast<std::size_t>(b)] = b;
    return Involution(n_, std::move(partner));
}

std::string Involution::to_string() const {
    std::string out;
    for (const Pair& pr : pairs_) {
        if (!out.empty())
            out += ',';
        out += std::to_string(pr.min) + "-" + std::to_string(pr.max);
    }
    return out;
}

std::string Involution::to_cycles() const {
    std::string out;
    for (const Pair& pr : pairs_)
        out += "(" + std::to_string(pr.min) + std::to_string(pr.max) + ")";
    return out;
}

PartialPermutationMatrix::PartialPermutationMatrix(int n, std::vector<Entry> ones)
    : n_(n), ones_(std::move(ones)) {
    if (n_ < 1)
        throw InputError("matrix dimension must be positive");
    std::sort(ones_.begin(), ones_.end());
    std::vector<char> row_used(static_cast<std::size_t>(n_) + 1, 0), col_used(row_used);
    for (auto [i, j] : ones_) {
        if (i < 1 || j > n_ || i >= j)
            throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not strictly upper triangular");
        if (row_used[static_cast<std::size_t>(i)]++ || col_used[static_cast<std::size_t>(j)]++)
            throw InputError("two ones share a row or column");
    }
    // square zero: no (i,j),(j,k) both present
    for (auto [i, j] : ones_) {
        if (row_used[static_cast<std::size_t>(j)])
            throw InputError("matrix does not square to zero: (" + std::to_string(i) + "," +
                             std::to_string(j) + ") meets row " + std::to_string(j));
    }
}

bool PartialPermutationMatrix::contains(int row, int col) const {
    return std::binary_search(ones_.begin(), ones_.end(), Entry{row, col});
}

Eigen::MatrixXi PartialPermutationMatrix::dense() const {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n_, n_);
    for (auto [i, j] : ones_)
        m(i - 1, j - 1) = 1;
    return m;
}

BlockType::BlockType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw InputError("block type needs at least one part");
    for (int t : parts_)
        if (t < 1)
            throw InputError("block type parts must be positive");
}

int BlockType::total() const {
    int s = 0;
    for (int t : parts_)
        s += t;
    return s;
}

BlockType BlockType::reversed() const {
    return BlockType(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

bool BlockType::satisfies_part_bounds() const {
    if (parts_.front() < 1 || parts_.back() < 1)
        return false;
    for (std::size_t i = 1; i + 1 < parts_.size(); ++i)
        if (parts_[i] < 2)
            return false;
    return true;
}

std::string BlockType::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

long long double_factorial_odd(int n_points) {
    long long r = 1;
    for (int k = n_points - 1; k > 1; k -= 2)
        r *= k;
    return r;
}

std::vector<Involution> enumerate_rp(int n_points) {
    if (n_points % 2 != 0 || n_points < 2 || n_points > 12)
        throw InputError("N must be even with 2 <= N <= 12, got " + std::to_string(n_points));
    std::vector<int> points(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        points[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Involution> out;
    out.reserve(static_cast<std::size_t>(double_factorial_odd(n_points)));
    std::vector<Pair> acc;
    matchings(points, acc, n_points, out);
    std::sort(out.begin(), out.end());
    return out;
}

PartialPermutationMatrix to_matrix(const Involution& sigma) {
    std::vector<PartialPermutationMatrix::Entry> ones;
    for (const Pair& pr : sigma.pairs())
        ones.emplace_back(pr.min, pr.max);
    return PartialPermutationMatrix(sigma.n_points(), std::move(ones));
}

Involution from_matrix(const PartialPermutationMatrix& p) {
    std::vector<Pair> pairs;
    for (auto [i, j] : p.ones())
        pairs.push_back({i, j});
    return Involution::from_pairs(p.n(), pairs);
}

BlockType block_type(const Involution& sigma) {
    const int n = sigma.n_points();
    std::vector<int> parts;
    int block_start = 1;
    for (int j = 2; j <= n; ++j) {
        const int partner = sigma(j);
        if (partner < j && partner >= block_start) {
            parts.push_back(j - block_start);
            block_start = j;
        }
    }
    parts.push_back(n + 1 - block_start);
    return BlockType(std::move(parts));
}

BoundaryCounts boundary_counts(const Involution& sigma) {
    const int n = sigma.n_points();
    BoundaryCounts bc;
    // column j of P is zero iff j is not the max of a pair
    while (bc.leading_zero_cols < n && sigma(bc.leading_zero_cols + 1) >= bc.leading_zero_cols + 1)
        ++bc.leading_zero_cols;
    // row i of P is zero iff i is not the min of a pair
    while (bc.trailing_zero_rows < n) {
        const int i = n - bc.trailing_zero_rows;
        if (sigma(i) > i)
            break;
        ++bc.trailing_zero_rows;
    }
    return bc;
}

Involution anti_diagonal_dual(const Involution& sigma) {
    const int n = sigma.n_points();
    std::vector<Pair> pairs;
    for (const Pair& pr : sigma.pairs())
        pairs.push_back({n + 1 - pr.max, n + 1 - pr.min});
    return sigma.is_fixed_point_free() ? Involution::from_pairs(n, pairs)
                                       : Involution::partial_from_pairs(n, pairs);
}

} // namespace sqz
