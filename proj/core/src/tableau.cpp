#include "tridyck/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tridyck/statistics.hpp"

namespace tridyck {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (parts[k] == 0) throw Error(Errc::invalid_tableau, "empty row");
    try {
        return Partition(parts);
    } catch (const Error&) {
        throw Error(Errc::invalid_tableau, "row lengths are not a partition");
    }
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : shape_(shape_of(rows)), rows_(std::move(rows)) {
    const int n = shape_.size();
    where_.assign(static_cast<std::size_t>(n), Cell{-1, -1});
    for (int r = 0; r < shape_.length(); ++r) {
        for (int c = 0; c < shape_[r]; ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n) throw Error(Errc::invalid_tableau, "label out of range");
            if (where_[v - 1].row >= 0) throw Error(Errc::invalid_tableau, "repeated label");
            where_[v - 1] = {r, c};
            if (c > 0 && rows_[r][c - 1] >= v) throw Error(Errc::invalid_tableau, "row not increasing");
            if (r > 0 && rows_[r - 1][c] >= v) throw Error(Errc::invalid_tableau, "column not increasing");
        }
    }
}

StandardTableau StandardTableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '[') throw Error(Errc::parse_error, "expected '['");
        auto close = text.find(']', pos);
        if (close == std::string_view::npos) throw Error(Errc::parse_error, "missing ']'");
        std::vector<int> row;
        auto body = text.substr(pos + 1, close - pos - 1);
        while (!body.empty()) {
            auto comma = body.find(',');
            auto tok = body.substr(0, comma);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw Error(Errc::parse_error, "bad label");
            row.push_back(v);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        rows.push_back(std::move(row));
        pos = close + 1;
    }
    return StandardTableau(std::move(rows));
}

int StandardTableau::label(Cell c) const {
    if (!shape_.has_cell(c)) throw Error(Errc::cell_outside_shape, "label");
    return rows_[c.row][c.col];
}

Cell StandardTableau::cell_of(int label) const {
    if (label < 1 || label > size()) throw Error(Errc::index_out_of_range, "label");
    return where_[label - 1];
}

Partition StandardTableau::prefix_shape(int k) const {
    std::vector<int> parts;
    for (const auto& row : rows_) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && row[len] <= k) ++len;
        parts.push_back(len);
    }
    return Partition(parts);
}

std::string StandardTableau::str() const {
    std::string s;
    for (const auto& row : rows_) {
        s += '[';
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(row[k]);
        }
        s += ']';
    }
    return s;
}

namespace {

std::vector<std::vector<int>> blank_rows(const Partition& p) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < p.length(); ++r) rows.emplace_back(static_cast<std::size_t>(p[r]), 0);
    return rows;
}

}  // namespace

StandardTableau triangular_tableau(const Partition& p) {
    if (!is_triangular(p)) throw Error(Errc::not_triangular, p.str());
    auto rows = blank_rows(p);
    std::vector<int> cur(static_cast<std::size_t>(p.length()), 0);
    for (int k = 1; k <= p.size(); ++k) {
        int chosen = -1;
        for (int r = 0; r < p.length(); ++r) {
            if (cur[r] >= p[r]) continue;
            if (r > 0 && cur[r] >= cur[r - 1]) continue;
            auto grown = cur;
            ++grown[r];
            if (!is_mean_similar(p, Partition(grown))) continue;
            if (chosen >= 0) throw Error(Errc::internal_error, "two mean-similar extensions of " + Partition(cur).str());
            chosen = r;
        }
        if (chosen < 0) throw Error(Errc::internal_error, "no mean-similar extension of " + Partition(cur).str());
        rows[chosen][cur[chosen]] = k;
        ++cur[chosen];
    }
    return StandardTableau(std::move(rows));
}

StandardTableau triangular_tableau_sweep(const Partition& p) {
    if (!is_triangular(p)) throw Error(Errc::not_triangular, p.str());
    if (p.empty()) return StandardTableau{};
    const Rational m = mean_slope(p);
    struct Keyed {
        Rational key;
        int tie;
        Cell cell;
    };
    std::vector<Keyed> cells;
    for (const Cell& c : p.cells())
        cells.push_back({m * (c.col + 1) + (1 - m) * (c.row + 1), c.col - c.row, c});
    std::sort(cells.begin(), cells.end(), [](const Keyed& a, const Keyed& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.tie > b.tie;
    });
    auto rows = blank_rows(p);
    int k = 1;
    for (const auto& kc : cells) rows[kc.cell.row][kc.cell.col] = k++;
    return StandardTableau(std::move(rows));
}

StandardTableau top_down_tableau(const Partition& p) {
    if (p.empty()) throw Error(Errc::empty_partition, "top_down_tableau");
    auto rows = blank_rows(p);
    std::vector<int> remaining(p.parts().begin(), p.parts().end());
    int counter = p.size();
    while (counter > 0) {
        for (int r = p.length() - 1; r >= 0; --r) {
            if (remaining[r] == 0) continue;
            rows[r][--remaining[r]] = counter--;
        }
    }
    return StandardTableau(std::move(rows));
}

int max_row_regular_index(int m, int n) { return m - 2 * (n - 1); }

StandardTableau row_regular_tableau(int m, int n, int i) {
    if (n < 1 || m < n || !is_triangular(Partition{m, n}))
        throw Error(Errc::index_out_of_range, "shape (" + std::to_string(m) + "," + std::to_string(n) + ")");
    if (i < 1 || i > max_row_regular_index(m, n))
        throw Error(Errc::index_out_of_range, "row-regular index " + std::to_string(i));
    std::vector<int> upper;
    std::vector<bool> used(static_cast<std::size_t>(m + n + 1), false);
    for (int k = 0; k < n; ++k) {
        int v = n + i + 2 * k;
        upper.push_back(v);
        used[v] = true;
    }
    std::vector<int> lower;
    for (int v = 1; v <= m + n; ++v)
        if (!used[v]) lower.push_back(v);
    return StandardTableau({lower, upper});
}

namespace {

void syt_rec(const Partition& p, std::vector<int>& fill, int next, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
    if (next > p.size()) {
        out.emplace_back(rows);
        return;
    }
    for (int r = 0; r < p.length(); ++r) {
        if (fill[r] >= p[r]) continue;
        if (r > 0 && fill[r] >= fill[r - 1]) continue;
        rows[r][fill[r]] = next;
        ++fill[r];
        syt_rec(p, fill, next + 1, rows, out);
        --fill[r];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& p) {
    std::vector<StandardTableau> out;
    auto rows = blank_rows(p);
    std::vector<int> fill(static_cast<std::size_t>(p.length()), 0);
    syt_rec(p, fill, 1, rows, out);
    return out;
}

long long count_standard_tableaux(const Partition& p) {
    // n! / prod hooks, accumulated as an exact rational to stay in range.
    Rational v = 1;
    int k = 1;
    for (const Cell& c : p.cells()) {
        v *= k++;
        v /= arm(p, c) + leg(p, c) + 1;
    }
    return static_cast<long long>(boost::multiprecision::numerator(v));
}

}  // namespace tridyck
