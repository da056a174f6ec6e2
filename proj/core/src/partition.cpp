#include "tridyck/partition.hpp"

#include <algorithm>
#include <charconv>

namespace tridyck {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_partition: return "invalid-partition";
        case Errc::cell_outside_shape: return "cell-outside-shape";
        case Errc::empty_partition: return "empty-partition";
        case Errc::not_triangular: return "not-triangular";
        case Errc::containment_violation: return "containment-violation";
        case Errc::invalid_tableau: return "invalid-tableau";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::parameter_out_of_range: return "parameter-out-of-range";
        case Errc::shape_mismatch: return "shape-mismatch";
        case Errc::not_two_part: return "not-two-part";
        case Errc::not_symmetric: return "not-symmetric";
        case Errc::reconstruction_mismatch: return "reconstruction-mismatch";
        case Errc::degree_overflow: return "degree-overflow";
        case Errc::arity_mismatch: return "arity-mismatch";
        case Errc::overflow: return "overflow";
        case Errc::unknown_suite: return "unknown-suite";
        case Errc::parse_error: return "parse-error";
        case Errc::internal_error: return "internal-error";
    }
    return "unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw Error(Errc::invalid_partition, "non-positive part");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw Error(Errc::invalid_partition, "parts must be weakly decreasing");
        size_ += parts_[k];
    }
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    while (true) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(Errc::parse_error, "bad partition '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) out.push_back({r, c});
    return out;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    return s;
}

bool contains(const Partition& outer, const Partition& inner) noexcept {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

int arm(const Partition& p, Cell c) {
    if (!p.has_cell(c)) throw Error(Errc::cell_outside_shape, "arm");
    return p[c.row] - c.col - 1;
}

int leg(const Partition& p, Cell c) {
    if (!p.has_cell(c)) throw Error(Errc::cell_outside_shape, "leg");
    int l = 0;
    for (int r = c.row + 1; r < p.length() && p[r] > c.col; ++r) ++l;
    return l;
}

SlopeInterval cell_slope_interval(const Partition& p, Cell c) {
    const int a = arm(p, c);
    const int l = leg(p, c);
    const int h = a + l + 1;
    return {Rational(l, h), Rational(l + 1, h)};
}

SlopeInterval slope_bounds(const Partition& p) {
    if (p.empty()) throw Error(Errc::empty_partition, "slope_bounds");
    SlopeInterval b{Rational(0), Rational(1)};
    for (const Cell& c : p.cells()) {
        auto iv = cell_slope_interval(p, c);
        if (iv.lower > b.lower) b.lower = iv.lower;
        if (iv.upper < b.upper) b.upper = iv.upper;
    }
    return b;
}

bool is_triangular(const Partition& p) {
    if (p.empty()) return true;
    auto b = slope_bounds(p);
    return b.lower < b.upper;
}

Rational mean_slope(const Partition& p) {
    if (p.empty()) throw Error(Errc::empty_partition, "mean_slope");
    auto b = slope_bounds(p);
    if (!(b.lower < b.upper)) throw Error(Errc::not_triangular, p.str());
    return (b.lower + b.upper) / 2;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

void subpartitions_rec(const Partition& p, int row, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == p.length() || cap == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= std::min(cap, p[row]); ++v) {
        cur.push_back(v);
        subpartitions_rec(p, row + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> enumerate_triangular_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(n))
        if (is_triangular(p)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> cur;
    subpartitions_rec(p, 0, p.empty() ? 0 : p[0], cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

TriangularDyckPath::TriangularDyckPath(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw Error(Errc::containment_violation, "(" + inner_.str() + ") not inside (" + outer_.str() + ")");
    if (!is_triangular(outer_)) throw Error(Errc::not_triangular, outer_.str());
}

int area(const TriangularDyckPath& path) noexcept { return path.area(); }

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace tridyck
