#include "berezin/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace berezin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw argument_error("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw argument_error("partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw argument_error("partition: expected '(...)', got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw argument_error("partition: bad part '" + item + "'");
            parts.push_back(std::stoi(item));
        }
    }
    return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int col = 1; col <= parts_[0]; ++col)
        for (int row = 1; row <= rows(); ++row)
            if (part(row) >= col) ++conj[static_cast<size_t>(col - 1)];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw argument_error("skew shape: inner partition not contained in outer");
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::str() const {
    if (inner.empty()) return outer.str();
    return outer.str() + "/" + inner.str();
}

std::vector<Tableau> enum_ssyt(const SkewShape& shape, int nvars) {
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    const int r = lam.rows();

    // row-major list of cells (row, col), 1-based
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= r; ++i)
        for (int j = mu.part(i) + 1; j <= lam.part(i); ++j) cells.emplace_back(i, j);

    std::vector<Tableau> out;
    std::vector<std::vector<int>> fill(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i)
        fill[static_cast<size_t>(i - 1)].assign(
            static_cast<size_t>(lam.part(i) - mu.part(i)), 0);

    auto cell_value = [&](int row, int col) -> int {
        // 0 when (row, col) is not a filled cell of the shape
        if (row < 1 || row > r) return 0;
        if (col <= mu.part(row) || col > lam.part(row)) return 0;
        return fill[static_cast<size_t>(row - 1)][static_cast<size_t>(col - mu.part(row) - 1)];
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back({shape, fill});
            return;
        }
        auto [row, col] = cells[k];
        int lo = 1, hi = nvars;
        if (int left = cell_value(row, col - 1); left > 0) lo = std::max(lo, left);
        if (int up = cell_value(row - 1, col); up > 0) lo = std::max(lo, up + 1);
        for (int v = lo; v <= hi; ++v) {
            fill[static_cast<size_t>(row - 1)][static_cast<size_t>(col - mu.part(row) - 1)] = v;
            rec(k + 1);
        }
        fill[static_cast<size_t>(row - 1)][static_cast<size_t>(col - mu.part(row) - 1)] = 0;
    };
    rec(0);
    return out;
}

std::vector<Partition> intermediate_partitions(const Partition& inner,
                                               const Partition& outer) {
    if (!outer.contains(inner))
        throw argument_error("intermediate_partitions: inner not contained in outer");
    std::vector<Partition> out;
    std::vector<int> nu;
    std::function<void(int)> rec = [&](int i) {
        if (i > outer.rows()) {
            out.push_back(Partition(nu));
            return;
        }
        int hi = outer.part(i);
        if (i > 1) hi = std::min(hi, nu[static_cast<size_t>(i - 2)]);
        for (int v = inner.part(i); v <= hi; ++v) {
            nu.push_back(v);
            rec(i + 1);
            nu.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_sum) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_sum; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

} // namespace berezin
