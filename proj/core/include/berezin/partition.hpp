#ifndef BEREZIN_PARTITION_HPP
#define BEREZIN_PARTITION_HPP

#include <string>
#include <vector>

#include "berezin/errors.hpp"

namespace berezin {

// Integer partition: weakly decreasing positive parts; may be empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text); // "(2,1)", "()"

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    // part i (1-based), 0 beyond the last row
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const; // componentwise mu <= *this
    Partition conjugate() const;

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const Partition& rhs) const { return !(*this == rhs); }
    bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

    std::string str() const; // "(2,1)", "()"

private:
    std::vector<int> parts_;
};

// Skew shape outer/inner with inner <= outer componentwise.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition()) {}

    static SkewShape parse(const std::string& text); // "(2,1)/(1)" or "(2,1)"

    int cell_count() const { return outer.sum() - inner.sum(); }
    bool operator==(const SkewShape& rhs) const {
        return outer == rhs.outer && inner == rhs.inner;
    }

    std::string str() const; // "(2,1)/(1)"; plain "(2,1)" when inner is empty
};

// Semistandard tableau of a skew shape: entries[i] holds the filled cells of
// row i+1, columns inner_i+1 .. outer_i, weakly increasing along rows and
// strictly increasing down columns.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;
};

// All semistandard fillings with entries in {1..nvars}, duplicate-free, in
// lexicographic order of the row-major filling.
std::vector<Tableau> enum_ssyt(const SkewShape& shape, int nvars);

// All partitions nu with inner <= nu <= outer componentwise.
std::vector<Partition> intermediate_partitions(const Partition& inner,
                                               const Partition& outer);

// All partitions of weight <= max_sum (including the empty one), ordered.
std::vector<Partition> partitions_up_to(int max_sum);
// All partitions of weight exactly n.
std::vector<Partition> partitions_of(int n);

} // namespace berezin

#endif
