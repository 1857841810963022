#pragma once

// Permutations of {1..k}, integer partitions and cycle statistics.
//
// Symbols are 1-based at every public boundary; storage is 0-based.
// Products are read right to left: compose(a, b) applies b first.

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charpoly {

/// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Sorts `parts` into weakly decreasing order first.
    static Partition from_unsorted(std::vector<int> parts);
    /// Accepts "3,2,1", "(3,2,1)", "3 2 1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    Partition conjugate() const;
    /// The partition μ 1^{n-|μ|}; requires n >= size().
    Partition padded_to(int n) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using Cycle = std::vector<int>;

class Permutation {
public:
    Permutation() = default;
    /// One-line notation, 1-based images. Throws std::invalid_argument unless a bijection.
    explicit Permutation(std::span<const int> one_line);
    explicit Permutation(std::initializer_list<int> one_line)
        : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

    static Permutation identity(int k);
    static Permutation from_cycles(int k, const std::vector<Cycle>& cycles);
    /// Cycle notation "(1 6 8 9)(2 5)(3)". With k == 0 the size is the largest symbol seen.
    static Permutation parse(std::string_view text, int k = 0);
    /// Internal 0-based images, no validation beyond size; used by hot loops.
    static Permutation from_zero_based(std::vector<int> images);

    int size() const noexcept { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_.at(static_cast<std::size_t>(x - 1)) + 1; }
    std::vector<int> one_line() const;
    std::span<const int> images0() const noexcept { return img_; }

    Permutation inverse() const;
    /// Cycles starting at their minimum, ordered by minimum; fixed points included.
    std::vector<Cycle> cycles() const;
    int kappa() const;
    Partition cycle_type() const;
    bool is_identity() const;
    /// Cycle notation with fixed points printed, e.g. "(1 2)(3)". Size 0 prints "()".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

private:
    std::vector<int> img_;
};

/// x -> a(b(x)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline int kappa(const Permutation& a) { return a.kappa(); }

/// (1 2 ... k)
Permutation full_cycle(int k);
/// Cycles of lengths mu_1, mu_2, ... on consecutive blocks 1..mu_1, mu_1+1.., etc.
Permutation canonical_class_rep(const Partition& mu);

/// All of S_k in lexicographic order of one-line notation. k = 0 yields one empty permutation.
std::vector<Permutation> enumerate_permutations(int k);
void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit);

/// All partitions of d in lexicographic order of their parts; d = 0 yields the empty partition.
std::vector<Partition> partitions_of(int d);

}  // namespace charpoly
