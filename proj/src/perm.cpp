#include "charpoly/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charpoly {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            parts.push_back(v);
            continue;
        }
        if (c != ',' && c != '(' && c != ')' && c != ' ') {
            throw std::invalid_argument("bad partition text: " + std::string(text));
        }
        ++i;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
        out.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int part : parts_) {
            for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

Partition Partition::padded_to(int n) const {
    if (n < size_) throw std::invalid_argument("cannot pad partition to a smaller size");
    std::vector<int> out = parts_;
    out.insert(out.end(), static_cast<std::size_t>(n - size_), 1);
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::span<const int> one_line) {
    const auto k = one_line.size();
    img_.resize(k);
    std::vector<bool> seen(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        const int v = one_line[i];
        if (v < 1 || static_cast<std::size_t>(v) > k || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("one-line notation is not a bijection of {1..k}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
        img_[i] = v - 1;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return from_zero_based(std::move(img));
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int k, const std::vector<Cycle>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(k), -1);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int from = c[i];
            const int to = c[(i + 1) % c.size()];
            if (from < 1 || from > k || to < 1 || to > k) {
                throw std::invalid_argument("cycle symbol out of range");
            }
            if (img[static_cast<std::size_t>(from - 1)] != -1) {
                throw std::invalid_argument("symbol appears in two cycles");
            }
            img[static_cast<std::size_t>(from - 1)] = to - 1;
        }
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] == -1) img[i] = static_cast<int>(i);
    }
    std::vector<int> one(img.size());
    std::transform(img.begin(), img.end(), one.begin(), [](int v) { return v + 1; });
    return Permutation(std::span<const int>(one));
}

Permutation Permutation::parse(std::string_view text, int k) {
    std::vector<Cycle> cycles;
    int largest = 0;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        Cycle c;
        for (;;) {
            skip_space();
            if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw std::invalid_argument("unexpected character in cycle notation");
            }
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            c.push_back(v);
            largest = std::max(largest, v);
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (!c.empty()) cycles.push_back(std::move(c));
        skip_space();
    }
    if (k == 0) k = largest;
    if (largest > k) throw std::invalid_argument("cycle symbol exceeds permutation size");
    return from_cycles(k, cycles);
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(img_.size());
    std::transform(img_.begin(), img_.end(), out.begin(), [](int v) { return v + 1; });
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return from_zero_based(std::move(inv));
}

std::vector<Cycle> Permutation::cycles() const {
    std::vector<Cycle> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start]) continue;
        Cycle c;
        for (auto x = start; !seen[x]; x = static_cast<std::size_t>(img_[x])) {
            seen[x] = true;
            c.push_back(static_cast<int>(x) + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::kappa() const {
    int count = 0;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start]) continue;
        ++count;
        for (auto x = start; !seen[x]; x = static_cast<std::size_t>(img_[x])) seen[x] = true;
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return Partition::from_unsorted(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    if (img_.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: permutation sizes differ");
    const auto ai = a.images0();
    const auto bi = b.images0();
    std::vector<int> out(bi.size());
    for (std::size_t x = 0; x < bi.size(); ++x) out[x] = ai[static_cast<std::size_t>(bi[x])];
    return Permutation::from_zero_based(std::move(out));
}

Permutation full_cycle(int k) {
    if (k < 1) throw std::invalid_argument("full_cycle needs k >= 1");
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % k;
    return Permutation::from_zero_based(std::move(img));
}

Permutation canonical_class_rep(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("canonical_class_rep needs a nonempty partition");
    std::vector<int> img(static_cast<std::size_t>(mu.size()));
    int start = 0;
    for (int part : mu.parts()) {
        for (int j = 0; j < part; ++j) {
            img[static_cast<std::size_t>(start + j)] = start + (j + 1) % part;
        }
        start += part;
    }
    return Permutation::from_zero_based(std::move(img));
}

void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit) {
    if (k < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    do {
        visit(Permutation::from_zero_based(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<Permutation> enumerate_permutations(int k) {
    std::vector<Permutation> out;
    for_each_permutation(k, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

namespace {

// Appends every partition of `rest` with parts <= `cap` to `prefix`, smallest
// parts first so that the final list is lexicographically increasing.
void partitions_rec(int rest, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = 1; part <= std::min(rest, cap); ++part) {
        prefix.push_back(part);
        partitions_rec(rest - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(d, d, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace charpoly
