#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nakalg {

// A bijection on {1..n}.  images_[i-1] is the image of i.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("not a bijection on {1.." + std::to_string(n) + "}");
            seen[static_cast<size_t>(v - 1)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) im[static_cast<size_t>(i - 1)] = i;
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }

    int of(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("permutation index");
        return images_[static_cast<size_t>(i - 1)];
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 1; i <= size(); ++i) im[static_cast<size_t>(of(i) - 1)] = i;
        return Permutation(std::move(im));
    }

    // (p * q)(i) = p(q(i))
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size()) throw std::invalid_argument("size mismatch in composition");
        std::vector<int> im(p.images_.size());
        for (int i = 1; i <= p.size(); ++i) im[static_cast<size_t>(i - 1)] = p.of(q.of(i));
        return Permutation(std::move(im));
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (of(i) != i) return false;
        return true;
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    const std::vector<int>& images() const { return images_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 1; i <= size(); ++i) {
            if (i > 1) s += ",";
            s += std::to_string(i) + "->" + std::to_string(of(i));
        }
        return s + ")";
    }

private:
    std::vector<int> images_;
};

}  // namespace nakalg
