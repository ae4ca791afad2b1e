#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nakalg/exact_matrix.hpp"

namespace nakalg {

enum class Orientation { Linear, Cyclic };

// Raw algebra description: orientation plus the Loewy lengths of the
// indecomposable projectives.
struct KupischSeries {
    Orientation orientation = Orientation::Linear;
    std::vector<long> c;

    bool operator==(const KupischSeries& o) const {
        return orientation == o.orientation && c == o.c;
    }
};

// The uniserial module with composition factors S_{a+len-1},...,S_a where
// a = start.  Top is S_start, socle is S_{start+len-1}.  In the cyclic case
// shifted intervals denote the same module.
struct Interval {
    long start = 0;
    long len = 0;
};

class InvalidKupisch : public std::invalid_argument {
public:
    InvalidKupisch(int index, const std::string& rule)
        : std::invalid_argument("invalid Kupisch series at index " + std::to_string(index) + ": " + rule),
          index(index), rule(rule) {}
    int index;
    std::string rule;
};

// A validated connected Nakayama algebra with cached co-Kupisch series.
class Nakayama {
public:
    static Nakayama from(KupischSeries k) {
        validate(k);
        Nakayama a;
        a.k_ = std::move(k);
        a.d_ = co_kupisch_combinatorial(a.k_);
        a.check_co_kupisch();
        return a;
    }

    static Nakayama linear(std::vector<long> c) {
        return from(KupischSeries{Orientation::Linear, std::move(c)});
    }
    static Nakayama cyclic(std::vector<long> c) {
        return from(KupischSeries{Orientation::Cyclic, std::move(c)});
    }

    // Admissibility of the raw series; throws InvalidKupisch naming the
    // failing index and rule.
    static void validate(const KupischSeries& k) {
        const int n = static_cast<int>(k.c.size());
        if (n == 0) throw InvalidKupisch(0, "series must be non-empty");
        for (int i = 1; i <= n; ++i)
            if (k.c[static_cast<size_t>(i - 1)] < 1) throw InvalidKupisch(i, "c_i must be positive");
        if (k.orientation == Orientation::Linear) {
            if (k.c[static_cast<size_t>(n - 1)] != 1) throw InvalidKupisch(n, "linear series needs c_n = 1");
            for (int i = 1; i < n; ++i)
                if (k.c[static_cast<size_t>(i - 1)] < 2)
                    throw InvalidKupisch(i, "linear series needs c_i >= 2 for i < n");
            for (int i = 1; i < n; ++i)
                if (k.c[static_cast<size_t>(i)] < k.c[static_cast<size_t>(i - 1)] - 1)
                    throw InvalidKupisch(i, "needs c_{i+1} >= c_i - 1");
        } else {
            for (int i = 1; i <= n; ++i)
                if (k.c[static_cast<size_t>(i - 1)] < 2)
                    throw InvalidKupisch(i, "cyclic series needs c_i >= 2");
            for (int i = 1; i <= n; ++i) {
                const long next = k.c[static_cast<size_t>(i % n)];
                if (next < k.c[static_cast<size_t>(i - 1)] - 1)
                    throw InvalidKupisch(i, "needs c_{i+1} >= c_i - 1 (cyclically)");
            }
        }
    }

    int n() const { return static_cast<int>(k_.c.size()); }
    bool cyclic() const { return k_.orientation == Orientation::Cyclic; }
    const KupischSeries& series() const { return k_; }
    const std::vector<long>& co_kupisch() const { return d_; }

    // Representative of j in {1..n} (cyclic) or a range check (linear).
    int vertex(long j) const {
        if (cyclic()) {
            long m = j % n();
            if (m <= 0) m += n();
            return static_cast<int>(m);
        }
        if (j < 1 || j > n()) throw std::out_of_range("vertex out of range for linear algebra");
        return static_cast<int>(j);
    }

    long c(long j) const { return k_.c[static_cast<size_t>(vertex(j) - 1)]; }
    long d(long j) const { return d_[static_cast<size_t>(vertex(j) - 1)]; }

    // f(j) = j + c_j and g(j) = j - d_j; defined on all of Z in the cyclic
    // case and only on {1..n} in the linear case.
    long f(long j) const { return j + c(j); }
    long g(long j) const { return j - d(j); }

    // Extensions used by the resolution calculus in the linear case: past the
    // last vertex the algebra behaves as a chain of simples.
    long f_ext(long j) const {
        if (!cyclic() && j > n()) return j + 1;
        return f(j);
    }
    long g_ext(long j) const {
        if (!cyclic() && j < 1) return j - 1;
        return g(j);
    }

    Interval projective(int i) const {
        vertex(i);
        return Interval{i, c(i)};
    }
    Interval injective(int i) const {
        vertex(i);
        return Interval{g(i) + 1, d(i)};
    }

    long top_vertex(const Interval& m) const { return vertex(m.start); }
    long soc_vertex(const Interval& m) const { return vertex(m.start + m.len - 1); }

    bool same_module(const Interval& a, const Interval& b) const {
        if (a.len != b.len) return false;
        if (cyclic()) return (a.start - b.start) % n() == 0;
        return a.start == b.start;
    }

    // Checks that the interval actually denotes a module of this algebra.
    void require_module(const Interval& m) const {
        if (m.len < 1) throw std::invalid_argument("interval length must be >= 1");
        if (m.len > c(m.start)) throw std::invalid_argument("interval exceeds its projective cover");
        if (!cyclic() && (m.start < 1 || m.start + m.len - 1 > n()))
            throw std::invalid_argument("interval outside the linear range");
    }

    bool is_projective(const Interval& m) const { return m.len == c(m.start); }
    bool is_injective(const Interval& m) const { return m.len == d(m.start + m.len - 1); }

    // Cartan matrix: column j is the dimension vector of P(j); entries count
    // composition-factor multiplicities.
    ExactMatrix cartan() const {
        const int size = n();
        ExactMatrix w(size, size);
        for (int j = 1; j <= size; ++j)
            for (long t = j; t < j + c(j); ++t) w(vertex_of(t) - 1, j - 1) += 1;
        return w;
    }

    // Dimension vector of an interval module (multiplicities per vertex).
    std::vector<long> dim_vector(const Interval& m) const {
        std::vector<long> v(static_cast<size_t>(n()), 0);
        for (long t = m.start; t < m.start + m.len; ++t) ++v[static_cast<size_t>(vertex_of(t) - 1)];
        return v;
    }

    long total_dim() const { return std::accumulate(k_.c.begin(), k_.c.end(), 0L); }

    std::string str() const {
        std::string s = cyclic() ? "cyclic:" : "linear:";
        for (size_t i = 0; i < k_.c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k_.c[i]);
        }
        return s;
    }

private:
    // Residue representative valid for both orientations (used where the
    // argument is known to be a genuine composition-factor position).
    int vertex_of(long j) const {
        long m = j % n();
        if (m <= 0) m += n();
        return static_cast<int>(m);
    }

    static std::vector<long> co_kupisch_combinatorial(const KupischSeries& k) {
        const int n = static_cast<int>(k.c.size());
        std::vector<long> d(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i)
            for (long t = i; t < i + k.c[static_cast<size_t>(i - 1)]; ++t) {
                long m = t % n;
                if (m <= 0) m += n;
                ++d[static_cast<size_t>(m - 1)];
            }
        return d;
    }

    // d_j must equal the j-th row sum of the Cartan matrix.
    void check_co_kupisch() const {
        ExactMatrix w = cartan();
        for (int j = 1; j <= n(); ++j) {
            Rat sum(0);
            for (int i = 0; i < n(); ++i) sum += w(j - 1, i);
            if (sum != d(j))
                throw TheoremViolation("co-Kupisch mismatch at vertex " + std::to_string(j) + " for " + str());
        }
    }

    KupischSeries k_;
    std::vector<long> d_;
};

}  // namespace nakalg
