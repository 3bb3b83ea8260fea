// qkw/permutation.hpp -- S_n combinatorics: lengths, Bruhat order, reduced
// words, minimal coset representatives.
#pragma once

#include <string>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/flag_shape.hpp"

namespace qkw {

// One-line notation with 1-based values: w[i] = w(i+1).
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    static Permutation from_one_line(std::vector<int> w);
    static Permutation longest(int n);
    // "213" or "2,1,3"
    static Permutation parse(const std::string& text);

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& one_line() const { return w_; }

    int length() const;  // inversion count
    bool is_identity() const;

    // w * s_i: swap the entries in positions i, i+1 (1-based i < n).
    Permutation right_mul_s(int i) const;
    // smallest right descent, or 0 if none
    int first_descent() const;
    bool has_descent(int i) const { return w_[static_cast<std::size_t>(i - 1)] > w_[static_cast<std::size_t>(i)]; }

    // Deterministic reduced word (letters i meaning s_i), built by stripping
    // the smallest right descent first.
    std::vector<int> reduced_word() const;

    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

// Bruhat order via the descent recursion (the subword property in its
// recursive form): for a right descent s of v,
//   u <= v  iff  (us <= vs when l(us) < l(u), else u <= vs).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// Minimal length representatives of S_n / (S_{d0} x S_{d1} x ...): the
// permutations increasing within each block [r_j + 1, r_{j+1}].
std::vector<Permutation> minimal_reps(const FlagShape& shape);

bool is_minimal_rep(const Permutation& w, const FlagShape& shape);

}  // namespace qkw
