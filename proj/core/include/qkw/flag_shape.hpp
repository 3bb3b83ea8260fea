// qkw/flag_shape.hpp -- the combinatorial type Fl(r1,...,rk; n).
#pragma once

#include <string>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/rational.hpp"

namespace qkw {

struct NotStrictlyIncreasing : DomainError {
    explicit NotStrictlyIncreasing(std::string msg) : DomainError(std::move(msg)) {}
};

struct OutOfRange : DomainError {
    explicit OutOfRange(std::string msg) : DomainError(std::move(msg)) {}
};

class FlagShape {
public:
    static FlagShape make(std::vector<int> r, int n);
    // "r1,r2,...,rk:n"
    static FlagShape parse(const std::string& text);

    int k() const { return static_cast<int>(r_.size()); }
    int n() const { return n_; }
    const std::vector<int>& r() const { return r_; }

    // r_j with the conventions r_0 = 0 and r_{k+1} = n.
    int r_at(int j) const;
    // delta_j = r_{j+1} - r_j for 0 <= j <= k.
    int delta(int j) const { return r_at(j + 1) - r_at(j); }

    bool is_complete() const;

    // |W^P| = n! / prod_j delta_j!
    Int coset_count() const;

    std::string to_string() const;

    friend bool operator==(const FlagShape& a, const FlagShape& b) {
        return a.n_ == b.n_ && a.r_ == b.r_;
    }

private:
    FlagShape(std::vector<int> r, int n) : r_(std::move(r)), n_(n) {}
    std::vector<int> r_;
    int n_;
};

}  // namespace qkw
