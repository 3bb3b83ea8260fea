#include "qkw/permutation.hpp"

#include <algorithm>

namespace qkw {

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::from_one_line(std::vector<int> w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)])
            throw DomainError("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            w.push_back(std::stoi(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw DomainError("bad permutation digit '" + std::string(1, c) + "'");
            w.push_back(c - '0');
        }
    }
    return from_one_line(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation Permutation::right_mul_s(int i) const {
    Permutation p = *this;
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    return p;
}

int Permutation::first_descent() const {
    for (int i = 1; i < n(); ++i)
        if (has_descent(i)) return i;
    return 0;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> letters;
    Permutation w = *this;
    while (true) {
        int d = w.first_descent();
        if (d == 0) break;
        letters.push_back(d);
        w = w.right_mul_s(d);
    }
    // w = s_{i_l} ... s_{i_1} for the collected letters i_1, ..., i_l
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::string Permutation::to_string() const {
    std::string s;
    bool wide = n() > 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(w_[i]);
    }
    return s;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw DimensionError("Bruhat comparison across different symmetric groups");
    if (u.length() > v.length()) return false;
    int d = v.first_descent();
    if (d == 0) return u.is_identity();
    Permutation vs = v.right_mul_s(d);
    if (u.has_descent(d)) return bruhat_leq(u.right_mul_s(d), vs);
    return bruhat_leq(u, vs);
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

bool is_minimal_rep(const Permutation& w, const FlagShape& shape) {
    if (w.n() != shape.n()) return false;
    for (int j = 0; j <= shape.k(); ++j)
        for (int i = shape.r_at(j) + 1; i < shape.r_at(j + 1); ++i)
            if (w(i) > w(i + 1)) return false;
    return true;
}

namespace {

void assign_blocks(const FlagShape& shape, int block, std::vector<int>& remaining, std::vector<int>& acc,
                   std::vector<Permutation>& out) {
    if (block > shape.k()) {
        out.push_back(Permutation::from_one_line(acc));
        return;
    }
    int width = shape.delta(block);
    // choose `width` of the remaining values, in increasing order
    int m = static_cast<int>(remaining.size());
    std::vector<int> pick(static_cast<std::size_t>(width));
    std::vector<bool> used(remaining.size(), false);
    std::function<void(int, int)> rec = [&](int chosen, int start) {
        if (chosen == width) {
            std::vector<int> rest;
            for (std::size_t t = 0; t < remaining.size(); ++t)
                if (!used[t]) rest.push_back(remaining[t]);
            std::size_t base = acc.size();
            for (int v : pick) acc.push_back(v);
            std::vector<int> saved = remaining;
            remaining = rest;
            assign_blocks(shape, block + 1, remaining, acc, out);
            remaining = saved;
            acc.resize(base);
            return;
        }
        for (int t = start; t < m; ++t) {
            used[static_cast<std::size_t>(t)] = true;
            pick[static_cast<std::size_t>(chosen)] = remaining[static_cast<std::size_t>(t)];
            rec(chosen + 1, t + 1);
            used[static_cast<std::size_t>(t)] = false;
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<Permutation> minimal_reps(const FlagShape& shape) {
    std::vector<int> values(static_cast<std::size_t>(shape.n()));
    for (int i = 0; i < shape.n(); ++i) values[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> acc;
    std::vector<Permutation> out;
    assign_blocks(shape, 0, values, acc, out);
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

}  // namespace qkw
