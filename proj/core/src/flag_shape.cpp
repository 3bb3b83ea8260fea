#include "qkw/flag_shape.hpp"

#include <sstream>

namespace qkw {

FlagShape FlagShape::make(std::vector<int> r, int n) {
    if (r.empty()) throw OutOfRange("flag shape needs at least one step");
    if (r.front() <= 0) throw OutOfRange("first step must be positive, got " + std::to_string(r.front()));
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] <= r[i - 1])
            throw NotStrictlyIncreasing("steps must strictly increase: r[" + std::to_string(i) + "]=" +
                                        std::to_string(r[i]) + " after " + std::to_string(r[i - 1]));
    if (r.back() >= n)
        throw OutOfRange("last step " + std::to_string(r.back()) + " must be below the ambient dimension " +
                         std::to_string(n));
    return FlagShape(std::move(r), n);
}

FlagShape FlagShape::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw OutOfRange("shape must look like r1,r2:n, got '" + text + "'");
    std::vector<int> r;
    std::stringstream ss(text.substr(0, colon));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            r.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw OutOfRange("bad step '" + item + "' in shape '" + text + "'");
        }
    }
    int n = 0;
    try {
        n = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw OutOfRange("bad ambient dimension in shape '" + text + "'");
    }
    return make(std::move(r), n);
}

int FlagShape::r_at(int j) const {
    if (j <= 0) return 0;
    if (j >= k() + 1) return n_;
    return r_[static_cast<std::size_t>(j - 1)];
}

bool FlagShape::is_complete() const {
    return k() == n_ - 1;  // steps are then forced to be 1,2,...,n-1
}

Int FlagShape::coset_count() const {
    Int c = factorial(n_);
    for (int j = 0; j <= k(); ++j) c /= factorial(delta(j));
    return c;
}

std::string FlagShape::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r_[i]);
    }
    return s + ":" + std::to_string(n_);
}

}  // namespace qkw
