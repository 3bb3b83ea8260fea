// qkw/vartable.hpp -- named, ordered presentation variables.
//
// A table fixes the variable order that the monomial order refines. For a
// flag shape the blocks come in presentation order e(X^(1)), e(Y^(1)),
// e(X^(2)), ..., optionally followed by the quantum parameters q1..qk, which
// therefore sort below everything else under grevlex.
#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qkw/errors.hpp"
#include "qkw/flag_shape.hpp"

namespace qkw {

enum class VarKind {
    EX,     // e_index(X^(block))
    EY,     // e_index(Y^(block))
    XRoot,  // x_index, K-theoretic Chern root for Grothendieck polynomials
    Q,      // q_block
    Plain,  // free-form variable (toy rings, tests)
};

struct VarInfo {
    std::string name;
    VarKind kind;
    int block = 0;  // j for EX/EY/Q
    int index = 0;  // l for EX/EY, i for XRoot
};

class VarTable {
public:
    using Ptr = std::shared_ptr<const VarTable>;

    static Ptr presentation(const FlagShape& shape, bool with_q);
    static Ptr x_roots(int n);
    static Ptr plain(const std::vector<std::string>& names);
    // Same variables, listed in reverse order (used for the rank
    // order-independence check).
    static Ptr reversed(const Ptr& t);

    int size() const { return static_cast<int>(vars_.size()); }
    const VarInfo& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    const std::string& name(int i) const { return vars_[static_cast<std::size_t>(i)].name; }
    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    int q_count() const { return nq_; }
    // q variables occupy the tail [q_begin, size()).
    int q_begin() const { return size() - nq_; }
    bool has_q() const { return nq_ > 0; }

    friend bool operator==(const VarTable& a, const VarTable& b);

    static bool same(const Ptr& a, const Ptr& b) {
        if (a == b) return true;
        if (!a || !b) return false;
        return *a == *b;
    }

private:
    void push(VarInfo v);

    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, int> index_;
    int nq_ = 0;
};

}  // namespace qkw
