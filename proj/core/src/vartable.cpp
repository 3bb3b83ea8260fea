#include "qkw/vartable.hpp"

namespace qkw {

void VarTable::push(VarInfo v) {
    if (index_.count(v.name)) throw DomainError("duplicate variable name '" + v.name + "'");
    index_.emplace(v.name, static_cast<int>(vars_.size()));
    vars_.push_back(std::move(v));
}

VarTable::Ptr VarTable::presentation(const FlagShape& shape, bool with_q) {
    auto t = std::make_shared<VarTable>();
    for (int j = 1; j <= shape.k(); ++j) {
        for (int l = 1; l <= shape.r_at(j); ++l)
            t->push({"e" + std::to_string(l) + "(X" + std::to_string(j) + ")", VarKind::EX, j, l});
        for (int l = 1; l <= shape.delta(j); ++l)
            t->push({"e" + std::to_string(l) + "(Y" + std::to_string(j) + ")", VarKind::EY, j, l});
    }
    if (with_q) {
        for (int j = 1; j <= shape.k(); ++j) t->push({"q" + std::to_string(j), VarKind::Q, j, 0});
        t->nq_ = shape.k();
    }
    return t;
}

VarTable::Ptr VarTable::x_roots(int n) {
    auto t = std::make_shared<VarTable>();
    for (int i = 1; i <= n; ++i) t->push({"x" + std::to_string(i), VarKind::XRoot, 0, i});
    return t;
}

VarTable::Ptr VarTable::plain(const std::vector<std::string>& names) {
    auto t = std::make_shared<VarTable>();
    for (const auto& nm : names) {
        VarKind kind = VarKind::Plain;
        int block = 0;
        if (nm.size() >= 2 && nm[0] == 'q') {
            bool digits = true;
            for (std::size_t i = 1; i < nm.size(); ++i) digits = digits && std::isdigit(nm[i]);
            if (digits) {
                kind = VarKind::Q;
                block = std::stoi(nm.substr(1));
            }
        }
        t->push({nm, kind, block, 0});
        if (kind == VarKind::Q) t->nq_++;
    }
    // q variables must sit at the tail for q_begin() to make sense
    for (int i = 0; i < t->size() - t->nq_; ++i)
        if (t->var(i).kind == VarKind::Q) throw DomainError("q variables must come last in a table");
    return t;
}

VarTable::Ptr VarTable::reversed(const Ptr& in) {
    auto t = std::make_shared<VarTable>();
    for (int i = in->size() - 1; i >= 0; --i) t->push(in->var(i));
    // reversal is for classical rank checks only; forget the q tail
    t->nq_ = 0;
    return t;
}

bool operator==(const VarTable& a, const VarTable& b) {
    if (a.vars_.size() != b.vars_.size() || a.nq_ != b.nq_) return false;
    for (std::size_t i = 0; i < a.vars_.size(); ++i)
        if (a.vars_[i].name != b.vars_[i].name) return false;
    return true;
}

}  // namespace qkw
