#include "qsh/coalgebra.hpp"

#include <algorithm>

namespace qsh {

// ---------------------------------------------------------------- PathVector

PathVector PathVector::single(Path p, RationalFunction coefficient) {
    PathVector v;
    v.add(p, coefficient);
    return v;
}

void PathVector::add(const Path& p, const RationalFunction& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalFunction PathVector::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RationalFunction() : it->second;
}

PathVector& PathVector::operator+=(const PathVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

PathVector PathVector::scaled(const RationalFunction& c) const {
    PathVector out;
    if (c.is_zero()) return out;
    for (const auto& [p, x] : terms_) out.add(p, x * c);
    return out;
}

// ------------------------------------------------------------- TensorVector2

void TensorVector2::add(const Path& left, const Path& right, const RationalFunction& coefficient) {
    if (coefficient.is_zero()) return;
    Key key{left, right};
    auto [it, inserted] = terms_.emplace(std::move(key), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalFunction TensorVector2::coefficient(const Path& left, const Path& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? RationalFunction() : it->second;
}

TensorVector2& TensorVector2::operator+=(const TensorVector2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorVector2& TensorVector2::operator-=(const TensorVector2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

// ------------------------------------------------------------- TensorVectorN

void TensorVectorN::add(const Key& key, const RationalFunction& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

// ------------------------------------------------------------ comultiplication

namespace {

// Segment of p spanning arrow indices [from, to).
Path segment(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
    Path out;
    if (from == to) {
        Vertex at = from == 0 ? p.source : q.target(p.arrows[from - 1]);
        return trivial_path(at);
    }
    out.source = from == 0 ? p.source : q.target(p.arrows[from - 1]);
    out.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                      p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

}  // namespace

TensorVector2 delta(const Quiver& q, const Path& p) {
    TensorVector2 out;
    const std::size_t n = p.arrows.size();
    for (std::size_t i = 0; i <= n; ++i)
        out.add(segment(q, p, i, n), segment(q, p, 0, i), RationalFunction(1));
    return out;
}

TensorVector2 delta(const Quiver& q, const PathVector& v) {
    TensorVector2 out;
    for (const auto& [p, c] : v.terms()) {
        const std::size_t n = p.arrows.size();
        for (std::size_t i = 0; i <= n; ++i) out.add(segment(q, p, i, n), segment(q, p, 0, i), c);
    }
    return out;
}

RationalFunction counit(const PathVector& v) {
    RationalFunction out;
    for (const auto& [p, c] : v.terms()) {
        if (p.length() > 0) break;  // terms are ordered by length
        out += c;
    }
    return out;
}

namespace {

void compositions(const Quiver& q, const Path& p, int parts, std::size_t consumed,
                  std::vector<Path>& current, TensorVectorN& out) {
    const std::size_t n = p.arrows.size();
    if (parts == 1) {
        // the remaining arrows form the target-most segment, which leads the tuple
        std::vector<Path> key;
        key.reserve(current.size() + 1);
        key.push_back(segment(q, p, consumed, n));
        key.insert(key.end(), current.begin(), current.end());
        out.add(key, RationalFunction(1));
        return;
    }
    for (std::size_t take = 0; take + consumed <= n; ++take) {
        current.insert(current.begin(), segment(q, p, consumed, consumed + take));
        compositions(q, p, parts - 1, consumed + take, current, out);
        current.erase(current.begin());
    }
}

}  // namespace

TensorVectorN delta_iterated(const Quiver& q, const Path& p, int n) {
    if (n < 1) throw std::domain_error("delta_iterated needs n >= 1");
    TensorVectorN out;
    std::vector<Path> current;
    compositions(q, p, n + 1, 0, current, out);
    return out;
}

PathVector graded_component(const PathVector& v, int n) {
    PathVector out;
    for (const auto& [p, c] : v.terms())
        if (p.length() == n) out.add(p, c);
    return out;
}

std::vector<Vertex> group_likes(const Quiver& q) {
    return q.vertices();
}

// ----------------------------------------------------------------- rendering

std::string coefficient_prefix(const RationalFunction& c) {
    if (c.is_one()) return "";
    std::string s = c.str();
    const bool needs_parens = s.find_first_of("+-/") != std::string::npos || !c.is_polynomial();
    return (needs_parens ? "(" + s + ")" : s) + "*";
}

std::string path_vector_str(const Quiver& q, const PathVector& v) {
    if (v.is_zero()) return "0";
    // display by descending length, canonical order within a length
    std::vector<const PathVector::Terms::value_type*> items;
    for (const auto& t : v.terms()) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
        return a->first.length() > b->first.length();
    });
    std::string out;
    for (const auto* t : items) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(t->second) + path_str(q, t->first);
    }
    return out;
}

std::string tensor2_str(const Quiver& q, const TensorVector2& t) {
    if (t.is_zero()) return "0";
    // ascending left length, as Delta is usually displayed
    std::vector<const TensorVector2::Terms::value_type*> items;
    for (const auto& term : t.terms()) items.push_back(&term);
    std::stable_sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
        return a->first.first.length() < b->first.first.length();
    });
    std::string out;
    for (const auto* term : items) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(term->second) + path_str(q, term->first.first) + "(x)" +
               path_str(q, term->first.second);
    }
    return out;
}

}  // namespace qsh
