// The path coalgebra kQ: linear combinations of paths, comultiplication as
// path splitting, the counit, and the length grading.
#ifndef QSH_COALGEBRA_HPP
#define QSH_COALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsh/quiver.hpp"
#include "qsh/scalars.hpp"

namespace qsh {

// Finitely supported Path -> Q(q) map; zero coefficients are never stored.
class PathVector {
public:
    using Terms = std::map<Path, RationalFunction, PathOrder>;

    PathVector() = default;
    static PathVector single(Path p, RationalFunction coefficient = RationalFunction(1));

    void add(const Path& p, const RationalFunction& coefficient);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    RationalFunction coefficient(const Path& p) const;

    PathVector& operator+=(const PathVector& o);
    PathVector& operator-=(const PathVector& o);
    friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
    friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
    PathVector scaled(const RationalFunction& c) const;

    friend bool operator==(const PathVector& a, const PathVector& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PathVector& a, const PathVector& b) { return !(a == b); }

private:
    Terms terms_;
};

// Rank-2 and rank-n tensors over the path basis, same conventions.
class TensorVector2 {
public:
    using Key = std::pair<Path, Path>;
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            PathOrder less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };
    using Terms = std::map<Key, RationalFunction, KeyOrder>;

    void add(const Path& left, const Path& right, const RationalFunction& coefficient);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    RationalFunction coefficient(const Path& left, const Path& right) const;

    TensorVector2& operator+=(const TensorVector2& o);
    TensorVector2& operator-=(const TensorVector2& o);
    friend bool operator==(const TensorVector2& a, const TensorVector2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorVector2& a, const TensorVector2& b) { return !(a == b); }

private:
    Terms terms_;
};

class TensorVectorN {
public:
    using Key = std::vector<Path>;
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            PathOrder less;
            return std::lexicographical_compare(
                a.begin(), a.end(), b.begin(), b.end(),
                [&](const Path& x, const Path& y) { return less(x, y); });
        }
    };
    using Terms = std::map<Key, RationalFunction, KeyOrder>;

    void add(const Key& key, const RationalFunction& coefficient);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const TensorVectorN& a, const TensorVectorN& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorVectorN& a, const TensorVectorN& b) { return !(a == b); }

private:
    Terms terms_;
};

// Delta(p): all two-part splits of p, target-side segment on the left.
// A path of length n yields exactly n+1 terms, all with coefficient 1.
TensorVector2 delta(const Quiver& q, const Path& p);
TensorVector2 delta(const Quiver& q, const PathVector& v);

// Sum of coefficients of the length-0 terms.
RationalFunction counit(const PathVector& v);

// (n-1)-iterated comultiplication: rank n+1 tensor whose terms are the
// compositions of p into n+1 consecutive segments, target-most first.
TensorVectorN delta_iterated(const Quiver& q, const Path& p, int n);

PathVector graded_component(const PathVector& v, int n);

// The group-likes of kQ are exactly the vertices.
std::vector<Vertex> group_likes(const Quiver& q);

// Rendering. Coefficient-first terms, paths target-first; path vectors are
// listed by descending length, tensor terms by ascending left length.
std::string coefficient_prefix(const RationalFunction& c);
std::string path_vector_str(const Quiver& q, const PathVector& v);
std::string tensor2_str(const Quiver& q, const TensorVector2& t);

}  // namespace qsh

#endif
