// Quivers (finite or the rule-based A-infinity family), paths, path
// enumeration, and thin splits.
#ifndef QSH_QUIVER_HPP
#define QSH_QUIVER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qsh {

// Raised when an operation on a rule-based quiver would reach past its
// support bound. Nothing is silently truncated.
struct support_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vertex {
    int id = -1;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Arrow {
    int id = -1;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct ValidationIssue {
    std::string subject;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

// A directed multigraph. Either finite (explicit vertex/arrow lists) or the
// A-infinity family g_0 -> g_1 -> ... truncated at an explicit support
// bound: vertices g_0..g_B, arrows a_i : g_i -> g_{i+1} for i < B.
class Quiver {
public:
    enum class Kind { Finite, AInfinity };

    struct ArrowDecl {
        std::string name;
        std::string source;
        std::string target;
    };

    static Quiver finite(std::vector<std::string> vertex_names, std::vector<ArrowDecl> arrows);
    static Quiver ainfinity(int support_bound);

    Kind kind() const { return kind_; }
    int support_bound() const { return support_bound_; }

    int vertex_count() const;
    std::vector<Vertex> vertices() const;
    bool has_vertex(Vertex v) const;
    std::string vertex_name(Vertex v) const;
    std::optional<Vertex> find_vertex(const std::string& name) const;

    int arrow_count() const;
    std::vector<Arrow> arrows() const;
    bool has_arrow(Arrow a) const;
    std::string arrow_name(Arrow a) const;
    std::optional<Arrow> find_arrow(const std::string& name) const;
    Vertex source(Arrow a) const;
    Vertex target(Arrow a) const;

    std::vector<Arrow> arrows_from(Vertex v) const;
    std::vector<Arrow> arrows_into(Vertex v) const;

    // Checks the structural invariants (unique names, resolving endpoints).
    // All other member functions assume a valid quiver.
    ValidationReport validate() const;

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    Kind kind_ = Kind::Finite;
    int support_bound_ = 0;  // AInfinity only
    std::vector<std::string> vertex_names_;
    struct ArrowRec {
        std::string name;
        int source;  // -1 when unresolved (caught by validate)
        int target;
        std::string source_name;
        std::string target_name;
    };
    std::vector<ArrowRec> arrows_;
    void require_vertex(Vertex v) const;
    void require_arrow(Arrow a) const;
};

// Builtin quivers with the conventional vertex/arrow names.
Quiver make_kronecker(int n);   // e, z; a1..an : e -> z
Quiver make_subspace(int n);    // e, f1..fn; ai : fi -> e
Quiver make_linear_a(int n);    // v1..vn; ai : vi -> v(i+1)
Quiver make_ainfinity(int support_bound);
// Dispatch by name: "kronecker" | "subspace" | "linearA" | "ainfinity".
Quiver builtin_quiver(const std::string& name, int parameter);

// A path stored source-first: arrows[0] is the first arrow traversed.
// Display follows the target-first convention, e.g. "a2a1".
struct Path {
    Vertex source;
    std::vector<Arrow> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

// Canonical order: by length, then source, then the arrow sequence.
struct PathOrder {
    bool operator()(const Path& a, const Path& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.source != b.source) return a.source < b.source;
        return a.arrows < b.arrows;
    }
};

Path trivial_path(Vertex v);
Vertex path_target(const Quiver& q, const Path& p);
bool path_valid(const Quiver& q, const Path& p);
std::string path_str(const Quiver& q, const Path& p);

// Composition later * earlier; requires source(later) = target(earlier).
Path concat(const Quiver& q, const Path& later, const Path& earlier);

// All paths of exactly the given length starting at v, in canonical order.
// Rule-based quivers refuse lengths that would reach past the bound.
std::vector<Path> paths_from(const Quiver& q, Vertex v, int length);

// One slot of a thin split: a vertex (bit 0) or an arrow (bit 1).
using SplitEntry = std::variant<Vertex, Arrow>;

struct ThinSplit {
    std::vector<std::uint8_t> bits;     // d_1..d_n
    std::vector<SplitEntry> entries;    // entry i corresponds to bit i
};

// The C(n, ones) bit sequences of length n, in lexicographic order. These
// index thin splits: D_l^n is binary_sequences(n, l).
std::vector<std::vector<std::uint8_t>> binary_sequences(int n, int ones);

// All n-thin splits of p, indexed by the C(n, |p|) bit sequences with |p|
// ones, in lexicographic bit order. Requires n >= |p|.
std::vector<ThinSplit> thin_splits(const Quiver& q, const Path& p, int n);

// Reassembles the entries of a split into the path they came from.
Path reassemble(const Quiver& q, const ThinSplit& split);

// Parses a path expression: a vertex name, or arrow names composed with
// `*` or by juxtaposition ("a2*a1" and "a2a1" both denote the path that
// traverses a1 first), written target-first as in printed output.
// Juxtaposed names resolve greedily, longest declared name first.
Path parse_path_expr(const Quiver& q, const std::string& text);

std::vector<std::uint8_t> complement(std::vector<std::uint8_t> bits);

}  // namespace qsh

#endif
