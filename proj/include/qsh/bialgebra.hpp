// Bialgebra structures on path coalgebras: vertex monoids, bimodule
// actions on the arrow span, the quantum shuffle product, axiom
// verification, and the Gabriel-type helpers.
#ifndef QSH_BIALGEBRA_HPP
#define QSH_BIALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsh/coalgebra.hpp"
#include "qsh/quiver.hpp"

namespace qsh {

// Monoid structure on the vertex set: an explicit table, or the additive
// monoid of naturals on the A-infinity family (g_i * g_j = g_{i+j}).
class VertexMonoid {
public:
    enum class Kind { Table, AdditiveNaturals };

    static VertexMonoid table(Vertex identity, std::vector<std::vector<Vertex>> products);
    static VertexMonoid additive_naturals(int support_bound);

    Kind kind() const { return kind_; }
    Vertex identity() const;
    Vertex product(Vertex g, Vertex h) const;
    int size() const;
    // Raw table access for validation; entries may be {-1} when a pair was
    // never specified.
    Vertex table_entry(Vertex g, Vertex h) const;

    friend bool operator==(const VertexMonoid& a, const VertexMonoid& b);

private:
    Kind kind_ = Kind::Table;
    int support_bound_ = 0;
    Vertex identity_{-1};
    std::vector<std::vector<Vertex>> table_;
};

// k Q_0-bimodule action on the arrow span, length-1 supported. Either an
// explicit table (absent entries act as zero) or the A-infinity rule
// g_i.a_j = a_{i+j}, a_j.g_i = q^i a_{i+j}.
class BimoduleAction {
public:
    enum class Kind { Table, AInfinityRule };

    using Table = std::map<std::pair<int, int>, PathVector>;

    static BimoduleAction table(Table left, Table right);
    static BimoduleAction ainfinity_rule();

    Kind kind() const { return kind_; }
    PathVector left(const Quiver& q, Vertex g, Arrow a) const;   // g.a
    PathVector right(const Quiver& q, Arrow a, Vertex g) const;  // a.g
    const Table& left_table() const { return left_; }
    const Table& right_table() const { return right_; }

private:
    Kind kind_ = Kind::Table;
    Table left_;   // key (vertex id, arrow id)
    Table right_;  // key (arrow id, vertex id)
};

// The pair (S, M): a quiver with a vertex monoid and a bimodule action,
// which together determine a graded bialgebra structure on kQ.
struct BialgebraSpec {
    Quiver quiver;
    VertexMonoid monoid;
    BimoduleAction action;
};

ValidationReport validate_monoid(const Quiver& q, const VertexMonoid& m);
ValidationReport validate_bimodule(const BialgebraSpec& spec);
ValidationReport validate_spec(const BialgebraSpec& spec);

// The always-available structure: e is the identity, z absorbs everything
// else, and every vertex other than e acts as zero on arrows. For a
// single-vertex quiver z must be absent (the monoid is the trivial group).
BialgebraSpec trivial_bialgebra(const Quiver& q, Vertex e, std::optional<Vertex> z);

// The quantum-plane structure on the A-infinity quiver.
BialgebraSpec ainf_bialgebra(int support_bound);

// Quantum shuffle product of two paths: sum over complementary thin
// splits of slotwise bimodule actions, concatenated slot by slot.
PathVector shuffle_product(const BialgebraSpec& spec, const Path& alpha, const Path& beta);

// Bilinear extension of shuffle_product.
PathVector product_vector(const BialgebraSpec& spec, const PathVector& u, const PathVector& v);

// Componentwise product on kQ (x) kQ: (a(x)b)(c(x)d) = ac (x) bd.
TensorVector2 tensor2_product(const BialgebraSpec& spec, const TensorVector2& a,
                              const TensorVector2& b);

// Closed form on the A-infinity structure:
// p_i^l * p_j^m = q^(jl) * binom(l+m, m)_q * p_{i+j}^{l+m}.
struct ClosedProduct {
    RationalFunction coefficient;
    Path path;
};
ClosedProduct ainf_closed_product(int i, int l, int j, int m);
// The path p_i^l as a Path on the A-infinity quiver.
Path ainf_path(int i, int l);

// One verified axiom, with a counterexample when it failed.
struct VerifyCheck {
    std::string name;
    long cases = 0;
    bool pass = true;
    std::string counterexample;
};

struct VerifyReport {
    std::string header;
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
    std::string str() const;
};

// Checks coassociativity, the counit law, associativity, the unit law,
// multiplicativity of Delta and epsilon, and length grading, over all
// paths (tuples) of total length <= max_len. On the A-infinity family the
// tuples are additionally restricted so every intermediate product stays
// below the support bound; the header records the exact bound semantics.
VerifyReport verify_bialgebra(const BialgebraSpec& spec, int max_len);

// First vertex in canonical order that is a sink or a source.
std::optional<Vertex> has_sink_or_source(const Quiver& q);

struct ClosureCounterexample {
    Arrow first;
    Arrow second;
    PathVector surviving;  // the nonzero length-2 component
};

struct ClosureResult {
    bool ok = true;
    long pairs_checked = 0;
    std::optional<ClosureCounterexample> counterexample;
};

// Does kQ_0 + kQ_1 close under the product? Checks that every product of
// two arrows has vanishing length-2 component.
ClosureResult check_degree1_closure(const BialgebraSpec& spec);

// Monoid with isotypic dimensions dims(g, h) = dim of the (g, h)-isotypic
// component; attach_quiver realizes it as dims(g, h) arrows h -> g.
struct IsotypicMatrix {
    std::vector<std::string> vertex_names;
    VertexMonoid monoid;
    std::map<std::pair<int, int>, int> dims;  // key (target id g, source id h)
};

Quiver attach_quiver(const IsotypicMatrix& iso);
IsotypicMatrix read_isotypic(const Quiver& q, const VertexMonoid& monoid);

// Dynkin classification of the underlying undirected graph.
struct ComponentClass {
    std::vector<Vertex> vertices;
    bool is_dynkin = false;
    std::string label;   // "A5", "D4", "E6", ... when Dynkin
    std::string reason;  // why not, otherwise
};

struct Classification {
    bool finite_type = false;
    bool acyclic = false;  // directed acyclicity
    std::vector<ComponentClass> components;
    std::string str(const Quiver& q) const;
};

Classification classify_finite_type(const Quiver& q);

}  // namespace qsh

#endif
