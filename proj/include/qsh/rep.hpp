// Quiver representations as comodules: path actions, local nilpotency,
// comodule expansions, tensor products under a bialgebra structure,
// interval modules, and barcode (Krull-Schmidt) decomposition on
// equioriented A-type lines.
#ifndef QSH_REP_HPP
#define QSH_REP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsh/bialgebra.hpp"
#include "qsh/matrix.hpp"
#include "qsh/quiver.hpp"

namespace qsh {

// Finite-dimensional vertex spaces and arrow maps. Unsupported vertices
// and arrows are implicitly zero. Matrix shape: dim(target) x dim(source).
struct Representation {
    Quiver quiver;
    std::map<int, int> dims;                          // vertex id -> dimension (> 0 only)
    std::map<int, Matrix> mats;                       // arrow id -> matrix
    std::map<int, std::vector<std::string>> labels;   // vertex id -> basis labels

    int dim(Vertex v) const;
    int total_dim() const;
    Matrix arrow_matrix(Arrow a) const;  // correctly shaped zero when absent
    std::string basis_label(Vertex v, int index) const;
};

ValidationReport validate_representation(const Representation& rep);

// V_p = V_{a_n} ... V_{a_1}; the identity for trivial paths.
Matrix apply_path(const Representation& rep, const Path& p);

struct NilpotencyResult {
    bool locally_nilpotent = true;
    std::optional<Path> witness;  // a path acting nonzero at the cutoff length
};

// Iterates the chain U_n = sum of images of all length-n path actions;
// U_D = 0 with D the total dimension decides local nilpotency.
NilpotencyResult is_locally_nilpotent(const Representation& rep);

struct ComoduleTerm {
    Vertex target;
    int index;
    Path path;
    RationalFunction coeff;
};

struct ComoduleExpansion {
    std::vector<ComoduleTerm> terms;
    bool exhaustive = true;  // false when paths of length max_len+1 still act nonzero
};

// delta(e_index) = sum over paths p from g of V_p(e_index) (x) p, |p| <= max_len.
ComoduleExpansion comodule_map(const Representation& rep, Vertex g, int index, int max_len);
std::string comodule_str(const Representation& rep, const ComoduleExpansion& expansion);

// Where each (g, h) block of a tensor product landed.
struct TensorLayout {
    // (g id, h id) -> (product vertex id, column offset); basis within a
    // block is u-major: (iu, iv) -> iu * dimW(h) + iv.
    std::map<std::pair<int, int>, std::pair<int, int>> blocks;
};

// Comodule tensor product u (x) v -> u0 (x) v0 (x) u1 v1 read off in
// degrees 0 and 1: vertex spaces regrouped along the monoid product,
// arrow maps assembled from the bimodule actions.
Representation tensor_representations(const BialgebraSpec& spec, const Representation& V,
                                      const Representation& W, TensorLayout* layout = nullptr);

// The unit object: one dimension at the identity vertex.
Representation unit_representation(const BialgebraSpec& spec);

// Checks that the comodule map of tensor_representations(V, W) agrees with
// the termwise product of the factors' comodule maps up to max_len.
// Returns an error description, or nothing when consistent.
std::optional<std::string> tensor_comodule_mismatch(const BialgebraSpec& spec,
                                                    const Representation& V,
                                                    const Representation& W, int max_len);

// An equioriented A-type line inside a quiver: the vertex order along the
// arrows and the position index of the first vertex (1 for finite lines,
// 0 for the A-infinity family).
struct LineInfo {
    std::vector<Vertex> order;
    std::vector<Arrow> step;  // step[k] : order[k] -> order[k+1]
    int offset = 0;
    int position(std::size_t k) const { return offset + static_cast<int>(k); }
};

std::optional<LineInfo> line_shape(const Quiver& q);

// V(lo, hi): one-dimensional spaces on positions lo..hi, identity maps.
struct Interval {
    int lo = 0;
    int hi = 0;
    friend auto operator<=>(const Interval&, const Interval&) = default;
    std::string str() const { return "V(" + std::to_string(lo) + "," + std::to_string(hi) + ")"; }
};

Representation interval_module(const Quiver& q, int lo, int hi);

struct IntervalMultiset {
    std::map<Interval, int> mult;  // positive multiplicities only

    void add(Interval i, int count = 1);
    int total_dim() const;
    bool is_zero() const { return mult.empty(); }
    friend bool operator==(const IntervalMultiset& a, const IntervalMultiset& b) {
        return a.mult == b.mult;
    }
    friend bool operator!=(const IntervalMultiset& a, const IntervalMultiset& b) { return !(a == b); }
    std::string str() const;
};

// Composite-map ranks r(s, t) over the support span, including r(s, s) =
// dim at position s. The complete isomorphism invariant for equioriented
// A-type representations.
std::map<std::pair<int, int>, int> rank_invariants(const Representation& rep);

// Krull-Schmidt decomposition via the rank formula
// mu(s,t) = r(s,t) - r(s-1,t) - r(s,t+1) + r(s-1,t+1).
IntervalMultiset barcode_decompose(const Representation& rep);

// Direct sum of interval modules with the given multiplicities.
Representation interval_direct_sum(const Quiver& q, const IntervalMultiset& summands);

struct CgEntry {
    Interval left;
    Interval right;
    IntervalMultiset decomposition;
};

// Tensor-and-decompose for every pair of intervals with endpoints <= bound.
std::vector<CgEntry> cg_table(const BialgebraSpec& spec, int bound);
std::string cg_table_str(const std::vector<CgEntry>& table);

// Representation-ring checks for the A-infinity structure: commutativity
// of decomposition classes, the recurrence
// [V(0,n+1)] = [V(0,1)][V(0,n)] - [V(1,1)][V(0,n-1)], and expressibility
// of every class in the generators [V(0,1)], [V(1,1)].
VerifyReport rep_ring_check(const BialgebraSpec& spec, int bound);

}  // namespace qsh

#endif
