#include "qsh/bialgebra.hpp"

#include <algorithm>
#include <set>

namespace qsh {

// -------------------------------------------------------------- VertexMonoid

VertexMonoid VertexMonoid::table(Vertex identity, std::vector<std::vector<Vertex>> products) {
    VertexMonoid m;
    m.kind_ = Kind::Table;
    m.identity_ = identity;
    m.table_ = std::move(products);
    return m;
}

VertexMonoid VertexMonoid::additive_naturals(int support_bound) {
    VertexMonoid m;
    m.kind_ = Kind::AdditiveNaturals;
    m.support_bound_ = support_bound;
    m.identity_ = Vertex{0};
    return m;
}

Vertex VertexMonoid::identity() const {
    return identity_;
}

Vertex VertexMonoid::product(Vertex g, Vertex h) const {
    if (kind_ == Kind::AdditiveNaturals) {
        if (g.id + h.id > support_bound_)
            throw support_bound_error("monoid product g" + std::to_string(g.id) + " * g" +
                                      std::to_string(h.id) + " exceeds support bound " +
                                      std::to_string(support_bound_));
        return Vertex{g.id + h.id};
    }
    Vertex r = table_entry(g, h);
    if (r.id < 0)
        throw std::domain_error("monoid table has no entry for (" + std::to_string(g.id) + ", " +
                                std::to_string(h.id) + ")");
    return r;
}

int VertexMonoid::size() const {
    return kind_ == Kind::AdditiveNaturals ? support_bound_ + 1 : static_cast<int>(table_.size());
}

Vertex VertexMonoid::table_entry(Vertex g, Vertex h) const {
    if (kind_ != Kind::Table) throw std::logic_error("table_entry on a rule-based monoid");
    if (g.id < 0 || g.id >= size() || h.id < 0 || h.id >= size())
        throw std::out_of_range("monoid table index out of range");
    return table_[static_cast<std::size_t>(g.id)][static_cast<std::size_t>(h.id)];
}

bool operator==(const VertexMonoid& a, const VertexMonoid& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == VertexMonoid::Kind::AdditiveNaturals) return a.support_bound_ == b.support_bound_;
    return a.identity_ == b.identity_ && a.table_ == b.table_;
}

// ------------------------------------------------------------ BimoduleAction

BimoduleAction BimoduleAction::table(Table left, Table right) {
    BimoduleAction a;
    a.kind_ = Kind::Table;
    a.left_ = std::move(left);
    a.right_ = std::move(right);
    return a;
}

BimoduleAction BimoduleAction::ainfinity_rule() {
    BimoduleAction a;
    a.kind_ = Kind::AInfinityRule;
    return a;
}

PathVector BimoduleAction::left(const Quiver& q, Vertex g, Arrow a) const {
    if (kind_ == Kind::AInfinityRule) {
        const int result = g.id + a.id;
        if (result + 1 > q.support_bound())
            throw support_bound_error("left action g" + std::to_string(g.id) + ".a" +
                                      std::to_string(a.id) + " exceeds support bound " +
                                      std::to_string(q.support_bound()));
        return PathVector::single(Path{Vertex{result}, {Arrow{result}}});
    }
    auto it = left_.find({g.id, a.id});
    return it == left_.end() ? PathVector() : it->second;
}

PathVector BimoduleAction::right(const Quiver& q, Arrow a, Vertex g) const {
    if (kind_ == Kind::AInfinityRule) {
        const int result = g.id + a.id;
        if (result + 1 > q.support_bound())
            throw support_bound_error("right action a" + std::to_string(a.id) + ".g" +
                                      std::to_string(g.id) + " exceeds support bound " +
                                      std::to_string(q.support_bound()));
        return PathVector::single(Path{Vertex{result}, {Arrow{result}}},
                                  q_power(static_cast<unsigned>(g.id)));
    }
    auto it = right_.find({a.id, g.id});
    return it == right_.end() ? PathVector() : it->second;
}

// ---------------------------------------------------------------- validation

namespace {

// g.(v) for a length-1 supported vector v.
PathVector act_left(const BialgebraSpec& spec, Vertex g, const PathVector& v) {
    PathVector out;
    for (const auto& [p, c] : v.terms())
        out += spec.action.left(spec.quiver, g, p.arrows.at(0)).scaled(c);
    return out;
}

PathVector act_right(const BialgebraSpec& spec, const PathVector& v, Vertex g) {
    PathVector out;
    for (const auto& [p, c] : v.terms())
        out += spec.action.right(spec.quiver, p.arrows.at(0), g).scaled(c);
    return out;
}

Path arrow_path(const Quiver& q, Arrow a) {
    return Path{q.source(a), {a}};
}

}  // namespace

ValidationReport validate_monoid(const Quiver& q, const VertexMonoid& m) {
    ValidationReport report;
    if (m.kind() == VertexMonoid::Kind::AdditiveNaturals) {
        if (q.kind() != Quiver::Kind::AInfinity)
            report.issues.push_back({"monoid", "additive rule requires the A-infinity family"});
        else if (m.size() != q.vertex_count())
            report.issues.push_back({"monoid", "additive rule bound differs from the quiver's"});
        return report;
    }
    const int n = q.vertex_count();
    if (m.size() != n) {
        report.issues.push_back({"monoid", "table size " + std::to_string(m.size()) +
                                               " does not match vertex count " + std::to_string(n)});
        return report;
    }
    if (m.identity().id < 0 || m.identity().id >= n) {
        report.issues.push_back({"monoid", "identity is not a vertex"});
        return report;
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Vertex r = m.table_entry(Vertex{g}, Vertex{h});
            if (r.id < 0 || r.id >= n)
                report.issues.push_back(
                    {"monoid totality", "no product declared for (" + q.vertex_name(Vertex{g}) +
                                            ", " + q.vertex_name(Vertex{h}) + ")"});
        }
    if (!report.ok()) return report;
    const Vertex e = m.identity();
    for (int g = 0; g < n; ++g) {
        Vertex v{g};
        if (m.product(e, v) != v || m.product(v, e) != v) {
            report.issues.push_back({"monoid identity", q.vertex_name(e) + " is not an identity for " +
                                                            q.vertex_name(v)});
        }
    }
    for (int g = 0; g < n && report.ok(); ++g)
        for (int h = 0; h < n && report.ok(); ++h)
            for (int k = 0; k < n; ++k) {
                Vertex gh_k = m.product(m.product(Vertex{g}, Vertex{h}), Vertex{k});
                Vertex g_hk = m.product(Vertex{g}, m.product(Vertex{h}, Vertex{k}));
                if (gh_k != g_hk) {
                    report.issues.push_back(
                        {"monoid associativity",
                         "(" + q.vertex_name(Vertex{g}) + "*" + q.vertex_name(Vertex{h}) + ")*" +
                             q.vertex_name(Vertex{k}) + " = " + q.vertex_name(gh_k) + " but " +
                             q.vertex_name(Vertex{g}) + "*(" + q.vertex_name(Vertex{h}) + "*" +
                             q.vertex_name(Vertex{k}) + ") = " + q.vertex_name(g_hk)});
                    break;
                }
            }
    return report;
}

namespace {

// (vertex, arrow) pairs over which a rule-based action is checkable; for
// tables this is simply everything.
struct ActionDomain {
    std::vector<std::pair<Vertex, Arrow>> pairs;
    std::vector<std::tuple<Vertex, Vertex, Arrow>> triples;
};

ActionDomain action_domain(const BialgebraSpec& spec) {
    ActionDomain dom;
    const Quiver& q = spec.quiver;
    if (q.kind() == Quiver::Kind::AInfinity && spec.action.kind() == BimoduleAction::Kind::AInfinityRule) {
        const int bound = q.support_bound();
        for (int i = 0; i + 1 <= bound; ++i)
            for (int j = 0; i + j + 1 <= bound; ++j) dom.pairs.emplace_back(Vertex{i}, Arrow{j});
        for (int i = 0; i + 1 <= bound; ++i)
            for (int j = 0; i + j + 1 <= bound; ++j)
                for (int k = 0; i + j + k + 1 <= bound; ++k)
                    dom.triples.emplace_back(Vertex{i}, Vertex{j}, Arrow{k});
        return dom;
    }
    for (Vertex g : q.vertices())
        for (Arrow a : q.arrows()) dom.pairs.emplace_back(g, a);
    for (Vertex g : q.vertices())
        for (Vertex h : q.vertices())
            for (Arrow a : q.arrows()) dom.triples.emplace_back(g, h, a);
    return dom;
}

}  // namespace

ValidationReport validate_bimodule(const BialgebraSpec& spec) {
    const Quiver& q = spec.quiver;
    ValidationReport report = validate_monoid(q, spec.monoid);
    if (!report.ok()) return report;

    if (spec.action.kind() == BimoduleAction::Kind::AInfinityRule &&
        q.kind() != Quiver::Kind::AInfinity) {
        report.issues.push_back({"action", "rule-based action requires the A-infinity family"});
        return report;
    }

    // table sanity: entries reference real cells and are length-1 supported
    if (spec.action.kind() == BimoduleAction::Kind::Table) {
        auto check_table = [&](const BimoduleAction::Table& table, bool left_side) {
            for (const auto& [key, value] : table) {
                const int vid = left_side ? key.first : key.second;
                const int aid = left_side ? key.second : key.first;
                const std::string where = left_side ? "left action" : "right action";
                if (!q.has_vertex(Vertex{vid}) || !q.has_arrow(Arrow{aid})) {
                    report.issues.push_back({where, "entry references an unknown vertex or arrow"});
                    continue;
                }
                for (const auto& [p, c] : value.terms()) {
                    (void)c;
                    if (p.length() != 1 || !path_valid(q, p))
                        report.issues.push_back(
                            {where, "value for (" + q.vertex_name(Vertex{vid}) + ", " +
                                        q.arrow_name(Arrow{aid}) + ") is not a span of arrows"});
                }
            }
        };
        check_table(spec.action.left_table(), true);
        check_table(spec.action.right_table(), false);
        if (!report.ok()) return report;
    }

    const VertexMonoid& mon = spec.monoid;
    const Vertex e = mon.identity();
    ActionDomain dom = action_domain(spec);

    // identity acts as identity on both sides
    for (Arrow a : q.arrows()) {
        PathVector unit = PathVector::single(arrow_path(q, a));
        if (spec.action.left(q, e, a) != unit)
            report.issues.push_back({"bimodule identity", q.vertex_name(e) + "." + q.arrow_name(a) +
                                                              " != " + q.arrow_name(a)});
        if (spec.action.right(q, a, e) != unit)
            report.issues.push_back({"bimodule identity", q.arrow_name(a) + "." + q.vertex_name(e) +
                                                              " != " + q.arrow_name(a)});
    }

    // bicomodule-map condition: endpoints of every arrow in g.a / a.g are
    // the monoid translates of the endpoints of a
    for (const auto& [g, a] : dom.pairs) {
        const PathVector left_value = spec.action.left(q, g, a);
        for (const auto& [p, c] : left_value.terms()) {
            (void)c;
            Arrow b = p.arrows[0];
            if (q.source(b) != mon.product(g, q.source(a)) ||
                q.target(b) != mon.product(g, q.target(a))) {
                report.issues.push_back(
                    {"bicomodule map", q.vertex_name(g) + "." + q.arrow_name(a) + " contains " +
                                           q.arrow_name(b) + " with wrong endpoints"});
            }
        }
        const PathVector right_value = spec.action.right(q, a, g);
        for (const auto& [p, c] : right_value.terms()) {
            (void)c;
            Arrow b = p.arrows[0];
            if (q.source(b) != mon.product(q.source(a), g) ||
                q.target(b) != mon.product(q.target(a), g)) {
                report.issues.push_back(
                    {"bicomodule map", q.arrow_name(a) + "." + q.vertex_name(g) + " contains " +
                                           q.arrow_name(b) + " with wrong endpoints"});
            }
        }
        if (report.issues.size() > 20) return report;
    }

    // bimodule axioms
    for (const auto& [g, h, a] : dom.triples) {
        const PathVector ha = spec.action.left(q, h, a);
        if (spec.action.left(q, mon.product(g, h), a) != act_left(spec, g, ha)) {
            report.issues.push_back({"bimodule associativity",
                                     "(" + q.vertex_name(g) + "*" + q.vertex_name(h) + ")." +
                                         q.arrow_name(a) + " != " + q.vertex_name(g) + ".(" +
                                         q.vertex_name(h) + "." + q.arrow_name(a) + ")"});
        }
        const PathVector ag = spec.action.right(q, a, g);
        if (spec.action.right(q, a, mon.product(g, h)) != act_right(spec, ag, h)) {
            report.issues.push_back({"bimodule associativity",
                                     q.arrow_name(a) + ".(" + q.vertex_name(g) + "*" +
                                         q.vertex_name(h) + ") != (" + q.arrow_name(a) + "." +
                                         q.vertex_name(g) + ")." + q.vertex_name(h)});
        }
        const PathVector ga = spec.action.left(q, g, a);
        if (act_right(spec, ga, h) != act_left(spec, g, spec.action.right(q, a, h))) {
            report.issues.push_back({"bimodule associativity",
                                     "(" + q.vertex_name(g) + "." + q.arrow_name(a) + ")." +
                                         q.vertex_name(h) + " != " + q.vertex_name(g) + ".(" +
                                         q.arrow_name(a) + "." + q.vertex_name(h) + ")"});
        }
        if (report.issues.size() > 20) return report;
    }

    return report;
}

ValidationReport validate_spec(const BialgebraSpec& spec) {
    ValidationReport quiver_report = spec.quiver.validate();
    if (!quiver_report.ok()) return quiver_report;
    return validate_bimodule(spec);
}

// ------------------------------------------------------------- constructions

BialgebraSpec trivial_bialgebra(const Quiver& q, Vertex e, std::optional<Vertex> z) {
    const int n = q.vertex_count();
    if (!q.has_vertex(e)) throw std::domain_error("identity vertex is not in the quiver");
    if (n == 1) {
        if (z.has_value())
            throw std::domain_error("a single-vertex quiver takes no zero element");
    } else {
        if (!z.has_value())
            throw std::domain_error("a zero element is required when the quiver has >= 2 vertices");
        if (!q.has_vertex(*z)) throw std::domain_error("zero vertex is not in the quiver");
        if (*z == e) throw std::domain_error("the zero element must differ from the identity");
    }

    std::vector<std::vector<Vertex>> table(static_cast<std::size_t>(n),
                                           std::vector<Vertex>(static_cast<std::size_t>(n)));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Vertex r;
            if (g == e.id)
                r = Vertex{h};
            else if (h == e.id)
                r = Vertex{g};
            else
                r = *z;  // includes g == h and either factor equal to z
            table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = n == 1 ? e : r;
        }

    BimoduleAction::Table left, right;
    for (Arrow a : q.arrows()) {
        left[{e.id, a.id}] = PathVector::single(arrow_path(q, a));
        right[{a.id, e.id}] = PathVector::single(arrow_path(q, a));
    }

    return BialgebraSpec{q, VertexMonoid::table(e, std::move(table)),
                         BimoduleAction::table(std::move(left), std::move(right))};
}

BialgebraSpec ainf_bialgebra(int support_bound) {
    return BialgebraSpec{make_ainfinity(support_bound), VertexMonoid::additive_naturals(support_bound),
                         BimoduleAction::ainfinity_rule()};
}

// ------------------------------------------------------------------- product

PathVector shuffle_product(const BialgebraSpec& spec, const Path& alpha, const Path& beta) {
    const Quiver& q = spec.quiver;
    const int m = alpha.length();
    const int n = beta.length();
    if (m == 0 && n == 0)
        return PathVector::single(trivial_path(spec.monoid.product(alpha.source, beta.source)));

    PathVector result;
    for (const auto& bits : binary_sequences(m + n, m)) {
        // slotwise brackets: bit 1 reads an arrow of alpha against the
        // current vertex of beta (right action), bit 0 the other way
        std::vector<PathVector> slots;
        slots.reserve(static_cast<std::size_t>(m + n));
        Vertex at_alpha = alpha.source;
        Vertex at_beta = beta.source;
        std::size_t ia = 0, ib = 0;
        bool dead = false;
        for (int i = 0; i < m + n; ++i) {
            PathVector bracket;
            if (bits[static_cast<std::size_t>(i)]) {
                Arrow a = alpha.arrows[ia++];
                bracket = spec.action.right(q, a, at_beta);
                at_alpha = q.target(a);
            } else {
                Arrow b = beta.arrows[ib++];
                bracket = spec.action.left(q, at_alpha, b);
                at_beta = q.target(b);
            }
            if (bracket.is_zero()) {
                dead = true;
                break;
            }
            for (const auto& [p, c] : bracket.terms()) {
                (void)c;
                if (p.length() != 1)
                    throw std::invalid_argument(
                        "malformed spec: bimodule action is not supported in length 1");
            }
            slots.push_back(std::move(bracket));
        }
        if (dead) continue;

        // concatenate slot results; endpoint mismatches contribute zero
        struct Partial {
            Path path;
            RationalFunction coeff;
        };
        std::vector<Partial> partials{{Path{}, RationalFunction(1)}};
        bool first = true;
        for (const PathVector& slot : slots) {
            std::vector<Partial> next;
            for (const Partial& part : partials) {
                for (const auto& [piece, c] : slot.terms()) {
                    if (first) {
                        next.push_back({piece, part.coeff * c});
                    } else {
                        if (piece.source != path_target(q, part.path)) continue;
                        Path joined = part.path;
                        joined.arrows.push_back(piece.arrows[0]);
                        next.push_back({joined, part.coeff * c});
                    }
                }
            }
            partials = std::move(next);
            first = false;
            if (partials.empty()) break;
        }
        for (const Partial& part : partials) result.add(part.path, part.coeff);
    }
    return result;
}

PathVector product_vector(const BialgebraSpec& spec, const PathVector& u, const PathVector& v) {
    PathVector out;
    for (const auto& [p, cp] : u.terms())
        for (const auto& [r, cr] : v.terms()) out += shuffle_product(spec, p, r).scaled(cp * cr);
    return out;
}

TensorVector2 tensor2_product(const BialgebraSpec& spec, const TensorVector2& a,
                              const TensorVector2& b) {
    TensorVector2 out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            PathVector left = shuffle_product(spec, ka.first, kb.first);
            if (left.is_zero()) continue;
            PathVector right = shuffle_product(spec, ka.second, kb.second);
            for (const auto& [lp, lc] : left.terms())
                for (const auto& [rp, rc] : right.terms()) out.add(lp, rp, ca * cb * lc * rc);
        }
    return out;
}

Path ainf_path(int i, int l) {
    if (i < 0 || l < 0) throw std::domain_error("ainf_path needs nonnegative indices");
    Path p{Vertex{i}, {}};
    for (int k = 0; k < l; ++k) p.arrows.push_back(Arrow{i + k});
    return p;
}

ClosedProduct ainf_closed_product(int i, int l, int j, int m) {
    if (i < 0 || l < 0 || j < 0 || m < 0)
        throw std::domain_error("ainf_closed_product needs nonnegative indices");
    RationalFunction coeff = q_power(static_cast<unsigned>(j) * static_cast<unsigned>(l)) *
                             quantum_binomial(l + m, m);
    return ClosedProduct{coeff, ainf_path(i + j, l + m)};
}

// -------------------------------------------------------------- verification

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::str() const {
    std::string out = header;
    for (const auto& check : checks) {
        out += "\n";
        out += check.pass ? "[PASS] " : "[FAIL] ";
        out += check.name + " (" + std::to_string(check.cases) + " cases)";
        if (!check.pass) out += "\n       counterexample: " + check.counterexample;
    }
    return out;
}

namespace {

// All paths of length <= max_len; on the A-infinity family only those that
// exist within the support bound.
std::vector<Path> paths_up_to(const Quiver& q, int max_len) {
    std::vector<Path> out;
    for (Vertex v : q.vertices()) {
        int limit = max_len;
        if (q.kind() == Quiver::Kind::AInfinity) limit = std::min(limit, q.support_bound() - v.id);
        for (int len = 0; len <= limit; ++len) {
            auto batch = paths_from(q, v, len);
            out.insert(out.end(), batch.begin(), batch.end());
        }
    }
    std::sort(out.begin(), out.end(), PathOrder{});
    return out;
}

int path_weight(const Quiver& q, const Path& p) {
    return q.kind() == Quiver::Kind::AInfinity ? p.source.id + p.length() : 0;
}

TensorVectorN expand_delta_left(const Quiver& q, const TensorVector2& t) {
    TensorVectorN out;
    for (const auto& [key, c] : t.terms()) {
        const TensorVector2 inner_delta = delta(q, key.first);
        for (const auto& [inner, ci] : inner_delta.terms())
            out.add({inner.first, inner.second, key.second}, c * ci);
    }
    return out;
}

TensorVectorN expand_delta_right(const Quiver& q, const TensorVector2& t) {
    TensorVectorN out;
    for (const auto& [key, c] : t.terms()) {
        const TensorVector2 inner_delta = delta(q, key.second);
        for (const auto& [inner, ci] : inner_delta.terms())
            out.add({key.first, inner.first, inner.second}, c * ci);
    }
    return out;
}

}  // namespace

VerifyReport verify_bialgebra(const BialgebraSpec& spec, int max_len) {
    if (max_len < 1) throw std::domain_error("verify_bialgebra needs max_len >= 1");
    const Quiver& q = spec.quiver;
    const bool bounded = q.kind() == Quiver::Kind::AInfinity;

    VerifyReport report;
    report.header = "bialgebra axioms checked on all path tuples of total length <= " +
                    std::to_string(max_len);
    if (bounded)
        report.header += "; A-infinity tuples restricted to total source index + length <= " +
                         std::to_string(q.support_bound()) +
                         " so that every intermediate product stays inside the truncation";
    report.header += ". The product is graded and determined by its values on paths, so the axioms "
                     "hold up to degree " +
                     std::to_string(max_len) + " within these bounds.";

    VerifyCheck spec_check{"spec validation", 1, true, ""};
    ValidationReport validation = validate_spec(spec);
    if (!validation.ok()) {
        spec_check.pass = false;
        spec_check.counterexample = validation.str();
    }
    report.checks.push_back(spec_check);
    if (!spec.quiver.validate().ok()) return report;

    const std::vector<Path> paths = paths_up_to(q, max_len);
    const int bound = bounded ? q.support_bound() : 0;

    try {

    VerifyCheck coassoc{"coassociativity", 0, true, ""};
    VerifyCheck counit_law{"counit law", 0, true, ""};
    for (const Path& p : paths) {
        if (coassoc.pass) {
            ++coassoc.cases;
            TensorVector2 d = delta(q, p);
            TensorVectorN left = expand_delta_left(q, d);
            TensorVectorN right = expand_delta_right(q, d);
            TensorVectorN iterated = delta_iterated(q, p, 2);
            if (!(left == right && left == iterated)) {
                coassoc.pass = false;
                coassoc.counterexample = "(Delta(x)id)Delta != (id(x)Delta)Delta on " + path_str(q, p);
            }
        }
        if (counit_law.pass) {
            ++counit_law.cases;
            PathVector from_left, from_right;
            const TensorVector2 dp = delta(q, p);
            for (const auto& [key, c] : dp.terms()) {
                from_left.add(key.second, c * counit(PathVector::single(key.first)));
                from_right.add(key.first, c * counit(PathVector::single(key.second)));
            }
            const PathVector expected = PathVector::single(p);
            if (from_left != expected || from_right != expected) {
                counit_law.pass = false;
                counit_law.counterexample = "counit law fails on " + path_str(q, p);
            }
        }
    }
    report.checks.push_back(coassoc);
    report.checks.push_back(counit_law);

    VerifyCheck unit{"unit element", 0, true, ""};
    const Path e = trivial_path(spec.monoid.identity());
    for (const Path& p : paths) {
        if (!unit.pass) break;
        ++unit.cases;
        const PathVector expected = PathVector::single(p);
        if (shuffle_product(spec, e, p) != expected || shuffle_product(spec, p, e) != expected) {
            unit.pass = false;
            unit.counterexample = "identity vertex is not a unit on " + path_str(q, p);
        }
    }
    report.checks.push_back(unit);

    VerifyCheck delta_mult{"Delta multiplicativity", 0, true, ""};
    VerifyCheck counit_mult{"counit multiplicativity", 0, true, ""};
    VerifyCheck grading{"length grading", 0, true, ""};
    for (const Path& alpha : paths) {
        for (const Path& beta : paths) {
            if (alpha.length() + beta.length() > max_len) continue;
            if (bounded && path_weight(q, alpha) + path_weight(q, beta) > bound) continue;
            const PathVector prod = shuffle_product(spec, alpha, beta);
            const std::string pair_str = path_str(q, alpha) + " * " + path_str(q, beta);
            if (grading.pass) {
                ++grading.cases;
                for (const auto& [p, c] : prod.terms()) {
                    (void)c;
                    if (p.length() != alpha.length() + beta.length()) {
                        grading.pass = false;
                        grading.counterexample =
                            pair_str + " contains the length-" + std::to_string(p.length()) +
                            " term " + path_str(q, p);
                        break;
                    }
                }
            }
            if (delta_mult.pass) {
                ++delta_mult.cases;
                TensorVector2 lhs = delta(q, prod);
                TensorVector2 rhs = tensor2_product(spec, delta(q, alpha), delta(q, beta));
                if (lhs != rhs) {
                    delta_mult.pass = false;
                    delta_mult.counterexample = "Delta(" + pair_str + ") = " + tensor2_str(q, lhs) +
                                                " but Delta(alpha)Delta(beta) = " +
                                                tensor2_str(q, rhs);
                }
            }
            if (counit_mult.pass) {
                ++counit_mult.cases;
                RationalFunction lhs = counit(prod);
                RationalFunction rhs = counit(PathVector::single(alpha)) *
                                       counit(PathVector::single(beta));
                if (lhs != rhs) {
                    counit_mult.pass = false;
                    counit_mult.counterexample = "counit(" + pair_str + ") = " + lhs.str() +
                                                 " != " + rhs.str();
                }
            }
        }
    }
    report.checks.push_back(delta_mult);
    report.checks.push_back(counit_mult);
    report.checks.push_back(grading);

    VerifyCheck assoc{"associativity", 0, true, ""};
    for (const Path& alpha : paths) {
        if (!assoc.pass) break;
        for (const Path& beta : paths) {
            if (!assoc.pass) break;
            if (alpha.length() + beta.length() > max_len) continue;
            if (bounded && path_weight(q, alpha) + path_weight(q, beta) > bound) continue;
            const PathVector ab = shuffle_product(spec, alpha, beta);
            for (const Path& gamma : paths) {
                if (alpha.length() + beta.length() + gamma.length() > max_len) continue;
                if (bounded && path_weight(q, alpha) + path_weight(q, beta) +
                                   path_weight(q, gamma) > bound)
                    continue;
                ++assoc.cases;
                const PathVector lhs = product_vector(spec, ab, PathVector::single(gamma));
                const PathVector rhs = product_vector(spec, PathVector::single(alpha),
                                                      shuffle_product(spec, beta, gamma));
                if (lhs != rhs) {
                    assoc.pass = false;
                    assoc.counterexample = "(" + path_str(q, alpha) + " * " + path_str(q, beta) +
                                           ") * " + path_str(q, gamma) + " = " +
                                           path_vector_str(q, lhs) + " but right association gives " +
                                           path_vector_str(q, rhs);
                    break;
                }
            }
        }
    }
    report.checks.push_back(assoc);

    } catch (const std::exception& e) {
        report.checks.push_back({"axiom sweep execution", 0, false, e.what()});
    }

    return report;
}

// ------------------------------------------------------- Gabriel-type helpers

std::optional<Vertex> has_sink_or_source(const Quiver& q) {
    for (Vertex v : q.vertices()) {
        if (q.arrows_from(v).empty()) return v;  // sink
        if (q.arrows_into(v).empty()) return v;  // source
    }
    return std::nullopt;
}

ClosureResult check_degree1_closure(const BialgebraSpec& spec) {
    if (spec.quiver.kind() != Quiver::Kind::Finite)
        throw std::invalid_argument("check_degree1_closure requires a finite quiver");
    const Quiver& q = spec.quiver;
    ClosureResult result;
    for (Arrow a : q.arrows())
        for (Arrow b : q.arrows()) {
            ++result.pairs_checked;
            PathVector prod = shuffle_product(spec, arrow_path(q, a), arrow_path(q, b));
            PathVector surviving = graded_component(prod, 2);
            if (!surviving.is_zero()) {
                result.ok = false;
                result.counterexample = ClosureCounterexample{a, b, surviving};
                return result;
            }
        }
    return result;
}

Quiver attach_quiver(const IsotypicMatrix& iso) {
    const int n = static_cast<int>(iso.vertex_names.size());
    std::vector<Quiver::ArrowDecl> arrows;
    int counter = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto it = iso.dims.find({g, h});
            if (it == iso.dims.end()) continue;
            if (it->second < 0) throw std::domain_error("isotypic dimensions must be nonnegative");
            for (int k = 0; k < it->second; ++k) {
                ++counter;
                arrows.push_back({"a" + std::to_string(counter),
                                  iso.vertex_names[static_cast<std::size_t>(h)],
                                  iso.vertex_names[static_cast<std::size_t>(g)]});
            }
        }
    return Quiver::finite(iso.vertex_names, std::move(arrows));
}

IsotypicMatrix read_isotypic(const Quiver& q, const VertexMonoid& monoid) {
    IsotypicMatrix iso;
    for (Vertex v : q.vertices()) iso.vertex_names.push_back(q.vertex_name(v));
    iso.monoid = monoid;
    for (Arrow a : q.arrows()) {
        auto key = std::make_pair(q.target(a).id, q.source(a).id);
        ++iso.dims[key];
    }
    return iso;
}

// -------------------------------------------------------------- classification

namespace {

struct UndirectedEdge {
    int u, v;
    friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

}  // namespace

Classification classify_finite_type(const Quiver& q) {
    Classification out;
    const int n = q.vertex_count();

    // directed acyclicity via DFS coloring
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    out.acyclic = true;
    auto dfs = [&](auto&& self, int v) -> bool {
        color[static_cast<std::size_t>(v)] = 1;
        for (Arrow a : q.arrows_from(Vertex{v})) {
            int w = q.target(a).id;
            if (color[static_cast<std::size_t>(w)] == 1) return false;
            if (color[static_cast<std::size_t>(w)] == 0 && !self(self, w)) return false;
        }
        color[static_cast<std::size_t>(v)] = 2;
        return true;
    };
    for (int v = 0; v < n && out.acyclic; ++v)
        if (color[static_cast<std::size_t>(v)] == 0 && !dfs(dfs, v)) out.acyclic = false;

    // connected components of the underlying undirected multigraph
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        int id = comp_count++;
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            };
            for (Arrow a : q.arrows_from(Vertex{v})) visit(q.target(a).id);
            for (Arrow a : q.arrows_into(Vertex{v})) visit(q.source(a).id);
        }
    }

    out.finite_type = true;
    for (int id = 0; id < comp_count; ++id) {
        ComponentClass cls;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == id) cls.vertices.push_back(Vertex{v});

        long edges = 0;
        bool loop = false;
        std::string loop_at;
        std::map<UndirectedEdge, int> pair_count;
        std::map<int, int> degree;
        for (Arrow a : q.arrows()) {
            int u = q.source(a).id, v = q.target(a).id;
            if (comp[static_cast<std::size_t>(u)] != id) continue;
            ++edges;
            if (u == v) {
                loop = true;
                loop_at = q.vertex_name(Vertex{u});
                continue;
            }
            ++pair_count[{std::min(u, v), std::max(u, v)}];
            ++degree[u];
            ++degree[v];
        }

        const long vcount = static_cast<long>(cls.vertices.size());
        if (loop) {
            cls.reason = "loop at vertex " + loop_at;
        } else {
            std::string multi;
            for (const auto& [edge, count] : pair_count)
                if (count > 1) {
                    multi = "multiple edges between " + q.vertex_name(Vertex{edge.u}) + " and " +
                            q.vertex_name(Vertex{edge.v});
                    break;
                }
            if (!multi.empty()) {
                cls.reason = multi;
            } else if (edges != vcount - 1) {
                cls.reason = "contains a cycle";
            } else {
                // a tree: read the branch structure
                std::vector<int> branch;
                int max_degree = 0;
                for (Vertex v : cls.vertices) {
                    int d = degree.count(v.id) ? degree[v.id] : 0;
                    max_degree = std::max(max_degree, d);
                    if (d >= 3) branch.push_back(v.id);
                }
                if (branch.empty()) {
                    cls.is_dynkin = true;
                    cls.label = "A" + std::to_string(vcount);
                } else if (branch.size() > 1) {
                    cls.reason = "more than one branching vertex";
                } else if (max_degree > 3) {
                    cls.reason = "vertex " + q.vertex_name(Vertex{branch[0]}) + " has degree " +
                                 std::to_string(max_degree);
                } else {
                    // legs from the unique degree-3 vertex
                    const int center = branch[0];
                    std::vector<int> legs;
                    std::set<std::pair<int, int>> adj;
                    for (const auto& [edge, count] : pair_count) {
                        (void)count;
                        adj.insert({edge.u, edge.v});
                        adj.insert({edge.v, edge.u});
                    }
                    auto neighbors = [&](int v) {
                        std::vector<int> nb;
                        for (auto it = adj.lower_bound({v, -1}); it != adj.end() && it->first == v;
                             ++it)
                            nb.push_back(it->second);
                        return nb;
                    };
                    for (int first : neighbors(center)) {
                        int prev = center, cur = first, len = 1;
                        while (true) {
                            auto nb = neighbors(cur);
                            if (nb.size() != 2) break;  // leaf (or would be another branch)
                            int next = nb[0] == prev ? nb[1] : nb[0];
                            prev = cur;
                            cur = next;
                            ++len;
                        }
                        legs.push_back(len);
                    }
                    std::sort(legs.begin(), legs.end());
                    if (legs.size() == 3 && legs[0] == 1 && legs[1] == 1) {
                        cls.is_dynkin = true;
                        cls.label = "D" + std::to_string(vcount);
                    } else if (legs == std::vector<int>{1, 2, 2}) {
                        cls.is_dynkin = true;
                        cls.label = "E6";
                    } else if (legs == std::vector<int>{1, 2, 3}) {
                        cls.is_dynkin = true;
                        cls.label = "E7";
                    } else if (legs == std::vector<int>{1, 2, 4}) {
                        cls.is_dynkin = true;
                        cls.label = "E8";
                    } else {
                        std::string shape;
                        for (int len : legs) shape += (shape.empty() ? "" : ",") + std::to_string(len);
                        cls.reason = "branch legs (" + shape + ") are not of ADE shape";
                    }
                }
            }
        }
        if (!cls.is_dynkin) out.finite_type = false;
        out.components.push_back(std::move(cls));
    }
    return out;
}

std::string Classification::str(const Quiver& q) const {
    std::string out;
    for (const auto& cls : components) {
        std::string verts;
        for (Vertex v : cls.vertices) verts += (verts.empty() ? "" : " ") + q.vertex_name(v);
        out += "component {" + verts + "}: ";
        out += cls.is_dynkin ? cls.label : "not Dynkin (" + cls.reason + ")";
        out += "\n";
    }
    out += finite_type ? "finite representation type" : "not of finite representation type";
    out += acyclic ? "; acyclic" : "; has a directed cycle";
    return out;
}

}  // namespace qsh
