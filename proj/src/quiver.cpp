#include "qsh/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "qsh/scalars.hpp"  // parse_error

namespace qsh {

std::string ValidationReport::str() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += "\n";
        out += issue.subject + ": " + issue.message;
    }
    return out;
}

// -------------------------------------------------------------------- Quiver

Quiver Quiver::finite(std::vector<std::string> vertex_names, std::vector<ArrowDecl> arrows) {
    Quiver q;
    q.kind_ = Kind::Finite;
    q.vertex_names_ = std::move(vertex_names);
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(q.vertex_names_.size()); ++i)
        index.emplace(q.vertex_names_[static_cast<std::size_t>(i)], i);
    for (auto& decl : arrows) {
        ArrowRec rec;
        rec.name = decl.name;
        rec.source_name = decl.source;
        rec.target_name = decl.target;
        auto s = index.find(decl.source);
        auto t = index.find(decl.target);
        rec.source = s == index.end() ? -1 : s->second;
        rec.target = t == index.end() ? -1 : t->second;
        q.arrows_.push_back(std::move(rec));
    }
    return q;
}

Quiver Quiver::ainfinity(int support_bound) {
    if (support_bound < 1) throw std::domain_error("ainfinity support bound must be >= 1");
    Quiver q;
    q.kind_ = Kind::AInfinity;
    q.support_bound_ = support_bound;
    return q;
}

int Quiver::vertex_count() const {
    return kind_ == Kind::Finite ? static_cast<int>(vertex_names_.size()) : support_bound_ + 1;
}

std::vector<Vertex> Quiver::vertices() const {
    std::vector<Vertex> out;
    const int n = vertex_count();
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(Vertex{i});
    return out;
}

bool Quiver::has_vertex(Vertex v) const {
    return v.id >= 0 && v.id < vertex_count();
}

void Quiver::require_vertex(Vertex v) const {
    if (!has_vertex(v)) {
        if (kind_ == Kind::AInfinity && v.id > support_bound_)
            throw support_bound_error("vertex g" + std::to_string(v.id) + " exceeds support bound " +
                                      std::to_string(support_bound_));
        throw std::out_of_range("no vertex with id " + std::to_string(v.id));
    }
}

std::string Quiver::vertex_name(Vertex v) const {
    require_vertex(v);
    if (kind_ == Kind::AInfinity) return "g" + std::to_string(v.id);
    return vertex_names_[static_cast<std::size_t>(v.id)];
}

std::optional<Vertex> Quiver::find_vertex(const std::string& name) const {
    if (kind_ == Kind::AInfinity) {
        if (name.size() < 2 || name.size() > 10 || name[0] != 'g') return std::nullopt;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        int id = std::stoi(name.substr(1));
        if (id > support_bound_) return std::nullopt;
        return Vertex{id};
    }
    for (int i = 0; i < static_cast<int>(vertex_names_.size()); ++i)
        if (vertex_names_[static_cast<std::size_t>(i)] == name) return Vertex{i};
    return std::nullopt;
}

int Quiver::arrow_count() const {
    return kind_ == Kind::Finite ? static_cast<int>(arrows_.size()) : support_bound_;
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    const int n = arrow_count();
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(Arrow{i});
    return out;
}

bool Quiver::has_arrow(Arrow a) const {
    return a.id >= 0 && a.id < arrow_count();
}

void Quiver::require_arrow(Arrow a) const {
    if (!has_arrow(a)) {
        if (kind_ == Kind::AInfinity && a.id >= support_bound_)
            throw support_bound_error("arrow a" + std::to_string(a.id) + " exceeds support bound " +
                                      std::to_string(support_bound_));
        throw std::out_of_range("no arrow with id " + std::to_string(a.id));
    }
}

std::string Quiver::arrow_name(Arrow a) const {
    require_arrow(a);
    if (kind_ == Kind::AInfinity) return "a" + std::to_string(a.id);
    return arrows_[static_cast<std::size_t>(a.id)].name;
}

std::optional<Arrow> Quiver::find_arrow(const std::string& name) const {
    if (kind_ == Kind::AInfinity) {
        if (name.size() < 2 || name.size() > 10 || name[0] != 'a') return std::nullopt;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        int id = std::stoi(name.substr(1));
        if (id >= support_bound_) return std::nullopt;
        return Arrow{id};
    }
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
        if (arrows_[static_cast<std::size_t>(i)].name == name) return Arrow{i};
    return std::nullopt;
}

Vertex Quiver::source(Arrow a) const {
    require_arrow(a);
    if (kind_ == Kind::AInfinity) return Vertex{a.id};
    return Vertex{arrows_[static_cast<std::size_t>(a.id)].source};
}

Vertex Quiver::target(Arrow a) const {
    require_arrow(a);
    if (kind_ == Kind::AInfinity) return Vertex{a.id + 1};
    return Vertex{arrows_[static_cast<std::size_t>(a.id)].target};
}

std::vector<Arrow> Quiver::arrows_from(Vertex v) const {
    require_vertex(v);
    std::vector<Arrow> out;
    if (kind_ == Kind::AInfinity) {
        if (v.id < support_bound_) out.push_back(Arrow{v.id});
        return out;
    }
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
        if (arrows_[static_cast<std::size_t>(i)].source == v.id) out.push_back(Arrow{i});
    return out;
}

std::vector<Arrow> Quiver::arrows_into(Vertex v) const {
    require_vertex(v);
    std::vector<Arrow> out;
    if (kind_ == Kind::AInfinity) {
        if (v.id >= 1) out.push_back(Arrow{v.id - 1});
        return out;
    }
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
        if (arrows_[static_cast<std::size_t>(i)].target == v.id) out.push_back(Arrow{i});
    return out;
}

ValidationReport Quiver::validate() const {
    ValidationReport report;
    if (kind_ == Kind::AInfinity) return report;
    std::set<std::string> seen;
    for (const auto& name : vertex_names_)
        if (!seen.insert(name).second)
            report.issues.push_back({"vertex '" + name + "'", "duplicate vertex name"});
    seen.clear();
    for (const auto& rec : arrows_) {
        if (!seen.insert(rec.name).second)
            report.issues.push_back({"arrow '" + rec.name + "'", "duplicate arrow name"});
        if (rec.source < 0)
            report.issues.push_back(
                {"arrow '" + rec.name + "'", "undeclared source vertex '" + rec.source_name + "'"});
        if (rec.target < 0)
            report.issues.push_back(
                {"arrow '" + rec.name + "'", "undeclared target vertex '" + rec.target_name + "'"});
    }
    return report;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Quiver::Kind::AInfinity) return a.support_bound_ == b.support_bound_;
    if (a.vertex_names_ != b.vertex_names_) return false;
    if (a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
        const auto& x = a.arrows_[i];
        const auto& y = b.arrows_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

// ------------------------------------------------------------------ builtins

Quiver make_kronecker(int n) {
    if (n < 1) throw std::domain_error("kronecker quiver needs n >= 1");
    std::vector<Quiver::ArrowDecl> arrows;
    for (int i = 1; i <= n; ++i) arrows.push_back({"a" + std::to_string(i), "e", "z"});
    return Quiver::finite({"e", "z"}, std::move(arrows));
}

Quiver make_subspace(int n) {
    if (n < 1) throw std::domain_error("subspace quiver needs n >= 1");
    std::vector<std::string> names = {"e"};
    std::vector<Quiver::ArrowDecl> arrows;
    for (int i = 1; i <= n; ++i) {
        names.push_back("f" + std::to_string(i));
        arrows.push_back({"a" + std::to_string(i), "f" + std::to_string(i), "e"});
    }
    return Quiver::finite(std::move(names), std::move(arrows));
}

Quiver make_linear_a(int n) {
    if (n < 2) throw std::domain_error("linearA quiver needs n >= 2");
    std::vector<std::string> names;
    std::vector<Quiver::ArrowDecl> arrows;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 1; i < n; ++i)
        arrows.push_back({"a" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
    return Quiver::finite(std::move(names), std::move(arrows));
}

Quiver make_ainfinity(int support_bound) {
    return Quiver::ainfinity(support_bound);
}

Quiver builtin_quiver(const std::string& name, int parameter) {
    if (name == "kronecker") return make_kronecker(parameter);
    if (name == "subspace") return make_subspace(parameter);
    if (name == "linearA") return make_linear_a(parameter);
    if (name == "ainfinity") return make_ainfinity(parameter);
    throw std::invalid_argument("unknown builtin quiver '" + name + "'");
}

// --------------------------------------------------------------------- paths

Path trivial_path(Vertex v) {
    return Path{v, {}};
}

Vertex path_target(const Quiver& q, const Path& p) {
    return p.trivial() ? p.source : q.target(p.arrows.back());
}

bool path_valid(const Quiver& q, const Path& p) {
    if (!q.has_vertex(p.source)) return false;
    Vertex at = p.source;
    for (Arrow a : p.arrows) {
        if (!q.has_arrow(a) || q.source(a) != at) return false;
        at = q.target(a);
    }
    return true;
}

std::string path_str(const Quiver& q, const Path& p) {
    if (p.trivial()) return q.vertex_name(p.source);
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out += q.arrow_name(*it);
    return out;
}

Path concat(const Quiver& q, const Path& later, const Path& earlier) {
    if (later.source != path_target(q, earlier))
        throw std::invalid_argument("cannot concatenate: " + path_str(q, later) + " starts at " +
                                    q.vertex_name(later.source) + " but " + path_str(q, earlier) +
                                    " ends at " + q.vertex_name(path_target(q, earlier)));
    Path out = earlier;
    out.arrows.insert(out.arrows.end(), later.arrows.begin(), later.arrows.end());
    return out;
}

namespace {

void extend_paths(const Quiver& q, const Path& prefix, Vertex at, int remaining,
                  std::vector<Path>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (Arrow a : q.arrows_from(at)) {
        Path next = prefix;
        next.arrows.push_back(a);
        extend_paths(q, next, q.target(a), remaining - 1, out);
    }
}

}  // namespace

std::vector<Path> paths_from(const Quiver& q, Vertex v, int length) {
    if (length < 0) throw std::domain_error("path length must be nonnegative");
    if (q.kind() == Quiver::Kind::AInfinity && v.id + length > q.support_bound())
        throw support_bound_error("paths of length " + std::to_string(length) + " from g" +
                                  std::to_string(v.id) + " exceed support bound " +
                                  std::to_string(q.support_bound()));
    if (!q.has_vertex(v)) throw std::out_of_range("paths_from: unknown vertex");
    std::vector<Path> out;
    extend_paths(q, trivial_path(v), v, length, out);
    std::sort(out.begin(), out.end(), PathOrder{});
    return out;
}

// --------------------------------------------------------------- thin splits

namespace {

void enumerate_bits(int n, int ones, std::vector<std::uint8_t>& current,
                    std::vector<std::vector<std::uint8_t>>& out) {
    if (static_cast<int>(current.size()) == n) {
        if (ones == 0) out.push_back(current);
        return;
    }
    const int slots_left = n - static_cast<int>(current.size());
    // bit 0 first gives lexicographic order
    if (ones < slots_left) {
        current.push_back(0);
        enumerate_bits(n, ones, current, out);
        current.pop_back();
    }
    if (ones > 0) {
        current.push_back(1);
        enumerate_bits(n, ones - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::uint8_t>> binary_sequences(int n, int ones) {
    if (n < 0 || ones < 0 || ones > n)
        throw std::invalid_argument("binary_sequences: need 0 <= ones <= n");
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> current;
    enumerate_bits(n, ones, current, out);
    return out;
}

std::vector<ThinSplit> thin_splits(const Quiver& q, const Path& p, int n) {
    const int l = p.length();
    if (n < l)
        throw std::invalid_argument("thin_splits: n = " + std::to_string(n) +
                                    " is smaller than the path length " + std::to_string(l));
    std::vector<std::vector<std::uint8_t>> sequences = binary_sequences(n, l);

    std::vector<ThinSplit> out;
    out.reserve(sequences.size());
    for (auto& bits : sequences) {
        ThinSplit split;
        split.bits = bits;
        split.entries.reserve(static_cast<std::size_t>(n));
        Vertex at = p.source;
        std::size_t next_arrow = 0;
        for (int i = 0; i < n; ++i) {
            if (bits[static_cast<std::size_t>(i)]) {
                Arrow a = p.arrows[next_arrow++];
                split.entries.emplace_back(a);
                at = q.target(a);
            } else {
                split.entries.emplace_back(at);
            }
        }
        out.push_back(std::move(split));
    }
    return out;
}

Path reassemble(const Quiver& q, const ThinSplit& split) {
    Path acc;
    bool started = false;
    for (const SplitEntry& entry : split.entries) {
        Path piece = std::holds_alternative<Vertex>(entry)
                         ? trivial_path(std::get<Vertex>(entry))
                         : Path{q.source(std::get<Arrow>(entry)), {std::get<Arrow>(entry)}};
        if (!started) {
            acc = piece;
            started = true;
        } else {
            acc = concat(q, piece, acc);
        }
    }
    if (!started) throw std::invalid_argument("cannot reassemble an empty split");
    return acc;
}

std::vector<std::uint8_t> complement(std::vector<std::uint8_t> bits) {
    for (auto& b : bits) b = b ? 0 : 1;
    return bits;
}

namespace {

// One `*`-separated atom: a vertex name or juxtaposed arrow names
// (target-first). Returns the corresponding path.
Path parse_path_atom(const Quiver& q, const std::string& atom, std::size_t offset) {
    if (auto v = q.find_vertex(atom)) return trivial_path(*v);
    // greedy longest-match decomposition into arrow names, left to right
    std::vector<Arrow> target_first;
    std::size_t pos = 0;
    while (pos < atom.size()) {
        std::optional<Arrow> found;
        std::size_t taken = 0;
        for (std::size_t len = atom.size() - pos; len >= 1; --len) {
            if (auto a = q.find_arrow(atom.substr(pos, len))) {
                found = a;
                taken = len;
                break;
            }
        }
        if (!found)
            throw parse_error("cannot resolve '" + atom.substr(pos) + "' against declared arrow names",
                              offset + pos);
        target_first.push_back(*found);
        pos += taken;
    }
    Path p;
    p.source = q.source(target_first.back());
    for (auto it = target_first.rbegin(); it != target_first.rend(); ++it) {
        if (!p.arrows.empty() && q.source(*it) != q.target(p.arrows.back()))
            throw parse_error("arrows in '" + atom + "' do not concatenate", offset);
        p.arrows.push_back(*it);
    }
    return p;
}

}  // namespace

Path parse_path_expr(const Quiver& q, const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> atoms;
    std::string current;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '*') {
            if (!current.empty()) {
                atoms.emplace_back(current, start);
                current.clear();
            } else if (i < text.size()) {
                throw parse_error("empty factor in path expression", i);
            }
            start = i + 1;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            if (current.empty()) start = i;
            current += text[i];
        } else if (!current.empty()) {
            atoms.emplace_back(current, start);
            current.clear();
        }
    }
    if (atoms.empty()) throw parse_error("empty path expression", 0);

    // factors are written target-first, so the rightmost atom comes first
    Path acc = parse_path_atom(q, atoms.back().first, atoms.back().second);
    for (std::size_t i = atoms.size() - 1; i-- > 0;) {
        Path later = parse_path_atom(q, atoms[i].first, atoms[i].second);
        if (later.source != path_target(q, acc))
            throw parse_error("factors '" + atoms[i].first + "' and the part after it do not compose",
                              atoms[i].second);
        acc = concat(q, later, acc);
    }
    return acc;
}

}  // namespace qsh
