#include "qsh/json_io.hpp"

#include <fstream>

namespace qsh {

namespace {

Vertex vertex_by_name(const Quiver& q, const std::string& name, const std::string& context) {
    auto v = q.find_vertex(name);
    if (!v) throw parse_error(context + ": unknown vertex '" + name + "'", 0);
    return *v;
}

Arrow arrow_by_name(const Quiver& q, const std::string& name, const std::string& context) {
    auto a = q.find_arrow(name);
    if (!a) throw parse_error(context + ": unknown arrow '" + name + "'", 0);
    return *a;
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
    Json j;
    if (q.kind() == Quiver::Kind::AInfinity) {
        j["family"] = "ainfinity";
        j["support_bound"] = q.support_bound();
        return j;
    }
    j["vertices"] = Json::array();
    for (Vertex v : q.vertices()) j["vertices"].push_back(q.vertex_name(v));
    j["arrows"] = Json::array();
    for (Arrow a : q.arrows()) {
        j["arrows"].push_back({{"name", q.arrow_name(a)},
                               {"source", q.vertex_name(q.source(a))},
                               {"target", q.vertex_name(q.target(a))}});
    }
    return j;
}

Quiver quiver_from_json(const Json& j) {
    if (j.contains("family")) {
        const std::string family = j.at("family").get<std::string>();
        if (family != "ainfinity")
            throw parse_error("unknown quiver family '" + family + "'", 0);
        if (!j.contains("support_bound"))
            throw parse_error("rule-based quiver requires a support_bound", 0);
        return make_ainfinity(j.at("support_bound").get<int>());
    }
    std::vector<std::string> vertices;
    for (const auto& name : j.at("vertices")) vertices.push_back(name.get<std::string>());
    std::vector<Quiver::ArrowDecl> arrows;
    if (j.contains("arrows"))
        for (const auto& rec : j.at("arrows"))
            arrows.push_back({rec.at("name").get<std::string>(), rec.at("source").get<std::string>(),
                              rec.at("target").get<std::string>()});
    return Quiver::finite(std::move(vertices), std::move(arrows));
}

namespace {

Json action_side_to_json(const Quiver& q, const BimoduleAction::Table& table, bool left) {
    Json out = Json::array();
    for (const auto& [key, value] : table) {
        if (value.is_zero()) continue;
        Json entry;
        const int vid = left ? key.first : key.second;
        const int aid = left ? key.second : key.first;
        entry["vertex"] = q.vertex_name(Vertex{vid});
        entry["arrow"] = q.arrow_name(Arrow{aid});
        Json result = Json::array();
        for (const auto& [p, c] : value.terms())
            result.push_back({{"arrow", q.arrow_name(p.arrows.at(0))}, {"coeff", c.str()}});
        entry["result"] = std::move(result);
        out.push_back(std::move(entry));
    }
    return out;
}

BimoduleAction::Table action_side_from_json(const Quiver& q, const Json& j, bool left) {
    BimoduleAction::Table table;
    for (const auto& entry : j) {
        Vertex v = vertex_by_name(q, entry.at("vertex").get<std::string>(), "action");
        Arrow a = arrow_by_name(q, entry.at("arrow").get<std::string>(), "action");
        PathVector value;
        for (const auto& term : entry.at("result")) {
            Arrow b = arrow_by_name(q, term.at("arrow").get<std::string>(), "action result");
            RationalFunction coeff(1);
            if (term.contains("coeff"))
                coeff = parse_rational_function(term.at("coeff").get<std::string>());
            value.add(Path{q.source(b), {b}}, coeff);
        }
        auto key = left ? std::make_pair(v.id, a.id) : std::make_pair(a.id, v.id);
        auto [it, inserted] = table.emplace(key, value);
        if (!inserted)
            throw parse_error("action: duplicate entry for (" + entry.at("vertex").get<std::string>() +
                                  ", " + entry.at("arrow").get<std::string>() + ")",
                              0);
    }
    return table;
}

Json monoid_to_json(const Quiver& q, const VertexMonoid& m) {
    Json j;
    if (m.kind() == VertexMonoid::Kind::AdditiveNaturals) {
        j["rule"] = "additive";
        return j;
    }
    j["identity"] = q.vertex_name(m.identity());
    Json table = Json::array();
    for (Vertex g : q.vertices())
        for (Vertex h : q.vertices())
            table.push_back(Json::array({q.vertex_name(g), q.vertex_name(h),
                                         q.vertex_name(m.product(g, h))}));
    j["table"] = std::move(table);
    return j;
}

VertexMonoid monoid_from_json(const Quiver& q, const Json& j) {
    if (j.contains("rule")) {
        const std::string rule = j.at("rule").get<std::string>();
        if (rule != "additive") throw parse_error("unknown monoid rule '" + rule + "'", 0);
        if (q.kind() != Quiver::Kind::AInfinity)
            throw parse_error("additive monoid rule requires the ainfinity family", 0);
        return VertexMonoid::additive_naturals(q.support_bound());
    }
    const int n = q.vertex_count();
    Vertex identity = vertex_by_name(q, j.at("identity").get<std::string>(), "monoid identity");
    std::vector<std::vector<Vertex>> table(static_cast<std::size_t>(n),
                                           std::vector<Vertex>(static_cast<std::size_t>(n)));
    for (const auto& row : j.at("table")) {
        if (!row.is_array() || row.size() != 3)
            throw parse_error("monoid table rows must be [g, h, gh] triples", 0);
        Vertex g = vertex_by_name(q, row[0].get<std::string>(), "monoid table");
        Vertex h = vertex_by_name(q, row[1].get<std::string>(), "monoid table");
        Vertex gh = vertex_by_name(q, row[2].get<std::string>(), "monoid table");
        table[static_cast<std::size_t>(g.id)][static_cast<std::size_t>(h.id)] = gh;
    }
    return VertexMonoid::table(identity, std::move(table));
}

}  // namespace

Json spec_to_json(const BialgebraSpec& spec) {
    Json j = quiver_to_json(spec.quiver);
    j["monoid"] = monoid_to_json(spec.quiver, spec.monoid);
    if (spec.action.kind() == BimoduleAction::Kind::AInfinityRule) {
        j["action"] = {{"rule", "ainfinity"}};
    } else {
        j["action"] = {{"left", action_side_to_json(spec.quiver, spec.action.left_table(), true)},
                       {"right", action_side_to_json(spec.quiver, spec.action.right_table(), false)}};
    }
    return j;
}

BialgebraSpec spec_from_json(const Json& j) {
    Quiver q = quiver_from_json(j);
    ValidationReport quiver_ok = q.validate();
    if (!quiver_ok.ok())
        throw parse_error("quiver document invalid: " + quiver_ok.str(), 0);
    if (!j.contains("monoid")) throw parse_error("spec is missing the monoid", 0);
    VertexMonoid monoid = monoid_from_json(q, j.at("monoid"));
    BimoduleAction action = BimoduleAction::table({}, {});
    if (j.contains("action")) {
        const Json& ja = j.at("action");
        if (ja.contains("rule")) {
            const std::string rule = ja.at("rule").get<std::string>();
            if (rule != "ainfinity") throw parse_error("unknown action rule '" + rule + "'", 0);
            if (q.kind() != Quiver::Kind::AInfinity)
                throw parse_error("ainfinity action rule requires the ainfinity family", 0);
            action = BimoduleAction::ainfinity_rule();
        } else {
            BimoduleAction::Table left, right;
            if (ja.contains("left")) left = action_side_from_json(q, ja.at("left"), true);
            if (ja.contains("right")) right = action_side_from_json(q, ja.at("right"), false);
            action = BimoduleAction::table(std::move(left), std::move(right));
        }
    }
    return BialgebraSpec{std::move(q), std::move(monoid), std::move(action)};
}

Json rep_to_json(const Representation& rep) {
    Json j;
    j["dims"] = Json::object();
    for (const auto& [vid, d] : rep.dims)
        j["dims"][rep.quiver.vertex_name(Vertex{vid})] = d;
    j["mats"] = Json::object();
    for (const auto& [aid, m] : rep.mats) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
            rows.push_back(std::move(row));
        }
        j["mats"][rep.quiver.arrow_name(Arrow{aid})] = std::move(rows);
    }
    if (!rep.labels.empty()) {
        j["labels"] = Json::object();
        for (const auto& [vid, list] : rep.labels)
            j["labels"][rep.quiver.vertex_name(Vertex{vid})] = list;
    }
    return j;
}

Representation rep_from_json(const Json& j, const Quiver& q) {
    Representation rep;
    rep.quiver = q;
    if (j.contains("dims"))
        for (const auto& [name, value] : j.at("dims").items()) {
            const int d = value.get<int>();
            if (d < 0) throw parse_error("dims: negative dimension for '" + name + "'", 0);
            if (d > 0) rep.dims[vertex_by_name(q, name, "dims").id] = d;
        }
    if (j.contains("mats"))
        for (const auto& [name, rows] : j.at("mats").items()) {
            Arrow a = arrow_by_name(q, name, "mats");
            const int want_rows = rep.dim(q.target(a));
            const int want_cols = rep.dim(q.source(a));
            if (static_cast<int>(rows.size()) != want_rows)
                throw parse_error("matrix '" + name + "' must have " + std::to_string(want_rows) +
                                      " rows",
                                  0);
            Matrix m(want_rows, want_cols);
            for (int i = 0; i < want_rows; ++i) {
                const auto& row = rows[static_cast<std::size_t>(i)];
                if (static_cast<int>(row.size()) != want_cols)
                    throw parse_error("matrix '" + name + "' must have " + std::to_string(want_cols) +
                                          " columns",
                                      0);
                for (int k = 0; k < want_cols; ++k)
                    m.at(i, k) = parse_rational_function(row[static_cast<std::size_t>(k)]
                                                             .get<std::string>());
            }
            if (!m.is_zero()) rep.mats.emplace(a.id, std::move(m));
        }
    if (j.contains("labels"))
        for (const auto& [name, list] : j.at("labels").items()) {
            Vertex v = vertex_by_name(q, name, "labels");
            std::vector<std::string> labels;
            for (const auto& item : list) labels.push_back(item.get<std::string>());
            if (static_cast<int>(labels.size()) != rep.dim(v))
                throw parse_error("labels for '" + name + "' do not match its dimension", 0);
            rep.labels[v.id] = std::move(labels);
        }
    return rep;
}

Json isotypic_to_json(const IsotypicMatrix& iso) {
    Json j;
    j["vertices"] = iso.vertex_names;
    if (iso.monoid.kind() == VertexMonoid::Kind::AdditiveNaturals) {
        j["monoid"] = {{"rule", "additive"}, {"support_bound", iso.monoid.size() - 1}};
    } else {
        Json table = Json::array();
        const int n = static_cast<int>(iso.vertex_names.size());
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                table.push_back(Json::array(
                    {iso.vertex_names[static_cast<std::size_t>(g)],
                     iso.vertex_names[static_cast<std::size_t>(h)],
                     iso.vertex_names[static_cast<std::size_t>(
                         iso.monoid.product(Vertex{g}, Vertex{h}).id)]}));
        j["monoid"] = {{"identity", iso.vertex_names[static_cast<std::size_t>(iso.monoid.identity().id)]},
                       {"table", std::move(table)}};
    }
    Json dims = Json::array();
    for (const auto& [key, d] : iso.dims)
        dims.push_back({{"target", iso.vertex_names[static_cast<std::size_t>(key.first)]},
                        {"source", iso.vertex_names[static_cast<std::size_t>(key.second)]},
                        {"dim", d}});
    j["dims"] = std::move(dims);
    return j;
}

IsotypicMatrix isotypic_from_json(const Json& j) {
    IsotypicMatrix iso;
    const Json& jm = j.at("monoid");
    if (jm.contains("rule")) {
        const std::string rule = jm.at("rule").get<std::string>();
        if (rule != "additive") throw parse_error("unknown monoid rule '" + rule + "'", 0);
        const int bound = jm.at("support_bound").get<int>();
        if (bound < 0) throw parse_error("support_bound must be nonnegative", 0);
        for (int i = 0; i <= bound; ++i) iso.vertex_names.push_back("g" + std::to_string(i));
        iso.monoid = VertexMonoid::additive_naturals(bound);
    } else {
        for (const auto& name : j.at("vertices")) iso.vertex_names.push_back(name.get<std::string>());
        auto index_of = [&](const std::string& name) {
            for (int i = 0; i < static_cast<int>(iso.vertex_names.size()); ++i)
                if (iso.vertex_names[static_cast<std::size_t>(i)] == name) return i;
            throw parse_error("isotypic: unknown vertex '" + name + "'", 0);
        };
        const int n = static_cast<int>(iso.vertex_names.size());
        std::vector<std::vector<Vertex>> table(static_cast<std::size_t>(n),
                                               std::vector<Vertex>(static_cast<std::size_t>(n)));
        for (const auto& row : jm.at("table")) {
            if (!row.is_array() || row.size() != 3)
                throw parse_error("monoid table rows must be [g, h, gh] triples", 0);
            const int g = index_of(row[0].get<std::string>());
            const int h = index_of(row[1].get<std::string>());
            const int gh = index_of(row[2].get<std::string>());
            table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = Vertex{gh};
        }
        iso.monoid = VertexMonoid::table(Vertex{index_of(jm.at("identity").get<std::string>())},
                                         std::move(table));
    }
    auto index_of = [&](const std::string& name) {
        for (int i = 0; i < static_cast<int>(iso.vertex_names.size()); ++i)
            if (iso.vertex_names[static_cast<std::size_t>(i)] == name) return i;
        throw parse_error("isotypic: unknown vertex '" + name + "'", 0);
    };
    for (const auto& entry : j.at("dims")) {
        const int g = index_of(entry.at("target").get<std::string>());
        const int h = index_of(entry.at("source").get<std::string>());
        const int d = entry.at("dim").get<int>();
        if (d < 0) throw parse_error("isotypic dimensions must be nonnegative", 0);
        if (d > 0) iso.dims[{g, h}] = d;
    }
    return iso;
}

Json decomposition_to_json(const IntervalMultiset& m) {
    Json summands = Json::array();
    for (const auto& [interval, count] : m.mult)
        summands.push_back({{"interval", Json::array({interval.lo, interval.hi})}, {"mult", count}});
    return Json{{"summands", std::move(summands)}, {"total_dim", m.total_dim()}};
}

Json cg_table_to_json(const std::vector<CgEntry>& table) {
    Json out = Json::array();
    for (const auto& entry : table)
        out.push_back({{"left", Json::array({entry.left.lo, entry.left.hi})},
                       {"right", Json::array({entry.right.lo, entry.right.hi})},
                       {"decomposition", decomposition_to_json(entry.decomposition)}});
    return out;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& check : report.checks) {
        Json j = {{"name", check.name}, {"cases", check.cases}, {"pass", check.pass}};
        if (!check.pass) j["counterexample"] = check.counterexample;
        checks.push_back(std::move(j));
    }
    return Json{{"header", report.header}, {"checks", std::move(checks)},
                {"all_pass", report.all_pass()}};
}

Json validation_to_json(const ValidationReport& report) {
    Json issues = Json::array();
    for (const auto& issue : report.issues)
        issues.push_back({{"subject", issue.subject}, {"message", issue.message}});
    return Json{{"ok", report.ok()}, {"issues", std::move(issues)}};
}

Json classification_to_json(const Classification& c, const Quiver& q) {
    Json components = Json::array();
    for (const auto& cls : c.components) {
        Json names = Json::array();
        for (Vertex v : cls.vertices) names.push_back(q.vertex_name(v));
        Json j = {{"vertices", std::move(names)}, {"dynkin", cls.is_dynkin}};
        if (cls.is_dynkin)
            j["label"] = cls.label;
        else
            j["reason"] = cls.reason;
        components.push_back(std::move(j));
    }
    return Json{{"finite_type", c.finite_type}, {"acyclic", c.acyclic},
                {"components", std::move(components)}};
}

Json path_vector_to_json(const Quiver& q, const PathVector& v) {
    Json terms = Json::array();
    for (const auto& [p, c] : v.terms())
        terms.push_back({{"path", path_str(q, p)}, {"coeff", c.str()}});
    return Json{{"terms", std::move(terms)}, {"rendered", path_vector_str(q, v)}};
}

Json tensor2_to_json(const Quiver& q, const TensorVector2& t) {
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back({{"left", path_str(q, key.first)},
                         {"right", path_str(q, key.second)},
                         {"coeff", c.str()}});
    return Json{{"terms", std::move(terms)}, {"rendered", tensor2_str(q, t)}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 0);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what(), 0);
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file '" + path + "' for writing", 0);
    out << j.dump(2) << "\n";
}

}  // namespace qsh
