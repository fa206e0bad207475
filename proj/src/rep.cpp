#include "qsh/rep.hpp"

#include <algorithm>
#include <set>

namespace qsh {

// ------------------------------------------------------------ Representation

int Representation::dim(Vertex v) const {
    auto it = dims.find(v.id);
    return it == dims.end() ? 0 : it->second;
}

int Representation::total_dim() const {
    int total = 0;
    for (const auto& [v, d] : dims) {
        (void)v;
        total += d;
    }
    return total;
}

Matrix Representation::arrow_matrix(Arrow a) const {
    auto it = mats.find(a.id);
    if (it != mats.end()) return it->second;
    return Matrix(dim(quiver.target(a)), dim(quiver.source(a)));
}

std::string Representation::basis_label(Vertex v, int index) const {
    auto it = labels.find(v.id);
    if (it != labels.end() && index >= 0 && index < static_cast<int>(it->second.size()))
        return it->second[static_cast<std::size_t>(index)];
    return quiver.vertex_name(v) + "#" + std::to_string(index + 1);
}

ValidationReport validate_representation(const Representation& rep) {
    ValidationReport report = rep.quiver.validate();
    if (!report.ok()) return report;
    for (const auto& [vid, d] : rep.dims) {
        if (!rep.quiver.has_vertex(Vertex{vid}))
            report.issues.push_back({"dims", "unknown vertex id " + std::to_string(vid)});
        if (d < 0) report.issues.push_back({"dims", "negative dimension"});
    }
    for (const auto& [aid, m] : rep.mats) {
        if (!rep.quiver.has_arrow(Arrow{aid})) {
            report.issues.push_back({"mats", "unknown arrow id " + std::to_string(aid)});
            continue;
        }
        Arrow a{aid};
        const int want_rows = rep.dim(rep.quiver.target(a));
        const int want_cols = rep.dim(rep.quiver.source(a));
        if (m.rows() != want_rows || m.cols() != want_cols)
            report.issues.push_back(
                {"matrix " + rep.quiver.arrow_name(a),
                 "shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " does not match dims " + std::to_string(want_rows) + "x" +
                     std::to_string(want_cols)});
    }
    return report;
}

Matrix apply_path(const Representation& rep, const Path& p) {
    Matrix acc = Matrix::identity(rep.dim(p.source));
    for (Arrow a : p.arrows) acc = rep.arrow_matrix(a) * acc;
    return acc;
}

// ------------------------------------------------------------ local nilpotency

namespace {

// Columns of m that span its column space (plain exact elimination).
Matrix column_space_basis(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
    Matrix work = m;
    std::vector<int> pivot_cols;
    int row = 0;
    for (int c = 0; c < work.cols() && row < work.rows(); ++c) {
        int pivot = -1;
        for (int i = row; i < work.rows(); ++i)
            if (!work.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < work.cols(); ++j) std::swap(work.at(pivot, j), work.at(row, j));
        RationalFunction inv = work.at(row, c).inverse();
        for (int j = c; j < work.cols(); ++j) work.at(row, j) *= inv;
        for (int i = 0; i < work.rows(); ++i) {
            if (i == row || work.at(i, c).is_zero()) continue;
            RationalFunction f = work.at(i, c);
            for (int j = c; j < work.cols(); ++j) work.at(i, j) -= f * work.at(row, j);
        }
        pivot_cols.push_back(c);
        ++row;
    }
    Matrix basis(m.rows(), static_cast<int>(pivot_cols.size()));
    for (int j = 0; j < basis.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, j) = m.at(i, pivot_cols[static_cast<std::size_t>(j)]);
    return basis;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    Matrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

bool vector_is_zero(const std::vector<RationalFunction>& v) {
    return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

std::vector<RationalFunction> apply_matrix(const Matrix& m, const std::vector<RationalFunction>& v) {
    std::vector<RationalFunction> out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
        }
    return out;
}

bool find_nonzero_path(const Representation& rep, Vertex at, const Matrix& product, int remaining,
                       Path& path, Path& out) {
    if (remaining == 0) {
        if (product.is_zero()) return false;
        out = path;
        return true;
    }
    for (Arrow a : rep.quiver.arrows_from(at)) {
        Matrix next = rep.arrow_matrix(a) * product;
        if (next.is_zero()) continue;
        path.arrows.push_back(a);
        if (find_nonzero_path(rep, rep.quiver.target(a), next, remaining - 1, path, out)) return true;
        path.arrows.pop_back();
    }
    return false;
}

}  // namespace

NilpotencyResult is_locally_nilpotent(const Representation& rep) {
    const int total = rep.total_dim();
    // subspace at each vertex spanned by images of all length-n paths
    std::map<int, Matrix> span;
    for (const auto& [vid, d] : rep.dims)
        if (d > 0) span.emplace(vid, Matrix::identity(d));
    if (span.empty()) return NilpotencyResult{true, std::nullopt};

    for (int step = 0; step < total; ++step) {
        std::map<int, Matrix> next;
        for (const auto& [vid, basis] : span) {
            if (basis.cols() == 0) continue;
            for (Arrow a : rep.quiver.arrows_from(Vertex{vid})) {
                Matrix image = rep.arrow_matrix(a) * basis;
                if (image.is_zero() || image.rows() == 0) continue;
                const int tid = rep.quiver.target(a).id;
                auto it = next.find(tid);
                if (it == next.end())
                    next.emplace(tid, image);
                else
                    it->second = hstack(it->second, image);
            }
        }
        for (auto& [vid, m] : next) {
            (void)vid;
            m = column_space_basis(m);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.cols() == 0; });
        span = std::move(next);
        if (span.empty()) return NilpotencyResult{true, std::nullopt};
    }

    // nonzero span after `total` steps: find a witness path of that length
    NilpotencyResult result;
    result.locally_nilpotent = false;
    for (const auto& [vid, d] : rep.dims) {
        (void)d;
        Path path = trivial_path(Vertex{vid});
        Path witness;
        if (find_nonzero_path(rep, Vertex{vid}, Matrix::identity(rep.dim(Vertex{vid})), total, path,
                              witness)) {
            result.witness = witness;
            break;
        }
    }
    return result;
}

// -------------------------------------------------------------- comodule map

namespace {

void comodule_walk(const Representation& rep, Vertex at, const std::vector<RationalFunction>& vec,
                   Path& path, int max_len, ComoduleExpansion& out) {
    for (int i = 0; i < static_cast<int>(vec.size()); ++i)
        if (!vec[static_cast<std::size_t>(i)].is_zero())
            out.terms.push_back({at, i, path, vec[static_cast<std::size_t>(i)]});
    for (Arrow a : rep.quiver.arrows_from(at)) {
        std::vector<RationalFunction> next = apply_matrix(rep.arrow_matrix(a), vec);
        if (vector_is_zero(next)) continue;
        if (path.length() == max_len) {
            out.exhaustive = false;  // a longer path still acts nonzero
            continue;
        }
        path.arrows.push_back(a);
        comodule_walk(rep, rep.quiver.target(a), next, path, max_len, out);
        path.arrows.pop_back();
    }
}

}  // namespace

ComoduleExpansion comodule_map(const Representation& rep, Vertex g, int index, int max_len) {
    if (max_len < 0) throw std::domain_error("comodule_map needs max_len >= 0");
    const int d = rep.dim(g);
    if (index < 0 || index >= d) throw std::out_of_range("comodule_map: basis index out of range");
    ComoduleExpansion out;
    std::vector<RationalFunction> e(static_cast<std::size_t>(d));
    e[static_cast<std::size_t>(index)] = RationalFunction(1);
    Path path = trivial_path(g);
    comodule_walk(rep, g, e, path, max_len, out);
    std::sort(out.terms.begin(), out.terms.end(), [](const ComoduleTerm& a, const ComoduleTerm& b) {
        PathOrder less;
        if (less(a.path, b.path)) return true;
        if (less(b.path, a.path)) return false;
        return a.index < b.index;
    });
    return out;
}

std::string comodule_str(const Representation& rep, const ComoduleExpansion& expansion) {
    if (expansion.terms.empty()) return "0";
    std::string out;
    for (const auto& term : expansion.terms) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(term.coeff) + rep.basis_label(term.target, term.index) + "(x)" +
               path_str(rep.quiver, term.path);
    }
    if (!expansion.exhaustive) out += "  [truncated: longer paths still act]";
    return out;
}

// ------------------------------------------------------------- tensor product

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

void add_block(Matrix& target, int row0, int col0, const Matrix& block,
               const RationalFunction& coeff) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) {
            if (block.at(i, j).is_zero()) continue;
            target.at(row0 + i, col0 + j) += coeff * block.at(i, j);
        }
}

}  // namespace

Representation tensor_representations(const BialgebraSpec& spec, const Representation& V,
                                      const Representation& W, TensorLayout* layout_out) {
    const Quiver& q = spec.quiver;
    if (!(V.quiver == q) || !(W.quiver == q))
        throw std::invalid_argument("tensor_representations: factors live on a different quiver");

    // group (g, h) blocks by the monoid product of their vertices
    TensorLayout layout;
    std::map<int, int> tdims;
    std::map<int, std::vector<std::string>> tlabels;
    for (const auto& [gid, dv] : V.dims)
        for (const auto& [hid, dw] : W.dims) {
            Vertex x = spec.monoid.product(Vertex{gid}, Vertex{hid});
            int& dim_here = tdims[x.id];
            layout.blocks[{gid, hid}] = {x.id, dim_here};
            auto& label_list = tlabels[x.id];
            for (int iu = 0; iu < dv; ++iu)
                for (int iv = 0; iv < dw; ++iv)
                    label_list.push_back("(" + V.basis_label(Vertex{gid}, iu) + "," +
                                         W.basis_label(Vertex{hid}, iv) + ")");
            dim_here += dv * dw;
        }

    Representation T;
    T.quiver = q;
    T.dims = tdims;
    T.labels = std::move(tlabels);

    std::map<int, Matrix> mats;
    auto matrix_for = [&](Arrow a) -> Matrix& {
        auto it = mats.find(a.id);
        if (it == mats.end())
            it = mats.emplace(a.id, Matrix(T.dim(q.target(a)), T.dim(q.source(a)))).first;
        return it->second;
    };

    for (const auto& [block, place] : layout.blocks) {
        const auto [gid, hid] = block;
        const int col0 = place.second;
        const Vertex g{gid}, h{hid};
        const int dv = V.dim(g), dw = W.dim(h);

        // degree-1 comodule terms V_b(u) (x) v (x) (b.h)
        for (Arrow b : q.arrows_from(g)) {
            if (V.dim(q.target(b)) == 0) continue;
            const Matrix& vb = V.arrow_matrix(b);
            if (vb.is_zero()) continue;
            const PathVector bh = spec.action.right(q, b, h);
            for (const auto& [p, coeff] : bh.terms()) {
                Arrow a = p.arrows.at(0);
                auto row_block = layout.blocks.find({q.target(b).id, hid});
                if (row_block == layout.blocks.end()) continue;
                add_block(matrix_for(a), row_block->second.second, col0, kron(vb, Matrix::identity(dw)),
                          coeff);
            }
        }
        // degree-1 comodule terms u (x) W_c(v) (x) (g.c)
        for (Arrow c : q.arrows_from(h)) {
            if (W.dim(q.target(c)) == 0) continue;
            const Matrix& wc = W.arrow_matrix(c);
            if (wc.is_zero()) continue;
            const PathVector gc = spec.action.left(q, g, c);
            for (const auto& [p, coeff] : gc.terms()) {
                Arrow a = p.arrows.at(0);
                auto row_block = layout.blocks.find({gid, q.target(c).id});
                if (row_block == layout.blocks.end()) continue;
                add_block(matrix_for(a), row_block->second.second, col0, kron(Matrix::identity(dv), wc),
                          coeff);
            }
        }
    }

    for (auto& [aid, m] : mats)
        if (!m.is_zero()) T.mats.emplace(aid, std::move(m));

    if (layout_out) *layout_out = std::move(layout);
    return T;
}

Representation unit_representation(const BialgebraSpec& spec) {
    Representation unit;
    unit.quiver = spec.quiver;
    const Vertex e = spec.monoid.identity();
    unit.dims[e.id] = 1;
    unit.labels[e.id] = {"1"};
    return unit;
}

std::optional<std::string> tensor_comodule_mismatch(const BialgebraSpec& spec,
                                                    const Representation& V,
                                                    const Representation& W, int max_len) {
    TensorLayout layout;
    Representation T = tensor_representations(spec, V, W, &layout);
    const Quiver& q = spec.quiver;

    for (const auto& [block, place] : layout.blocks) {
        const auto [gid, hid] = block;
        const Vertex g{gid}, h{hid};
        const int dw = W.dim(h);
        for (int iu = 0; iu < V.dim(g); ++iu)
            for (int iv = 0; iv < dw; ++iv) {
                const int col = place.second + iu * dw + iv;

                // comodule expansion of the tensor basis vector
                std::map<std::tuple<int, int, Path>, RationalFunction> lhs;
                ComoduleExpansion dt = comodule_map(T, Vertex{place.first}, col, max_len);
                for (const auto& term : dt.terms)
                    lhs[{term.target.id, term.index, term.path}] = term.coeff;

                // termwise product of the factor expansions
                std::map<std::tuple<int, int, Path>, RationalFunction> rhs;
                ComoduleExpansion du = comodule_map(V, g, iu, max_len);
                ComoduleExpansion dv_exp = comodule_map(W, h, iv, max_len);
                for (const auto& ut : du.terms)
                    for (const auto& vt : dv_exp.terms) {
                        if (ut.path.length() + vt.path.length() > max_len) continue;
                        PathVector prod = shuffle_product(spec, ut.path, vt.path);
                        auto spot = layout.blocks.find({ut.target.id, vt.target.id});
                        if (spot == layout.blocks.end()) continue;
                        const int idx =
                            spot->second.second + ut.index * W.dim(vt.target) + vt.index;
                        for (const auto& [r, c] : prod.terms()) {
                            auto key = std::make_tuple(spot->second.first, idx, r);
                            auto it = rhs.find(key);
                            if (it == rhs.end())
                                rhs.emplace(key, ut.coeff * vt.coeff * c);
                            else {
                                it->second += ut.coeff * vt.coeff * c;
                                if (it->second.is_zero()) rhs.erase(it);
                            }
                        }
                    }

                if (lhs != rhs)
                    return "comodule mismatch on basis vector " +
                           T.basis_label(Vertex{place.first}, col) + " of block (" +
                           q.vertex_name(g) + ", " + q.vertex_name(h) + ")";
            }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------- lines

std::optional<LineInfo> line_shape(const Quiver& q) {
    LineInfo line;
    if (q.kind() == Quiver::Kind::AInfinity) {
        line.offset = 0;
        for (Vertex v : q.vertices()) line.order.push_back(v);
        for (Arrow a : q.arrows()) line.step.push_back(a);
        return line;
    }
    const int n = q.vertex_count();
    if (n == 0) return std::nullopt;
    if (q.arrow_count() != n - 1) return std::nullopt;
    for (Vertex v : q.vertices())
        if (q.arrows_from(v).size() > 1 || q.arrows_into(v).size() > 1) return std::nullopt;
    Vertex start{-1};
    for (Vertex v : q.vertices())
        if (q.arrows_into(v).empty()) {
            if (start.id >= 0) return std::nullopt;  // two starts: disconnected
            start = v;
        }
    if (start.id < 0) return std::nullopt;
    line.offset = 1;
    Vertex at = start;
    line.order.push_back(at);
    while (true) {
        auto out = q.arrows_from(at);
        if (out.empty()) break;
        line.step.push_back(out[0]);
        at = q.target(out[0]);
        line.order.push_back(at);
    }
    if (static_cast<int>(line.order.size()) != n) return std::nullopt;
    return line;
}

Representation interval_module(const Quiver& q, int lo, int hi) {
    auto line = line_shape(q);
    if (!line) throw std::invalid_argument("interval_module requires an A-type line quiver");
    const int first = line->offset;
    const int last = line->position(line->order.size() - 1);
    if (lo > hi || lo < first || hi > last)
        throw std::out_of_range("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] is outside positions " + std::to_string(first) + ".." +
                                std::to_string(last));
    Representation rep;
    rep.quiver = q;
    for (int p = lo; p <= hi; ++p) {
        Vertex v = line->order[static_cast<std::size_t>(p - first)];
        rep.dims[v.id] = 1;
        rep.labels[v.id] = {"e" + std::to_string(p)};
        if (p < hi) rep.mats[line->step[static_cast<std::size_t>(p - first)].id] = Matrix::identity(1);
    }
    return rep;
}

void IntervalMultiset::add(Interval i, int count) {
    if (count == 0) return;
    int& m = mult[i];
    m += count;
    if (m == 0) mult.erase(i);
}

int IntervalMultiset::total_dim() const {
    int total = 0;
    for (const auto& [interval, count] : mult) total += (interval.hi - interval.lo + 1) * count;
    return total;
}

std::string IntervalMultiset::str() const {
    if (mult.empty()) return "0";
    std::string out;
    for (const auto& [interval, count] : mult) {
        if (!out.empty()) out += " (+) ";
        out += interval.str();
        if (count != 1) out += "^" + std::to_string(count);
    }
    return out;
}

std::map<std::pair<int, int>, int> rank_invariants(const Representation& rep) {
    auto line = line_shape(rep.quiver);
    if (!line)
        throw std::invalid_argument(
            "unsupported shape: rank invariants need an equioriented A-type line quiver");
    std::map<std::pair<int, int>, int> r;
    // supported span
    int min_pos = -1, max_pos = -1;
    for (std::size_t k = 0; k < line->order.size(); ++k) {
        if (rep.dim(line->order[k]) > 0) {
            if (min_pos < 0) min_pos = line->position(k);
            max_pos = line->position(k);
        }
    }
    if (min_pos < 0) return r;

    for (int s = min_pos; s <= max_pos; ++s) {
        const std::size_t ks = static_cast<std::size_t>(s - line->offset);
        Matrix running = Matrix::identity(rep.dim(line->order[ks]));
        r[{s, s}] = rep.dim(line->order[ks]);
        for (int t = s + 1; t <= max_pos; ++t) {
            const std::size_t kt = static_cast<std::size_t>(t - 1 - line->offset);
            running = rep.arrow_matrix(line->step[kt]) * running;
            r[{s, t}] = running.rank();
        }
    }
    return r;
}

IntervalMultiset barcode_decompose(const Representation& rep) {
    auto invariants = rank_invariants(rep);
    IntervalMultiset out;
    if (invariants.empty()) return out;

    int min_pos = invariants.begin()->first.first;
    int max_pos = min_pos;
    for (const auto& [key, value] : invariants) {
        (void)value;
        max_pos = std::max(max_pos, key.second);
    }
    auto r = [&](int s, int t) {
        if (s < min_pos || t > max_pos || s > t) return 0;
        auto it = invariants.find({s, t});
        return it == invariants.end() ? 0 : it->second;
    };
    for (int s = min_pos; s <= max_pos; ++s)
        for (int t = s; t <= max_pos; ++t) {
            int mu = r(s, t) - r(s - 1, t) - r(s, t + 1) + r(s - 1, t + 1);
            if (mu < 0)
                throw std::logic_error("rank formula produced a negative multiplicity at V(" +
                                       std::to_string(s) + "," + std::to_string(t) + ")");
            if (mu > 0) out.add({s, t}, mu);
        }
    if (out.total_dim() != rep.total_dim())
        throw std::logic_error("interval decomposition does not account for the full dimension");
    return out;
}

Representation interval_direct_sum(const Quiver& q, const IntervalMultiset& summands) {
    auto line = line_shape(q);
    if (!line) throw std::invalid_argument("interval_direct_sum requires an A-type line quiver");

    // slot layout per position, blocks ordered by (interval, copy)
    std::map<int, std::vector<std::pair<Interval, int>>> slots;
    for (const auto& [interval, count] : summands.mult)
        for (int copy = 0; copy < count; ++copy)
            for (int p = interval.lo; p <= interval.hi; ++p) slots[p].push_back({interval, copy});

    Representation rep;
    rep.quiver = q;
    for (const auto& [p, list] : slots) {
        Vertex v = line->order[static_cast<std::size_t>(p - line->offset)];
        rep.dims[v.id] = static_cast<int>(list.size());
    }
    for (const auto& [p, list] : slots) {
        auto next = slots.find(p + 1);
        if (next == slots.end()) continue;
        if (p + 1 - line->offset >= static_cast<int>(line->order.size())) continue;
        Matrix m(static_cast<int>(next->second.size()), static_cast<int>(list.size()));
        for (std::size_t col = 0; col < list.size(); ++col) {
            auto needle = list[col];
            if (needle.first.hi < p + 1) continue;
            for (std::size_t row = 0; row < next->second.size(); ++row)
                if (next->second[row] == needle) {
                    m.at(static_cast<int>(row), static_cast<int>(col)) = RationalFunction(1);
                    break;
                }
        }
        rep.mats[line->step[static_cast<std::size_t>(p - line->offset)].id] = std::move(m);
    }
    return rep;
}

// ---------------------------------------------------------------- CG tables

std::vector<CgEntry> cg_table(const BialgebraSpec& spec, int bound) {
    auto line = line_shape(spec.quiver);
    if (!line) throw std::invalid_argument("cg_table requires an A-type line quiver");
    const int first = line->offset;
    const int last = std::min(bound, line->position(line->order.size() - 1));

    std::vector<CgEntry> table;
    for (int i = first; i <= last; ++i)
        for (int j = i; j <= last; ++j)
            for (int k = first; k <= last; ++k)
                for (int l = k; l <= last; ++l) {
                    Representation left = interval_module(spec.quiver, i, j);
                    Representation right = interval_module(spec.quiver, k, l);
                    CgEntry entry{{i, j}, {k, l}, {}};
                    entry.decomposition =
                        barcode_decompose(tensor_representations(spec, left, right));
                    table.push_back(std::move(entry));
                }
    return table;
}

std::string cg_table_str(const std::vector<CgEntry>& table) {
    std::size_t width = 0;
    for (const auto& entry : table)
        width = std::max(width, entry.left.str().size() + entry.right.str().size() + 7);
    std::string out;
    for (const auto& entry : table) {
        std::string lhs = entry.left.str() + " (x) " + entry.right.str();
        out += lhs;
        out.append(width > lhs.size() ? width - lhs.size() : 0, ' ');
        out += " = " + entry.decomposition.str() + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- rep ring

namespace {

using RingElement = std::map<Interval, long long>;
using PairKey = std::pair<Interval, Interval>;

struct RingContext {
    const BialgebraSpec& spec;
    std::map<PairKey, IntervalMultiset> cache;

    const IntervalMultiset& product(Interval a, Interval b) {
        auto key = PairKey{a, b};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Representation left = interval_module(spec.quiver, a.lo, a.hi);
        Representation right = interval_module(spec.quiver, b.lo, b.hi);
        IntervalMultiset result = barcode_decompose(tensor_representations(spec, left, right));
        return cache.emplace(key, std::move(result)).first->second;
    }
};

RingElement to_ring(const IntervalMultiset& m) {
    RingElement out;
    for (const auto& [interval, count] : m.mult) out[interval] = count;
    return out;
}

void ring_add(RingElement& target, const RingElement& other, long long scale) {
    for (const auto& [interval, count] : other) {
        long long& c = target[interval];
        c += count * scale;
        if (c == 0) target.erase(interval);
    }
}

RingElement ring_mul(RingContext& ctx, const RingElement& a, const RingElement& b) {
    RingElement out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) ring_add(out, to_ring(ctx.product(ia, ib)), ca * cb);
    return out;
}

std::string ring_str(const RingElement& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [interval, count] : e) {
        if (!out.empty()) out += " ";
        out += (count >= 0 ? "+" : "-") + std::to_string(count < 0 ? -count : count) + "*" +
               interval.str();
    }
    return out;
}

// Z[X, Y] with monomial keys (x degree, y degree).
using XyPoly = std::map<std::pair<int, int>, long long>;

XyPoly xy_shift(const XyPoly& p, int dx, int dy) {
    XyPoly out;
    for (const auto& [key, c] : p) out[{key.first + dx, key.second + dy}] = c;
    return out;
}

void xy_add(XyPoly& target, const XyPoly& other, long long scale) {
    for (const auto& [key, c] : other) {
        long long& t = target[key];
        t += c * scale;
        if (t == 0) target.erase(key);
    }
}

}  // namespace

VerifyReport rep_ring_check(const BialgebraSpec& spec, int bound) {
    if (spec.quiver.kind() != Quiver::Kind::AInfinity)
        throw std::invalid_argument("rep_ring_check expects the A-infinity structure");
    if (bound < 1) throw std::domain_error("rep_ring_check needs bound >= 1");

    VerifyReport report;
    report.header = "representation-ring checks on interval classes with endpoints <= " +
                    std::to_string(bound);
    RingContext ctx{spec, {}};

    std::vector<Interval> intervals;
    for (int i = 0; i <= bound; ++i)
        for (int j = i; j <= bound; ++j) intervals.push_back({i, j});

    VerifyCheck commutativity{"class commutativity", 0, true, ""};
    for (const Interval& a : intervals) {
        if (!commutativity.pass) break;
        for (const Interval& b : intervals) {
            ++commutativity.cases;
            if (ctx.product(a, b) != ctx.product(b, a)) {
                commutativity.pass = false;
                commutativity.counterexample =
                    "[" + a.str() + "][" + b.str() + "] = " + ctx.product(a, b).str() + " but [" +
                    b.str() + "][" + a.str() + "] = " + ctx.product(b, a).str();
                break;
            }
        }
    }
    report.checks.push_back(commutativity);

    const RingElement x = {{Interval{0, 1}, 1}};
    const RingElement y = {{Interval{1, 1}, 1}};

    VerifyCheck recurrence{"recurrence [V(0,n+1)] = [V(0,1)][V(0,n)] - [V(1,1)][V(0,n-1)]", 0, true,
                           ""};
    for (int n = 1; n + 1 <= bound; ++n) {
        ++recurrence.cases;
        RingElement rhs = ring_mul(ctx, x, {{Interval{0, n}, 1}});
        ring_add(rhs, ring_mul(ctx, y, {{Interval{0, n - 1}, 1}}), -1);
        RingElement lhs = {{Interval{0, n + 1}, 1}};
        if (lhs != rhs) {
            recurrence.pass = false;
            recurrence.counterexample = "n = " + std::to_string(n) + ": rhs = " + ring_str(rhs);
            break;
        }
    }
    report.checks.push_back(recurrence);

    // P_0 = 1, P_1 = X, P_{m+1} = X P_m - Y P_{m-1}; [V(i,j)] = Y^i P_{j-i}
    VerifyCheck expressibility{"generator expressibility in [V(0,1)], [V(1,1)]", 0, true, ""};
    std::vector<XyPoly> p_polys;
    p_polys.push_back({{{0, 0}, 1}});
    p_polys.push_back({{{1, 0}, 1}});
    for (int m = 1; m < bound; ++m) {
        XyPoly next = xy_shift(p_polys[static_cast<std::size_t>(m)], 1, 0);
        xy_add(next, xy_shift(p_polys[static_cast<std::size_t>(m - 1)], 0, 1), -1);
        p_polys.push_back(std::move(next));
    }
    for (const Interval& target : intervals) {
        if (!expressibility.pass) break;
        ++expressibility.cases;
        XyPoly poly = xy_shift(p_polys[static_cast<std::size_t>(target.hi - target.lo)], 0, target.lo);
        RingElement value;
        for (const auto& [key, coeff] : poly) {
            RingElement monomial = {{Interval{0, 0}, 1}};  // the unit class
            for (int a = 0; a < key.first; ++a) monomial = ring_mul(ctx, monomial, x);
            for (int b = 0; b < key.second; ++b) monomial = ring_mul(ctx, monomial, y);
            ring_add(value, monomial, coeff);
        }
        RingElement expected = {{target, 1}};
        if (value != expected) {
            expressibility.pass = false;
            expressibility.counterexample =
                "[" + target.str() + "] evaluates to " + ring_str(value);
        }
    }
    report.checks.push_back(expressibility);

    return report;
}

}  // namespace qsh
