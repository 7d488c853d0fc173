// JSON definition files and report documents.
//
// Rationals are strings "p/q". Tensors are read as nested arrays or as
// sparse maps {"[i,j,k]": "p/q"} and always written dense, so emitted files
// are canonical. Parse failures throw Error(ParseError) naming the JSON path.
#pragma once

#include "bicross/fixtures.hpp"
#include "bicross/graded.hpp"
#include "bicross/group.hpp"
#include "bicross/lie.hpp"
#include "bicross/quantum.hpp"
#include "bicross/report.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace bicross::io {

using json = nlohmann::ordered_json;

/// A closed-form graded family, referenced by name.
struct GradedSpec {
    std::string family = "w1";
    friend bool operator==(const GradedSpec&, const GradedSpec&) = default;
};

/// Split files consumed by `factor`.
struct LieSplit {
    SubspacePair pair;
};
struct GroupSubsets {
    std::vector<std::string> M, H;  // element labels
};
struct CoalgebraEmbeddings {
    CoalgebraTensor M, H;
    Matrix i, j;
};
struct AlgebraProjections {
    AlgebraTensor M;
    BialgebraTensor H;
    Matrix q, p;
};

using Definition = std::variant<LieAlgebra, BicocycleSumData, GradedSpec, FiniteGroup, BicocycleGroupData,
                                CoalgebraTensor, BialgebraTensor, CdcpData, CdccData, BicocycleData, LieSplit,
                                GroupSubsets, CoalgebraEmbeddings, AlgebraProjections>;

inline const char* kind_name(const Definition& d) {
    static const char* names[] = {"lie_algebra", "bicocycle_sum_data", "graded_lie",     "finite_group",
                                  "group_data",  "coalgebra",          "bialgebra",      "cdcp_data",
                                  "cdcc_data",   "bicocycle_data",     "lie_split",      "group_split",
                                  "bialgebra_split", "cdcc_split"};
    return names[d.index()];
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, (path.empty() ? "/" : path) + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing");
    return *it;
}

// --- scalars ----------------------------------------------------------------

inline Rational read_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        fail(path, "bad rational '" + j.get<std::string>() + "'");
    }
}

inline std::size_t read_index(const json& j, std::size_t bound, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    const auto v = j.get<std::size_t>();
    if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

inline std::vector<std::string> read_labels(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail(path + "/" + std::to_string(i), "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

inline std::size_t label_index(const std::vector<std::string>& labels, const json& j, const std::string& path) {
    if (j.is_string()) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == j.get<std::string>()) return i;
        fail(path, "unknown label '" + j.get<std::string>() + "'");
    }
    return read_index(j, labels.size(), path);
}

// --- arrays -----------------------------------------------------------------

/// Parses a sparse key "[i,j,k]".
inline std::vector<std::size_t> read_key(const std::string& key, const std::vector<std::size_t>& shape,
                                         const std::string& path) {
    json k;
    try {
        k = json::parse(key);
    } catch (const json::exception&) {
        fail(path, "bad sparse key '" + key + "'");
    }
    if (!k.is_array() || k.size() != shape.size()) fail(path, "sparse key '" + key + "' has the wrong arity");
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < shape.size(); ++a) out.push_back(read_index(k[a], shape[a], path + "[" + key + "]"));
    return out;
}

/// Dense nested array or sparse map into a flat row-major buffer.
inline std::vector<Rational> read_array(const json& j, const std::vector<std::size_t>& shape, const std::string& path) {
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    std::vector<Rational> out(total);
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            const auto idx = read_key(key, shape, path);
            std::size_t flat = 0;
            for (std::size_t a = 0; a < shape.size(); ++a) flat = flat * shape[a] + idx[a];
            out[flat] = read_rational(val, path + "/" + key);
        }
        return out;
    }
    std::size_t pos = 0;
    auto rec = [&](auto&& self, const json& node, std::size_t depth, const std::string& p) -> void {
        if (depth == shape.size()) {
            out[pos++] = read_rational(node, p);
            return;
        }
        if (!node.is_array() || node.size() != shape[depth])
            fail(p, "expected an array of length " + std::to_string(shape[depth]));
        for (std::size_t i = 0; i < node.size(); ++i) self(self, node[i], depth + 1, p + "/" + std::to_string(i));
    };
    rec(rec, j, 0, path);
    return out;
}

inline Tensor3 read_tensor(const json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& path) {
    Tensor3 t(a, b, c);
    t.data() = read_array(j, {a, b, c}, path);
    return t;
}

inline Vector read_vector(const json& j, std::size_t n, const std::string& path) {
    return Vector(read_array(j, {n}, path));
}

inline Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    const auto flat = read_array(j, {rows, cols}, path);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = flat[r * cols + c];
    return m;
}

inline json write_rational(const Rational& q) { return q.str(); }

inline json write_vector(const Vector& v) {
    json a = json::array();
    for (const auto& x : v.data()) a.push_back(write_rational(x));
    return a;
}

inline json write_tensor(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.dim(0); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.dim(1); ++j) {
            json fib = json::array();
            for (std::size_t k = 0; k < t.dim(2); ++k) fib.push_back(write_rational(t.at(i, j, k)));
            row.push_back(fib);
        }
        out.push_back(row);
    }
    return out;
}

inline json write_matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_rational(m(r, c)));
        out.push_back(row);
    }
    return out;
}

inline json write_table(const Table& t) {
    json out = json::array();
    for (const auto& row : t) out.push_back(row);
    return out;
}

inline Table read_table(const json& j, std::size_t rows, std::size_t cols, std::size_t range, const std::string& path) {
    if (!j.is_array() || j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
    Table t(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto p = path + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) fail(p, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) t[r].push_back(read_index(j[r][c], range, p + "/" + std::to_string(c)));
    }
    return t;
}

// --- structures -------------------------------------------------------------

inline json write_coalgebra(const CoalgebraTensor& C) {
    json j;
    j["basis"] = C.space.labels;
    j["comul"] = write_tensor(C.comul);
    j["counit"] = write_vector(C.counit);
    if (C.grouplike) j["grouplike"] = write_vector(*C.grouplike);
    return j;
}

inline CoalgebraTensor read_coalgebra(const json& j, const std::string& path) {
    CoalgebraTensor C;
    C.space = BasedSpace(read_labels(field(j, "basis", path), path + "/basis"));
    const std::size_t n = C.dim();
    C.comul = read_tensor(field(j, "comul", path), n, n, n, path + "/comul");
    C.counit = read_vector(field(j, "counit", path), n, path + "/counit");
    if (j.contains("grouplike")) C.grouplike = read_vector(j["grouplike"], n, path + "/grouplike");
    return C;
}

inline json write_algebra(const AlgebraTensor& A) {
    json j;
    j["basis"] = A.space.labels;
    j["mul"] = write_tensor(A.mul);
    j["unit"] = write_vector(A.unit);
    if (A.character) j["character"] = write_vector(*A.character);
    return j;
}

inline AlgebraTensor read_algebra(const json& j, const std::string& path) {
    AlgebraTensor A;
    A.space = BasedSpace(read_labels(field(j, "basis", path), path + "/basis"));
    const std::size_t n = A.dim();
    A.mul = read_tensor(field(j, "mul", path), n, n, n, path + "/mul");
    A.unit = read_vector(field(j, "unit", path), n, path + "/unit");
    if (j.contains("character")) A.character = read_vector(j["character"], n, path + "/character");
    return A;
}

inline json write_bialgebra(const BialgebraTensor& B) {
    json j;
    j["basis"] = B.algebra.space.labels;
    j["mul"] = write_tensor(B.algebra.mul);
    j["unit"] = write_vector(B.algebra.unit);
    j["comul"] = write_tensor(B.coalgebra.comul);
    j["counit"] = write_vector(B.coalgebra.counit);
    if (B.coalgebra.grouplike) j["grouplike"] = write_vector(*B.coalgebra.grouplike);
    if (B.algebra.character) j["character"] = write_vector(*B.algebra.character);
    return j;
}

inline BialgebraTensor read_bialgebra(const json& j, const std::string& path) {
    BialgebraTensor B;
    B.algebra = read_algebra(j, path);
    B.coalgebra = read_coalgebra(j, path);
    return B;
}

inline json write_pointed(const PointedSet& s) {
    json j;
    j["elements"] = s.elements;
    j["point"] = s.point;
    return j;
}

inline PointedSet read_pointed(const json& j, const std::string& path) {
    PointedSet s;
    s.elements = read_labels(field(j, "elements", path), path + "/elements");
    if (s.elements.empty()) fail(path + "/elements", "empty set");
    s.point = label_index(s.elements, field(j, "point", path), path + "/point");
    return s;
}


inline json write_pair(const SubspacePair& p) {
    json j;
    j["ambient"] = p.ambient.labels;
    json m = json::array(), h = json::array();
    for (std::size_t c = 0; c < p.m_dim(); ++c) m.push_back(write_vector(p.m_basis.column(c)));
    for (std::size_t c = 0; c < p.h_dim(); ++c) h.push_back(write_vector(p.h_basis.column(c)));
    j["m"] = m;
    j["h"] = h;
    if (!p.m_labels.empty()) j["m_labels"] = p.m_labels;
    if (!p.h_labels.empty()) j["h_labels"] = p.h_labels;
    return j;
}

inline SubspacePair read_pair(const json& j, const std::string& path) {
    const BasedSpace amb(read_labels(field(j, "ambient", path), path + "/ambient"));
    auto cols = [&](const char* key) {
        const json& a = field(j, key, path);
        if (!a.is_array()) fail(path + "/" + key, "expected an array of vectors");
        std::vector<Vector> out;
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(read_vector(a[i], amb.dim(), path + "/" + key + "/" + std::to_string(i)));
        return out;
    };
    SubspacePair p(amb, cols("m"), cols("h"));
    if (j.contains("m_labels")) p.m_labels = read_labels(j["m_labels"], path + "/m_labels");
    if (j.contains("h_labels")) p.h_labels = read_labels(j["h_labels"], path + "/h_labels");
    return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Definition files

inline json to_json(const Definition& def) {
    using namespace detail;
    json j;
    j["kind"] = kind_name(def);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LieAlgebra>) {
                j["basis"] = v.space.labels;
                j["bracket"] = write_tensor(v.bracket.coeffs);
            } else if constexpr (std::is_same_v<T, BicocycleSumData>) {
                j["m_basis"] = v.m.labels;
                j["h_basis"] = v.h.labels;
                for (auto [name, t] : {std::pair{"phi", &v.phi}, {"theta", &v.theta}, {"mu", &v.mu},
                                       {"gamma", &v.gamma}, {"varphi", &v.varphi}, {"psi", &v.psi}})
                    j[name] = write_tensor(t->coeffs);
            } else if constexpr (std::is_same_v<T, GradedSpec>) {
                j["family"] = v.family;
            } else if constexpr (std::is_same_v<T, FiniteGroup>) {
                j["elements"] = v.elements;
                j["identity"] = v.identity;
                j["table"] = write_table(v.cayley);
            } else if constexpr (std::is_same_v<T, BicocycleGroupData>) {
                j["M"] = write_pointed(v.M);
                j["H"] = write_pointed(v.H);
                for (auto [name, t] : {std::pair{"varphi", &v.varphi}, {"psi", &v.psi}, {"phi", &v.phi},
                                       {"theta", &v.theta}, {"mu", &v.mu}, {"gamma", &v.gamma}})
                    j[name] = write_table(*t);
            } else if constexpr (std::is_same_v<T, CoalgebraTensor>) {
                j.update(write_coalgebra(v));
            } else if constexpr (std::is_same_v<T, BialgebraTensor>) {
                j.update(write_bialgebra(v));
            } else if constexpr (std::is_same_v<T, CdcpData>) {
                j["M"] = write_coalgebra(v.M);
                j["H"] = write_bialgebra(v.H);
                for (auto [name, t] : {std::pair{"varphi", &v.varphi}, {"psi", &v.psi}, {"phi", &v.phi},
                                       {"theta", &v.theta}})
                    j[name] = write_tensor(*t);
            } else if constexpr (std::is_same_v<T, CdccData>) {
                j["M"] = write_algebra(v.M);
                j["H"] = write_bialgebra(v.H);
                for (auto [name, t] : {std::pair{"nabla", &v.nabla}, {"blackdown", &v.blackdown},
                                       {"delta", &v.delta}, {"sigma", &v.sigma}})
                    j[name] = write_tensor(*t);
            } else if constexpr (std::is_same_v<T, BicocycleData>) {
                j["M"] = write_coalgebra(v.M);
                j["H"] = write_coalgebra(v.H);
                for (auto [name, t] : {std::pair{"varphi", &v.varphi}, {"psi", &v.psi}, {"phi", &v.phi},
                                       {"theta", &v.theta}, {"mu", &v.mu}, {"gamma", &v.gamma}})
                    j[name] = write_tensor(*t);
            } else if constexpr (std::is_same_v<T, LieSplit>) {
                j.update(write_pair(v.pair));
            } else if constexpr (std::is_same_v<T, GroupSubsets>) {
                j["M"] = v.M;
                j["H"] = v.H;
            } else if constexpr (std::is_same_v<T, CoalgebraEmbeddings>) {
                j["M"] = write_coalgebra(v.M);
                j["H"] = write_coalgebra(v.H);
                j["i"] = write_matrix(v.i);
                j["j"] = write_matrix(v.j);
            } else {
                j["M"] = write_algebra(v.M);
                j["H"] = write_bialgebra(v.H);
                j["q"] = write_matrix(v.q);
                j["p"] = write_matrix(v.p);
            }
        },
        def);
    return j;
}

inline Definition from_json(const json& j) {
    using namespace detail;
    const json& k = field(j, "kind", "");
    if (!k.is_string()) fail("/kind", "expected a string");
    const std::string kind = k.get<std::string>();
    auto tensor = [&](const char* name, std::size_t a, std::size_t b, std::size_t c) {
        return read_tensor(field(j, name, ""), a, b, c, std::string("/") + name);
    };
    if (kind == "lie_algebra") {
        LieAlgebra L(BasedSpace(read_labels(field(j, "basis", ""), "/basis")));
        const std::size_t n = L.dim();
        L.bracket.coeffs = tensor("bracket", n, n, n);
        return L;
    }
    if (kind == "bicocycle_sum_data") {
        BicocycleSumData d(BasedSpace(read_labels(field(j, "m_basis", ""), "/m_basis")),
                           BasedSpace(read_labels(field(j, "h_basis", ""), "/h_basis")));
        for (auto [name, t] : {std::pair{"phi", &d.phi}, {"theta", &d.theta}, {"mu", &d.mu}, {"gamma", &d.gamma},
                               {"varphi", &d.varphi}, {"psi", &d.psi}})
            t->coeffs = tensor(name, t->left.dim(), t->right.dim(), t->codomain.dim());
        return d;
    }
    if (kind == "graded_lie") {
        GradedSpec g;
        const json& f = field(j, "family", "");
        if (!f.is_string() || f.get<std::string>() != "w1") fail("/family", "unknown graded family");
        g.family = f.get<std::string>();
        return g;
    }
    if (kind == "finite_group") {
        FiniteGroup G;
        G.elements = read_labels(field(j, "elements", ""), "/elements");
        const std::size_t n = G.order();
        if (n == 0) fail("/elements", "empty group");
        G.identity = label_index(G.elements, field(j, "identity", ""), "/identity");
        G.cayley = read_table(field(j, "table", ""), n, n, n, "/table");
        return G;
    }
    if (kind == "group_data") {
        BicocycleGroupData d;
        d.M = read_pointed(field(j, "M", ""), "/M");
        d.H = read_pointed(field(j, "H", ""), "/H");
        const std::size_t m = d.M.size(), n = d.H.size();
        auto table = [&](const char* name, std::size_t r, std::size_t c, std::size_t range) {
            return read_table(field(j, name, ""), r, c, range, std::string("/") + name);
        };
        d.varphi = table("varphi", n, m, m);
        d.psi = table("psi", n, m, n);
        d.phi = table("phi", m, m, m);
        d.theta = table("theta", m, m, n);
        d.mu = table("mu", n, n, n);
        d.gamma = table("gamma", n, n, m);
        return d;
    }
    if (kind == "coalgebra") return read_coalgebra(j, "");
    if (kind == "bialgebra") return read_bialgebra(j, "");
    if (kind == "cdcp_data") {
        CdcpData d(read_coalgebra(field(j, "M", ""), "/M"), read_bialgebra(field(j, "H", ""), "/H"));
        const std::size_t dm = d.M.dim(), dh = d.H.dim();
        if (!d.M.grouplike) fail("/M/grouplike", "missing");
        d.varphi = tensor("varphi", dh, dm, dm);
        d.psi = tensor("psi", dh, dm, dh);
        d.phi = tensor("phi", dm, dm, dm);
        d.theta = tensor("theta", dm, dm, dh);
        return d;
    }
    if (kind == "cdcc_data") {
        CdccData d(read_algebra(field(j, "M", ""), "/M"), read_bialgebra(field(j, "H", ""), "/H"));
        const std::size_t dm = d.M.dim(), dh = d.H.dim();
        if (!d.M.character) fail("/M/character", "missing");
        d.nabla = tensor("nabla", dm, dh, dm);
        d.blackdown = tensor("blackdown", dh, dh, dm);
        d.delta = tensor("delta", dm, dm, dm);
        d.sigma = tensor("sigma", dh, dm, dm);
        return d;
    }
    if (kind == "bicocycle_data") {
        BicocycleData d(read_coalgebra(field(j, "M", ""), "/M"), read_coalgebra(field(j, "H", ""), "/H"));
        const std::size_t dm = d.M.dim(), dh = d.H.dim();
        if (!d.M.grouplike) fail("/M/grouplike", "missing");
        if (!d.H.grouplike) fail("/H/grouplike", "missing");
        d.varphi = tensor("varphi", dh, dm, dm);
        d.psi = tensor("psi", dh, dm, dh);
        d.phi = tensor("phi", dm, dm, dm);
        d.theta = tensor("theta", dm, dm, dh);
        d.mu = tensor("mu", dh, dh, dh);
        d.gamma = tensor("gamma", dh, dh, dm);
        return d;
    }
    if (kind == "lie_split") return LieSplit{read_pair(j, "")};
    if (kind == "group_split")
        return GroupSubsets{read_labels(field(j, "M", ""), "/M"), read_labels(field(j, "H", ""), "/H")};
    if (kind == "bialgebra_split") {
        CoalgebraEmbeddings e{read_coalgebra(field(j, "M", ""), "/M"), read_coalgebra(field(j, "H", ""), "/H"), {}, {}};
        const json& i = field(j, "i", "");
        const std::size_t rows = i.is_array() ? i.size() : 0;
        e.i = read_matrix(i, rows, e.M.dim(), "/i");
        e.j = read_matrix(field(j, "j", ""), rows, e.H.dim(), "/j");
        return e;
    }
    if (kind == "cdcc_split") {
        AlgebraProjections a{read_algebra(field(j, "M", ""), "/M"), read_bialgebra(field(j, "H", ""), "/H"), {}, {}};
        const json& q = field(j, "q", "");
        const std::size_t cols = q.is_array() && !q.empty() && q[0].is_array() ? q[0].size() : 0;
        a.q = read_matrix(q, a.M.dim(), cols, "/q");
        a.p = read_matrix(field(j, "p", ""), a.H.dim(), cols, "/p");
        return a;
    }
    fail("/kind", "unknown kind '" + kind + "'");
}

inline Definition parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("/: ") + e.what());
    }
    return from_json(j);
}

inline std::string serialize(const Definition& d) { return to_json(d).dump(2) + "\n"; }

inline GradedLieData graded(const GradedSpec&) { return fixtures::w1_graded(); }

// ---------------------------------------------------------------------------
// Reports

/// Which equation form an entry evaluates, when the choice matters.
inline std::string axiom_form(const AxiomEntry& e) {
    if (e.note == "literal" || e.note.find("extra-variable") != std::string::npos) return "literal";
    static const char* chosen[] = {"A4", "B3", "B4", "B7", "B10"};
    for (const char* id : chosen)
        if (e.id == id) return "proof-derived";
    return "";
}

inline json report_json(const std::string& kind, const AxiomReport& r) {
    json out;
    out["tool"] = "bicross";
    out["version"] = "0.1.0";
    out["kind"] = kind;
    out["passed"] = r.all_hold();
    json entries = json::array();
    for (const auto& e : r.entries) {
        json je;
        je["id"] = e.id;
        je["name"] = e.name;
        je["holds"] = e.holds;
        je["checked"] = e.checked;
        je["violation_count"] = e.violation_count;
        if (const auto f = axiom_form(e); !f.empty()) je["form"] = f;
        if (!e.note.empty()) je["note"] = e.note;
        json vs = json::array();
        for (const auto& v : e.violations) {
            json jv;
            jv["tuple"] = v.tuple;
            jv["residual"] = v.residual;
            if (!v.context.empty()) jv["context"] = v.context;
            vs.push_back(jv);
        }
        je["violations"] = vs;
        entries.push_back(je);
    }
    out["entries"] = entries;
    return out;
}

}  // namespace bicross::io
