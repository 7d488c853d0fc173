// Command-line driver: verify, build, factor and demo.
// Exit codes: 0 pass, 1 axiom or precondition failure, 2 usage or parse error.

#include "bicross/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bicross;
using io::json;

namespace {

struct Flags {
    std::string report, out;
    long sum_bound = 20;
    bool literal = false;
    bool timing = false;
    unsigned jobs = 1;
    std::size_t max_violations = 32;

    [[nodiscard]] VerifyOptions options() const {
        VerifyOptions o;
        o.jobs = jobs;
        o.max_violations = max_violations;
        o.literal_axioms = literal;
        return o;
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void print_report(const AxiomReport& r) {
    for (const auto& e : r.entries) {
        std::cout << (e.holds ? "  ok    " : "  FAIL  ") << e.id << "  " << e.name << "  (" << e.checked << " checked";
        if (!e.holds) std::cout << ", " << e.violation_count << " violations";
        std::cout << ")\n";
        if (!e.holds && !e.violations.empty()) {
            const auto& v = e.violations.front();
            std::cout << "        at (";
            for (std::size_t i = 0; i < v.tuple.size(); ++i) std::cout << (i ? "," : "") << v.tuple[i];
            std::cout << ")";
            if (!v.context.empty()) std::cout << " " << v.context;
            std::cout << " residual [";
            for (std::size_t i = 0; i < v.residual.size(); ++i) std::cout << (i ? " " : "") << v.residual[i];
            std::cout << "]\n";
        }
    }
}

/// Prints the report, writes it when asked, and returns the exit code.
int finish(const std::string& kind, const AxiomReport& r, const Flags& f, double seconds) {
    print_report(r);
    const auto failing = r.failing_ids();
    std::cout << (failing.empty() ? "PASS" : "FAIL") << " " << kind;
    if (!failing.empty()) {
        std::cout << ":";
        for (const auto& id : failing) std::cout << " " << id;
    }
    std::cout << "\n";
    if (!f.report.empty()) {
        json doc = io::report_json(kind, r);
        if (f.timing) doc["timing"] = {{"seconds", seconds}};
        spit(f.report, doc.dump(2) + "\n");
    }
    return failing.empty() ? 0 : 1;
}

template <class F>
std::pair<AxiomReport, double> timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    AxiomReport r = f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return {r, dt.count()};
}

AxiomReport verify_definition(const io::Definition& def, const Flags& f) {
    const VerifyOptions o = f.options();
    return std::visit(
        [&](const auto& v) -> AxiomReport {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LieAlgebra>) return verify_lie_axioms(v, o);
            else if constexpr (std::is_same_v<T, BicocycleSumData>) return verify_matched_pair(v, o);
            else if constexpr (std::is_same_v<T, io::GradedSpec>) return graded_verify(io::graded(v), f.sum_bound, o);
            else if constexpr (std::is_same_v<T, FiniteGroup>) return verify_group_axioms(v, o);
            else if constexpr (std::is_same_v<T, BicocycleGroupData>) return verify_group_conditions(v, o);
            else if constexpr (std::is_same_v<T, CoalgebraTensor>) return verify_coalgebra(v, o);
            else if constexpr (std::is_same_v<T, BialgebraTensor>) return verify_bialgebra(v, o);
            else if constexpr (std::is_same_v<T, CdcpData>) return verify_cdcp_conditions(v, o);
            else if constexpr (std::is_same_v<T, CdccData>) return verify_cdcc_conditions(v, o);
            else if constexpr (std::is_same_v<T, BicocycleData>) return verify_bicocycle_conditions(v, o);
            else throw UsageError(std::string("nothing to verify in a ") + io::kind_name(def) + " file");
        },
        def);
}

int cmd_verify(const std::string& path, const Flags& f) {
    const auto def = io::parse(slurp(path));
    auto [r, secs] = timed([&] { return verify_definition(def, f); });
    return finish(io::kind_name(def), r, f, secs);
}

/// Writes the built object; on failure reports the object's axioms together
/// with the data's conditions.
int emit_built(const io::Definition& built, const AxiomReport& axioms, const AxiomReport& conditions,
               const Flags& f) {
    if (!axioms.all_hold()) {
        AxiomReport r = axioms;
        r.append(conditions);
        return finish(io::kind_name(built), r, f, 0.0);
    }
    const std::string text = io::serialize(built);
    if (f.out.empty())
        std::cout << text;
    else
        spit(f.out, text);
    return 0;
}

int cmd_build(const std::string& path, const Flags& f) {
    const auto def = io::parse(slurp(path));
    const VerifyOptions o = f.options();
    if (const auto* d = std::get_if<BicocycleSumData>(&def)) {
        const LieAlgebra L = build_bicocycle_sum(*d);
        return emit_built(L, verify_lie_axioms(L, o), verify_matched_pair(*d, o), f);
    }
    if (const auto* d = std::get_if<BicocycleGroupData>(&def)) {
        try {
            return emit_built(build_bicocycle_group(*d, o), {}, {}, f);
        } catch (const NotAGroupError& e) {
            std::cout << e.what() << "\n";
            return finish("finite_group", e.report(), f, 0.0);
        }
    }
    if (const auto* d = std::get_if<CdcpData>(&def)) {
        const auto B = build_cdcp(*d);
        return emit_built(B, verify_bialgebra(B, o), verify_cdcp_conditions(*d, o), f);
    }
    if (const auto* d = std::get_if<CdccData>(&def)) {
        const auto B = build_cdcc(*d);
        return emit_built(B, verify_bialgebra(B, o), verify_cdcc_conditions(*d, o), f);
    }
    if (const auto* d = std::get_if<BicocycleData>(&def)) {
        const auto B = build_bicocycle_bialgebra(*d);
        return emit_built(B, verify_bialgebra(B, o), verify_bicocycle_conditions(*d, o), f);
    }
    throw UsageError(std::string("cannot build from a ") + io::kind_name(def) + " file");
}

std::vector<std::size_t> element_indices(const FiniteGroup& G, const std::vector<std::string>& labels) {
    std::vector<std::size_t> out;
    for (const auto& l : labels) {
        auto it = std::find(G.elements.begin(), G.elements.end(), l);
        if (it == G.elements.end()) throw Error(ErrorKind::ParseError, "/M or /H: unknown element '" + l + "'");
        out.push_back(static_cast<std::size_t>(it - G.elements.begin()));
    }
    return out;
}

int cmd_factor(const std::string& object, const std::string& split, const Flags& f) {
    const auto obj = io::parse(slurp(object));
    const auto sp = io::parse(slurp(split));
    io::Definition result;
    if (std::holds_alternative<LieAlgebra>(obj) && std::holds_alternative<io::LieSplit>(sp)) {
        result = decompose(std::get<LieAlgebra>(obj), std::get<io::LieSplit>(sp).pair);
    } else if (std::holds_alternative<FiniteGroup>(obj) && std::holds_alternative<io::GroupSubsets>(sp)) {
        const auto& G = std::get<FiniteGroup>(obj);
        const auto& s = std::get<io::GroupSubsets>(sp);
        result = factor_group(G, element_indices(G, s.M), element_indices(G, s.H));
    } else if (std::holds_alternative<BialgebraTensor>(obj) && std::holds_alternative<io::CoalgebraEmbeddings>(sp)) {
        const auto& s = std::get<io::CoalgebraEmbeddings>(sp);
        result = factorize_bialgebra(std::get<BialgebraTensor>(obj), s.M, s.H, s.i, s.j);
    } else if (std::holds_alternative<BialgebraTensor>(obj) && std::holds_alternative<io::AlgebraProjections>(sp)) {
        const auto& s = std::get<io::AlgebraProjections>(sp);
        result = factorize_cdcc(std::get<BialgebraTensor>(obj), s.M, s.H, s.q, s.p);
    } else {
        throw UsageError(std::string("cannot factor a ") + io::kind_name(obj) + " along a " + io::kind_name(sp));
    }
    const std::string text = io::serialize(result);
    if (f.out.empty())
        std::cout << text;
    else
        spit(f.out, text);
    return 0;
}

// --- demos ------------------------------------------------------------------

std::size_t total_checked(const AxiomReport& r, const std::string& skip = "") {
    std::size_t n = 0;
    for (const auto& e : r.entries)
        if (e.id != skip) n += e.checked;
    return n;
}

int demo_w1(const Flags& f) {
    const long bound = f.sum_bound;
    auto [r, secs] = timed([&] { return graded_verify(fixtures::w1_graded(), bound, f.options()); });
    std::size_t held = 0, axioms = 0;
    for (const auto& e : r.entries)
        if (e.id != "bracket") {
            ++axioms;
            held += e.holds ? 1 : 0;
        }
    const auto* br = r.find("bracket");
    std::cout << "bracket " << (br->holds ? "matches" : "differs from") << " (j-i)z_{i+j} on " << br->checked
              << " pairs with index sum <= " << bound << "\n";
    std::cout << held << "/" << axioms << " axioms hold on " << total_checked(r, "bracket") << " tuples\n";
    return finish("graded_lie", r, f, secs);
}

int demo_sl2(const Flags& f) {
    const auto s = fixtures::sl2_split();
    const AxiomReport r = verify_matched_pair(s.data, f.options());
    const LieAlgebra rebuilt = build_bicocycle_sum(s.data);
    const bool same = rebuilt.bracket.coeffs == s.algebra.bracket.coeffs;
    std::cout << "theta(e,f) = " << s.data.theta.coeffs.at(0, 1, 0) << " h, varphi(h,e) = "
              << s.data.varphi.coeffs.at(0, 0, 0) << " e\n";
    std::cout << "round trip: bracket tensors " << (same ? "equal" : "DIFFER") << "\n";
    const int code = finish("bicocycle_sum_data", r, f, 0.0);
    return same ? code : 1;
}

int demo_z4(const Flags& f) {
    const auto s = fixtures::z4_group_split();
    const AxiomReport r = verify_group_conditions(s.data, f.options());
    const FiniteGroup built = bicocycle_product_table(s.data);
    const auto img = product_bijection(s.group, s.M, s.H);
    bool same = true;
    for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = 0; b < img.size(); ++b) same = same && img[built.mul(a, b)] == s.group.mul(img[a], img[b]);
    std::cout << "gamma(1,1) = " << s.data.M.elements[s.data.gamma[1][1]] << "\n";
    std::cout << "round trip: Cayley tables " << (same ? "equal" : "DIFFER") << " under (x,h) -> xh\n";
    const int code = finish("group_data", r, f, 0.0);
    return same ? code : 1;
}

int demo_kz4(const Flags& f) {
    const auto s = fixtures::kz4_bialgebra_split();
    const AxiomReport r = verify_bicocycle_conditions(s.data, f.options());
    const auto built = build_bicocycle_bialgebra(s.data);
    const auto moved = transport(built, product_map(s.G, s.M.inclusion, s.H.inclusion), s.G.algebra.space);
    const bool mul = moved.algebra.mul == s.G.algebra.mul, comul = moved.coalgebra.comul == s.G.coalgebra.comul;
    std::cout << "tensor equality under (x(x)h) -> xh: multiplication " << (mul ? "yes" : "NO") << ", comultiplication "
              << (comul ? "yes" : "NO") << "\n";
    const int code = finish("bicocycle_data", r, f, 0.0);
    return mul && comul ? code : 1;
}

int cmd_demo(const std::string& name, Flags f, bool bound_given) {
    if (name == "w1") {
        if (!bound_given) f.sum_bound = 30;
        return demo_w1(f);
    }
    if (name == "sl2") return demo_sl2(f);
    if (name == "z4") return demo_z4(f);
    if (name == "kz4") return demo_kz4(f);
    throw UsageError("unknown demo '" + name + "' (w1, sl2, z4, kz4)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicocycle sums, products and bialgebras: verify, build, factor"};
    app.require_subcommand(1);
    Flags f;
    std::string path, split, demo;
    auto common = [&](CLI::App* c) {
        c->add_option("--report", f.report, "write the JSON report here");
        c->add_option("--jobs", f.jobs, "worker threads for the sweeps")->check(CLI::PositiveNumber);
        c->add_option("--max-violations", f.max_violations, "violations kept per axiom");
        c->add_flag("--literal-axioms", f.literal, "also evaluate the printed variants");
        c->add_flag("--timing", f.timing, "record wall time in the report");
    };
    auto* verify = app.add_subcommand("verify", "check the axioms or conditions of a definition file");
    verify->add_option("file", path)->required();
    verify->add_option("--sum-bound", f.sum_bound, "index-sum bound for graded data");
    common(verify);
    auto* build = app.add_subcommand("build", "construct the object described by map data");
    build->add_option("file", path)->required();
    build->add_option("--out", f.out, "output file (stdout otherwise)");
    common(build);
    auto* factor = app.add_subcommand("factor", "recover map data from an object and a split");
    factor->add_option("object", path)->required();
    factor->add_option("split", split)->required();
    factor->add_option("--out", f.out, "output file (stdout otherwise)");
    common(factor);
    auto* demo_cmd = app.add_subcommand("demo", "run a named fixture end to end");
    demo_cmd->add_option("name", demo)->required();
    auto* bound_opt = demo_cmd->add_option("--sum-bound", f.sum_bound, "index-sum bound for w1");
    common(demo_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*verify) return cmd_verify(path, f);
        if (*build) return cmd_build(path, f);
        if (*factor) return cmd_factor(path, split, f);
        return cmd_demo(demo, f, bound_opt->count() > 0);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ShapeMismatch ||
                       e.kind() == ErrorKind::DimensionMismatch
                   ? 2
                   : 1;
    }
}
