// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "fuzz_support.hpp"

#include "bicross/io.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace fuzz;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << "AC" << n << (n < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.detail
              << std::endl;
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BICROSS_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool same_table(const FiniteGroup& built, const FiniteGroup& G, const std::vector<std::size_t>& img) {
    for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = 0; b < img.size(); ++b)
            if (img[built.mul(a, b)] != G.mul(img[a], img[b])) return false;
    return true;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = graded_verify(fixtures::w1_graded(), 30);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto* br = r.find("bracket");
    std::size_t held = 0, tuples = 0;
    for (int k = 1; k <= 9; ++k) {
        const auto* e = r.find("A" + std::to_string(k));
        if (e != nullptr && e->holds && e->checked > 0) ++held;
        if (e != nullptr) tuples += e->checked;
    }
    std::ostringstream s;
    s << "bracket " << (br->holds ? "matches" : "differs") << " on " << br->checked << " pairs, " << held
      << "/9 axioms hold on " << tuples << " tuples, " << secs << " s";
    return {br->holds && held == 9 && secs < 30.0, s.str()};
}

Outcome ac2() {
    std::size_t splits = 0, skew = 0, bad = 0;
    for (const auto& item : fixtures::lie_corpus()) {
        if (item.splits.size() < 2) ++bad;
        for (const auto& pair : item.splits) {
            ++splits;
            const Matrix P = pair.adapted_matrix();
            bool coordinate = true;
            for (std::size_t c = 0; c < P.cols(); ++c) {
                std::size_t nz = 0;
                for (std::size_t r = 0; r < P.rows(); ++r) nz += P(r, c).is_zero() ? 0 : 1;
                coordinate = coordinate && nz == 1;
            }
            skew += coordinate ? 0 : 1;
            const auto d = decompose(item.algebra, pair);
            const LieAlgebra back = change_basis(build_bicocycle_sum(d), invert_matrix(P), item.algebra.space);
            if (back.bracket.coeffs != item.algebra.bracket.coeffs || !verify_matched_pair(d).all_hold()) ++bad;
        }
    }
    std::ostringstream s;
    s << splits << " splits over 4 algebras (" << skew << " non-coordinate), " << bad << " mismatches";
    return {bad == 0 && skew >= 4, s.str()};
}

Outcome ac3() {
    Rng rng(20261016);
    std::size_t disc = 0, pass = 0;
    for (std::size_t s = 0; s < 500; ++s) {
        const auto d = lie_sample(rng, s);
        const bool lie = verify_lie_axioms(build_bicocycle_sum(d)).all_hold();
        disc += lie != verify_matched_pair(d).all_hold() ? 1 : 0;
        pass += lie ? 1 : 0;
    }
    std::ostringstream s;
    s << "500 samples at 2+2, " << pass << " Lie algebras, " << disc << " discrepancies";
    return {disc == 0, s.str()};
}

Outcome ac4() {
    std::size_t found = 0, tables = 0, cocycle = 0, inverse = 0, formula = 0;
    for (const auto& G : {fixtures::cyclic(4), fixtures::cyclic(6), fixtures::s3(), fixtures::d4(), fixtures::q8()})
        for (std::size_t m = 1; m <= G.order(); ++m) {
            if (G.order() % m != 0) continue;
            for (const auto& p : search_factorizations(G, m)) {
                ++found;
                const auto d = factor_group(G, p.M, p.H);
                const auto built = build_bicocycle_group(d);
                tables += same_table(built, G, product_bijection(G, p.M, p.H)) ? 1 : 0;
                const auto r = verify_group_conditions(d);
                bool g = true;
                for (int k = 1; k <= 12; ++k) g = g && r.holds("G" + std::to_string(k));
                cocycle += g ? 1 : 0;
                inverse += r.holds("INV-R") && r.holds("INV-L") ? 1 : 0;
                bool ok = true;
                for (std::size_t x = 0; x < built.order() && ok; ++x) {
                    auto [m_part, h_part] = d.unpack(x);
                    const auto inv = inversion_formula(d, m_part, h_part);
                    ok = inv && built.mul(x, d.pack(inv->first, inv->second)) == built.identity;
                }
                formula += ok ? 1 : 0;
            }
        }
    std::ostringstream s;
    s << found << " factorizations of Z4, Z6, S3, D4, Q8; tables exact " << tables << ", G1-G12 " << cocycle
      << ", INV-R/L " << inverse << ", inversion formula " << formula;
    return {found > 0 && tables == found && cocycle == found && inverse == found && formula == found, s.str()};
}

Outcome ac5() {
    const auto base = fixtures::z4_group_split().data;
    std::vector<std::string> parts;
    bool pass = true;
    for (std::size_t v = 0; v < base.M.size(); ++v) {
        if (v == base.gamma[1][1]) continue;
        auto d = base;
        d.gamma[1][1] = v;
        const auto cond = verify_group_conditions(d);
        const auto G = bicocycle_product_table(d);
        const auto ax = verify_group_axioms(G);
        const bool cocycle_fails = !cond.holds("G11") || !cond.holds("G12");
        const bool assoc_fails = !ax.holds("associativity");
        std::size_t involutions = 0;
        for (std::size_t g = 0; g < G.order(); ++g) involutions += G.mul(g, g) == G.identity ? 1 : 0;
        std::ostringstream s;
        s << "gamma(1,1) " << base.M.elements[base.gamma[1][1]] << "->" << base.M.elements[v] << ": G11/G12 "
          << (cocycle_fails ? "fail" : "hold") << ", associativity " << (assoc_fails ? "fails" : "holds")
          << ", failing conditions [" << join(cond.failing_ids(), ",") << "]";
        if (ax.all_hold() && involutions == G.order()) s << ", table is Z2xZ2";
        if (cocycle_fails && assoc_fails) {
            const auto& w = ax.find("associativity")->violations.front();
            s << ", witness (" << join(w.tuple, ",") << ")";
        }
        parts.push_back(s.str());
        pass = pass && cocycle_fails && assoc_fails;
    }
    return {pass, join(parts, "; ")};
}

Outcome ac6() {
    const auto s = fixtures::kz4_bialgebra_split();
    const auto r = verify_bicocycle_conditions(s.data);
    std::size_t held = 0;
    for (int k = 1; k <= 14; ++k) held += r.holds("B" + std::to_string(k)) ? 1 : 0;
    const auto moved =
        transport(build_bicocycle_bialgebra(s.data), product_map(s.G, s.M.inclusion, s.H.inclusion), s.G.algebra.space);
    const bool mul = moved.algebra.mul == s.G.algebra.mul, comul = moved.coalgebra.comul == s.G.coalgebra.comul;
    std::ostringstream o;
    o << held << "/14 conditions hold; multiplication " << (mul ? "equal" : "differs") << ", comultiplication "
      << (comul ? "equal" : "differs");
    return {held == 14 && mul && comul, o.str()};
}

Outcome ac7() {
    Rng rng(20261016);
    std::size_t disc[3] = {0, 0, 0}, pass[3] = {0, 0, 0};
    for (std::size_t s = 0; s < 200; ++s) {
        const auto d = bicocycle_sample(rng, s);
        const bool bi = verify_bialgebra(build_bicocycle_bialgebra(d)).all_hold();
        disc[0] += bi != verify_bicocycle_conditions(d).all_hold() ? 1 : 0;
        pass[0] += bi ? 1 : 0;
    }
    for (std::size_t s = 0; s < 100; ++s) {
        const auto d = cdcp_sample(rng, s);
        const bool bi = verify_bialgebra(build_cdcp(d)).all_hold();
        disc[1] += bi != verify_cdcp_conditions(d).all_hold() ? 1 : 0;
        pass[1] += bi ? 1 : 0;
    }
    for (std::size_t s = 0; s < 100; ++s) {
        const auto d = cdcc_sample(rng, s);
        const bool bi = verify_bialgebra(build_cdcc(d)).all_hold();
        disc[2] += bi != verify_cdcc_conditions(d).all_hold() ? 1 : 0;
        pass[2] += bi ? 1 : 0;
    }
    std::ostringstream o;
    o << "bicocycle 200 (" << pass[0] << " bialgebras, " << disc[0] << " discrepancies), cdcp 100 (" << pass[1] << ", "
      << disc[1] << "), cdcc 100 (" << pass[2] << ", " << disc[2] << ")";
    return {disc[0] + disc[1] + disc[2] == 0, o.str()};
}

Outcome ac8() {
    const auto pipe = fixtures::dual_pipeline(fixtures::kz4_cdcp());
    const auto d = factorize_cdcc(pipe.dual, pipe.M, pipe.H, pipe.q, pipe.p);
    const auto r = verify_cdcc_conditions(d);
    std::size_t held = 0;
    for (int k = 1; k <= 11; ++k) held += r.holds("D" + std::to_string(k)) ? 1 : 0;
    const auto built = build_cdcc(d);
    const bool same =
        same_structure(transport(pipe.dual, coproduct_map(pipe.dual, pipe.q, pipe.p), built.algebra.space), built);
    std::vector<BialgebraTensor> all;
    for (const auto& G : {fixtures::cyclic(2), fixtures::cyclic(4), fixtures::z2xz3(), fixtures::s3(), fixtures::d4(),
                          fixtures::q8()})
        all.push_back(fixtures::group_bialgebra(G));
    all.push_back(pipe.built);
    all.push_back(pipe.dual);
    all.push_back(build_cdcp(fixtures::smash_z3_z2()));
    all.push_back(build_bicocycle_bialgebra(fixtures::kz4_bialgebra_split().data));
    std::size_t involutive = 0;
    for (const auto& B : all) {
        const auto DD = dualize(dualize(B));
        involutive += same_structure(DD, B) && DD.algebra.space == B.algebra.space ? 1 : 0;
    }
    std::ostringstream o;
    o << held << "/11 conditions hold; rebuilt dual " << (same ? "equal" : "differs") << "; involution exact on "
      << involutive << "/" << all.size() << " fixtures";
    return {held == 11 && same && involutive == all.size(), o.str()};
}

Outcome ac9() {
    std::vector<BicocycleData> cases = {
        fixtures::group_bialgebra_split(fixtures::cyclic(4), {0, 1}, {0, 2}).data,
        fixtures::group_bialgebra_split(fixtures::s3(), {0, 4, 5}, {0, 1}).data,
        fixtures::group_bialgebra_split(fixtures::q8(), {0, 2, 4, 6}, {0, 1}).data,
    };
    Rng rng(20261016);
    for (std::size_t s = 0; s < 100; ++s) {
        auto d = bicocycle_sample(rng, s);
        d.gamma = trivial_gamma(d.M, d.H);
        cases.push_back(d);
    }
    std::size_t equal = 0, trivial = 0, differ_unital = 0;
    for (const auto& d : cases) {
        trivial += d.gamma == trivial_gamma(d.M, d.H) ? 1 : 0;
        const bool eq = build_bicocycle_bialgebra(d).algebra.mul == build_cdcp(induced_cdcp(d)).algebra.mul;
        equal += eq ? 1 : 0;
        differ_unital += !eq && verify_bicocycle_conditions(d).holds("B1") ? 1 : 0;
    }
    std::ostringstream o;
    o << equal << "/" << cases.size() << " multiplication tensors equal (" << trivial << " with trivial gamma); "
      << cases.size() - equal - differ_unital << " of the differing cases violate the unit law x.e = x";
    return {equal == cases.size() && trivial == cases.size(), o.str()};
}

Outcome ac10() {
    std::size_t demos = 0;
    for (const char* name : {"w1", "sl2", "z4", "kz4"}) demos += run_cli(std::string("demo ") + name) == 0 ? 1 : 0;

    std::size_t files = 0, round = 0;
    for (const auto& e : fs::recursive_directory_iterator(BICROSS_DATA)) {
        if (e.path().extension() != ".json" || e.path().filename() == "expected.json") continue;
        ++files;
        const std::string text = slurp(e.path());
        round += io::serialize(io::parse(text)) == text ? 1 : 0;
    }

    const fs::path dir = fs::path(BICROSS_DATA) / "corrupt";
    const auto expected = io::json::parse(slurp(dir / "expected.json"));
    const fs::path tmp = fs::temp_directory_path() / "bicross-acceptance-report.json";
    std::size_t named = 0;
    for (const auto& [file, id] : expected.items()) {
        if (run_cli("verify " + (dir / file).string() + " --report " + tmp.string()) != 1) continue;
        const auto report = io::json::parse(slurp(tmp));
        for (const auto& entry : report["entries"])
            if (entry["id"] == id && entry["holds"] == false) ++named;
    }
    fs::remove(tmp);
    std::ostringstream o;
    o << demos << "/4 demos exit 0; " << round << "/" << files << " files round-trip; " << named << "/"
      << expected.size() << " corrupt files exit 1 naming their axiom";
    return {demos == 4 && round == files && files > 0 && named == expected.size(), o.str()};
}

}  // namespace

int main() {
    report(1, "W1 fidelity", ac1);
    report(2, "Lie round trip", ac2);
    report(3, "Lie equivalence fuzz", ac3);
    report(4, "group round trip", ac4);
    report(5, "group negative test", ac5);
    report(6, "k[Z4] bialgebra split", ac6);
    report(7, "quantum equivalence fuzz", ac7);
    report(8, "duality pipeline", ac8);
    report(9, "specialization collapse", ac9);
    report(10, "CLI contract", ac10);
    return failures == 0 ? 0 : 1;
}
