// Writes the JSON fixtures under data/ from the in-code fixtures.
// Usage: make_fixtures <data-dir>

#include "bicross/io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bicross;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& p, const io::Definition& d) {
    std::ofstream(p) << io::serialize(d);
    std::cout << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <data-dir>\n";
        return 2;
    }
    const fs::path dir(argv[1]), bad = dir / "corrupt";
    fs::create_directories(bad);

    const auto sl2 = fixtures::sl2_split();
    write(dir / "sl2.json", sl2.algebra);
    write(dir / "sl2_split.json", io::LieSplit{sl2.pair});
    write(dir / "sl2_data.json", sl2.data);
    write(dir / "w1.json", io::GradedSpec{"w1"});

    const auto z4 = fixtures::z4_group_split();
    write(dir / "z4.json", z4.group);
    write(dir / "z4_split.json", io::GroupSubsets{{"0", "2"}, {"0", "1"}});
    write(dir / "z4_data.json", z4.data);
    write(dir / "s3_data.json", fixtures::s3_split().data);

    const auto kz4 = fixtures::kz4_bialgebra_split();
    write(dir / "kz4.json", kz4.G);
    write(dir / "kz4_split.json", io::CoalgebraEmbeddings{kz4.M.coalgebra, kz4.H.coalgebra, kz4.M.inclusion, kz4.H.inclusion});
    write(dir / "kz4_data.json", kz4.data);

    const auto pipe = fixtures::dual_pipeline(fixtures::kz4_cdcp());
    write(dir / "kz4_cdcp.json", pipe.source);
    write(dir / "smash_z3_z2.json", fixtures::smash_z3_z2());
    write(dir / "dual_kz4.json", pipe.dual);
    write(dir / "dual_kz4_split.json", io::AlgebraProjections{pipe.M, pipe.H, pipe.q, pipe.p});
    write(dir / "dual_kz4_cdcc.json", fixtures::dual_kz4_cdcc());

    CoalgebraTensor C;
    C.space = BasedSpace({"e0", "e1"});
    C.comul = Tensor3(2, 2, 2);
    C.comul.at(0, 0, 0) = C.comul.at(1, 0, 1) = C.comul.at(1, 1, 0) = Rational(1);
    C.counit = Vector{Rational(1), Rational(0)};
    write(dir / "coalgebra2.json", C);

    // Regression inputs, each breaking one documented axiom.
    auto sl2_bad = sl2.algebra;
    sl2_bad.bracket.coeffs.at(0, 1, 2) = Rational(2);  // [e,f] = 2h, [f,e] left at -h
    write(bad / "sl2_ef.json", sl2_bad);

    auto sl2_theta = sl2.data;
    sl2_theta.theta.coeffs.at(0, 1, 0) = Rational(3);  // theta(e,f) = 3h, theta(f,e) left at -h
    write(bad / "sl2_theta.json", sl2_theta);

    auto z4_bad = z4.data;
    z4_bad.mu[1][1] = 1;  // 1*1 = 1 instead of 0
    write(bad / "z4_mu.json", z4_bad);

    auto kz4_bad = kz4.data;
    kz4_bad.theta.at(1, 1, 0) = Rational(0);  // theta(g2,g2) = g1 instead of g0
    kz4_bad.theta.at(1, 1, 1) = Rational(1);
    write(bad / "kz4_theta.json", kz4_bad);

    auto C_bad = C;
    C_bad.counit = Vector{Rational(1), Rational(1)};
    write(bad / "coalgebra2_counit.json", C_bad);

    auto dual_bad = fixtures::dual_kz4_cdcc();
    dual_bad.sigma.at(1, 0, 1) += Rational(1);
    write(bad / "dual_kz4_sigma.json", dual_bad);
    return 0;
}
