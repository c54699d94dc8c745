// Regenerates the JSON files under fixtures/ from the library constructors.
// Usage: gen-fixtures <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "incalg/fixtures.hpp"
#include "incalg/json_io.hpp"

using namespace incalg;

namespace {

void emit(const std::filesystem::path& dir, const std::string& name, const json& j) {
    std::ofstream out(dir / name);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    const FieldSpec q{0};

    emit(dir, "dual_numbers.json", algebra_to_json(fixtures::dual_numbers(q)));
    emit(dir, "ringel_qform.json", algebra_to_json(fixtures::ringel_qform()));
    emit(dir, "a3_relation.json", algebra_to_json(fixtures::a3_with_relation(q)));

    emit(dir, "diamond_poset.json", poset_to_json(Poset::diamond()));
    emit(dir, "chain4_poset.json", poset_to_json(Poset::chain(4)));
    emit(dir, "diamond_incidence.json", algebra_to_json(incidence_algebra(Poset::diamond(), q)));
    emit(dir, "chain3_incidence_f5.json",
         algebra_to_json(incidence_algebra(Poset::chain(3), FieldSpec{5})));

    auto tetra = std::make_shared<const Poset>(fixtures::boundary_tetra());
    emit(dir, "boundary_tetra_poset.json", poset_to_json(*tetra));
    TwoCocycle c = fixtures::boundary_tetra_cocycle(tetra, Scalar(q, 2));
    emit(dir, "boundary_tetra_cocycle.json", cocycle_to_json(c));
    emit(dir, "boundary_tetra_twist.json", algebra_to_json(twisted_incidence(*tetra, q, c)));

    auto d = std::make_shared<const Poset>(Poset::diamond());
    emit(dir, "diamond_canonical_rep.json", rep_to_json(canonical_rep(d, q)));
    return 0;
}
