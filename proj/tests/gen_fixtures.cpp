// Regenerates the committed fixture documents under fixtures/. Run manually
// from the repo root after changing instance schemas:
//   ./build/tests/gen_fixtures [output-root]

#include <filesystem>
#include <iostream>

#include "bicat/json_io.hpp"
#include "support/corpus.hpp"

using namespace bicat;

namespace {

void write(const std::string& root, const std::string& rel, const std::string& kind,
           const std::string& name, json payload) {
  InstanceDocument doc{kind, name, std::move(payload)};
  auto path = std::filesystem::path(root) / rel;
  std::filesystem::create_directories(path.parent_path());
  save_document(doc, path.string());
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string root = argc > 1 ? argv[1] : "fixtures";

  // --- rings ---------------------------------------------------------------
  write(root, "rings/f2.json", "algebra", "f2", algebra_to_json(scalar_algebra(2)));
  write(root, "rings/f3.json", "algebra", "f3", algebra_to_json(scalar_algebra(3)));
  write(root, "rings/f2xf2.json", "algebra", "f2xf2",
        algebra_to_json(direct_product(scalar_algebra(2), scalar_algebra(2))));
  write(root, "rings/m2f2.json", "algebra", "m2f2", algebra_to_json(matrix_algebra(2, 2)));
  write(root, "rings/dual2.json", "algebra", "dual2", algebra_to_json(dual_numbers(2)));

  write(root, "rings/col2_f2.json", "bimodule", "col2_f2",
        bimodule_to_json(column_module(2, 2)));
  write(root, "rings/row2_f2.json", "bimodule", "row2_f2", bimodule_to_json(row_module(2, 2)));
  write(root, "rings/unit_f2.json", "bimodule", "unit_f2",
        bimodule_to_json(unit_bimodule(scalar_algebra(2))));
  write(root, "rings/unit_m2f2.json", "bimodule", "unit_m2f2",
        bimodule_to_json(unit_bimodule(matrix_algebra(2, 2))));
  write(root, "rings/unit_dual2.json", "bimodule", "unit_dual2",
        bimodule_to_json(unit_bimodule(dual_numbers(2))));
  write(root, "rings/diag_f2_m2.json", "bimodule", "diag_f2_m2",
        bimodule_to_json(corpus::diagonal_embedding_bimodule(2)));

  // Constructed negative: e0 e0 = e1 with e1 e0 = e0 fails associativity.
  {
    json bad;
    bad["p"] = 2;
    bad["dim"] = 2;
    bad["structure"] = json::array({json::array({json::array({0, 1}), json::array({0, 0})}),
                                    json::array({json::array({1, 0}), json::array({0, 0})})});
    bad["unit"] = json::array({1, 0});
    write(root, "rings/bad_algebra.json", "algebra", "bad_algebra", bad);
  }

  // --- cstar ---------------------------------------------------------------
  write(root, "cstar/blocks23.json", "multimatrix", "blocks23",
        multimatrix_to_json(MultimatrixAlgebra::validated({2, 3})));
  {
    auto perm = MultiplicityBimodule::validated(MultimatrixAlgebra::validated({2, 3}),
                                                MultimatrixAlgebra::validated({3, 2}),
                                                {{0, 1}, {1, 0}});
    write(root, "cstar/corr_perm23.json", "correspondence", "corr_perm23",
          correspondence_to_json(perm));
  }
  {
    auto flat = MultiplicityBimodule::validated(MultimatrixAlgebra::validated({2}),
                                                MultimatrixAlgebra::validated({1, 1}), {{1, 1}});
    write(root, "cstar/corr_flat.json", "correspondence", "corr_flat",
          correspondence_to_json(flat));
  }
  {
    auto arrows = corpus::cstar_arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i)
      write(root, "cstar/arrow" + std::to_string(i) + ".json", "correspondence",
            "cstar_arrow" + std::to_string(i), correspondence_to_json(arrows[i]));
  }

  // --- groupoids -----------------------------------------------------------
  write(root, "groupoids/point.json", "groupoid", "point",
        groupoid_to_json(trivial_groupoid(1)));
  for (std::size_t n : {2u, 3u, 4u})
    write(root, "groupoids/pair" + std::to_string(n) + ".json", "groupoid",
          "pair" + std::to_string(n), groupoid_to_json(pair_groupoid(n)));
  write(root, "groupoids/z2.json", "groupoid", "z2",
        groupoid_to_json(group_groupoid(cyclic_group_table(2))));
  write(root, "groupoids/z3.json", "groupoid", "z3",
        groupoid_to_json(group_groupoid(cyclic_group_table(3))));
  write(root, "groupoids/z4.json", "groupoid", "z4",
        groupoid_to_json(group_groupoid(cyclic_group_table(4))));
  write(root, "groupoids/v4.json", "groupoid", "v4",
        groupoid_to_json(group_groupoid(klein_four_table())));
  write(root, "groupoids/z2_plus_point.json", "groupoid", "z2_plus_point",
        groupoid_to_json(disjoint_union(group_groupoid(cyclic_group_table(2)),
                                        trivial_groupoid(1))));

  write(root, "groupoids/classic.json", "bibundle", "classic",
        bibundle_to_json(corpus::classic_pair_point(2)));
  write(root, "groupoids/classic_op.json", "bibundle", "classic_op",
        bibundle_to_json(opposite_bibundle(corpus::classic_pair_point(2))));
  write(root, "groupoids/unit_pair2.json", "bibundle", "unit_pair2",
        bibundle_to_json(unit_bibundle(pair_groupoid(2))));
  {
    auto arrows = corpus::groupoid_arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i)
      write(root, "groupoids/arrow" + std::to_string(i) + ".json", "bibundle",
            "groupoid_arrow" + std::to_string(i), bibundle_to_json(arrows[i]));
  }

  // Constructed negative: unit arrow missing from the compose table.
  {
    json bad;
    bad["objects"] = 1;
    bad["source"] = json::array({0, 0});
    bad["target"] = json::array({0, 0});
    bad["compose"] = json::array({json::array({0, 1}), json::array({1, 1})});  // g*g = g
    bad["inverse"] = json::array({0, 1});
    bad["units"] = json::array({0});
    write(root, "groupoids/bad_groupoid.json", "groupoid", "bad_groupoid", bad);
  }

  // Ring coherence corpus as instance files.
  for (unsigned p : {2u, 3u}) {
    auto arrows = corpus::ring_arrows(p);
    for (std::size_t i = 0; i < arrows.size(); ++i)
      write(root, "rings/arrow_p" + std::to_string(p) + "_" + std::to_string(i) + ".json",
            "bimodule", "ring_arrow_p" + std::to_string(p) + "_" + std::to_string(i),
            bimodule_to_json(arrows[i]));
  }
  return 0;
}
