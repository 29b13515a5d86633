#include "schur/corpus.hpp"

namespace schur {

std::vector<NamedGroup> builtin_corpus() {
  std::vector<NamedGroup> out;
  auto add = [&out](const std::string& name, Group g) {
    out.push_back({name, std::make_shared<Group>(std::move(g))});
  };
  for (int n = 1; n <= 24; ++n) add("Z" + std::to_string(n), build_cyclic(n));
  for (int m = 2; m <= 15; ++m) add("D" + std::to_string(2 * m), build_dihedral(2 * m));
  add("Q8", build_quaternion());
  add("S3", build_symmetric(3));
  add("S4", build_symmetric(4));
  add("A4", build_alternating(4));
  add("A5", build_alternating(5));
  add("F20", build_frobenius(5, 4));
  add("F21", build_frobenius(7, 3));
  add("E27", build_extraspecial(3));
  {
    Group z3 = build_cyclic(3);
    add("Z3xZ3", direct_product(z3, z3));
  }
  {
    Group s3 = build_symmetric(3);
    add("S3xS3", direct_product(s3, s3));
  }
  return out;
}

std::shared_ptr<Group> corpus_group(const std::string& name) {
  for (auto& ng : builtin_corpus())
    if (ng.name == name) return ng.group;
  return nullptr;
}

}  // namespace schur
