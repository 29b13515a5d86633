#pragma once

#include <memory>
#include <string>
#include <vector>

#include "schur/group.hpp"

namespace schur {

/// Bump when the membership below changes; echoed into batch reports.
inline constexpr int kCorpusVersion = 1;

struct NamedGroup {
  std::string name;
  std::shared_ptr<Group> group;
};

/// The documented built-in test family: Z_n (n <= 24), D_2m (2 <= m <= 15),
/// Q8, S3, S4, A4, A5, F20, F21, the extraspecial group of order 27,
/// Z3 x Z3 and S3 x S3.
std::vector<NamedGroup> builtin_corpus();

/// One corpus member by name, or nullptr.
std::shared_ptr<Group> corpus_group(const std::string& name);

}  // namespace schur
