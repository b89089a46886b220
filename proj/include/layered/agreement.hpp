#pragma once

#include <string>
#include <vector>

#include "layered/corpus.hpp"

namespace layered {

/// Runs every library operation that has a brute-force twin on one instance
/// and returns one line per disagreement (empty when all agree).
std::vector<std::string> check_agreement(const CorpusInstance& instance);

}  // namespace layered
