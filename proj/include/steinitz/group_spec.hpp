#ifndef STEINITZ_GROUP_SPEC_HPP
#define STEINITZ_GROUP_SPEC_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "steinitz/grouptree.hpp"

namespace steinitz {

/*
 * Group spec documents:
 *   {"kind":"abelian","invariant_factors":[n1,...]}
 *   {"kind":"semidirect","h":{abelian},"g":{node},
 *    "action":{"on_generators":[{"g_element":[...],"matrix":[[...]]}]}}
 *   {"kind":"direct","left":{node},"right":{node}}
 * Throws invalid_input naming the offending JSON path.
 */
GroupTree parse_group_spec(std::string_view text, EnumerationLimits const & limits = {});
GroupTree load_group_spec(std::filesystem::path const & path, EnumerationLimits const & limits = {});

/* Writes the action on a greedy generating set of each acting group. */
std::string group_spec_text(GroupTree const & tree, int indent = 2);

/* Semidirect node from generator images, completed by closure. */
GroupTree semidirect_from_generators(AbelianGroup h, GroupTree g, GeneratorImages const & images,
                                     EnumerationLimits const & limits = {});

/* Named trees used by the CLI, the tests and the bundled spec files. */
struct CorpusEntry {
    std::string name;
    GroupTree tree;
};

std::vector<CorpusEntry> const & builtin_corpus();
/* throws invalid_input for unknown names */
GroupTree const & corpus_tree(std::string_view name);

} // namespace steinitz

#endif
