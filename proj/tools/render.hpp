#ifndef STEINITZ_TOOLS_RENDER_HPP
#define STEINITZ_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "steinitz/classgroup.hpp"
#include "steinitz/cyclotomic.hpp"
#include "steinitz/grouptree.hpp"
#include "steinitz/realizable.hpp"

namespace steinitz::cli {

/* "C9 x C3", or "1" for the trivial group */
std::string structure_text(std::vector<i64> const & factors);
std::string forms_text(ClassGroup const & cg, std::vector<IdealClass> const & xs);

nlohmann::json form_json(QuadForm const & f);
nlohmann::json class_json(ClassGroup const & cg, IdealClass x);
nlohmann::json class_group_json(ClassGroup const & cg);
/* order, invariant_factors, generators, index */
nlohmann::json subgroup_json(ClassSubgroup const & s);
nlohmann::json certificate_json(WCertificate const & c);

/*
 * Trace document: the group, the reduced forms by canonical index, and
 * every trace entry with class indices into that list.
 */
nlohmann::json trace_json(ClassGroup const & cg, GroupTree const & tree, RtResult const & r);
std::vector<TraceEntry> trace_from_json(nlohmann::json const & doc);

} // namespace steinitz::cli

#endif
