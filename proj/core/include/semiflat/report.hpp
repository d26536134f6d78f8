#pragma once

// JSON reports for the command line tool. Keys come out sorted (nlohmann's
// default object type); elements are written as labels. Nothing here
// records timings, so equal inputs give byte-identical reports.

#include <string>
#include <vector>

#include "semiflat/flatness.hpp"
#include "semiflat/homology.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/search.hpp"
#include "semiflat/suite.hpp"
#include "semiflat/tensor.hpp"
#include "semiflat/workspace.hpp"

namespace semiflat {

Json labels_json(const Semimodule& m, const std::vector<Elem>& xs);
Json mask_json(const Semimodule& m, const Mask& mask);
Json morphism_report(const Morphism& f);

// Generator pairs, box dimensions, relation and class counts, and the tau
// table as {"m": {"n": "class"}}.
Json tensor_report(const TensorPresentation& p);
Json takahashi_report(const TakahashiTensor& t);
Json reflection_report(const Quotient& q);
Json hom_report(const HomMonoid& h);

Json stage_report(const StageReport& s, const Morphism& f, const Morphism& g);
Json exactness_report(const ExactnessReport& r, const std::vector<Morphism>& maps);

Json flatness_report(const FlatnessVerdict& v, bool with_checks = true);
Json universe_report(const UniverseVerdict& v);
Json injectivity_report(const InjectivityReport& r, const ModulePtr& q,
                        const std::vector<ModulePtr>& family);

Json colimit_report(const DirectedSystem& sys, const Colimit& c);
Json inverse_limit_report(const InverseSystem& sys, const InverseLimit& l);

Json suite_row_json(const SuiteRow& row);
Json suite_report(const SuiteReport& r);

// One JSON-lines record per classified module.
Json classification_record(const Classification& c);
std::string search_jsonl(const SearchReport& r);
Json search_summary(const SearchReport& r);

// Plain-text rendering used by --pretty.
std::string pretty(const Json& report);

}  // namespace semiflat
