#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nvk/harness.hpp"
#include "nvk/persistence.hpp"
#include "nvk/pop.hpp"

namespace nvk {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

// Complex-exchange file:
// {params:{N,lambda0,n}, orbits:[{label,action,index}],
//  differential:[{from,to,entry:"<scalar text>"}], graded:bool}
FilteredComplex complex_from_json(const Json& j);
Json complex_to_json(const FilteredComplex& c);

// Equivariant file: the base complex fields plus corrections:[{k,from,to,entry}].
EquivariantComplex equivariant_from_json(const Json& j);
Json equivariant_to_json(const EquivariantComplex& e);

// Pair-of-pants file:
// {squaring:[{orbit,squared}], values:[{x,y,image:[{orbit,hpow,entry}]}]}
PairOfPantsMap pop_from_json(const Json& j, const FilteredComplex& c, const EquivariantComplex& e);
Json pop_to_json(const PairOfPantsMap& pop, const FilteredComplex& c, const EquivariantComplex& e);

FilteredComplex complex_from_text(const std::string& text);
EquivariantComplex equivariant_from_text(const std::string& text);

Json validation_report_to_json(const ValidationReport& report);
Json barcode_to_json(const Barcode& barcode);
Json graph_to_json(const FloerGraph& graph);
Json axiom_report_to_json(const AxiomReport& report);
Json main_theorem_report_to_json(const MainTheoremReport& report, const Triple& triple);
Json tower_report_to_json(const TowerReport& report);
Json chain_probe_report_to_json(const ChainProbeReport& report);

std::string dump_json(const Json& j);  // stable two-space dump with newline

}  // namespace nvk
