#pragma once

#include <string>
#include <vector>

#include "einwarp/system.hpp"

namespace einwarp {

/// Built-in validation metric with its expected classification.
struct CatalogEntry {
    std::string id;
    std::string provenance;    ///< where the construction comes from
    std::string completeness;  ///< completeness note, quoted from the source claims
    WarpedAnsatz ansatz;
    GridSpec default_grid;
    DegeneracyClass expected_degeneracy = DegeneracyClass::Nondegenerate;
    bool expected_pass = true;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_find(const std::string& id);  ///< throws UnknownId

// Parametrized builders behind the catalog, exposed for dimension sweeps.
WarpedAnsatz make_ex1(int n, int m);
WarpedAnsatz make_ex2(int n, int m, double alpha = 1.0, double beta = 1.0, double mu = 1.0,
                      double rho = 1.0);
WarpedAnsatz make_ex4(int n, int m, double alpha = 1.0, double beta = 1.0, double rho = 0.0);
WarpedAnsatz make_ex5(int n, int m, double alpha = 1.0, double beta = 1.0, double rho = 0.0);
WarpedAnsatz make_incomplete1(int n, int m);  ///< needs m > 2
WarpedAnsatz make_exp_conformal(int n, int m);
WarpedAnsatz make_flat_product(int n, int m);

}  // namespace einwarp
