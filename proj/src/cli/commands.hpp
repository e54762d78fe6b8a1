#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "common.hpp"

namespace hbcnp::cli {

struct CnpArgs {
    std::string kernel;
    std::string base = "0";
    SamplingFlags sampling;
    std::optional<double> tol;
    std::size_t order = kDefaultOrder;
    std::string json_path;
    std::string matrix_csv;
    std::string matrix_json;
};

struct HbcheckArgs {
    std::string b;
    std::string family;
    std::string A;
    std::string B;
    std::string zeros;
    double R = 2.0;
    int k = 1;
    std::string witness = "auto";
    SamplingFlags sampling;
    std::size_t order = kDefaultOrder;
    std::string json_path;
};

struct PickArgs {
    std::string problem;
    std::string kernel;
    bool construct = false;
    std::optional<double> tol;
    std::size_t order = kDefaultOrder;
    std::string json_path;
};

struct GalleryArgs {
    std::string suite = "data/gallery.json";
    std::string json_path;
};

int cmd_cnp(const CnpArgs& a, std::ostream& out, std::ostream& err);
int cmd_hbcheck(const HbcheckArgs& a, std::ostream& out, std::ostream& err);
int cmd_pick(const PickArgs& a, std::ostream& out, std::ostream& err);
int cmd_gallery(const GalleryArgs& a, std::ostream& out, std::ostream& err);

/// Exit code for a PSD verdict: 0 PSD, 1 NOT_PSD, 2 INCONCLUSIVE.
int exit_for(PsdStatus s);
int exit_for(CriterionOutcome c);

}  // namespace hbcnp::cli
