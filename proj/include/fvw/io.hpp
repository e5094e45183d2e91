#pragma once

#include <string>
#include "fvw/state.hpp"
#include "fvw/wigner.hpp"

namespace fvw {

// State files are JSON: {format_version, grid{n,p_max,hbar,mass,c},
// representation, psi_plus, psi_minus} with [re,im] pairs.
std::string state_to_json(const FVState& s);
FVState state_from_json(const std::string& text);
void save_state(const FVState& s, const std::string& path);
FVState load_state(const std::string& path);

// CSV with '#' metadata lines, then p,q,w_pp,w_mm,re_w_pm,im_w_pm rows.
void save_wigner_csv(const WignerComponents& w, const std::string& path,
                     const std::string& state_hash);
WignerComponents load_wigner_csv(const std::string& path);

std::string state_hash(const FVState& s); // FNV-1a over the sample bytes

std::string fmt17(double v); // %.17g, used for all emitted numbers

} // namespace fvw
