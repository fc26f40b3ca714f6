#pragma once

#include <string>
#include <vector>

#include "feec/forms.hpp"
#include "feec/ratmat.hpp"

namespace feec {

// Coordinate display names: aliases x,y,z,w for small dimension, x1,x2,...
// otherwise.  Ambient forms allow four alias letters, simplex forms three.
std::vector<std::string> variable_names(int count, bool simplex);

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string to_string(const SLocalPoly& f, const std::vector<std::string>& vars);

// Forms print in whichever of two readings has fewer terms: raw coordinate
// covectors, or with the trailing covector eliminated in favor of ds
// (dx_last = ds - dx_1 - ... ).  Every output re-parses to the same form.
std::string to_string(const DiffForm& a);
std::string to_string(const SimplexForm& a);

std::string to_string(const RatMat& m);

}  // namespace feec
