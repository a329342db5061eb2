#pragma once

#include <string>

#include <json.hpp>

#include "csm/matroid.hpp"
#include "csm/polynomial.hpp"
#include "csm/polytope.hpp"
#include "csm/tropical_cycle.hpp"

namespace csm {

// "uniform:r,m", "graphic:Kn", "fano" or "nonfano". Throws ParseError.
Matroid parse_matroid_spec(const std::string& spec);

// A spec string, or an object {"size": m, "bases": [[…], …]}.
Matroid matroid_from_json(const nlohmann::json& doc);
nlohmann::json matroid_to_json(const Matroid& m);

// Reads a file holding a matroid document. Throws ParseError.
Matroid load_matroid_file(const std::string& path);
// {"parent": spec, "cells": [spec, …]}.
Subdivision subdivision_from_json(const nlohmann::json& doc);
Subdivision load_subdivision_file(const std::string& path);

// {"ambient": m, "dim": k, "entries": [{"chain": [[…], …], "weight": w}, …]},
// canonical: zero weights dropped, entries in chain order.
nlohmann::json cycle_to_json(const TropicalCycle& z);
TropicalCycle cycle_from_json(const nlohmann::json& doc);

nlohmann::json polynomial_to_json(const IntPolynomial& p);

}  // namespace csm
